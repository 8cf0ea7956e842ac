#pragma once

// Explicit finite-dimensional representations built from cycles and paths.
// All edge images carry a factor 1/2, so every construction is a strict row
// contraction.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nestrep/graph_analysis.hpp"
#include "nestrep/representation.hpp"

namespace nestrep {

/// Cycle representation on C^k for a cycle u = t_k ... t_1 (t_1 traversed
/// first) and a unimodular lambda:
///   x   -> sum_{s(t_j) = x} h_j h_j^*
///   e   -> 1/2 sum_{t_j = e} h_{j+1} h_j^*,   with h_{k+1} = lambda h_1.
/// Irreducible exactly when u is primitive.
FiniteRepresentation phi_cycle(const DirectedGraph& g, const Path& u, Scalar lambda);

/// One diagonal block of a block nest representation.
struct NestBlock {
  Path segment;               // w_i
  std::optional<Path> cycle;  // primitive u_i; empty for a one-dimensional vertex block
  std::size_t offset = 0;     // first basis index of the block
  std::size_t size = 1;
  std::size_t power = 0;      // n_i with w_i = p_i u_i^{n_i}
  std::size_t remainder = 0;  // |p_i|

  std::size_t entry() const noexcept { return offset; }
  std::size_t exit() const noexcept { return offset + remainder; }
};

/// Everything about the block nest representation of a path that does not
/// depend on the unimodular parameters.
struct NestPlan {
  const DirectedGraph* graph = nullptr;
  Path path = Path::vertex(0);
  PathDecomposition decomposition;
  std::vector<NestBlock> blocks;
  NestStructure nest;

  std::size_t parameter_count() const noexcept { return blocks.size(); }
  std::size_t dimension() const noexcept { return nest.dimension(); }
};

NestPlan plan_nest(const DirectedGraph& g, const Path& w);

struct NestRepresentation {
  FiniteRepresentation rep;
  NestStructure nest;
  std::size_t entry;  // basis index of h_0 (entry of the first block)
  std::size_t exit;   // basis index of k_l (exit of the last block)
};

/// Block lower triangular nest representation: cycle representations on the
/// diagonal blocks and crossing edge v_i sent to 1/2 h_i k_{i-1}^*.
NestRepresentation build_nest(const NestPlan& plan, std::span<const Scalar> lambda);

inline NestRepresentation rho_nest(const DirectedGraph& g, const Path& w,
                                   std::span<const Scalar> lambda) {
  return build_nest(plan_nest(g, w), lambda);
}

/// Designated loop per vertex (empty for loop-free vertices).
using LoopChoice = std::vector<std::optional<EdgeIndex>>;

/// The first declared loop at each vertex.
LoopChoice default_loop_choice(const DirectedGraph& g);

/// Every vertex lying on a cycle carries a loop edge.
bool cycle_vertices_have_loops(const DirectedGraph& g);

struct UpperPlan {
  const DirectedGraph* graph = nullptr;
  Path skeleton = Path::vertex(0);
  LoopChoice loops;
  std::vector<VertexIndex> positions;        // x_1 .. x_k
  std::vector<std::size_t> loop_positions;   // zero-based j with x_j carrying a loop

  std::size_t dimension() const noexcept { return positions.size(); }
  std::size_t parameter_count() const noexcept { return loop_positions.size(); }
};

/// Validates the loop condition on g, completes `loops` with defaults, and
/// checks that w avoids the designated loops.
UpperPlan plan_upper(const DirectedGraph& g, const Path& w, LoopChoice loops = {});

/// Lower triangular representation on C^{|w|+1}:
///   x   -> sum_{x_j = x} h_j h_j^*
///   f_x -> 1/2 sum_{x_j = x} lambda_j h_j h_j^*
///   e   -> 1/2 sum_{t_j = e} h_{j+1} h_j^*
/// lambda lists one value per loop position. Reverse the basis for the upper
/// triangular form.
FiniteRepresentation build_upper(const UpperPlan& plan, std::span<const Scalar> lambda,
                                 bool require_distinct = true);

inline FiniteRepresentation psi_upper(const DirectedGraph& g, const Path& w,
                                      std::span<const Scalar> lambda, LoopChoice loops = {}) {
  return build_upper(plan_upper(g, w, std::move(loops)), lambda);
}

struct NNestTruncation {
  FiniteRepresentation rep;
  Path word;
  std::vector<Scalar> lambda;
};

/// Finite corner of the upper triangular representation on a basis ordered
/// like N, for a strongly transitive graph with a loop at every vertex. The
/// word concatenates all paths avoiding designated loops (by length, then
/// lexicographically) joined by shortest connectors; parameters are distinct
/// roots of unity of prime order 1000003 rotated by the seed.
NNestTruncation n_nest_truncation(const DirectedGraph& g, std::size_t prefix_len,
                                  std::uint64_t seed, LoopChoice loops = {});

}  // namespace nestrep
