#pragma once

// Recovery of Fourier coefficients by sampling a matrix entry of a
// parametrised representation over a torus, and the separation procedures
// built on it.
//
// In every family the sampled entry is a trigonometric polynomial
//   g(lambda) = sum_m 2^{-|p_m|} a_{p_m} lambda^m
// whose coefficient at the frequency of w is 2^{-|w|} a_w. Sampling on a
// product of roots of unity of order above the degree recovers it exactly.

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nestrep/constructions.hpp"
#include "nestrep/formal_element.hpp"

namespace nestrep {

enum class Family { Irreducible, Nest, UpperTriangular };

const char* to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Product grid of roots of unity, optionally rotated per axis: coordinate j
/// of a node is exp(2 pi i (t_j / N_j + shift_j)).
class QuadratureGrid {
 public:
  explicit QuadratureGrid(std::vector<std::size_t> sizes, std::vector<double> shift = {});

  std::size_t axes() const noexcept { return sizes_.size(); }
  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
  std::size_t node_count() const noexcept { return count_; }

  /// Node number i; the last axis varies fastest.
  std::vector<Scalar> node(std::size_t i) const;

  /// Evaluates f at every node, in node order.
  std::vector<Scalar> sample(const std::function<Scalar(std::span<const Scalar>)>& f) const;

  /// Mean of samples[i] * conj(node_i)^m. Exact for the coefficient at m of a
  /// trigonometric polynomial whose frequencies differ from m by less than N_j
  /// on every axis.
  Scalar coefficient(std::span<const Scalar> samples, std::span<const std::size_t> m) const;

 private:
  std::vector<std::size_t> sizes_;
  std::vector<double> shift_;
  std::size_t count_ = 1;
};

/// The representation family, the matrix entry and the grid that recover a_w.
struct RecoveryPlan {
  Family family;
  Path path;
  NestStructure nest;
  std::vector<std::size_t> axes;       // N_j per parameter
  std::vector<std::size_t> frequency;  // the multi-index of w
  std::size_t entry = 0;               // g(lambda) = <rep(a) h_entry, h_exit>
  std::size_t exit = 0;
  std::function<FiniteRepresentation(std::span<const Scalar>)> build;

  /// 2^{|w|}.
  double scale() const;
  /// The sampled matrix entry at one parameter point.
  Scalar entry_value(const FormalElement& a, std::span<const Scalar> lambda) const;
};

/// `degree` bounds the path lengths in the support of the sampled element;
/// `oversample` multiplies every axis size.
RecoveryPlan plan_recovery(const DirectedGraph& g, const Path& w, Family family,
                           std::size_t degree, std::size_t oversample = 1);

Scalar recover(const RecoveryPlan& plan, const FormalElement& a);

/// Cycle representations; needs g transitive in components.
Scalar recover_irreducible(const FormalElement& a, const Path& w, std::size_t oversample = 1);
/// Block nest representations; any finite graph.
Scalar recover_nest(const FormalElement& a, const Path& w, std::size_t oversample = 1);
/// Upper triangular representations; needs a loop at every vertex on a cycle.
/// Designated loops are the first declared loop at each vertex.
Scalar recover_upper(const FormalElement& a, const Path& v, std::size_t oversample = 1);

struct SeparationWitness {
  Family family;
  Path path;                          // the supported path whose coefficient was recovered
  Scalar recovered;                   // a_path read back from the samples
  std::vector<Scalar> witness_point;  // lambda*
  Scalar entry_value;                 // g(a, lambda*)
  double value;                       // ||rep(a)|| at lambda*, at least |entry_value|
  FiniteRepresentation rep;
  NestStructure nest;
};

/// Finds a member of the family with rep(a) != 0. Throws ZeroElementError for
/// a = 0 and PreconditionError when g violates the family's condition.
SeparationWitness separate(const FormalElement& a, Family family);

/// Rebuilds the representation a witness refers to.
FiniteRepresentation witness_representation(const DirectedGraph& g, const SeparationWitness& w);

/// Edges lying on no cycle: r(e) does not reach s(e).
std::vector<EdgeIndex> radical_edge_generators(const DirectedGraph& g);

/// Every supported path w lies on no cycle, i.e. r(w) does not reach s(w).
bool is_in_radical(const FormalElement& a);

}  // namespace nestrep
