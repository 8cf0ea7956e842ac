#pragma once

#include <cstddef>
#include <vector>

#include "nestrep/graph.hpp"

namespace nestrep {

enum class ComponentClass { Trivial, Cycle, StronglyTransitive };
enum class LoopMultiplicity { Zero, One, Infinite };

const char* to_string(ComponentClass c);
const char* to_string(LoopMultiplicity m);

/// The transitive quotient: strongly connected components ordered by their
/// first declared vertex.
struct Condensation {
  std::vector<std::vector<VertexIndex>> components;
  std::vector<std::size_t> component_of;  // indexed by vertex
  std::vector<ComponentClass> classes;
  std::vector<LoopMultiplicity> loop_multiplicity;
  std::vector<EdgeIndex> quotient_edges;  // edges joining distinct components
  /// reaches[a][b]: there is a path from component a to component b (reflexive).
  std::vector<std::vector<bool>> reaches;

  std::size_t size() const noexcept { return components.size(); }
  bool same_component(VertexIndex a, VertexIndex b) const {
    return component_of[a] == component_of[b];
  }
};

Condensation condensation(const DirectedGraph& g);

/// Every edge has both endpoints in the same strongly connected component.
bool is_transitive_in_components(const DirectedGraph& g);

/// Vertices reachable from `from` by a path (including `from` itself).
std::vector<bool> reachable_from(const DirectedGraph& g, VertexIndex from);

/// One strongly connected component spanning all vertices, not a cycle graph
/// and not the one-vertex graph without edges.
bool is_strongly_transitive(const DirectedGraph& g);

/// n vertices and n edges forming one directed cycle (n >= 1).
bool is_cycle_graph(const DirectedGraph& g);

struct PrimitiveRoot {
  Path root;
  std::size_t exponent;
};

/// Factor a cycle u = v^p with v primitive and p maximal. The rotation
/// stabiliser of u in the cyclic group of order |u| determines p.
PrimitiveRoot primitive_root(const DirectedGraph& g, const Path& u);

/// w = w_l v_l ... v_1 w_0 with each w_i inside one strongly connected
/// component and each v_i an edge between components. Segments are listed
/// in traversal order, so segments.front() is w_0.
struct PathDecomposition {
  std::vector<Path> segments;
  std::vector<EdgeIndex> crossings;  // crossings[i] joins segments[i] to segments[i + 1]

  std::size_t crossing_count() const noexcept { return crossings.size(); }
};

PathDecomposition decompose_path(const DirectedGraph& g, const Path& w);
PathDecomposition decompose_path(const DirectedGraph& g, const Condensation& c, const Path& w);
Path recompose(const DirectedGraph& g, const PathDecomposition& d);

/// Shortest path from `from` to `to`; among shortest paths the
/// lexicographically least in edge declaration order. Empty when unreachable.
std::optional<Path> shortest_path(const DirectedGraph& g, VertexIndex from, VertexIndex to);

/// A shortest path v with vw a cycle (v is the vertex s(w) when w already is one).
Path complete_to_cycle(const DirectedGraph& g, const Path& w);

/// Shortest cycle of positive length through x, if any.
std::optional<Path> shortest_cycle_through(const DirectedGraph& g, VertexIndex x);

DirectedGraph transpose(const DirectedGraph& g);

/// Hang a chain of `depth` fresh edges off every sink.
DirectedGraph add_tails(const DirectedGraph& g, std::size_t depth);

struct EnumerationLimits {
  std::size_t max_len = 12;
  std::size_t max_paths = 1'000'000;
};

/// All paths from `from` to `to` of length <= max_len, ordered by length and
/// then lexicographically in edge declaration order.
std::vector<Path> enumerate_paths(const DirectedGraph& g, VertexIndex from, VertexIndex to,
                                  std::size_t max_len, const EnumerationLimits& limits = {});

/// Cycles of length 1..max_len based at x, in the same order.
std::vector<Path> enumerate_cycles_through(const DirectedGraph& g, VertexIndex x,
                                           std::size_t max_len,
                                           const EnumerationLimits& limits = {});

/// Every path of length <= max_len: vertices first, then by length and lexicographically.
std::vector<Path> enumerate_all_paths(const DirectedGraph& g, std::size_t max_len,
                                      const EnumerationLimits& limits = {});

}  // namespace nestrep
