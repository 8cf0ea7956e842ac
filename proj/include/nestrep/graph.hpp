#pragma once

// Finite directed multigraphs and their path semigroupoid.
//
// Paths are stored in traversal order: edges()[0] is traversed first. The
// algebraic product reads right to left, so compose(p, q) traverses q and
// then p.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nestrep/errors.hpp"

namespace nestrep {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct Edge {
  std::string name;
  VertexIndex source;
  VertexIndex range;
};

class DirectedGraph {
 public:
  DirectedGraph() = default;

  VertexIndex add_vertex(std::string name);
  EdgeIndex add_edge(std::string name, VertexIndex source, VertexIndex range);
  EdgeIndex add_edge(std::string name, std::string_view source, std::string_view range);

  std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& vertex_name(VertexIndex v) const { return vertex_names_.at(v); }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const std::string> vertex_names() const noexcept { return vertex_names_; }

  std::optional<VertexIndex> find_vertex(std::string_view name) const;
  std::optional<EdgeIndex> find_edge(std::string_view name) const;
  VertexIndex vertex_at(std::string_view name) const;
  EdgeIndex edge_at(std::string_view name) const;

  /// Edges with the given source, in declaration order.
  std::span<const EdgeIndex> out_edges(VertexIndex v) const { return out_.at(v); }
  /// Edges with the given range, in declaration order.
  std::span<const EdgeIndex> in_edges(VertexIndex v) const { return in_.at(v); }

  bool is_sink(VertexIndex v) const { return out_.at(v).empty(); }
  bool is_source(VertexIndex v) const { return in_.at(v).empty(); }
  bool is_loop(EdgeIndex e) const { return edges_.at(e).source == edges_.at(e).range; }
  bool has_loop(VertexIndex v) const;

  bool operator==(const DirectedGraph& other) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<std::vector<EdgeIndex>> in_;
  std::unordered_map<std::string, VertexIndex> vertex_lookup_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
};

/// An element of the path semigroupoid: a vertex (length 0) or a nonempty
/// composable edge sequence.
class Path {
 public:
  static Path vertex(VertexIndex x) { return Path(x, x, {}); }
  static Path edge(const DirectedGraph& g, EdgeIndex e);
  /// Validates composability; edges are given in traversal order.
  static Path from_edges(const DirectedGraph& g, std::vector<EdgeIndex> traversal);

  std::size_t length() const noexcept { return edges_.size(); }
  bool is_vertex() const noexcept { return edges_.empty(); }
  bool is_cycle() const noexcept { return !edges_.empty() && source_ == range_; }
  VertexIndex source() const noexcept { return source_; }
  VertexIndex range() const noexcept { return range_; }
  std::span<const EdgeIndex> edges() const noexcept { return edges_; }
  EdgeIndex operator[](std::size_t i) const { return edges_[i]; }

  /// Length first, then lexicographic on the traversal sequence, then source.
  std::strong_ordering operator<=>(const Path& other) const;
  bool operator==(const Path& other) const = default;

 private:
  friend Path compose(const Path& p, const Path& q);
  friend Path subpath(const DirectedGraph& g, const Path& p, std::size_t first,
                      std::size_t count);
  friend Path power(const Path& v, std::size_t n);

  Path(VertexIndex s, VertexIndex r, std::vector<EdgeIndex> e)
      : source_(s), range_(r), edges_(std::move(e)) {}

  VertexIndex source_;
  VertexIndex range_;
  std::vector<EdgeIndex> edges_;
};

/// The product pq: q is traversed first. Requires r(q) = s(p).
Path compose(const Path& p, const Path& q);

/// The sub-path made of traversal positions [first, first + count).
Path subpath(const DirectedGraph& g, const Path& p, std::size_t first, std::size_t count);

/// v^n; v must be a cycle when n > 1. power(v, 0) is the vertex s(v).
Path power(const Path& v, std::size_t n);

/// Human-readable form: the vertex name, or edge names in traversal order
/// joined by commas.
std::string to_string(const DirectedGraph& g, const Path& p);

/// Inverse of to_string; "@name" always denotes a vertex.
Path parse_path(const DirectedGraph& g, std::string_view spec);

}  // namespace nestrep
