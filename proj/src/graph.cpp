#include "nestrep/graph.hpp"

#include <algorithm>

namespace nestrep {

VertexIndex DirectedGraph::add_vertex(std::string name) {
  if (name.empty()) throw GraphError("empty vertex name");
  if (vertex_lookup_.contains(name)) throw GraphError("duplicate vertex '" + name + "'");
  const VertexIndex v = vertex_names_.size();
  vertex_lookup_.emplace(name, v);
  vertex_names_.push_back(std::move(name));
  out_.emplace_back();
  in_.emplace_back();
  return v;
}

EdgeIndex DirectedGraph::add_edge(std::string name, VertexIndex source, VertexIndex range) {
  if (name.empty()) throw GraphError("empty edge name");
  if (source >= vertex_count() || range >= vertex_count())
    throw GraphError("edge '" + name + "' refers to an undeclared vertex");
  if (edge_lookup_.contains(name)) throw GraphError("duplicate edge '" + name + "'");
  const EdgeIndex e = edges_.size();
  edge_lookup_.emplace(name, e);
  edges_.push_back(Edge{std::move(name), source, range});
  out_[source].push_back(e);
  in_[range].push_back(e);
  return e;
}

EdgeIndex DirectedGraph::add_edge(std::string name, std::string_view source,
                                  std::string_view range) {
  const auto s = find_vertex(source);
  const auto r = find_vertex(range);
  if (!s) throw GraphError("edge '" + name + "': unknown vertex '" + std::string(source) + "'");
  if (!r) throw GraphError("edge '" + name + "': unknown vertex '" + std::string(range) + "'");
  return add_edge(std::move(name), *s, *r);
}

std::optional<VertexIndex> DirectedGraph::find_vertex(std::string_view name) const {
  const auto it = vertex_lookup_.find(std::string(name));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> DirectedGraph::find_edge(std::string_view name) const {
  const auto it = edge_lookup_.find(std::string(name));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

VertexIndex DirectedGraph::vertex_at(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw GraphError("unknown vertex '" + std::string(name) + "'");
}

EdgeIndex DirectedGraph::edge_at(std::string_view name) const {
  if (auto e = find_edge(name)) return *e;
  throw GraphError("unknown edge '" + std::string(name) + "'");
}

bool DirectedGraph::has_loop(VertexIndex v) const {
  const auto& out = out_.at(v);
  return std::any_of(out.begin(), out.end(), [&](EdgeIndex e) { return edges_[e].range == v; });
}

bool DirectedGraph::operator==(const DirectedGraph& other) const {
  if (vertex_names_ != other.vertex_names_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& a = edges_[i];
    const auto& b = other.edges_[i];
    if (a.name != b.name || a.source != b.source || a.range != b.range) return false;
  }
  return true;
}

Path Path::edge(const DirectedGraph& g, EdgeIndex e) {
  const auto& ed = g.edge(e);
  return Path(ed.source, ed.range, {e});
}

Path Path::from_edges(const DirectedGraph& g, std::vector<EdgeIndex> traversal) {
  if (traversal.empty()) throw CompositionError("an edge path needs at least one edge");
  for (std::size_t i = 0; i < traversal.size(); ++i) {
    if (traversal[i] >= g.edge_count()) throw GraphError("edge index out of range");
    if (i > 0 && g.edge(traversal[i - 1]).range != g.edge(traversal[i]).source)
      throw CompositionError("edges '" + g.edge(traversal[i - 1]).name + "' then '" +
                             g.edge(traversal[i]).name + "' do not compose");
  }
  const VertexIndex s = g.edge(traversal.front()).source;
  const VertexIndex r = g.edge(traversal.back()).range;
  return Path(s, r, std::move(traversal));
}

std::strong_ordering Path::operator<=>(const Path& other) const {
  if (auto c = edges_.size() <=> other.edges_.size(); c != 0) return c;
  if (auto c = edges_ <=> other.edges_; c != 0) return c;
  return source_ <=> other.source_;
}

Path compose(const Path& p, const Path& q) {
  if (q.range() != p.source()) throw CompositionError("paths do not compose: r(q) != s(p)");
  if (q.is_vertex()) return p;
  if (p.is_vertex()) return q;
  std::vector<EdgeIndex> edges(q.edges_);
  edges.insert(edges.end(), p.edges_.begin(), p.edges_.end());
  return Path(q.source_, p.range_, std::move(edges));
}

Path subpath(const DirectedGraph& g, const Path& p, std::size_t first, std::size_t count) {
  if (first + count > p.length()) throw CompositionError("subpath out of range");
  if (count == 0) {
    const VertexIndex at = first == 0 ? p.source() : g.edge(p.edges_[first - 1]).range;
    return Path::vertex(at);
  }
  std::vector<EdgeIndex> edges(p.edges_.begin() + static_cast<std::ptrdiff_t>(first),
                               p.edges_.begin() + static_cast<std::ptrdiff_t>(first + count));
  const VertexIndex s = g.edge(edges.front()).source;
  const VertexIndex r = g.edge(edges.back()).range;
  return Path(s, r, std::move(edges));
}

Path power(const Path& v, std::size_t n) {
  if (n == 0) return Path::vertex(v.source());
  if (n > 1 && v.source() != v.range()) throw CompositionError("only cycles have powers");
  std::vector<EdgeIndex> edges;
  edges.reserve(v.length() * n);
  for (std::size_t i = 0; i < n; ++i) edges.insert(edges.end(), v.edges_.begin(), v.edges_.end());
  return Path(v.source_, v.range_, std::move(edges));
}

std::string to_string(const DirectedGraph& g, const Path& p) {
  if (p.is_vertex()) return g.vertex_name(p.source());
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i > 0) out += ',';
    out += g.edge(p[i]).name;
  }
  return out;
}

Path parse_path(const DirectedGraph& g, std::string_view spec) {
  if (spec.empty()) throw ParseError(0, "empty path");
  if (spec.front() == '@') return Path::vertex(g.vertex_at(spec.substr(1)));
  std::vector<EdgeIndex> edges;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const auto comma = spec.find(',', start);
    const auto token = spec.substr(start, comma == std::string_view::npos ? spec.npos : comma - start);
    if (token.empty()) throw ParseError(0, "empty edge name in path '" + std::string(spec) + "'");
    if (auto e = g.find_edge(token)) {
      edges.push_back(*e);
    } else if (auto v = g.find_vertex(token); v && edges.empty() && comma == std::string_view::npos) {
      return Path::vertex(*v);
    } else {
      throw ParseError(0, "unknown edge '" + std::string(token) + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Path::from_edges(g, std::move(edges));
}

}  // namespace nestrep
