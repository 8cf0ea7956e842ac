#include "nestrep/graph_analysis.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace nestrep {

const char* to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::Trivial: return "Trivial";
    case ComponentClass::Cycle: return "Cycle";
    case ComponentClass::StronglyTransitive: return "StronglyTransitive";
  }
  return "?";
}

const char* to_string(LoopMultiplicity m) {
  switch (m) {
    case LoopMultiplicity::Zero: return "Zero";
    case LoopMultiplicity::One: return "One";
    case LoopMultiplicity::Infinite: return "Infinite";
  }
  return "?";
}

namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

// Iterative Tarjan. Returns a raw component id per vertex.
std::vector<std::size_t> tarjan(const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexIndex> stack;
  std::vector<std::pair<VertexIndex, std::size_t>> call;  // vertex, next out-edge position
  std::size_t counter = 0, next_comp = 0;

  for (VertexIndex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      const auto out = g.out_edges(v);
      if (pos < out.size()) {
        const VertexIndex w = g.edge(out[pos++]).range;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        VertexIndex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = next_comp;
        } while (w != v);
        ++next_comp;
      }
      const VertexIndex finished = v;
      call.pop_back();
      if (!call.empty()) {
        const VertexIndex parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  return comp;
}

}  // namespace

Condensation condensation(const DirectedGraph& g) {
  const auto raw = tarjan(g);
  Condensation c;
  const std::size_t n = g.vertex_count();
  c.component_of.assign(n, kUnvisited);

  // Renumber by first declared vertex.
  std::vector<std::size_t> renumber(n, kUnvisited);
  for (VertexIndex v = 0; v < n; ++v) {
    if (renumber[raw[v]] == kUnvisited) {
      renumber[raw[v]] = c.components.size();
      c.components.emplace_back();
    }
    c.component_of[v] = renumber[raw[v]];
    c.components[c.component_of[v]].push_back(v);
  }

  const std::size_t m = c.components.size();
  std::vector<std::size_t> internal_edges(m, 0);
  std::vector<std::vector<std::size_t>> succ(m);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto a = c.component_of[g.edge(e).source];
    const auto b = c.component_of[g.edge(e).range];
    if (a == b) {
      ++internal_edges[a];
    } else {
      c.quotient_edges.push_back(e);
      succ[a].push_back(b);
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    // A strongly connected graph whose edge count equals its vertex count has
    // out-degree one everywhere, hence is a single directed cycle.
    if (internal_edges[i] == 0) {
      c.classes.push_back(ComponentClass::Trivial);
      c.loop_multiplicity.push_back(LoopMultiplicity::Zero);
    } else if (internal_edges[i] == c.components[i].size()) {
      c.classes.push_back(ComponentClass::Cycle);
      c.loop_multiplicity.push_back(LoopMultiplicity::One);
    } else {
      c.classes.push_back(ComponentClass::StronglyTransitive);
      c.loop_multiplicity.push_back(LoopMultiplicity::Infinite);
    }
  }

  c.reaches.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    std::deque<std::size_t> queue{i};
    c.reaches[i][i] = true;
    while (!queue.empty()) {
      const auto a = queue.front();
      queue.pop_front();
      for (auto b : succ[a]) {
        if (!c.reaches[i][b]) {
          c.reaches[i][b] = true;
          queue.push_back(b);
        }
      }
    }
  }
  return c;
}

bool is_transitive_in_components(const DirectedGraph& g) {
  const auto c = condensation(g);
  return c.quotient_edges.empty();
}

std::vector<bool> reachable_from(const DirectedGraph& g, VertexIndex from) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexIndex> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto e : g.out_edges(v)) {
      const auto w = g.edge(e).range;
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

bool is_cycle_graph(const DirectedGraph& g) {
  if (g.vertex_count() == 0 || g.edge_count() != g.vertex_count()) return false;
  const auto c = condensation(g);
  return c.size() == 1 && c.classes[0] == ComponentClass::Cycle;
}

bool is_strongly_transitive(const DirectedGraph& g) {
  if (g.vertex_count() == 0) return false;
  const auto c = condensation(g);
  return c.size() == 1 && c.classes[0] == ComponentClass::StronglyTransitive;
}

PrimitiveRoot primitive_root(const DirectedGraph& g, const Path& u) {
  if (!u.is_cycle()) throw PreconditionError("primitive_root needs a cycle of positive length");
  const std::size_t n = u.length();
  // The smallest rotation fixing u generates the stabiliser; it divides n.
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool fixed = true;
    for (std::size_t i = 0; i < n && fixed; ++i) fixed = u[i] == u[(i + d) % n];
    if (fixed) return PrimitiveRoot{subpath(g, u, 0, d), n / d};
  }
  return PrimitiveRoot{u, 1};
}

PathDecomposition decompose_path(const DirectedGraph& g, const Path& w) {
  return decompose_path(g, condensation(g), w);
}

PathDecomposition decompose_path(const DirectedGraph& g, const Condensation& c, const Path& w) {
  PathDecomposition d;
  std::size_t start = 0;
  for (std::size_t i = 0; i < w.length(); ++i) {
    const auto& e = g.edge(w[i]);
    if (!c.same_component(e.source, e.range)) {
      d.segments.push_back(subpath(g, w, start, i - start));
      d.crossings.push_back(w[i]);
      start = i + 1;
    }
  }
  d.segments.push_back(subpath(g, w, start, w.length() - start));
  return d;
}

Path recompose(const DirectedGraph& g, const PathDecomposition& d) {
  Path out = d.segments.front();
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    out = compose(Path::edge(g, d.crossings[i]), out);
    out = compose(d.segments[i + 1], out);
  }
  return out;
}

std::optional<Path> shortest_path(const DirectedGraph& g, VertexIndex from, VertexIndex to) {
  if (from == to) return Path::vertex(from);
  // Distances to `to` along reversed edges, then a greedy walk choosing the
  // first declared edge that stays on a shortest route.
  std::vector<std::size_t> dist(g.vertex_count(), kUnvisited);
  std::deque<VertexIndex> queue{to};
  dist[to] = 0;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto e : g.in_edges(v)) {
      const auto s = g.edge(e).source;
      if (dist[s] == kUnvisited) {
        dist[s] = dist[v] + 1;
        queue.push_back(s);
      }
    }
  }
  if (dist[from] == kUnvisited) return std::nullopt;
  std::vector<EdgeIndex> edges;
  VertexIndex at = from;
  while (at != to) {
    for (auto e : g.out_edges(at)) {
      const auto r = g.edge(e).range;
      if (dist[r] + 1 == dist[at]) {
        edges.push_back(e);
        at = r;
        break;
      }
    }
  }
  return Path::from_edges(g, std::move(edges));
}

Path complete_to_cycle(const DirectedGraph& g, const Path& w) {
  auto v = shortest_path(g, w.range(), w.source());
  if (!v)
    throw PreconditionError("path " + to_string(g, w) +
                            " has endpoints in distinct components; no cycle completes it");
  return *v;
}

std::optional<Path> shortest_cycle_through(const DirectedGraph& g, VertexIndex x) {
  std::optional<Path> best;
  for (auto e : g.out_edges(x)) {
    const auto back = shortest_path(g, g.edge(e).range, x);
    if (!back) continue;
    Path cycle = compose(*back, Path::edge(g, e));
    if (!best || cycle < *best) best = std::move(cycle);
  }
  return best;
}

DirectedGraph transpose(const DirectedGraph& g) {
  DirectedGraph t;
  for (const auto& name : g.vertex_names()) t.add_vertex(name);
  for (const auto& e : g.edges()) t.add_edge(e.name, e.range, e.source);
  return t;
}

DirectedGraph add_tails(const DirectedGraph& g, std::size_t depth) {
  DirectedGraph h = g;
  const auto fresh = [](auto exists, std::string base) {
    while (exists(base)) base += '\'';
    return base;
  };
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_sink(v)) continue;
    VertexIndex previous = v;
    for (std::size_t i = 1; i <= depth; ++i) {
      const auto tag = g.vertex_name(v) + "~" + std::to_string(i);
      const auto vn = fresh([&](const std::string& s) { return h.find_vertex(s).has_value(); }, tag);
      const VertexIndex next = h.add_vertex(vn);
      const auto en = fresh([&](const std::string& s) { return h.find_edge(s).has_value(); },
                            "tail:" + tag);
      h.add_edge(en, previous, next);
      previous = next;
    }
  }
  return h;
}

namespace {

void check_limits(std::size_t max_len, const EnumerationLimits& limits) {
  if (max_len > limits.max_len)
    throw LimitError("path length bound " + std::to_string(max_len) + " exceeds limit " +
                     std::to_string(limits.max_len));
}

// Extends each path in `layer` by one edge; order is preserved lexicographically.
std::vector<Path> extend(const DirectedGraph& g, const std::vector<Path>& layer,
                         std::size_t& total, const EnumerationLimits& limits) {
  std::vector<Path> next;
  for (const auto& p : layer) {
    for (auto e : g.out_edges(p.range())) {
      next.push_back(compose(Path::edge(g, e), p));
      if (++total > limits.max_paths)
        throw LimitError("path enumeration exceeds " + std::to_string(limits.max_paths) + " paths");
    }
  }
  return next;
}

}  // namespace

std::vector<Path> enumerate_paths(const DirectedGraph& g, VertexIndex from, VertexIndex to,
                                  std::size_t max_len, const EnumerationLimits& limits) {
  check_limits(max_len, limits);
  std::vector<Path> out;
  std::vector<Path> layer{Path::vertex(from)};
  std::size_t total = 1;
  for (std::size_t len = 0;; ++len) {
    for (const auto& p : layer)
      if (p.range() == to) out.push_back(p);
    if (len == max_len) break;
    layer = extend(g, layer, total, limits);
    if (layer.empty()) break;
  }
  return out;
}

std::vector<Path> enumerate_cycles_through(const DirectedGraph& g, VertexIndex x,
                                           std::size_t max_len, const EnumerationLimits& limits) {
  auto paths = enumerate_paths(g, x, x, max_len, limits);
  std::erase_if(paths, [](const Path& p) { return p.is_vertex(); });
  return paths;
}

std::vector<Path> enumerate_all_paths(const DirectedGraph& g, std::size_t max_len,
                                      const EnumerationLimits& limits) {
  check_limits(max_len, limits);
  std::vector<Path> out;
  std::vector<Path> layer;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) layer.push_back(Path::vertex(v));
  std::size_t total = layer.size();
  out = layer;
  for (std::size_t len = 1; len <= max_len; ++len) {
    // Layer 1 must be in edge declaration order, not grouped by source vertex.
    if (len == 1) {
      layer.clear();
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) layer.push_back(Path::edge(g, e));
      total += layer.size();
      if (total > limits.max_paths)
        throw LimitError("path enumeration exceeds " + std::to_string(limits.max_paths) + " paths");
    } else {
      layer = extend(g, layer, total, limits);
    }
    if (layer.empty()) break;
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace nestrep
