#include "nestrep/classify.hpp"

#include <algorithm>
#include <optional>

#include "nestrep/constructions.hpp"
#include "nestrep/errors.hpp"
#include "nestrep/separation.hpp"

namespace nestrep {

const char* to_string(NNestCase c) {
  switch (c) {
    case NNestCase::One: return "One";
    case NNestCase::Three: return "Three";
    case NNestCase::None: return "None";
  }
  return "?";
}

namespace {

// The members of `subset` in path order when the edges of g with both ends in
// `subset` form a single simple path through all of them.
std::optional<std::vector<VertexIndex>> simple_chain(const DirectedGraph& g,
                                                     const std::vector<bool>& subset) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> in(n, 0), out(n, 0);
  std::vector<std::optional<VertexIndex>> next(n);
  std::size_t members = 0, inner_edges = 0;
  for (VertexIndex v = 0; v < n; ++v) members += subset[v];
  for (const auto& e : g.edges()) {
    if (!subset[e.source] || !subset[e.range]) continue;
    ++inner_edges;
    ++out[e.source];
    ++in[e.range];
    next[e.source] = e.range;
  }
  if (members == 0 || inner_edges != members - 1) return std::nullopt;
  std::optional<VertexIndex> head;
  for (VertexIndex v = 0; v < n; ++v) {
    if (!subset[v]) continue;
    if (in[v] > 1 || out[v] > 1) return std::nullopt;
    if (in[v] == 0) {
      if (head) return std::nullopt;
      head = v;
    }
  }
  if (!head) return std::nullopt;
  std::vector<VertexIndex> order{*head};
  while (next[order.back()]) {
    order.push_back(*next[order.back()]);
    if (order.size() > members) return std::nullopt;
  }
  if (order.size() != members) return std::nullopt;
  return order;
}

bool loops_everywhere(const DirectedGraph& g, const std::vector<VertexIndex>& vs) {
  return std::all_of(vs.begin(), vs.end(), [&](VertexIndex v) { return g.has_loop(v); });
}

}  // namespace

FaithfulNestConditions check_faithful_nest_conditions(const DirectedGraph& g) {
  const auto c = condensation(g);
  FaithfulNestConditions out;

  out.totally_ordered = true;
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = a + 1; b < c.size(); ++b)
      if (!c.reaches[a][b] && !c.reaches[b][a]) out.totally_ordered = false;

  out.no_cycle_component =
      std::none_of(c.classes.begin(), c.classes.end(),
                   [](ComponentClass k) { return k == ComponentClass::Cycle; });

  std::vector<bool> trivial(g.vertex_count(), false);
  std::vector<std::size_t> trivial_components;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c.classes[k] == ComponentClass::Trivial) {
      trivial_components.push_back(k);
      trivial[c.components[k].front()] = true;
    }
  if (trivial_components.empty()) {
    out.trivial_chain = true;
    out.trivial_chain_vacuous = true;
    return out;
  }
  bool interval = true;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c.classes[k] == ComponentClass::Trivial) continue;
    bool below = false, above = false;
    for (auto t : trivial_components) {
      below = below || c.reaches[t][k];
      above = above || c.reaches[k][t];
    }
    if (below && above) interval = false;
  }
  out.trivial_chain = interval && simple_chain(g, trivial).has_value();
  return out;
}

NNestVerdict check_n_nest_case(const DirectedGraph& g) {
  NNestVerdict out;
  const auto c = condensation(g);
  std::vector<VertexIndex> all(g.vertex_count());
  for (VertexIndex v = 0; v < all.size(); ++v) all[v] = v;

  if (is_strongly_transitive(g) && loops_everywhere(g, all)) {
    out.kind = NNestCase::One;
    out.detail = "strongly transitive with a loop at every vertex";
    return out;
  }

  std::vector<std::size_t> nontrivial;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c.classes[k] != ComponentClass::Trivial) nontrivial.push_back(k);

  if (nontrivial.empty()) {
    if (simple_chain(g, std::vector<bool>(g.vertex_count(), true))) {
      out.requires_infinite = true;
      out.detail = "a finite chain; the matching pattern needs an infinite chain";
    } else {
      out.detail = "acyclic but not a single chain";
    }
    return out;
  }
  if (nontrivial.size() > 1) {
    out.detail = "more than one non-trivial component";
    return out;
  }

  const std::size_t core = nontrivial.front();
  const auto& v0 = c.components[core];
  if (c.classes[core] != ComponentClass::StronglyTransitive || !loops_everywhere(g, v0)) {
    out.detail = "the non-trivial component is not strongly transitive with loops everywhere";
    return out;
  }
  std::vector<bool> chain(g.vertex_count(), true);
  for (auto v : v0) chain[v] = false;
  const auto order = simple_chain(g, chain);
  if (!order) {
    out.detail = "the vertices outside the core do not form a single chain";
    return out;
  }
  bool feeds_head = false;
  for (const auto& e : g.edges()) {
    const bool from_core = !chain[e.source];
    const bool to_core = !chain[e.range];
    if (!from_core && to_core) {
      out.detail = "an edge returns from the chain to the core";
      return out;
    }
    if (from_core && !to_core && e.range == order->front()) feeds_head = true;
  }
  if (!feeds_head) {
    out.detail = "no edge enters the head of the chain from the core";
    return out;
  }
  out.kind = NNestCase::Three;
  out.detail = "strongly transitive core feeding a chain of " + std::to_string(order->size()) +
               (order->size() == 1 ? " vertex" : " vertices");
  return out;
}

bool ut_separating_condition(const DirectedGraph& g) { return cycle_vertices_have_loops(g); }

ClassificationReport classify(const DirectedGraph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("cannot classify a graph without vertices");
  ClassificationReport r;
  const auto c = condensation(g);

  r.stats.vertices = g.vertex_count();
  r.stats.edges = g.edge_count();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.is_sink(v)) r.stats.sinks.push_back(v);
    if (g.is_source(v)) r.stats.sources.push_back(v);
  }
  for (std::size_t k = 0; k < c.size(); ++k)
    r.stats.components.push_back({c.components[k], c.classes[k], c.loop_multiplicity[k]});

  r.semisimple = is_transitive_in_components(g);
  r.radical_generators = radical_edge_generators(g);
  r.strongly_semisimple = r.radical_generators.empty();
  r.ut_separating = ut_separating_condition(g);
  const bool trivial_graph = g.vertex_count() == 1 && g.edge_count() == 0;
  r.faithful_irreducible = trivial_graph || is_strongly_transitive(g);
  r.faithful_nest = check_faithful_nest_conditions(g);
  r.n_nest = check_n_nest_case(g);

  r.criteria = {
      {"semisimple", "every edge lies inside a strongly connected component"},
      {"strongly_semisimple", "no edge lies outside every cycle, so the radical has no generators"},
      {"radical_generators", "edges whose range does not reach their source"},
      {"ut_separating", "every vertex on a cycle carries a loop edge"},
      {"faithful_irreducible",
       "strongly transitive: one strongly connected component that is not a cycle"},
      {"faithful_nest",
       "components totally ordered by reachability, none a cycle, trivial components form "
       "one chain with a single edge between neighbours"},
      {"n_nest",
       "strongly transitive with loops everywhere, or such a core feeding a finite chain"},
  };
  return r;
}

}  // namespace nestrep
