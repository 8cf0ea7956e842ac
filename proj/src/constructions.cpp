#include "nestrep/constructions.hpp"

#include <cmath>
#include <numbers>

namespace nestrep {

namespace {

constexpr double kUnimodularTol = 1e-9;

void require_unimodular(Scalar lambda) {
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()) ||
      std::abs(std::abs(lambda) - 1.0) > kUnimodularTol)
    throw PreconditionError("parameter must have modulus one");
}

Eigen::Index at(std::size_t i) { return static_cast<Eigen::Index>(i); }

// Writes the cycle representation of u into the block starting at `offset`.
void place_cycle(FiniteRepresentation& rep, const Path& u, Scalar lambda, std::size_t offset) {
  const auto& g = rep.graph();
  const std::size_t k = u.length();
  for (std::size_t j = 0; j < k; ++j) {
    const EdgeIndex t = u[j];
    rep.vertex_image(g.edge(t).source)(at(offset + j), at(offset + j)) = 1.0;
    const Scalar wrap = j + 1 == k ? lambda : Scalar(1.0);
    rep.edge_image(t)(at(offset + (j + 1) % k), at(offset + j)) += 0.5 * wrap;
  }
}

}  // namespace

FiniteRepresentation phi_cycle(const DirectedGraph& g, const Path& u, Scalar lambda) {
  if (!u.is_cycle()) throw PreconditionError("phi_cycle needs a cycle of positive length");
  require_unimodular(lambda);
  FiniteRepresentation rep(g, u.length());
  place_cycle(rep, u, lambda, 0);
  return rep;
}

NestPlan plan_nest(const DirectedGraph& g, const Path& w) {
  NestPlan plan;
  plan.graph = &g;
  plan.path = w;
  const auto c = condensation(g);
  plan.decomposition = decompose_path(g, c, w);
  std::size_t offset = 0;
  for (const auto& segment : plan.decomposition.segments) {
    NestBlock block{segment, std::nullopt, offset, 1, 0, 0};
    if (!segment.is_vertex()) {
      const Path completion = complete_to_cycle(g, segment);
      auto root = primitive_root(g, compose(completion, segment));
      block.size = root.root.length();
      block.power = segment.length() / block.size;
      block.remainder = segment.length() % block.size;
      block.cycle = std::move(root.root);
    }
    offset += block.size;
    plan.nest.blocks.push_back(block.size);
    plan.blocks.push_back(std::move(block));
  }
  return plan;
}

NestRepresentation build_nest(const NestPlan& plan, std::span<const Scalar> lambda) {
  if (lambda.size() != plan.blocks.size())
    throw PreconditionError("expected " + std::to_string(plan.blocks.size()) +
                            " unimodular parameters, got " + std::to_string(lambda.size()));
  const auto& g = *plan.graph;
  FiniteRepresentation rep(g, plan.dimension());
  for (std::size_t i = 0; i < plan.blocks.size(); ++i) {
    require_unimodular(lambda[i]);
    const auto& block = plan.blocks[i];
    if (block.cycle) {
      place_cycle(rep, *block.cycle, lambda[i], block.offset);
    } else {
      rep.vertex_image(block.segment.source())(at(block.offset), at(block.offset)) = 1.0;
    }
  }
  const auto& crossings = plan.decomposition.crossings;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    rep.edge_image(crossings[i])(at(plan.blocks[i + 1].entry()), at(plan.blocks[i].exit())) += 0.5;
  }
  return NestRepresentation{std::move(rep), plan.nest, plan.blocks.front().entry(),
                            plan.blocks.back().exit()};
}

LoopChoice default_loop_choice(const DirectedGraph& g) {
  LoopChoice loops(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    for (auto e : g.out_edges(v))
      if (g.is_loop(e)) {
        loops[v] = e;
        break;
      }
  return loops;
}

bool cycle_vertices_have_loops(const DirectedGraph& g) {
  const auto c = condensation(g);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (c.classes[c.component_of[v]] != ComponentClass::Trivial && !g.has_loop(v)) return false;
  return true;
}

namespace {

// Unset entries fall back to the default loop; set entries must be loops at their vertex.
LoopChoice resolve_loops(const DirectedGraph& g, LoopChoice loops) {
  const auto defaults = default_loop_choice(g);
  if (loops.empty()) return defaults;
  if (loops.size() != g.vertex_count()) throw PreconditionError("loop choice has the wrong size");
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (!loops[v]) {
      loops[v] = defaults[v];
      continue;
    }
    const auto& e = g.edge(*loops[v]);
    if (e.source != v || e.range != v)
      throw PreconditionError("designated edge '" + e.name + "' is not a loop at '" +
                              g.vertex_name(v) + "'");
  }
  return loops;
}

}  // namespace

UpperPlan plan_upper(const DirectedGraph& g, const Path& w, LoopChoice loops) {
  if (!cycle_vertices_have_loops(g))
    throw PreconditionError("some vertex on a cycle carries no loop edge");
  loops = resolve_loops(g, std::move(loops));

  UpperPlan plan;
  plan.graph = &g;
  plan.skeleton = w;
  plan.loops = std::move(loops);
  plan.positions.push_back(w.source());
  for (std::size_t j = 0; j < w.length(); ++j) {
    const auto& e = g.edge(w[j]);
    if (plan.loops[e.source] == w[j])
      throw PreconditionError("path uses the designated loop '" + e.name + "'");
    plan.positions.push_back(e.range);
  }
  for (std::size_t j = 0; j < plan.positions.size(); ++j)
    if (plan.loops[plan.positions[j]]) plan.loop_positions.push_back(j);
  return plan;
}

FiniteRepresentation build_upper(const UpperPlan& plan, std::span<const Scalar> lambda,
                                 bool require_distinct) {
  if (lambda.size() != plan.loop_positions.size())
    throw PreconditionError("expected " + std::to_string(plan.loop_positions.size()) +
                            " unimodular parameters, got " + std::to_string(lambda.size()));
  for (auto l : lambda) require_unimodular(l);
  if (require_distinct) {
    for (std::size_t a = 0; a < lambda.size(); ++a)
      for (std::size_t b = a + 1; b < lambda.size(); ++b)
        if (std::abs(lambda[a] - lambda[b]) <= 1e-12)
          throw PreconditionError("unimodular parameters must be distinct");
  }
  const auto& g = *plan.graph;
  FiniteRepresentation rep(g, plan.dimension());
  for (std::size_t j = 0; j < plan.positions.size(); ++j)
    rep.vertex_image(plan.positions[j])(at(j), at(j)) = 1.0;
  for (std::size_t i = 0; i < plan.loop_positions.size(); ++i) {
    const std::size_t j = plan.loop_positions[i];
    const EdgeIndex f = *plan.loops[plan.positions[j]];
    rep.edge_image(f)(at(j), at(j)) = 0.5 * lambda[i];
  }
  for (std::size_t j = 0; j < plan.skeleton.length(); ++j)
    rep.edge_image(plan.skeleton[j])(at(j + 1), at(j)) += 0.5;
  return rep;
}

NNestTruncation n_nest_truncation(const DirectedGraph& g, std::size_t prefix_len,
                                  std::uint64_t seed, LoopChoice loops) {
  if (!is_strongly_transitive(g))
    throw PreconditionError("graph is not strongly transitive");
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (!g.has_loop(v))
      throw PreconditionError("vertex '" + g.vertex_name(v) + "' carries no loop edge");
  loops = resolve_loops(g, std::move(loops));

  const auto designated = [&](EdgeIndex e) { return loops[g.edge(e).source] == e; };

  // Layer 1: the free edges in declaration order; later layers extend by one free edge.
  std::vector<Path> layer;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (!designated(e)) layer.push_back(Path::edge(g, e));
  if (layer.empty()) throw PreconditionError("every edge is a designated loop");

  std::optional<Path> word;
  const EnumerationLimits limits;
  std::size_t generated = 0;
  while (!word || word->length() < prefix_len) {
    for (const auto& q : layer) {
      if (!word) {
        word = q;
      } else {
        const auto connector = shortest_path(g, word->range(), q.source());
        word = compose(q, compose(*connector, *word));
      }
      if (word->length() >= prefix_len) break;
    }
    if (word->length() >= prefix_len) break;
    std::vector<Path> next;
    for (const auto& p : layer)
      for (auto e : g.out_edges(p.range()))
        if (!designated(e)) {
          next.push_back(compose(Path::edge(g, e), p));
          if (++generated > limits.max_paths)
            throw LimitError("word schedule exceeds the path enumeration limit");
        }
    layer = std::move(next);
  }

  Path prefix = subpath(g, *word, 0, prefix_len);
  auto plan = plan_upper(g, prefix, loops);
  constexpr std::uint64_t kOrder = 1'000'003;
  if (plan.parameter_count() >= kOrder) throw LimitError("prefix too long for distinct parameters");
  std::vector<Scalar> lambda;
  for (std::size_t j = 0; j < plan.parameter_count(); ++j) {
    const double turn = static_cast<double>((seed + j) % kOrder) / static_cast<double>(kOrder);
    lambda.push_back(std::polar(1.0, 2.0 * std::numbers::pi * turn));
  }
  auto rep = build_upper(plan, lambda);
  return NNestTruncation{std::move(rep), std::move(prefix), std::move(lambda)};
}

}  // namespace nestrep
