#include "nestrep/separation.hpp"

#include <cmath>
#include <numbers>

namespace nestrep {

const char* to_string(Family f) {
  switch (f) {
    case Family::Irreducible: return "irreducible";
    case Family::Nest: return "nest";
    case Family::UpperTriangular: return "upper";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "irreducible") return Family::Irreducible;
  if (name == "nest") return Family::Nest;
  if (name == "upper") return Family::UpperTriangular;
  return std::nullopt;
}

QuadratureGrid::QuadratureGrid(std::vector<std::size_t> sizes, std::vector<double> shift)
    : sizes_(std::move(sizes)), shift_(std::move(shift)) {
  if (shift_.empty()) shift_.assign(sizes_.size(), 0.0);
  if (shift_.size() != sizes_.size()) throw ShapeError("grid shift has the wrong length");
  for (auto n : sizes_) {
    if (n == 0) throw ShapeError("grid axes need at least one node");
    if (count_ > (std::size_t{1} << 40) / n) throw LimitError("quadrature grid too large");
    count_ *= n;
  }
}

std::vector<Scalar> QuadratureGrid::node(std::size_t i) const {
  std::vector<Scalar> out(sizes_.size());
  for (std::size_t j = sizes_.size(); j-- > 0;) {
    const std::size_t t = i % sizes_[j];
    i /= sizes_[j];
    const double turn = static_cast<double>(t) / static_cast<double>(sizes_[j]) + shift_[j];
    out[j] = std::polar(1.0, 2.0 * std::numbers::pi * turn);
  }
  return out;
}

std::vector<Scalar> QuadratureGrid::sample(
    const std::function<Scalar(std::span<const Scalar>)>& f) const {
  std::vector<Scalar> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < count_; ++i) out.push_back(f(node(i)));
  return out;
}

Scalar QuadratureGrid::coefficient(std::span<const Scalar> samples,
                                   std::span<const std::size_t> m) const {
  if (samples.size() != count_ || m.size() != sizes_.size())
    throw ShapeError("samples do not match the grid");
  Scalar total = 0.0;
  for (std::size_t i = 0; i < count_; ++i) {
    Scalar weight = 1.0;
    const auto lambda = node(i);
    for (std::size_t j = 0; j < lambda.size(); ++j)
      weight *= std::pow(std::conj(lambda[j]), static_cast<int>(m[j]));
    total += samples[i] * weight;
  }
  return total / static_cast<double>(count_);
}

double RecoveryPlan::scale() const { return std::ldexp(1.0, static_cast<int>(path.length())); }

Scalar RecoveryPlan::entry_value(const FormalElement& a, std::span<const Scalar> lambda) const {
  const auto rep = build(lambda);
  const Vector in = unit_vector(rep.dimension(), entry);
  return apply(rep, a, in)(static_cast<Eigen::Index>(exit));
}

namespace {

std::size_t floor_div_or_zero(std::size_t num, std::size_t excess, std::size_t k) {
  return num >= excess ? (num - excess) / k : 0;
}

RecoveryPlan plan_irreducible(const DirectedGraph& g, const Path& w, std::size_t degree) {
  if (!is_transitive_in_components(g))
    throw PreconditionError("graph is not transitive in components");
  RecoveryPlan plan{Family::Irreducible, w, {}, {}, {}, 0, 0, {}};
  std::optional<Path> cycle;
  std::size_t power = 0;
  if (w.is_vertex()) {
    cycle = shortest_cycle_through(g, w.source());
  } else {
    cycle = primitive_root(g, compose(complete_to_cycle(g, w), w)).root;
    power = w.length() / cycle->length();
    plan.exit = w.length() % cycle->length();
  }
  if (!cycle) {
    // An isolated vertex: the character sending x to 1 and everything else to 0.
    const VertexIndex x = w.source();
    plan.nest.blocks = {1};
    plan.axes = {1};
    plan.frequency = {0};
    plan.build = [&g, x](std::span<const Scalar>) {
      FiniteRepresentation rep(g, 1);
      rep.vertex_image(x)(0, 0) = 1.0;
      return rep;
    };
    return plan;
  }
  const std::size_t k = cycle->length();
  plan.nest.blocks = {k};
  plan.axes = {1 + std::max(power, floor_div_or_zero(degree, plan.exit, k))};
  plan.frequency = {power};
  plan.build = [&g, u = *cycle](std::span<const Scalar> lambda) {
    return phi_cycle(g, u, lambda[0]);
  };
  return plan;
}

RecoveryPlan plan_nest_recovery(const DirectedGraph& g, const Path& w, std::size_t degree) {
  auto nest = plan_nest(g, w);
  RecoveryPlan plan{Family::Nest, w, nest.nest, {}, {}, nest.blocks.front().entry(),
                    nest.blocks.back().exit(), {}};
  for (const auto& block : nest.blocks) {
    plan.frequency.push_back(block.power);
    plan.axes.push_back(block.cycle ? 1 + block.power + floor_div_or_zero(degree, w.length(), block.size)
                                    : 1);
  }
  plan.build = [nest = std::move(nest)](std::span<const Scalar> lambda) {
    return build_nest(nest, lambda).rep;
  };
  return plan;
}

RecoveryPlan plan_upper_recovery(const DirectedGraph& g, const Path& v, std::size_t degree) {
  const auto loops = default_loop_choice(g);
  std::vector<EdgeIndex> skeleton;
  std::vector<std::size_t> count_at(v.length() + 1, 0);
  for (std::size_t j = 0; j < v.length(); ++j) {
    const EdgeIndex e = v[j];
    if (loops[g.edge(e).source] == e)
      ++count_at[skeleton.size()];
    else
      skeleton.push_back(e);
  }
  const Path w = skeleton.empty() ? Path::vertex(v.source()) : Path::from_edges(g, skeleton);
  auto upper = plan_upper(g, w, loops);

  RecoveryPlan plan{Family::UpperTriangular, v, {}, {}, {}, 0, w.length(), {}};
  plan.nest.blocks.assign(upper.dimension(), 1);
  const std::size_t spare = floor_div_or_zero(degree, w.length(), 1);
  for (auto j : upper.loop_positions) {
    plan.frequency.push_back(count_at[j]);
    plan.axes.push_back(1 + std::max(count_at[j], spare));
  }
  plan.build = [upper = std::move(upper)](std::span<const Scalar> lambda) {
    return build_upper(upper, lambda, /*require_distinct=*/false);
  };
  return plan;
}

}  // namespace

RecoveryPlan plan_recovery(const DirectedGraph& g, const Path& w, Family family,
                           std::size_t degree, std::size_t oversample) {
  if (oversample == 0) throw PreconditionError("oversampling factor must be positive");
  RecoveryPlan plan = [&] {
    switch (family) {
      case Family::Irreducible: return plan_irreducible(g, w, degree);
      case Family::Nest: return plan_nest_recovery(g, w, degree);
      case Family::UpperTriangular: return plan_upper_recovery(g, w, degree);
    }
    throw PreconditionError("unknown representation family");
  }();
  for (auto& n : plan.axes) n *= oversample;
  return plan;
}

Scalar recover(const RecoveryPlan& plan, const FormalElement& a) {
  const QuadratureGrid grid(plan.axes);
  const auto samples =
      grid.sample([&](std::span<const Scalar> lambda) { return plan.entry_value(a, lambda); });
  return plan.scale() * grid.coefficient(samples, plan.frequency);
}

Scalar recover_irreducible(const FormalElement& a, const Path& w, std::size_t oversample) {
  return recover(plan_recovery(a.graph(), w, Family::Irreducible, a.degree(), oversample), a);
}

Scalar recover_nest(const FormalElement& a, const Path& w, std::size_t oversample) {
  return recover(plan_recovery(a.graph(), w, Family::Nest, a.degree(), oversample), a);
}

Scalar recover_upper(const FormalElement& a, const Path& v, std::size_t oversample) {
  return recover(plan_recovery(a.graph(), v, Family::UpperTriangular, a.degree(), oversample), a);
}

SeparationWitness separate(const FormalElement& a, Family family) {
  if (a.is_zero()) throw ZeroElementError("the zero element is annihilated by every representation");
  const auto& g = a.graph();

  // The largest coefficient, earliest in path order on ties.
  const Path* chosen = nullptr;
  double best = -1.0;
  for (const auto& [p, c] : a.terms())
    if (std::abs(c) > best) {
      best = std::abs(c);
      chosen = &p;
    }

  const auto plan = plan_recovery(g, *chosen, family, a.degree());
  const Scalar recovered = recover(plan, a);

  // A rotated square grid: still exact for the polynomial, and its nodes have
  // pairwise distinct coordinates.
  std::size_t n = 1;
  for (auto s : plan.axes) n = std::max(n, s);
  const std::size_t axes = plan.axes.size();
  std::vector<double> shift(axes);
  for (std::size_t j = 0; j < axes; ++j)
    shift[j] = static_cast<double>(j) / static_cast<double>((axes + 1) * n);
  const QuadratureGrid search(std::vector<std::size_t>(axes, n), shift);

  std::size_t arg = 0;
  double top = -1.0;
  Scalar top_value = 0.0;
  for (std::size_t i = 0; i < search.node_count(); ++i) {
    const Scalar v = plan.entry_value(a, search.node(i));
    if (std::abs(v) > top) {
      top = std::abs(v);
      top_value = v;
      arg = i;
    }
  }
  auto point = search.node(arg);
  auto rep = plan.build(point);
  const double value = operator_norm(evaluate(rep, a));
  return SeparationWitness{family,    *chosen, recovered,      std::move(point),
                           top_value, value,   std::move(rep), plan.nest};
}

FiniteRepresentation witness_representation(const DirectedGraph& g, const SeparationWitness& w) {
  return plan_recovery(g, w.path, w.family, 0).build(w.witness_point);
}

std::vector<EdgeIndex> radical_edge_generators(const DirectedGraph& g) {
  const auto c = condensation(g);
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    if (!c.same_component(edge.source, edge.range)) out.push_back(e);
  }
  return out;
}

bool is_in_radical(const FormalElement& a) {
  const auto c = condensation(a.graph());
  for (const auto& [p, coeff] : a.terms()) {
    (void)coeff;
    if (c.reaches[c.component_of[p.range()]][c.component_of[p.source()]]) return false;
  }
  return true;
}

}  // namespace nestrep
