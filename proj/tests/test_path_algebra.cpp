#include <doctest.h>

#include "nestrep/fock.hpp"
#include "nestrep/formal_element.hpp"
#include "support/oracles.hpp"

using namespace nestrep;

namespace {

// Convolution written out on edge words: pq exists when r(q) = s(p), and the
// product traverses q's edges first.
FormalElement naive_product(const FormalElement& a, const FormalElement& b) {
  const auto& g = a.graph();
  FormalElement out(g);
  for (const auto& [p, cp] : a.terms())
    for (const auto& [q, cq] : b.terms()) {
      if (q.range() != p.source()) continue;
      std::vector<EdgeIndex> word(q.edges().begin(), q.edges().end());
      word.insert(word.end(), p.edges().begin(), p.edges().end());
      const Path pq = word.empty() ? Path::vertex(q.source()) : Path::from_edges(g, word);
      out.add(pq, cp * cq);
    }
  return out;
}

double max_difference(const FormalElement& a, const FormalElement& b) {
  double worst = 0.0;
  for (const auto& [p, c] : a.terms()) worst = std::max(worst, std::abs(c - b.coefficient(p)));
  for (const auto& [p, c] : b.terms()) worst = std::max(worst, std::abs(c - a.coefficient(p)));
  return worst;
}

}  // namespace

TEST_CASE("products of vertices and edges") {
  const auto g = oracle::fixture("two_cycle");
  const auto x = g.vertex_at("x"), y = g.vertex_at("y");
  const auto px = FormalElement::vertex(g, x), py = FormalElement::vertex(g, y);
  CHECK((px * py).is_zero());
  CHECK(px * px == px);
  const auto le = FormalElement::path(g, parse_path(g, "e"));
  CHECK(le * px == le);
  CHECK(py * le == le);
  CHECK((px * le).is_zero());

  const auto p2 = oracle::fixture("p2");
  const auto a = FormalElement::path(p2, parse_path(p2, "a"));
  const auto b = FormalElement::path(p2, parse_path(p2, "b"));
  const auto sq = (a + b) * (a + b);
  CHECK(sq.size() == 4);
  for (const char* w : {"a,a", "a,b", "b,a", "b,b"}) CHECK(sq.coefficient(parse_path(p2, w)) == Scalar(1.0));

  const auto other = oracle::fixture("p2");
  CHECK_THROWS_AS(a * FormalElement::path(other, parse_path(other, "a")), GraphError);
}

TEST_CASE("zero coefficients are dropped") {
  const auto g = oracle::fixture("p2");
  auto a = FormalElement::path(g, parse_path(g, "a"), 2.0);
  a.add(parse_path(g, "a"), -2.0);
  CHECK(a.is_zero());
  CHECK(a.degree() == 0);
  CHECK(fourier_coefficient(a, parse_path(g, "a")) == Scalar(0.0));
  const auto three = FormalElement::path(g, parse_path(g, "a"), 3.0);
  CHECK(fourier_coefficient(three, parse_path(g, "a")) == Scalar(3.0));
  CHECK(fourier_coefficient(three, Path::vertex(0)) == Scalar(0.0));
}

TEST_CASE("random elements: product matches the naive convolution") {
  std::mt19937 rng(41);
  for (int t = 0; t < 60; ++t) {
    const auto g = oracle::random_graph(rng, 4, 7, 0.3);
    const auto a = oracle::random_element(g, rng, 20, 3);
    const auto b = oracle::random_element(g, rng, 20, 3);
    const auto c = oracle::random_element(g, rng, 20, 3);
    CHECK(max_difference(a * b, naive_product(a, b)) <= 1e-12);
    CHECK(max_difference((a * b) * c, a * (b * c)) <= 1e-12);
    CHECK(max_difference(a * (b + c), a * b + a * c) <= 1e-12);
    CHECK(max_difference((2.5 * a) * b, 2.5 * (a * b)) <= 1e-12);
  }
}

TEST_CASE("Cesaro means") {
  const auto g = oracle::fixture("p2");
  const auto px = FormalElement::vertex(g, 0);
  for (std::size_t k = 1; k < 5; ++k) CHECK(cesaro_mean(px, k) == px);
  const auto le = FormalElement::path(g, parse_path(g, "a"));
  const auto mean = cesaro_mean(px + le, 2);
  CHECK(mean.coefficient(Path::vertex(0)) == Scalar(1.0));
  CHECK(mean.coefficient(parse_path(g, "a")) == Scalar(0.5));
  CHECK(cesaro_mean(le, 1).is_zero());
  CHECK_THROWS_AS(cesaro_mean(le, 0), PreconditionError);

  // Coefficientwise convergence with the exact rate |p| / k.
  std::mt19937 rng(2);
  for (int t = 0; t < 30; ++t) {
    const auto h = oracle::random_graph(rng, 3, 5, 0.4);
    const auto a = oracle::random_element(h, rng, 10, 4);
    double top = 0.0;
    for (const auto& [p, c] : a.terms()) top = std::max(top, std::abs(c));
    const std::size_t k = 10 * std::max<std::size_t>(a.degree(), 1) + 1;
    const auto m = cesaro_mean(a, k);
    CHECK(max_difference(m, a) <= static_cast<double>(a.degree()) / static_cast<double>(k) * top + 1e-15);
  }
}

TEST_CASE("truncated Fock space") {
  DirectedGraph lone;
  lone.add_vertex("x");
  for (std::size_t d = 0; d < 4; ++d) {
    const auto f = truncated_left_regular(lone, d);
    CHECK(f.rep.dimension() == 1);
    CHECK(f.rep.vertex_image(0)(0, 0) == Scalar(1.0));
  }

  const auto g = oracle::fixture("p2");
  const auto f = truncated_left_regular(g, 1);
  REQUIRE(f.rep.dimension() == 3);
  const auto x = *f.basis.index_of(Path::vertex(0));
  const auto a = *f.basis.index_of(parse_path(g, "a"));
  const Vector xi = unit_vector(3, x);
  CHECK(matrices_equal(Matrix(f.rep.edge_image(g.edge_at("a")) * xi), Matrix(unit_vector(3, a))));

  // The basis is prefix closed.
  const auto mixed = oracle::fixture("mixed");
  const auto f3 = truncated_left_regular(mixed, 3);
  for (const auto& p : f3.basis.paths())
    if (p.length() > 0) CHECK(f3.basis.index_of(subpath(mixed, p, 0, p.length() - 1)).has_value());

  CHECK_THROWS_AS(truncated_left_regular(g, 12, 100), LimitError);
}

TEST_CASE("Fock relations hold away from the truncation boundary") {
  for (const char* name : {"p2", "mixed", "c3", "chain", "loop_rich"}) {
    const auto g = oracle::fixture(name);
    const std::size_t d = 3;
    const auto f = truncated_left_regular(g, d);
    const auto interior = f.basis.indices_up_to(d - 1);
    const auto r = check_relations(f.rep, interior);
    CHECK(r.partially_isometric());
    const auto full = check_relations(f.rep);
    CHECK(full.orthogonal_vertices_ok);
    CHECK(full.orthogonal_edge_ranges_ok);
    CHECK(satisfies_invariants(f.rep));
  }
}

TEST_CASE("random elements: coefficients from the Fock matrix") {
  std::mt19937 rng(31);
  for (int t = 0; t < 100; ++t) {
    const auto g = oracle::random_graph(rng, 4, 6, 0.3);
    const auto a = oracle::random_element(g, rng, 10, 3);
    const auto f = truncated_left_regular(g, a.degree());
    const Matrix m = evaluate(f.rep, a);
    for (const auto& [p, c] : a.terms())
      CHECK(std::abs(fourier_coefficient_from_matrix(f.basis, m, p) - c) <= 1e-12);
    for (const auto& p : f.basis.paths())
      CHECK(std::abs(fourier_coefficient_from_matrix(f.basis, m, p) - fourier_coefficient(a, p)) <= 1e-12);
  }
}
