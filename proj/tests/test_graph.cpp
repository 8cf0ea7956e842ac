#include <doctest.h>

#include "nestrep/graph_analysis.hpp"
#include "support/oracles.hpp"

using namespace nestrep;

TEST_CASE("paths compose right to left") {
  const auto g = oracle::fixture("c3");
  const auto e1 = Path::edge(g, g.edge_at("e1"));
  const auto e2 = Path::edge(g, g.edge_at("e2"));
  const auto x1 = Path::vertex(g.vertex_at("x1"));

  CHECK(compose(x1, x1) == x1);
  const auto p = compose(e2, e1);
  CHECK(p.length() == 2);
  CHECK(p.source() == g.vertex_at("x1"));
  CHECK(p.range() == g.vertex_at("x3"));
  CHECK(to_string(g, p) == "e1,e2");
  CHECK_THROWS_AS(compose(e1, e2), CompositionError);
  CHECK(compose(Path::vertex(g.vertex_at("x2")), e1) == e1);
  CHECK(compose(e1, x1) == e1);
}

TEST_CASE("path specs parse in traversal order") {
  const auto g = oracle::fixture("c3");
  const auto p = parse_path(g, "e1,e2,e3");
  CHECK(p.is_cycle());
  CHECK(p[0] == g.edge_at("e1"));
  CHECK(parse_path(g, "@x2").is_vertex());
  CHECK(parse_path(g, to_string(g, p)) == p);
  CHECK_THROWS(parse_path(g, "e2,e1"));
  CHECK_THROWS(parse_path(g, "nope"));
}

TEST_CASE("condensation classes on small graphs") {
  DirectedGraph lone;
  lone.add_vertex("x");
  auto c = condensation(lone);
  REQUIRE(c.size() == 1);
  CHECK(c.classes[0] == ComponentClass::Trivial);
  CHECK(c.loop_multiplicity[0] == LoopMultiplicity::Zero);

  c = condensation(oracle::fixture("c3"));
  REQUIRE(c.size() == 1);
  CHECK(c.classes[0] == ComponentClass::Cycle);
  CHECK(c.loop_multiplicity[0] == LoopMultiplicity::One);

  c = condensation(oracle::fixture("p2"));
  REQUIRE(c.size() == 1);
  CHECK(c.classes[0] == ComponentClass::StronglyTransitive);
  CHECK(c.loop_multiplicity[0] == LoopMultiplicity::Infinite);

  DirectedGraph one_loop;
  one_loop.add_vertex("x");
  one_loop.add_edge("e", "x", "x");
  CHECK(condensation(one_loop).classes[0] == ComponentClass::Cycle);
  CHECK(is_cycle_graph(one_loop));
  CHECK_FALSE(is_strongly_transitive(one_loop));
}

TEST_CASE("two loops give more than one primitive cycle through the vertex") {
  // Infinite loop multiplicity: count primitive cycles up to length 3.
  const auto g = oracle::fixture("p2");
  std::size_t primitive = 0;
  for (const auto& u : enumerate_cycles_through(g, 0, 3)) {
    std::vector<EdgeIndex> word(u.edges().begin(), u.edges().end());
    // Cycles are counted up to rotation: keep the least rotation only.
    bool least = true;
    for (std::size_t r = 1; r < word.size(); ++r) {
      std::vector<EdgeIndex> rot(word.begin() + static_cast<long>(r), word.end());
      rot.insert(rot.end(), word.begin(), word.begin() + static_cast<long>(r));
      if (rot < word) least = false;
    }
    if (least && oracle::word_period(word).second == 1) ++primitive;
  }
  CHECK(primitive == 5);  // a, b, ab, aab, abb up to rotation
}

TEST_CASE("transitivity in components") {
  CHECK(is_transitive_in_components(oracle::fixture("c3")));
  CHECK_FALSE(is_transitive_in_components(oracle::fixture("chain")));
  CHECK(is_transitive_in_components(oracle::fixture("disjoint")));
}

TEST_CASE("primitive roots") {
  const auto g = oracle::fixture("p2");
  const auto a = g.edge_at("a"), b = g.edge_at("b");

  auto r = primitive_root(g, Path::edge(g, a));
  CHECK(r.exponent == 1);
  r = primitive_root(g, Path::from_edges(g, {a, a, a}));
  CHECK(r.exponent == 3);
  CHECK(r.root == Path::edge(g, a));
  r = primitive_root(g, Path::from_edges(g, {b, a, b, a}));
  CHECK(r.exponent == 2);
  CHECK(r.root == Path::from_edges(g, {b, a}));
  CHECK_THROWS_AS(primitive_root(g, Path::vertex(0)), PreconditionError);
  const auto chain = oracle::fixture("chain");
  CHECK_THROWS_AS(primitive_root(chain, Path::edge(chain, 0)), PreconditionError);
}

TEST_CASE("path decomposition") {
  const auto g = oracle::fixture("mixed");
  auto d = decompose_path(g, Path::vertex(g.vertex_at("x")));
  CHECK(d.segments.size() == 1);
  CHECK(d.crossings.empty());

  const auto inside = parse_path(g, "a,c,d");
  d = decompose_path(g, inside);
  REQUIRE(d.segments.size() == 1);
  CHECK(d.segments[0] == inside);

  // A cycle in {x,y} followed by the crossing v into z.
  const auto w = parse_path(g, "c,d,c,v");
  d = decompose_path(g, w);
  REQUIRE(d.segments.size() == 2);
  CHECK(d.segments[0] == parse_path(g, "c,d,c"));
  CHECK(d.crossings == std::vector<EdgeIndex>{g.edge_at("v")});
  CHECK(d.segments[1] == Path::vertex(g.vertex_at("z")));
  CHECK(recompose(g, d) == w);
}

TEST_CASE("complete to cycle") {
  const auto c3 = oracle::fixture("c3");
  const auto u = parse_path(c3, "e1,e2,e3");
  CHECK(complete_to_cycle(c3, u) == Path::vertex(u.source()));
  CHECK(complete_to_cycle(c3, parse_path(c3, "e1")) == parse_path(c3, "e2,e3"));

  const auto two = oracle::fixture("two_cycle");
  CHECK(complete_to_cycle(two, parse_path(two, "e")) == parse_path(two, "f"));

  const auto chain = oracle::fixture("chain");
  CHECK_THROWS_AS(complete_to_cycle(chain, parse_path(chain, "ab")), PreconditionError);
}

TEST_CASE("transpose and tails") {
  const auto chain = oracle::fixture("chain");
  const auto t = transpose(chain);
  CHECK(t.edge(t.edge_at("ab")).source == t.vertex_at("B"));
  CHECK(transpose(t) == chain);
  const auto p2 = oracle::fixture("p2");
  CHECK(transpose(p2) == p2);

  CHECK(add_tails(p2, 3) == p2);
  DirectedGraph lone;
  lone.add_vertex("x");
  const auto tailed = add_tails(lone, 2);
  CHECK(tailed.vertex_count() == 3);
  CHECK(tailed.edge_count() == 2);
  CHECK(condensation(tailed).size() == 3);

  DirectedGraph fork;
  fork.add_vertex("r");
  fork.add_vertex("s1");
  fork.add_vertex("s2");
  fork.add_edge("a", "r", "s1");
  fork.add_edge("b", "r", "s2");
  const auto f1 = add_tails(fork, 1);
  CHECK(f1.vertex_count() == 5);
  CHECK(f1.edge_count() == 4);
}

TEST_CASE("enumeration") {
  const auto p2 = oracle::fixture("p2");
  const auto paths = enumerate_paths(p2, 0, 0, 2);
  std::vector<std::string> names;
  for (const auto& p : paths) names.push_back(to_string(p2, p));
  CHECK(names == std::vector<std::string>{"x", "a", "b", "a,a", "a,b", "b,a", "b,b"});

  const auto chain = oracle::fixture("chain");
  CHECK(enumerate_paths(chain, chain.vertex_at("C"), chain.vertex_at("A"), 5).empty());

  const auto c3 = oracle::fixture("c3");
  CHECK(enumerate_cycles_through(c3, 0, 3).size() == 1);

  EnumerationLimits tight;
  tight.max_paths = 10;
  CHECK_THROWS_AS(enumerate_all_paths(p2, 4, tight), LimitError);
  tight = {};
  CHECK_THROWS_AS(enumerate_all_paths(p2, 13, tight), LimitError);
}

TEST_CASE("random graphs: condensation properties") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_graph(rng, 10, 20);
    const auto c = condensation(g);
    const auto r = oracle::reach_matrix(g);

    // Components are exactly the mutual-reachability classes.
    for (VertexIndex a = 0; a < g.vertex_count(); ++a)
      for (VertexIndex b = 0; b < g.vertex_count(); ++b)
        REQUIRE(c.same_component(a, b) == (r[a][b] && r[b][a]));

    // The quotient is acyclic: reachability between distinct components is one-way.
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = 0; b < c.size(); ++b)
        if (a != b) REQUIRE_FALSE((c.reaches[a][b] && c.reaches[b][a]));

    CHECK(is_transitive_in_components(g) == oracle::every_edge_on_cycle(g));

    const auto t = transpose(g);
    CHECK(transpose(t) == g);
    const auto ct = condensation(t);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
      CHECK(ct.classes[ct.component_of[v]] == c.classes[c.component_of[v]]);

    std::size_t sinks = 0;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) sinks += g.is_sink(v);
    const auto tailed = add_tails(g, 2);
    CHECK(tailed.vertex_count() == g.vertex_count() + 2 * sinks);
    std::size_t tail_sinks = 0;
    for (VertexIndex v = 0; v < tailed.vertex_count(); ++v) {
      if (!tailed.is_sink(v)) continue;
      ++tail_sinks;
      CHECK(v >= g.vertex_count());
    }
    CHECK(tail_sinks == sinks);
  }
}

TEST_CASE("random cycles: primitive roots against the period oracle") {
  std::mt19937 rng(7);
  std::size_t checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_graph(rng, 4, 8, 0.4);
    for (VertexIndex x = 0; x < g.vertex_count(); ++x)
      for (const auto& u : enumerate_cycles_through(g, x, 6)) {
        const auto r = primitive_root(g, u);
        const std::vector<EdgeIndex> word(u.edges().begin(), u.edges().end());
        const auto [period, power] = oracle::word_period(word);
        REQUIRE(r.exponent == power);
        REQUIRE(r.root.length() == period);
        REQUIRE(nestrep::power(r.root, r.exponent) == u);
        ++checked;
      }
  }
  CHECK(checked > 100);
}

TEST_CASE("random paths: decomposition against exhaustive splits") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = oracle::random_graph(rng, 6, 10, 0.3);
    const auto reach = oracle::reach_matrix(g);
    const auto w = oracle::random_path(g, rng, 6);
    const auto d = decompose_path(g, w);
    REQUIRE(recompose(g, d) == w);
    REQUIRE(d.segments.size() == d.crossings.size() + 1);

    // Oracle: an edge is a crossing exactly when its endpoints are not
    // mutually reachable; the segments are the maximal runs between them.
    std::vector<EdgeIndex> crossings;
    for (std::size_t i = 0; i < w.length(); ++i) {
      const auto& e = g.edge(w[i]);
      if (!(reach[e.source][e.range] && reach[e.range][e.source])) crossings.push_back(w[i]);
    }
    CHECK(d.crossings == crossings);
    for (const auto& s : d.segments)
      for (std::size_t i = 0; i < s.length(); ++i) {
        const auto& e = g.edge(s[i]);
        CHECK((reach[e.source][e.range] && reach[e.range][e.source]));
      }
  }
}

TEST_CASE("random graphs: completions are shortest") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_graph(rng, 6, 12, 0.2);
    const auto w = oracle::random_path(g, rng, 4);
    const auto reach = oracle::reach_matrix(g);
    if (!reach[w.range()][w.source()]) {
      CHECK_THROWS_AS(complete_to_cycle(g, w), PreconditionError);
      continue;
    }
    const auto v = complete_to_cycle(g, w);
    CHECK(v.source() == w.range());
    CHECK(v.range() == w.source());
    const auto all = enumerate_paths(g, w.range(), w.source(), v.length());
    REQUIRE_FALSE(all.empty());
    CHECK(all.front() == v);  // least in (length, lexicographic) order
  }
}
