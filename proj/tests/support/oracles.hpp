#pragma once

// Independent reference implementations and random generators for tests.
// Nothing here calls the library routine it is used to check.

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nestrep/formal_element.hpp"
#include "nestrep/graph.hpp"
#include "nestrep/io.hpp"
#include "nestrep/representation.hpp"

namespace oracle {

using namespace nestrep;

inline DirectedGraph fixture(const std::string& name) {
  return read_graph_file(std::string(NESTREP_FIXTURE_DIR) + "/" + name + ".graph");
}

/// Reflexive-transitive closure by Floyd-Warshall.
inline std::vector<std::vector<bool>> reach_matrix(const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) r[v][v] = true;
  for (const auto& e : g.edges()) r[e.source][e.range] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

inline bool every_edge_on_cycle(const DirectedGraph& g) {
  const auto r = reach_matrix(g);
  for (const auto& e : g.edges())
    if (!r[e.range][e.source]) return false;
  return true;
}

/// Smallest period d of the edge word with d | n; returns (d, n / d).
inline std::pair<std::size_t, std::size_t> word_period(const std::vector<EdgeIndex>& u) {
  const std::size_t n = u.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = u[i] == u[i - d];
    if (periodic) return {d, n / d};
  }
  return {n, 1};
}

/// Random multigraph; loops appear with probability `loop_bias` per edge draw.
inline DirectedGraph random_graph(std::mt19937& rng, std::size_t max_vertices,
                                  std::size_t max_edges, double loop_bias = 0.2) {
  DirectedGraph g;
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(0, max_edges)(rng);
  for (std::size_t v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::bernoulli_distribution loop(loop_bias);
  for (std::size_t e = 0; e < m; ++e) {
    const auto s = pick(rng);
    const auto r = loop(rng) ? s : pick(rng);
    g.add_edge("e" + std::to_string(e), s, r);
  }
  return g;
}

/// A uniformly extended random walk of at most `len` edges from a random vertex.
inline Path random_path(const DirectedGraph& g, std::mt19937& rng, std::size_t len) {
  const VertexIndex start =
      std::uniform_int_distribution<std::size_t>(0, g.vertex_count() - 1)(rng);
  std::vector<EdgeIndex> edges;
  VertexIndex at = start;
  for (std::size_t i = 0; i < len; ++i) {
    const auto out = g.out_edges(at);
    if (out.empty()) break;
    const EdgeIndex e = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)];
    edges.push_back(e);
    at = g.edge(e).range;
  }
  if (edges.empty()) return Path::vertex(start);
  return Path::from_edges(g, edges);
}

inline Scalar random_coefficient(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng)};
}

/// Up to `max_terms` random terms of length <= max_degree; never zero.
inline FormalElement random_element(const DirectedGraph& g, std::mt19937& rng,
                                    std::size_t max_terms, std::size_t max_degree) {
  FormalElement a(g);
  const std::size_t terms = std::uniform_int_distribution<std::size_t>(1, max_terms)(rng);
  std::uniform_int_distribution<std::size_t> len(0, max_degree);
  for (std::size_t draw = 0; a.size() < terms && draw < 50 * terms; ++draw) {
    const Path p = random_path(g, rng, len(rng));
    if (a.coefficient(p) == Scalar(0.0)) a.add(p, random_coefficient(rng));
  }
  return a;
}

/// Dimension of the algebra generated by `gens`, by brute-force closure under
/// all pairwise products, ranked with full-pivot LU on vectorised matrices.
inline std::size_t naive_algebra_dimension(const std::vector<Matrix>& gens, std::size_t k,
                                           double tol = 1e-9) {
  std::vector<Matrix> basis;
  const auto kk = static_cast<Eigen::Index>(k * k);
  const auto rank_of = [&](const std::vector<Matrix>& ms) {
    if (ms.empty()) return std::size_t{0};
    Matrix stacked(kk, static_cast<Eigen::Index>(ms.size()));
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const double n = ms[i].norm();
      stacked.col(static_cast<Eigen::Index>(i)) =
          Eigen::Map<const Vector>(ms[i].data(), kk) / (n > 0 ? n : 1.0);
    }
    Eigen::FullPivLU<Matrix> lu(stacked);
    lu.setThreshold(tol);
    return static_cast<std::size_t>(lu.rank());
  };
  const auto try_add = [&](const Matrix& m) {
    if (m.norm() <= tol) return false;
    basis.push_back(m);
    if (rank_of(basis) < basis.size()) {
      basis.pop_back();
      return false;
    }
    return true;
  };
  for (const auto& g : gens) try_add(g);
  bool grew = true;
  while (grew && basis.size() < k * k) {
    grew = false;
    const auto current = basis;
    for (const auto& x : current)
      for (const auto& y : current)
        if (try_add(x * y)) grew = true;
  }
  return basis.size();
}

/// sum_{|p| = d} rep(p) rep(p)^* by explicit enumeration of edge words.
inline double purity_by_enumeration(const FiniteRepresentation& rep, std::size_t d) {
  const auto& g = rep.graph();
  const auto k = static_cast<Eigen::Index>(rep.dimension());
  Matrix total = Matrix::Zero(k, k);
  std::vector<std::pair<VertexIndex, Matrix>> frontier;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) frontier.emplace_back(g.edge(e).range, rep.edge_image(e));
  for (std::size_t step = 1; step < d; ++step) {
    std::vector<std::pair<VertexIndex, Matrix>> next;
    for (const auto& [end, m] : frontier)
      for (auto e : g.out_edges(end)) next.emplace_back(g.edge(e).range, rep.edge_image(e) * m);
    frontier = std::move(next);
  }
  for (const auto& [end, m] : frontier) total += m * m.adjoint();
  Eigen::JacobiSVD<Matrix> svd(total);
  return k == 0 ? 0.0 : svd.singularValues()(0);
}

/// The largest singular value, via the eigenvalues of m^* m.
inline double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(m.adjoint() * m);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

}  // namespace oracle
