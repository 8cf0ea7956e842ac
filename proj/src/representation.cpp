#include "nestrep/representation.hpp"

#include <algorithm>
#include <numeric>

namespace nestrep {

FiniteRepresentation::FiniteRepresentation(const DirectedGraph& g, std::size_t dimension)
    : graph_(&g), dimension_(dimension) {
  const auto k = static_cast<Eigen::Index>(dimension);
  vertex_images_.assign(g.vertex_count(), Matrix::Zero(k, k));
  edge_images_.assign(g.edge_count(), Matrix::Zero(k, k));
}

std::vector<Matrix> FiniteRepresentation::generators() const {
  std::vector<Matrix> out(vertex_images_);
  out.insert(out.end(), edge_images_.begin(), edge_images_.end());
  return out;
}

bool FiniteRepresentation::operator==(const FiniteRepresentation& other) const {
  return graph_ == other.graph_ && dimension_ == other.dimension_ &&
         vertex_images_ == other.vertex_images_ && edge_images_ == other.edge_images_;
}

std::size_t NestStructure::dimension() const {
  return std::accumulate(blocks.begin(), blocks.end(), std::size_t{0});
}

std::size_t NestStructure::triangular_algebra_dimension() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) total += blocks[i] * blocks[j];
  return total;
}

Matrix evaluate(const FiniteRepresentation& rep, const Path& p) {
  if (p.is_vertex()) return rep.vertex_image(p.source());
  Matrix out = rep.edge_image(p[0]);
  for (std::size_t i = 1; i < p.length(); ++i) out = rep.edge_image(p[i]) * out;
  return out;
}

Matrix evaluate(const FiniteRepresentation& rep, const FormalElement& a) {
  if (&a.graph() != &rep.graph()) throw GraphError("element and representation use different graphs");
  const auto k = static_cast<Eigen::Index>(rep.dimension());
  Matrix out = Matrix::Zero(k, k);
  for (const auto& [p, c] : a.terms()) out += c * evaluate(rep, p);
  return out;
}

Vector apply(const FiniteRepresentation& rep, const FormalElement& a, const Vector& v) {
  if (&a.graph() != &rep.graph()) throw GraphError("element and representation use different graphs");
  if (v.size() != static_cast<Eigen::Index>(rep.dimension())) throw ShapeError("vector size mismatch");
  Vector out = Vector::Zero(v.size());
  for (const auto& [p, c] : a.terms()) {
    Vector x = p.is_vertex() ? Vector(rep.vertex_image(p.source()) * v) : v;
    for (std::size_t i = 0; i < p.length(); ++i) x = rep.edge_image(p[i]) * x;
    out += c * x;
  }
  return out;
}

bool satisfies_invariants(const FiniteRepresentation& rep, double tol) {
  const auto& g = rep.graph();
  for (VertexIndex x = 0; x < g.vertex_count(); ++x) {
    if (!is_orthogonal_projection(rep.vertex_image(x), tol)) return false;
    for (VertexIndex y = x + 1; y < g.vertex_count(); ++y)
      if (operator_norm(rep.vertex_image(x) * rep.vertex_image(y)) > tol) return false;
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    const Matrix sandwiched = rep.vertex_image(ed.range) * rep.edge_image(e) * rep.vertex_image(ed.source);
    if (operator_norm(sandwiched - rep.edge_image(e)) > tol) return false;
  }
  return true;
}

namespace {

Matrix compress(const Matrix& m, const std::optional<std::vector<std::size_t>>& idx) {
  if (!idx) return m;
  const auto n = static_cast<Eigen::Index>(idx->size());
  Matrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out(i, j) = m(static_cast<Eigen::Index>((*idx)[i]), static_cast<Eigen::Index>((*idx)[j]));
  return out;
}

}  // namespace

RelationReport check_relations(const FiniteRepresentation& rep,
                               const std::optional<std::vector<std::size_t>>& interior,
                               double tol) {
  const auto& g = rep.graph();
  RelationReport report;
  if (interior) {
    report.restriction = "compressed to " + std::to_string(interior->size()) + " of " +
                         std::to_string(rep.dimension()) + " basis vectors";
  }
  for (VertexIndex x = 0; x < g.vertex_count(); ++x)
    for (VertexIndex y = 0; y < g.vertex_count(); ++y)
      if (x != y)
        report.orthogonal_vertices =
            std::max(report.orthogonal_vertices,
                     operator_norm(compress(rep.vertex_image(x) * rep.vertex_image(y), interior)));
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Matrix& se = rep.edge_image(e);
    for (EdgeIndex f = 0; f < g.edge_count(); ++f)
      if (e != f)
        report.orthogonal_edge_ranges =
            std::max(report.orthogonal_edge_ranges,
                     operator_norm(compress(se.adjoint() * rep.edge_image(f), interior)));
    const Matrix defect = se.adjoint() * se - rep.vertex_image(g.edge(e).source);
    report.partial_isometry = std::max(report.partial_isometry, operator_norm(compress(defect, interior)));
  }
  const auto k = static_cast<Eigen::Index>(rep.dimension());
  for (VertexIndex x = 0; x < g.vertex_count(); ++x) {
    Matrix sum = Matrix::Zero(k, k);
    for (auto e : g.in_edges(x)) sum += rep.edge_image(e) * rep.edge_image(e).adjoint();
    const double excess = max_eigenvalue_hermitian(compress(sum - rep.vertex_image(x), interior));
    report.range_bound = std::max(report.range_bound, std::max(0.0, excess));
  }
  report.orthogonal_vertices_ok = report.orthogonal_vertices <= tol;
  report.orthogonal_edge_ranges_ok = report.orthogonal_edge_ranges <= tol;
  report.partial_isometry_ok = report.partial_isometry <= tol;
  report.range_bound_ok = report.range_bound <= tol;
  report.row_norm = row_operator_norm(rep);
  report.row_contractive = report.row_norm <= 1.0 + tol;
  return report;
}

double row_operator_norm(const FiniteRepresentation& rep) {
  if (rep.edge_images().empty()) return 0.0;
  return row_operator_norm(std::span<const Matrix>(rep.edge_images()));
}

double purity_defect(const FiniteRepresentation& rep, std::size_t depth) {
  if (depth == 0) throw PreconditionError("purity defect needs depth >= 1");
  // sum_{|p|=d} rep(p) rep(p)^* is the d-th iterate of X -> sum_e S_e X S_e^*
  // applied to I; products along non-composable edge words vanish because
  // rep(e) = rep(r(e)) rep(e) rep(s(e)).
  const auto k = static_cast<Eigen::Index>(rep.dimension());
  Matrix x = Matrix::Identity(k, k);
  for (std::size_t step = 0; step < depth; ++step) {
    Matrix next = Matrix::Zero(k, k);
    for (const auto& s : rep.edge_images()) next.noalias() += s * x * s.adjoint();
    x = std::move(next);
  }
  return operator_norm(x);
}

bool is_coisometric(const FiniteRepresentation& rep, double tol) {
  const auto k = static_cast<Eigen::Index>(rep.dimension());
  Matrix sum = Matrix::Zero(k, k);
  for (const auto& s : rep.edge_images()) sum += s * s.adjoint();
  return operator_norm(sum - Matrix::Identity(k, k)) <= tol;
}

FiniteRepresentation reverse_basis(const FiniteRepresentation& rep) {
  FiniteRepresentation out(rep.graph(), rep.dimension());
  for (VertexIndex x = 0; x < rep.graph().vertex_count(); ++x)
    out.vertex_image(x) = reverse_basis(rep.vertex_image(x));
  for (EdgeIndex e = 0; e < rep.graph().edge_count(); ++e)
    out.edge_image(e) = reverse_basis(rep.edge_image(e));
  return out;
}

}  // namespace nestrep
