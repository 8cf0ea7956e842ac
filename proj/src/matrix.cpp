#include "nestrep/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace nestrep {

double row_operator_norm(std::span<const Matrix> ms) {
  if (ms.empty()) throw ShapeError("row_operator_norm needs at least one matrix");
  const auto rows = ms.front().rows();
  Matrix gram = Matrix::Zero(rows, rows);
  for (const auto& m : ms) {
    if (m.rows() != rows) throw ShapeError("row operator entries must share a row count");
    gram.noalias() += m * m.adjoint();
  }
  return std::sqrt(std::max(0.0, max_eigenvalue_hermitian(gram)));
}

double max_eigenvalue_hermitian(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.rows() != m.cols()) throw ShapeError("eigenvalues need a square matrix");
  const Matrix h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

bool is_orthogonal_projection(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw ShapeError("projection test needs a square matrix");
  return operator_norm(m * m - m) <= tol && operator_norm(m - m.adjoint()) <= tol;
}

Vector unit_vector(std::size_t k, std::size_t j) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(k));
  v(static_cast<Eigen::Index>(j)) = 1.0;
  return v;
}

Matrix matrix_unit(std::size_t k, std::size_t i, std::size_t j) {
  const auto n = static_cast<Eigen::Index>(k);
  Matrix m = Matrix::Zero(n, n);
  m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
  return m;
}

Matrix reverse_basis(const Matrix& m) { return m.colwise().reverse().rowwise().reverse(); }

namespace {

class OrthonormalSpan {
 public:
  OrthonormalSpan(std::size_t k, double tol) : k_(static_cast<Eigen::Index>(k)), tol_(tol) {}

  // Two passes of modified Gram-Schmidt; returns true when `m` extends the span.
  // `m` is expected to have Frobenius norm at most one.
  bool try_add(const Matrix& m) {
    if (vectors_.size() == static_cast<std::size_t>(k_ * k_)) return false;
    Vector r = Eigen::Map<const Vector>(m.data(), m.size());
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : vectors_) r -= b * b.dot(r);
    const double norm = r.norm();
    if (norm <= tol_) return false;
    r /= norm;
    vectors_.push_back(r);
    matrices_.push_back(Eigen::Map<const Matrix>(r.data(), k_, k_));
    return true;
  }

  std::size_t size() const { return vectors_.size(); }
  const Matrix& matrix(std::size_t i) const { return matrices_[i]; }
  std::vector<Matrix> take_basis() { return std::move(matrices_); }

 private:
  Eigen::Index k_;
  double tol_;
  std::vector<Vector> vectors_;
  std::vector<Matrix> matrices_;
};

}  // namespace

AlgebraSpan span_closure(std::span<const Matrix> gens, std::size_t k, double rank_tol) {
  const auto n = static_cast<Eigen::Index>(k);
  double largest = 0.0;
  for (const auto& g : gens) {
    if (g.rows() != n || g.cols() != n) throw ShapeError("span_closure: generator is not k x k");
    largest = std::max(largest, g.norm());
  }

  std::vector<Matrix> unit_gens;
  for (const auto& g : gens) {
    const double norm = g.norm();
    if (norm > 1e-14 * largest && norm > 0.0) unit_gens.push_back(g / norm);
  }

  // The algebra is spanned by words in the generators, so closing the span
  // under right multiplication by each generator suffices.
  OrthonormalSpan span(k, rank_tol);
  std::deque<std::size_t> pending;
  for (const auto& g : unit_gens)
    if (span.try_add(g)) pending.push_back(span.size() - 1);
  while (!pending.empty()) {
    const Matrix b = span.matrix(pending.front());
    pending.pop_front();
    for (const auto& g : unit_gens) {
      if (span.try_add(b * g)) pending.push_back(span.size() - 1);
    }
  }

  AlgebraSpan out;
  out.dimension = span.size();
  out.basis = span.take_basis();
  return out;
}

}  // namespace nestrep
