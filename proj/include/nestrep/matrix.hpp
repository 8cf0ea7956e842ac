#pragma once

// Dense complex linear algebra used by the representation code: norms,
// projection tests, and the dimension of the algebra generated by a set of
// matrices.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "nestrep/errors.hpp"

namespace nestrep {

using Scalar = std::complex<double>;
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

struct ToleranceConfig {
  double rank_tol = 1e-9;
  double norm_tol = 1e-9;
  double recovery_tol = 1e-8;
};

/// Largest singular value.
template <typename Derived>
double operator_norm(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  using Plain = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Eigen::JacobiSVD<Plain> svd(m.eval());
  return static_cast<double>(svd.singularValues()(0));
}

/// Norm of the row operator [m_1 m_2 ...], i.e. ||sum m_i m_i^*||^{1/2}.
double row_operator_norm(std::span<const Matrix> ms);

/// Largest eigenvalue of a Hermitian matrix (0 for an empty matrix).
double max_eigenvalue_hermitian(const Matrix& m);

bool is_orthogonal_projection(const Matrix& m, double tol = 1e-9);

template <typename A, typename B>
bool matrices_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b,
                    double tol = 1e-9) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return operator_norm(a - b) <= tol;
}

/// e_j in C^k.
Vector unit_vector(std::size_t k, std::size_t j);

/// The rank-one operator h k^*: z -> <z, k> h.
template <typename A, typename B>
Matrix dyad(const Eigen::MatrixBase<A>& h, const Eigen::MatrixBase<B>& k) {
  return h * k.adjoint();
}

/// The matrix unit E_ij in M_k (zero-based indices).
Matrix matrix_unit(std::size_t k, std::size_t i, std::size_t j);

/// Reverse the order of the standard basis: P m P with P the flip permutation.
Matrix reverse_basis(const Matrix& m);

struct AlgebraSpan {
  std::size_t dimension = 0;
  std::vector<Matrix> basis;  // Frobenius-orthonormal
};

/// Dimension and an orthonormal basis of the (non-unital) algebra generated
/// by `gens` inside M_k. A candidate is accepted when its component
/// orthogonal to the current span exceeds rank_tol relative to its size.
AlgebraSpan span_closure(std::span<const Matrix> gens, std::size_t k, double rank_tol = 1e-9);

inline std::size_t span_closure_dim(std::span<const Matrix> gens, std::size_t k,
                                    double rank_tol = 1e-9) {
  return span_closure(gens, k, rank_tol).dimension;
}

}  // namespace nestrep
