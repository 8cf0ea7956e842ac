#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nestrep/formal_element.hpp"
#include "nestrep/graph.hpp"
#include "nestrep/matrix.hpp"

namespace nestrep {

/// A representation of the path semigroupoid on C^k, determined by the
/// images of vertices and edges and extended multiplicatively to paths.
/// The graph is referenced, not owned.
class FiniteRepresentation {
 public:
  FiniteRepresentation(const DirectedGraph& g, std::size_t dimension);

  const DirectedGraph& graph() const noexcept { return *graph_; }
  std::size_t dimension() const noexcept { return dimension_; }

  const Matrix& vertex_image(VertexIndex x) const { return vertex_images_.at(x); }
  const Matrix& edge_image(EdgeIndex e) const { return edge_images_.at(e); }
  Matrix& vertex_image(VertexIndex x) { return vertex_images_.at(x); }
  Matrix& edge_image(EdgeIndex e) { return edge_images_.at(e); }
  const std::vector<Matrix>& vertex_images() const noexcept { return vertex_images_; }
  const std::vector<Matrix>& edge_images() const noexcept { return edge_images_; }

  /// Images of every vertex and edge, in that order.
  std::vector<Matrix> generators() const;

  /// Same graph object and identical images.
  bool operator==(const FiniteRepresentation& other) const;

 private:
  const DirectedGraph* graph_;
  std::size_t dimension_;
  std::vector<Matrix> vertex_images_;
  std::vector<Matrix> edge_images_;
};

/// Ordered block sizes of a finite nest; the block order is the nest order.
struct NestStructure {
  std::vector<std::size_t> blocks;

  std::size_t dimension() const;
  /// Dimension of the block lower triangular algebra: sum over i >= j of d_i d_j.
  std::size_t triangular_algebra_dimension() const;
  bool operator==(const NestStructure&) const = default;
};

Matrix evaluate(const FiniteRepresentation& rep, const Path& p);
Matrix evaluate(const FiniteRepresentation& rep, const FormalElement& a);
/// rep(a) v without forming rep(a).
Vector apply(const FiniteRepresentation& rep, const FormalElement& a, const Vector& v);

/// Vertex images are pairwise orthogonal projections and every edge satisfies
/// rep(e) = rep(r(e)) rep(e) rep(s(e)).
bool satisfies_invariants(const FiniteRepresentation& rep, double tol = 1e-9);

/// Residuals of the four partial-isometry relations:
///   (1) P_x P_y = 0 for x != y         (2) S_e^* S_f = 0 for e != f
///   (3) S_e^* S_e = P_{s(e)}            (4) sum_{r(e)=x} S_e S_e^* <= P_x
/// Relation (4) is measured as the least eps with sum <= P_x + eps I.
struct RelationReport {
  double orthogonal_vertices = 0.0;
  double orthogonal_edge_ranges = 0.0;
  double partial_isometry = 0.0;
  double range_bound = 0.0;
  bool orthogonal_vertices_ok = true;
  bool orthogonal_edge_ranges_ok = true;
  bool partial_isometry_ok = true;
  bool range_bound_ok = true;
  double row_norm = 0.0;
  bool row_contractive = true;
  std::optional<std::string> restriction;

  bool partially_isometric() const {
    return orthogonal_vertices_ok && orthogonal_edge_ranges_ok && partial_isometry_ok &&
           range_bound_ok;
  }
};

/// When `interior` is given, every relation is compressed to the span of
/// those basis vectors first.
RelationReport check_relations(const FiniteRepresentation& rep,
                               const std::optional<std::vector<std::size_t>>& interior = {},
                               double tol = 1e-9);

/// Norm of the row operator formed by all edge images.
double row_operator_norm(const FiniteRepresentation& rep);

/// || sum_{|p| = d} rep(p) rep(p)^* ||.
double purity_defect(const FiniteRepresentation& rep, std::size_t depth);

/// sum_e S_e S_e^* = I within tol.
bool is_coisometric(const FiniteRepresentation& rep, double tol = 1e-9);

/// Conjugate every image by the basis-reversing permutation.
FiniteRepresentation reverse_basis(const FiniteRepresentation& rep);

}  // namespace nestrep
