#pragma once

#include <cstddef>
#include <map>

#include "nestrep/graph.hpp"
#include "nestrep/matrix.hpp"

namespace nestrep {

/// A finitely supported linear combination sum a_p L_p of paths. The graph is
/// referenced, not owned, and must outlive the element.
class FormalElement {
 public:
  using Terms = std::map<Path, Scalar>;

  explicit FormalElement(const DirectedGraph& g) : graph_(&g) {}

  /// The vertex projection P_x.
  static FormalElement vertex(const DirectedGraph& g, VertexIndex x, Scalar c = 1.0);
  /// c L_p.
  static FormalElement path(const DirectedGraph& g, const Path& p, Scalar c = 1.0);

  const DirectedGraph& graph() const noexcept { return *graph_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Largest path length in the support (0 for the zero element).
  std::size_t degree() const;

  /// Coefficient a_p; zero when p is not in the support.
  Scalar coefficient(const Path& p) const;

  /// Adds c to a_p; an exact zero result removes the term.
  FormalElement& add(const Path& p, Scalar c);

  FormalElement& operator+=(const FormalElement& other);
  FormalElement& operator-=(const FormalElement& other);
  FormalElement& operator*=(Scalar c);

  friend FormalElement operator+(FormalElement a, const FormalElement& b) { return a += b; }
  friend FormalElement operator-(FormalElement a, const FormalElement& b) { return a -= b; }
  friend FormalElement operator*(FormalElement a, Scalar c) { return a *= c; }
  friend FormalElement operator*(Scalar c, FormalElement a) { return a *= c; }
  /// Convolution: (ab)_r = sum over composable pq = r of a_p b_q.
  friend FormalElement operator*(const FormalElement& a, const FormalElement& b);

  bool operator==(const FormalElement& other) const {
    return graph_ == other.graph_ && terms_ == other.terms_;
  }

 private:
  void require_same_graph(const FormalElement& other) const;

  const DirectedGraph* graph_;
  Terms terms_;
};

/// The Cesaro mean sum_{|p|<k} (1 - |p|/k) a_p L_p.
FormalElement cesaro_mean(const FormalElement& a, std::size_t k);

/// Direct coefficient lookup a_w.
inline Scalar fourier_coefficient(const FormalElement& a, const Path& w) {
  return a.coefficient(w);
}

}  // namespace nestrep
