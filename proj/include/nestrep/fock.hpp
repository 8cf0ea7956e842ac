#pragma once

// The left regular representation on l^2 of the path space, cut off at a
// finite path length. Basis vectors xi_w are indexed by paths w with |w| <= d.

#include <cstddef>
#include <map>
#include <vector>

#include "nestrep/graph_analysis.hpp"
#include "nestrep/representation.hpp"

namespace nestrep {

class TruncatedFockBasis {
 public:
  TruncatedFockBasis(const DirectedGraph& g, std::size_t depth, std::size_t max_basis = 2048);

  std::size_t depth() const noexcept { return depth_; }
  std::size_t size() const noexcept { return paths_.size(); }
  const std::vector<Path>& paths() const noexcept { return paths_; }
  const Path& path(std::size_t i) const { return paths_.at(i); }
  std::optional<std::size_t> index_of(const Path& w) const;

  /// Positions of basis vectors xi_w with |w| <= max_length.
  std::vector<std::size_t> indices_up_to(std::size_t max_length) const;

 private:
  std::size_t depth_;
  std::vector<Path> paths_;
  std::map<Path, std::size_t> index_;
};

struct FockRepresentation {
  TruncatedFockBasis basis;
  FiniteRepresentation rep;
};

/// lambda(e) xi_w = xi_{ew} when r(w) = s(e) and |ew| <= depth, else 0.
FockRepresentation truncated_left_regular(const DirectedGraph& g, std::size_t depth,
                                          std::size_t max_basis = 2048);

/// <A xi_{s(w)}, xi_w> read off a matrix acting on the truncated Fock space.
Scalar fourier_coefficient_from_matrix(const TruncatedFockBasis& basis, const Matrix& a,
                                       const Path& w);

}  // namespace nestrep
