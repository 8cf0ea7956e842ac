#include "nestrep/fock.hpp"

namespace nestrep {

TruncatedFockBasis::TruncatedFockBasis(const DirectedGraph& g, std::size_t depth,
                                       std::size_t max_basis)
    : depth_(depth) {
  EnumerationLimits limits;
  limits.max_len = std::max(limits.max_len, depth);
  limits.max_paths = max_basis;
  try {
    paths_ = enumerate_all_paths(g, depth, limits);
  } catch (const LimitError&) {
    throw LimitError("truncated Fock basis at depth " + std::to_string(depth) +
                     " exceeds " + std::to_string(max_basis) + " vectors");
  }
  for (std::size_t i = 0; i < paths_.size(); ++i) index_.emplace(paths_[i], i);
}

std::optional<std::size_t> TruncatedFockBasis::index_of(const Path& w) const {
  const auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> TruncatedFockBasis::indices_up_to(std::size_t max_length) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < paths_.size(); ++i)
    if (paths_[i].length() <= max_length) out.push_back(i);
  return out;
}

FockRepresentation truncated_left_regular(const DirectedGraph& g, std::size_t depth,
                                          std::size_t max_basis) {
  TruncatedFockBasis basis(g, depth, max_basis);
  FiniteRepresentation rep(g, basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Path& w = basis.path(i);
    const auto col = static_cast<Eigen::Index>(i);
    rep.vertex_image(w.range())(col, col) = 1.0;
    if (w.length() == depth) continue;
    for (auto e : g.out_edges(w.range())) {
      const auto target = basis.index_of(compose(Path::edge(g, e), w));
      rep.edge_image(e)(static_cast<Eigen::Index>(*target), col) = 1.0;
    }
  }
  return FockRepresentation{std::move(basis), std::move(rep)};
}

Scalar fourier_coefficient_from_matrix(const TruncatedFockBasis& basis, const Matrix& a,
                                       const Path& w) {
  const auto row = basis.index_of(w);
  const auto col = basis.index_of(Path::vertex(w.source()));
  if (!row || !col) throw LimitError("path is longer than the truncation depth");
  return a(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(*col));
}

}  // namespace nestrep
