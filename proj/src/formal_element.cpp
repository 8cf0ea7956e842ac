#include "nestrep/formal_element.hpp"

namespace nestrep {

FormalElement FormalElement::vertex(const DirectedGraph& g, VertexIndex x, Scalar c) {
  if (x >= g.vertex_count()) throw GraphError("vertex index out of range");
  return path(g, Path::vertex(x), c);
}

FormalElement FormalElement::path(const DirectedGraph& g, const Path& p, Scalar c) {
  FormalElement a(g);
  a.add(p, c);
  return a;
}

std::size_t FormalElement::degree() const {
  // Paths order by length first, so the last term has maximal length.
  return terms_.empty() ? 0 : terms_.rbegin()->first.length();
}

Scalar FormalElement::coefficient(const Path& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Scalar{} : it->second;
}

FormalElement& FormalElement::add(const Path& p, Scalar c) {
  if (c == Scalar{}) return *this;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Scalar{}) terms_.erase(it);
  }
  return *this;
}

void FormalElement::require_same_graph(const FormalElement& other) const {
  if (graph_ != other.graph_) throw GraphError("formal elements belong to different graphs");
}

FormalElement& FormalElement::operator+=(const FormalElement& other) {
  require_same_graph(other);
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

FormalElement& FormalElement::operator-=(const FormalElement& other) {
  require_same_graph(other);
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

FormalElement& FormalElement::operator*=(Scalar c) {
  if (c == Scalar{}) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second == Scalar{} ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

FormalElement operator*(const FormalElement& a, const FormalElement& b) {
  a.require_same_graph(b);
  FormalElement out(a.graph());
  for (const auto& [p, ap] : a.terms_)
    for (const auto& [q, bq] : b.terms_)
      if (q.range() == p.source()) out.add(compose(p, q), ap * bq);
  return out;
}

FormalElement cesaro_mean(const FormalElement& a, std::size_t k) {
  if (k == 0) throw PreconditionError("Cesaro mean index must be positive");
  FormalElement out(a.graph());
  for (const auto& [p, c] : a.terms()) {
    if (p.length() >= k) continue;
    const double weight = 1.0 - static_cast<double>(p.length()) / static_cast<double>(k);
    out.add(p, weight * c);
  }
  return out;
}

}  // namespace nestrep
