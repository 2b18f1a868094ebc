#include <lcext/groebner.hpp>

#include <algorithm>

namespace lcext {

MonomialOrder::MonomialOrder(std::vector<int> weights, std::vector<int> generator_degrees, std::size_t split)
    : weights_(std::move(weights)), generator_degrees_(std::move(generator_degrees)), split_(split) {
  if (split_ > generator_degrees_.size()) throw std::invalid_argument("elimination block exceeds the rank");
}

int MonomialOrder::degree(const Monomial& m, std::size_t component) const {
  return m.weighted_degree(weights_) + generator_degrees_.at(component);
}

ModuleTerm MonomialOrder::make_term(Monomial m, std::size_t component, Rational coeff) const {
  const int d = degree(m, component);
  return ModuleTerm{std::move(m), component, d, std::move(coeff)};
}

namespace {

std::strong_ordering revlex(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const ModuleTerm& a, const ModuleTerm& b) const {
  const bool a_top = a.component < split_;
  const bool b_top = b.component < split_;
  if (a_top != b_top) return a_top ? std::strong_ordering::greater : std::strong_ordering::less;
  if (a.degree != b.degree) return a.degree <=> b.degree;
  if (auto c = revlex(a.monomial, b.monomial); c != 0) return c;
  if (a.component != b.component) {
    return a.component < b.component ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare_monomials(const Monomial& a, const Monomial& b) const {
  const int da = a.weighted_degree(weights_), db = b.weighted_degree(weights_);
  if (da != db) return da <=> db;
  return revlex(a, b);
}

SparseVector to_sparse(const ModuleVector& v, const MonomialOrder& order) {
  if (v.size() != order.rank()) throw std::invalid_argument("vector rank does not match the free module");
  SparseVector out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    for (const auto& [m, c] : v[k].terms()) out.push_back(order.make_term(m, k, c));
  }
  std::sort(out.begin(), out.end(), [&](const ModuleTerm& a, const ModuleTerm& b) { return order.compare(a, b) > 0; });
  return out;
}

SparseVector sparse_column(const GradedMatrix& a, std::size_t j, const MonomialOrder& order, std::size_t first) {
  SparseVector out;
  const auto& entries = a.nonzero_entries();
  for (auto it = entries.lower_bound({j, 0}); it != entries.end() && it->first.first == j; ++it) {
    for (const auto& [m, c] : it->second.terms()) out.push_back(order.make_term(m, first + it->first.second, c));
  }
  std::sort(out.begin(), out.end(), [&](const ModuleTerm& x, const ModuleTerm& y) { return order.compare(x, y) > 0; });
  return out;
}

ModuleVector to_module_vector(const SparseVector& v, const MonomialOrder& order) {
  ModuleVector out(order.rank(), MultiPoly(order.nvars()));
  for (const auto& t : v) out[t.component].add_term(t.monomial, t.coeff);
  return out;
}

std::optional<int> vector_degree(const SparseVector& v) {
  if (v.empty()) throw std::invalid_argument("the zero vector has no degree");
  for (const auto& t : v) {
    if (t.degree != v.front().degree) return std::nullopt;
  }
  return v.front().degree;
}

}  // namespace lcext
