#include <lcext/groebner.hpp>

#include <algorithm>
#include <map>

namespace lcext {

namespace {

std::vector<Monomial> minimalized(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.total_degree() != b.total_degree() ? a.total_degree() < b.total_degree() : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

// Numerator of H(Q / L) for the monomial ideal L.
LaurentPolynomial ideal_numerator(std::vector<Monomial> gens, const std::vector<int>& weights) {
  gens = minimalized(std::move(gens));
  if (gens.empty()) return LaurentPolynomial(1);
  if (gens.front().is_one()) return LaurentPolynomial();

  const std::size_t n = weights.size();
  std::vector<int> count(n, 0);
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < n; ++i) count[i] += g[i] > 0;
  }
  const auto best = std::max_element(count.begin(), count.end());
  if (*best <= 1) {
    // Pairwise coprime generators form a regular sequence.
    LaurentPolynomial out(1);
    for (const auto& g : gens) out *= LaurentPolynomial::one_minus_t_power(g.weighted_degree(weights));
    return out;
  }
  const std::size_t x = static_cast<std::size_t>(best - count.begin());
  int e = 0;
  for (const auto& g : gens) {
    if (g[x] > 0 && (e == 0 || g[x] < e)) e = g[x];
  }
  const Monomial pivot = Monomial::variable(n, x, e);

  // H(Q/L) = H(Q/(L + p)) + t^deg(p) H(Q/(L : p)).
  std::vector<Monomial> sum = gens;
  sum.push_back(pivot);
  std::vector<Monomial> colon;
  for (const auto& g : gens) colon.push_back(g.lcm(pivot).quotient(pivot));
  return ideal_numerator(std::move(sum), weights) +
         ideal_numerator(std::move(colon), weights).shifted(pivot.weighted_degree(weights));
}

}  // namespace

LaurentPolynomial monomial_hilbert_numerator(const std::vector<ModuleTerm>& leading_terms,
                                             const std::vector<int>& weights,
                                             const std::vector<int>& generator_degrees) {
  std::vector<std::vector<Monomial>> by_component(generator_degrees.size());
  for (const auto& t : leading_terms) by_component.at(t.component).push_back(t.monomial);
  LaurentPolynomial out;
  for (std::size_t k = 0; k < generator_degrees.size(); ++k) {
    out += ideal_numerator(std::move(by_component[k]), weights).shifted(generator_degrees[k]);
  }
  return out;
}

}  // namespace lcext
