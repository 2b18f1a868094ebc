#include <lcext/homalg.hpp>

#include <stdexcept>
#include <string>

namespace lcext {

HilbertRational cokernel_hilbert(const RingPresentation& ring, const GradedMatrix& a) {
  if (a.rows() == 0) return HilbertRational();
  const std::vector<int>& w = ring.ambient().weights();
  const GroebnerBasis gb = image_basis(ring, a);
  return HilbertRational(monomial_hilbert_numerator(gb.leading_terms(), w, a.row_degrees()), w).canonical();
}

HilbertRational module_hilbert(const ModulePresentation& m) { return cokernel_hilbert(m.ring(), m.presentation()); }

int pole_order_at_one(const HilbertRational& h) {
  const LaurentExpansion e = laurent_expand(h, Center::One, 1);
  if (e.is_zero() || e.order >= 0) return 0;
  return -e.order;
}

GradedMatrix hom_presentation(const GradedFreeModule& f, const ModulePresentation& n) {
  const GradedMatrix& p = n.presentation();
  const std::size_t g = p.rows(), c = p.cols();
  std::vector<int> rows, cols;
  for (int a : f.degrees) {
    for (int b : p.row_degrees()) rows.push_back(b - a);
    for (int b : p.col_degrees()) cols.push_back(b - a);
  }
  GradedMatrix out(p.nvars(), rows, cols);
  for (std::size_t k = 0; k < f.rank(); ++k) {
    for (const auto& [ji, e] : p.nonzero_entries()) out.set(k * g + ji.second, k * c + ji.first, e);
  }
  return out;
}

GradedMatrix hom_dual(const GradedMatrix& d, const ModulePresentation& n) {
  const std::vector<int>& gdeg = n.generator_degrees();
  const std::size_t g = gdeg.size();
  std::vector<int> rows, cols;
  for (int a : d.col_degrees()) {
    for (int b : gdeg) rows.push_back(b - a);
  }
  for (int a : d.row_degrees()) {
    for (int b : gdeg) cols.push_back(b - a);
  }
  GradedMatrix out(d.nvars(), rows, cols);
  for (const auto& [lk, e] : d.nonzero_entries()) {
    for (std::size_t i = 0; i < g; ++i) out.set(lk.first * g + i, lk.second * g + i, e);
  }
  return out;
}

GradedMatrix tensor_presentation(const GradedFreeModule& f, const ModulePresentation& n) {
  return hom_presentation(GradedFreeModule{[&] {
                            std::vector<int> neg;
                            for (int a : f.degrees) neg.push_back(-a);
                            return neg;
                          }()},
                          n);
}

GradedMatrix tensor_map(const GradedMatrix& d, const ModulePresentation& n) {
  const std::vector<int>& gdeg = n.generator_degrees();
  const std::size_t g = gdeg.size();
  std::vector<int> rows, cols;
  for (int a : d.row_degrees()) {
    for (int b : gdeg) rows.push_back(a + b);
  }
  for (int a : d.col_degrees()) {
    for (int b : gdeg) cols.push_back(a + b);
  }
  GradedMatrix out(d.nvars(), rows, cols);
  for (const auto& [lk, e] : d.nonzero_entries()) {
    for (std::size_t i = 0; i < g; ++i) out.set(lk.second * g + i, lk.first * g + i, e);
  }
  return out;
}

namespace {

GradedMatrix hcat(const GradedMatrix& a, const GradedMatrix& b) {
  std::vector<int> cols = a.col_degrees();
  cols.insert(cols.end(), b.col_degrees().begin(), b.col_degrees().end());
  GradedMatrix out(a.nvars(), a.row_degrees(), cols);
  for (const auto& [ji, e] : a.nonzero_entries()) out.set(ji.second, ji.first, e);
  for (const auto& [ji, e] : b.nonzero_entries()) out.set(ji.second, a.cols() + ji.first, e);
  return out;
}

void check_ring(const FreeResolution& res, const ModulePresentation& n) {
  if (!(res.ring == n.ring())) throw std::invalid_argument("modules over different rings");
}

void require_step(const FreeResolution& res, int i, const char* what) {
  if (i < 0) throw std::invalid_argument(std::string(what) + " index must be non-negative");
  if (res.truncated && res.length() < static_cast<std::size_t>(i) + 1) {
    throw std::invalid_argument(std::string(what) + "^" + std::to_string(i) + " needs d_" + std::to_string(i + 1) +
                                " but the resolution stops at d_" + std::to_string(res.length()));
  }
}

}  // namespace

HilbertRational ext_hilbert(const FreeResolution& res, const ModulePresentation& n, int i) {
  check_ring(res, n);
  require_step(res, i, "Ext");
  const std::size_t k = static_cast<std::size_t>(i);
  if (k >= res.modules.size()) return HilbertRational();
  // Hom(F_k, N) receives d_k^* and maps out by d_{k+1}^*.
  const auto pres = [&](std::size_t s) { return hom_presentation(res.F(s), n); };
  // map(s) is the image of the generators of Hom(F_s, N) in Hom(F_{s+1}, N).
  const auto map = [&](std::size_t s) { return hom_dual(res.d(s + 1), n); };
  const GradedMatrix ck = pres(k);
  const HilbertRational quotient =
      k == 0 ? cokernel_hilbert(res.ring, ck) : cokernel_hilbert(res.ring, hcat(ck, map(k - 1)));
  if (k + 1 > res.length()) return quotient;
  const GradedMatrix cn = pres(k + 1);
  const HilbertRational image = cokernel_hilbert(res.ring, cn) - cokernel_hilbert(res.ring, hcat(cn, map(k)));
  return (quotient - image).canonical();
}

HilbertRational ext_hilbert(const ModulePresentation& m, const ModulePresentation& n, int i) {
  if (i < 0) throw std::invalid_argument("Ext index must be non-negative");
  return ext_hilbert(minimal_resolution(m, i + 1), n, i);
}

HilbertRational tor_hilbert(const FreeResolution& res, const ModulePresentation& n, int i) {
  check_ring(res, n);
  require_step(res, i, "Tor");
  const std::size_t k = static_cast<std::size_t>(i);
  if (k >= res.modules.size()) return HilbertRational();
  const auto pres = [&](std::size_t s) { return tensor_presentation(res.F(s), n); };
  // F_k (x) N / im(d_{k+1} (x) N), minus the image of d_k (x) N in F_{k-1} (x) N.
  const GradedMatrix ck = pres(k);
  const HilbertRational quotient =
      k + 1 <= res.length() ? cokernel_hilbert(res.ring, hcat(ck, tensor_map(res.d(k + 1), n)))
                            : cokernel_hilbert(res.ring, ck);
  if (k == 0) return quotient;
  const GradedMatrix cp = pres(k - 1);
  const HilbertRational image =
      cokernel_hilbert(res.ring, cp) - cokernel_hilbert(res.ring, hcat(cp, tensor_map(res.d(k), n)));
  return (quotient - image).canonical();
}

HilbertRational tor_hilbert(const ModulePresentation& m, const ModulePresentation& n, int i) {
  if (i < 0) throw std::invalid_argument("Tor index must be non-negative");
  return tor_hilbert(minimal_resolution(m, i + 1), n, i);
}

const HilbertRational& ExtSeriesTable::at(int i) const {
  const auto it = entries.find(i);
  if (it == entries.end()) throw std::out_of_range("Ext^" + std::to_string(i) + " not in the table");
  return it->second;
}

ExtSeriesTable ext_table(const ModulePresentation& m, const ModulePresentation& n, int max_i) {
  if (max_i < 0) throw std::invalid_argument("max_i must be non-negative");
  const FreeResolution res = minimal_resolution(m, max_i + 1);
  ExtSeriesTable table;
  for (int i = 0; i <= max_i; ++i) table.entries[i] = ext_hilbert(res, n, i);
  table.computed_through = max_i;
  table.vanishing_certified = !res.truncated && res.length() <= static_cast<std::size_t>(max_i);
  return table;
}

std::vector<std::pair<int, Integer>> bass_numbers(const ModulePresentation& n, int max_i) {
  const ModulePresentation k = ModulePresentation::residue_field(n.ring());
  const ExtSeriesTable table = ext_table(k, n, max_i);
  std::vector<std::pair<int, Integer>> out;
  for (const auto& [i, h] : table.entries) {
    const auto p = h.as_laurent_polynomial();
    if (!p) throw std::logic_error("Ext^" + std::to_string(i) + "(K, N) came out of infinite length: " + h.to_string());
    const Rational mu = p->evaluate(1);
    if (mu.get_den() != 1) throw std::logic_error("non-integral Bass number");
    out.emplace_back(i, mu.get_num());
  }
  return out;
}

Rational rank_over_domain(const ModulePresentation& m) {
  const HilbertRational hr = module_hilbert(ModulePresentation::ring_module(m.ring()));
  const int d = pole_order_at_one(hr);
  const LaurentExpansion er = laurent_expand(hr, Center::One, 1);
  const LaurentExpansion em = laurent_expand(module_hilbert(m), Center::One, d + 1);
  const Rational f0r = er.coefficient(-d);
  if (f0r == 0) throw std::domain_error("f^0(R) vanishes");
  return em.coefficient(-d) / f0r;
}

}  // namespace lcext
