#include <lcext/invariants.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lcext {

LaurentExpansion expand_through(const HilbertRational& h, Center center, int last) {
  const LaurentExpansion first = laurent_expand(h, center, 1);
  if (first.is_zero() || first.order >= last) return first;
  return laurent_expand(h, center, last - first.order + 1);
}

int ring_dimension(const RingPresentation& r) {
  return pole_order_at_one(module_hilbert(ModulePresentation::ring_module(r)));
}

Rational LaurentCoefficients::at(int j) const {
  if (j < 0) return 0;
  if (static_cast<std::size_t>(j) >= f.size()) throw std::out_of_range("f^" + std::to_string(j) + " not computed");
  return f[j];
}

LaurentCoefficients laurent_coeffs(const HilbertRational& h, int d, int count) {
  if (count < 0) throw std::invalid_argument("coefficient count must be non-negative");
  const LaurentExpansion e = expand_through(h, Center::One, count - d);
  LaurentCoefficients out;
  out.ring_dimension = d;
  for (int j = 0; j <= count; ++j) out.f.push_back(e.coefficient(j - d));
  if (!e.is_zero()) {
    for (int k = e.order; k < -d; ++k) out.below_zero.push_back(e.coefficient(k));
  }
  return out;
}

LaurentCoefficients laurent_coeffs(const ModulePresentation& m, int count) {
  return laurent_coeffs(module_hilbert(m), ring_dimension(m.ring()), count);
}

MultiplicityData multiplicity_poly(const ModulePresentation& n) {
  if (!n.ring().ambient().is_standard()) throw std::invalid_argument("multiplicity needs a standard graded ring");
  const HilbertRational h = module_hilbert(n);
  MultiplicityData out;
  out.n = pole_order_at_one(h);
  LaurentPolynomial power(1);
  for (int i = 0; i < out.n; ++i) power *= LaurentPolynomial::one_minus_t_power(1);
  const auto e = (h * HilbertRational::polynomial(power)).as_laurent_polynomial();
  if (!e || !e->is_integral()) throw std::logic_error("H_N (1-t)^n is not in Z[t, 1/t]: " + h.to_string());
  out.e = *e;
  out.multiplicity = e->evaluate(1).get_num();
  return out;
}

HilbertRational phi(const ModulePresentation& m, const ModulePresentation& n) {
  const HilbertRational hr = module_hilbert(ModulePresentation::ring_module(m.ring()));
  return (invert_variable(module_hilbert(m)) * module_hilbert(n) / invert_variable(hr)).canonical();
}

HilbertRational chi(const ModulePresentation& m, const ModulePresentation& n) {
  const HilbertRational hr = module_hilbert(ModulePresentation::ring_module(m.ring()));
  return (module_hilbert(m) * module_hilbert(n) / hr).canonical();
}

Rational epsilon(const ExtSeriesTable& ext, int d, int j) {
  if (j < 0) return 0;
  if (ext.computed_through < j) {
    throw std::invalid_argument("epsilon^" + std::to_string(j) + " needs Ext through index " + std::to_string(j));
  }
  Rational sum = 0;
  for (int i = 0; i <= j; ++i) {
    const Rational f = laurent_coeffs(ext.at(i), d, j).at(j);
    sum += i % 2 == 0 ? f : Rational(-f);
  }
  return sum;
}

Rational epsilon(const ModulePresentation& m, const ExtSeriesTable& ext, int j) {
  return epsilon(ext, ring_dimension(m.ring()), j);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    case Verdict::HypothesisNotCertified:
      return "hypothesis-not-certified";
  }
  return "?";
}

std::string render_value(const ReportValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return r->get_str();
  if (const auto* h = std::get_if<HilbertRational>(&v)) return h->canonical().to_string();
  return std::get<LaurentExpansion>(v).to_string();
}

namespace {

HilbertRational alternating_sum(const ExtSeriesTable& ext, int from, int to) {
  HilbertRational sum;
  for (int i = from; i <= to; ++i) sum = i % 2 == 0 ? sum + ext.at(i) : sum - ext.at(i);
  return sum.canonical();
}

bool is_finite_length(const ModulePresentation& n) { return module_hilbert(n).is_laurent_polynomial(); }

// Equal coefficients through index `last`.
bool agree_through(const LaurentExpansion& a, const LaurentExpansion& b, int last) {
  int low = last;
  if (!a.is_zero()) low = std::min(low, a.order);
  if (!b.is_zero()) low = std::min(low, b.order);
  for (int j = low; j <= last; ++j) {
    if (a.coefficient(j) != b.coefficient(j)) return false;
  }
  return true;
}

LaurentExpansion truncated(LaurentExpansion e, int last) {
  if (e.is_zero()) return e;
  while (!e.coefficients.empty() && e.known_through() > last) e.coefficients.pop_back();
  if (e.coefficients.empty()) e.order = last + 1;
  return e;
}

// Ext^{i+p} = t^{-q} Ext^i; nullopt when no single q fits.
std::optional<int> ratio_shift(const HilbertRational& a, const HilbertRational& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  const auto r = (b / a).as_laurent_polynomial();
  if (!r || r->term_count() != 1 || r->terms().begin()->second != 1) return std::nullopt;
  return -r->terms().begin()->first;
}

}  // namespace

std::optional<PeriodicTail> detect_periodic_tail(const ExtSeriesTable& ext) {
  for (int start = 0; start <= ext.computed_through; ++start) {
    for (int period = 1; period <= 2; ++period) {
      const int pairs = ext.computed_through - period - start + 1;
      if (pairs < period + 1) continue;
      std::optional<int> shift;
      bool ok = true;
      for (int i = start; ok && i + period <= ext.computed_through; ++i) {
        const HilbertRational &a = ext.at(i), &b = ext.at(i + period);
        if (a.is_zero() && b.is_zero()) continue;
        const auto q = ratio_shift(a, b);
        if (!q || (shift && *shift != *q)) ok = false;
        shift = q;
      }
      if (ok) return PeriodicTail{start, period, shift.value_or(0)};
    }
  }
  return std::nullopt;
}

VerificationReport check_theorem1(const ModulePresentation& m, const ModulePresentation& n, const ExtSeriesTable& ext,
                                  Theorem1Mode mode, int trunc, std::optional<PeriodicTail> tail) {
  if (mode == Theorem1Mode::Auto) {
    if (ext.vanishing_certified) {
      mode = Theorem1Mode::Exact;
    } else if (is_finite_length(n)) {
      mode = Theorem1Mode::FiniteLength;
    } else {
      throw std::invalid_argument("Ext vanishing is not certified and N has infinite length; choose a mode");
    }
  }
  VerificationReport report;
  report.identity = "theorem1";
  const HilbertRational rhs = phi(m, n);
  switch (mode) {
    case Theorem1Mode::Exact: {
      if (!ext.vanishing_certified) throw std::invalid_argument("exact mode needs certified vanishing of Ext");
      const HilbertRational lhs = alternating_sum(ext, 0, ext.computed_through);
      report.lhs = lhs;
      report.rhs = rhs;
      report.verdict = equal(lhs, rhs) ? Verdict::Holds : Verdict::Fails;
      report.details.emplace_back("mode", "exact");
      break;
    }
    case Theorem1Mode::FiniteLength: {
      if (!is_finite_length(n)) throw std::invalid_argument("finite-length mode needs N of finite length");
      const HilbertRational partial = alternating_sum(ext, 0, ext.computed_through);
      const LaurentExpansion l = truncated(expand_through(partial, Center::Infinity, trunc), trunc);
      const LaurentExpansion r = truncated(expand_through(rhs, Center::Infinity, trunc), trunc);
      report.lhs = l;
      report.rhs = r;
      report.verdict = agree_through(l, r, trunc) ? Verdict::Holds : Verdict::Fails;
      report.details.emplace_back("mode", "finite-length");
      report.caveats.push_back("expansions at infinity compared through t^-" + std::to_string(trunc) +
                               " using Ext^0..Ext^" + std::to_string(ext.computed_through));
      break;
    }
    case Theorem1Mode::Periodic: {
      if (!tail) tail = detect_periodic_tail(ext);
      if (!tail) throw std::invalid_argument("no periodic tail found in the Ext table");
      const HilbertRational head = alternating_sum(ext, 0, tail->start - 1);
      const HilbertRational block = alternating_sum(ext, tail->start, tail->start + tail->period - 1);
      LaurentPolynomial ratio = LaurentPolynomial::t_power(-tail->shift);
      if (tail->period % 2 == 1) ratio = -ratio;
      const HilbertRational geometric =
          HilbertRational::from_fraction(LaurentPolynomial(1), LaurentPolynomial(1) - ratio);
      const HilbertRational lhs = (head + block * geometric).canonical();
      report.lhs = lhs;
      report.rhs = rhs;
      report.verdict = equal(lhs, rhs) ? Verdict::Holds : Verdict::HypothesisNotCertified;
      report.details.emplace_back("mode", "periodic");
      report.details.emplace_back("tail", "Ext^(i+" + std::to_string(tail->period) + ") = t^" +
                                               std::to_string(-tail->shift) + " Ext^i for i >= " +
                                               std::to_string(tail->start));
      report.caveats.push_back(
          "heuristic: Ext does not vanish in high degrees, so the theorem does not apply; the tail observed through "
          "Ext^" +
          std::to_string(ext.computed_through) + " is assumed to repeat forever and summed as a geometric series");
      break;
    }
    case Theorem1Mode::Auto:
      break;
  }
  return report;
}

VerificationReport check_prop2(const ModulePresentation& m, const ModulePresentation& n, int max_i, int trunc) {
  if (!is_finite_length(n)) throw std::invalid_argument("N does not have finite length");
  const ExtSeriesTable ext = ext_table(m, n, max_i);
  VerificationReport report;
  report.identity = "prop2";
  bool all_polynomial = true;
  std::vector<std::optional<int>> orders;
  for (int i = 0; i <= max_i; ++i) {
    const auto p = ext.at(i).as_laurent_polynomial();
    if (!p) {
      all_polynomial = false;
      orders.push_back(std::nullopt);
      report.details.emplace_back("Ext^" + std::to_string(i), ext.at(i).to_string() + " (not a Laurent polynomial)");
      continue;
    }
    // [f]_inf = sum a_j t^-j, so the order is minus the top exponent.
    orders.push_back(p->is_zero() ? std::optional<int>() : std::optional<int>(-p->max_exponent()));
    report.details.emplace_back("Ext^" + std::to_string(i),
                                ext.at(i).to_string() + ", order at infinity " +
                                    (orders.back() ? std::to_string(*orders.back()) : std::string("inf")));
  }
  // Orders are non-decreasing from `from` on; a zero module counts as infinite order.
  const auto key = [](const std::optional<int>& o) { return o ? *o : std::numeric_limits<int>::max(); };
  int from = max_i;
  while (from > 0 && key(orders[from - 1]) <= key(orders[from])) --from;
  report.details.emplace_back("orders non-decreasing from", "Ext^" + std::to_string(from));

  const HilbertRational partial = alternating_sum(ext, 0, max_i);
  const LaurentExpansion l = truncated(expand_through(partial, Center::Infinity, trunc), trunc);
  const LaurentExpansion r = truncated(expand_through(phi(m, n), Center::Infinity, trunc), trunc);
  report.lhs = l;
  report.rhs = r;
  report.verdict = all_polynomial && agree_through(l, r, trunc) ? Verdict::Holds : Verdict::Fails;
  report.caveats.push_back("partial sum over Ext^0..Ext^" + std::to_string(max_i) + " compared through t^-" +
                           std::to_string(trunc));
  return report;
}

int agreement_level(const ModulePresentation& m, const ModulePresentation& n, const ExtSeriesTable& ext,
                    int max_level) {
  const int d = ring_dimension(m.ring());
  const LaurentCoefficients c = laurent_coeffs(phi(m, n), d, max_level);
  for (const Rational& x : c.below_zero) {
    if (x != 0) return -1;
  }
  for (int j = 0; j <= max_level; ++j) {
    if (c.at(j) != epsilon(ext, d, j)) return j - 1;
  }
  return max_level + 1;
}

std::string identity_name(Identity which) {
  switch (which) {
    case Identity::Eq40:
      return "eq4.0";
    case Identity::Eq41:
      return "eq4.1";
    case Identity::Eq42:
      return "eq4.2";
    case Identity::Eq61:
      return "eq6.1";
    case Identity::Eq62:
      return "eq6.2";
    case Identity::BC1:
      return "bc1";
  }
  return "?";
}

std::optional<Identity> parse_identity(std::string_view name) {
  for (Identity i : {Identity::Eq40, Identity::Eq41, Identity::Eq42, Identity::Eq61, Identity::Eq62, Identity::BC1}) {
    if (identity_name(i) == name) return i;
  }
  return std::nullopt;
}

std::vector<std::string> Hypotheses::describe() const {
  std::vector<std::string> out;
  if (domain) out.push_back("domain");
  if (ufd) out.push_back("ufd");
  if (regular_in_codim) out.push_back("reg-codim=" + std::to_string(*regular_in_codim));
  return out;
}

VerificationReport check_identity(const ModulePresentation& m, const ModulePresentation& n, Identity which,
                                  const ExtSeriesTable& ext, const Hypotheses& hypotheses) {
  const RingPresentation& ring = m.ring();
  const int d = ring_dimension(ring);
  const LaurentCoefficients r = laurent_coeffs(module_hilbert(ModulePresentation::ring_module(ring)), d, 2);
  const LaurentCoefficients fm = laurent_coeffs(module_hilbert(m), d, 2);
  const LaurentCoefficients fn = laurent_coeffs(module_hilbert(n), d, 2);
  const auto f_ext = [&](int i, int j) { return laurent_coeffs(ext.at(i), d, j).at(j); };
  const auto eps = [&](int j) { return epsilon(ext, d, j); };
  const auto need = [&](int i) {
    if (ext.computed_through < i) throw std::invalid_argument(identity_name(which) + " needs Ext through index " +
                                                              std::to_string(i));
  };
  const auto rank = [&](const LaurentCoefficients& f) { return Rational(f.at(0) / r.at(0)); };
  const bool n_is_ring = n.ring() == ring && n.presentation().rows() == 1 &&
                         n.presentation().row_degrees()[0] == 0 && n.presentation().cols() == 0;

  VerificationReport report;
  report.identity = identity_name(which);
  report.hypotheses = hypotheses.describe();
  Rational lhs, rhs;
  switch (which) {
    case Identity::Eq40:
      need(0);
      lhs = r.at(0) * eps(0);
      rhs = fm.at(0) * fn.at(0);
      break;
    case Identity::Eq41:
      need(1);
      lhs = r.at(0) * eps(1) - r.at(1) * eps(0);
      rhs = fm.at(0) * fn.at(1) - fm.at(1) * fn.at(0);
      break;
    case Identity::Eq42:
      need(2);
      lhs = r.at(0) * eps(2) - r.at(1) * eps(1) + (r.at(2) - r.at(1)) * eps(0);
      rhs = fm.at(0) * fn.at(2) - fm.at(1) * fn.at(1) + (fm.at(2) - fm.at(1)) * fn.at(0);
      break;
    case Identity::Eq61:
      need(1);
      if (!n_is_ring) throw std::invalid_argument("eq6.1 is stated for N = R");
      lhs = f_ext(0, 1) - f_ext(1, 1);
      rhs = 2 * r.at(1) * rank(fm) - fm.at(1);
      break;
    case Identity::Eq62:
      need(2);
      if (!n_is_ring) throw std::invalid_argument("eq6.2 is stated for N = R");
      lhs = f_ext(0, 2) - f_ext(1, 2) + f_ext(2, 2);
      rhs = (1 + 2 * r.at(1) / r.at(0)) * (r.at(1) * rank(fm) - fm.at(1)) + fm.at(2);
      break;
    case Identity::BC1:
      need(1);
      lhs = f_ext(0, 1) - f_ext(1, 1);
      rhs = rank(fm) * rank(fn) * r.at(1) + rank(fm) * fn.at(1) - rank(fn) * fm.at(1);
      report.caveats.push_back("psi = f^1 and rank = f^0(-) / f^0(R), which presumes R is a domain");
      break;
  }
  report.lhs = lhs;
  report.rhs = rhs;
  report.verdict = lhs == rhs ? Verdict::Holds : Verdict::Fails;
  return report;
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int k = 2; k * k <= p; ++k) {
    if (p % k == 0) return false;
  }
  return true;
}

std::optional<LaurentPolynomial> integral_quotient(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  auto q = divide_exact(a, b);
  if (q && !q->is_integral()) q.reset();
  return q;
}

}  // namespace

std::string BassBound::to_string() const {
  if (!divisible) return "e_R(1/t) does not divide e_N(t)";
  std::string out = "q = " + std::to_string(q) + ", sum mu^i >= " + std::to_string(p) + "^(" + exponent.get_str() + ")";
  if (value) out += " = " + value->get_str();
  return out;
}

BassBound bass_bound(const LaurentPolynomial& e_n, const LaurentPolynomial& e_r, int p, int d, int n) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (n < 0 || d < n) throw std::invalid_argument("need d >= n >= 0");
  if (e_n.is_zero() || e_r.is_zero()) throw std::invalid_argument("multiplicity polynomials must be nonzero");
  BassBound out;
  out.p = p;
  const auto quotient = integral_quotient(e_n, e_r.substitute_inverse());
  if (!quotient) return out;
  out.divisible = true;
  out.quotient = *quotient;
  const int span = quotient->max_exponent() - quotient->min_exponent();
  long long pr = 1;
  out.q = 1;
  for (;;) {
    pr *= p;
    if (pr - 1 > span) break;
    LaurentPolynomial s;
    for (long long k = 0; k < pr; ++k) s += LaurentPolynomial::t_power(static_cast<int>(k));
    if (!integral_quotient(*quotient, s)) break;
    out.q = static_cast<int>(pr);
  }
  out.exponent = Rational(d - n + out.q - 1, out.q * (p - 1));
  out.exponent.canonicalize();
  if (out.exponent.get_den() == 1) {
    Integer v;
    mpz_pow_ui(v.get_mpz_t(), Integer(p).get_mpz_t(), out.exponent.get_num().get_ui());
    out.value = v;
  }
  return out;
}

CanonicalSeries canonical_hilbert(const RingPresentation& r, bool verify) {
  const HilbertRational hr = module_hilbert(ModulePresentation::ring_module(r));
  const int d = pole_order_at_one(hr);
  CanonicalSeries out;
  out.series = invert_variable(hr);
  if (d % 2 == 1) out.series = -out.series;
  out.series = out.series.canonical();
  if (!verify) return out;

  const RingPresentation q = r.ambient_ring();
  const int e = static_cast<int>(q.nvars());
  const ModulePresentation w = ModulePresentation::free(q, {q.ambient().weight_sum()});
  const ModulePresentation rq = ModulePresentation::cyclic_quotient(q, r.relations());
  out.ext_series = ext_hilbert(rq, w, e - d).canonical();
  out.ext_matches = equal(*out.ext_series, out.series);

  out.free_formula_holds = true;
  for (int b : {-1, 0, 2}) {
    const ModulePresentation a = ModulePresentation::free(q, {-b});
    const ExtSeriesTable t = ext_table(a, w, e);
    HilbertRational expected = invert_variable(module_hilbert(a));
    if (e % 2 == 1) expected = -expected;
    out.free_formula_holds = out.free_formula_holds && equal(alternating_sum(t, 0, e), expected);
  }
  out.verified = out.ext_matches && out.free_formula_holds;
  return out;
}

}  // namespace lcext
