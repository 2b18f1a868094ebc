#include <lcext/ratfun.hpp>

#include "ratfun/dense_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lcext {

using detail::DensePoly;

std::string center_name(Center c) {
  switch (c) {
    case Center::Zero:
      return "0";
    case Center::One:
      return "1";
    case Center::Infinity:
      return "inf";
  }
  return "?";
}

int LaurentExpansion::known_through() const {
  if (is_zero()) return kZeroOrder;
  return order + static_cast<int>(coefficients.size()) - 1;
}

Rational LaurentExpansion::coefficient(int j) const {
  if (is_zero() || j < order) return 0;
  if (j > known_through()) {
    throw std::out_of_range("coefficient " + std::to_string(j) + " lies past the truncation (known through " +
                            std::to_string(known_through()) + ")");
  }
  return coefficients[j - order];
}

namespace {

std::string unit_power(Center c, int j) {
  switch (c) {
    case Center::Zero:
      return j == 0 ? "" : (j == 1 ? "t" : "t^" + std::to_string(j));
    case Center::Infinity:
      return j == 0 ? "" : "t^" + std::to_string(-j);
    case Center::One:
      return j == 0 ? "" : (j == 1 ? "(1-t)" : "(1-t)^" + std::to_string(j));
  }
  return "";
}

}  // namespace

std::string LaurentExpansion::to_string() const {
  std::ostringstream out;
  if (is_zero()) {
    out << "0";
    return out.str();
  }
  bool first = true;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const Rational& c = coefficients[i];
    if (c == 0) continue;
    const int j = order + static_cast<int>(i);
    const std::string unit = unit_power(center, j);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    if (unit.empty()) {
      out << mag.get_str();
    } else if (mag != 1) {
      out << (mag.get_den() == 1 ? mag.get_str() : "(" + mag.get_str() + ")") << "*" << unit;
    } else {
      out << unit;
    }
  }
  out << " + O(" << (unit_power(center, known_through() + 1).empty() ? "1" : unit_power(center, known_through() + 1))
      << ")";
  return out.str();
}

namespace {

LaurentExpansion expand_at_zero(const LaurentPolynomial& num, const LaurentPolynomial& den, Center tag, int terms) {
  LaurentExpansion e;
  e.center = tag;
  if (num.is_zero()) return e;
  auto [ns, n] = detail::to_dense(num);
  auto [ds, d] = detail::to_dense(den);
  e.order = ns - ds;
  e.coefficients = detail::series_divide(n, d, terms);
  return e;
}

}  // namespace

LaurentExpansion laurent_expand(const HilbertRational& f, Center center, int terms) {
  if (terms < 1) throw std::invalid_argument("expansion needs at least one term");
  switch (center) {
    case Center::Zero:
      return expand_at_zero(f.numerator(), f.expanded_denominator(), Center::Zero, terms);
    case Center::Infinity: {
      const HilbertRational g = invert_variable(f);
      return expand_at_zero(g.numerator(), g.expanded_denominator(), Center::Infinity, terms);
    }
    case Center::One: {
      LaurentExpansion e;
      e.center = Center::One;
      if (f.is_zero()) return e;
      auto [ns, n] = detail::to_dense(f.numerator());
      auto [ds, d] = detail::to_dense(f.expanded_denominator());
      // Move t^(ns - ds) to whichever side keeps both polynomial.
      const int shift = ns - ds;
      std::vector<Rational> tc(std::abs(shift) + 1);
      tc.back() = 1;
      const DensePoly t_power(std::move(tc));
      if (shift >= 0) {
        n = n * t_power;
      } else {
        d = d * t_power;
      }
      DensePoly ns1 = detail::substitute_one_minus(n);
      DensePoly ds1 = detail::substitute_one_minus(d);
      const int na = ns1.low_order();
      const int da = ds1.low_order();
      e.order = na - da;
      e.coefficients = detail::series_divide(detail::drop_low(ns1, na), detail::drop_low(ds1, da), terms);
      return e;
    }
  }
  throw std::logic_error("unknown center");
}

int expansion_order(const LaurentExpansion& e) { return e.order; }

LaurentExpansion multiply_truncated(const LaurentExpansion& a, const LaurentExpansion& b) {
  if (a.center != b.center) throw std::invalid_argument("expansions around different centers");
  LaurentExpansion out;
  out.center = a.center;
  if (a.is_zero() || b.is_zero()) return out;
  const std::size_t n = std::min(a.coefficients.size(), b.coefficients.size());
  out.order = a.order + b.order;
  out.coefficients.assign(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i <= k; ++i) out.coefficients[k] += a.coefficients[i] * b.coefficients[k - i];
  }
  return out;
}

LaurentExpansion add_truncated(const LaurentExpansion& a, const LaurentExpansion& b) {
  if (a.center != b.center) throw std::invalid_argument("expansions around different centers");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  LaurentExpansion out;
  out.center = a.center;
  const int low = std::min(a.order, b.order);
  const int high = std::min(a.known_through(), b.known_through());
  std::vector<Rational> c;
  for (int j = low; j <= high; ++j) c.push_back(a.coefficient(j) + b.coefficient(j));
  std::size_t lead = 0;
  while (lead < c.size() && c[lead] == 0) ++lead;
  if (lead == c.size()) {
    // Cancelled through the known window: keep an explicit all-zero window.
    out.order = high + 1;
    return out;
  }
  out.order = low + static_cast<int>(lead);
  out.coefficients.assign(c.begin() + lead, c.end());
  return out;
}

}  // namespace lcext
