#pragma once

// Dense univariate polynomials over Q used internally by the rational
// function code. Index i holds the coefficient of t^i; no trailing zeros.

#include <lcext/ratfun.hpp>

#include <utility>
#include <vector>

namespace lcext::detail {

struct DensePoly {
  std::vector<Rational> c;

  DensePoly() = default;
  explicit DensePoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }
  static DensePoly constant(const Rational& v);

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Rational& lead() const { return c.back(); }
  Rational at(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : Rational(0); }
  /// Number of trailing zero coefficients at t^0, t^1, ...
  int low_order() const;

  void trim();
  DensePoly& operator+=(const DensePoly& o);
  DensePoly& operator-=(const DensePoly& o);
  DensePoly& operator*=(const Rational& s);

  friend bool operator==(const DensePoly&, const DensePoly&) = default;
};

DensePoly operator*(const DensePoly& a, const DensePoly& b);
DensePoly operator+(DensePoly a, const DensePoly& b);
DensePoly operator-(DensePoly a, const DensePoly& b);

/// Quotient and remainder; b must be nonzero.
std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b);
/// Monic gcd (zero only when both inputs are zero).
DensePoly gcd(DensePoly a, DensePoly b);

/// p(t) -> p(1 - t)
DensePoly substitute_one_minus(const DensePoly& p);
/// t^deg p(1/t)
DensePoly reversed(const DensePoly& p);
/// p / t^k; the low k coefficients must vanish.
DensePoly drop_low(const DensePoly& p, int k);

/// First n coefficients of the power series a / b, with b(0) != 0.
std::vector<Rational> series_divide(const DensePoly& a, const DensePoly& b, int n);

/// 1 - t for k = 1, the cyclotomic polynomial Phi_k otherwise. Cached.
const DensePoly& cyclotomic_factor(int k);
int euler_phi(int k);
/// 1 - t^d
DensePoly one_minus_t_power(int d);

/// Split a Laurent polynomial into t^shift * p with p(0) != 0.
std::pair<int, DensePoly> to_dense(const LaurentPolynomial& f);
LaurentPolynomial to_laurent(const DensePoly& p, int shift = 0);

}  // namespace lcext::detail
