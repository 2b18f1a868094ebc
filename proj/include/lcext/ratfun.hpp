#pragma once

// Exact univariate arithmetic: Laurent polynomials in t, rational functions
// kept in Hilbert shape q(t) / prod(1 - t^d), and their Laurent expansions
// around 0, 1 and infinity.

#include <gmpxx.h>

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lcext {

using Rational = mpq_class;
using Integer = mpz_class;

/// Element of Q[t, t^-1]. Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(const Rational& constant);

  static LaurentPolynomial term(const Rational& coefficient, int exponent);
  static LaurentPolynomial t_power(int exponent) { return term(1, exponent); }
  /// 1 - t^d
  static LaurentPolynomial one_minus_t_power(int d);

  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coefficient(int exponent) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_integral() const;
  int min_exponent() const;
  int max_exponent() const;
  std::size_t term_count() const { return terms_.size(); }

  Rational evaluate(const Rational& t) const;
  /// f(t) -> f(1/t)
  LaurentPolynomial substitute_inverse() const;
  /// f(t) -> t^k f(t)
  LaurentPolynomial shifted(int k) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const Rational& scalar);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& s) { return a *= s; }
  LaurentPolynomial operator-() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Ascending exponents, e.g. "1 - 3t^2 + 2t^3", "t^-2", "(1/2)t".
  std::string to_string() const;
  static LaurentPolynomial parse(std::string_view text);

 private:
  void add_term(int exponent, const Rational& coefficient);

  std::map<int, Rational> terms_;
};

/// Exact quotient a / b in Q[t, t^-1], or nullopt when b does not divide a.
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// A rational function numerator / (residual * prod_i (1 - t^{d_i})).
///
/// The residual is a polynomial with nonzero constant term; it is 1 whenever
/// the function has Hilbert shape. Values built by the two-argument
/// constructor keep the given (possibly non-reduced) shape; canonical()
/// returns the reduced form, in which the denominator is assembled from
/// factors 1 - t^d wherever the cyclotomic factorisation allows it exactly.
class HilbertRational {
 public:
  HilbertRational() = default;
  HilbertRational(LaurentPolynomial numerator, std::vector<int> denominator_degrees);
  HilbertRational(LaurentPolynomial numerator, std::vector<int> denominator_degrees, LaurentPolynomial residual);

  static HilbertRational constant(const Rational& c);
  static HilbertRational polynomial(LaurentPolynomial p);
  /// Canonical form of num / den; throws std::domain_error when den is zero.
  static HilbertRational from_fraction(const LaurentPolynomial& num, const LaurentPolynomial& den);

  const LaurentPolynomial& numerator() const { return numerator_; }
  const std::vector<int>& denominator_degrees() const { return degrees_; }
  const LaurentPolynomial& residual() const { return residual_; }
  /// True when gcd(numerator, expanded denominator) is a unit.
  bool is_reduced() const { return reduced_; }
  bool has_hilbert_shape() const { return residual_ == LaurentPolynomial(1); }

  LaurentPolynomial expanded_denominator() const;
  HilbertRational canonical() const;

  bool is_zero() const { return numerator_.is_zero(); }
  /// The function as an element of Q[t, t^-1] when its reduced denominator is a unit.
  std::optional<LaurentPolynomial> as_laurent_polynomial() const;
  bool is_laurent_polynomial() const { return as_laurent_polynomial().has_value(); }

  /// "(<numerator>) / (1-t)^2(1-t^3)"; the residual, if any, precedes the
  /// Hilbert factors and an empty denominator renders as "1".
  std::string to_string() const;
  static HilbertRational parse(std::string_view text);

 private:
  LaurentPolynomial numerator_;
  std::vector<int> degrees_;
  LaurentPolynomial residual_{1};
  bool reduced_ = true;
};

enum class CombineOp { Add, Sub, Mul, Div };

HilbertRational combine(CombineOp op, const HilbertRational& f, const HilbertRational& g);
inline HilbertRational operator+(const HilbertRational& f, const HilbertRational& g) { return combine(CombineOp::Add, f, g); }
inline HilbertRational operator-(const HilbertRational& f, const HilbertRational& g) { return combine(CombineOp::Sub, f, g); }
inline HilbertRational operator*(const HilbertRational& f, const HilbertRational& g) { return combine(CombineOp::Mul, f, g); }
inline HilbertRational operator/(const HilbertRational& f, const HilbertRational& g) { return combine(CombineOp::Div, f, g); }
HilbertRational operator-(const HilbertRational& f);

/// f(t) -> f(1/t), written back in Hilbert shape via 1/(1-t^-d) = -t^d/(1-t^d).
HilbertRational invert_variable(const HilbertRational& f);

/// Exact equality of rational functions by cross multiplication.
bool equal(const HilbertRational& f, const HilbertRational& g);

enum class Center { Zero, One, Infinity };

inline constexpr int kDefaultTerms = 16;
inline constexpr int kZeroOrder = std::numeric_limits<int>::max();

/// Truncated Laurent series sum_j a_j u^j with u = t, 1 - t or 1/t for
/// centers Zero, One and Infinity respectively.
struct LaurentExpansion {
  Center center = Center::Zero;
  int order = kZeroOrder;
  /// a_order, a_order+1, ...; empty for the zero series.
  std::vector<Rational> coefficients;

  bool is_zero() const { return order == kZeroOrder; }
  /// Last index whose coefficient is known exactly.
  int known_through() const;
  /// a_j; zero below the order. Throws std::out_of_range past the truncation.
  Rational coefficient(int j) const;

  std::string to_string() const;
};

LaurentExpansion laurent_expand(const HilbertRational& f, Center center, int terms = kDefaultTerms);
/// ord of the series; kZeroOrder for the zero series.
int expansion_order(const LaurentExpansion& e);
/// Product of two expansions around the same center, truncated to the shorter one.
LaurentExpansion multiply_truncated(const LaurentExpansion& a, const LaurentExpansion& b);
LaurentExpansion add_truncated(const LaurentExpansion& a, const LaurentExpansion& b);

std::string center_name(Center c);

}  // namespace lcext
