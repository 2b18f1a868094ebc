#include <lcext/ratfun.hpp>

#include "ratfun/dense_poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lcext {

using detail::DensePoly;

namespace {

void validate_degrees(const std::vector<int>& degrees) {
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("denominator degrees must be >= 1");
  }
}

void validate_residual(const LaurentPolynomial& residual) {
  if (residual.is_zero() || residual.min_exponent() != 0) {
    throw std::invalid_argument("residual denominator must be a polynomial with nonzero constant term");
  }
}

int divisor_count_bound(int degree) { return 2 * degree * degree + 2; }

}  // namespace

HilbertRational::HilbertRational(LaurentPolynomial numerator, std::vector<int> denominator_degrees)
    : numerator_(std::move(numerator)), degrees_(std::move(denominator_degrees)), reduced_(false) {
  validate_degrees(degrees_);
  std::sort(degrees_.begin(), degrees_.end());
}

HilbertRational::HilbertRational(LaurentPolynomial numerator, std::vector<int> denominator_degrees,
                                 LaurentPolynomial residual)
    : numerator_(std::move(numerator)),
      degrees_(std::move(denominator_degrees)),
      residual_(std::move(residual)),
      reduced_(false) {
  validate_degrees(degrees_);
  validate_residual(residual_);
  std::sort(degrees_.begin(), degrees_.end());
}

HilbertRational HilbertRational::constant(const Rational& c) { return polynomial(LaurentPolynomial(c)); }

HilbertRational HilbertRational::polynomial(LaurentPolynomial p) {
  HilbertRational f;
  f.numerator_ = std::move(p);
  return f;
}

LaurentPolynomial HilbertRational::expanded_denominator() const {
  LaurentPolynomial d = residual_;
  for (int k : degrees_) d *= LaurentPolynomial::one_minus_t_power(k);
  return d;
}

HilbertRational HilbertRational::from_fraction(const LaurentPolynomial& num, const LaurentPolynomial& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) return HilbertRational{};

  auto [num_shift, n] = detail::to_dense(num);
  auto [den_shift, d] = detail::to_dense(den);
  const int shift = num_shift - den_shift;

  DensePoly g = detail::gcd(n, d);
  n = detail::divmod(n, g).first;
  d = detail::divmod(d, g).first;
  // d(0) != 0 after stripping powers of t; normalise it to 1.
  const Rational d0 = d.c[0];
  n *= 1 / d0;
  d *= 1 / d0;

  // Peel cyclotomic factors Psi_k (all with constant term 1) off d.
  std::map<int, int> mult;
  const int bound = divisor_count_bound(d.degree());
  for (int k = 1; k <= bound && d.degree() > 0; ++k) {
    if (detail::euler_phi(k) > d.degree()) continue;
    const DensePoly& psi = detail::cyclotomic_factor(k);
    while (d.degree() >= psi.degree()) {
      auto [q, r] = detail::divmod(d, psi);
      if (!r.is_zero()) break;
      d = std::move(q);
      ++mult[k];
    }
  }

  // Assemble factors 1 - t^K greedily from the largest K whose divisors are all present.
  std::vector<int> degrees;
  for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
    const int k = it->first;
    while (mult[k] > 0) {
      bool coverable = true;
      for (int j = 1; j <= k; ++j) {
        if (k % j == 0 && mult[j] < 1) {
          coverable = false;
          break;
        }
      }
      if (!coverable) break;
      for (int j = 1; j <= k; ++j) {
        if (k % j == 0) --mult[j];
      }
      degrees.push_back(k);
    }
  }
  DensePoly residual = d;
  for (const auto& [k, m] : mult) {
    for (int i = 0; i < m; ++i) residual = residual * detail::cyclotomic_factor(k);
  }

  // Scale the residual to a primitive integer polynomial with positive constant term.
  Integer den_lcm = 1;
  for (const auto& c : residual.c) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  DensePoly scaled = residual;
  scaled *= Rational(den_lcm);
  Integer content = 0;
  for (const auto& c : scaled.c) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num_mpz_t());
  Rational scale(den_lcm, content);
  scale.canonicalize();
  if (scaled.c[0] < 0) scale = -scale;
  residual *= scale;
  n *= scale;

  HilbertRational out;
  out.numerator_ = detail::to_laurent(n, shift);
  out.degrees_ = std::move(degrees);
  std::sort(out.degrees_.begin(), out.degrees_.end());
  out.residual_ = detail::to_laurent(residual);
  out.reduced_ = true;
  return out;
}

HilbertRational HilbertRational::canonical() const {
  if (reduced_ && !numerator_.is_zero()) return *this;
  return from_fraction(numerator_, expanded_denominator());
}

std::optional<LaurentPolynomial> HilbertRational::as_laurent_polynomial() const {
  const HilbertRational c = canonical();
  if (!c.degrees_.empty() || !c.residual_.is_constant()) return std::nullopt;
  LaurentPolynomial p = c.numerator_;
  p *= 1 / c.residual_.coefficient(0);
  return p;
}

namespace {

std::string factor_string(int d) { return d == 1 ? "(1-t)" : "(1-t^" + std::to_string(d) + ")"; }

}  // namespace

std::string HilbertRational::to_string() const {
  std::ostringstream out;
  out << "(" << numerator_.to_string() << ") / ";
  const bool plain_residual = residual_ == LaurentPolynomial(1);
  if (degrees_.empty() && plain_residual) {
    out << "1";
    return out.str();
  }
  if (!plain_residual) out << "(" << residual_.to_string() << ")";
  for (std::size_t i = 0; i < degrees_.size();) {
    std::size_t j = i;
    while (j < degrees_.size() && degrees_[j] == degrees_[i]) ++j;
    out << factor_string(degrees_[i]);
    if (j - i > 1) out << "^" << (j - i);
    i = j;
  }
  return out.str();
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& what) {
  throw std::invalid_argument("rational function parse error: " + what + " in \"" + std::string(text) + "\"");
}

std::size_t skip_ws(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

// Returns the index just past the parenthesis matching s[open].
std::size_t matching_paren(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i + 1;
  }
  parse_fail(s, "unbalanced parentheses");
}

}  // namespace

HilbertRational HilbertRational::parse(std::string_view text) {
  std::size_t i = skip_ws(text, 0);
  if (i >= text.size() || text[i] != '(') parse_fail(text, "numerator must be parenthesised");
  std::size_t close = matching_paren(text, i);
  LaurentPolynomial num = LaurentPolynomial::parse(text.substr(i + 1, close - i - 2));
  i = skip_ws(text, close);
  std::vector<int> degrees;
  LaurentPolynomial residual(1);
  if (i < text.size()) {
    if (text[i] != '/') parse_fail(text, "expected '/'");
    i = skip_ws(text, i + 1);
    if (i < text.size() && text[i] == '1' && skip_ws(text, i + 1) == text.size()) {
      i = text.size();
    }
    while (i < text.size()) {
      if (text[i] != '(') parse_fail(text, "expected a parenthesised denominator factor");
      close = matching_paren(text, i);
      LaurentPolynomial factor = LaurentPolynomial::parse(text.substr(i + 1, close - i - 2));
      i = skip_ws(text, close);
      int power = 1;
      if (i < text.size() && text[i] == '^') {
        i = skip_ws(text, i + 1);
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) parse_fail(text, "expected factor exponent");
        power = std::stoi(std::string(text.substr(i, j - i)));
        i = skip_ws(text, j);
      }
      const bool hilbert_factor = factor.term_count() == 2 && factor.coefficient(0) == 1 &&
                                  factor.max_exponent() >= 1 && factor.coefficient(factor.max_exponent()) == -1;
      for (int k = 0; k < power; ++k) {
        if (hilbert_factor) {
          degrees.push_back(factor.max_exponent());
        } else {
          residual *= factor;
        }
      }
    }
  }
  if (residual.is_zero() || residual.min_exponent() != 0) parse_fail(text, "denominator factor vanishes at t = 0");
  return HilbertRational(std::move(num), std::move(degrees), std::move(residual));
}

HilbertRational operator-(const HilbertRational& f) {
  return HilbertRational(-f.numerator(), f.denominator_degrees(), f.residual());
}

HilbertRational combine(CombineOp op, const HilbertRational& f, const HilbertRational& g) {
  const LaurentPolynomial fd = f.expanded_denominator();
  const LaurentPolynomial gd = g.expanded_denominator();
  switch (op) {
    case CombineOp::Add:
      return HilbertRational::from_fraction(f.numerator() * gd + g.numerator() * fd, fd * gd);
    case CombineOp::Sub:
      return HilbertRational::from_fraction(f.numerator() * gd - g.numerator() * fd, fd * gd);
    case CombineOp::Mul:
      return HilbertRational::from_fraction(f.numerator() * g.numerator(), fd * gd);
    case CombineOp::Div:
      if (g.is_zero()) throw std::domain_error("division by the zero function");
      return HilbertRational::from_fraction(f.numerator() * gd, fd * g.numerator());
  }
  throw std::logic_error("unknown combine op");
}

HilbertRational invert_variable(const HilbertRational& f) {
  // N(1/t) / (rho(1/t) prod(1 - t^-d)) with 1/(1 - t^-d) = -t^d/(1 - t^d)
  // and rho(1/t) = t^-deg(rho) * reversed(rho).
  LaurentPolynomial num = f.numerator().substitute_inverse();
  int shift = 0;
  for (int d : f.denominator_degrees()) shift += d;
  const int rho_degree = f.residual().max_exponent();
  shift += rho_degree;
  num = num.shifted(shift);
  if (f.denominator_degrees().size() % 2 == 1) num = -num;
  LaurentPolynomial rho = f.residual().substitute_inverse().shifted(rho_degree);
  if (rho.coefficient(0) < 0) {
    rho = -rho;
    num = -num;
  }
  HilbertRational out(std::move(num), f.denominator_degrees(), std::move(rho));
  return f.is_reduced() ? out.canonical() : out;
}

bool equal(const HilbertRational& f, const HilbertRational& g) {
  return f.numerator() * g.expanded_denominator() == g.numerator() * f.expanded_denominator();
}

}  // namespace lcext
