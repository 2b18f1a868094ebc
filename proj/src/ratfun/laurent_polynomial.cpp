#include <lcext/ratfun.hpp>

#include "ratfun/dense_poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lcext {

LaurentPolynomial::LaurentPolynomial(const Rational& constant) { add_term(0, constant); }

LaurentPolynomial LaurentPolynomial::term(const Rational& coefficient, int exponent) {
  LaurentPolynomial p;
  p.add_term(exponent, coefficient);
  return p;
}

LaurentPolynomial LaurentPolynomial::one_minus_t_power(int d) {
  if (d < 1) throw std::invalid_argument("1 - t^d needs d >= 1");
  return LaurentPolynomial(1) - t_power(d);
}

Rational LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool LaurentPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool LaurentPolynomial::is_integral() const {
  for (const auto& [e, c] : terms_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

Rational LaurentPolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0 && t == 0) throw std::domain_error("negative power evaluated at zero");
    Rational p = 1;
    Rational base = e >= 0 ? t : Rational(1 / t);
    for (int i = 0; i < std::abs(e); ++i) p *= base;
    acc += c * p;
  }
  return acc;
}

LaurentPolynomial LaurentPolynomial::substitute_inverse() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

void LaurentPolynomial::add_term(int exponent, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  LaurentPolynomial out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) out.add_term(e1 + e2, c1 * c2);
  }
  *this = std::move(out);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

namespace {

std::string power_string(int e) {
  if (e == 0) return "";
  if (e == 1) return "t";
  return "t^" + std::to_string(e);
}

}  // namespace

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) {
      if (mag.get_den() == 1) {
        out << mag.get_str();
      } else {
        out << "(" << mag.get_str() << ")";
      }
    }
    out << power_string(e);
  }
  return out.str();
}

namespace {

class PolyLexer {
 public:
  explicit PolyLexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char ch) {
    if (peek() == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }
  Integer integer() {
    skip_space();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    Integer v(std::string(text_.substr(start, pos_ - start)));
    return neg ? Integer(-v) : v;
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("laurent polynomial parse error at offset " + std::to_string(pos_) + ": " + what +
                                " in \"" + std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Rational parse_rational(PolyLexer& lx) {
  Integer num = lx.integer();
  if (lx.accept('/')) {
    Integer den = lx.integer();
    if (den == 0) lx.fail("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  return Rational(num);
}

}  // namespace

LaurentPolynomial LaurentPolynomial::parse(std::string_view text) {
  PolyLexer lx(text);
  LaurentPolynomial out;
  if (lx.done()) lx.fail("empty input");
  bool first = true;
  while (!lx.done()) {
    int sign = 1;
    if (lx.accept('-')) {
      sign = -1;
    } else if (!lx.accept('+') && !first) {
      lx.fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff = 1;
    bool have_coeff = false;
    if (lx.peek() == '(') {
      lx.expect('(');
      coeff = parse_rational(lx);
      lx.expect(')');
      have_coeff = true;
    } else if (lx.at_digit()) {
      coeff = parse_rational(lx);
      have_coeff = true;
    }
    if (have_coeff) lx.accept('*');
    int exponent = 0;
    if (lx.accept('t')) {
      exponent = 1;
      if (lx.accept('^')) {
        const bool paren = lx.accept('(');
        Integer e = lx.integer();
        if (paren) lx.expect(')');
        if (!e.fits_sint_p()) lx.fail("exponent out of range");
        exponent = static_cast<int>(e.get_si());
      }
    } else if (!have_coeff) {
      lx.fail("expected a term");
    }
    out.add_term(exponent, coeff * sign);
  }
  return out;
}

std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero Laurent polynomial");
  if (a.is_zero()) return LaurentPolynomial{};
  auto [sa, pa] = detail::to_dense(a);
  auto [sb, pb] = detail::to_dense(b);
  auto [q, r] = detail::divmod(pa, pb);
  if (!r.is_zero()) return std::nullopt;
  return detail::to_laurent(q, sa - sb);
}

}  // namespace lcext
