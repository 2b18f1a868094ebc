#include <lcext/polyring.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace lcext {

Field Field::prime(std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("field characteristic must be a prime");
  for (std::uint32_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  }
  Field f;
  f.p_ = p;
  return f;
}

Rational Field::normalize(const Rational& x) const {
  if (p_ == 0) return x;
  const Integer p(p_);
  Integer den = x.get_den() % p;
  if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  Integer r = (x.get_num() * inv) % p;
  if (r < 0) r += p;
  return Rational(r);
}

std::string Field::name() const { return p_ == 0 ? "QQ" : "ZZ/" + std::to_string(p_); }

WeightedRingSpec::WeightedRingSpec(std::vector<std::string> variables, std::vector<int> weights, Field field)
    : variables_(std::move(variables)), weights_(std::move(weights)), field_(field) {
  if (variables_.size() != weights_.size()) throw std::invalid_argument("one weight per variable is required");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(variables_[i]).second) throw std::invalid_argument("duplicate variable " + variables_[i]);
    if (weights_[i] < 1) throw std::invalid_argument("variable " + variables_[i] + " needs a positive weight");
  }
}

WeightedRingSpec WeightedRingSpec::standard(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return WeightedRingSpec(std::move(names), std::vector<int>(n, 1));
}

std::optional<std::size_t> WeightedRingSpec::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

bool WeightedRingSpec::is_standard() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

int WeightedRingSpec::weight_sum() const { return std::accumulate(weights_.begin(), weights_.end(), 0); }

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent in a monomial");
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

int Monomial::weighted_degree(const std::vector<int>& weights) const {
  int d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) d += exps_[i] * weights[i];
  return d;
}

int Monomial::total_degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial q(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    q.exps_[i] = exps_[i] - other.exps_[i];
    if (q.exps_[i] < 0) throw std::invalid_argument("monomial quotient is not a monomial");
  }
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) l.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return l;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial p(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) p.exps_[i] = exps_[i] + other.exps_[i];
  return p;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c) {
  MultiPoly p(m.size());
  p.add_term(m, c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  return monomial(Monomial::variable(nvars, index));
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_term() const { return coefficient(Monomial(nvars_)); }

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) throw std::invalid_argument("monomial has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials live in rings of different sizes");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m) const {
  MultiPoly out(nvars_);
  for (const auto& [mm, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, c);
  return out;
}

MultiPoly MultiPoly::normalized(const Field& field) const {
  if (field.is_rationals()) return *this;
  MultiPoly out(nvars_);
  for (const auto& [m, c] : terms_) out.add_term(m, field.normalize(c));
  return out;
}

std::string MultiPoly::to_string(const WeightedRingSpec& spec) const {
  if (spec.size() != nvars_) throw std::invalid_argument("ring spec does not match the polynomial");
  if (terms_.empty()) return "0";
  // Highest weighted degree first, then descending lexicographic exponent order.
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.rbegin(), terms_.rend());
  std::stable_sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
    return a.first.weighted_degree(spec.weights()) > b.first.weighted_degree(spec.weights());
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += spec.variables()[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << mono;
    } else {
      out << mag.get_str() << "*" << mono;
    }
  }
  return out.str();
}

std::optional<int> weighted_degree(const MultiPoly& p, const WeightedRingSpec& spec) {
  if (p.is_zero()) throw std::invalid_argument("the zero polynomial has no degree");
  std::optional<int> deg;
  for (const auto& [m, c] : p.terms()) {
    const int d = m.weighted_degree(spec.weights());
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

}  // namespace lcext
