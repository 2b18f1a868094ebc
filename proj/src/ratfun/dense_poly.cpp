#include "ratfun/dense_poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace lcext::detail {

DensePoly DensePoly::constant(const Rational& v) {
  DensePoly p;
  if (v != 0) p.c.push_back(v);
  return p;
}

void DensePoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

int DensePoly::low_order() const {
  int k = 0;
  while (k < static_cast<int>(c.size()) && c[k] == 0) ++k;
  return k;
}

DensePoly& DensePoly::operator+=(const DensePoly& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size());
  for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
  trim();
  return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size());
  for (std::size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
  trim();
  return *this;
}

DensePoly& DensePoly::operator*=(const Rational& s) {
  if (s == 0) {
    c.clear();
    return *this;
  }
  for (auto& v : c) v *= s;
  return *this;
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  }
  return DensePoly(std::move(r));
}

DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }

std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  DensePoly rem = a;
  if (rem.degree() < b.degree()) return {DensePoly{}, rem};
  std::vector<Rational> q(rem.degree() - b.degree() + 1);
  const Rational inv = 1 / b.lead();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const Rational factor = rem.lead() * inv;
    q[shift] = factor;
    for (int i = 0; i <= b.degree(); ++i) rem.c[i + shift] -= factor * b.c[i];
    rem.trim();
  }
  return {DensePoly(std::move(q)), rem};
}

DensePoly gcd(DensePoly a, DensePoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a *= 1 / a.lead();
  return a;
}

DensePoly substitute_one_minus(const DensePoly& p) {
  // Horner in the variable (1 - s).
  DensePoly result;
  const DensePoly one_minus_s(std::vector<Rational>{1, -1});
  for (int i = p.degree(); i >= 0; --i) {
    result = result * one_minus_s;
    result += DensePoly::constant(p.c[i]);
  }
  return result;
}

DensePoly reversed(const DensePoly& p) {
  return DensePoly(std::vector<Rational>(p.c.rbegin(), p.c.rend()));
}

DensePoly drop_low(const DensePoly& p, int k) {
  if (k <= 0) return p;
  if (k > static_cast<int>(p.c.size())) return {};
  return DensePoly(std::vector<Rational>(p.c.begin() + k, p.c.end()));
}

std::vector<Rational> series_divide(const DensePoly& a, const DensePoly& b, int n) {
  if (b.at(0) == 0) throw std::domain_error("series division by a non-unit");
  std::vector<Rational> out(std::max(n, 0));
  const Rational inv = 1 / b.c[0];
  for (int k = 0; k < n; ++k) {
    Rational acc = a.at(k);
    const int top = std::min(k, b.degree());
    for (int j = 1; j <= top; ++j) acc -= b.c[j] * out[k - j];
    out[k] = acc * inv;
  }
  return out;
}

DensePoly one_minus_t_power(int d) {
  if (d < 1) throw std::invalid_argument("1 - t^d needs d >= 1");
  std::vector<Rational> c(d + 1);
  c[0] = 1;
  c[d] = -1;
  return DensePoly(std::move(c));
}

int euler_phi(int k) {
  int result = k;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

namespace {

std::mutex cyclotomic_lock;
std::map<int, DensePoly> cyclotomic_cache;

const DensePoly& cyclotomic_locked(int k) {
  auto it = cyclotomic_cache.find(k);
  if (it != cyclotomic_cache.end()) return it->second;
  // 1 - t^k = prod_{j | k} Psi_j with Psi_1 = 1 - t and Psi_j = Phi_j.
  DensePoly p = one_minus_t_power(k);
  for (int j = 1; j < k; ++j) {
    if (k % j == 0) p = divmod(p, cyclotomic_locked(j)).first;
  }
  return cyclotomic_cache.emplace(k, std::move(p)).first->second;
}

}  // namespace

const DensePoly& cyclotomic_factor(int k) {
  if (k < 1) throw std::invalid_argument("cyclotomic index must be positive");
  std::lock_guard<std::mutex> guard(cyclotomic_lock);
  return cyclotomic_locked(k);
}

std::pair<int, DensePoly> to_dense(const LaurentPolynomial& f) {
  if (f.is_zero()) return {0, DensePoly{}};
  const int low = f.min_exponent();
  std::vector<Rational> c(f.max_exponent() - low + 1);
  for (const auto& [e, v] : f.terms()) c[e - low] = v;
  return {low, DensePoly(std::move(c))};
}

LaurentPolynomial to_laurent(const DensePoly& p, int shift) {
  LaurentPolynomial out;
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.c[i] != 0) out += LaurentPolynomial::term(p.c[i], i + shift);
  }
  return out;
}

}  // namespace lcext::detail
