#include <lcext/groebner.hpp>

#include "groebner/kernel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lcext {

namespace detail {

Reducer::Reducer(const MonomialOrder& order, const Field& field) : order_(order), field_(field) {}

Rational Reducer::norm(const Rational& c) const { return field_.is_rationals() ? c : field_.normalize(c); }

SparseVector Reducer::normalized(SparseVector v) const {
  if (field_.is_rationals()) return v;
  SparseVector out;
  for (auto& t : v) {
    t.coeff = field_.normalize(t.coeff);
    if (t.coeff != 0) out.push_back(std::move(t));
  }
  return out;
}

void Reducer::make_monic(SparseVector& v) const {
  if (v.empty() || v.front().coeff == 1) return;
  const Rational inv = norm(1 / v.front().coeff);
  for (auto& t : v) t.coeff = norm(t.coeff * inv);
}

SparseVector Reducer::subtract_multiple(const SparseVector& p, std::size_t from, const Rational& c, const Monomial& m,
                                        const SparseVector& g, std::size_t g_from) const {
  SparseVector out;
  out.reserve(p.size() - from + g.size() - g_from);
  std::size_t i = from, j = g_from;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    ModuleTerm scaled{g[j].monomial * m, g[j].component, 0, Rational()};
    scaled.degree = order_.degree(scaled.monomial, scaled.component);
    if (i == p.size()) {
      scaled.coeff = norm(-c * g[j].coeff);
      out.push_back(std::move(scaled));
      ++j;
      continue;
    }
    const auto cmp = order_.compare(p[i], scaled);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      scaled.coeff = norm(-c * g[j].coeff);
      out.push_back(std::move(scaled));
      ++j;
    } else {
      Rational v = norm(p[i].coeff - c * g[j].coeff);
      if (v != 0) {
        scaled.coeff = std::move(v);
        out.push_back(std::move(scaled));
      }
      ++i;
      ++j;
    }
  }
  return out;
}

const SparseVector* Reducer::find_reducer(const ModuleTerm& t) const {
  if (t.component >= by_component_.size()) return nullptr;
  for (std::size_t idx : by_component_[t.component]) {
    const SparseVector& g = basis_[idx];
    if (g.front().monomial.divides(t.monomial)) return &g;
  }
  return nullptr;
}

SparseVector Reducer::top_reduce(SparseVector p) const {
  while (!p.empty()) {
    const SparseVector* g = find_reducer(p.front());
    if (!g) break;
    // Elements are monic.
    const Monomial m = p.front().monomial.quotient(g->front().monomial);
    p = subtract_multiple(p, 1, p.front().coeff, m, *g, 1);
  }
  return p;
}

SparseVector Reducer::full_reduce(SparseVector p) const {
  SparseVector done;
  std::size_t i = 0;
  while (i < p.size()) {
    const SparseVector* g = find_reducer(p[i]);
    if (!g) {
      done.push_back(p[i++]);
      continue;
    }
    const Monomial m = p[i].monomial.quotient(g->front().monomial);
    const Rational c = p[i].coeff;
    p = subtract_multiple(p, i + 1, c, m, *g, 1);
    i = 0;
  }
  return done;
}

std::size_t Reducer::add(SparseVector v) {
  make_monic(v);
  const std::size_t c = v.front().component;
  if (by_component_.size() <= c) by_component_.resize(c + 1);
  by_component_[c].push_back(basis_.size());
  basis_.push_back(std::move(v));
  return basis_.size() - 1;
}

void Reducer::rebuild_index() {
  by_component_.clear();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t c = basis_[i].front().component;
    if (by_component_.size() <= c) by_component_.resize(c + 1);
    by_component_[c].push_back(i);
  }
}

SparseVector Reducer::s_vector(std::size_t i, std::size_t j) const {
  const SparseVector& a = basis_[i];
  const SparseVector& b = basis_[j];
  const Monomial l = a.front().monomial.lcm(b.front().monomial);
  const Monomial ma = l.quotient(a.front().monomial);
  const Monomial mb = l.quotient(b.front().monomial);
  SparseVector left;
  for (std::size_t k = 1; k < a.size(); ++k) {
    ModuleTerm t{a[k].monomial * ma, a[k].component, 0, a[k].coeff};
    t.degree = order_.degree(t.monomial, t.component);
    left.push_back(std::move(t));
  }
  return subtract_multiple(left, 0, Rational(1), mb, b, 1);
}

void Reducer::interreduce() {
  // Drop elements whose leading term is divisible by another's, then tail-reduce.
  rebuild_index();
  std::vector<SparseVector> kept;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    bool redundant = false;
    for (std::size_t j : by_component_[basis_[i].front().component]) {
      if (i == j || !basis_[j].front().monomial.divides(basis_[i].front().monomial)) continue;
      // Equal leading terms cannot occur; keep the divisor.
      redundant = basis_[j].front().monomial != basis_[i].front().monomial || j < i;
      if (redundant) break;
    }
    if (!redundant) kept.push_back(basis_[i]);
  }
  basis_ = std::move(kept);
  std::sort(basis_.begin(), basis_.end(),
            [&](const SparseVector& a, const SparseVector& b) { return order_.compare(a.front(), b.front()) < 0; });
  rebuild_index();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    SparseVector& g = basis_[i];
    SparseVector tail(g.begin() + 1, g.end());
    // Reduce the tail by every other element; leading terms stay put.
    SparseVector reduced;
    reduced.push_back(g.front());
    const SparseVector rest = full_reduce(std::move(tail));
    reduced.insert(reduced.end(), rest.begin(), rest.end());
    g = std::move(reduced);
  }
}

}  // namespace detail

namespace {

struct Pair {
  std::size_t i, j;
};

struct BuchbergerResult {
  std::vector<SparseVector> elements;
  std::vector<std::size_t> minimal;
  bool complete = true;
};

class Buchberger {
 public:
  explicit Buchberger(const BuchbergerInput& in) : in_(in), red_(in.order, in.field) {}

  BuchbergerResult run() {
    BuchbergerResult out;
    const MonomialOrder& ord = in_.order;
    std::map<int, std::vector<SparseVector>> relation_items;
    for (const auto& r : in_.relations) {
      if (r.nvars() != ord.nvars()) throw std::invalid_argument("relation has the wrong number of variables");
      const MultiPoly rn = r.normalized(in_.field);
      if (rn.is_zero()) continue;
      for (std::size_t k = 0; k < ord.rank(); ++k) {
        SparseVector s;
        for (const auto& [m, c] : rn.terms()) s.push_back(ord.make_term(m, k, c));
        std::sort(s.begin(), s.end(), [&](const ModuleTerm& a, const ModuleTerm& b) { return ord.compare(a, b) > 0; });
        const auto d = vector_degree(s);
        if (!d) throw std::invalid_argument("relation is not homogeneous");
        relation_items[*d].push_back(std::move(s));
      }
    }
    std::map<int, std::vector<std::pair<std::size_t, SparseVector>>> generators;
    const std::size_t dense = in_.generators.size();
    for (std::size_t g = 0; g < dense + in_.sparse_generators.size(); ++g) {
      SparseVector s = red_.normalized(g < dense ? to_sparse(in_.generators[g], ord) : in_.sparse_generators[g - dense]);
      if (s.empty()) continue;
      const auto d = vector_degree(s);
      if (!d) throw std::invalid_argument("generator " + std::to_string(g) + " is not homogeneous");
      generators[*d].emplace_back(g, std::move(s));
    }

    bool complete = true;
    for (;;) {
      std::optional<int> next;
      auto consider = [&](auto& m) {
        if (!m.empty() && (!next || m.begin()->first < *next)) next = m.begin()->first;
      };
      consider(relation_items);
      consider(generators);
      consider(pairs_);
      if (!next) break;
      const int deg = *next;
      if (in_.max_degree && deg > *in_.max_degree) {
        complete = false;
        break;
      }
      if (auto it = relation_items.find(deg); it != relation_items.end()) {
        for (auto& v : it->second) insert(red_.top_reduce(std::move(v)));
        relation_items.erase(it);
      }
      if (auto it = pairs_.find(deg); it != pairs_.end()) {
        std::vector<Pair> batch = std::move(it->second);
        pairs_.erase(it);
        for (const Pair& p : batch) {
          pending_.erase({p.i, p.j});
          if (chain_criterion(p)) continue;
          insert(red_.top_reduce(red_.s_vector(p.i, p.j)));
        }
      }
      if (auto it = generators.find(deg); it != generators.end()) {
        for (auto& [index, v] : it->second) {
          if (insert(red_.top_reduce(std::move(v)))) out.minimal.push_back(index);
        }
        generators.erase(it);
      }
    }
    red_.interreduce();
    out.elements = red_.basis();
    out.complete = complete;
    return out;
  }

  detail::Reducer& reducer() { return red_; }

 private:
  bool insert(SparseVector v) {
    if (v.empty()) return false;
    const std::size_t idx = red_.add(std::move(v));
    const auto& basis = red_.basis();
    const ModuleTerm& lead = basis[idx].front();
    if (same_component_.size() <= lead.component) same_component_.resize(lead.component + 1);
    std::vector<std::size_t>& peers = same_component_[lead.component];
    for (std::size_t k : peers) {
      const ModuleTerm& other = basis[k].front();
      // Coprime leading monomials give a zero S-vector only for ideals.
      if (in_.order.rank() == 1 && lead.monomial.coprime(other.monomial)) continue;
      const int deg = in_.order.degree(lead.monomial.lcm(other.monomial), lead.component);
      pairs_[deg].push_back({k, idx});
      pending_.insert({k, idx});
    }
    peers.push_back(idx);
    return true;
  }

  bool is_pending(std::size_t a, std::size_t b) const {
    return pending_.count({std::min(a, b), std::max(a, b)}) > 0;
  }

  bool chain_criterion(const Pair& p) const {
    const auto& basis = red_.basis();
    const Monomial l = basis[p.i].front().monomial.lcm(basis[p.j].front().monomial);
    for (std::size_t k : same_component_[basis[p.i].front().component]) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k].front().monomial.divides(l)) continue;
      if (!is_pending(p.i, k) && !is_pending(p.j, k)) return true;
    }
    return false;
  }

  const BuchbergerInput& in_;
  detail::Reducer red_;
  std::map<int, std::vector<Pair>> pairs_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
  std::vector<std::vector<std::size_t>> same_component_;
};

}  // namespace

GroebnerBasis buchberger(const BuchbergerInput& input) {
  Buchberger run(input);
  BuchbergerResult r = run.run();
  GroebnerBasis out;
  out.order_ = input.order;
  out.field_ = input.field;
  out.elements_ = std::move(r.elements);
  out.minimal_ = std::move(r.minimal);
  out.max_degree_ = input.max_degree;
  out.complete_ = r.complete;
  out.reducer_ = std::make_shared<const detail::Reducer>(std::move(run.reducer()));
  return out;
}

GroebnerBasis basis_from_elements(const MonomialOrder& order, const Field& field, std::vector<SparseVector> elements) {
  GroebnerBasis out;
  out.order_ = order;
  out.field_ = field;
  out.elements_ = std::move(elements);
  auto r = std::make_shared<detail::Reducer>(order, field);
  for (const auto& e : out.elements_) r->add(e);
  out.reducer_ = std::move(r);
  return out;
}

std::vector<ModuleVector> GroebnerBasis::vectors() const {
  std::vector<ModuleVector> out;
  for (const auto& e : elements_) out.push_back(to_module_vector(e, order_));
  return out;
}

SparseVector GroebnerBasis::reduce(const SparseVector& v) const {
  if (reducer_) return reducer_->full_reduce(reducer_->normalized(v));
  detail::Reducer r(order_, field_);
  return r.full_reduce(r.normalized(v));
}

ModuleVector GroebnerBasis::normal_form(const ModuleVector& v) const {
  return to_module_vector(reduce(to_sparse(v, order_)), order_);
}

bool GroebnerBasis::contains(const ModuleVector& v) const { return reduce(to_sparse(v, order_)).empty(); }

std::vector<ModuleTerm> GroebnerBasis::leading_terms() const {
  std::vector<ModuleTerm> out;
  for (const auto& e : elements_) {
    ModuleTerm t = e.front();
    t.coeff = 1;
    out.push_back(std::move(t));
  }
  return out;
}

bool GroebnerBasis::verify() const {
  detail::Reducer r(order_, field_);
  for (const auto& e : elements_) r.add(e);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      if (elements_[i].front().component != elements_[j].front().component) continue;
      if (!r.full_reduce(r.s_vector(i, j)).empty()) return false;
    }
  }
  return true;
}

ModuleVector normal_form(const ModuleVector& v, const GroebnerBasis& gb) { return gb.normal_form(v); }

}  // namespace lcext
