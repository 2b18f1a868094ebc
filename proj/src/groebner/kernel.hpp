#pragma once

// Reduction machinery shared by Buchberger and the normal-form queries.

#include <lcext/groebner.hpp>

namespace lcext::detail {

class Reducer {
 public:
  Reducer(const MonomialOrder& order, const Field& field);

  const std::vector<SparseVector>& basis() const { return basis_; }
  /// Makes v monic and appends it; returns its index.
  std::size_t add(SparseVector v);

  SparseVector normalized(SparseVector v) const;
  void make_monic(SparseVector& v) const;
  /// Reduces until the leading term is irreducible.
  SparseVector top_reduce(SparseVector p) const;
  /// Reduces every term.
  SparseVector full_reduce(SparseVector p) const;
  /// S-vector of basis elements i and j.
  SparseVector s_vector(std::size_t i, std::size_t j) const;
  /// Minimal, tail-reduced, sorted by increasing leading term.
  void interreduce();

  /// p[from..] - c * m * g[g_from..]
  SparseVector subtract_multiple(const SparseVector& p, std::size_t from, const Rational& c, const Monomial& m,
                                 const SparseVector& g, std::size_t g_from) const;

 private:
  Rational norm(const Rational& c) const;
  const SparseVector* find_reducer(const ModuleTerm& t) const;
  void rebuild_index();

  MonomialOrder order_;
  Field field_;
  std::vector<SparseVector> basis_;
  std::vector<std::vector<std::size_t>> by_component_;
};

}  // namespace lcext::detail
