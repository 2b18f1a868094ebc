#pragma once

// Brute-force degreewise linear algebra over the coefficient field: graded
// pieces of presented modules as quotients of spans of (generator, monomial)
// pairs, with no Gröbner bases involved.

#include <lcext/resolve.hpp>

#include <map>
#include <tuple>
#include <vector>

namespace oracle {

using lcext::Monomial;
using lcext::Rational;

/// Monomials of weighted degree m, in no particular order.
std::vector<Monomial> monomials_of_degree(const std::vector<int>& weights, int m);

/// Sparse vector over an ordered coordinate set.
template <class Key>
using SparseVec = std::map<Key, Rational>;

/// Row echelon form keyed by leading (largest) coordinate.
template <class Key>
class Echelon {
 public:
  explicit Echelon(lcext::Field field) : field_(field) {}

  /// Reduces v completely; the result is canonical modulo the span.
  SparseVec<Key> reduce(SparseVec<Key> v) const;
  /// Adds v to the span; returns false when it was already there.
  bool insert(SparseVec<Key> v);
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(const Key& k) const { return rows_.count(k) > 0; }

 private:
  lcext::Field field_;
  std::map<Key, SparseVec<Key>> rows_;
};

/// The graded pieces N_m of a presented module N = T / (im P + I T).
class ModuleStrands {
 public:
  using Key = std::pair<std::size_t, Monomial>;

  explicit ModuleStrands(const lcext::ModulePresentation& n);

  const lcext::ModulePresentation& module() const { return n_; }
  std::size_t dim(int m);
  /// Coordinates (g, mu) of T_m that are not pivots; they form a basis of N_m.
  std::vector<Key> standard_basis(int m);
  /// Canonical representative in N_m of sum_g p_g e_g, homogeneous of degree m.
  SparseVec<Key> reduce(int m, const std::vector<lcext::MultiPoly>& element);
  /// Canonical representative of mono * e_g.
  SparseVec<Key> reduce_term(int m, const lcext::MultiPoly& coeff, std::size_t g, const Monomial& mono);

 private:
  const Echelon<Key>& relations(int m);

  lcext::ModulePresentation n_;
  std::map<int, Echelon<Key>> cache_;
  std::map<int, std::size_t> dims_;
};

/// dim_K [Ext^i(M, N)]_n from the degree-n strand of Hom(F_., N).
std::size_t ext_strand(const lcext::FreeResolution& res, ModuleStrands& n, int i, int degree);
/// dim_K [Tor_i(M, N)]_n from the degree-n strand of F_. (x) N.
std::size_t tor_strand(const lcext::FreeResolution& res, ModuleStrands& n, int i, int degree);

}  // namespace oracle
