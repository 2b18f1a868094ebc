#pragma once

// Buchberger's algorithm for homogeneous submodules of graded free modules
// over a weighted polynomial ring, normal forms, syzygies and Hilbert
// numerators of monomial submodules.

#include <lcext/polyring.hpp>

#include <compare>
#include <memory>
#include <optional>
#include <vector>

namespace lcext {

namespace detail {
class Reducer;
}

/// c * monomial * e_component; degree caches weighted deg(monomial) + deg(e_component).
struct ModuleTerm {
  Monomial monomial;
  std::size_t component = 0;
  int degree = 0;
  Rational coeff;
};

/// Weighted degree reverse lexicographic order extended term-over-position to
/// a free module; components below `split` form an elimination block that
/// dominates every term of the remaining components.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(std::vector<int> weights, std::vector<int> generator_degrees, std::size_t split = 0);

  const std::vector<int>& weights() const { return weights_; }
  const std::vector<int>& generator_degrees() const { return generator_degrees_; }
  std::size_t rank() const { return generator_degrees_.size(); }
  std::size_t nvars() const { return weights_.size(); }
  std::size_t split() const { return split_; }

  int degree(const Monomial& m, std::size_t component) const;
  ModuleTerm make_term(Monomial m, std::size_t component, Rational coeff) const;
  /// Compares a * e_ca with b * e_cb using cached degrees.
  std::strong_ordering compare(const ModuleTerm& a, const ModuleTerm& b) const;
  std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) const;

 private:
  std::vector<int> weights_;
  std::vector<int> generator_degrees_;
  std::size_t split_ = 0;
};

/// Terms in strictly decreasing order, no zero coefficients.
using SparseVector = std::vector<ModuleTerm>;
/// One polynomial per free generator.
using ModuleVector = std::vector<MultiPoly>;

SparseVector to_sparse(const ModuleVector& v, const MonomialOrder& order);
/// Column j of a, with its rows as components offset by `first`.
SparseVector sparse_column(const GradedMatrix& a, std::size_t j, const MonomialOrder& order, std::size_t first = 0);
ModuleVector to_module_vector(const SparseVector& v, const MonomialOrder& order);
/// The common degree of a nonzero vector, or nullopt when it is inhomogeneous.
std::optional<int> vector_degree(const SparseVector& v);

struct BuchbergerInput {
  MonomialOrder order;
  Field field;
  std::vector<ModuleVector> generators;
  /// Further generators already in sparse form under `order`, numbered after `generators`.
  std::vector<SparseVector> sparse_generators;
  /// Ring relations; relation * e_k is added for every component k.
  std::vector<MultiPoly> relations;
  /// Ignore S-pairs and generators above this degree.
  std::optional<int> max_degree;
};

class GroebnerBasis {
 public:
  const MonomialOrder& order() const { return order_; }
  const Field& field() const { return field_; }
  const std::vector<SparseVector>& elements() const { return elements_; }
  std::vector<ModuleVector> vectors() const;
  /// False when work above max_degree was skipped.
  bool complete() const { return complete_; }
  std::optional<int> max_degree() const { return max_degree_; }
  /// Indices of input generators that were not in the span of everything
  /// processed before them; together they minimally generate the submodule
  /// modulo the relations.
  const std::vector<std::size_t>& minimal_generators() const { return minimal_; }

  SparseVector reduce(const SparseVector& v) const;
  ModuleVector normal_form(const ModuleVector& v) const;
  bool contains(const ModuleVector& v) const;
  /// Leading terms (coefficient 1) of the elements.
  std::vector<ModuleTerm> leading_terms() const;
  /// Re-checks that every S-pair reduces to zero.
  bool verify() const;

 private:
  friend GroebnerBasis buchberger(const BuchbergerInput& input);
  friend GroebnerBasis basis_from_elements(const MonomialOrder&, const Field&, std::vector<SparseVector>);

  MonomialOrder order_;
  Field field_;
  std::vector<SparseVector> elements_;
  std::vector<std::size_t> minimal_;
  std::optional<int> max_degree_;
  bool complete_ = true;
  /// Index over elements_, shared between copies.
  std::shared_ptr<const detail::Reducer> reducer_;
};

/// Reduced Groebner basis of the submodule spanned by the generators and the
/// relations times every free generator. Throws std::invalid_argument on
/// inhomogeneous generators.
GroebnerBasis buchberger(const BuchbergerInput& input);

/// Full normal form of v with respect to gb.
ModuleVector normal_form(const ModuleVector& v, const GroebnerBasis& gb);

/// Homogeneous generators of the syzygies over R = Q/I of the columns of a,
/// as the columns of a matrix whose row degrees are a's column degrees.
/// Entries are reduced modulo I. With minimal = false every nonzero
/// elimination-basis syzygy is kept, which generally is not minimal. With
/// max_degree, syzygies above it are not computed.
GradedMatrix syzygy_matrix(const RingPresentation& ring, const GradedMatrix& a,
                           std::optional<int> max_degree = std::nullopt, bool minimal = true);

/// Minimal generators of the submodule of F spanned by the columns of a
/// modulo I F: the subset of columns needed, in order.
std::vector<std::size_t> minimal_columns(const RingPresentation& ring, const GradedMatrix& a);

/// Groebner basis of im(a) + I F inside the target F of a.
GroebnerBasis image_basis(const RingPresentation& ring, const GradedMatrix& a,
                          std::optional<int> max_degree = std::nullopt);

/// q(t) with H(F / L) = q(t) / prod_j (1 - t^{d_j}) for the monomial submodule
/// L spanned by the given terms (coefficients ignored) in the free module
/// with the given generator degrees.
LaurentPolynomial monomial_hilbert_numerator(const std::vector<ModuleTerm>& leading_terms,
                                             const std::vector<int>& weights,
                                             const std::vector<int>& generator_degrees);

}  // namespace lcext
