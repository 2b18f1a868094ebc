#pragma once

// Weighted polynomial rings Q = K[X_1..X_e] with deg X_j = d_j, sparse
// polynomials, graded free modules and matrices, and presentations of
// rings R = Q/I and of graded R-modules as cokernels.

#include <lcext/ratfun.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lcext {

/// The coefficient field: the rationals (characteristic 0) or F_p.
///
/// Elements are always carried as rationals; over F_p they are kept reduced
/// to integer representatives in [0, p).
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  bool is_rationals() const { return p_ == 0; }
  Rational normalize(const Rational& x) const;
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint32_t p_ = 0;
};

class WeightedRingSpec {
 public:
  WeightedRingSpec() = default;
  WeightedRingSpec(std::vector<std::string> variables, std::vector<int> weights, Field field = {});
  /// n variables x1..xn of weight 1.
  static WeightedRingSpec standard(std::size_t n);

  std::size_t size() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<int>& weights() const { return weights_; }
  int weight(std::size_t i) const { return weights_.at(i); }
  const Field& field() const { return field_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool is_standard() const;
  int weight_sum() const;

  friend bool operator==(const WeightedRingSpec&, const WeightedRingSpec&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<int> weights_;
  Field field_;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exponents);
  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }
  bool is_one() const;
  int weighted_degree(const std::vector<int>& weights) const;
  int total_degree() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// this / other; requires other | this.
  Monomial quotient(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

/// Sparse polynomial over the rationals in a fixed number of variables.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}
  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly monomial(const Monomial& m, const Rational& c = 1);
  static MultiPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& c);
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  MultiPoly operator-() const;
  MultiPoly times_monomial(const Monomial& m) const;
  /// Coefficients mapped through the field (reduction mod p).
  MultiPoly normalized(const Field& field) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string(const WeightedRingSpec& spec) const;

 private:
  void check_compatible(const MultiPoly& o) const;

  std::size_t nvars_ = 0;
  std::map<Monomial, Rational> terms_;
};

/// Common weighted degree of all terms, or nullopt when p is inhomogeneous.
/// Throws std::invalid_argument for the zero polynomial.
std::optional<int> weighted_degree(const MultiPoly& p, const WeightedRingSpec& spec);

/// Generator k has degree degrees[k]; the module is sum_k Q(-degrees[k]).
struct GradedFreeModule {
  std::vector<int> degrees;

  std::size_t rank() const { return degrees.size(); }
  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b);

/// Hilbert series sum_k t^{a_k} / prod_j (1 - t^{d_j}) of a graded free Q-module.
HilbertRational free_hilbert(const GradedFreeModule& f, const WeightedRingSpec& spec);

/// r x c matrix of polynomials representing a degree-0 map
/// sum_j Q(-colDegrees[j]) -> sum_i Q(-rowDegrees[i]).
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(std::size_t nvars, std::vector<int> row_degrees, std::vector<int> col_degrees);
  GradedMatrix(std::size_t nvars, std::vector<int> row_degrees, std::vector<int> col_degrees,
               const std::vector<std::vector<MultiPoly>>& rows);

  std::size_t rows() const { return row_degrees_.size(); }
  std::size_t cols() const { return col_degrees_.size(); }
  std::size_t nvars() const { return nvars_; }
  const std::vector<int>& row_degrees() const { return row_degrees_; }
  const std::vector<int>& col_degrees() const { return col_degrees_; }
  GradedFreeModule source() const { return {col_degrees_}; }
  GradedFreeModule target() const { return {row_degrees_}; }

  const MultiPoly& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, MultiPoly p);
  /// Nonzero entries keyed by (column, row).
  const std::map<std::pair<std::size_t, std::size_t>, MultiPoly>& nonzero_entries() const { return entries_; }
  std::vector<MultiPoly> column(std::size_t j) const;

  /// First (row, col) violating the homogeneity invariant, if any.
  std::optional<std::pair<std::size_t, std::size_t>> inhomogeneous_entry(const WeightedRingSpec& spec) const;
  bool is_homogeneous(const WeightedRingSpec& spec) const { return !inhomogeneous_entry(spec).has_value(); }
  bool is_zero() const;
  /// True when some entry is a nonzero constant.
  bool has_unit_entry() const;

  GradedMatrix with_degrees(std::vector<int> row_degrees, std::vector<int> col_degrees) const;
  GradedMatrix shifted(int a) const;
  GradedMatrix transpose() const;

  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b);
  friend bool operator==(const GradedMatrix&, const GradedMatrix&) = default;

  std::string to_string(const WeightedRingSpec& spec) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<int> row_degrees_;
  std::vector<int> col_degrees_;
  std::map<std::pair<std::size_t, std::size_t>, MultiPoly> entries_;
  MultiPoly zero_;
};

/// R = Q / (relations). Every relation is homogeneous of positive degree.
class RingPresentation {
 public:
  RingPresentation() = default;
  explicit RingPresentation(WeightedRingSpec ambient, std::vector<MultiPoly> relations = {});

  const WeightedRingSpec& ambient() const { return ambient_; }
  const std::vector<MultiPoly>& relations() const { return relations_; }
  std::size_t nvars() const { return ambient_.size(); }
  bool is_polynomial_ring() const { return relations_.empty(); }
  /// The polynomial ring Q itself.
  RingPresentation ambient_ring() const { return RingPresentation(ambient_); }

  friend bool operator==(const RingPresentation&, const RingPresentation&) = default;

 private:
  WeightedRingSpec ambient_;
  std::vector<MultiPoly> relations_;
};

/// M = coker(presentation) over R, i.e. F_0 / (image + I F_0) with
/// F_0 = sum_i Q(-rowDegrees[i]).
class ModulePresentation {
 public:
  ModulePresentation() = default;
  ModulePresentation(RingPresentation ring, GradedMatrix presentation);

  /// Free module sum_k R(-degrees[k]).
  static ModulePresentation free(const RingPresentation& ring, std::vector<int> degrees);
  /// R itself.
  static ModulePresentation ring_module(const RingPresentation& ring) { return free(ring, {0}); }
  /// K = R / R_+ presented by the variables.
  static ModulePresentation residue_field(const RingPresentation& ring);
  /// R / (generators) for homogeneous ring elements.
  static ModulePresentation cyclic_quotient(const RingPresentation& ring, const std::vector<MultiPoly>& generators);

  const RingPresentation& ring() const { return ring_; }
  const GradedMatrix& presentation() const { return presentation_; }
  const std::vector<int>& generator_degrees() const { return presentation_.row_degrees(); }

 private:
  RingPresentation ring_;
  GradedMatrix presentation_;
};

/// M(a), with M(a)_n = M_{a+n}.
ModulePresentation twist(const ModulePresentation& m, int a);
ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b);

/// Error raised by the polynomial expression parser; offset is into the parsed text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset) : std::invalid_argument(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses sums of products of variables, integer/rational constants, powers
/// and parentheses, e.g. "x*v - y*u", "2*x^2 - (y + u)*v", "1/2*x".
MultiPoly parse_polynomial(std::string_view text, const WeightedRingSpec& spec);

}  // namespace lcext
