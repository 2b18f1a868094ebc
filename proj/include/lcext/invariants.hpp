#pragma once

// Laurent coefficients f^j around t = 1, the rational functions phi and chi,
// multiplicities, and checkers for the Ext/Tor identities built on them.

#include <lcext/homalg.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lcext {

/// Coefficients of a truncated expansion, read out through index `last`.
LaurentExpansion expand_through(const HilbertRational& h, Center center, int last);

int ring_dimension(const RingPresentation& r);

/// [h]_1 = sum_j f^j / (1-t)^{d-j}; f^j = 0 for j < 0.
struct LaurentCoefficients {
  int ring_dimension = 0;
  /// f^0 .. f^count
  std::vector<Rational> f;
  /// Coefficients of (1-t)^{j-d} for j < 0; nonzero only when the pole exceeds d.
  std::vector<Rational> below_zero;

  Rational at(int j) const;
};

LaurentCoefficients laurent_coeffs(const HilbertRational& h, int d, int count);
LaurentCoefficients laurent_coeffs(const ModulePresentation& m, int count);

/// H_N = e(t) / (1-t)^n over a standard graded ring.
struct MultiplicityData {
  LaurentPolynomial e;
  int n = 0;
  Integer multiplicity;
};

/// Throws std::invalid_argument unless every variable has weight 1.
MultiplicityData multiplicity_poly(const ModulePresentation& n);

/// H_M(1/t) H_N(t) / H_R(1/t)
HilbertRational phi(const ModulePresentation& m, const ModulePresentation& n);
/// H_M(t) H_N(t) / H_R(t)
HilbertRational chi(const ModulePresentation& m, const ModulePresentation& n);

/// sum_{i <= j} (-1)^i f^j(Ext^i); throws std::invalid_argument if the table stops before j.
Rational epsilon(const ExtSeriesTable& ext, int d, int j);
Rational epsilon(const ModulePresentation& m, const ExtSeriesTable& ext, int j);

enum class Verdict { Holds, Fails, HypothesisNotCertified };
std::string verdict_name(Verdict v);

using ReportValue = std::variant<Rational, HilbertRational, LaurentExpansion>;
std::string render_value(const ReportValue& v);

struct VerificationReport {
  std::string identity;
  ReportValue lhs;
  ReportValue rhs;
  Verdict verdict = Verdict::Fails;
  std::vector<std::string> hypotheses;
  std::vector<std::string> caveats;
  /// Extra labelled lines, e.g. per-index orders.
  std::vector<std::pair<std::string, std::string>> details;

  std::string to_text() const;
  std::string to_json() const;
};

enum class Theorem1Mode { Auto, Exact, FiniteLength, Periodic };

/// Ext^{i + period} = t^{-shift} Ext^i for all tabulated i >= start.
struct PeriodicTail {
  int start = 0;
  int period = 1;
  int shift = 0;
};

/// Smallest (start, period) with period <= 2 seen over at least two full
/// periods of the table, or nullopt.
std::optional<PeriodicTail> detect_periodic_tail(const ExtSeriesTable& ext);

/// Auto picks Exact when vanishing is certified and FiniteLength when N has
/// finite length; otherwise throws std::invalid_argument.
VerificationReport check_theorem1(const ModulePresentation& m, const ModulePresentation& n, const ExtSeriesTable& ext,
                                  Theorem1Mode mode = Theorem1Mode::Auto, int trunc = kDefaultTerms,
                                  std::optional<PeriodicTail> tail = std::nullopt);

/// Throws std::invalid_argument unless N has finite length.
VerificationReport check_prop2(const ModulePresentation& m, const ModulePresentation& n, int max_i, int trunc);

/// -1 when not even level 0 agrees; max_level + 1 when every level through max_level agrees.
int agreement_level(const ModulePresentation& m, const ModulePresentation& n, const ExtSeriesTable& ext,
                    int max_level);

enum class Identity { Eq40, Eq41, Eq42, Eq61, Eq62, BC1 };
std::string identity_name(Identity which);
std::optional<Identity> parse_identity(std::string_view name);

/// User-asserted facts about R, recorded in reports and never checked.
struct Hypotheses {
  bool domain = false;
  bool ufd = false;
  std::optional<int> regular_in_codim;

  std::vector<std::string> describe() const;
};

/// For Eq61 and Eq62, N must be R itself.
VerificationReport check_identity(const ModulePresentation& m, const ModulePresentation& n, Identity which,
                                  const ExtSeriesTable& ext, const Hypotheses& hypotheses = {});

struct BassBound {
  bool divisible = false;
  LaurentPolynomial quotient;
  int q = 0;
  int p = 0;
  /// (d - n + q - 1) / (q (p - 1))
  Rational exponent;
  /// p^exponent when the exponent is an integer.
  std::optional<Integer> value;

  std::string to_string() const;
};

inline constexpr const char* kTheorem4Caveat =
    "q is taken over divisors sum_{s < p^r} t^s; the sum up to s = p^r would exclude q = 1 "
    "and contradict the p = 2, q = 1 bound when -1 is not a root";

/// Divisibility of e_N(t) by e_R(1/t) in Z[t, 1/t] and the resulting lower bound for sum_i mu^i.
BassBound bass_bound(const LaurentPolynomial& e_n, const LaurentPolynomial& e_r, int p, int d, int n);

struct CanonicalSeries {
  HilbertRational series;
  bool verified = false;
  /// Set in verify mode.
  std::optional<HilbertRational> ext_series;
  bool ext_matches = false;
  bool free_formula_holds = false;
};

/// (-1)^d H_R(1/t). In verify mode also computes Ext^{e-d}_Q(R, Q(-sum d_i))
/// over the ambient ring and checks the alternating Ext sum for free Q(b).
CanonicalSeries canonical_hilbert(const RingPresentation& r, bool verify);

}  // namespace lcext
