#pragma once

// Graded free resolutions over R = Q/I: iterated syzygies, unit-entry
// minimalization, and 2-periodic resolutions from matrix factorizations.

#include <lcext/groebner.hpp>

#include <string>
#include <vector>

namespace lcext {

/// ... -> F_2 -d_2-> F_1 -d_1-> F_0 with matrices over the ambient ring,
/// read modulo I. differentials[i - 1] is d_i.
struct FreeResolution {
  RingPresentation ring;
  std::vector<GradedFreeModule> modules;
  std::vector<GradedMatrix> differentials;
  bool minimal = false;
  /// True unless the resolution is known to stop after the last module.
  bool truncated = true;

  std::size_t length() const { return differentials.size(); }
  const GradedMatrix& d(std::size_t i) const { return differentials.at(i - 1); }
  const GradedFreeModule& F(std::size_t i) const { return modules.at(i); }

  /// One line per module, e.g. "F_2 = R(-2)^2"; with matrices, each d_i follows.
  std::string to_string(const std::string& ring_name = "R", bool with_matrices = false) const;
};

/// Minimal resolution F_0 <- ... <- F_max_step, stopping earlier when it terminates.
FreeResolution minimal_resolution(const ModulePresentation& m, int max_step);
/// Resolution from untrimmed elimination syzygies; generally not minimal.
FreeResolution nonminimal_resolution(const ModulePresentation& m, int max_step);
/// Splits off every unit entry; the result has the same cokernel and homology.
FreeResolution minimalize(FreeResolution res);
/// Removes unit entries of a presentation and redundant relations.
GradedMatrix minimal_presentation(const RingPresentation& ring, const GradedMatrix& a);

/// d_{i-1} d_i = 0 modulo I for every i.
bool is_complex(const FreeResolution& res);
/// True when some differential has a nonzero constant entry.
bool has_unit_entries(const FreeResolution& res);
/// sum_i (-1)^i sum_k t^{a_ik}; times H_R it is the Euler characteristic series.
LaurentPolynomial betti_polynomial(const FreeResolution& res);
/// Reduces every entry modulo I.
GradedMatrix reduce_modulo(const RingPresentation& ring, const GradedMatrix& a);

/// A B = B A = f Id over the ambient ring.
struct MatrixFactorizationPair {
  GradedMatrix a;
  GradedMatrix b;
  MultiPoly f;
};

/// d_1 = presentation of m0, then A, B, A, ... for 2 * periods further steps.
/// Generator degrees are read off the matrix entries. Throws
/// std::invalid_argument when the pair or the first composite fails.
FreeResolution mf_resolution(const MatrixFactorizationPair& pair, const ModulePresentation& m0, int periods);

}  // namespace lcext
