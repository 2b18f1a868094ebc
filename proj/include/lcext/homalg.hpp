#pragma once

// Hilbert series of presented modules and of graded Ext and Tor, computed
// from a free resolution of the first argument and Gröbner leading terms.

#include <lcext/resolve.hpp>

#include <map>
#include <utility>
#include <vector>

namespace lcext {

/// H of coker(a) over R = Q/I, i.e. of F / (im a + I F).
HilbertRational cokernel_hilbert(const RingPresentation& ring, const GradedMatrix& a);
HilbertRational module_hilbert(const ModulePresentation& m);

/// Pole order at t = 1, the Krull dimension of a module with series h.
/// Zero for the zero series.
int pole_order_at_one(const HilbertRational& h);

/// The free module Hom(F, N) = sum_k N(a_k) for F = sum_k R(-a_k), presented
/// with generators e_(k,g) of degree deg g - a_k, indexed k * rank N + g.
GradedMatrix hom_presentation(const GradedFreeModule& f, const ModulePresentation& n);
/// d^*: Hom(F_i, N) -> Hom(F_{i+1}, N) for d: F_{i+1} -> F_i, as the images
/// of the generators e_(k,g).
GradedMatrix hom_dual(const GradedMatrix& d, const ModulePresentation& n);
/// F (x) N = sum_k N(-a_k), generators e_(k,g) of degree a_k + deg g.
GradedMatrix tensor_presentation(const GradedFreeModule& f, const ModulePresentation& n);
/// d (x) N: F_{i+1} (x) N -> F_i (x) N.
GradedMatrix tensor_map(const GradedMatrix& d, const ModulePresentation& n);

/// Throws std::invalid_argument when a truncated resolution stops before d_{i+1}.
HilbertRational ext_hilbert(const FreeResolution& res, const ModulePresentation& n, int i);
HilbertRational ext_hilbert(const ModulePresentation& m, const ModulePresentation& n, int i);
HilbertRational tor_hilbert(const FreeResolution& res, const ModulePresentation& n, int i);
HilbertRational tor_hilbert(const ModulePresentation& m, const ModulePresentation& n, int i);

struct ExtSeriesTable {
  std::map<int, HilbertRational> entries;
  int computed_through = -1;
  /// Set only when the resolution of M stops at or before computed_through.
  bool vanishing_certified = false;

  const HilbertRational& at(int i) const;
};

ExtSeriesTable ext_table(const ModulePresentation& m, const ModulePresentation& n, int max_i);

/// (i, mu^i) for i = 0..max_i at the irrelevant ideal. Throws std::logic_error
/// if some Ext^i(K, N) fails to have finite length.
std::vector<std::pair<int, Integer>> bass_numbers(const ModulePresentation& n, int max_i);

/// f^0(M) / f^0(R); meaningful when R is a domain, which is not checked.
Rational rank_over_domain(const ModulePresentation& m);

}  // namespace lcext
