#include <lcext/homalg.hpp>

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "support/strand_oracle.hpp"

using namespace lcext;

namespace {

HilbertRational H(const std::string& s) {
  if (s.find('/') == std::string::npos) return HilbertRational::polynomial(LaurentPolynomial::parse(s));
  return HilbertRational::parse(s);
}

const WeightedRingSpec kS4({"x", "y", "u", "v"}, {1, 1, 1, 1});
const WeightedRingSpec kS6({"x", "y", "z", "u", "v", "w"}, std::vector<int>(6, 1));

RingPresentation quadric() { return RingPresentation(kS4, {parse_polynomial("x*v - y*u", kS4)}); }

RingPresentation scroll() {
  const auto p = [](const char* e) { return parse_polynomial(e, kS6); };
  return RingPresentation(kS6, {p("x*v - y*u"), p("x*w - u*z"), p("y*w - v*z")});
}

ModulePresentation quotient(const RingPresentation& r, std::initializer_list<const char*> gens) {
  std::vector<MultiPoly> g;
  for (const char* e : gens) g.push_back(parse_polynomial(e, r.ambient()));
  return ModulePresentation::cyclic_quotient(r, g);
}

// Random monomial-presented cyclic modules Q / (monomials) over Q[x, y].
ModulePresentation random_monomial_module(const RingPresentation& q, std::mt19937& rng) {
  std::uniform_int_distribution<int> count(0, 3), expo(0, 2);
  std::vector<MultiPoly> gens;
  const int k = count(rng);
  for (int j = 0; j < k; ++j) {
    std::vector<int> e(q.nvars());
    for (auto& x : e) x = expo(rng);
    if (Monomial(e).is_one()) e[0] = 1;
    gens.push_back(MultiPoly::monomial(Monomial(e)));
  }
  return ModulePresentation::cyclic_quotient(q, gens);
}

}  // namespace

TEST(ModuleHilbert, Examples) {
  const RingPresentation r = quadric();
  EXPECT_TRUE(equal(module_hilbert(ModulePresentation::ring_module(r)), H("(1 - t^2) / (1-t)^4")));
  EXPECT_TRUE(equal(module_hilbert(quotient(r, {"u", "v"})), H("(1) / (1-t)^2")));
  EXPECT_TRUE(equal(module_hilbert(ModulePresentation::ring_module(scroll())), H("(1 - 3t^2 + 2t^3) / (1-t)^6")));
  EXPECT_EQ(module_hilbert(ModulePresentation::ring_module(r)).to_string(), "(1 + t) / (1-t)^3");
}

TEST(ModuleHilbert, TwoRoutesAgreeOnFiniteResolutions) {
  const RingPresentation q(WeightedRingSpec({"x", "y", "z"}, {1, 2, 1}));
  std::mt19937 rng(7);
  for (int iter = 0; iter < 20; ++iter) {
    const ModulePresentation m = twist(random_monomial_module(q, rng), iter % 3 - 1);
    const FreeResolution res = minimal_resolution(m, 4);
    ASSERT_FALSE(res.truncated);
    HilbertRational euler;
    for (std::size_t i = 0; i < res.modules.size(); ++i) {
      const HilbertRational f = free_hilbert(res.F(i), q.ambient());
      euler = i % 2 == 0 ? euler + f : euler - f;
    }
    ASSERT_TRUE(equal(euler, module_hilbert(m)));
  }
}

TEST(ModuleHilbert, MatchesDegreewiseDimensions) {
  const RingPresentation r = scroll();
  const ModulePresentation m = quotient(r, {"u", "v", "w"});
  oracle::ModuleStrands strands(m);
  const LaurentExpansion e = laurent_expand(module_hilbert(m), Center::Zero, 9);
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(e.coefficient(n), Rational(strands.dim(n))) << n;
}

TEST(ExtHilbert, OneVariable) {
  const WeightedRingSpec s({"x"}, {1});
  const RingPresentation q(s);
  const ModulePresentation k = ModulePresentation::residue_field(q);
  const ModulePresentation free = ModulePresentation::ring_module(q);
  EXPECT_TRUE(ext_hilbert(k, free, 0).is_zero());
  EXPECT_TRUE(equal(ext_hilbert(k, free, 1), H("t^-1")));
  EXPECT_TRUE(ext_hilbert(k, free, 2).is_zero());
  EXPECT_TRUE(equal(ext_hilbert(k, k, 0), H("1")));
  EXPECT_TRUE(equal(ext_hilbert(k, k, 1), H("t^-1")));
}

TEST(ExtHilbert, QuadricSelfExt) {
  const RingPresentation r = quadric();
  const ModulePresentation m = quotient(r, {"u", "v"});
  const ExtSeriesTable table = ext_table(m, m, 6);
  EXPECT_FALSE(table.vanishing_certified);
  EXPECT_EQ(table.computed_through, 6);
  EXPECT_TRUE(equal(table.at(0), H("(1) / (1-t)^2")));
  EXPECT_TRUE(equal(table.at(1), H("(1) / (1-t)^2")));
  for (int i = 1; i <= 3; ++i) {
    EXPECT_TRUE(equal(table.at(2 * i), HilbertRational::polynomial(LaurentPolynomial::t_power(-2 * i)))) << i;
  }
  EXPECT_TRUE(table.at(3).is_zero());
  EXPECT_TRUE(table.at(5).is_zero());
}

TEST(ExtHilbert, ScrollHomAndExt) {
  const RingPresentation r = scroll();
  const ModulePresentation m = quotient(r, {"u", "v", "w"});
  const ModulePresentation rr = ModulePresentation::ring_module(r);
  const ExtSeriesTable table = ext_table(m, rr, 2);
  EXPECT_TRUE(table.at(0).is_zero());
  EXPECT_TRUE(equal(table.at(1), H("(1) / (1-t)^3")));
  EXPECT_TRUE(table.at(2).is_zero());
}

TEST(ExtHilbert, TruncatedResolutionIsRejected) {
  const RingPresentation r = quadric();
  const FreeResolution res = minimal_resolution(quotient(r, {"u", "v"}), 2);
  EXPECT_NO_THROW(ext_hilbert(res, ModulePresentation::ring_module(r), 1));
  EXPECT_THROW(ext_hilbert(res, ModulePresentation::ring_module(r), 2), std::invalid_argument);
}

TEST(ExtHilbert, FiniteResolutionCertifiesVanishing) {
  const RingPresentation q(WeightedRingSpec({"x", "y"}, {1, 1}));
  const ModulePresentation k = ModulePresentation::residue_field(q);
  EXPECT_FALSE(ext_table(k, k, 1).vanishing_certified);
  const ExtSeriesTable t = ext_table(k, k, 3);
  EXPECT_TRUE(t.vanishing_certified);
  EXPECT_TRUE(equal(t.at(2), H("t^-2")));
  EXPECT_TRUE(t.at(3).is_zero());
}

TEST(TorHilbert, Examples) {
  const RingPresentation q(WeightedRingSpec({"x"}, {1}));
  const ModulePresentation k = ModulePresentation::residue_field(q);
  EXPECT_TRUE(equal(tor_hilbert(k, k, 0), H("1")));
  EXPECT_TRUE(equal(tor_hilbert(k, k, 1), H("t")));
  EXPECT_TRUE(tor_hilbert(k, k, 2).is_zero());
  const RingPresentation r = quadric();
  const ModulePresentation m = quotient(r, {"u", "v"});
  EXPECT_TRUE(equal(tor_hilbert(m, m, 0), H("(1) / (1-t)^2")));
}

TEST(BassNumbers, Examples) {
  const RingPresentation q1(WeightedRingSpec({"x"}, {1}));
  using List = std::vector<std::pair<int, Integer>>;
  EXPECT_EQ(bass_numbers(ModulePresentation::ring_module(q1), 1), (List{{0, 0}, {1, 1}}));
  EXPECT_EQ(bass_numbers(ModulePresentation::residue_field(q1), 1), (List{{0, 1}, {1, 1}}));
  for (std::size_t d = 1; d <= 3; ++d) {
    const RingPresentation q(WeightedRingSpec::standard(d));
    const auto mu = bass_numbers(ModulePresentation::residue_field(q), static_cast<int>(d));
    Integer binom = 1;
    for (std::size_t i = 0; i <= d; ++i) {
      EXPECT_EQ(mu[i].second, binom) << d << " " << i;
      binom = binom * Integer(d - i) / Integer(i + 1);
    }
  }
}

TEST(RankOverDomain, Examples) {
  const RingPresentation r = quadric();
  const ModulePresentation rr = ModulePresentation::ring_module(r);
  EXPECT_EQ(rank_over_domain(rr), 1);
  EXPECT_EQ(rank_over_domain(quotient(r, {"u", "v"})), 0);
  EXPECT_EQ(rank_over_domain(direct_sum(twist(rr, -1), rr)), 2);
}

TEST(ExtProperty, DegreewiseOracle) {
  const RingPresentation r = quadric();
  const ModulePresentation m = quotient(r, {"u", "v"});
  const ModulePresentation k = ModulePresentation::residue_field(r);
  const FreeResolution res = minimal_resolution(m, 4);
  for (const ModulePresentation& n : {m, k, ModulePresentation::ring_module(r)}) {
    oracle::ModuleStrands strands(n);
    for (int i = 0; i <= 3; ++i) {
      const LaurentExpansion e = laurent_expand(ext_hilbert(res, n, i), Center::Zero, 20);
      for (int deg = -8; deg <= 8; ++deg) {
        ASSERT_EQ(e.coefficient(deg), Rational(oracle::ext_strand(res, strands, i, deg))) << i << " " << deg;
      }
    }
  }
}

TEST(TorProperty, DegreewiseOracleAndEulerIdentity) {
  const RingPresentation r = quadric();
  const ModulePresentation m = quotient(r, {"u", "v"});
  const ModulePresentation n = quotient(r, {"x", "u"});
  const FreeResolution res = minimal_resolution(m, 6);
  oracle::ModuleStrands strands(n);
  LaurentExpansion alt = laurent_expand(HilbertRational(), Center::Zero, 13);
  for (int i = 0; i <= 5; ++i) {
    const HilbertRational tor = tor_hilbert(res, n, i);
    const LaurentExpansion e = laurent_expand(tor, Center::Zero, 13);
    for (int deg = 0; deg <= 8; ++deg) {
      ASSERT_EQ(e.coefficient(deg), Rational(oracle::tor_strand(res, strands, i, deg))) << i << " " << deg;
    }
    alt = add_truncated(alt, laurent_expand(i % 2 == 0 ? tor : -tor, Center::Zero, 13));
  }
  // Tor_i is concentrated in degrees >= i, so five terms fix the series through t^5.
  const HilbertRational chi = module_hilbert(m) * module_hilbert(n) / module_hilbert(ModulePresentation::ring_module(r));
  const LaurentExpansion c = laurent_expand(chi, Center::Zero, 13);
  for (int deg = 0; deg <= 5; ++deg) EXPECT_EQ(alt.coefficient(deg), c.coefficient(deg)) << deg;
}

TEST(ExtProperty, AdditiveOverDirectSums) {
  const RingPresentation r = quadric();
  const ModulePresentation m = quotient(r, {"u", "v"});
  const ModulePresentation a = quotient(r, {"x", "y"});
  const ModulePresentation b = twist(ModulePresentation::ring_module(r), 1);
  const FreeResolution res = minimal_resolution(m, 3);
  for (int i = 0; i <= 2; ++i) {
    EXPECT_TRUE(equal(ext_hilbert(res, direct_sum(a, b), i), ext_hilbert(res, a, i) + ext_hilbert(res, b, i))) << i;
  }
}

TEST(ExtProperty, RandomMonomialModulesMatchOracle) {
  const RingPresentation q(WeightedRingSpec({"x", "y"}, {1, 2}));
  std::mt19937 rng(11);
  for (int iter = 0; iter < 8; ++iter) {
    const ModulePresentation m = random_monomial_module(q, rng);
    const ModulePresentation n = twist(random_monomial_module(q, rng), iter % 3);
    const FreeResolution res = minimal_resolution(m, 3);
    oracle::ModuleStrands strands(n);
    for (int i = 0; i <= 2; ++i) {
      const LaurentExpansion e = laurent_expand(ext_hilbert(res, n, i), Center::Zero, 20);
      for (int deg = -8; deg <= 8; ++deg) {
        ASSERT_EQ(e.coefficient(deg), Rational(oracle::ext_strand(res, strands, i, deg))) << iter << " " << i;
      }
    }
  }
}
