#include <lcext/groebner.hpp>

#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <random>

using namespace lcext;

namespace {

ModuleVector vec(std::initializer_list<const char*> entries, const WeightedRingSpec& spec) {
  ModuleVector v;
  for (const char* e : entries) v.push_back(parse_polynomial(e, spec));
  return v;
}

GroebnerBasis ideal_basis(const WeightedRingSpec& spec, std::initializer_list<const char*> gens,
                          std::vector<MultiPoly> relations = {}) {
  BuchbergerInput in;
  in.order = MonomialOrder(spec.weights(), {0});
  in.field = spec.field();
  for (const char* g : gens) in.generators.push_back({parse_polynomial(g, spec)});
  in.relations = std::move(relations);
  return buchberger(in);
}

std::vector<std::string> rendered(const GroebnerBasis& gb, const WeightedRingSpec& spec) {
  std::vector<std::string> out;
  for (const auto& v : gb.vectors()) out.push_back(v[0].to_string(spec));
  return out;
}

// All exponent vectors of weighted degree n.
void monomials_of_degree(const std::vector<int>& w, int n, std::size_t i, std::vector<int>& cur,
                         const std::function<void(const Monomial&)>& f) {
  if (i == w.size()) {
    if (n == 0) f(Monomial(cur));
    return;
  }
  for (int e = 0; e * w[i] <= n; ++e) {
    cur[i] = e;
    monomials_of_degree(w, n - e * w[i], i + 1, cur, f);
  }
  cur[i] = 0;
}

// Number of standard monomials of each degree 0..top in F/L.
std::map<int, Rational> standard_counts(const std::vector<ModuleTerm>& lead, const std::vector<int>& w,
                                        const std::vector<int>& gdeg, int top) {
  std::map<int, Rational> counts;
  for (std::size_t k = 0; k < gdeg.size(); ++k) {
    for (int n = gdeg[k]; n <= top; ++n) {
      std::vector<int> cur(w.size());
      monomials_of_degree(w, n - gdeg[k], 0, cur, [&](const Monomial& m) {
        for (const auto& t : lead) {
          if (t.component == k && t.monomial.divides(m)) return;
        }
        counts[n] += 1;
      });
    }
  }
  return counts;
}

}  // namespace

TEST(Buchberger, PrincipalAndMonomialIdeals) {
  const WeightedRingSpec s({"x", "y", "v", "u"}, {1, 1, 1, 1});
  const GroebnerBasis a = ideal_basis(s, {"x*v - y*u"});
  EXPECT_EQ(rendered(a, s), std::vector<std::string>{"x*v - y*u"});
  EXPECT_TRUE(a.verify());
  const GroebnerBasis b = ideal_basis(s, {"x^2", "x*y"});
  EXPECT_EQ(rendered(b, s), (std::vector<std::string>{"x*y", "x^2"}));
  EXPECT_EQ(b.minimal_generators(), (std::vector<std::size_t>{0, 1}));
}

TEST(Buchberger, SPolynomialAddsCubic) {
  const WeightedRingSpec s({"x", "y", "u", "v", "w", "z"}, std::vector<int>(6, 1));
  const GroebnerBasis gb = ideal_basis(s, {"x*w - u*z", "y*w - v*z"});
  EXPECT_TRUE(gb.verify());
  ASSERT_EQ(gb.elements().size(), 3u);
  // The S-polynomial y(xw - uz) - x(yw - vz) = z(xv - yu) lies in the basis up to a unit.
  const MultiPoly cubic = parse_polynomial("z*(x*v - y*u)", s);
  bool found = false;
  for (const auto& v : gb.vectors()) found |= (v[0] == cubic || v[0] == -cubic);
  EXPECT_TRUE(found);
  EXPECT_TRUE(gb.contains({cubic}));
}

TEST(Buchberger, RejectsInhomogeneous) {
  const WeightedRingSpec s({"x", "y"}, {1, 1});
  EXPECT_THROW(ideal_basis(s, {"x + y^2"}), std::invalid_argument);
}

TEST(NormalForm, Examples) {
  const WeightedRingSpec s({"x", "y", "v", "u"}, {1, 1, 1, 1});
  const GroebnerBasis gb = ideal_basis(s, {"x*v - y*u"});
  EXPECT_TRUE(normal_form(vec({"x*v - y*u"}, s), gb)[0].is_zero());
  EXPECT_EQ(normal_form(vec({"x*v"}, s), gb)[0].to_string(s), "y*u");
  EXPECT_EQ(normal_form(vec({"y*u^2"}, s), gb)[0].to_string(s), "y*u^2");
}

TEST(NormalFormProperty, LinearAndIdempotent) {
  const WeightedRingSpec s({"x", "y", "u", "v", "w", "z"}, std::vector<int>(6, 1));
  const GroebnerBasis gb = ideal_basis(s, {"x*w - u*z", "y*w - v*z", "x*v - y*u"});
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> var(0, 5), coef(-2, 2);
  auto random_cubic = [&] {
    MultiPoly p(6);
    for (int k = 0; k < 4; ++k) {
      Monomial m(6);
      for (int j = 0; j < 3; ++j) m = m * Monomial::variable(6, var(rng));
      p.add_term(m, coef(rng));
    }
    return p;
  };
  for (int i = 0; i < 100; ++i) {
    const MultiPoly v = random_cubic(), w = random_cubic();
    const ModuleVector nv = normal_form({v}, gb);
    ASSERT_EQ(normal_form(nv, gb), nv);
    ASSERT_EQ(normal_form({v + w}, gb), normal_form({nv[0] + w}, gb));
  }
}

TEST(Syzygy, KoszulRelation) {
  const WeightedRingSpec s({"x", "y"}, {1, 1});
  const RingPresentation q(s);
  const GradedMatrix a(2, {0}, {1, 1}, {{parse_polynomial("x", s), parse_polynomial("y", s)}});
  const GradedMatrix z = syzygy_matrix(q, a);
  ASSERT_EQ(z.cols(), 1u);
  EXPECT_EQ(z.col_degrees(), std::vector<int>{2});
  EXPECT_TRUE((z.at(0, 0) == parse_polynomial("y", s) && z.at(1, 0) == parse_polynomial("-x", s)) ||
              (z.at(0, 0) == parse_polynomial("-y", s) && z.at(1, 0) == parse_polynomial("x", s)));
}

TEST(Syzygy, OverQuadricHypersurface) {
  const WeightedRingSpec s({"x", "y", "u", "v"}, {1, 1, 1, 1});
  const RingPresentation r(s, {parse_polynomial("x*v - y*u", s)});
  const GradedMatrix a(4, {0}, {1, 1}, {{parse_polynomial("u", s), parse_polynomial("v", s)}});
  const GradedMatrix z = syzygy_matrix(r, a);
  ASSERT_EQ(z.cols(), 2u);
  EXPECT_EQ(z.col_degrees(), (std::vector<int>{2, 2}));
  // Columns are (v, -u) and (-y, x) up to sign and order.
  auto is_col = [&](std::size_t j, const char* p0, const char* p1) {
    const MultiPoly a0 = parse_polynomial(p0, s), a1 = parse_polynomial(p1, s);
    return (z.at(0, j) == a0 && z.at(1, j) == a1) || (z.at(0, j) == -a0 && z.at(1, j) == -a1);
  };
  EXPECT_TRUE((is_col(0, "v", "-u") && is_col(1, "-y", "x")) || (is_col(1, "v", "-u") && is_col(0, "-y", "x")));
}

TEST(Syzygy, NonzerodivisorHasNone) {
  const WeightedRingSpec s({"x", "y"}, {1, 2});
  const RingPresentation q(s);
  const GradedMatrix a(2, {0}, {2}, {{parse_polynomial("x^2 + y", s)}});
  EXPECT_EQ(syzygy_matrix(q, a).cols(), 0u);
}

TEST(SyzygyProperty, CompositionVanishesModuloRelations) {
  const WeightedRingSpec s({"x", "y", "u", "v", "w", "z"}, std::vector<int>(6, 1));
  const RingPresentation r(s, {parse_polynomial("x*v - y*u", s), parse_polynomial("x*w - u*z", s),
                               parse_polynomial("y*w - v*z", s)});
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> var(0, 5), coef(-2, 2), ncols(1, 3);
  for (int iter = 0; iter < 12; ++iter) {
    const int m = ncols(rng);
    std::vector<int> cols(m, 1);
    GradedMatrix a(6, {0, 0}, cols);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < m; ++j) {
        MultiPoly p(6);
        p.add_term(Monomial::variable(6, var(rng)), coef(rng));
        a.set(i, j, p);
      }
    }
    const GradedMatrix z = syzygy_matrix(r, a);
    if (z.cols() == 0) continue;
    const GradedMatrix prod = a * z;
    const GroebnerBasis rel = image_basis(r, GradedMatrix(6, {0, 0}, {}));
    for (std::size_t j = 0; j < prod.cols(); ++j) {
      ASSERT_TRUE(rel.contains(prod.column(j))) << a.to_string(s) << " * " << z.to_string(s);
    }
  }
}

TEST(HilbertNumerator, Examples) {
  const std::vector<int> w4(4, 1), w2(2, 1);
  const MonomialOrder o4(w4, {0}), o2(w2, {0});
  EXPECT_EQ(monomial_hilbert_numerator({o4.make_term(Monomial({1, 0, 0, 1}), 0, 1)}, w4, {0}),
            LaurentPolynomial::parse("1 - t^2"));
  EXPECT_EQ(monomial_hilbert_numerator({o2.make_term(Monomial({2, 0}), 0, 1), o2.make_term(Monomial({1, 1}), 0, 1)},
                                       w2, {0}),
            LaurentPolynomial::parse("1 - 2t^2 + t^3"));
  EXPECT_EQ(monomial_hilbert_numerator({}, w4, {0}), LaurentPolynomial(1));
}

TEST(HilbertNumeratorProperty, MatchesStandardMonomialCount) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> nv(1, 4), ng(0, 5), exp(0, 3), wt(1, 2), rank(1, 2), gd(-1, 2);
  for (int iter = 0; iter < 150; ++iter) {
    const int n = nv(rng);
    std::vector<int> w(n);
    for (auto& x : w) x = iter % 3 == 0 ? wt(rng) : 1;
    std::vector<int> gdeg(rank(rng));
    for (auto& x : gdeg) x = gd(rng);
    const MonomialOrder ord(w, gdeg);
    std::vector<ModuleTerm> lead;
    for (int g = ng(rng); g > 0; --g) {
      std::vector<int> e(n);
      int total = 0;
      for (auto& x : e) total += (x = exp(rng));
      if (total == 0 || total > 4) continue;
      lead.push_back(ord.make_term(Monomial(e), static_cast<std::size_t>(g) % gdeg.size(), 1));
    }
    const LaurentPolynomial q = monomial_hilbert_numerator(lead, w, gdeg);
    const int low = *std::min_element(gdeg.begin(), gdeg.end());
    const auto series = laurent_expand(HilbertRational(q, w), Center::Zero, 12 - low + 1);
    auto counts = standard_counts(lead, w, gdeg, 12);
    for (int d = low; d <= 12; ++d) {
      ASSERT_EQ(series.coefficient(d), counts[d]) << "degree " << d << " iteration " << iter;
    }
  }
}
