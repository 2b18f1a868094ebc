// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <lcext/cli.hpp>

#include "support/examples.hpp"
#include "support/strand_oracle.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace lcext;

namespace {

template <class T>
std::string str(const T& v) {
  if constexpr (requires { v.to_string(); }) {
    return v.to_string();
  } else {
    std::ostringstream s;
    s << v;
    return s.str();
  }
}

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_.size() < 4) failures_.push_back(what);
    ++failed_;
  }
  template <class A, class B>
  void expect_eq(const A& a, const B& b, const std::string& what) {
    if (a == b) return;
    expect(false, what + ": got " + str(a) + ", want " + str(b));
  }
  void expect_series(const HilbertRational& got, const HilbertRational& want, const std::string& what) {
    expect(equal(got, want), what + ": got " + got.to_string() + ", want " + want.to_string());
  }
  void note(const std::string& n) { notes_.push_back(n); }

  bool ok() const { return failed_ == 0; }
  int failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  int failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

HilbertRational H(const std::string& s) {
  return s.find('/') == std::string::npos ? HilbertRational::polynomial(LaurentPolynomial::parse(s))
                                          : HilbertRational::parse(s);
}

struct Named {
  std::string name;
  ModulePresentation module;
};

struct LoadedEntry {
  std::string name;
  cli::Session session;
  /// Declared modules followed by every ring as a module over itself.
  std::vector<Named> modules;
};

std::vector<LoadedEntry> load_corpus() {
  std::vector<LoadedEntry> out;
  for (const cli::CorpusEntry& e : cli::corpus()) {
    LoadedEntry l{e.name, cli::parse_session(e.declarations), {}};
    for (const cli::ModuleDecl& m : l.session.modules) l.modules.push_back({m.name, m.module});
    for (const cli::RingDecl& r : l.session.rings) l.modules.push_back({r.name, ModulePresentation::ring_module(r.ring)});
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<std::pair<Named, Named>> same_ring_pairs(const LoadedEntry& e) {
  std::vector<std::pair<Named, Named>> out;
  for (const Named& a : e.modules) {
    for (const Named& b : e.modules) {
      if (a.module.ring() == b.module.ring()) out.emplace_back(a, b);
    }
  }
  return out;
}

int min_degree(const ModulePresentation& m) {
  const auto& d = m.generator_degrees();
  return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
}

const cli::Session& corpus_session(const std::string& name) {
  static std::map<std::string, cli::Session> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, cli::parse_session(cli::find_corpus(name)->declarations)).first;
  return it->second;
}

void example15(Check& c) {
  const cli::Session& s = corpus_session("example15");
  const ModulePresentation r = s.module("R"), m = s.module("M");
  c.expect_series(module_hilbert(r), H("(1 - t^2) / (1-t)^4"), "H_R");
  c.expect_series(module_hilbert(m), H("(1) / (1-t)^2"), "H_M");
  const ExtSeriesTable t = ext_table(m, m, 7);
  c.expect_series(t.at(0), H("(1) / (1-t)^2"), "H of Hom(M, M)");
  c.expect_series(t.at(1), H("(1) / (1-t)^2"), "H of Ext^1(M, M)");
  for (int i = 1; i <= 3; ++i) {
    c.expect_series(t.at(2 * i), H("t^" + std::to_string(-2 * i)), "H of Ext^" + std::to_string(2 * i) + "(M, M)");
  }
  for (int i = 1; i <= 2; ++i) c.expect_series(t.at(2 * i + 1), HilbertRational(), "Ext^" + std::to_string(2 * i + 1));
  const VerificationReport rep = check_identity(m, m, Identity::Eq42, t);
  c.expect_eq(std::get<Rational>(rep.lhs), Rational(0), "eq4.2 lhs");
  c.expect_eq(std::get<Rational>(rep.rhs), Rational(-1), "eq4.2 rhs");
  c.expect(rep.verdict == Verdict::Fails, "eq4.2 verdict");
}

void example16(Check& c) {
  const cli::Session& s = corpus_session("example16");
  const ModulePresentation r = s.module("Rp"), m = s.module("Mp");
  c.expect_series(module_hilbert(r), H("(1 - 3t^2 + 2t^3) / (1-t)^6"), "H_R'");
  const ExtSeriesTable t = ext_table(m, r, 2);
  c.expect_series(t.at(0), HilbertRational(), "Hom(M', R')");
  c.expect_series(t.at(1), H("(1) / (1-t)^3"), "H of Ext^1(M', R')");
  c.expect_series(t.at(2), HilbertRational(), "Ext^2(M', R')");
  const VerificationReport rep = check_identity(m, r, Identity::Eq62, t);
  c.expect_eq(std::get<Rational>(rep.lhs), Rational(0), "eq6.2 lhs");
  c.expect_eq(std::get<Rational>(rep.rhs), Rational(1, 3), "eq6.2 rhs");
}

void alternating_ext(Check& c) {
  std::mt19937 rng(20);
  std::uniform_int_distribution<int> nvars(1, 3), weight(1, 2), shift(-1, 1);
  const int pairs = 200;
  for (int iter = 0; iter < pairs; ++iter) {
    std::vector<int> w(nvars(rng));
    for (int& x : w) x = weight(rng);
    const RingPresentation q = examples::polynomial(w);
    const ModulePresentation m = examples::random_monomial_module(q, rng);
    const ModulePresentation n = examples::random_monomial_module(q, rng);
    const ExtSeriesTable t = ext_table(m, n, static_cast<int>(w.size()));
    c.expect(t.vanishing_certified, "pair " + std::to_string(iter) + ": resolution longer than the number of variables");
    if (!t.vanishing_certified) continue;
    HilbertRational alt;
    for (const auto& [i, h] : t.entries) alt = i % 2 == 0 ? alt + h : alt - h;
    c.expect_series(alt, phi(m, n), "pair " + std::to_string(iter));
  }
  c.note(std::to_string(pairs) + " pairs");
}

void finite_length_partial_sums(Check& c) {
  int count = 0;
  for (const LoadedEntry& e : load_corpus()) {
    for (const cli::RingDecl& rd : e.session.rings) {
      const ModulePresentation k = ModulePresentation::residue_field(rd.ring);
      std::vector<Named> ms{{"K", k}};
      for (const Named& x : e.modules) {
        if (x.module.ring() == rd.ring) ms.push_back(x);
      }
      for (const Named& m : ms) {
        const std::string tag = e.name + " (" + m.name + ", K)";
        const ExtSeriesTable t = ext_table(m.module, k, 8);
        for (const auto& [i, h] : t.entries) {
          c.expect(h.is_laurent_polynomial(), tag + ": Ext^" + std::to_string(i) + " is not a Laurent polynomial");
        }
        const VerificationReport rep = check_prop2(m.module, k, 8, 8);
        c.expect(rep.verdict == Verdict::Holds, tag + ": partial sums differ from [phi]_inf through order 8");
        ++count;
      }
    }
  }
  c.note(std::to_string(count) + " pairs");
}

void alternating_tor(Check& c) {
  const int last = 12;
  int count = 0;
  for (const LoadedEntry& e : load_corpus()) {
    for (const auto& [m, n] : same_ring_pairs(e)) {
      // Tor_i lives in degrees >= i + (lowest generator degrees), so these indices fix the series through t^last.
      const int top = std::max(0, last - min_degree(m.module) - min_degree(n.module));
      const FreeResolution res = minimal_resolution(m.module, top + 1);
      LaurentExpansion alt = expand_through(HilbertRational(), Center::Zero, last);
      std::vector<LaurentExpansion> parts;
      const int upto = std::min<int>(top, static_cast<int>(res.length()));
      for (int i = 0; i <= upto; ++i) {
        const HilbertRational t = tor_hilbert(res, n.module, i);
        parts.push_back(expand_through(i % 2 == 0 ? t : -t, Center::Zero, last));
      }
      const LaurentExpansion want = expand_through(chi(m.module, n.module), Center::Zero, last);
      int low = want.is_zero() ? 0 : std::min(0, want.order);
      for (const auto& p : parts) {
        if (!p.is_zero()) low = std::min(low, p.order);
      }
      for (int j = low; j <= last; ++j) {
        Rational sum = 0;
        for (const auto& p : parts) sum += p.coefficient(j);
        c.expect_eq(sum, want.coefficient(j), e.name + " (" + m.name + ", " + n.name + ") t^" + std::to_string(j));
      }
      ++count;
    }
  }
  c.note(std::to_string(count) + " pairs");
}

void laurent_laws(Check& c) {
  int modules = 0;
  for (const LoadedEntry& e : load_corpus()) {
    for (const Named& x : e.modules) {
      const HilbertRational h = module_hilbert(x.module);
      const int d = ring_dimension(x.module.ring());
      const int dim = pole_order_at_one(h);
      const LaurentCoefficients f = laurent_coeffs(h, d, d + 1);
      const std::string tag = e.name + " " + x.name;
      for (int j = 0; j < d - dim; ++j) c.expect_eq(f.at(j), Rational(0), tag + " f^" + std::to_string(j));
      c.expect(f.at(d - dim) > 0, tag + ": leading coefficient not positive");
      c.expect(f.below_zero.empty(), tag + ": pole above the ring dimension");

      // [M(a)]_z = [t^-a]_z [M]_z
      for (Center z : {Center::Zero, Center::One, Center::Infinity}) {
        const LaurentExpansion base = laurent_expand(h, z, 10);
        for (int a = -3; a <= 3; ++a) {
          const LaurentExpansion shifted = laurent_expand(module_hilbert(twist(x.module, a)), z, 10);
          const LaurentExpansion product =
              multiply_truncated(laurent_expand(H("t^" + std::to_string(-a)), z, 12), base);
          if (product.is_zero()) {
            c.expect(shifted.is_zero(), tag + " twist of zero");
            continue;
          }
          for (int j = product.order; j <= std::min(product.known_through(), shifted.known_through()); ++j) {
            c.expect_eq(shifted.coefficient(j), product.coefficient(j),
                        tag + " twist " + std::to_string(a) + " at " + center_name(z) + " index " + std::to_string(j));
          }
        }
      }
      ++modules;
    }

    // Additivity: 0 -> R(-w) -x-> R -> R/(x) -> 0 on each (domain) corpus ring, and split sequences.
    for (const cli::RingDecl& rd : e.session.rings) {
      const RingPresentation& r = rd.ring;
      const int d = ring_dimension(r);
      const auto f = [&](const ModulePresentation& x) { return laurent_coeffs(module_hilbert(x), d, d + 2).f; };
      const auto sum = [](std::vector<Rational> a, const std::vector<Rational>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
      };
      const ModulePresentation ring = ModulePresentation::ring_module(r);
      for (std::size_t v = 0; v < r.nvars(); ++v) {
        const MultiPoly x = MultiPoly::variable(r.nvars(), v);
        const ModulePresentation quotient = ModulePresentation::cyclic_quotient(r, {x});
        c.expect(f(ring) == sum(f(twist(ring, -r.ambient().weight(v))), f(quotient)),
                 e.name + " " + rd.name + ": additivity along " + r.ambient().variables()[v]);
      }
      for (const Named& a : e.modules) {
        if (!(a.module.ring() == r)) continue;
        const ModulePresentation k = ModulePresentation::residue_field(r);
        c.expect(f(direct_sum(a.module, twist(k, 2))) == sum(f(a.module), f(twist(k, 2))),
                 e.name + " " + a.name + ": additivity over a split sequence");
      }
    }
  }
  c.note(std::to_string(modules) + " modules");
}

void bass_bound_calculator(Check& c) {
  const LaurentPolynomial one = LaurentPolynomial::parse("1");
  // Regular ring, N = K: quotient 1, so q = 1 and the bound is 2^(d - n).
  for (int d = 1; d <= 4; ++d) {
    const BassBound b = bass_bound(one, one, 2, d, 0);
    c.expect(b.divisible && b.q == 1, "q = 1 case, d = " + std::to_string(d));
    c.expect_eq(b.exponent, Rational(d), "2^(d - n) exponent, d = " + std::to_string(d));
    c.expect(b.value && *b.value == Integer(1) << d, "2^(d - n) value, d = " + std::to_string(d));
  }
  // Quotient 1 + t: q = 2 and the bound is 2^((d - n + 1) / 2).
  const LaurentPolynomial er = LaurentPolynomial::parse("1 + t");
  for (int d = 2; d <= 5; ++d) {
    for (int n = 0; n <= 1; ++n) {
      const BassBound b = bass_bound(LaurentPolynomial::parse("1 + t^-1") * er, er, 2, d, n);
      c.expect(b.divisible && b.q == 2, "q = 2 case");
      c.expect_eq(b.quotient, er, "quotient 1 + t");
      Rational want(d - n + 1, 2);
      want.canonicalize();
      c.expect_eq(b.exponent, want, "2^((d - n + 1) / 2) exponent");
    }
  }
  // e_R(1/t) = 1 + t^-1 does not divide e_K = 1 over the quadric.
  cli::Session s = corpus_session("example15");
  const std::string text = cli::run_command(s, {"bass-bound", "K"}).output;
  c.expect(text.find("divisible: no") != std::string::npos, "non-divisible verdict for K over the quadric");
  c.expect(text.find(std::string("caveat: ") + kTheorem4Caveat) != std::string::npos, "caveat missing from report");
  cli::Session p = corpus_session("poly3");
  const std::string regular = cli::run_command(p, {"bass-bound", "K"}).output;
  c.expect(regular.find("bound: q = 1, sum mu^i >= 2^(3) = 8") != std::string::npos, "2^(d - n) over K[x, y, z]");
  c.expect(regular.find(kTheorem4Caveat) != std::string::npos, "caveat missing from regular-ring report");
}

void bc1(Check& c) {
  const cli::Session& s = corpus_session("example15");
  const ModulePresentation m = s.module("M");
  const VerificationReport rep = check_identity(m, m, Identity::BC1, ext_table(m, m, 2), Hypotheses{true, false, 2});
  c.expect_eq(std::get<Rational>(rep.lhs), Rational(0), "bc1 lhs");
  c.expect_eq(std::get<Rational>(rep.rhs), Rational(0), "bc1 rhs");
  c.expect(rep.verdict == Verdict::Holds, "bc1 verdict");
}

void strand_oracle(Check& c) {
  int cells = 0;
  for (const LoadedEntry& e : load_corpus()) {
    std::map<std::string, oracle::ModuleStrands> strands;
    for (const Named& n : e.modules) strands.emplace(n.name, oracle::ModuleStrands(n.module));
    for (const auto& [m, n] : same_ring_pairs(e)) {
      const FreeResolution res = minimal_resolution(m.module, 5);
      for (int i = 0; i <= 4; ++i) {
        const LaurentExpansion ex = expand_through(ext_hilbert(res, n.module, i), Center::Zero, 8);
        for (int deg = -8; deg <= 8; ++deg) {
          const Rational want(oracle::ext_strand(res, strands.at(n.name), i, deg));
          c.expect_eq(ex.coefficient(deg), want,
                      e.name + " Ext^" + std::to_string(i) + "(" + m.name + ", " + n.name + ")_" + std::to_string(deg));
          ++cells;
        }
      }
    }
  }
  c.note(std::to_string(cells) + " strand dimensions");
}

void two_routes(Check& c) {
  int finite = 0;
  for (const LoadedEntry& e : load_corpus()) {
    std::vector<Named> candidates = e.modules;
    for (const cli::RingDecl& rd : e.session.rings) {
      if (rd.ring.is_polynomial_ring()) continue;
      candidates.push_back({"R/(" + rd.ring.ambient().variables()[0] + ")",
                            ModulePresentation::cyclic_quotient(rd.ring, {MultiPoly::variable(rd.ring.nvars(), 0)})});
    }
    for (const Named& x : candidates) {
      const FreeResolution res = minimal_resolution(x.module, static_cast<int>(x.module.ring().nvars()) + 2);
      if (res.truncated) continue;
      const HilbertRational euler =
          HilbertRational::polynomial(betti_polynomial(res)) * module_hilbert(ModulePresentation::ring_module(res.ring));
      c.expect_series(euler, module_hilbert(x.module), e.name + " " + x.name + ": Euler characteristic");
      ++finite;
    }
    for (const cli::RingDecl& rd : e.session.rings) {
      if (!rd.ring.is_polynomial_ring() && e.name != "example15" && e.name != "example16") continue;
      const CanonicalSeries cs = canonical_hilbert(rd.ring, true);
      c.expect(cs.verified, e.name + " " + rd.name + ": canonical verify");
    }
  }
  c.note(std::to_string(finite) + " finite-pd modules");
}

struct Criterion {
  int number;
  std::string title;
  std::function<void(Check&)> run;
  /// Wall-clock budget in seconds.
  double budget;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "quadric values and eq4.2", example15, 30},
      {2, "scroll values and eq6.2", example16, 30},
      {3, "alternating Ext sum equals phi on random monomial pairs", alternating_ext, 120},
      {4, "Ext partial sums against [phi]_inf for finite-length N", finite_length_partial_sums, 60},
      {5, "alternating Tor sum equals chi through t^12", alternating_tor, 60},
      {6, "Laurent-coefficient laws", laurent_laws, 120},
      {7, "Bass-number bound calculator", bass_bound_calculator, 30},
      {8, "bc1 on the quadric", bc1, 30},
      {9, "degreewise Ext oracle", strand_oracle, 180},
      {10, "two-route Hilbert series and canonical module", two_routes, 120},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs <= cr.budget, "took " + std::to_string(secs) + " s, budget " + std::to_string(cr.budget) + " s");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << cr.number << ": " << (c.ok() ? "PASS" : "FAIL") << "  " << cr.title << " (" << secs << " s";
    for (const std::string& n : c.notes()) line << ", " << n;
    line << ")";
    std::cout << line.str() << "\n";
    if (!c.ok()) {
      ++failed;
      for (const std::string& f : c.failures()) std::cout << "    " << f << "\n";
      if (c.failed() > static_cast<int>(c.failures().size())) {
        std::cout << "    ... " << c.failed() - static_cast<int>(c.failures().size()) << " more\n";
      }
    }
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
