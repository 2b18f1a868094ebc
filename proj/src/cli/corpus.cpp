#include <lcext/cli.hpp>

namespace lcext::cli {

namespace {

CorpusEntry entry(std::string name, std::string declarations, std::vector<GoldenOutput> expected) {
  return CorpusEntry{std::move(name), std::move(declarations), std::move(expected)};
}

/// Command line split on single spaces.
GoldenOutput run(std::string_view command, std::string expected) {
  GoldenOutput g;
  g.expected = std::move(expected);
  std::size_t start = 0;
  for (;;) {
    const std::size_t sp = command.find(' ', start);
    g.command.emplace_back(command.substr(start, sp - start));
    if (sp == std::string_view::npos) break;
    start = sp + 1;
  }
  return g;
}

// Polynomial ring with the residue field K: series of Q and K and the canonical module.
std::vector<GoldenOutput> polynomial_goldens(const std::string& h_q, const std::string& h_omega) {
  return {run("hilbert Q", h_q + "\n"), run("hilbert K", "(1) / 1\n"),
          run("canonical Q --verify", "H_omega = " + h_omega + "\next route = " + h_omega +
                                          "\next route matches: yes\nfree formula holds: yes\nverified: yes\n")};
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> out;

  out.push_back(entry("poly1",
                      "ring Q = poly(field: QQ; vars: x:1)\n"
                      "module K = coker(Q; rowdeg: [0]; coldeg: [1]; matrix: [[x]])\n",
                      polynomial_goldens("(1) / (1-t)", "(t) / (1-t)")));
  out.push_back(entry("poly2",
                      "ring Q = poly(field: QQ; vars: x:1, y:1)\n"
                      "module K = coker(Q; rowdeg: [0]; coldeg: [1, 1]; matrix: [[x, y]])\n",
                      polynomial_goldens("(1) / (1-t)^2", "(t^2) / (1-t)^2")));
  out.push_back(entry("poly3",
                      "ring Q = poly(field: QQ; vars: x:1, y:1, z:1)\n"
                      "module K = coker(Q; rowdeg: [0]; coldeg: [1, 1, 1]; matrix: [[x, y, z]])\n",
                      polynomial_goldens("(1) / (1-t)^3", "(t^3) / (1-t)^3")));
  out.push_back(entry("poly4",
                      "ring Q = poly(field: QQ; vars: x:1, y:1, u:1, v:1)\n"
                      "module K = coker(Q; rowdeg: [0]; coldeg: [1, 1, 1, 1]; matrix: [[x, y, u, v]])\n",
                      polynomial_goldens("(1) / (1-t)^4", "(t^4) / (1-t)^4")));
  out.push_back(entry("weighted1",
                      "ring Q = poly(field: QQ; vars: x:2)\n"
                      "module K = coker(Q; rowdeg: [0]; coldeg: [2]; matrix: [[x]])\n",
                      polynomial_goldens("(1) / (1-t^2)", "(t^2) / (1-t^2)")));
  out.push_back(entry("weighted2",
                      "ring Q = poly(field: QQ; vars: x:1, y:2)\n"
                      "module K = coker(Q; rowdeg: [0]; coldeg: [1, 2]; matrix: [[x, y]])\n",
                      polynomial_goldens("(1) / (1-t)(1-t^2)", "(t^3) / (1-t)(1-t^2)")));
  out.push_back(entry("weighted3",
                      "ring Q = poly(field: QQ; vars: x:1, y:2, z:3)\n"
                      "module K = coker(Q; rowdeg: [0]; coldeg: [1, 2, 3]; matrix: [[x, y, z]])\n",
                      polynomial_goldens("(1) / (1-t)(1-t^2)(1-t^3)", "(t^6) / (1-t)(1-t^2)(1-t^3)")));
  out.push_back(entry("weighted4",
                      "ring Q = poly(field: QQ; vars: x:1, y:1, u:2, v:2)\n"
                      "module K = coker(Q; rowdeg: [0]; coldeg: [1, 1, 2, 2]; matrix: [[x, y, u, v]])\n",
                      polynomial_goldens("(1) / (1-t)^2(1-t^2)^2", "(t^6) / (1-t)^2(1-t^2)^2")));
  out.push_back(entry("example15",
                      "ring Q = poly(field: QQ; vars: x:1, y:1, u:1, v:1)\n"
                      "ring R = quotient(Q; x*v - y*u)\n"
                      "module M = coker(R; rowdeg: [0]; coldeg: [1, 1]; matrix: [[u, v]])\n"
                      "module K = coker(R; rowdeg: [0]; coldeg: [1, 1, 1, 1]; matrix: [[x, y, u, v]])\n",
                      {run("hilbert R", "(1 + t) / (1-t)^3\n"),
                       run("hilbert M", "(1) / (1-t)^2\n"),
                       run("ext M M --max-i 6",
                           "Ext^0 = (1) / (1-t)^2\nExt^1 = (1) / (1-t)^2\nExt^2 = (t^-2) / 1\nExt^3 = (0) / 1\n"
                           "Ext^4 = (t^-4) / 1\nExt^5 = (0) / 1\nExt^6 = (t^-6) / 1\nvanishing certified: no\n"),
                       run("verify eq4.2 M M --max-i 6 --mode periodic",
                           "identity: eq4.2\nlhs: 0\nrhs: -1\nverdict: fails\nhypotheses: none\n"),
                       run("verify eq4.2 M M --max-i 6 --format structured",
                           "{\n  \"identity\": \"eq4.2\",\n  \"lhs\": \"0\",\n  \"rhs\": \"-1\",\n"
                           "  \"verdict\": \"fails\",\n  \"hypotheses\": [],\n  \"caveats\": [],\n"
                           "  \"details\": {}\n}\n"),
                       run("verify bc1 M M --assert domain,reg-codim=2",
                           "identity: bc1\nlhs: 0\nrhs: 0\nverdict: holds\nhypotheses: domain, reg-codim=2\n"
                           "caveat: psi = f^1 and rank = f^0(-) / f^0(R), which presumes R is a domain\n"),
                       run("verify prop2 M K --max-i 2",
                           "identity: prop2\nlhs: 1 - 2*t^-1 + 2*t^-2 + O(t^-3)\nrhs: 1 - 2*t^-1 + 2*t^-2 + O(t^-3)\n"
                           "verdict: holds\nhypotheses: none\nExt^0: (1) / 1, order at infinity 0\n"
                           "Ext^1: (2t^-1) / 1, order at infinity 1\nExt^2: (2t^-2) / 1, order at infinity 2\n"
                           "orders non-decreasing from: Ext^0\ncaveat: partial sum over Ext^0..Ext^2 compared through t^-2\n"),
                       run("coeffs R --terms 3", "d = 3\nf^0 = 2\nf^1 = -1\nf^2 = 0\n"),
                       run("agreement M M --max-i 3", "agreement level: 1\nchecked through: 3\n"),
                       run("tor M K --max-i 3",
                           "Tor_0 = (1) / 1\nTor_1 = (2t) / 1\nTor_2 = (2t^2) / 1\nTor_3 = (2t^3) / 1\n"),
                       run("canonical R --verify",
                           "H_omega = (t^2 + t^3) / (1-t)^3\next route = (t^2 + t^3) / (1-t)^3\n"
                           "ext route matches: yes\nfree formula holds: yes\nverified: yes\n")}));
  const std::string declarations16 =
      "ring Qp = poly(field: QQ; vars: x:1, y:1, z:1, u:1, v:1, w:1)\n"
      "ring Rp = quotient(Qp; x*v - y*u, x*w - z*u, y*w - z*v)\n"
      "module Mp = coker(Rp; rowdeg: [0]; coldeg: [1, 1, 1]; matrix: [[u, v, w]])\n";
  out.push_back(entry("example16", declarations16,
                      {run("corpus example16", declarations16),
                       run("hilbert Rp", "(1 + 2t) / (1-t)^4\n"),
                       run("ext Mp Rp --max-i 2",
                           "Ext^0 = (0) / 1\nExt^1 = (1) / (1-t)^3\nExt^2 = (0) / 1\nvanishing certified: no\n"),
                       run("verify eq6.2 Mp Rp --max-i 2",
                           "identity: eq6.2\nlhs: 0\nrhs: 1/3\nverdict: fails\nhypotheses: none\n"),
                       run("canonical Rp --verify",
                           "H_omega = (2t^3 + t^4) / (1-t)^4\next route = (2t^3 + t^4) / (1-t)^4\n"
                           "ext route matches: yes\nfree formula holds: yes\nverified: yes\n")}));
  out.push_back(entry("koszul-k",
                      "ring Q = poly(field: QQ; vars: x:1, y:1, z:1)\n"
                      "module K = coker(Q; rowdeg: [0]; coldeg: [1, 1, 1]; matrix: [[x, y, z]])\n",
                      {run("bass K --max-i 3", "mu^0 = 1\nmu^1 = 3\nmu^2 = 3\nmu^3 = 1\n"),
                       run("ext K Q --max-i 3",
                           "Ext^0 = (0) / 1\nExt^1 = (0) / 1\nExt^2 = (0) / 1\nExt^3 = (t^-3) / 1\n"
                           "vanishing certified: yes\n"),
                       run("tor K K --max-i 3",
                           "Tor_0 = (1) / 1\nTor_1 = (3t) / 1\nTor_2 = (3t^2) / 1\nTor_3 = (t^3) / 1\n"),
                       run("verify theorem1 K Q --max-i 3",
                           "identity: theorem1\nlhs: (-t^-3) / 1\nrhs: (-t^-3) / 1\nverdict: holds\n"
                           "hypotheses: none\nmode: exact\n")}));
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

std::vector<std::string> list_corpus() {
  std::vector<std::string> names;
  for (const CorpusEntry& e : corpus()) names.push_back(e.name);
  return names;
}

const CorpusEntry* find_corpus(std::string_view name) {
  for (const CorpusEntry& e : corpus()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace lcext::cli
