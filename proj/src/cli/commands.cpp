#include <lcext/cli.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace lcext::cli {

namespace {

using json = nlohmann::ordered_json;

struct Flags {
  std::string center = "0";
  /// Unset means kDefaultTerms, except for prop2 where it means --max-i.
  std::optional<int> terms;
  int max_i = 6;
  std::string mode;
  std::string hypotheses;
  std::string format = "text";
  bool strict = false;
  int p = 2;
  bool verify = false;
};

struct Output {
  std::string text;
  json data;
  int exit_code = 0;
};

Center parse_center(const std::string& c) {
  if (c == "0") return Center::Zero;
  if (c == "1") return Center::One;
  return Center::Infinity;
}

Theorem1Mode parse_mode(const std::string& m) {
  if (m == "exact") return Theorem1Mode::Exact;
  if (m == "finite-length") return Theorem1Mode::FiniteLength;
  if (m == "periodic") return Theorem1Mode::Periodic;
  return Theorem1Mode::Auto;
}

Hypotheses parse_hypotheses(const std::string& spec) {
  Hypotheses h;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "domain") {
      h.domain = true;
    } else if (item == "ufd") {
      h.ufd = true;
    } else if (item.rfind("reg-codim=", 0) == 0) {
      try {
        std::size_t used = 0;
        const std::string c = item.substr(10);
        h.regular_in_codim = std::stoi(c, &used);
        if (used != c.size()) throw std::invalid_argument(c);
      } catch (const std::exception&) {
        throw CommandError("--assert: bad codimension in '" + item + "'");
      }
    } else if (!item.empty()) {
      throw CommandError("--assert: unknown hypothesis '" + item + "'");
    }
  }
  return h;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Output hilbert(const Session& s, const std::string& x) {
  const std::string h = module_hilbert(s.module(x)).to_string();
  return {h + "\n", json{{"command", "hilbert"}, {"module", x}, {"series", h}}};
}

Output expand(const Session& s, const std::string& x, const Flags& f) {
  const int terms = f.terms.value_or(kDefaultTerms);
  if (terms < 1) throw CommandError("--terms must be positive");
  const LaurentExpansion e = laurent_expand(module_hilbert(s.module(x)), parse_center(f.center), terms);
  json coeffs = json::array();
  for (std::size_t i = 0; i < e.coefficients.size(); ++i) {
    coeffs.push_back({{"j", e.order + static_cast<int>(i)}, {"value", e.coefficients[i].get_str()}});
  }
  return {"[" + x + "]_" + f.center + " = " + e.to_string() + "\n",
          json{{"command", "expand"},
               {"module", x},
               {"center", f.center},
               {"known_through", e.is_zero() ? json(nullptr) : json(e.known_through())},
               {"coefficients", coeffs},
               {"series", e.to_string()}}};
}

Output coeffs(const Session& s, const std::string& x, const Flags& f) {
  const int terms = f.terms.value_or(kDefaultTerms);
  if (terms < 1) throw CommandError("--terms must be positive");
  const LaurentCoefficients c = laurent_coeffs(s.module(x), terms - 1);
  std::ostringstream text;
  json list = json::array();
  text << "d = " << c.ring_dimension << "\n";
  const int below = static_cast<int>(c.below_zero.size());
  for (int j = -below; j < static_cast<int>(c.f.size()); ++j) {
    const std::string v = c.at(j).get_str();
    text << "f^" << j << " = " << v << "\n";
    list.push_back({{"j", j}, {"value", v}});
  }
  return {text.str(),
          json{{"command", "coeffs"}, {"module", x}, {"ring_dimension", c.ring_dimension}, {"coefficients", list}}};
}

Output ext(const Session& s, const std::string& m, const std::string& n, const Flags& f) {
  const ExtSeriesTable t = ext_table(s.module(m), s.module(n), f.max_i);
  std::ostringstream text;
  json entries = json::array();
  for (const auto& [i, h] : t.entries) {
    text << "Ext^" << i << " = " << h.to_string() << "\n";
    entries.push_back({{"i", i}, {"series", h.to_string()}});
  }
  text << "vanishing certified: " << yes_no(t.vanishing_certified) << "\n";
  return {text.str(), json{{"command", "ext"},
                           {"m", m},
                           {"n", n},
                           {"entries", entries},
                           {"computed_through", t.computed_through},
                           {"vanishing_certified", t.vanishing_certified}}};
}

Output tor(const Session& s, const std::string& m, const std::string& n, const Flags& f) {
  if (f.max_i < 0) throw CommandError("--max-i must be non-negative");
  const ModulePresentation nm = s.module(n);
  const FreeResolution res = minimal_resolution(s.module(m), f.max_i + 1);
  std::ostringstream text;
  json entries = json::array();
  for (int i = 0; i <= f.max_i; ++i) {
    const std::string h = tor_hilbert(res, nm, i).to_string();
    text << "Tor_" << i << " = " << h << "\n";
    entries.push_back({{"i", i}, {"series", h}});
  }
  return {text.str(), json{{"command", "tor"}, {"m", m}, {"n", n}, {"entries", entries}}};
}

Output bass(const Session& s, const std::string& n, const Flags& f) {
  std::ostringstream text;
  json entries = json::array();
  for (const auto& [i, mu] : bass_numbers(s.module(n), f.max_i)) {
    text << "mu^" << i << " = " << mu.get_str() << "\n";
    entries.push_back({{"i", i}, {"mu", mu.get_str()}});
  }
  return {text.str(), json{{"command", "bass"}, {"n", n}, {"entries", entries}}};
}

Output verify(const Session& s, const std::string& which, const std::string& m, const std::string& n,
              const Flags& f) {
  const ModulePresentation mm = s.module(m), nm = s.module(n);
  const Hypotheses hyp = parse_hypotheses(f.hypotheses);
  VerificationReport rep;
  if (which == "theorem1") {
    rep = check_theorem1(mm, nm, ext_table(mm, nm, f.max_i), parse_mode(f.mode), f.terms.value_or(kDefaultTerms));
    rep.hypotheses = hyp.describe();
  } else if (which == "prop2") {
    rep = check_prop2(mm, nm, f.max_i, f.terms.value_or(f.max_i));
    rep.hypotheses = hyp.describe();
  } else if (const std::optional<Identity> id = parse_identity(which)) {
    rep = check_identity(mm, nm, *id, ext_table(mm, nm, f.max_i), hyp);
  } else {
    throw CommandError("unknown identity '" + which + "'");
  }
  Output out{rep.to_text(), json::parse(rep.to_json())};
  if (f.strict && rep.verdict == Verdict::Fails) out.exit_code = 1;
  return out;
}

Output agreement(const Session& s, const std::string& m, const std::string& n, const Flags& f) {
  const ModulePresentation mm = s.module(m), nm = s.module(n);
  const int level = agreement_level(mm, nm, ext_table(mm, nm, f.max_i), f.max_i);
  std::ostringstream text;
  text << "agreement level: " << level << "\n";
  text << "checked through: " << f.max_i << "\n";
  return {text.str(), json{{"command", "agreement"}, {"m", m}, {"n", n}, {"level", level}, {"checked_through", f.max_i}}};
}

Output bound(const Session& s, const std::string& n, const Flags& f) {
  const ModulePresentation nm = s.module(n);
  const MultiplicityData dn = multiplicity_poly(nm);
  const MultiplicityData dr = multiplicity_poly(ModulePresentation::ring_module(nm.ring()));
  const BassBound b = bass_bound(dn.e, dr.e, f.p, dr.n, dn.n);
  std::ostringstream text;
  text << "e_N = " << dn.e.to_string() << "\n";
  text << "e_R = " << dr.e.to_string() << "\n";
  text << "d = " << dr.n << ", n = " << dn.n << ", p = " << f.p << "\n";
  text << "divisible: " << yes_no(b.divisible) << "\n";
  if (b.divisible) text << "quotient: " << b.quotient.to_string() << "\n";
  text << "bound: " << b.to_string() << "\n";
  text << "caveat: " << kTheorem4Caveat << "\n";
  json data{{"command", "bass-bound"}, {"n", n},         {"e_n", dn.e.to_string()}, {"e_r", dr.e.to_string()},
            {"d", dr.n},               {"dim_n", dn.n}, {"p", f.p},                {"divisible", b.divisible}};
  if (b.divisible) {
    data["quotient"] = b.quotient.to_string();
    data["q"] = b.q;
    data["exponent"] = b.exponent.get_str();
    data["value"] = b.value ? json(b.value->get_str()) : json(nullptr);
  }
  data["bound"] = b.to_string();
  data["caveat"] = kTheorem4Caveat;
  return {text.str(), data};
}

Output canonical(const Session& s, const std::string& r, const Flags& f) {
  const CanonicalSeries c = canonical_hilbert(s.ring(r), f.verify);
  std::ostringstream text;
  text << "H_omega = " << c.series.to_string() << "\n";
  json data{{"command", "canonical"}, {"ring", r}, {"series", c.series.to_string()}};
  if (f.verify) {
    text << "ext route = " << c.ext_series->to_string() << "\n";
    text << "ext route matches: " << yes_no(c.ext_matches) << "\n";
    text << "free formula holds: " << yes_no(c.free_formula_holds) << "\n";
    text << "verified: " << yes_no(c.verified) << "\n";
    data["ext_series"] = c.ext_series->to_string();
    data["ext_matches"] = c.ext_matches;
    data["free_formula_holds"] = c.free_formula_holds;
    data["verified"] = c.verified;
  }
  return {text.str(), data};
}

Output corpus_command(Session& s, const std::string& name) {
  if (name.empty()) {
    std::string text;
    json names = json::array();
    for (const std::string& n : list_corpus()) {
      text += n + "\n";
      names.push_back(n);
    }
    return {text, json{{"command", "corpus"}, {"entries", names}}};
  }
  const CorpusEntry* e = find_corpus(name);
  if (!e) throw CommandError("unknown corpus entry '" + name + "'");
  s = parse_session(e->declarations);
  return {e->declarations, json{{"command", "corpus"}, {"name", name}, {"declarations", e->declarations}}};
}

}  // namespace

CommandResult run_command(Session& session, const std::vector<std::string>& args) {
  CLI::App app("lcext");
  app.require_subcommand(1, 1);
  Flags f;
  std::string a, b, c;
  const auto format = [&](CLI::App* sub) {
    sub->add_option("--format", f.format, "text or structured (JSON)")->check(CLI::IsMember({"text", "structured"}));
  };
  const auto max_i = [&](CLI::App* sub) { sub->add_option("--max-i", f.max_i, "highest Ext/Tor index")->check(CLI::NonNegativeNumber); };
  const auto terms = [&](CLI::App* sub) { sub->add_option("--terms", f.terms, "number of series terms"); };
  const auto one = [&](const char* name, const char* help, const char* what) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option(what, a)->required();
    format(sub);
    return sub;
  };
  const auto two = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("M", a)->required();
    sub->add_option("N", b)->required();
    format(sub);
    max_i(sub);
    return sub;
  };

  CLI::App* hilbert_cmd = one("hilbert", "Hilbert series", "module");
  CLI::App* expand_cmd = one("expand", "Laurent expansion of the Hilbert series", "module");
  expand_cmd->add_option("--center", f.center, "0, 1 or inf")->check(CLI::IsMember({"0", "1", "inf"}));
  terms(expand_cmd);
  CLI::App* coeffs_cmd = one("coeffs", "Laurent coefficients f^j at t = 1", "module");
  terms(coeffs_cmd);
  CLI::App* ext_cmd = two("ext", "Hilbert series of Ext^i(M, N)");
  CLI::App* tor_cmd = two("tor", "Hilbert series of Tor_i(M, N)");
  CLI::App* bass_cmd = one("bass", "Bass numbers at the irrelevant ideal", "module");
  max_i(bass_cmd);
  CLI::App* verify_cmd = app.add_subcommand("verify", "check theorem1, prop2 or an identity");
  verify_cmd->add_option("identity", c)->required();
  verify_cmd->add_option("M", a)->required();
  verify_cmd->add_option("N", b)->required();
  format(verify_cmd);
  max_i(verify_cmd);
  terms(verify_cmd);
  verify_cmd->add_option("--mode", f.mode, "theorem1 mode")->check(CLI::IsMember({"exact", "finite-length", "periodic"}));
  verify_cmd->add_option("--assert", f.hypotheses, "domain,ufd,reg-codim=c");
  verify_cmd->add_flag("--strict", f.strict, "exit 1 when the verdict is fails");
  CLI::App* agreement_cmd = two("agreement", "level up to which the Laurent identities agree");
  CLI::App* bound_cmd = one("bass-bound", "divisibility test and lower bound for sum mu^i", "module");
  bound_cmd->add_option("--p", f.p, "prime");
  CLI::App* canonical_cmd = one("canonical", "Hilbert series of the canonical module", "ring");
  canonical_cmd->add_flag("--verify", f.verify, "cross-check through Ext over the ambient ring");
  CLI::App* corpus_cmd = app.add_subcommand("corpus", "list the corpus, or load an entry");
  corpus_cmd->add_option("name", a);
  format(corpus_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {app.help(), 0};
  } catch (const CLI::ParseError& e) {
    throw CommandError(e.what());
  }

  Output out;
  try {
    if (*hilbert_cmd) {
      out = hilbert(session, a);
    } else if (*expand_cmd) {
      out = expand(session, a, f);
    } else if (*coeffs_cmd) {
      out = coeffs(session, a, f);
    } else if (*ext_cmd) {
      out = ext(session, a, b, f);
    } else if (*tor_cmd) {
      out = tor(session, a, b, f);
    } else if (*bass_cmd) {
      out = bass(session, a, f);
    } else if (*verify_cmd) {
      out = verify(session, c, a, b, f);
    } else if (*agreement_cmd) {
      out = agreement(session, a, b, f);
    } else if (*bound_cmd) {
      out = bound(session, a, f);
    } else if (*canonical_cmd) {
      out = canonical(session, a, f);
    } else {
      out = corpus_command(session, a);
    }
  } catch (const CommandError&) {
    throw;
  } catch (const SessionError&) {
    throw;
  } catch (const std::exception& e) {
    throw CommandError(e.what());
  }
  if (f.format == "structured") return {out.data.dump(2) + "\n", out.exit_code};
  return {out.text, out.exit_code};
}

}  // namespace lcext::cli
