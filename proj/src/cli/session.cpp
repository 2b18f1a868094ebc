#include <lcext/cli.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lcext::cli {

SessionError::SessionError(const std::string& what, std::size_t line, std::size_t column)
    : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Session run() {
    for (;;) {
      skip();
      if (pos_ == text_.size()) return std::move(session_);
      const std::size_t at = pos_;
      const std::string kw = identifier("'ring' or 'module'");
      if (kw == "ring") {
        ring_statement();
      } else if (kw == "module") {
        module_statement();
      } else {
        fail("expected 'ring' or 'module', found '" + kw + "'", at);
      }
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t offset) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SessionError(what, line, col);
  }

  void skip() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string identifier(const char* what) {
    skip();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\'')) {
        ++pos_;
      }
    }
    if (start == pos_) fail(std::string("expected ") + what, start);
    return std::string(text_.substr(start, pos_ - start));
  }

  void keyword(const char* kw) {
    const std::size_t at = (skip(), pos_);
    if (identifier(kw) != kw) fail(std::string("expected '") + kw + "'", at);
  }

  int integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) fail("expected an integer", start);
    try {
      return std::stoi(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      fail("integer out of range", start);
    }
  }

  std::vector<int> int_list() {
    expect('[');
    std::vector<int> out;
    if (peek(']')) {
      ++pos_;
      return out;
    }
    for (;;) {
      out.push_back(integer());
      if (peek(']')) break;
      expect(',');
    }
    ++pos_;
    return out;
  }

  /// Polynomial text up to the next top-level ',', ';', ')' or ']'.
  MultiPoly polynomial(const WeightedRingSpec& spec, std::size_t& start) {
    skip();
    start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(') {
        ++depth;
      } else if (c == ')') {
        if (depth == 0) break;
        --depth;
      } else if (depth == 0 && (c == ',' || c == ';' || c == ']' || c == '#' || c == '\n')) {
        break;
      }
      ++pos_;
    }
    std::string_view body = text_.substr(start, pos_ - start);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
    if (body.empty()) fail("expected a polynomial", start);
    try {
      return parse_polynomial(body, spec);
    } catch (const ParseError& e) {
      fail(e.what(), start + std::min(e.offset(), body.size()));
    }
  }

  void declare(const std::string& name, std::size_t at) {
    if (session_.find_ring(name) || session_.find_module(name)) fail("'" + name + "' is already declared", at);
  }

  const RingDecl& ring_ref() {
    const std::size_t at = (skip(), pos_);
    const std::string name = identifier("a ring name");
    const RingDecl* r = session_.find_ring(name);
    if (!r) fail("unknown ring '" + name + "'", at);
    return *r;
  }

  void ring_statement() {
    const std::size_t at = (skip(), pos_);
    const std::string name = identifier("a ring name");
    declare(name, at);
    expect('=');
    const std::size_t ctor_at = (skip(), pos_);
    const std::string ctor = identifier("'poly' or 'quotient'");
    expect('(');
    RingDecl decl;
    decl.name = name;
    if (ctor == "poly") {
      keyword("field");
      expect(':');
      const std::size_t field_at = (skip(), pos_);
      const std::string f = identifier("a field");
      Field field;
      if (f == "ZZ") {
        expect('/');
        const int p = integer();
        try {
          field = Field::prime(static_cast<std::uint32_t>(p));
        } catch (const std::invalid_argument& e) {
          fail(e.what(), field_at);
        }
      } else if (f != "QQ") {
        fail("unknown field '" + f + "'", field_at);
      }
      expect(';');
      keyword("vars");
      expect(':');
      std::vector<std::string> vars;
      std::vector<int> weights;
      for (;;) {
        const std::size_t var_at = (skip(), pos_);
        vars.push_back(identifier("a variable name"));
        if (std::count(vars.begin(), vars.end(), vars.back()) > 1) fail("variable '" + vars.back() + "' repeated", var_at);
        expect(':');
        const std::size_t w_at = (skip(), pos_);
        weights.push_back(integer());
        if (weights.back() < 1) fail("variable weights must be positive", w_at);
        if (peek(')')) break;
        expect(',');
      }
      decl.ring = RingPresentation(WeightedRingSpec(vars, weights, field));
    } else if (ctor == "quotient") {
      const RingDecl& base = ring_ref();
      decl.base = base.name;
      const WeightedRingSpec& spec = base.ring.ambient();
      expect(';');
      for (;;) {
        std::size_t rel_at = 0;
        MultiPoly rel = polynomial(spec, rel_at);
        if (rel.is_zero()) fail("relation is zero", rel_at);
        const std::optional<int> d = weighted_degree(rel, spec);
        if (!d) fail("relation " + rel.to_string(spec) + " is not homogeneous", rel_at);
        if (*d <= 0) fail("relation " + rel.to_string(spec) + " has non-positive degree", rel_at);
        decl.added.push_back(std::move(rel));
        if (peek(')')) break;
        expect(',');
      }
      std::vector<MultiPoly> rels = base.ring.relations();
      rels.insert(rels.end(), decl.added.begin(), decl.added.end());
      decl.ring = RingPresentation(spec, rels);
    } else {
      fail("expected 'poly' or 'quotient', found '" + ctor + "'", ctor_at);
    }
    expect(')');
    session_.rings.push_back(std::move(decl));
  }

  void module_statement() {
    const std::size_t at = (skip(), pos_);
    const std::string name = identifier("a module name");
    declare(name, at);
    expect('=');
    const std::size_t ctor_at = (skip(), pos_);
    if (identifier("'coker'") != "coker") fail("expected 'coker'", ctor_at);
    expect('(');
    const RingDecl& r = ring_ref();
    const WeightedRingSpec& spec = r.ring.ambient();
    expect(';');
    keyword("rowdeg");
    expect(':');
    const std::vector<int> rowdeg = int_list();
    expect(';');
    keyword("coldeg");
    expect(':');
    const std::vector<int> coldeg = int_list();
    expect(';');
    keyword("matrix");
    expect(':');
    GradedMatrix a(spec.size(), rowdeg, coldeg);
    expect('[');
    std::size_t row = 0;
    if (!peek(']')) {
      for (;;) {
        const std::size_t row_at = (skip(), pos_);
        if (row >= rowdeg.size()) fail("matrix has more rows than rowdeg entries", row_at);
        expect('[');
        std::size_t col = 0;
        if (!peek(']')) {
          for (;;) {
            std::size_t entry_at = 0;
            MultiPoly p = polynomial(spec, entry_at);
            if (col >= coldeg.size()) fail("row has more entries than coldeg", entry_at);
            if (!p.is_zero()) {
              const std::optional<int> d = weighted_degree(p, spec);
              const int want = coldeg[col] - rowdeg[row];
              if (!d || *d != want) {
                fail("matrix entry " + p.to_string(spec) + " is not homogeneous of degree " + std::to_string(want),
                     entry_at);
              }
            }
            a.set(row, col++, std::move(p));
            if (peek(']')) break;
            expect(',');
          }
        }
        if (col != coldeg.size()) fail("row has fewer entries than coldeg", row_at);
        ++pos_;
        ++row;
        if (peek(']')) break;
        expect(',');
      }
    }
    if (row != rowdeg.size()) fail("matrix has fewer rows than rowdeg entries", pos_);
    ++pos_;
    expect(')');
    session_.modules.push_back(ModuleDecl{name, r.name, ModulePresentation(r.ring, a)});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Session session_;
};

std::string join_ints(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "]";
}

}  // namespace

Session parse_session(std::string_view text) { return Parser(text).run(); }

const RingDecl* Session::find_ring(std::string_view name) const {
  for (const RingDecl& r : rings) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

const ModuleDecl* Session::find_module(std::string_view name) const {
  for (const ModuleDecl& m : modules) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

ModulePresentation Session::module(std::string_view name) const {
  if (const ModuleDecl* m = find_module(name)) return m->module;
  if (const RingDecl* r = find_ring(name)) return ModulePresentation::ring_module(r->ring);
  throw CommandError("unknown module '" + std::string(name) + "'");
}

const RingPresentation& Session::ring(std::string_view name) const {
  if (const RingDecl* r = find_ring(name)) return r->ring;
  throw CommandError("unknown ring '" + std::string(name) + "'");
}

std::string Session::render() const {
  std::ostringstream out;
  for (const RingDecl& r : rings) {
    const WeightedRingSpec& spec = r.ring.ambient();
    out << "ring " << r.name << " = ";
    if (r.base.empty()) {
      out << "poly(field: " << spec.field().name() << "; vars: ";
      for (std::size_t i = 0; i < spec.size(); ++i) out << (i ? ", " : "") << spec.variables()[i] << ":" << spec.weight(i);
    } else {
      out << "quotient(" << r.base << "; ";
      for (std::size_t i = 0; i < r.added.size(); ++i) out << (i ? ", " : "") << r.added[i].to_string(spec);
    }
    out << ")\n";
  }
  for (const ModuleDecl& m : modules) {
    const WeightedRingSpec& spec = m.module.ring().ambient();
    const GradedMatrix& a = m.module.presentation();
    out << "module " << m.name << " = coker(" << m.ring << "; rowdeg: " << join_ints(a.row_degrees())
        << "; coldeg: " << join_ints(a.col_degrees()) << "; matrix: [";
    for (std::size_t i = 0; i < a.rows(); ++i) {
      out << (i ? ", " : "") << "[";
      for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? ", " : "") << a.at(i, j).to_string(spec);
      out << "]";
    }
    out << "])\n";
  }
  return out.str();
}

}  // namespace lcext::cli
