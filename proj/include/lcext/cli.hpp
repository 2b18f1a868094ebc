#pragma once

// Declaration language for rings and modules, command dispatch for the
// lcext tool, and the built-in example corpus.

#include <lcext/invariants.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lcext::cli {

/// Parse failure with a 1-based source location.
class SessionError : public std::invalid_argument {
 public:
  SessionError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Unknown names, bad flags and failures surfaced from the computation.
class CommandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RingDecl {
  std::string name;
  RingPresentation ring;
  /// Empty for poly(...); otherwise the ring this one is a quotient of.
  std::string base;
  /// Relations added on top of base.
  std::vector<MultiPoly> added;

  friend bool operator==(const RingDecl&, const RingDecl&) = default;
};

struct ModuleDecl {
  std::string name;
  std::string ring;
  ModulePresentation module;

  friend bool operator==(const ModuleDecl& a, const ModuleDecl& b) {
    return a.name == b.name && a.ring == b.ring && a.module.ring() == b.module.ring() &&
           a.module.presentation() == b.module.presentation();
  }
};

struct Session {
  std::vector<RingDecl> rings;
  std::vector<ModuleDecl> modules;

  bool empty() const { return rings.empty() && modules.empty(); }
  const RingDecl* find_ring(std::string_view name) const;
  const ModuleDecl* find_module(std::string_view name) const;
  /// A declared module, or a ring name standing for R as a module over itself.
  /// Throws CommandError for unknown names.
  ModulePresentation module(std::string_view name) const;
  const RingPresentation& ring(std::string_view name) const;

  /// Declarations in the input grammar, one per line.
  std::string render() const;

  friend bool operator==(const Session&, const Session&) = default;
};

/// ring Q = poly(field: QQ; vars: x:1, y:1)
/// ring R = quotient(Q; x*y)
/// module M = coker(R; rowdeg: [0]; coldeg: [1]; matrix: [[x]])
/// '#' starts a comment running to the end of the line.
Session parse_session(std::string_view text);

struct CommandResult {
  std::string output;
  int exit_code = 0;
};

/// args[0] is the command name, followed by its operands and flags. The corpus
/// command with a name replaces the session's declarations.
/// Throws CommandError on unknown names, bad flags or failed computations.
CommandResult run_command(Session& session, const std::vector<std::string>& args);

struct GoldenOutput {
  std::vector<std::string> command;
  std::string expected;
};

struct CorpusEntry {
  std::string name;
  std::string declarations;
  /// Run in order against the parsed declarations.
  std::vector<GoldenOutput> expected;
};

const std::vector<CorpusEntry>& corpus();
std::vector<std::string> list_corpus();
const CorpusEntry* find_corpus(std::string_view name);

}  // namespace lcext::cli
