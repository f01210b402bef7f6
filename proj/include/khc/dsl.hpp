#pragma once

#include "khc/katz.hpp"
#include "khc/system.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace khc::dsl {

struct SourceLoc {
  int line = 1;
  int col = 1;
};

class ParseError : public std::runtime_error {
public:
  ParseError(SourceLoc loc, const std::string& message)
      : std::runtime_error(std::to_string(loc.line) + ":" + std::to_string(loc.col) + ": " +
                           message),
        loc_(loc) {}
  SourceLoc loc() const { return loc_; }

private:
  SourceLoc loc_;
};

/// Evaluation failure, annotated with the statement that caused it.
/// `internal` mirrors CalcError::internal(): a broken calculator invariant
/// rather than a bad program.
class EvalError : public std::runtime_error {
public:
  EvalError(SourceLoc loc, const std::string& message, bool internal)
      : std::runtime_error(std::to_string(loc.line) + ":" + std::to_string(loc.col) + ": " +
                           message),
        loc_(loc),
        internal_(internal) {}
  SourceLoc loc() const { return loc_; }
  bool internal() const { return internal_; }

private:
  SourceLoc loc_;
  bool internal_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Line, Mc, Tensor, Sym2, Wedge2, Wedge2t, Dual, Tate, Katz, Ident };

  Kind kind = Kind::Ident;
  SourceLoc loc;
  std::vector<std::pair<std::string, Angle>> line_angles;  // Line (declaration order)
  std::optional<Angle> chi;                                // Mc
  long long tate_k = 0;                                    // Tate
  std::string name;                                        // Ident
  std::vector<ExprPtr> args;
};

enum class CheckField { Rank, Rigidity, H, Delta, Mu, Infinity, Pairing };

struct MuEntryLit {
  int p = 0;
  Angle alpha;
  int ell = 0;
  int mult = 0;
};

struct CheckLiteral {
  CheckField field = CheckField::Rank;
  long long int_value = 0;                                     // rank, rigidity
  std::vector<std::pair<long long, long long>> map_value;      // h, delta
  std::vector<std::pair<std::string, std::vector<MuEntryLit>>> mu_value;  // mu
  std::vector<MuEntryLit> entries_value;                       // infinity
  Pairing pairing_value = Pairing::Unknown;                    // pairing
};

struct Stmt {
  enum class Kind { Let, Emit, Check };

  Kind kind = Kind::Let;
  SourceLoc loc;
  std::string name;       // binding name / emitted or checked identifier
  ExprPtr expr;           // Let
  bool negated = false;   // Check: comparison is "!="
  CheckLiteral literal;   // Check
};

struct Program {
  std::vector<std::string> points;
  std::vector<Stmt> statements;
};

/// Recursive-descent parser; throws ParseError with position and the
/// expected-token set. Comments run from '#' to end of line.
Program parse_program(std::string_view text);

/// Canonical pretty-printer; parse(format_program(p)) reproduces p.
std::string format_program(const Program& program);

struct CheckOutcome {
  SourceLoc loc;
  std::string text;    // rendered statement
  bool passed = false;
  std::string detail;  // mismatch description
};

struct EvalResult {
  std::vector<std::string> binding_order;
  std::map<std::string, Value> bindings;
  std::vector<std::string> emissions;
  std::vector<CheckOutcome> checks;
  std::vector<std::pair<std::string, KatzTrace>> traces;  // katz() calls in order

  bool all_checks_passed() const;
};

/// Strict top-to-bottom evaluation; every intermediate is validated before
/// it is bound. Throws EvalError.
EvalResult eval_program(const Program& program);

// Exit-code contract of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUserError = 2;
inline constexpr int kExitInternalError = 3;

}  // namespace khc::dsl
