#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "scleq/search.hpp"

namespace scleq {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at " + std::to_string(line) + ":" +
                           std::to_string(col)),
        line(line),
        col(col) {}
  int line, col;
};

/// Native problem format. Statements end with `;` or `.`:
///   sig f/1 a/0;  order kbo;  weights f=2 a=1;  precedence a < f;
///   beta f(f(a));  decide f(a) = a;  clause f(X) != a | f(X) = b.
/// Variables start with an uppercase letter and are clause-scoped;
/// `%` and `#` start comments.
Problem parseNative(const std::string& text);

/// TPTP CNF subset: `cnf(name, role, <equality literals joined by |>).`
/// Only equality atoms are supported.
Problem parseTptpCnf(const std::string& text);

/// Canonical native rendering; reparsing yields a structurally equal problem.
std::string printProblem(const Problem& p);

/// Ground term over an existing signature (e.g. a --beta override).
Term parseGroundTerm(const std::string& text, const Signature& sig);

/// One clause / literal over an existing signature; uppercase identifiers
/// become variables numbered by first occurrence.
Clause parseClauseText(const std::string& text, const Signature& sig);
Literal parseLiteralText(const std::string& text, const Signature& sig);

std::string formatTrace(const std::vector<RuleApplication>& trace, const Signature& sig);
std::vector<RuleApplication> parseTrace(const std::string& text, const Signature& sig);

struct CliOptions {
  std::string input;
  std::string format = "native";
  std::optional<std::string> beta;
  int grow = 0;
  int maxSteps = 20000;
  std::optional<std::string> tracePath;
  bool audit = false;
  unsigned seed = 0;
  std::optional<std::string> replayPath;
};

/// Prints the status line plus verdict-specific details and writes the trace
/// file when requested. Returns the process exit code (0/1/2).
int emitResult(const RunResult& r, const Problem& p, const CliOptions& opt,
               std::ostream& out);

}  // namespace scleq
