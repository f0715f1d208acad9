#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scleq/calculus.hpp"

namespace scleq {

/// A parsed problem: signature, ordering, clauses and optional overrides
/// (explicit bound, scripted decision list) from the input file.
struct Problem {
  Signature sig;
  KboConfig cfg;
  std::vector<Clause> clauses;
  std::optional<Term> beta;
  std::vector<Literal> decisions;  // scripted decisions, ground, in order
};

struct SearchConfig {
  std::optional<Term> beta;  // overrides the problem/default bound
  int growLimit = 0;
  int maxSteps = 20000;
  unsigned seed = 0;
  bool audit = false;
};

enum class Verdict { Unsatisfiable, BoundedModel, ResourceOut };

/// Snapshot taken when Backtrack learns a clause; feeds the
/// non-redundancy checks.
struct LearnEvent {
  Clause clause;
  Closure conflictClosure;      // the closure handed to Backtrack
  Trail trailBefore;            // trail at learn time
  std::vector<Clause> poolBefore;
  Term beta;
};

struct RunResult {
  explicit RunResult(ProverState s) : state(std::move(s)) {}

  Verdict verdict = Verdict::ResourceOut;
  std::vector<RuleApplication> trace;
  ProverState state;
  std::vector<Clause> finalClauses;  // live simplified clause set
  std::vector<LearnEvent> learns;
  std::vector<std::string> auditViolations;
  std::string stopReason;
};

/// Clause database with stable indices; deleted clauses leave tombstones.
struct PoolEntry {
  std::optional<Clause> clause;
  bool learned = false;
};
using Pool = std::vector<PoolEntry>;

/// Bound used when none is given: the precedence-largest non-constant
/// symbol applied twice to the largest constant.
Term defaultBeta(const Signature& sig, const KboConfig& cfg);
/// Grow policy: one more application of the largest non-constant symbol.
Term growBeta(const Term& beta, const Signature& sig, const KboConfig& cfg);

/// Scans the pool for a beta-false instance with irreducible grounding.
std::optional<std::pair<size_t, Subst>> findConflict(const ProverState& st,
                                                     const Pool& pool);

struct Candidate {
  size_t clauseIndex = 0;
  size_t litIndex = 0;
  Subst sigma;
  Literal pushed;  // normal form of the instantiated literal
};

/// Propagation candidate with the smallest resulting trail literal.
std::optional<Candidate> findPropagation(const ProverState& st, const Pool& pool);

/// Decision candidate: scripted when `script` still has entries (throws
/// GuardError if the scripted literal is not decidable), otherwise the
/// clause literal with the most undefined ground instances, smallest
/// instance first. Respects the no-complement-of-propagatable rule.
std::optional<Candidate> findDecision(const ProverState& st, const Pool& pool,
                                      const std::vector<Literal>& script,
                                      size_t scriptPos);

struct SimplifyOutcome {
  bool changed = false;
  bool restartNeeded = false;  // a clause not below beta was rewritten
  bool emptyClause = false;
  std::vector<RuleApplication> steps;
};

/// Unit rewriting, unit subsumption resolution, tautology and trivial-literal
/// removal, strict subsumption deletion; run to fixpoint.
SimplifyOutcome simplifyPool(Pool& pool, const ProverState& st);

RunResult run(const Problem& p, const SearchConfig& cfg);

/// Re-applies a recorded trace rule by rule; the result must match the
/// original run's final state.
RunResult replay(const Problem& p, const SearchConfig& cfg,
                 const std::vector<RuleApplication>& trace);

}  // namespace scleq
