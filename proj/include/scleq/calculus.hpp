#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scleq/ordering.hpp"
#include "scleq/rewriting.hpp"
#include "scleq/term.hpp"
#include "scleq/trail.hpp"

namespace scleq {

struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Status { Top, Bottom, Conflict };

/// Six-tuple prover state (trail; N; U; beta; level; conflict status).
struct ProverState {
  Trail trail;
  Signature sig;
  std::vector<Clause> initial;  // N
  std::vector<Clause> learned;  // U
  Term beta;
  int level = 0;
  Status status = Status::Top;
  std::optional<Closure> conflict;  // present iff status == Conflict

  ProverState(Signature signature, KboConfig cfg, std::vector<Clause> n, Term beta);

  const KboConfig& cfg() const { return trail.cfg(); }
  std::vector<Clause> allClauses() const;
  Clause conflictInstance() const;  // ground instance of the conflict closure
};

/// One recorded rule application, sufficient to replay the run.
struct RuleApplication {
  std::string rule;
  int clauseIndex = -1;  // pool index, -1 when not clause-driven
  int litIndex = -1;     // chosen literal (propagate/decide/eq-res/factorize)
  int auxIndex = -1;     // second literal (factorize) or chosen step (explore)
  Subst subst;
  std::string detail;
};

/// Propagates the literal at `litIndex` of C under sigma; duplicates of the
/// propagated literal are factorized away and the literal is pushed in
/// normal form via a reduction chain, justified by the chain's final clause.
void propagate(ProverState& st, const Clause& c, const Subst& sigma, size_t litIndex);

/// Decides the (normal form of the) literal at `litIndex` of C under sigma,
/// justified by a tautology; increments the level.
void decide(ProverState& st, const Clause& c, const Subst& sigma, size_t litIndex);

/// Raises a conflict with a beta-false instance of D; level-0 conflicts go
/// straight to Bottom.
void conflict(ProverState& st, const Clause& d, const Subst& sigma);

/// Drops the rightmost trail entry when the conflict survives without it.
void skip(ProverState& st);

/// Replaces the conflict closure by a qualifying step of the refutation of
/// its strictly maximal literal: beta-false and smaller in the trail-induced
/// ordering. Default choice is the smallest qualifying step; `stepChoice`
/// overrides with an index into the refutation chain.
size_t exploreRefutation(ProverState& st, std::optional<size_t> stepChoice = std::nullopt);

/// Collapses two conflict literals equal under the grounding.
void factorize(ProverState& st, size_t i, size_t j);

/// Removes a conflict inequation whose sides are unified by the grounding.
void equalityResolution(ProverState& st, size_t i);

/// Learns the conflict clause, jumps back to the minimal prefix where some
/// grounding of it just became beta-false, and reopens the search.
void backtrack(ProverState& st);

/// Raises the bound and resets the trail.
void grow(ProverState& st, const Term& betaNew);

/// Resets the trail at the same bound.
void restart(ProverState& st);

/// Soundness audit; returns human-readable violation reports (empty = ok).
/// Entailment checks are oracle-backed and skipped when over desk scale.
std::vector<std::string> checkSoundState(const ProverState& st);

}  // namespace scleq
