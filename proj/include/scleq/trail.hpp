#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scleq/ordering.hpp"
#include "scleq/rewriting.hpp"
#include "scleq/term.hpp"

namespace scleq {

enum class TruthValue { True, False, Undefined };

enum class EntryKind { Decision, Propagated };

struct TrailError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One annotated trail literal. The justification clause contains the
/// literal at `justLit`; decisions carry a tautology (L or comp(L)).
struct TrailEntry {
  Literal lit;  // ground
  int level = 0;
  EntryKind kind = EntryKind::Propagated;
  Clause justClause;
  size_t justLit = 0;
  Subst justGrounding;
};

/// Consistent sequence of annotated ground literals together with the
/// convergent rewrite system conv(prefix) of every prefix. Value semantics:
/// copies snapshot the whole structure.
class Trail {
 public:
  explicit Trail(KboConfig cfg);

  const KboConfig& cfg() const { return cfg_; }
  const std::vector<TrailEntry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  /// Level annotation of the last entry (0 for the empty trail).
  int currentLevel() const;

  /// Appends an entry after checking its literal is ground, undefined in the
  /// current trail, irreducible by conv, correctly justified and correctly
  /// levelled. Throws TrailError otherwise.
  void push(TrailEntry e);
  /// Drops entries until `n` remain.
  void popTo(size_t n);

  const Trs& conv() const { return convs_.back(); }
  const Trs& convPrefix(size_t n) const { return convs_.at(n); }
  /// Proof leaf for entry i, built from its justification closure.
  RewriteStepPtr leafStep(size_t i) const;

  TruthValue valueOf(const Literal& l) const { return valueOfPrefix(size(), l); }
  TruthValue valueOfPrefix(size_t n, const Literal& l) const;
  /// Undefined for literals not below beta, otherwise valueOf.
  TruthValue betaValueOf(const Literal& l, const Term& beta) const;
  TruthValue clauseValue(const Clause& c) const;
  TruthValue betaClauseValue(const Clause& c, const Term& beta) const;

  /// Index of the defining literal: the last entry of the shortest defining
  /// prefix. nullopt when the empty trail already defines the literal.
  /// Throws TrailError for undefined literals.
  std::optional<size_t> definingIndex(const Literal& l) const;
  /// Minimal defining subsequence (greedy deletion from the left); contains
  /// the defining index. Empty when the empty trail defines the literal.
  std::vector<size_t> definingCore(const Literal& l) const;
  int levelOf(const Literal& l) const;
  /// Maximum literal level; 0 for the empty clause.
  int clauseLevel(const Clause& c) const;

  /// Trail-induced total literal ordering for ground literals. EQ only for
  /// syntactically equal literals.
  OrderResult gammaStarCompare(const Literal& a, const Literal& b, const Term& beta) const;
  OrderResult gammaStarCompareClauses(const Clause& a, const Clause& b,
                                      const Term& beta) const;

  std::string dump(const Signature& sig) const;

 private:
  TruthValue valueAmong(const std::vector<size_t>& idxs, const Literal& l) const;

  KboConfig cfg_;
  std::vector<TrailEntry> entries_;
  std::vector<Trs> convs_;  // convs_[i] = conv of the first i entries
  std::vector<RewriteStepPtr> leaves_;
};

}  // namespace scleq
