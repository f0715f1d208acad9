#pragma once

#include <memory>
#include <optional>

#include "scleq/ordering.hpp"
#include "scleq/term.hpp"

namespace scleq {

class Trail;

struct RewriteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RewriteStep;
using RewriteStepPtr = std::shared_ptr<const RewriteStep>;

/// Five-tuple proof node: a rewrite literal with grounding, the clause it
/// came from, two premise steps and the rewrite position. Leaf steps have
/// no premises. In inner steps the left premise's literal is an equation.
struct RewriteStep {
  Literal lit;       // rewrite literal, with variables
  Clause clause;     // lit together with its side literals
  size_t litIndex;   // position of lit inside clause.lits
  Subst grounding;

  RewriteStepPtr left, right;
  Position pos;  // ground literal position of the rewrite (empty for leaves)

  std::optional<size_t> trailIndex;  // provenance for trail leaves

  bool leaf() const { return !left && !right; }
  Literal groundLit() const { return grounding(lit); }
  Clause groundClause() const { return grounding(clause); }
  /// The clause without the rewrite-literal occurrence.
  Clause rest() const;
  int maxVar() const;
};

RewriteStepPtr makeLeafStep(Clause clause, size_t litIndex, Subst grounding,
                            std::optional<size_t> trailIndex = std::nullopt);

/// Paramodulation-style inference: rewrites `right`'s literal at ground
/// position p using `left`'s equation. Handles both the structural case and
/// rewriting below a variable (instantiating with a fresh linear skeleton).
/// `left` is renamed apart from `right` internally.
RewriteStepPtr rewriteInference(const RewriteStepPtr& left, const RewriteStepPtr& right,
                                const Position& p, const KboConfig& cfg);

/// Ground rewrite rule with the proof step justifying it.
struct Rule {
  Term lhs, rhs;  // ground, rhs < lhs
  RewriteStepPtr proof;
};

/// Convergent ground term rewrite system.
class Trs {
 public:
  Trs() = default;
  explicit Trs(std::vector<Rule> rules) : rules_(std::move(rules)) {}
  const std::vector<Rule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }

  /// First redex in pre-order, if any: (rule index, term position).
  std::optional<std::pair<size_t, Position>> findRedex(const Term& t) const;
  bool reducible(const Term& t) const { return findRedex(t).has_value(); }
  bool reducible(const Literal& l) const;
  bool reducible(const Subst& s) const;

 private:
  std::vector<Rule> rules_;
};

/// Knuth-Bendix completion of ground equations, with proof steps carried
/// through so every derived rule can be replayed as rewrite inferences over
/// the original equations. Always terminates on ground input.
Trs completeGround(const std::vector<RewriteStepPtr>& equations, const KboConfig& cfg);

/// conv(trail): the completed system of the positive trail equations.
Trs buildConv(const Trail& trail, const KboConfig& cfg);

/// Completion of bare ground equations, without proof bookkeeping. The
/// resulting rules carry null proofs; cheap enough for truth-value queries.
Trs completeGroundPlain(const std::vector<std::pair<Term, Term>>& equations,
                        const KboConfig& cfg);

struct NormalizeTraceEntry {
  size_t ruleIndex;
  Position pos;  // term position
};

/// Unique normal form plus the applied rule instances in order.
std::pair<Term, std::vector<NormalizeTraceEntry>> normalize(const Term& t, const Trs& r);

/// Rewrites the step's ground literal to normal form on both sides,
/// lifting every rule application into a rewrite inference.
RewriteStepPtr normalizeStepLiteral(RewriteStepPtr step, const Trs& r, const KboConfig& cfg);

struct ReductionChain {
  std::vector<RewriteStepPtr> steps;  // dependency order, leaves first
  const RewriteStepPtr& final() const { return steps.back(); }
};

/// Dependency-ordered chain of every step reachable from `last`.
ReductionChain chainFrom(const RewriteStepPtr& last);

/// Normalizes the target literal against conv(trail); a single leaf chain
/// when the target is already irreducible.
ReductionChain reductionChainApplication(const Trail& trail, const RewriteStepPtr& target,
                                         const KboConfig& cfg);

/// Minimal chain from the trail and a false target literal ending in a
/// trivial inequation s != s. Throws RewriteError if the target is not
/// false in the trail.
ReductionChain refutation(const Trail& trail, const RewriteStepPtr& target,
                          const KboConfig& cfg);

}  // namespace scleq
