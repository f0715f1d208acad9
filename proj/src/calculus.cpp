#include "scleq/calculus.hpp"

#include <algorithm>

#include "scleq/oracle.hpp"

namespace scleq {

ProverState::ProverState(Signature signature, KboConfig cfg, std::vector<Clause> n,
                         Term beta)
    : trail(std::move(cfg)),
      sig(std::move(signature)),
      initial(std::move(n)),
      beta(std::move(beta)) {}

std::vector<Clause> ProverState::allClauses() const {
  std::vector<Clause> out = initial;
  out.insert(out.end(), learned.begin(), learned.end());
  return out;
}

Clause ProverState::conflictInstance() const {
  if (!conflict) throw GuardError("no conflict closure");
  return conflict->grounding(conflict->clause);
}

namespace {

void requireTop(const ProverState& st, const char* rule) {
  if (st.status != Status::Top)
    throw GuardError(std::string(rule) + ": status is not Top");
}

void requireConflict(const ProverState& st, const char* rule) {
  if (st.status != Status::Conflict || !st.conflict)
    throw GuardError(std::string(rule) + ": status is not Conflict");
}

// Reorients l so that sigma maps it onto `groundTarget` exactly; the sides of
// an equation are unordered, the storage is not.
Literal alignTo(const Literal& l, const Subst& sigma, const Literal& groundTarget) {
  if (sigma(l) == groundTarget) return l;
  Literal swapped{l.positive, l.rhs, l.lhs};
  if (sigma(swapped) == groundTarget) return swapped;
  throw GuardError("literal does not ground to its duplicate");
}

bool clauseFalseInPrefix(const Trail& trail, size_t n, const Clause& ground,
                         const Term& beta) {
  for (const Literal& l : ground.lits) {
    if (!literalBelow(l, beta, trail.cfg())) return false;
    if (trail.valueOfPrefix(n, l) != TruthValue::False) return false;
  }
  return true;
}

}  // namespace

void propagate(ProverState& st, const Clause& c, const Subst& sigma, size_t litIndex) {
  requireTop(st, "propagate");
  if (litIndex >= c.lits.size()) throw GuardError("propagate: literal index out of range");
  if (!sigma(c).ground()) throw GuardError("propagate: sigma does not ground the clause");

  const Literal& l = c.lits[litIndex];
  Literal lg = sigma(l);
  // Split C into the propagated literal, its sigma-duplicates C1 and the rest C0.
  std::vector<Literal> dupls{l};
  Clause c0;
  for (size_t i = 0; i < c.lits.size(); ++i) {
    if (i == litIndex) continue;
    if (sameModuloSymmetry(sigma(c.lits[i]), lg))
      dupls.push_back(alignTo(c.lits[i], sigma, lg));
    else
      c0.lits.push_back(c.lits[i]);
  }
  for (const Literal& k : c0.lits)
    if (st.trail.valueOf(sigma(k)) != TruthValue::False)
      throw GuardError("propagate: remainder literal is not false in the trail");
  auto mu = mguLiterals(dupls);
  if (!mu) throw GuardError("propagate: duplicate literals do not unify");
  if (!literalBelow(lg, st.beta, st.cfg()) ||
      st.trail.valueOf(lg) != TruthValue::Undefined)
    throw GuardError("propagate: literal is not beta-undefined");
  Clause ann;
  ann.lits.push_back((*mu)(l));
  for (const Literal& k : c0.lits) ann.lits.push_back((*mu)(k));
  if (!clauseBelow(sigma(ann), st.beta, st.cfg()))
    throw GuardError("propagate: clause instance is not below beta");
  if (st.trail.conv().reducible(sigma))
    throw GuardError("propagate: sigma is reducible by conv");

  RewriteStepPtr target = makeLeafStep(ann, 0, sigma);
  ReductionChain chain = reductionChainApplication(st.trail, target, st.cfg());
  const RewriteStepPtr& fin = chain.final();
  st.trail.push({fin->groundLit(), st.level, EntryKind::Propagated, fin->clause,
                 fin->litIndex, fin->grounding});
}

void decide(ProverState& st, const Clause& c, const Subst& sigma, size_t litIndex) {
  requireTop(st, "decide");
  if (litIndex >= c.lits.size()) throw GuardError("decide: literal index out of range");
  if (!sigma(c).ground()) throw GuardError("decide: sigma does not ground the clause");

  const Literal& l = c.lits[litIndex];
  Literal lg = sigma(l);
  Clause c0;
  for (size_t i = 0; i < c.lits.size(); ++i)
    if (i != litIndex) c0.lits.push_back(c.lits[i]);
  if (st.trail.betaClauseValue(sigma(c0), st.beta) == TruthValue::False)
    throw GuardError("decide: remainder is beta-false, Propagate applies instead");
  if (!literalBelow(lg, st.beta, st.cfg()) ||
      st.trail.valueOf(lg) != TruthValue::Undefined)
    throw GuardError("decide: literal is not beta-undefined");
  if (!clauseBelow(sigma(c), st.beta, st.cfg()))
    throw GuardError("decide: clause instance is not below beta");
  if (st.trail.conv().reducible(sigma))
    throw GuardError("decide: sigma is reducible by conv");

  Clause ann;
  ann.lits.push_back(l);
  for (const Literal& k : c0.lits) ann.lits.push_back(k);
  RewriteStepPtr target = makeLeafStep(ann, 0, sigma);
  ReductionChain chain = reductionChainApplication(st.trail, target, st.cfg());
  const RewriteStepPtr& fin = chain.final();
  Clause taut{{fin->lit, complement(fin->lit)}};
  st.trail.push({fin->groundLit(), st.level + 1, EntryKind::Decision, taut, 0,
                 fin->grounding});
  st.level += 1;
}

void conflict(ProverState& st, const Clause& d, const Subst& sigma) {
  requireTop(st, "conflict");
  Clause inst = sigma(d);
  if (!inst.ground()) throw GuardError("conflict: sigma does not ground the clause");
  if (st.trail.betaClauseValue(inst, st.beta) != TruthValue::False)
    throw GuardError("conflict: clause instance is not beta-false");
  if (st.trail.conv().reducible(sigma))
    throw GuardError("conflict: sigma is reducible by conv");
  st.conflict = Closure{d, sigma};
  st.status = st.trail.clauseLevel(inst) == 0 ? Status::Bottom : Status::Conflict;
}

void skip(ProverState& st) {
  requireConflict(st, "skip");
  if (st.trail.empty()) throw GuardError("skip: empty trail");
  Trail shorter = st.trail;
  shorter.popTo(st.trail.size() - 1);
  if (st.conflictInstance().lits.empty() ||
      !clauseFalseInPrefix(shorter, shorter.size(), st.conflictInstance(), st.beta))
    throw GuardError("skip: conflict depends on the rightmost literal");
  st.trail.popTo(st.trail.size() - 1);
  st.level = st.trail.currentLevel();
}

size_t exploreRefutation(ProverState& st, std::optional<size_t> stepChoice) {
  requireConflict(st, "explore-refutation");
  const Closure& d = *st.conflict;
  Clause inst = st.conflictInstance();
  // Strictly maximal conflict literal under the trail-induced ordering.
  std::optional<size_t> mx;
  for (size_t i = 0; i < inst.lits.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < inst.lits.size() && maximal; ++j)
      if (j != i &&
          st.trail.gammaStarCompare(inst.lits[j], inst.lits[i], st.beta) != OrderResult::LT)
        maximal = false;
    if (maximal) {
      mx = i;
      break;
    }
  }
  if (!mx)
    throw GuardError("explore-refutation: no strictly maximal conflict literal");
  auto def = st.trail.definingIndex(inst.lits[*mx]);
  if (!def || *def + 1 != st.trail.size())
    throw GuardError(
        "explore-refutation: rightmost trail literal is not the defining literal");

  RewriteStepPtr target = makeLeafStep(d.clause, *mx, d.grounding);
  ReductionChain chain = refutation(st.trail, target, st.cfg());
  std::vector<size_t> qualifying;
  for (size_t i = 0; i < chain.steps.size(); ++i) {
    Clause g = chain.steps[i]->groundClause();
    if (st.trail.betaClauseValue(g, st.beta) == TruthValue::False &&
        st.trail.gammaStarCompareClauses(g, inst, st.beta) == OrderResult::LT)
      qualifying.push_back(i);
  }
  if (qualifying.empty()) throw GuardError("explore-refutation: no qualifying step");
  size_t pick;
  if (stepChoice) {
    if (std::find(qualifying.begin(), qualifying.end(), *stepChoice) == qualifying.end())
      throw GuardError("explore-refutation: chosen step does not qualify");
    pick = *stepChoice;
  } else {
    pick = qualifying[0];
    for (size_t q : qualifying)
      if (st.trail.gammaStarCompareClauses(chain.steps[q]->groundClause(),
                                           chain.steps[pick]->groundClause(),
                                           st.beta) == OrderResult::LT)
        pick = q;
  }
  st.conflict = Closure{chain.steps[pick]->clause, chain.steps[pick]->grounding};
  return pick;
}

void factorize(ProverState& st, size_t i, size_t j) {
  requireConflict(st, "factorize");
  const Closure& d = *st.conflict;
  if (i == j || i >= d.clause.lits.size() || j >= d.clause.lits.size())
    throw GuardError("factorize: bad literal indices");
  Literal gi = d.grounding(d.clause.lits[i]);
  if (!sameModuloSymmetry(gi, d.grounding(d.clause.lits[j])))
    throw GuardError("factorize: literals differ under the grounding");
  Literal aligned = alignTo(d.clause.lits[j], d.grounding, gi);
  auto mu = mgu(d.clause.lits[i], aligned);
  if (!mu) throw GuardError("factorize: literals do not unify");
  Clause out;
  for (size_t k = 0; k < d.clause.lits.size(); ++k)
    if (k != j) out.lits.push_back((*mu)(d.clause.lits[k]));
  st.conflict = Closure{out, d.grounding};
}

void equalityResolution(ProverState& st, size_t i) {
  requireConflict(st, "equality-resolution");
  const Closure& d = *st.conflict;
  if (i >= d.clause.lits.size())
    throw GuardError("equality-resolution: bad literal index");
  const Literal& l = d.clause.lits[i];
  if (l.positive) throw GuardError("equality-resolution: literal is not an inequation");
  if (d.grounding(l.lhs) != d.grounding(l.rhs))
    throw GuardError("equality-resolution: sides differ under the grounding");
  auto mu = mgu(l.lhs, l.rhs);
  if (!mu) throw GuardError("equality-resolution: sides do not unify");
  Clause out;
  for (size_t k = 0; k < d.clause.lits.size(); ++k)
    if (k != i) out.lits.push_back((*mu)(d.clause.lits[k]));
  st.conflict = Closure{out, d.grounding};
}

void backtrack(ProverState& st) {
  requireConflict(st, "backtrack");
  Clause inst = st.conflictInstance();
  if (inst.lits.empty()) throw GuardError("backtrack: empty conflict clause");
  int maxLevel = 0;
  std::vector<int> levels;
  for (const Literal& l : inst.lits) {
    levels.push_back(st.trail.levelOf(l));
    maxLevel = std::max(maxLevel, levels.back());
  }
  size_t atMax = 0, lidx = 0;
  for (size_t i = 0; i < levels.size(); ++i)
    if (levels[i] == maxLevel) {
      ++atMax;
      lidx = i;
    }
  if (atMax != 1)
    throw GuardError("backtrack: top-level conflict literal is not unique");
  if (maxLevel != st.level)
    throw GuardError("backtrack: conflict is not of the current level");
  (void)lidx;

  const Clause& learned = st.conflict->clause;
  auto instances = groundInstancesBelow(learned, st.beta, st.sig, st.cfg());
  std::vector<Clause> grounds;
  for (const Closure& c : instances) grounds.push_back(c.grounding(c.clause));
  // Minimal prefix (Gamma, K) where some grounding just became beta-false.
  std::optional<size_t> cut;
  for (size_t n = 1; n <= st.trail.size() && !cut; ++n)
    for (const Clause& g : grounds)
      if (clauseFalseInPrefix(st.trail, n, g, st.beta) &&
          !clauseFalseInPrefix(st.trail, n - 1, g, st.beta)) {
        cut = n;
        break;
      }
  if (!cut) throw GuardError("backtrack: no prefix makes the learned clause false");

  const TrailEntry& k = st.trail.entries()[*cut - 1];
  int newLevel = k.level - (k.kind == EntryKind::Decision ? 1 : 0);
  st.learned.push_back(learned);
  st.trail.popTo(*cut - 1);
  st.level = newLevel;
  st.conflict.reset();
  st.status = Status::Top;
}

void grow(ProverState& st, const Term& betaNew) {
  requireTop(st, "grow");
  if (kboCompare(betaNew, st.beta, st.cfg()) != OrderResult::GT)
    throw GuardError("grow: new bound is not larger");
  st.trail.popTo(0);
  st.level = 0;
  st.beta = betaNew;
}

void restart(ProverState& st) {
  requireTop(st, "restart");
  st.trail.popTo(0);
  st.level = 0;
}

std::vector<std::string> checkSoundState(const ProverState& st) {
  std::vector<std::string> bad;
  const Trail& tr = st.trail;
  const KboConfig& cfg = st.cfg();
  int prevLevel = 0;
  for (size_t i = 0; i < tr.size(); ++i) {
    const TrailEntry& e = tr.entries()[i];
    std::string tag = "entry " + std::to_string(i) + ": ";
    // Item 1: consistency — each literal was undefined when it was added.
    if (tr.valueOfPrefix(i, e.lit) != TruthValue::Undefined)
      bad.push_back(tag + "literal already defined by the preceding prefix");
    if (!literalBelow(e.lit, st.beta, cfg))
      bad.push_back(tag + "trail literal is not below beta");
    // Item 2/3: justification contracts and level bookkeeping.
    Clause ji = e.justGrounding(e.justClause);
    if (!ji.ground()) bad.push_back(tag + "justification is not closed");
    if (e.justLit >= e.justClause.lits.size() ||
        e.justGrounding(e.justClause.lits[e.justLit]) != e.lit)
      bad.push_back(tag + "justification does not produce the literal");
    if (tr.convPrefix(i).reducible(e.lit))
      bad.push_back(tag + "literal is reducible by the preceding conv");
    if (!clauseBelow(ji, st.beta, cfg))
      bad.push_back(tag + "justification instance is not below beta");
    if (e.kind == EntryKind::Propagated) {
      if (e.level != prevLevel) bad.push_back(tag + "propagation changed the level");
      for (size_t j = 0; j < ji.lits.size(); ++j)
        if (j != e.justLit && tr.valueOfPrefix(i, ji.lits[j]) != TruthValue::False)
          bad.push_back(tag + "justification remainder literal is not false");
    } else {
      if (e.level != prevLevel + 1) bad.push_back(tag + "decision level is not k+1");
      if (e.justClause.lits.size() != 2 ||
          e.justClause.lits[1] != complement(e.justClause.lits[0]))
        bad.push_back(tag + "decision justification is not a tautology");
    }
    prevLevel = e.level;
  }
  // Item 4: N entails U, checked on the ground instances below beta.
  try {
    std::vector<Clause> premises;
    for (const Clause& c : st.initial)
      for (const Closure& inst : groundInstancesBelow(c, st.beta, st.sig, cfg))
        premises.push_back(inst.grounding(inst.clause));
    for (size_t u = 0; u < st.learned.size(); ++u)
      for (const Closure& inst :
           groundInstancesBelow(st.learned[u], st.beta, st.sig, cfg))
        if (!oracle::groundEntails(premises, inst.grounding(inst.clause)))
          bad.push_back("learned clause " + std::to_string(u) +
                        ": instance not entailed by the initial clauses");
  } catch (const oracle::SizeLimitError&) {
    // over desk scale: entailment sampling skipped
  }
  // Item 5: a conflict closure must be beta-false.
  if (st.status == Status::Conflict) {
    if (!st.conflict) {
      bad.push_back("conflict status without closure");
    } else {
      Clause inst = st.conflictInstance();
      if (!inst.ground())
        bad.push_back("conflict closure is not closed by its grounding");
      else if (tr.betaClauseValue(inst, st.beta) != TruthValue::False)
        bad.push_back("conflict closure instance is not beta-false");
    }
  }
  if (st.status != Status::Conflict && st.conflict && st.status != Status::Bottom)
    bad.push_back("closure present outside conflict resolution");
  return bad;
}

}  // namespace scleq
