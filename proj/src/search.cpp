#include "scleq/search.hpp"

#include <algorithm>

namespace scleq {

namespace {

Subst normalizeSubst(const Subst& s, const Trs& r) {
  Subst out;
  for (const auto& [v, t] : s.bindings()) out.bind(v, normalize(t, r).first);
  return out;
}

Literal reducedForm(const Literal& l, const Trs& r) {
  return {l.positive, normalize(l.lhs, r).first, normalize(l.rhs, r).first};
}

RuleApplication mkRule(std::string rule, int clause = -1, int lit = -1, int aux = -1) {
  RuleApplication ra;
  ra.rule = std::move(rule);
  ra.clauseIndex = clause;
  ra.litIndex = lit;
  ra.auxIndex = aux;
  return ra;
}

std::vector<Clause> liveClauses(const Pool& pool) {
  std::vector<Clause> out;
  for (const PoolEntry& e : pool)
    if (e.clause) out.push_back(*e.clause);
  return out;
}

Clause dedupLits(const Clause& c) {
  Clause out;
  for (const Literal& l : c.lits) {
    bool seen = false;
    for (const Literal& k : out.lits)
      if (sameModuloSymmetry(l, k)) {
        seen = true;
        break;
      }
    if (!seen) out.lits.push_back(l);
  }
  return out;
}

bool compatible(const Subst& a, const Subst& b) {
  for (const auto& [v, t] : b.bindings()) {
    auto cur = a.lookup(v);
    if (cur && *cur != t) return false;
  }
  return true;
}

// Extends `acc` so that pattern literal pl matches target tl (either side
// orientation for the unordered equation sides).
std::optional<Subst> matchLitUnder(const Literal& pl, const Literal& tl, const Subst& acc) {
  if (pl.positive != tl.positive) return std::nullopt;
  for (int o = 0; o < 2; ++o) {
    Term pa = o == 0 ? pl.lhs : pl.rhs;
    Term pb = o == 0 ? pl.rhs : pl.lhs;
    auto ma = matchTerm(pa, tl.lhs);
    if (!ma || !compatible(acc, *ma)) continue;
    Subst merged1 = Subst::merged(acc, *ma);
    auto mb = matchTerm(pb, tl.rhs);
    if (!mb || !compatible(merged1, *mb)) continue;
    return Subst::merged(merged1, *mb);
  }
  return std::nullopt;
}

bool subsumesRec(const Clause& c, const Clause& d, size_t i, std::vector<bool>& used,
                 const Subst& acc) {
  if (i == c.lits.size()) return true;
  for (size_t j = 0; j < d.lits.size(); ++j) {
    if (used[j]) continue;
    auto ext = matchLitUnder(c.lits[i], d.lits[j], acc);
    if (!ext) continue;
    used[j] = true;
    if (subsumesRec(c, d, i + 1, used, *ext)) return true;
    used[j] = false;
  }
  return false;
}

// C tau a strict sub-multiset of D for some matcher tau.
bool strictlySubsumes(const Clause& c, const Clause& d) {
  if (c.lits.size() >= d.lits.size()) return false;
  std::vector<bool> used(d.lits.size(), false);
  return subsumesRec(c, d, 0, used, Subst{});
}

bool isTautology(const Clause& c) {
  for (size_t i = 0; i < c.lits.size(); ++i) {
    if (c.lits[i].positive && c.lits[i].lhs == c.lits[i].rhs) return true;
    for (size_t j = i + 1; j < c.lits.size(); ++j)
      if (sameModuloSymmetry(c.lits[i], complement(c.lits[j]))) return true;
  }
  return false;
}

}  // namespace

Term defaultBeta(const Signature& sig, const KboConfig& cfg) {
  std::optional<int> fmax, cmax;
  for (int s = 0; s < sig.size(); ++s) {
    if (sig[s].arity == 0) {
      if (!cmax || cfg.precRank[static_cast<size_t>(s)] >
                       cfg.precRank[static_cast<size_t>(*cmax)])
        cmax = s;
    } else {
      if (!fmax || cfg.precRank[static_cast<size_t>(s)] >
                       cfg.precRank[static_cast<size_t>(*fmax)])
        fmax = s;
    }
  }
  if (!cmax) throw NoGroundTermsError("defaultBeta: signature has no constant");
  Term t = Term::app(*cmax);
  if (!fmax) return t;
  Term base = t;
  for (int i = 0; i < 2; ++i) {
    std::vector<Term> args(static_cast<size_t>(sig[*fmax].arity), base);
    args[0] = t;
    t = Term::app(*fmax, std::move(args));
  }
  return t;
}

Term growBeta(const Term& beta, const Signature& sig, const KboConfig& cfg) {
  std::optional<int> fmax, cmax;
  for (int s = 0; s < sig.size(); ++s) {
    if (sig[s].arity == 0) {
      if (!cmax || cfg.precRank[static_cast<size_t>(s)] >
                       cfg.precRank[static_cast<size_t>(*cmax)])
        cmax = s;
    } else {
      if (!fmax || cfg.precRank[static_cast<size_t>(s)] >
                       cfg.precRank[static_cast<size_t>(*fmax)])
        fmax = s;
    }
  }
  if (!fmax) throw NoGroundTermsError("growBeta: no non-constant symbol to grow with");
  std::vector<Term> args(static_cast<size_t>(sig[*fmax].arity), Term::app(*cmax));
  args[0] = beta;
  return Term::app(*fmax, std::move(args));
}

std::optional<std::pair<size_t, Subst>> findConflict(const ProverState& st,
                                                     const Pool& pool) {
  for (size_t i = 0; i < pool.size(); ++i) {
    if (!pool[i].clause) continue;
    for (const Closure& cl :
         groundInstancesBelow(*pool[i].clause, st.beta, st.sig, st.cfg())) {
      Subst sn = normalizeSubst(cl.grounding, st.trail.conv());
      Clause inst = sn(cl.clause);
      bool allFalse = true;
      for (const Literal& l : inst.lits)
        if (!literalBelow(l, st.beta, st.cfg()) ||
            st.trail.valueOf(l) != TruthValue::False) {
          allFalse = false;
          break;
        }
      if (allFalse) return std::make_pair(i, sn);
    }
  }
  return std::nullopt;
}

namespace {

std::optional<Literal> propagationCandidate(const ProverState& st, const Clause& c,
                                            size_t li, const Subst& sn) {
  Clause inst = sn(c);
  if (!clauseBelow(inst, st.beta, st.cfg())) return std::nullopt;
  Literal lg = inst.lits[li];
  if (!literalBelow(lg, st.beta, st.cfg()) ||
      st.trail.valueOf(lg) != TruthValue::Undefined)
    return std::nullopt;
  for (size_t j = 0; j < inst.lits.size(); ++j) {
    if (j == li || sameModuloSymmetry(inst.lits[j], lg)) continue;
    if (st.trail.valueOf(inst.lits[j]) != TruthValue::False) return std::nullopt;
  }
  return reducedForm(lg, st.trail.conv());
}

bool propagatable(const ProverState& st, const Pool& pool, const Literal& target) {
  for (size_t i = 0; i < pool.size(); ++i) {
    if (!pool[i].clause) continue;
    const Clause& c = *pool[i].clause;
    for (const Closure& cl : groundInstancesBelow(c, st.beta, st.sig, st.cfg())) {
      Subst sn = normalizeSubst(cl.grounding, st.trail.conv());
      for (size_t li = 0; li < c.lits.size(); ++li) {
        auto pushed = propagationCandidate(st, c, li, sn);
        if (pushed && sameModuloSymmetry(*pushed, target)) return true;
      }
    }
  }
  return false;
}

std::optional<Literal> decisionCandidate(const ProverState& st, const Clause& c,
                                         size_t li, const Subst& sn) {
  Clause inst = sn(c);
  if (!clauseBelow(inst, st.beta, st.cfg())) return std::nullopt;
  Literal lg = inst.lits[li];
  if (!literalBelow(lg, st.beta, st.cfg()) ||
      st.trail.valueOf(lg) != TruthValue::Undefined)
    return std::nullopt;
  Clause c0;
  for (size_t j = 0; j < inst.lits.size(); ++j)
    if (j != li) c0.lits.push_back(inst.lits[j]);
  if (st.trail.betaClauseValue(c0, st.beta) == TruthValue::False) return std::nullopt;
  return reducedForm(lg, st.trail.conv());
}

}  // namespace

std::optional<Candidate> findPropagation(const ProverState& st, const Pool& pool) {
  std::optional<Candidate> best;
  for (size_t i = 0; i < pool.size(); ++i) {
    if (!pool[i].clause) continue;
    const Clause& c = *pool[i].clause;
    for (const Closure& cl : groundInstancesBelow(c, st.beta, st.sig, st.cfg())) {
      Subst sn = normalizeSubst(cl.grounding, st.trail.conv());
      for (size_t li = 0; li < c.lits.size(); ++li) {
        auto pushed = propagationCandidate(st, c, li, sn);
        if (!pushed) continue;
        if (!best || compareLiterals(*pushed, best->pushed, st.cfg()) == OrderResult::LT)
          best = Candidate{i, li, sn, *pushed};
      }
    }
  }
  return best;
}

std::optional<Candidate> findDecision(const ProverState& st, const Pool& pool,
                                      const std::vector<Literal>& script,
                                      size_t scriptPos) {
  if (scriptPos < script.size()) {
    const Literal& target = script[scriptPos];
    for (size_t i = 0; i < pool.size(); ++i) {
      if (!pool[i].clause) continue;
      const Clause& c = *pool[i].clause;
      for (const Closure& cl : groundInstancesBelow(c, st.beta, st.sig, st.cfg())) {
        Subst sn = normalizeSubst(cl.grounding, st.trail.conv());
        for (size_t li = 0; li < c.lits.size(); ++li) {
          auto pushed = decisionCandidate(st, c, li, sn);
          if (!pushed || !sameModuloSymmetry(*pushed, target)) continue;
          if (propagatable(st, pool, complement(*pushed)))
            throw GuardError("scripted decision complements a propagatable literal");
          return Candidate{i, li, sn, *pushed};
        }
      }
    }
    throw GuardError("scripted decision is not decidable in the current state");
  }

  // Default heuristic: the clause literal with the most undefined ground
  // instances, then the smallest instance; skip literals whose complement
  // could be propagated instead.
  struct Group {
    size_t clauseIndex, litIndex;
    std::vector<std::pair<Subst, Literal>> cands;
  };
  std::vector<Group> groups;
  for (size_t i = 0; i < pool.size(); ++i) {
    if (!pool[i].clause) continue;
    const Clause& c = *pool[i].clause;
    std::vector<Group> local(c.lits.size());
    for (size_t li = 0; li < c.lits.size(); ++li)
      local[li] = Group{i, li, {}};
    for (const Closure& cl : groundInstancesBelow(c, st.beta, st.sig, st.cfg())) {
      Subst sn = normalizeSubst(cl.grounding, st.trail.conv());
      for (size_t li = 0; li < c.lits.size(); ++li) {
        auto pushed = decisionCandidate(st, c, li, sn);
        if (pushed) local[li].cands.emplace_back(sn, *pushed);
      }
    }
    for (Group& g : local)
      if (!g.cands.empty()) groups.push_back(std::move(g));
  }
  while (!groups.empty()) {
    size_t gi = 0;
    for (size_t g = 1; g < groups.size(); ++g)
      if (groups[g].cands.size() > groups[gi].cands.size()) gi = g;
    Group& g = groups[gi];
    size_t ci = 0;
    for (size_t c = 1; c < g.cands.size(); ++c)
      if (compareLiterals(g.cands[c].second, g.cands[ci].second, st.cfg()) ==
          OrderResult::LT)
        ci = c;
    if (propagatable(st, pool, complement(g.cands[ci].second))) {
      g.cands.erase(g.cands.begin() + static_cast<long>(ci));
      if (g.cands.empty()) groups.erase(groups.begin() + static_cast<long>(gi));
      continue;
    }
    return Candidate{g.clauseIndex, g.litIndex, g.cands[ci].first, g.cands[ci].second};
  }
  return std::nullopt;
}

SimplifyOutcome simplifyPool(Pool& pool, const ProverState& st) {
  SimplifyOutcome out;
  const KboConfig& cfg = st.cfg();
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < pool.size() && !changed; ++i) {
      if (!pool[i].clause) continue;
      Clause& c = *pool[i].clause;
      if (isTautology(c)) {
        out.steps.push_back(mkRule("delete-tautology", static_cast<int>(i)));
        pool[i].clause.reset();
        changed = out.changed = true;
        break;
      }
      for (size_t k = 0; k < c.lits.size(); ++k)
        if (!c.lits[k].positive && c.lits[k].lhs == c.lits[k].rhs) {
          c.lits.erase(c.lits.begin() + static_cast<long>(k));
          out.steps.push_back(
              mkRule("delete-trivial", static_cast<int>(i), static_cast<int>(k)));
          if (c.lits.empty()) out.emptyClause = true;
          changed = out.changed = true;
          break;
        }
      if (changed) break;
      // Unit rewriting with oriented instances of positive unit equations.
      // Only learned units fire: the justifying lemma assumes a state reached
      // by conflict resolution, and eager input-unit rewriting would bypass
      // the propagation order the goldens pin down.
      for (size_t j = 0; j < pool.size() && !changed; ++j) {
        if (j == i || !pool[j].learned || !pool[j].clause ||
            pool[j].clause->lits.size() != 1)
          continue;
        const Literal& unit = pool[j].clause->lits[0];
        if (!unit.positive) continue;
        for (int o = 0; o < 2 && !changed; ++o) {
          Term from = o == 0 ? unit.lhs : unit.rhs;
          Term to = o == 0 ? unit.rhs : unit.lhs;
          for (size_t k = 0; k < c.lits.size() && !changed; ++k) {
            for (const Position& p : positions(c.lits[k])) {
              auto m = matchTerm(from, subtermAt(c.lits[k], p));
              if (!m || kboCompare((*m)(to), (*m)(from), cfg) != OrderResult::LT)
                continue;
              if (!clauseBelow(c, st.beta, cfg)) out.restartNeeded = true;
              c.lits[k] = replaceAt(c.lits[k], p, (*m)(to));
              out.steps.push_back(mkRule("rewrite", static_cast<int>(i),
                                           static_cast<int>(k), static_cast<int>(j)));
              changed = out.changed = true;
              break;
            }
          }
        }
      }
      if (changed) break;
      // Unit subsumption resolution, same learned-unit restriction.
      for (size_t j = 0; j < pool.size() && !changed; ++j) {
        if (j == i || !pool[j].learned || !pool[j].clause ||
            pool[j].clause->lits.size() != 1)
          continue;
        Literal negUnit = complement(pool[j].clause->lits[0]);
        for (size_t k = 0; k < c.lits.size(); ++k)
          if (matchLitUnder(negUnit, c.lits[k], Subst{})) {
            c.lits.erase(c.lits.begin() + static_cast<long>(k));
            out.steps.push_back(mkRule("unit-resolve", static_cast<int>(i),
                                         static_cast<int>(k), static_cast<int>(j)));
            if (c.lits.empty()) out.emptyClause = true;
            changed = out.changed = true;
            break;
          }
      }
      if (changed) break;
      // Strict subsumption deletion.
      for (size_t j = 0; j < pool.size(); ++j) {
        if (j == i || !pool[j].clause) continue;
        if (strictlySubsumes(*pool[j].clause, c)) {
          out.steps.push_back(
              mkRule("subsume", static_cast<int>(i), -1, static_cast<int>(j)));
          pool[i].clause.reset();
          changed = out.changed = true;
          break;
        }
      }
    }
  }
  return out;
}

namespace {

struct Driver {
  Problem prob;
  SearchConfig cfg;
  ProverState st;
  Pool pool;
  std::vector<RuleApplication> trace;
  std::vector<LearnEvent> learns;
  std::vector<std::string> audits;
  size_t scriptPos = 0;
  int grows = 0;
  int steps = 0;
  bool lastWasDecide = false;
  std::string stopReason;

  Driver(const Problem& p, const SearchConfig& c)
      : prob(p),
        cfg(c),
        st(p.sig, p.cfg, p.clauses,
           c.beta ? *c.beta : (p.beta ? *p.beta : defaultBeta(p.sig, p.cfg))) {
    for (const Clause& cl : p.clauses) pool.push_back({cl, false});
  }

  void record(RuleApplication ra) {
    trace.push_back(std::move(ra));
    if (cfg.audit)
      for (const std::string& v : checkSoundState(st))
        audits.push_back("after " + trace.back().rule + " (step " +
                         std::to_string(trace.size()) + "): " + v);
  }

  RunResult finish(Verdict v, std::string reason) {
    RunResult r(st);
    r.verdict = v;
    r.trace = std::move(trace);
    r.finalClauses = liveClauses(pool);
    r.learns = std::move(learns);
    r.auditViolations = std::move(audits);
    r.stopReason = std::move(reason);
    return r;
  }

  // Returns false on an internal invariant failure (stopReason set).
  bool resolveConflict(bool afterDecide) {
    int skips = 0;
    while (st.status == Status::Conflict) {
      if (++steps > cfg.maxSteps) {
        stopReason = "step limit during conflict resolution";
        return false;
      }
      Clause inst = st.conflictInstance();
      bool applied = false;
      for (size_t i = 0; i < inst.lits.size() && !applied; ++i)
        for (size_t j = i + 1; j < inst.lits.size() && !applied; ++j)
          if (sameModuloSymmetry(inst.lits[i], inst.lits[j])) {
            factorize(st, i, j);
            record(mkRule("factorize", -1, static_cast<int>(i), static_cast<int>(j)));
            applied = true;
          }
      if (applied) continue;
      for (size_t i = 0; i < inst.lits.size() && !applied; ++i)
        if (!inst.lits[i].positive && inst.lits[i].lhs == inst.lits[i].rhs) {
          equalityResolution(st, i);
          record(mkRule("equality-resolution", -1, static_cast<int>(i)));
          applied = true;
        }
      if (applied) continue;
      if (st.conflict->clause.lits.empty()) {
        st.status = Status::Bottom;
        return true;
      }
      try {
        skip(st);
        record(mkRule("skip"));
        ++skips;
        continue;
      } catch (const GuardError&) {
      }
      bool btAllowed = skips >= 1;
      if (!btAllowed && afterDecide && !st.trail.empty()) {
        Literal compTop = complement(st.trail.entries().back().lit);
        for (const Literal& l : inst.lits)
          if (sameModuloSymmetry(l, compTop)) {
            btAllowed = true;
            break;
          }
      }
      if (btAllowed) {
        try {
          LearnEvent ev{st.conflict->clause, *st.conflict, st.trail,
                        liveClauses(pool), st.beta};
          backtrack(st);
          Clause fresh = dedupLits(ev.clause);
          for (const LearnEvent& prior : learns)
            if (clauseEqualModuloRenaming(dedupLits(prior.clause), fresh)) {
              stopReason = "learned clause repeated, regularity violated";
              return false;
            }
          learns.push_back(std::move(ev));
          pool.push_back({st.learned.back(), true});
          record(mkRule("backtrack", static_cast<int>(pool.size() - 1)));
          return true;
        } catch (const GuardError&) {
        }
      }
      try {
        size_t pick = exploreRefutation(st);
        record(mkRule("explore-refutation", -1, -1, static_cast<int>(pick)));
      } catch (const GuardError& e) {
        stopReason = std::string("conflict resolution stalled: ") + e.what();
        return false;
      }
    }
    return true;
  }

  RunResult run() {
    for (;;) {
      if (++steps > cfg.maxSteps) return finish(Verdict::ResourceOut, "step limit");
      SimplifyOutcome simp = simplifyPool(pool, st);
      for (RuleApplication& ra : simp.steps) trace.push_back(std::move(ra));
      if (simp.emptyClause)
        return finish(Verdict::Unsatisfiable, "empty clause by simplification");
      if (simp.restartNeeded && !st.trail.empty()) {
        restart(st);
        record(mkRule("restart"));
        lastWasDecide = false;
        continue;
      }
      if (auto c = findConflict(st, pool)) {
        RuleApplication ra = mkRule("conflict", static_cast<int>(c->first));
        ra.subst = c->second;
        conflict(st, *pool[c->first].clause, c->second);
        record(std::move(ra));
        if (st.status == Status::Bottom)
          return finish(Verdict::Unsatisfiable, "conflict at level 0");
        bool afterDecide = lastWasDecide;
        lastWasDecide = false;
        if (!resolveConflict(afterDecide))
          return finish(Verdict::ResourceOut, stopReason);
        if (st.status == Status::Bottom)
          return finish(Verdict::Unsatisfiable, "empty clause learned");
        continue;
      }
      if (scriptPos < prob.decisions.size()) {
        std::optional<Candidate> d;
        try {
          d = findDecision(st, pool, prob.decisions, scriptPos);
        } catch (const GuardError& e) {
          return finish(Verdict::ResourceOut, e.what());
        }
        RuleApplication ra = mkRule("decide", static_cast<int>(d->clauseIndex),
                                        static_cast<int>(d->litIndex));
        ra.subst = d->sigma;
        decide(st, *pool[d->clauseIndex].clause, d->sigma, d->litIndex);
        record(std::move(ra));
        ++scriptPos;
        lastWasDecide = true;
        continue;
      }
      if (auto p = findPropagation(st, pool)) {
        RuleApplication ra = mkRule("propagate", static_cast<int>(p->clauseIndex),
                                        static_cast<int>(p->litIndex));
        ra.subst = p->sigma;
        propagate(st, *pool[p->clauseIndex].clause, p->sigma, p->litIndex);
        record(std::move(ra));
        lastWasDecide = false;
        continue;
      }
      if (auto d = findDecision(st, pool, {}, 0)) {
        RuleApplication ra = mkRule("decide", static_cast<int>(d->clauseIndex),
                                        static_cast<int>(d->litIndex));
        ra.subst = d->sigma;
        decide(st, *pool[d->clauseIndex].clause, d->sigma, d->litIndex);
        record(std::move(ra));
        lastWasDecide = true;
        continue;
      }
      if (grows < cfg.growLimit) {
        Term nb = growBeta(st.beta, prob.sig, prob.cfg);
        grow(st, nb);
        record(mkRule("grow"));
        ++grows;
        lastWasDecide = false;
        continue;
      }
      return finish(Verdict::BoundedModel, "stuck state");
    }
  }
};

}  // namespace

RunResult run(const Problem& p, const SearchConfig& cfg) {
  Driver d(p, cfg);
  return d.run();
}

RunResult replay(const Problem& p, const SearchConfig& cfg,
                 const std::vector<RuleApplication>& trace) {
  Driver d(p, cfg);
  bool simplified = false;
  bool sawEmpty = false;
  auto isSimplify = [](const std::string& r) {
    return r == "rewrite" || r == "subsume" || r == "unit-resolve" ||
           r == "delete-trivial" || r == "delete-tautology";
  };
  for (const RuleApplication& ra : trace) {
    if (isSimplify(ra.rule)) {
      if (!simplified) {
        sawEmpty = simplifyPool(d.pool, d.st).emptyClause || sawEmpty;
        simplified = true;
      }
      continue;
    }
    simplified = false;
    if (ra.rule == "restart") {
      restart(d.st);
    } else if (ra.rule == "conflict") {
      conflict(d.st, *d.pool[static_cast<size_t>(ra.clauseIndex)].clause, ra.subst);
    } else if (ra.rule == "propagate") {
      propagate(d.st, *d.pool[static_cast<size_t>(ra.clauseIndex)].clause, ra.subst,
                static_cast<size_t>(ra.litIndex));
    } else if (ra.rule == "decide") {
      decide(d.st, *d.pool[static_cast<size_t>(ra.clauseIndex)].clause, ra.subst,
             static_cast<size_t>(ra.litIndex));
    } else if (ra.rule == "factorize") {
      factorize(d.st, static_cast<size_t>(ra.litIndex), static_cast<size_t>(ra.auxIndex));
    } else if (ra.rule == "equality-resolution") {
      equalityResolution(d.st, static_cast<size_t>(ra.litIndex));
    } else if (ra.rule == "skip") {
      skip(d.st);
    } else if (ra.rule == "explore-refutation") {
      exploreRefutation(d.st, static_cast<size_t>(ra.auxIndex));
    } else if (ra.rule == "backtrack") {
      backtrack(d.st);
      d.pool.push_back({d.st.learned.back(), true});
    } else if (ra.rule == "grow") {
      grow(d.st, growBeta(d.st.beta, p.sig, p.cfg));
    } else {
      throw GuardError("replay: unknown rule " + ra.rule);
    }
  }
  // one trailing simplification round may precede the final verdict
  sawEmpty = simplifyPool(d.pool, d.st).emptyClause || sawEmpty;
  return d.finish(d.st.status == Status::Bottom || sawEmpty
                      ? Verdict::Unsatisfiable
                      : Verdict::BoundedModel,
                  "replayed");
}

}  // namespace scleq
