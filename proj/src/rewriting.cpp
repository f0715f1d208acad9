#include "scleq/rewriting.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>

#include "scleq/trail.hpp"

namespace scleq {

Clause RewriteStep::rest() const {
  Clause out;
  for (size_t i = 0; i < clause.lits.size(); ++i)
    if (i != litIndex) out.lits.push_back(clause.lits[i]);
  return out;
}

int RewriteStep::maxVar() const {
  int m = clause.maxVar();
  for (const auto& [v, t] : grounding.bindings()) m = std::max(m, v);
  return m;
}

RewriteStepPtr makeLeafStep(Clause clause, size_t litIndex, Subst grounding,
                            std::optional<size_t> trailIndex) {
  if (litIndex >= clause.lits.size())
    throw RewriteError("makeLeafStep: literal index out of range");
  auto s = std::make_shared<RewriteStep>();
  s->lit = clause.lits[litIndex];
  s->clause = std::move(clause);
  s->litIndex = litIndex;
  s->grounding = std::move(grounding);
  s->trailIndex = trailIndex;
  if (!s->groundLit().ground())
    throw RewriteError("makeLeafStep: grounding does not close the literal");
  return s;
}

namespace {

// Copies t along `path`, replacing the endpoint and every off-path argument
// by fresh variables; rho records what each fresh variable stood for.
Term linearSkeleton(const Term& t, const int* path, size_t n, int& fresh, Subst& rho) {
  if (n == 0) {
    Term v = Term::var(fresh++);
    rho.bind(v.varIndex(), t);
    return v;
  }
  if (t.isVar() || path[0] < 1 || static_cast<size_t>(path[0]) > t.args().size())
    throw PositionError("linearSkeleton: path leaves the term");
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (size_t k = 0; k < t.args().size(); ++k) {
    if (static_cast<int>(k) == path[0] - 1) {
      args.push_back(linearSkeleton(t.args()[k], path + 1, n - 1, fresh, rho));
    } else {
      Term v = Term::var(fresh++);
      rho.bind(v.varIndex(), t.args()[k]);
      args.push_back(v);
    }
  }
  return Term::app(t.symbol(), std::move(args));
}

}  // namespace

RewriteStepPtr rewriteInference(const RewriteStepPtr& left, const RewriteStepPtr& right,
                                const Position& p, const KboConfig& cfg) {
  if (!left->lit.positive)
    throw RewriteError("rewriteInference: left premise is not an equation");
  if (p.empty() || (p[0] != 1 && p[0] != 2))
    throw RewriteError("rewriteInference: position must start with a side index");

  // Orient the equation by its ground instance; the larger side is rewritten.
  Literal gl = left->groundLit();
  OrderResult oc = kboCompare(gl.lhs, gl.rhs, cfg);
  if (oc != OrderResult::GT && oc != OrderResult::LT)
    throw RewriteError("rewriteInference: equation sides are not strictly ordered");

  // Make the premises variable disjoint.
  int offset = right->maxVar() + 1;
  Literal leftLit = renameVars(left->lit, offset);
  Clause leftRest = renameVars(left->rest(), offset);
  Subst sigma1 = renameVars(left->grounding, offset);
  Term l1 = oc == OrderResult::GT ? leftLit.lhs : leftLit.rhs;
  Term r1 = oc == OrderResult::GT ? leftLit.rhs : leftLit.lhs;

  Literal gr = right->groundLit();
  if (subtermAt(gr, p) != sigma1(l1))
    throw RewriteError("rewriteInference: redex does not match the equation side");

  // Walk p through the non-ground literal to see whether the redex lies at a
  // structural position or below a variable.
  const Term* cur = p[0] == 1 ? &right->lit.lhs : &right->lit.rhs;
  size_t depth = 1;
  while (depth < p.size() && !cur->isVar()) {
    if (p[depth] < 1 || static_cast<size_t>(p[depth]) > cur->args().size())
      throw PositionError("rewriteInference: invalid position");
    cur = &cur->args()[static_cast<size_t>(p[depth]) - 1];
    ++depth;
  }

  Literal lit2 = right->lit;
  Clause rest2 = right->rest();
  Subst grounding = Subst::merged(sigma1, right->grounding);

  if (depth < p.size()) {
    // Below a variable: instantiate it with a fresh linear skeleton of its
    // grounding along the remaining path, then proceed structurally.
    int x = cur->varIndex();
    Term xg = right->grounding(Term::var(x));
    int fresh = std::max(offset + left->maxVar() + 1, right->maxVar() + 1);
    Subst rho;
    Term skel = linearSkeleton(xg, p.data() + depth, p.size() - depth, fresh, rho);
    Subst delta;
    delta.bind(x, skel);
    lit2 = delta(lit2);
    rest2 = delta(rest2);
    grounding = Subst::merged(grounding, rho);
  }

  auto unifier = mgu(subtermAt(lit2, p), l1);
  assert(unifier.has_value());  // both instantiate to the same ground term
  const Subst& mu = *unifier;

  Literal concl = mu(replaceAt(lit2, p, r1));
  // Present the larger ground side first when the sides are ordered.
  Literal gc = grounding(concl);
  if (kboCompare(gc.lhs, gc.rhs, cfg) == OrderResult::LT) std::swap(concl.lhs, concl.rhs);

  auto out = std::make_shared<RewriteStep>();
  out->lit = concl;
  out->clause.lits.push_back(concl);
  for (const Literal& l : leftRest.lits) out->clause.lits.push_back(mu(l));
  for (const Literal& l : rest2.lits) out->clause.lits.push_back(mu(l));
  out->litIndex = 0;
  out->grounding = std::move(grounding);
  out->left = left;
  out->right = right;
  out->pos = p;
  if (!out->groundLit().ground())
    throw RewriteError("rewriteInference: conclusion is not closed by the grounding");
  return out;
}

std::optional<std::pair<size_t, Position>> Trs::findRedex(const Term& t) const {
  for (const Position& p : positions(t)) {
    const Term& sub = subtermAt(t, p);
    for (size_t i = 0; i < rules_.size(); ++i)
      if (sub == rules_[i].lhs) return std::make_pair(i, p);
  }
  return std::nullopt;
}

bool Trs::reducible(const Literal& l) const { return reducible(l.lhs) || reducible(l.rhs); }

bool Trs::reducible(const Subst& s) const {
  for (const auto& [v, t] : s.bindings())
    if (reducible(t)) return true;
  return false;
}

std::pair<Term, std::vector<NormalizeTraceEntry>> normalize(const Term& t, const Trs& r) {
  Term cur = t;
  std::vector<NormalizeTraceEntry> trace;
  for (;;) {
    auto redex = r.findRedex(cur);
    if (!redex) return {cur, trace};
    cur = replaceAt(cur, redex->second, r.rules()[redex->first].rhs);
    trace.push_back({redex->first, redex->second});
  }
}

RewriteStepPtr normalizeStepLiteral(RewriteStepPtr step, const Trs& r, const KboConfig& cfg) {
  for (;;) {
    Literal g = step->groundLit();
    std::optional<size_t> rule;
    Position pos;
    for (int side = 1; side <= 2 && !rule; ++side) {
      auto redex = r.findRedex(side == 1 ? g.lhs : g.rhs);
      if (redex) {
        rule = redex->first;
        pos.assign(1, side);
        pos.insert(pos.end(), redex->second.begin(), redex->second.end());
      }
    }
    if (!rule) return step;
    step = rewriteInference(r.rules()[*rule].proof, step, pos, cfg);
  }
}

Trs completeGround(const std::vector<RewriteStepPtr>& equations, const KboConfig& cfg) {
  std::deque<RewriteStepPtr> pending(equations.begin(), equations.end());
  std::vector<Rule> rules;
  while (!pending.empty()) {
    RewriteStepPtr step = pending.front();
    pending.pop_front();
    if (!step->lit.positive)
      throw RewriteError("completeGround: inequation among the input equations");
    step = normalizeStepLiteral(step, Trs(rules), cfg);
    Literal g = step->groundLit();
    if (g.lhs == g.rhs) continue;
    OrderResult c = kboCompare(g.lhs, g.rhs, cfg);
    assert(c == OrderResult::GT || c == OrderResult::LT);  // ground KBO is total
    Rule fresh{c == OrderResult::GT ? g.lhs : g.rhs,
               c == OrderResult::GT ? g.rhs : g.lhs, step};
    // Interreduce: rules touched by the new left-hand side are re-derived.
    Trs probe({fresh});
    std::vector<Rule> kept;
    for (Rule& old : rules) {
      if (probe.reducible(old.lhs) || probe.reducible(old.rhs))
        pending.push_back(old.proof);
      else
        kept.push_back(std::move(old));
    }
    kept.push_back(std::move(fresh));
    rules = std::move(kept);
  }
  return Trs(std::move(rules));
}

Trs completeGroundPlain(const std::vector<std::pair<Term, Term>>& equations,
                        const KboConfig& cfg) {
  std::deque<std::pair<Term, Term>> pending(equations.begin(), equations.end());
  std::vector<Rule> rules;
  while (!pending.empty()) {
    auto [a, b] = pending.front();
    pending.pop_front();
    Trs current(rules);
    a = normalize(a, current).first;
    b = normalize(b, current).first;
    if (a == b) continue;
    OrderResult c = kboCompare(a, b, cfg);
    assert(c == OrderResult::GT || c == OrderResult::LT);
    Rule fresh{c == OrderResult::GT ? a : b, c == OrderResult::GT ? b : a, nullptr};
    Trs probe({fresh});
    std::vector<Rule> kept;
    for (Rule& old : rules) {
      if (probe.reducible(old.lhs) || probe.reducible(old.rhs))
        pending.emplace_back(old.lhs, old.rhs);
      else
        kept.push_back(std::move(old));
    }
    kept.push_back(std::move(fresh));
    rules = std::move(kept);
  }
  return Trs(std::move(rules));
}

ReductionChain chainFrom(const RewriteStepPtr& last) {
  ReductionChain chain;
  std::vector<const RewriteStep*> seen;
  std::function<void(const RewriteStepPtr&)> visit = [&](const RewriteStepPtr& s) {
    if (!s) return;
    if (std::find(seen.begin(), seen.end(), s.get()) != seen.end()) return;
    visit(s->left);
    visit(s->right);
    seen.push_back(s.get());
    chain.steps.push_back(s);
  };
  visit(last);
  return chain;
}

ReductionChain reductionChainApplication(const Trail& trail, const RewriteStepPtr& target,
                                         const KboConfig& cfg) {
  return chainFrom(normalizeStepLiteral(target, trail.conv(), cfg));
}

ReductionChain refutation(const Trail& trail, const RewriteStepPtr& target,
                          const KboConfig& cfg) {
  if (!target->lit.positive) {
    RewriteStepPtr norm = normalizeStepLiteral(target, trail.conv(), cfg);
    Literal g = norm->groundLit();
    if (g.lhs != g.rhs)
      throw RewriteError("refutation: inequation does not collapse under conv");
    return chainFrom(norm);
  }
  // Positive target: recomplete the trail equations together with the target,
  // then look for a trail inequation whose sides join.
  std::vector<RewriteStepPtr> eqs;
  for (size_t i = 0; i < trail.size(); ++i)
    if (trail.entries()[i].lit.positive) eqs.push_back(trail.leafStep(i));
  eqs.push_back(target);
  Trs extended = completeGround(eqs, cfg);
  for (size_t i = 0; i < trail.size(); ++i) {
    if (trail.entries()[i].lit.positive) continue;
    RewriteStepPtr norm = normalizeStepLiteral(trail.leafStep(i), extended, cfg);
    Literal g = norm->groundLit();
    if (g.lhs == g.rhs) return chainFrom(norm);
  }
  throw RewriteError("refutation: equation is not false in the trail");
}

Trs buildConv(const Trail& trail, const KboConfig& cfg) {
  std::vector<RewriteStepPtr> eqs;
  for (size_t i = 0; i < trail.size(); ++i)
    if (trail.entries()[i].lit.positive) eqs.push_back(trail.leafStep(i));
  return completeGround(eqs, cfg);
}

}  // namespace scleq
