#include "scleq/trail.hpp"

#include <algorithm>
#include <sstream>

namespace scleq {

Trail::Trail(KboConfig cfg) : cfg_(std::move(cfg)) { convs_.emplace_back(); }

int Trail::currentLevel() const { return entries_.empty() ? 0 : entries_.back().level; }

void Trail::push(TrailEntry e) {
  if (!e.lit.ground()) throw TrailError("push: trail literal must be ground");
  if (e.justLit >= e.justClause.lits.size())
    throw TrailError("push: justification literal index out of range");
  if (e.justGrounding(e.justClause.lits[e.justLit]) != e.lit)
    throw TrailError("push: justification does not produce the trail literal");
  if (!e.justGrounding(e.justClause).ground())
    throw TrailError("push: justification grounding is not closing");
  int expected = e.kind == EntryKind::Decision ? currentLevel() + 1 : currentLevel();
  if (e.level != expected)
    throw TrailError("push: level " + std::to_string(e.level) + ", expected " +
                     std::to_string(expected));
  if (valueOf(e.lit) != TruthValue::Undefined)
    throw TrailError("push: literal already defined in the trail");
  if (conv().reducible(e.lit))
    throw TrailError("push: literal is reducible by conv");

  entries_.push_back(std::move(e));
  leaves_.push_back(makeLeafStep(entries_.back().justClause, entries_.back().justLit,
                                 entries_.back().justGrounding, entries_.size() - 1));
  std::vector<RewriteStepPtr> eqs;
  for (size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].lit.positive) eqs.push_back(leaves_[i]);
  convs_.push_back(completeGround(eqs, cfg_));
}

void Trail::popTo(size_t n) {
  if (n > entries_.size()) throw TrailError("popTo: prefix longer than the trail");
  entries_.resize(n);
  leaves_.resize(n);
  convs_.resize(n + 1);
}

RewriteStepPtr Trail::leafStep(size_t i) const { return leaves_.at(i); }

TruthValue Trail::valueAmong(const std::vector<size_t>& idxs, const Literal& l) const {
  if (!l.ground()) throw TrailError("valueOf: literal must be ground");
  std::vector<std::pair<Term, Term>> eqs;
  for (size_t i : idxs)
    if (entries_[i].lit.positive) eqs.emplace_back(entries_[i].lit.lhs, entries_[i].lit.rhs);
  Trs r = completeGroundPlain(eqs, cfg_);
  auto joins = [&](const Term& a, const Term& b) {
    return normalize(a, r).first == normalize(b, r).first;
  };
  // The subsequence entails s != t iff assuming s = t merges the two sides
  // of one of its inequations.
  auto entailsNeg = [&](const Literal& neg) {
    auto extended = eqs;
    extended.emplace_back(neg.lhs, neg.rhs);
    Trs r2 = completeGroundPlain(extended, cfg_);
    for (size_t i : idxs) {
      const Literal& e = entries_[i].lit;
      if (!e.positive && normalize(e.lhs, r2).first == normalize(e.rhs, r2).first)
        return true;
    }
    return false;
  };
  if (l.positive) {
    if (joins(l.lhs, l.rhs)) return TruthValue::True;
    if (entailsNeg(complement(l))) return TruthValue::False;
    return TruthValue::Undefined;
  }
  if (entailsNeg(l)) return TruthValue::True;
  if (joins(l.lhs, l.rhs)) return TruthValue::False;
  return TruthValue::Undefined;
}

TruthValue Trail::valueOfPrefix(size_t n, const Literal& l) const {
  if (n > entries_.size()) throw TrailError("valueOfPrefix: prefix longer than the trail");
  std::vector<size_t> idxs(n);
  for (size_t i = 0; i < n; ++i) idxs[i] = i;
  return valueAmong(idxs, l);
}

TruthValue Trail::betaValueOf(const Literal& l, const Term& beta) const {
  if (!literalBelow(l, beta, cfg_)) return TruthValue::Undefined;
  return valueOf(l);
}

TruthValue Trail::clauseValue(const Clause& c) const {
  bool allFalse = true;
  for (const Literal& l : c.lits) {
    TruthValue v = valueOf(l);
    if (v == TruthValue::True) return TruthValue::True;
    if (v != TruthValue::False) allFalse = false;
  }
  return allFalse ? TruthValue::False : TruthValue::Undefined;
}

TruthValue Trail::betaClauseValue(const Clause& c, const Term& beta) const {
  bool allFalse = true;
  for (const Literal& l : c.lits) {
    TruthValue v = betaValueOf(l, beta);
    if (v == TruthValue::True) return TruthValue::True;
    if (v != TruthValue::False) allFalse = false;
  }
  return allFalse ? TruthValue::False : TruthValue::Undefined;
}

std::optional<size_t> Trail::definingIndex(const Literal& l) const {
  for (size_t n = 0; n <= entries_.size(); ++n)
    if (valueOfPrefix(n, l) != TruthValue::Undefined)
      return n == 0 ? std::nullopt : std::optional<size_t>(n - 1);
  throw TrailError("definingIndex: literal is undefined in the trail");
}

std::vector<size_t> Trail::definingCore(const Literal& l) const {
  auto def = definingIndex(l);
  if (!def) return {};
  std::vector<size_t> core;
  for (size_t i = 0; i <= *def; ++i) core.push_back(i);
  // Greedy minimization: drop earlier entries while the literal stays
  // defined; the defining literal itself always stays.
  for (size_t i = 0; i + 1 < core.size();) {
    std::vector<size_t> without = core;
    without.erase(without.begin() + static_cast<long>(i));
    if (valueAmong(without, l) != TruthValue::Undefined)
      core = std::move(without);
    else
      ++i;
  }
  return core;
}

int Trail::levelOf(const Literal& l) const {
  auto def = definingIndex(l);
  return def ? entries_[*def].level : 0;
}

int Trail::clauseLevel(const Clause& c) const {
  int level = 0;
  for (const Literal& l : c.lits) level = std::max(level, levelOf(l));
  return level;
}

namespace {

// Classification for the trail-induced ordering. cls 0: defined with level 0;
// cls 1: defined at some entry of level >= 1, keyed by (index, role) where the
// trail literal itself sits below its complement, below other literals defined
// there; cls 2: undefined or not below beta.
struct GammaKey {
  int cls = 2;
  size_t idx = 0;
  int role = 0;
};

}  // namespace

OrderResult Trail::gammaStarCompare(const Literal& a, const Literal& b,
                                    const Term& beta) const {
  if (a == b) return OrderResult::EQ;
  auto classify = [&](const Literal& l) -> GammaKey {
    if (!literalBelow(l, beta, cfg_) || valueOf(l) == TruthValue::Undefined)
      return {2, 0, 0};
    for (size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].level == 0) continue;
      if (sameModuloSymmetry(l, entries_[i].lit)) return {1, i, 0};
      if (sameModuloSymmetry(l, complement(entries_[i].lit))) return {1, i, 1};
    }
    auto def = definingIndex(l);
    if (!def || entries_[*def].level == 0) return {0, 0, 0};
    return {1, *def, 2};
  };
  auto tieBreak = [&](const Literal& x, const Literal& y) {
    OrderResult r = compareLiterals(x, y, cfg_);
    if (r != OrderResult::EQ) return r;
    // Equal multisets but distinct literals (swapped sides): any fixed
    // total tie-break keeps the ordering total and well defined.
    return x < y ? OrderResult::LT : OrderResult::GT;
  };
  GammaKey ka = classify(a), kb = classify(b);
  if (ka.cls != kb.cls) return ka.cls < kb.cls ? OrderResult::LT : OrderResult::GT;
  if (ka.cls == 1) {
    if (ka.idx != kb.idx) return ka.idx < kb.idx ? OrderResult::LT : OrderResult::GT;
    if (ka.role != kb.role) return ka.role < kb.role ? OrderResult::LT : OrderResult::GT;
  }
  return tieBreak(a, b);
}

OrderResult Trail::gammaStarCompareClauses(const Clause& a, const Clause& b,
                                           const Term& beta) const {
  std::function<OrderResult(const Literal&, const Literal&)> cmp =
      [&](const Literal& x, const Literal& y) { return gammaStarCompare(x, y, beta); };
  return multisetCompare(a.lits, b.lits, cmp);
}

std::string Trail::dump(const Signature& sig) const {
  std::ostringstream out;
  for (const TrailEntry& e : entries_) {
    out << toString(e.lit, sig) << " [lvl=" << e.level << "] ["
        << (e.kind == EntryKind::Decision ? "decision" : "propagated") << "] [just="
        << toString(e.justClause, sig) << " . " << toString(e.justGrounding, sig) << "]\n";
  }
  return out.str();
}

}  // namespace scleq
