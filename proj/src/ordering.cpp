#include "scleq/ordering.hpp"

#include <algorithm>
#include <map>

namespace scleq {

OrderResult flip(OrderResult r) {
  switch (r) {
    case OrderResult::LT: return OrderResult::GT;
    case OrderResult::GT: return OrderResult::LT;
    default: return r;
  }
}

KboConfig KboConfig::uniform(const Signature& sig) {
  KboConfig cfg;
  cfg.weights.assign(static_cast<size_t>(sig.size()), 1);
  cfg.precRank.resize(static_cast<size_t>(sig.size()));
  for (int i = 0; i < sig.size(); ++i)
    cfg.precRank[static_cast<size_t>(i)] = sig.size() - 1 - i;
  return cfg;
}

int KboConfig::weightOf(const Term& t) const {
  if (t.isVar()) return variableWeight;
  int w = weights.at(static_cast<size_t>(t.symbol()));
  for (const Term& a : t.args()) w += weightOf(a);
  return w;
}

namespace {

void countVars(const Term& t, std::map<int, int>& counts, int delta) {
  if (t.isVar()) {
    counts[t.varIndex()] += delta;
    return;
  }
  for (const Term& a : t.args()) countVars(a, counts, delta);
}

// True if every variable occurs in s at least as often as in t.
bool varConditionHolds(const Term& s, const Term& t) {
  std::map<int, int> counts;
  countVars(s, counts, 1);
  countVars(t, counts, -1);
  for (const auto& [v, c] : counts)
    if (c < 0) return false;
  return true;
}

bool kboGreater(const Term& s, const Term& t, const KboConfig& cfg);

bool lexGreater(const std::vector<Term>& ss, const std::vector<Term>& ts,
                const KboConfig& cfg) {
  for (size_t i = 0; i < ss.size(); ++i) {
    if (ss[i] == ts[i]) continue;
    return kboGreater(ss[i], ts[i], cfg);
  }
  return false;
}

bool kboGreater(const Term& s, const Term& t, const KboConfig& cfg) {
  if (s == t) return false;
  if (s.isVar()) return false;
  if (t.isVar()) return s.contains(t.varIndex());
  if (!varConditionHolds(s, t)) return false;
  int ws = cfg.weightOf(s), wt = cfg.weightOf(t);
  if (ws > wt) return true;
  if (ws < wt) return false;
  int ps = cfg.precRank.at(static_cast<size_t>(s.symbol()));
  int pt = cfg.precRank.at(static_cast<size_t>(t.symbol()));
  if (ps != pt) return ps > pt;
  return lexGreater(s.args(), t.args(), cfg);
}

}  // namespace

OrderResult kboCompare(const Term& s, const Term& t, const KboConfig& cfg) {
  if (s == t) return OrderResult::EQ;
  if (kboGreater(s, t, cfg)) return OrderResult::GT;
  if (kboGreater(t, s, cfg)) return OrderResult::LT;
  return OrderResult::INCOMPARABLE;
}

std::vector<Term> literalMultiset(const Literal& l) {
  if (l.positive) return {l.lhs, l.rhs};
  return {l.lhs, l.lhs, l.rhs, l.rhs};
}

OrderResult compareTerms(const std::vector<Term>& xs, const std::vector<Term>& ys,
                         const KboConfig& cfg) {
  std::function<OrderResult(const Term&, const Term&)> cmp =
      [&cfg](const Term& a, const Term& b) { return kboCompare(a, b, cfg); };
  return multisetCompare(xs, ys, cmp);
}

OrderResult compareLiterals(const Literal& a, const Literal& b, const KboConfig& cfg) {
  return compareTerms(literalMultiset(a), literalMultiset(b), cfg);
}

OrderResult compareClauses(const Clause& a, const Clause& b, const KboConfig& cfg) {
  std::function<OrderResult(const Literal&, const Literal&)> cmp =
      [&cfg](const Literal& x, const Literal& y) { return compareLiterals(x, y, cfg); };
  return multisetCompare(a.lits, b.lits, cmp);
}

bool literalBelow(const Literal& l, const Term& beta, const KboConfig& cfg) {
  return compareTerms(literalMultiset(l), {beta}, cfg) == OrderResult::LT;
}

bool clauseBelow(const Clause& c, const Term& beta, const KboConfig& cfg) {
  // {L_1,...,L_n} < {{beta}}: compare the clause against the one-literal
  // multiset whose literal multiset is {beta}.
  if (c.lits.empty()) return true;
  for (const Literal& l : c.lits)
    if (!literalBelow(l, beta, cfg)) return false;
  return true;
}

std::vector<Term> enumerateGroundTermsBelow(const Term& beta, const Signature& sig,
                                            const KboConfig& cfg) {
  if (sig.constants().empty())
    throw NoGroundTermsError("signature has no constant: no ground terms exist");
  int maxWeight = cfg.weightOf(beta);
  // byWeight[w] holds all ground terms of weight exactly w.
  std::vector<std::vector<Term>> byWeight(static_cast<size_t>(maxWeight) + 1);
  for (int w = 1; w <= maxWeight; ++w) {
    for (int s = 0; s < sig.size(); ++s) {
      const Symbol& sym = sig[s];
      int argBudget = w - cfg.weights.at(static_cast<size_t>(s));
      if (sym.arity == 0) {
        if (argBudget == 0) byWeight[static_cast<size_t>(w)].push_back(Term::app(s));
        continue;
      }
      if (argBudget < sym.arity) continue;
      // Enumerate argument tuples whose weights sum to argBudget.
      std::vector<Term> tuple(static_cast<size_t>(sym.arity));
      std::function<void(int, int)> rec = [&](int idx, int remaining) {
        if (idx == sym.arity) {
          if (remaining == 0)
            byWeight[static_cast<size_t>(w)].push_back(Term::app(s, tuple));
          return;
        }
        int slotsLeft = sym.arity - idx - 1;
        for (int aw = 1; aw <= remaining - slotsLeft; ++aw) {
          for (const Term& cand : byWeight[static_cast<size_t>(aw)]) {
            tuple[static_cast<size_t>(idx)] = cand;
            rec(idx + 1, remaining - aw);
          }
        }
      };
      rec(0, argBudget);
    }
  }
  std::vector<Term> out;
  for (const auto& bucket : byWeight)
    for (const Term& t : bucket)
      if (kboCompare(t, beta, cfg) == OrderResult::LT) out.push_back(t);
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
    return kboCompare(a, b, cfg) == OrderResult::LT;
  });
  return out;
}

std::vector<Closure> groundInstancesBelow(const Clause& c, const Term& beta,
                                          const Signature& sig, const KboConfig& cfg) {
  std::vector<int> vars;
  for (const Literal& l : c.lits) {
    l.lhs.collectVars(vars);
    l.rhs.collectVars(vars);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

  std::vector<Closure> out;
  if (vars.empty()) {
    if (clauseBelow(c, beta, cfg)) out.push_back({c, Subst{}});
    return out;
  }
  std::vector<Term> domain = enumerateGroundTermsBelow(beta, sig, cfg);
  std::vector<size_t> idx(vars.size(), 0);
  Subst sigma;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == vars.size()) {
      if (clauseBelow(sigma(c), beta, cfg)) out.push_back({c, sigma});
      return;
    }
    for (const Term& t : domain) {
      sigma.bind(vars[i], t);
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace scleq
