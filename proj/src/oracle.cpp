#include "scleq/oracle.hpp"

#include <algorithm>

#include "scleq/trail.hpp"

namespace scleq::oracle {

CongruenceClosure::CongruenceClosure(const std::vector<Literal>& facts) {
  std::vector<std::pair<int, int>> equalities;
  for (const Literal& l : facts) {
    int a = intern(l.lhs);
    int b = intern(l.rhs);
    if (l.positive)
      equalities.emplace_back(a, b);
    else
      disequalities_.emplace_back(a, b);
  }
  for (auto [a, b] : equalities) unite(a, b);
  propagate();
}

int CongruenceClosure::intern(const Term& t) {
  auto it = ids_.find(t);
  if (it != ids_.end()) return it->second;
  std::vector<int> argIds;
  argIds.reserve(t.args().size());
  for (const Term& a : t.args()) argIds.push_back(intern(a));
  int id = static_cast<int>(terms_.size());
  terms_.push_back(t);
  parent_.push_back(id);
  argIds_.push_back(std::move(argIds));
  symbols_.push_back(t.isVar() ? -1 : t.symbol());
  ids_[t] = id;
  dirty_ = true;
  return id;
}

int CongruenceClosure::find(int a) {
  while (parent_[static_cast<size_t>(a)] != a) {
    parent_[static_cast<size_t>(a)] =
        parent_[static_cast<size_t>(parent_[static_cast<size_t>(a)])];
    a = parent_[static_cast<size_t>(a)];
  }
  return a;
}

void CongruenceClosure::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  parent_[static_cast<size_t>(a)] = b;
  dirty_ = true;
}

void CongruenceClosure::propagate() {
  // Congruence worklist: merge applications with congruent arguments until
  // a fixpoint is reached.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < terms_.size(); ++i) {
      for (size_t j = i + 1; j < terms_.size(); ++j) {
        if (symbols_[i] < 0 || symbols_[i] != symbols_[j]) continue;
        if (find(static_cast<int>(i)) == find(static_cast<int>(j))) continue;
        if (argIds_[i].size() != argIds_[j].size()) continue;
        bool congruent = true;
        for (size_t k = 0; k < argIds_[i].size(); ++k)
          if (find(argIds_[i][k]) != find(argIds_[j][k])) {
            congruent = false;
            break;
          }
        if (congruent) {
          unite(static_cast<int>(i), static_cast<int>(j));
          changed = true;
        }
      }
    }
  }
  dirty_ = false;
}

bool CongruenceClosure::merged(const Term& a, const Term& b) {
  int x = intern(a);
  int y = intern(b);
  if (dirty_) propagate();
  return find(x) == find(y);
}

bool CongruenceClosure::inconsistent() {
  if (dirty_) propagate();
  for (auto [a, b] : disequalities_)
    if (find(a) == find(b)) return true;
  return false;
}

bool ccEntails(const std::vector<Literal>& facts, const Literal& l) {
  if (l.positive) {
    CongruenceClosure cc(facts);
    return cc.merged(l.lhs, l.rhs);
  }
  // E |= s != t iff E + s = t is inconsistent.
  std::vector<Literal> extended = facts;
  extended.push_back(complement(l));
  CongruenceClosure cc(extended);
  return cc.inconsistent();
}

namespace {

bool factsConsistent(const std::vector<Literal>& facts) {
  CongruenceClosure cc(facts);
  if (cc.inconsistent()) return false;
  // A negative fact with congruent sides is also a contradiction.
  for (const Literal& l : facts)
    if (!l.positive && cc.merged(l.lhs, l.rhs)) return false;
  return true;
}

// Unit propagation modulo congruence: drop satisfied clauses, erase falsified
// literals, absorb the resulting units into the fact set. False on conflict.
bool propagateUnits(std::vector<Literal>& facts, std::vector<Clause>& clauses) {
  if (!factsConsistent(facts)) return false;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < clauses.size();) {
      Clause& c = clauses[i];
      bool satisfied = false;
      for (const Literal& l : c.lits)
        if (ccEntails(facts, l)) {
          satisfied = true;
          break;
        }
      if (satisfied) {
        clauses.erase(clauses.begin() + static_cast<long>(i));
        changed = true;
        continue;
      }
      for (size_t k = 0; k < c.lits.size();) {
        if (ccEntails(facts, complement(c.lits[k]))) {
          c.lits.erase(c.lits.begin() + static_cast<long>(k));
          changed = true;
        } else {
          ++k;
        }
      }
      if (c.lits.empty()) return false;
      if (c.lits.size() == 1) {
        facts.push_back(c.lits[0]);
        if (!factsConsistent(facts)) return false;
        clauses.erase(clauses.begin() + static_cast<long>(i));
        changed = true;
        continue;
      }
      ++i;
    }
  }
  return true;
}

bool dpll(std::vector<Literal> facts, std::vector<Clause> clauses,
          std::vector<Literal>& model) {
  if (!propagateUnits(facts, clauses)) return false;
  if (clauses.empty()) {
    model = std::move(facts);
    return true;
  }
  Clause branch = clauses.front();
  std::vector<Clause> rest(clauses.begin() + 1, clauses.end());
  for (const Literal& l : branch.lits) {
    std::vector<Literal> extended = facts;
    extended.push_back(l);
    if (dpll(std::move(extended), rest, model)) return true;
  }
  return false;
}

}  // namespace

std::optional<GroundModel> groundSat(const GroundProblem& p, size_t clauseLimit) {
  if (p.clauses.size() > clauseLimit)
    throw SizeLimitError("groundSat: clause set too large (" +
                         std::to_string(p.clauses.size()) + " clauses)");
  for (const Clause& c : p.clauses)
    if (c.lits.empty()) return std::nullopt;
  std::vector<Literal> model;
  if (!dpll({}, p.clauses, model)) return std::nullopt;
  // One entailed literal per input clause; existence follows from the clause
  // having been satisfied on the path to the model.
  GroundModel m;
  for (const Clause& c : p.clauses)
    for (const Literal& l : c.lits)
      if (ccEntails(model, l)) {
        m.chosen.push_back(l);
        break;
      }
  return m;
}

bool groundEntails(const std::vector<Clause>& premises, const Clause& conclusion,
                   size_t clauseLimit) {
  GroundProblem p;
  p.clauses = premises;
  for (const Literal& l : conclusion.lits) p.clauses.push_back(Clause{{complement(l)}});
  return !groundSat(p, clauseLimit).has_value();
}

bool isRedundant(const Closure& c, const std::vector<Clause>& pool, const Trail& trail,
                 const Term& beta, const Signature& sig, const KboConfig& cfg,
                 size_t clauseLimit) {
  Clause target = c.grounding(c.clause);
  std::vector<Clause> smaller;
  for (const Clause& d : pool) {
    for (const Closure& inst : groundInstancesBelow(d, beta, sig, cfg)) {
      Clause ground = inst.grounding(inst.clause);
      OrderResult r = trail.gammaStarCompareClauses(ground, target, beta);
      if (r == OrderResult::LT || r == OrderResult::EQ) smaller.push_back(std::move(ground));
    }
  }
  return groundEntails(smaller, target, clauseLimit);
}

}  // namespace scleq::oracle
