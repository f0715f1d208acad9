#pragma once

#include <optional>
#include <vector>

#include "scleq/ordering.hpp"
#include "scleq/term.hpp"

namespace scleq {

class Trail;

/// Independent ground reasoning used by the test suites and the soundness
/// auditor. Deliberately built on congruence closure / union-find, which is
/// structurally unlike the rewriting engine it cross-checks.
namespace oracle {

/// Congruence closure over a finite set of ground (in)equations.
class CongruenceClosure {
 public:
  /// Builds the closure of the positive equations in `facts`; negative
  /// literals are recorded as disequality constraints.
  explicit CongruenceClosure(const std::vector<Literal>& facts);

  /// True if the two ground terms are in the same class.
  bool merged(const Term& a, const Term& b);
  /// True if some recorded disequality has both sides merged.
  bool inconsistent();

 private:
  int intern(const Term& t);
  int find(int a);
  void unite(int a, int b);
  void propagate();

  std::vector<Term> terms_;
  std::map<Term, int> ids_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> argIds_;  // per node: interned arg ids
  std::vector<int> symbols_;              // per node: symbol, -1 for none
  std::vector<std::pair<int, int>> disequalities_;
  bool dirty_ = true;
};

/// Decides E |= L for ground equational facts E and a ground literal L.
bool ccEntails(const std::vector<Literal>& facts, const Literal& l);

/// Small ground clause set plus the term universe its groundings came from.
struct GroundProblem {
  std::vector<Clause> clauses;
};

struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroundModel {
  std::vector<Literal> chosen;  // one literal per clause, jointly consistent
};

/// Exhaustive DPLL over per-clause literal selections with congruence
/// closure consistency. Absent iff unsatisfiable.
std::optional<GroundModel> groundSat(const GroundProblem& p, size_t clauseLimit = 64);

/// S |= C for ground clause sets, via groundSat(S + negated C).
bool groundEntails(const std::vector<Clause>& premises, const Clause& conclusion,
                   size_t clauseLimit = 64);

/// Redundancy per the clause-ordering definition: the ground instances of
/// `pool` below beta that are <=(Gamma*) C sigma entail C sigma.
bool isRedundant(const Closure& c, const std::vector<Clause>& pool, const Trail& trail,
                 const Term& beta, const Signature& sig, const KboConfig& cfg,
                 size_t clauseLimit = 256);

}  // namespace oracle
}  // namespace scleq
