#pragma once

#include <functional>
#include <vector>

#include "scleq/term.hpp"

namespace scleq {

enum class OrderResult { LT, GT, EQ, INCOMPARABLE };

OrderResult flip(OrderResult r);

/// Knuth-Bendix ordering configuration. Admissibility (every symbol weight
/// >= variable weight > 0) is required; weight-0 unary symbols are not
/// supported. Default weight is 1 for everything.
struct KboConfig {
  std::vector<int> weights;   // per symbol id, parallel to the signature
  std::vector<int> precRank;  // per symbol id; higher rank = larger symbol
  int variableWeight = 1;

  /// Uniform weight 1, precedence = reverse declaration order
  /// (the first declared symbol is the largest).
  static KboConfig uniform(const Signature& sig);

  int weightOf(const Term& t) const;
};

OrderResult kboCompare(const Term& s, const Term& t, const KboConfig& cfg);

/// {s,t} for equations, {s,s,t,t} for inequations.
std::vector<Term> literalMultiset(const Literal& l);

/// Dershowitz-Manna multiset extension of an element comparison.
template <typename T>
OrderResult multisetCompare(std::vector<T> xs, std::vector<T> ys,
                            const std::function<OrderResult(const T&, const T&)>& cmp) {
  // Cancel elements that compare EQ pairwise.
  for (size_t i = 0; i < xs.size();) {
    bool cancelled = false;
    for (size_t j = 0; j < ys.size(); ++j) {
      if (cmp(xs[i], ys[j]) == OrderResult::EQ) {
        xs.erase(xs.begin() + static_cast<long>(i));
        ys.erase(ys.begin() + static_cast<long>(j));
        cancelled = true;
        break;
      }
    }
    if (!cancelled) ++i;
  }
  if (xs.empty() && ys.empty()) return OrderResult::EQ;
  if (ys.empty()) return OrderResult::GT;
  if (xs.empty()) return OrderResult::LT;
  auto dominated = [&](const std::vector<T>& small, const std::vector<T>& big) {
    for (const T& s : small) {
      bool found = false;
      for (const T& b : big)
        if (cmp(s, b) == OrderResult::LT) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  };
  bool gt = dominated(ys, xs);
  bool lt = dominated(xs, ys);
  if (gt) return OrderResult::GT;
  if (lt) return OrderResult::LT;
  return OrderResult::INCOMPARABLE;
}

OrderResult compareTerms(const std::vector<Term>& xs, const std::vector<Term>& ys,
                         const KboConfig& cfg);
OrderResult compareLiterals(const Literal& a, const Literal& b, const KboConfig& cfg);
OrderResult compareClauses(const Clause& a, const Clause& b, const KboConfig& cfg);

/// L < beta in the sense multiset(L) < {beta}.
bool literalBelow(const Literal& l, const Term& beta, const KboConfig& cfg);
/// C < beta in the sense {L_1,...,L_n} < {{beta}}.
bool clauseBelow(const Clause& c, const Term& beta, const KboConfig& cfg);

struct NoGroundTermsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All ground terms strictly below beta, ascending. Finite for uniform
/// weights; arbitrary user weights are accepted unchecked.
std::vector<Term> enumerateGroundTermsBelow(const Term& beta, const Signature& sig,
                                            const KboConfig& cfg);

/// All groundings sigma over ground terms below beta such that every literal
/// of C sigma is below beta.
std::vector<Closure> groundInstancesBelow(const Clause& c, const Term& beta,
                                          const Signature& sig, const KboConfig& cfg);

}  // namespace scleq
