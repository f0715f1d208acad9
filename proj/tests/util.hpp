#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "scleq/frontend.hpp"
#include "scleq/oracle.hpp"
#include "scleq/trail.hpp"

namespace testutil {

inline std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline scleq::Problem loadProblem(const std::string& path) {
  return scleq::parseNative(readFile(path));
}

/// Signature + ordering built from a native `sig ...; precedence ...;` header.
struct Fixture {
  scleq::Problem p;
  const scleq::Signature& sig() const { return p.sig; }
  const scleq::KboConfig& cfg() const { return p.cfg; }
  scleq::Term term(const std::string& s) const {
    return scleq::parseGroundTerm(s, p.sig);
  }
  scleq::Literal lit(const std::string& s) const {
    return scleq::parseLiteralText(s, p.sig);
  }
  scleq::Clause clause(const std::string& s) const {
    return scleq::parseClauseText(s, p.sig);
  }
};

inline Fixture fixture(const std::string& header) {
  return Fixture{scleq::parseNative(header)};
}

/// Random term over the signature; var indices in [0, maxVar), none if
/// maxVar == 0. Depth-bounded.
inline scleq::Term randomTerm(std::mt19937& rng, const scleq::Signature& sig,
                              int depth, int maxVar) {
  if (maxVar > 0 && std::uniform_int_distribution<int>(0, 3)(rng) == 0)
    return scleq::Term::var(std::uniform_int_distribution<int>(0, maxVar - 1)(rng));
  std::vector<int> choices;
  for (int i = 0; i < sig.size(); ++i)
    if (depth > 0 || sig[i].arity == 0) choices.push_back(i);
  int sym = choices[std::uniform_int_distribution<size_t>(0, choices.size() - 1)(rng)];
  std::vector<scleq::Term> args;
  for (int i = 0; i < sig[sym].arity; ++i)
    args.push_back(randomTerm(rng, sig, depth - 1, maxVar));
  return scleq::Term::app(sym, std::move(args));
}

inline scleq::Literal randomLiteral(std::mt19937& rng, const scleq::Signature& sig,
                                    int depth, int maxVar) {
  return scleq::Literal{std::uniform_int_distribution<int>(0, 1)(rng) == 0,
                        randomTerm(rng, sig, depth, maxVar),
                        randomTerm(rng, sig, depth, maxVar)};
}

/// Random trail of decision entries drawn from the literals over the ground
/// terms strictly below beta. Entries respect the push contract by
/// construction (skipped when defined or reducible).
inline scleq::Trail randomTrail(std::mt19937& rng, const scleq::Signature& sig,
                                const scleq::KboConfig& cfg, const scleq::Term& beta,
                                size_t maxLen) {
  using namespace scleq;
  std::vector<Term> ground = enumerateGroundTermsBelow(beta, sig, cfg);
  std::vector<Literal> cand;
  for (const Term& s : ground)
    for (const Term& t : ground)
      for (bool pos : {true, false}) {
        Literal l{pos, s, t};
        if (literalBelow(l, beta, cfg)) cand.push_back(l);
      }
  std::shuffle(cand.begin(), cand.end(), rng);
  Trail trail(cfg);
  for (const Literal& l : cand) {
    if (trail.size() >= maxLen) break;
    if (trail.valueOf(l) != TruthValue::Undefined) continue;
    if (trail.conv().reducible(l)) continue;
    TrailEntry e;
    e.lit = l;
    e.level = trail.currentLevel() + 1;
    e.kind = EntryKind::Decision;
    e.justClause = Clause{{l, complement(l)}};
    e.justLit = 0;
    trail.push(std::move(e));
  }
  return trail;
}

/// All ground clause instances below beta of every pool clause.
inline std::vector<scleq::Clause> groundBelow(const std::vector<scleq::Clause>& pool,
                                              const scleq::Term& beta,
                                              const scleq::Signature& sig,
                                              const scleq::KboConfig& cfg) {
  std::vector<scleq::Clause> out;
  for (const scleq::Clause& c : pool)
    for (const scleq::Closure& cl : scleq::groundInstancesBelow(c, beta, sig, cfg))
      out.push_back(cl.grounding(cl.clause));
  return out;
}

/// Random small problem over {f/1, a, b}; exactly five ground terms lie
/// below the fixed beta: a, b, f(a), f(b), f(f(b)).
inline scleq::Problem randomProblem(std::mt19937& rng, int numClauses,
                                    int maxLitsPerClause) {
  scleq::Problem p = scleq::parseNative("sig f/1 a/0 b/0; order kbo; beta f(f(a));");
  for (int i = 0; i < numClauses; ++i) {
    scleq::Clause c;
    int n = std::uniform_int_distribution<int>(1, maxLitsPerClause)(rng);
    for (int j = 0; j < n; ++j)
      c.lits.push_back(randomLiteral(rng, p.sig, 1, 1));
    p.clauses.push_back(std::move(c));
  }
  return p;
}

}  // namespace testutil
