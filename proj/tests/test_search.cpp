#include "doctest.h"

#include "scleq/frontend.hpp"
#include "scleq/search.hpp"
#include "util.hpp"

using namespace scleq;
using testutil::fixture;
using testutil::loadProblem;

namespace {

Pool makePool(const std::vector<Clause>& cs, const std::vector<bool>& learned = {}) {
  Pool pool;
  for (size_t i = 0; i < cs.size(); ++i)
    pool.push_back({cs[i], i < learned.size() && learned[i]});
  return pool;
}

size_t countRule(const std::vector<RuleApplication>& trace, const std::string& rule) {
  size_t n = 0;
  for (const RuleApplication& ra : trace)
    if (ra.rule == rule) ++n;
  return n;
}

}  // namespace

TEST_CASE("find_conflict") {
  Problem p = loadProblem("tests/problems/intro.p");
  auto fx = testutil::Fixture{p};
  ProverState st(p.sig, p.cfg, p.clauses, *p.beta);
  Pool pool = makePool(p.clauses);

  SUBCASE("no conflict on the empty trail") {
    CHECK_FALSE(findConflict(st, pool).has_value());
  }
  SUBCASE("the two scripted decisions make the two-literal clause false") {
    decide(st, fx.clause("h(a) = g(a) | h(a) != g(a)"), Subst{}, 0);
    decide(st, fx.clause("f(a) = g(a) | f(a) != g(a)"), Subst{}, 0);
    auto c = findConflict(st, pool);
    REQUIRE(c);
    CHECK(c->first == 2);
    Clause inst = c->second(p.clauses[2]);
    CHECK(st.trail.betaClauseValue(inst, st.beta) == TruthValue::False);
  }
}

TEST_CASE("find_conflict normalizes the grounding") {
  auto fx = fixture("sig f/1 a/0 b/0; order kbo; precedence b < a < f;");
  std::vector<Clause> n = {fx.clause("a = b"), fx.clause("f(X) != X")};
  ProverState st(fx.sig(), fx.cfg(), n, fx.term("f(f(a))"));
  propagate(st, n[0], Subst{}, 0);
  propagate(st, n[1], [&] {
    Subst s;
    s.bind(0, fx.term("b"));
    return s;
  }(), 0);
  // f(b) != b on the trail; the instance f(a) != a reduces to it, so the
  // grounding X -> a comes back normalized to X -> b and conflicts.
  Pool pool = makePool({fx.clause("f(X) = X")});
  auto c = findConflict(st, pool);
  REQUIRE(c);
  CHECK(*c->second.lookup(0) == fx.term("b"));
}

TEST_CASE("find_propagation") {
  Problem p = loadProblem("tests/problems/refute.p");
  auto fx = testutil::Fixture{p};
  ProverState st(p.sig, p.cfg, p.clauses, *p.beta);
  Pool pool = makePool(p.clauses);

  auto cand = findPropagation(st, pool);
  REQUIRE(cand);
  // Smallest pushable literal first: the unit a != b beats the f(f(Y)) = Y
  // instances.
  CHECK(sameModuloSymmetry(cand->pushed, fx.lit("a != b")));
  CHECK(cand->clauseIndex == 2);

  SUBCASE("nothing to propagate once every unit instance is on the trail") {
    ProverState st2(p.sig, p.cfg, {fx.clause("a != b")}, *p.beta);
    Pool pool2 = makePool({fx.clause("a != b")});
    propagate(st2, fx.clause("a != b"), Subst{}, 0);
    CHECK_FALSE(findPropagation(st2, pool2).has_value());
  }
}

TEST_CASE("find_decision") {
  auto fx = fixture(
      "sig f/1 a/0 b/0 c/0 d/0; order kbo; precedence d < c < b < a < f;");
  Term beta = fx.term("f(a)");

  SUBCASE("scripted decision is honoured") {
    std::vector<Clause> n = {fx.clause("c != d | a = b")};
    ProverState st(fx.sig(), fx.cfg(), n, beta);
    Pool pool = makePool(n);
    auto d = findDecision(st, pool, {fx.lit("c != d")}, 0);
    REQUIRE(d);
    CHECK(sameModuloSymmetry(d->pushed, fx.lit("c != d")));
  }
  SUBCASE("scripted complement of a propagatable literal is rejected") {
    std::vector<Clause> n = {fx.clause("c = d"), fx.clause("c != d | a = b")};
    ProverState st(fx.sig(), fx.cfg(), n, beta);
    Pool pool = makePool(n);
    CHECK_THROWS_AS(findDecision(st, pool, {fx.lit("c != d")}, 0), GuardError);
  }
  SUBCASE("scripted literal that no clause offers is rejected") {
    std::vector<Clause> n = {fx.clause("c = d")};
    ProverState st(fx.sig(), fx.cfg(), n, beta);
    Pool pool = makePool(n);
    CHECK_THROWS_AS(findDecision(st, pool, {fx.lit("a = b")}, 0), GuardError);
  }
  SUBCASE("no decision once everything is defined") {
    std::vector<Clause> n = {fx.clause("c = d")};
    ProverState st(fx.sig(), fx.cfg(), n, beta);
    Pool pool = makePool(n);
    propagate(st, n[0], Subst{}, 0);
    CHECK_FALSE(findDecision(st, pool, {}, 0).has_value());
  }
}

TEST_CASE("simplify_pool") {
  auto fx = fixture(
      "sig f/1 a/0 b/0 c/0 d/0; order kbo; precedence d < c < b < a < f;");
  ProverState st(fx.sig(), fx.cfg(), {}, fx.term("f(f(a))"));

  SUBCASE("learned unit equations rewrite other clauses") {
    Pool pool = makePool({fx.clause("a = b"), fx.clause("f(a) = c")},
                         {true, false});
    SimplifyOutcome out = simplifyPool(pool, st);
    CHECK(out.changed);
    CHECK(clauseEqualMultiset(*pool[1].clause, fx.clause("f(b) = c")));
  }
  SUBCASE("input units do not rewrite") {
    Pool pool = makePool({fx.clause("a = b"), fx.clause("f(a) = c")});
    SimplifyOutcome out = simplifyPool(pool, st);
    CHECK_FALSE(out.changed);
    CHECK(clauseEqualMultiset(*pool[1].clause, fx.clause("f(a) = c")));
  }
  SUBCASE("learned unit subsumption resolution") {
    Pool pool = makePool({fx.clause("c = d"), fx.clause("c != d | a = b")},
                         {true, false});
    simplifyPool(pool, st);
    CHECK(clauseEqualMultiset(*pool[1].clause, fx.clause("a = b")));
  }
  SUBCASE("resolving away the last literal reports the empty clause") {
    Pool pool = makePool({fx.clause("c = d"), fx.clause("c != d")},
                         {true, false});
    SimplifyOutcome out = simplifyPool(pool, st);
    CHECK(out.emptyClause);
  }
  SUBCASE("tautology deletion") {
    Pool pool = makePool({fx.clause("a = a | c = d"), fx.clause("a = b | a != b")});
    simplifyPool(pool, st);
    CHECK_FALSE(pool[0].clause);
    CHECK_FALSE(pool[1].clause);
  }
  SUBCASE("trivial literal deletion") {
    Pool pool = makePool({fx.clause("a != a | c = d")});
    simplifyPool(pool, st);
    CHECK(clauseEqualMultiset(*pool[0].clause, fx.clause("c = d")));
  }
  SUBCASE("strict subsumption deletion") {
    Pool pool = makePool({fx.clause("a = b"), fx.clause("a = b | c = d")});
    simplifyPool(pool, st);
    CHECK(pool[0].clause);
    CHECK_FALSE(pool[1].clause);
  }
}

TEST_CASE("run: pure propagation reaches the expected trail") {
  Problem p = loadProblem("tests/problems/propsmeq.p");
  auto fx = testutil::Fixture{p};
  RunResult r = run(p, SearchConfig{});
  CHECK(r.verdict == Verdict::BoundedModel);
  REQUIRE(r.state.trail.size() == 3);
  CHECK(r.state.trail.entries()[0].lit == fx.lit("c = d"));
  CHECK(r.state.trail.entries()[1].lit == fx.lit("a = b"));
  CHECK(r.state.trail.entries()[2].lit == fx.lit("b = d"));
  CHECK(countRule(r.trace, "decide") == 0);
}

TEST_CASE("run: refutation by propagation alone") {
  Problem p = loadProblem("tests/problems/refute.p");
  RunResult r = run(p, SearchConfig{});
  CHECK(r.verdict == Verdict::Unsatisfiable);
  CHECK(countRule(r.trace, "decide") == 0);
  CHECK(countRule(r.trace, "propagate") == 3);
}

TEST_CASE("run: conflict-driven learning on the two-decision problem") {
  Problem p = loadProblem("tests/problems/intro.p");
  auto fx = testutil::Fixture{p};
  RunResult r = run(p, SearchConfig{});
  REQUIRE(r.learns.size() >= 1);
  CHECK(clauseEqualModuloRenaming(r.learns[0].clause,
                                  fx.clause("h(X) != g(X) | f(X) != g(X)")));
  // After Backtrack no instance of the learned clause may be beta-false.
  const Trail& t = r.state.trail;
  for (const Closure& cl :
       groundInstancesBelow(r.learns[0].clause, r.state.beta, p.sig, p.cfg)) {
    Clause inst = cl.grounding(cl.clause);
    CHECK(t.betaClauseValue(inst, r.state.beta) != TruthValue::False);
  }
}

TEST_CASE("run never learns the same clause twice") {
  Problem p = loadProblem("tests/problems/saturate.p");
  RunResult r = run(p, SearchConfig{});
  for (size_t i = 0; i < r.learns.size(); ++i)
    for (size_t j = i + 1; j < r.learns.size(); ++j)
      CHECK_FALSE(clauseEqualModuloRenaming(r.learns[i].clause, r.learns[j].clause));
}

TEST_CASE("run respects the step limit") {
  Problem p = loadProblem("tests/problems/intro.p");
  SearchConfig cfg;
  cfg.maxSteps = 1;
  RunResult r = run(p, cfg);
  CHECK(r.verdict == Verdict::ResourceOut);
}

TEST_CASE("replay reproduces a recorded run") {
  for (const char* path : {"tests/problems/intro.p", "tests/problems/refute.p",
                           "tests/problems/saturate.p",
                           "tests/problems/propsmeq.p"}) {
    CAPTURE(path);
    Problem p = loadProblem(path);
    RunResult r = run(p, SearchConfig{});
    RunResult rr = replay(p, SearchConfig{}, r.trace);
    CHECK(rr.verdict == r.verdict);
    REQUIRE(rr.state.trail.size() == r.state.trail.size());
    for (size_t i = 0; i < r.state.trail.size(); ++i)
      CHECK(rr.state.trail.entries()[i].lit == r.state.trail.entries()[i].lit);
    REQUIRE(rr.finalClauses.size() == r.finalClauses.size());
    for (size_t i = 0; i < r.finalClauses.size(); ++i)
      CHECK(clauseEqualMultiset(rr.finalClauses[i], r.finalClauses[i]));
  }
}

TEST_CASE("same configuration yields the same trace") {
  Problem p = loadProblem("tests/problems/saturate.p");
  RunResult a = run(p, SearchConfig{});
  RunResult b = run(p, SearchConfig{});
  CHECK(formatTrace(a.trace, p.sig) == formatTrace(b.trace, p.sig));
}

TEST_CASE("audited runs on the goldens are clean") {
  for (const char* path : {"tests/problems/intro.p", "tests/problems/refute.p",
                           "tests/problems/propsmeq.p"}) {
    CAPTURE(path);
    Problem p = loadProblem(path);
    SearchConfig cfg;
    cfg.audit = true;
    RunResult r = run(p, cfg);
    CHECK(r.auditViolations.empty());
  }
}

TEST_CASE("default and grown bounds") {
  auto fx = fixture("sig f/1 a/0 b/0; order kbo; precedence b < a < f;");
  CHECK(defaultBeta(fx.sig(), fx.cfg()) == fx.term("f(f(a))"));
  CHECK(growBeta(fx.term("f(f(a))"), fx.sig(), fx.cfg()) == fx.term("f(f(f(a)))"));
  auto fx2 = fixture("sig f/2 a/0 b/0; order kbo; precedence b < a < f;");
  CHECK(defaultBeta(fx2.sig(), fx2.cfg()) == fx2.term("f(f(a,a),a)"));
}
