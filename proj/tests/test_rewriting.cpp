#include "doctest.h"

#include <functional>
#include <random>
#include <set>

#include "scleq/oracle.hpp"
#include "scleq/rewriting.hpp"
#include "scleq/trail.hpp"
#include "util.hpp"

using namespace scleq;
using testutil::fixture;

namespace {

const char* kConstHeader = "sig f/1 a/0 b/0 c/0 d/0; order kbo; precedence d < c < b < a < f;";

void pushDecision(Trail& trail, const Literal& l) {
  TrailEntry e;
  e.lit = l;
  e.level = trail.currentLevel() + 1;
  e.kind = EntryKind::Decision;
  e.justClause = Clause{{l, complement(l)}};
  e.justLit = 0;
  trail.push(std::move(e));
}

bool hasRule(const Trs& r, const Term& lhs, const Term& rhs) {
  for (const Rule& rule : r.rules())
    if (rule.lhs == lhs && rule.rhs == rhs) return true;
  return false;
}

}  // namespace

TEST_CASE("build_conv completes and interreduces") {
  auto fx = fixture(kConstHeader);

  SUBCASE("three constant equations collapse to a common normal form") {
    Trail trail(fx.cfg());
    pushDecision(trail, fx.lit("c = d"));
    pushDecision(trail, fx.lit("a = b"));
    pushDecision(trail, fx.lit("b = d"));
    Trs conv = buildConv(trail, fx.cfg());
    CHECK(conv.rules().size() == 3);
    CHECK(hasRule(conv, fx.term("c"), fx.term("d")));
    CHECK(hasRule(conv, fx.term("a"), fx.term("d")));
    CHECK(hasRule(conv, fx.term("b"), fx.term("d")));
  }

  SUBCASE("no positive equations gives the empty system") {
    Trail trail(fx.cfg());
    pushDecision(trail, fx.lit("a != b"));
    CHECK(buildConv(trail, fx.cfg()).empty());
  }

  SUBCASE("single equation is just oriented") {
    Trail trail(fx.cfg());
    pushDecision(trail, fx.lit("a = b"));
    Trs conv = buildConv(trail, fx.cfg());
    REQUIRE(conv.rules().size() == 1);
    CHECK(conv.rules()[0].lhs == fx.term("a"));
    CHECK(conv.rules()[0].rhs == fx.term("b"));
  }
}

TEST_CASE("normalize returns normal form and trace") {
  auto fx = fixture(kConstHeader);
  Trs ab({Rule{fx.term("a"), fx.term("b"), nullptr}});
  auto [nf, trace] = normalize(fx.term("f(a)"), ab);
  CHECK(nf == fx.term("f(b)"));
  REQUIRE(trace.size() == 1);
  CHECK(trace[0].ruleIndex == 0);
  CHECK(trace[0].pos == Position{1});

  auto [same, empty] = normalize(fx.term("f(b)"), Trs{});
  CHECK(same == fx.term("f(b)"));
  CHECK(empty.empty());

  Trs conv = completeGroundPlain({{fx.term("c"), fx.term("d")},
                                  {fx.term("a"), fx.term("b")},
                                  {fx.term("b"), fx.term("d")}},
                                 fx.cfg());
  auto [nf2, trace2] = normalize(fx.term("f(a)"), conv);
  CHECK(nf2 == fx.term("f(d)"));
  REQUIRE(trace2.size() == 1);
  CHECK(trace2[0].pos == Position{1});
}

TEST_CASE("rewrite inference, ground structural case") {
  auto fx = fixture(kConstHeader);
  // a = b rewrites f(a) != f(b) at the lhs argument.
  auto left = makeLeafStep(fx.clause("a = b | c = d"), 0, Subst{});
  auto right = makeLeafStep(fx.clause("f(a) != f(b) | c != d"), 0, Subst{});
  auto concl = rewriteInference(left, right, Position{1, 1}, fx.cfg());
  CHECK(concl->groundLit() == fx.lit("f(b) != f(b)"));
  CHECK(clauseEqualModuloSymmetry(
      concl->groundClause(),
      fx.clause("f(b) != f(b) | c = d | c != d")));
  CHECK_FALSE(concl->leaf());
  CHECK(concl->left == left);
  CHECK(concl->right == right);
}

TEST_CASE("rewrite inference, first-order case from the worked example") {
  auto fx = fixture(
      "sig f/1 h/1 g/1 a/0 b/0 c/0 d/0; order kbo; "
      "precedence d < c < b < a < g < h < f;");
  Subst sigma;
  sigma.bind(0, fx.term("a"));
  // Left: f(x) = g(x) from the decision tautology; right: C3's first literal.
  auto left = makeLeafStep(fx.clause("f(X) = g(X) | f(X) != g(X)"), 0, sigma);
  auto right = makeLeafStep(fx.clause("f(X) != h(X) | f(X) != g(X)"), 0, sigma);
  auto i4 = rewriteInference(left, right, Position{1}, fx.cfg());
  CHECK(i4->groundLit() == fx.lit("h(a) != g(a)"));
  CHECK(clauseEqualModuloSymmetry(
      i4->groundClause(),
      fx.clause("h(a) != g(a) | f(a) != g(a) | f(a) != g(a)")));
}

TEST_CASE("rewrite inference below variable level") {
  auto fx = fixture(
      "sig f/1 h/1 g/1 a/0 b/0 c/0 d/0; order kbo; "
      "precedence d < c < b < a < g < h < f;");
  // Left: a = b from C3; right: C1's literal grounded with x -> g(a); the
  // rewritten occurrence of a sits below the variable x.
  auto left = makeLeafStep(fx.clause("a = b | f(g(b)) = h(b)"), 0, Subst{});
  Subst sigma;
  sigma.bind(0, fx.term("g(a)"));
  auto right = makeLeafStep(fx.clause("f(X) = h(b) | X != g(a)"), 0, sigma);
  auto i4 = rewriteInference(left, right, Position{1, 1, 1}, fx.cfg());
  CHECK(i4->groundLit() == fx.lit("f(g(b)) = h(b)"));
  CHECK(clauseEqualModuloSymmetry(
      i4->groundClause(),
      fx.clause("f(g(b)) = h(b) | g(a) != g(a) | f(g(b)) = h(b)")));
}

TEST_CASE("rewrite inference guard errors") {
  auto fx = fixture(kConstHeader);
  auto neg = makeLeafStep(fx.clause("a != b"), 0, Subst{});
  auto right = makeLeafStep(fx.clause("f(a) != f(b)"), 0, Subst{});
  CHECK_THROWS(rewriteInference(neg, right, Position{1, 1}, fx.cfg()));
  auto wrongPos = makeLeafStep(fx.clause("a = b"), 0, Subst{});
  CHECK_THROWS(rewriteInference(wrongPos, right, Position{2, 1}, fx.cfg()));
}

TEST_CASE("reduction chain application") {
  auto fx = fixture(kConstHeader);
  Trail trail(fx.cfg());
  pushDecision(trail, fx.lit("c = d"));
  pushDecision(trail, fx.lit("a = b"));

  SUBCASE("irreducible target is a single leaf") {
    auto target = makeLeafStep(fx.clause("b = d"), 0, Subst{});
    auto chain = reductionChainApplication(trail, target, fx.cfg());
    CHECK(chain.steps.size() == 1);
    CHECK(chain.final() == target);
  }

  SUBCASE("a = c reduces to b = d through both trail equations") {
    auto target = makeLeafStep(fx.clause("a != b | a = c"), 1, Subst{});
    auto chain = reductionChainApplication(trail, target, fx.cfg());
    CHECK(chain.final()->groundLit() == fx.lit("b = d"));
  }

  SUBCASE("replayed normalize trace") {
    auto target = makeLeafStep(fx.clause("f(a) = f(b)"), 0, Subst{});
    auto chain = reductionChainApplication(trail, target, fx.cfg());
    CHECK(chain.final()->groundLit() == fx.lit("f(b) = f(b)"));
  }
}

TEST_CASE("refutation") {
  auto fx = fixture(
      "sig f/1 h/1 g/1 a/0 b/0 c/0 d/0; order kbo; "
      "precedence d < c < b < a < g < h < f;");

  SUBCASE("worked two-decision refutation") {
    Trail trail(fx.cfg());
    pushDecision(trail, fx.lit("h(a) = g(a)"));
    pushDecision(trail, fx.lit("f(a) = g(a)"));
    Subst sigma;
    sigma.bind(0, fx.term("a"));
    auto target = makeLeafStep(fx.clause("f(X) != h(X) | f(X) != g(X)"), 0, sigma);
    auto chain = refutation(trail, target, fx.cfg());
    CHECK(trivialReflexive(chain.final()->groundLit()));
    CHECK(chain.final()->groundLit() == fx.lit("g(a) != g(a)"));
    CHECK(clauseEqualModuloSymmetry(
        chain.final()->groundClause(),
        fx.clause("g(a) != g(a) | f(a) != g(a) | f(a) != g(a) | h(a) != g(a)")));
  }

  SUBCASE("trivially false target on the empty trail") {
    Trail trail(fx.cfg());
    auto target = makeLeafStep(fx.clause("a != a"), 0, Subst{});
    auto chain = refutation(trail, target, fx.cfg());
    CHECK(chain.steps.size() == 1);
    CHECK(chain.final() == target);
  }

  SUBCASE("non-false target is rejected") {
    Trail trail(fx.cfg());
    auto target = makeLeafStep(fx.clause("a != b"), 0, Subst{});
    CHECK_THROWS_AS(refutation(trail, target, fx.cfg()), RewriteError);
  }
}

TEST_CASE("inference conclusions satisfy shape, decrease and entailment") {
  auto fx = fixture(kConstHeader);
  std::mt19937 rng(41);
  int done = 0;
  while (done < 60) {
    Term l = testutil::randomTerm(rng, fx.sig(), 2, 0);
    Term r = testutil::randomTerm(rng, fx.sig(), 2, 0);
    OrderResult lr = kboCompare(l, r, fx.cfg());
    if (lr == OrderResult::EQ) continue;
    if (lr == OrderResult::LT) std::swap(l, r);
    Literal target = testutil::randomLiteral(rng, fx.sig(), 2, 0);
    auto ps = positions(target);
    Position p = ps[std::uniform_int_distribution<size_t>(0, ps.size() - 1)(rng)];
    if (p.size() < 2) continue;  // skip whole-side replacements of constants
    Literal planted = replaceAt(target, p, l);

    auto left = makeLeafStep(Clause{{Literal{true, l, r},
                                     testutil::randomLiteral(rng, fx.sig(), 1, 0)}},
                             0, Subst{});
    auto right = makeLeafStep(
        Clause{{planted, testutil::randomLiteral(rng, fx.sig(), 1, 0)}}, 0, Subst{});
    RewriteStepPtr concl;
    try {
      concl = rewriteInference(left, right, p, fx.cfg());
    } catch (const RewriteError&) {
      continue;
    }
    ++done;
    // Shape: conclusion literal is the premise literal with l replaced by r.
    CHECK(sameModuloSymmetry(concl->groundLit(), replaceAt(planted, p, r)));
    // Clause part is the union of the premise rests.
    Clause rest;
    rest.lits.push_back(left->clause.lits[1]);
    rest.lits.push_back(right->clause.lits[1]);
    rest.lits.push_back(concl->groundLit());
    CHECK(clauseEqualModuloSymmetry(concl->groundClause(), rest));
    // Strict decrease of the rewritten literal.
    CHECK(compareLiterals(concl->groundLit(), right->groundLit(), fx.cfg()) ==
          OrderResult::LT);
    // Oracle entailment of the conclusion from the premises.
    CHECK(oracle::groundEntails({left->groundClause(), right->groundClause()},
                                concl->groundClause()));
  }
}

TEST_CASE("completion is confluent under permuted inputs") {
  auto fx = fixture(kConstHeader);
  std::mt19937 rng(43);
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<std::pair<Term, Term>> eqs;
    for (int i = 0; i < 4; ++i) {
      Term s = testutil::randomTerm(rng, fx.sig(), 1, 0);
      Term t = testutil::randomTerm(rng, fx.sig(), 1, 0);
      if (s != t) eqs.emplace_back(s, t);
    }
    Trs r1 = completeGroundPlain(eqs, fx.cfg());
    std::shuffle(eqs.begin(), eqs.end(), rng);
    Trs r2 = completeGroundPlain(eqs, fx.cfg());
    for (int i = 0; i < 10; ++i) {
      Term t = testutil::randomTerm(rng, fx.sig(), 2, 0);
      CHECK(normalize(t, r1).first == normalize(t, r2).first);
    }
  }
}

TEST_CASE("refutation chains are minimal") {
  auto fx = fixture(kConstHeader);
  Trail trail(fx.cfg());
  pushDecision(trail, fx.lit("c = d"));
  pushDecision(trail, fx.lit("a = b"));
  pushDecision(trail, fx.lit("b = d"));
  auto target = makeLeafStep(fx.clause("a != c"), 0, Subst{});
  auto chain = refutation(trail, target, fx.cfg());
  CHECK(trivialReflexive(chain.final()->groundLit()));
  // Every step is reachable from the final one: removing any breaks the chain.
  std::set<const RewriteStep*> reach;
  std::function<void(const RewriteStepPtr&)> visit = [&](const RewriteStepPtr& s) {
    if (!s || reach.count(s.get())) return;
    reach.insert(s.get());
    visit(s->left);
    visit(s->right);
  };
  visit(chain.final());
  CHECK(reach.size() == chain.steps.size());
  for (const auto& s : chain.steps) CHECK(reach.count(s.get()));
}
