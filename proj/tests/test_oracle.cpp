#include "doctest.h"

#include <random>

#include "scleq/oracle.hpp"
#include "scleq/trail.hpp"
#include "util.hpp"

using namespace scleq;
using testutil::fixture;

namespace {
const char* kHeader =
    "sig f/1 g/1 a/0 b/0 c/0 d/0; order kbo; precedence d < c < b < a < g < f;";
}

TEST_CASE("cc_entails") {
  auto fx = fixture(kHeader);
  CHECK(oracle::ccEntails({fx.lit("a = b")}, fx.lit("f(a) = f(b)")));
  CHECK(oracle::ccEntails({}, fx.lit("a = a")));
  CHECK_FALSE(oracle::ccEntails({fx.lit("a = b")}, fx.lit("a = c")));
  // Negative facts force negative conclusions.
  CHECK(oracle::ccEntails({fx.lit("f(a) != f(b)")}, fx.lit("a != b")));
  CHECK(oracle::ccEntails({fx.lit("a = b"), fx.lit("b = c")}, fx.lit("a = c")));
}

TEST_CASE("ground_sat") {
  auto fx = fixture(kHeader);
  SUBCASE("plain contradiction") {
    oracle::GroundProblem p;
    p.clauses = {fx.clause("a = b"), fx.clause("a != b")};
    CHECK_FALSE(oracle::groundSat(p));
  }
  SUBCASE("congruence contradiction") {
    oracle::GroundProblem p;
    p.clauses = {fx.clause("a = b"), fx.clause("f(a) != f(b) | a = c"),
                 fx.clause("a != c")};
    CHECK_FALSE(oracle::groundSat(p));
  }
  SUBCASE("satisfiable set yields a consistent selection") {
    oracle::GroundProblem p;
    p.clauses = {fx.clause("a = b | c = d"), fx.clause("a != b")};
    auto m = oracle::groundSat(p);
    REQUIRE(m);
    CHECK(m->chosen.size() == 2);
    CHECK(oracle::ccEntails(m->chosen, fx.lit("c = d")));
  }
  SUBCASE("size limit") {
    oracle::GroundProblem p;
    for (int i = 0; i < 70; ++i) p.clauses.push_back(fx.clause("a = b"));
    CHECK_THROWS_AS(oracle::groundSat(p), oracle::SizeLimitError);
  }
}

TEST_CASE("ground_sat agrees with exhaustive interpretation enumeration") {
  auto fx = fixture("sig a/0 b/0 c/0 d/0; order kbo;");
  std::vector<Term> universe = {fx.term("a"), fx.term("b"), fx.term("c"),
                                fx.term("d")};
  std::mt19937 rng(79);
  for (int iter = 0; iter < 200; ++iter) {
    oracle::GroundProblem p;
    int n = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) {
      Clause c;
      int k = 1 + static_cast<int>(rng() % 3);
      for (int j = 0; j < k; ++j)
        c.lits.push_back(Literal{rng() % 2 == 0, universe[rng() % 4],
                                 universe[rng() % 4]});
      p.clauses.push_back(std::move(c));
    }
    // Exhaustive: every partition of 4 constants into classes (Bell(4) = 15
    // partitions, enumerated via class-assignment vectors).
    bool sat = false;
    for (int a0 = 0; a0 < 1 && !sat; ++a0)
      for (int a1 = 0; a1 < 2 && !sat; ++a1)
        for (int a2 = 0; a2 < 3 && !sat; ++a2)
          for (int a3 = 0; a3 < 4 && !sat; ++a3) {
            int cls[4] = {a0, a1, a2, a3};
            auto sameClass = [&](const Term& x, const Term& y) {
              auto id = [&](const Term& t) {
                for (int i = 0; i < 4; ++i)
                  if (t == universe[static_cast<size_t>(i)]) return cls[i];
                return -1;
              };
              return id(x) == id(y);
            };
            bool ok = true;
            for (const Clause& c : p.clauses) {
              bool lit = false;
              for (const Literal& l : c.lits)
                if (sameClass(l.lhs, l.rhs) == l.positive) lit = true;
              if (!lit) ok = false;
            }
            if (ok) sat = true;
          }
    CHECK(oracle::groundSat(p).has_value() == sat);
  }
}

TEST_CASE("is_redundant") {
  auto fx = fixture(kHeader);
  Term beta = fx.term("f(f(a))");
  Trail trail(fx.cfg());

  SUBCASE("clause present in the pool is redundant") {
    Clause c = fx.clause("a = b");
    CHECK(oracle::isRedundant(Closure{c, Subst{}}, {c}, trail, beta, fx.sig(),
                              fx.cfg()));
  }
  SUBCASE("strict superset of a pool clause is redundant") {
    Clause small = fx.clause("a = b");
    Clause big = fx.clause("a = b | c = d");
    CHECK(oracle::isRedundant(Closure{big, Subst{}}, {small}, trail, beta,
                              fx.sig(), fx.cfg()));
  }
  SUBCASE("unrelated clause is not redundant") {
    Clause c = fx.clause("a = b");
    CHECK_FALSE(oracle::isRedundant(Closure{c, Subst{}}, {fx.clause("c = d")},
                                    trail, beta, fx.sig(), fx.cfg()));
  }
}
