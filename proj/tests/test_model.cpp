#include "ast.hpp"
#include "doctest.h"
#include "model.hpp"
#include "parser.hpp"

using namespace lwb;

namespace {

FormulaPtr p(const char* s) { return parse_formula(s); }

Interpretation two_elem() {
  Interpretation m;
  m.n = 2;
  m.consts = {{"a", 0}, {"b", 1}};
  m.preds[{"p", 1}] = {1, 0};          // p = {0}
  m.preds[{"r", 2}] = {0, 1, 0, 0};    // r = {(0,1)}
  return m;
}

}  // namespace

TEST_CASE("evaluation against a fixed interpretation") {
  Interpretation m = two_elem();
  CHECK(eval_formula(p("p(a)"), m));
  CHECK(!eval_formula(p("p(b)"), m));
  CHECK(eval_formula(p("r(a, b)"), m));
  CHECK(!eval_formula(p("r(b, a)"), m));
  CHECK(eval_formula(p("a != b"), m));
  CHECK(eval_formula(p("all X: (p(X) -> r(X, b))"), m));
  CHECK(eval_formula(p("ex X: ~p(X)"), m));
  CHECK(!eval_formula(p("all X: ex Y: r(X, Y)"), m));
  CHECK(eval_formula(p("true & (false | p(a))"), m));
}

TEST_CASE("quoted constants evaluate through the constant map") {
  Interpretation m;
  m.n = 2;
  m.consts = {{"v", 0}, {"'g'", 1}, {"'~g'", 0}};
  m.preds[{"pos", 2}] = {0, 1, 0, 0};  // pos = {(0,1)}
  CHECK(eval_formula(p("pos(v, 'g')"), m));
  CHECK(!eval_formula(p("pos(v, '~g')"), m));
  CHECK(eval_formula(p("'g' != '~g'"), m));
}

TEST_CASE("predicate quantifiers enumerate every relation") {
  Interpretation m = two_elem();
  EvalStats st;
  CHECK(eval_formula(p("all2 P/1: (P(a) | ~P(a))"), m, &st));
  CHECK(st.relations == 4);  // 2^(2^1)
  EvalStats st2;
  CHECK(eval_formula(p("all2 Q/2: (Q(a, a) | ~Q(a, a))"), m, &st2));
  CHECK(st2.relations == 16);  // 2^(2^2)

  CHECK(!eval_formula(p("all2 P/1: P(a)"), m));
  CHECK(eval_formula(p("ex2 P/1: (P(a) & ~P(b))"), m));
  CHECK(eval_formula(p("all2 P/1: all2 P/1: (P(a) | ~P(a))"), m));
  // the inner binder shadows the outer relation
  CHECK(eval_formula(p("ex2 P/1: (P(a) & ex2 P/1: ~P(a))"), m));
}

TEST_CASE("second-order quantifiers over large cell counts are refused") {
  Interpretation m;
  m.n = 3;
  CHECK_THROWS_AS(eval_formula(p("all2 P/3: (P(X, X, X) | true)"), m), Error);
}

TEST_CASE("countermodel search finds the least canonical witness") {
  auto r = find_countermodel(p("p(a) -> p(b)"), 3);
  REQUIRE(r.has_value());
  CHECK(r->n == 2);
  CHECK(r->consts.at("a") == 0);
  CHECK(r->consts.at("b") == 1);
  CHECK(!eval_formula(p("p(a) -> p(b)"), *r));

  CHECK(!find_countermodel(p("all X: (p(X) -> p(X))"), 3).has_value());
  CHECK(!find_countermodel(p("a = b -> b = a"), 3).has_value());
  CHECK(find_countermodel(p("a = b"), 3).has_value());
}

TEST_CASE("free variables are searched like constants") {
  auto r = find_countermodel(p("p(X) -> p(Y)"), 2);
  REQUIRE(r.has_value());
  CHECK(!eval_formula(p("p(X) -> p(Y)"), *r));
}

TEST_CASE("function tables participate in the search") {
  auto r = find_countermodel(p("f(a) = a"), 2);
  REQUIRE(r.has_value());
  CHECK(r->n == 2);
  CHECK(!eval_formula(p("f(a) = a"), *r));
  CHECK(!find_countermodel(p("f(a) = f(a)"), 2).has_value());
}

TEST_CASE("a frame-condition gap has a two-element witness") {
  const char* fcs =
      "all X: all Y: all Z: (r(X, Y) & r(X, Z) & Y != X & Y != Z -> "
      "r(Y, X) | r(Y, Z))";
  const char* sym = "all X: all Y: (r(X, Y) -> r(Y, X))";
  const char* euc = "all X: all Y: all Z: (r(X, Y) & r(X, Z) -> r(Z, Y))";
  std::string gap = std::string("(") + fcs + ") -> (" + sym + ") | (" + euc + ")";
  auto r = find_countermodel(parse_formula(gap), 4);
  REQUIRE(r.has_value());
  CHECK(r->n == 2);
  CHECK(!eval_formula(parse_formula(gap), *r));
}

TEST_CASE("search budget raises an explicit resource error") {
  // valid formulas force a full scan, so a tiny budget must trip
  CHECK_THROWS_AS(find_countermodel(p("p(a) | ~p(a) | q(a, b)"), 3, 3), Error);
  try {
    find_countermodel(p("p(a) | ~p(a)"), 3, 1);
    FAIL("expected a resource error");
  } catch (const Error& e) {
    CHECK(e.code == Err::Resource);
  }
}

TEST_CASE("evaluation rejects what must be rewritten first") {
  Interpretation m = two_elem();
  CHECK_THROWS_AS(eval_formula(mk_box(p("p(a)")), m), Error);
  CHECK_THROWS_AS(eval_formula(mk_macro_call("d", {mk_const("a")}), m), Error);
  CHECK_THROWS_AS(find_countermodel(mk_dia(p("p(a)")), 2), Error);
  CHECK_THROWS_AS(eval_formula(p("unknown(a)"), m), Error);
}

TEST_CASE("witness description is stable and readable") {
  Interpretation m = two_elem();
  std::string d = m.describe();
  CHECK(d.find("domain size 2") != std::string::npos);
  CHECK(d.find("a = 0") != std::string::npos);
  CHECK(d.find("r = {(0,1)}") != std::string::npos);
}
