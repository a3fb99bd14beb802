#include <functional>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "model.hpp"
#include "normalize.hpp"
#include "parser.hpp"
#include "printer.hpp"
#include "soqe.hpp"

using namespace lwb;

namespace {

FormulaPtr p(const std::string& s) { return parse_formula(s); }

TermPtr v(const std::string& base) { return mk_var(VarKey{base, Quote::None}); }

}  // namespace

TEST_CASE("purity substitutes a uniform-polarity predicate") {
  auto r = purity_delete(p("q & ~P(c)"), "P", 1);
  REQUIRE(r.has_value());
  CHECK(formula_equal(*r, p("q")));

  r = purity_delete(p("P(c)"), "P", 1);
  REQUIRE(r.has_value());
  CHECK((*r)->kind == FKind::Truth);

  CHECK(!purity_delete(p("P(c) & ~P(d)"), "P", 1).has_value());

  // vacuous: the body is its own result
  r = purity_delete(p("q(a) | s"), "P", 1);
  REQUIRE(r.has_value());
  CHECK(check_so_equivalence(*r, p("q(a) | s"), 3));

  // a foreign arity blocks the substitution
  CHECK(!purity_delete(p("P(c) & P(c, d)"), "P", 1).has_value());
  // so does a quoted occurrence
  CHECK(!purity_delete(p("pos(a, 'P') & P(c)"), "P", 1).has_value());
}

TEST_CASE("ackermann form of a guarded definition") {
  FormulaPtr body = p("(all X: (X = c -> P(X))) & ~P(d)");
  auto af = to_ackermann_form(body, "P", 1);
  REQUIRE(af.has_value());
  CHECK(af->orientation == Orientation::Positive);
  CHECK(af->arity == 1);
  CHECK(af->params.size() == 1);
  CHECK(!pred_occurs(af->definition, "P"));
  CHECK(pred_occurs(af->matrix, "P"));

  FormulaPtr out = apply_ackermann(*af);
  CHECK(!pred_occurs(out, "P"));
  CHECK(check_so_equivalence(out, p("~(d = c)"), 3));
  CHECK(check_so_equivalence(mk_exists_pred("P", 1, body), out, 3));
}

TEST_CASE("ackermann form of a purely positive body is dual with a true bound") {
  FormulaPtr body = p("P(c) & P(d)");
  auto af = to_ackermann_form(body, "P", 1);
  REQUIRE(af.has_value());
  CHECK(af->orientation == Orientation::Dual);
  CHECK(simplify(af->definition)->kind == FKind::Truth);
  CHECK(simplify(apply_ackermann(*af))->kind == FKind::Truth);
}

TEST_CASE("ackermann form is refused when a clause mixes both polarities") {
  FormulaPtr body = p("P(c) & ~P(c) & (all X: (P(X) | ~P(X) | q(X)))");
  CHECK(!to_ackermann_form(body, "P", 1).has_value());
}

TEST_CASE("definition instantiation renames capturing binders") {
  AckermannForm af;
  af.pred = "P";
  af.arity = 1;
  af.params = {VarKey{"X1", Quote::None}};
  af.definition = mk_exists(VarKey{"Y", Quote::None},
                            mk_and({mk_atom("u", {v("X1"), v("Y")}),
                                    mk_atom("w", {v("Z")})}));
  af.matrix = mk_forall(VarKey{"Z", Quote::None}, mk_atom("P", {v("Z")}));
  af.orientation = Orientation::Positive;

  FormulaPtr out = apply_ackermann(af);
  REQUIRE(out->kind == FKind::ForallInd);
  CHECK(out->var.base != "Z");  // the matrix binder moved out of the way
  Signature sig = free_symbols(out);
  CHECK(sig.free_vars.count(VarKey{"Z", Quote::None}) == 1);
  CHECK(!pred_occurs(out, "P"));
}

TEST_CASE("random ackermann instances match their quantified originals") {
  std::mt19937 rng(20240822);
  auto pick = [&](int n) { return (int)(rng() % n); };

  // terms over two constants
  auto cterm = [&]() { return mk_const(pick(2) ? "a" : "b"); };

  // random predicate-free formula over the given variables
  std::function<FormulaPtr(int, const std::vector<VarKey>&)> guard =
      [&](int depth, const std::vector<VarKey>& vars) -> FormulaPtr {
    auto vterm = [&]() -> TermPtr {
      if (!vars.empty() && pick(3)) return mk_var(vars[pick((int)vars.size())]);
      return cterm();
    };
    if (depth == 0 || pick(4) == 0) {
      switch (pick(4)) {
        case 0: return mk_atom("w", {vterm()});
        case 1: return mk_atom("u", {vterm(), vterm()});
        case 2: return mk_eq(vterm(), vterm());
        default: return mk_not(mk_atom("w", {vterm()}));
      }
    }
    switch (pick(3)) {
      case 0: return mk_and({guard(depth - 1, vars), guard(depth - 1, vars)});
      case 1: return mk_or({guard(depth - 1, vars), guard(depth - 1, vars)});
      default: return mk_not(guard(depth - 1, vars));
    }
  };

  // monotone matrix whose P-leaves all carry the polarity the orientation
  // expects, so the combined formula really is an Ackermann instance
  std::function<FormulaPtr(int, int, bool, std::vector<VarKey>&)> matrix =
      [&](int depth, int arity, bool negate_p,
          std::vector<VarKey>& scope) -> FormulaPtr {
    auto aterm = [&]() -> TermPtr {
      if (!scope.empty() && pick(2)) return mk_var(scope[pick((int)scope.size())]);
      return cterm();
    };
    if (depth == 0 || pick(3) == 0) {
      if (pick(2)) {
        std::vector<TermPtr> args;
        for (int i = 0; i < arity; ++i) args.push_back(aterm());
        FormulaPtr at = mk_atom("P", std::move(args));
        return negate_p ? mk_not(at) : at;
      }
      return mk_atom("w", {aterm()});
    }
    switch (pick(4)) {
      case 0:
        return mk_and({matrix(depth - 1, arity, negate_p, scope),
                       matrix(depth - 1, arity, negate_p, scope)});
      case 1:
        return mk_or({matrix(depth - 1, arity, negate_p, scope),
                      matrix(depth - 1, arity, negate_p, scope)});
      case 2: {
        VarKey k{"M" + std::to_string((int)scope.size()), Quote::None};
        scope.push_back(k);
        FormulaPtr b = matrix(depth - 1, arity, negate_p, scope);
        scope.pop_back();
        return mk_forall(k, b);
      }
      default: {
        VarKey k{"M" + std::to_string((int)scope.size()), Quote::None};
        scope.push_back(k);
        FormulaPtr b = matrix(depth - 1, arity, negate_p, scope);
        scope.pop_back();
        return mk_exists(k, b);
      }
    }
  };

  for (int i = 0; i < 60; ++i) {
    AckermannForm af;
    af.pred = "P";
    af.arity = 1 + pick(2);
    af.orientation = pick(2) ? Orientation::Positive : Orientation::Dual;
    std::vector<VarKey> params;
    for (int j = 0; j < af.arity; ++j)
      params.push_back(VarKey{"X" + std::to_string(j + 1), Quote::None});
    af.params = params;
    af.definition = guard(2, params);
    std::vector<VarKey> scope;
    af.matrix = matrix(3, af.arity, af.orientation == Orientation::Positive, scope);

    // all x̄ (A -> P(x̄))   resp.   all x̄ (P(x̄) -> A)
    std::vector<TermPtr> pargs;
    for (auto& k : params) pargs.push_back(mk_var(k));
    FormulaPtr patom = mk_atom("P", std::move(pargs));
    FormulaPtr link = af.orientation == Orientation::Positive
                          ? mk_implies(af.definition, patom)
                          : mk_implies(patom, af.definition);
    for (auto it = params.rbegin(); it != params.rend(); ++it)
      link = mk_forall(*it, link);
    FormulaPtr quantified =
        mk_exists_pred("P", af.arity, mk_and({link, af.matrix}));

    FormulaPtr out = apply_ackermann(af);
    CAPTURE(i);
    CAPTURE(print_formula(quantified));
    CHECK(!pred_occurs(out, "P"));
    CHECK(check_so_equivalence(quantified, out, 3));
  }
}

TEST_CASE("eliminate leaves a quantifier-free formula untouched") {
  FormulaPtr f = p("p & q");
  ElimOutcome out = eliminate(f);
  CHECK(out.status == ElimStatus::Eliminated);
  CHECK(formula_equal(out.result, f));
  CHECK(!out.trace.empty());
}

TEST_CASE("eliminate handles an existential with skolemized witnesses") {
  FormulaPtr f =
      p("ex2 P/1: ((ex Y: (w(Y) & P(Y))) & (all X: (P(X) -> u(X, X))))");
  ElimOutcome out = eliminate(f);
  REQUIRE(out.status == ElimStatus::Eliminated);
  CHECK(!pred_occurs(out.result, "P"));
  CHECK(!free_symbols(out.result).has_pred_quant);
  CHECK(check_so_equivalence(out.result, p("ex Y: (w(Y) & u(Y, Y))"), 3));
  CHECK(check_so_equivalence(f, out.result, 3));
}

TEST_CASE("eliminate derives the displayed essence expansion") {
  FormulaPtr f = p(
      "all2 Q/2: (p(v, x) & (Q(v, x) -> all W: (r(v, W) -> all Y: (e(W, Y) -> "
      "(p(W, Y) -> Q(W, Y))))))");
  ElimOutcome out = eliminate(f);
  REQUIRE(out.status == ElimStatus::Eliminated);
  Signature sig = free_symbols(out.result);
  CHECK(!sig.has_pred_quant);
  CHECK(!pred_occurs(out.result, "Q"));
  CHECK(!quoted_occurs(out.result, "Q"));
  CHECK(check_so_equivalence(f, out.result, 3));
  FormulaPtr display = p(
      "p(v, x) & (all Y: all Z: (e(Y, Z) & p(Y, Z) & r(v, Y) -> Y = v)) & "
      "(all Y: all Z: (e(Y, Z) & p(Y, Z) & r(v, Y) -> Z = x))");
  CHECK(check_so_equivalence(out.result, display, 3));
}

TEST_CASE("eliminate derives the displayed necessary-existence expansion") {
  FormulaPtr f = p(
      "all2 P/2: ((all2 Q/2: (P(v, x) & (Q(v, x) -> all W: (r(v, W) -> all Y: "
      "(e(W, Y) -> (P(W, Y) -> Q(W, Y))))))) -> all W: (r(v, W) -> ex Y: "
      "(e(W, Y) & P(W, Y))))");
  ElimOutcome out = eliminate(f);
  REQUIRE(out.status == ElimStatus::Eliminated);
  Signature sig = free_symbols(out.result);
  CHECK(!sig.has_pred_quant);
  CHECK(!pred_occurs(out.result, "P"));
  CHECK(!pred_occurs(out.result, "Q"));
  CHECK(check_so_equivalence(f, out.result, 3));
  FormulaPtr display =
      p("(all Y: (r(v, Y) -> Y = v)) & (all Y: (r(v, Y) -> e(Y, x)))");
  CHECK(check_so_equivalence(out.result, display, 3));
}

TEST_CASE("eliminate derives the displayed frame condition") {
  FormulaPtr f = p(
      "all2 g/1: all V: ((g(V) -> all W: (r(V, W) -> g(W))) & (ex W: (r(V, W) "
      "& g(W) & (g(W) -> all U: (r(W, U) -> g(U))))) -> all W2: (r(V, W2) -> "
      "g(W2)))");
  ElimOutcome out = eliminate(f);
  REQUIRE(out.status == ElimStatus::Eliminated);
  Signature sig = free_symbols(out.result);
  CHECK(!sig.has_pred_quant);
  CHECK(!pred_occurs(out.result, "g"));
  CHECK(check_so_equivalence(f, out.result, 3));
  FormulaPtr display = p(
      "all X: all Y: all Z: (r(X, Y) & r(X, Z) -> r(Y, X) | r(Y, Z) | X = Y | "
      "Y = Z)");
  CHECK(check_so_equivalence(out.result, display, 3));
}

TEST_CASE("eliminate reports failure on the unabridged final step") {
  FormulaPtr f = p(
      "all2 g/2: all V: ((all A: all B: (r(A, B) -> world(B))) & (all V2: "
      "(world(V2) -> ((ex X: (e(V2, X) & g(V2, X))) -> all W: (r(V2, W) -> ex "
      "Y: (e(W, Y) & g(W, Y)))))) & (world(V) -> ex W: (r(V, W) & ex X: (e(W, "
      "X) & g(W, X)))) -> (world(V) -> all W: (r(V, W) -> ex Y: (e(W, Y) & "
      "g(W, Y)))))");
  ElimOutcome out = eliminate(f);
  CHECK(out.status == ElimStatus::Failed);
  CHECK(!out.blocker.empty());
  CHECK(formula_equal(out.result, f));
}

TEST_CASE("random eliminations are equivalence-preserving") {
  std::mt19937 rng(909);
  auto pick = [&](int n) { return (int)(rng() % n); };

  std::function<FormulaPtr(int, std::vector<VarKey>&)> gen =
      [&](int depth, std::vector<VarKey>& scope) -> FormulaPtr {
    auto t = [&]() -> TermPtr {
      if (!scope.empty() && pick(2)) return mk_var(scope[pick((int)scope.size())]);
      return mk_const(pick(2) ? "a" : "b");
    };
    if (depth == 0 || pick(4) == 0) {
      switch (pick(5)) {
        case 0: return mk_atom("P", {t()});
        case 1: return mk_not(mk_atom("P", {t()}));
        case 2: return mk_atom("w", {t()});
        case 3: return mk_eq(t(), t());
        default: return mk_atom("u", {t(), t()});
      }
    }
    switch (pick(5)) {
      case 0: return mk_and({gen(depth - 1, scope), gen(depth - 1, scope)});
      case 1: return mk_or({gen(depth - 1, scope), gen(depth - 1, scope)});
      case 2: return mk_not(gen(depth - 1, scope));
      case 3:
        return mk_implies(gen(depth - 1, scope), gen(depth - 1, scope));
      default: {
        VarKey k{"N" + std::to_string((int)scope.size()), Quote::None};
        scope.push_back(k);
        FormulaPtr b = gen(depth - 1, scope);
        scope.pop_back();
        return pick(2) ? mk_forall(k, b) : mk_exists(k, b);
      }
    }
  };

  int eliminated = 0;
  for (int i = 0; i < 40; ++i) {
    std::vector<VarKey> scope;
    FormulaPtr body = gen(3, scope);
    FormulaPtr f = mk_exists_pred("P", 1, body);
    ElimOutcome out = eliminate(f);
    if (out.status != ElimStatus::Eliminated) continue;
    ++eliminated;
    CAPTURE(i);
    CAPTURE(print_formula(f));
    CHECK(!free_symbols(out.result).has_pred_quant);
    CHECK(!pred_occurs(out.result, "P"));
    CHECK(check_so_equivalence(f, out.result, 2));
  }
  CHECK(eliminated > 0);
  MESSAGE("eliminated ", eliminated, " of 40 random bodies");
}
