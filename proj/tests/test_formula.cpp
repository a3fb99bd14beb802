#include <random>

#include "ast.hpp"
#include "doctest.h"
#include "modal.hpp"
#include "parser.hpp"
#include "printer.hpp"

using namespace lwb;

namespace {

FormulaPtr p(const char* s) { return parse_formula(s); }

std::string rt(const char* s) { return print_formula(parse_formula(s)); }

// Random formulas inside the parser image: names obey the case convention,
// n-ary nodes have at least two children, no macro-call nodes.
struct Gen {
  std::mt19937 rng;
  explicit Gen(uint32_t seed) : rng(seed) {}

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  TermPtr term(int depth) {
    switch (pick(depth > 0 ? 5 : 4)) {
      case 0: return mk_var(pick(2) ? "X" : "Y");
      case 1: return mk_const(pick(2) ? "a" : "b");
      case 2: return mk_quoted(pick(2) ? "g" : "Q", pick(2) == 0);
      case 3: return mk_var("_G" + std::to_string(pick(3)));
      default: {
        std::vector<TermPtr> args;
        int n = 1 + pick(2);
        for (int i = 0; i < n; ++i) args.push_back(term(depth - 1));
        return mk_app(pick(2) ? "f" : "h", std::move(args));
      }
    }
  }

  std::vector<TermPtr> terms(int n, int depth) {
    std::vector<TermPtr> out;
    for (int i = 0; i < n; ++i) out.push_back(term(depth));
    return out;
  }

  FormulaPtr atom(int depth) {
    switch (pick(6)) {
      case 0: return f_true();
      case 1: return f_false();
      case 2: return mk_eq(term(depth), term(depth));
      case 3: return mk_not(mk_eq(term(depth), term(depth)));
      case 4: return mk_atom(pick(2) ? "p" : "Q", {});
      default:
        return mk_atom(pick(2) ? "q" : "r", terms(1 + pick(2), depth));
    }
  }

  FormulaPtr formula(int depth) {
    if (depth <= 0) return atom(1);
    switch (pick(10)) {
      case 0: return mk_not(formula(depth - 1));
      case 1: {
        std::vector<FormulaPtr> kids;
        int n = 2 + pick(2);
        for (int i = 0; i < n; ++i) kids.push_back(formula(depth - 1));
        return mk_and(std::move(kids));
      }
      case 2: {
        std::vector<FormulaPtr> kids;
        int n = 2 + pick(2);
        for (int i = 0; i < n; ++i) kids.push_back(formula(depth - 1));
        return mk_or(std::move(kids));
      }
      case 3: return mk_implies(formula(depth - 1), formula(depth - 1));
      case 4: return mk_iff(formula(depth - 1), formula(depth - 1));
      case 5: {
        VarKey k = pick(3) == 0 ? VarKey{"Q", pick(2) ? Quote::Pos : Quote::Neg}
                                : VarKey{pick(2) ? "X" : "Z", Quote::None};
        FormulaPtr body = formula(depth - 1);
        return pick(2) ? mk_forall(k, body) : mk_exists(k, body);
      }
      case 6: {
        std::string n = pick(2) ? "P" : "g";
        FormulaPtr body = formula(depth - 1);
        return pick(2) ? mk_forall_pred(n, pick(3), body)
                       : mk_exists_pred(n, pick(3), body);
      }
      case 7: return pick(2) ? mk_box(formula(depth - 1))
                             : mk_dia(formula(depth - 1));
      default: return atom(depth);
    }
  }
};

}  // namespace

TEST_CASE("parser precedence and associativity") {
  CHECK(formula_equal(p("a & b | c"), mk_or({mk_and({p("a"), p("b")}), p("c")})));
  CHECK(formula_equal(p("a | b & c"), mk_or({p("a"), mk_and({p("b"), p("c")})})));
  CHECK(formula_equal(p("a -> b -> c"), mk_implies(p("a"), mk_implies(p("b"), p("c")))));
  CHECK(formula_equal(p("a <-> b <-> c"), mk_iff(p("a"), mk_iff(p("b"), p("c")))));
  CHECK(formula_equal(p("a -> b <-> c"), mk_iff(mk_implies(p("a"), p("b")), p("c"))));
  CHECK(formula_equal(p("~a & b"), mk_and({mk_not(p("a")), p("b")})));
  CHECK(formula_equal(p("~(a & b)"), mk_not(mk_and({p("a"), p("b")}))));
}

TEST_CASE("unparenthesized chains are n-ary, parenthesized groups stay nested") {
  FormulaPtr flat = p("a & b & c");
  CHECK(flat->kind == FKind::And);
  CHECK(flat->kids.size() == 3);
  FormulaPtr nested = p("a & (b & c)");
  CHECK(nested->kids.size() == 2);
  CHECK(nested->kids[1]->kind == FKind::And);
  CHECK(!formula_equal(flat, nested));
  // printing keeps them distinct
  CHECK(rt("a & b & c") == "a & b & c");
  CHECK(rt("a & (b & c)") == "a & (b & c)");
}

TEST_CASE("quantifier scope extends maximally right") {
  FormulaPtr f = p("all X: p(X) -> q(X)");
  REQUIRE(f->kind == FKind::ForallInd);
  CHECK(f->kids[0]->kind == FKind::Implies);
  FormulaPtr g = p("p(a) & all X: q(X) & r(X)");
  REQUIRE(g->kind == FKind::And);
  REQUIRE(g->kids.size() == 2);
  CHECK(g->kids[1]->kind == FKind::ForallInd);
  CHECK(g->kids[1]->kids[0]->kind == FKind::And);
}

TEST_CASE("equality sugar") {
  FormulaPtr f = p("a != b");
  REQUIRE(f->kind == FKind::Not);
  CHECK(f->kids[0]->kind == FKind::Eq);
  CHECK(rt("a != b") == "a != b");
  CHECK(rt("~(a != b)") == "~(a != b)");
  CHECK(rt("x = y") == "x = y");
}

TEST_CASE("quoted terms and binders") {
  FormulaPtr f = p("pos(v, '~g')");
  REQUIRE(f->kind == FKind::Atom);
  CHECK(f->args[1]->kind == TermKind::Quoted);
  CHECK(f->args[1]->qneg);
  FormulaPtr g = p("ex 'Q': pos(v, 'Q')");
  REQUIRE(g->kind == FKind::ExistsInd);
  CHECK(g->var == VarKey{"Q", Quote::Pos});
  CHECK(rt("ex '~Q': pos(v, '~Q')") == "ex '~Q': pos(v, '~Q')");
}

TEST_CASE("predicate quantifiers bind names at an arity") {
  FormulaPtr f = p("all2 Q/2: val(v, Q)");
  REQUIRE(f->kind == FKind::ForallPred);
  CHECK(f->name == "Q");
  CHECK(f->pred_arity == 2);
  FormulaPtr g = p("all2 g/1: all V: (pre(V) -> g(V))");
  CHECK(g->name == "g");
  CHECK(g->pred_arity == 1);
}

TEST_CASE("modal operators parse as tight unary in modal input only") {
  FormulaPtr f = parse_modal_formula("[]p -> <>q");
  REQUIRE(f->kind == FKind::Implies);
  CHECK(f->kids[0]->kind == FKind::Box);
  CHECK(f->kids[1]->kind == FKind::Dia);
  CHECK(formula_equal(parse_modal_formula("box p -> dia q"), f));
  CHECK(print_formula(parse_modal_formula("[](p -> q)")) == "[](p -> q)");
  CHECK_THROWS_AS(p("[]p"), Error);
  CHECK_THROWS_AS(p("<>p"), Error);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_formula("p &\n  & q");
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(e.code == Err::Syntax);
    CHECK(e.line == 2);
    CHECK(e.col == 3);
  }
  CHECK_THROWS_AS(parse_formula("'g'"), Error);
  CHECK_THROWS_AS(parse_formula("all x: p"), Error);
  CHECK_THROWS_AS(parse_formula("p("), Error);
}

TEST_CASE("free symbols, arity checks") {
  Signature sig = free_symbols(p("all X: (p(X, a) -> ex Y: q(f(Y))) & r"));
  CHECK(sig.preds.at("p") == 2);
  CHECK(sig.preds.at("q") == 1);
  CHECK(sig.preds.at("r") == 0);
  CHECK(sig.funcs.at("f") == 1);
  CHECK(sig.consts.count("a") == 1);
  CHECK(sig.free_vars.empty());

  Signature sg2 = free_symbols(p("pos(v, 'g') & all2 Q/2: Q(v, x)"));
  CHECK(sg2.quoted.count({"g", false}) == 1);
  CHECK(sg2.has_pred_quant);
  CHECK(sg2.pred_vars.empty());  // Q is bound

  CHECK_THROWS_AS(free_symbols(p("p(a) & p(a, b)")), Error);
  CHECK_THROWS_AS(free_symbols(p("all2 Q/2: Q(a)")), Error);
}

TEST_CASE("bound quoted keys are not free quoted constants") {
  Signature sig = free_symbols(p("ex 'Q': pos(v, 'Q')"));
  CHECK(sig.quoted.empty());
  Signature sg2 = free_symbols(p("ex 'Q': pos(v, '~Q')"));
  CHECK(sg2.quoted.count({"Q", true}) == 1);  // only the positive key is bound
}

TEST_CASE("substitution avoids capture") {
  Fresh fresh;
  Subst s;
  s.var_map[{"Y", Quote::None}] = mk_var("X");
  FormulaPtr f = p("all X: p(X, Y)");
  FormulaPtr g = substitute(f, s, fresh);
  CHECK(alpha_equal(g, p("all Z: p(Z, X)")));
  CHECK(!alpha_equal(g, p("all X: p(X, X)")));
}

TEST_CASE("substitution instantiates predicate positions") {
  Fresh fresh;
  Subst s;
  s.var_map[{"P", Quote::None}] = mk_const("g");
  s.pred_map["P"] = "g";
  FormulaPtr f = p("P(W, X) & pos(V, 'P') & thm(V, P)");
  FormulaPtr g = substitute(f, s, fresh);
  CHECK(formula_equal(g, p("g(W, X) & pos(V, 'g') & thm(V, g)")));
}

TEST_CASE("renaming a predicate rewrites quoted binders nominally") {
  Fresh fresh;
  Subst s;
  s.pred_map["Q"] = "g";
  // the bound quoted key loses its nominal link and becomes a plain variable
  FormulaPtr f = p("ex 'Q': (pos(v, 'Q') & Q(v, x))");
  FormulaPtr g = substitute(f, s, fresh);
  REQUIRE(g->kind == FKind::ExistsInd);
  CHECK(g->var.quote == Quote::None);
  CHECK(alpha_equal(g, p("ex W: (pos(v, W) & g(v, x))")));
}

TEST_CASE("predicate binders shadow and avoid capture") {
  Fresh fresh;
  Subst s;
  s.pred_map["P"] = "q";
  FormulaPtr f = p("all2 P/1: (P(a) & q(b))");
  CHECK(formula_equal(substitute(f, s, fresh), f));  // P is bound, q unchanged

  // replacing R by P under a binder of P forces an alpha-rename
  Subst s2;
  s2.pred_map["R"] = "P";
  FormulaPtr h = substitute(p("all2 P/1: (P(a) & R(a))"), s2, fresh);
  CHECK(alpha_equal(h, p("all2 S/1: (S(a) & P(a))")));
}

TEST_CASE("truth-constant instantiation") {
  Fresh fresh;
  FormulaPtr f = p("all X: (P(X) -> q(X))");
  CHECK(formula_equal(instantiate_pred_truth(f, "P", true, fresh),
                      p("all X: (true -> q(X))")));
  CHECK(formula_equal(instantiate_pred_truth(f, "P", false, fresh),
                      p("all X: (false -> q(X))")));
  // a bound quoted key of P is renamed away first
  FormulaPtr g = instantiate_pred_truth(p("ex 'P': (pos(v, 'P') & P(v))"), "P",
                                        true, fresh);
  REQUIRE(g->kind == FKind::ExistsInd);
  CHECK(g->var.quote == Quote::None);
  // a free quoted occurrence has no truth-constant reading
  CHECK_THROWS_AS(instantiate_pred_truth(p("pos(v, 'P') & P(v)"), "P", true, fresh),
                  Error);
}

TEST_CASE("alpha equality") {
  CHECK(alpha_equal(p("all X: p(X)"), p("all Y: p(Y)")));
  CHECK(!alpha_equal(p("all X: p(X)"), p("all Y: p(a)")));
  CHECK(alpha_equal(p("all2 P/1: all X: P(X)"), p("all2 R/1: all Y: R(Y)")));
  CHECK(!alpha_equal(p("all2 P/1: P(a)"), p("all2 P/2: P(a, a)")));
  CHECK(alpha_equal(p("ex 'Q': pos(v, 'Q')"), p("ex '~R': pos(v, '~R')")));
  CHECK(!alpha_equal(p("p(X)"), p("p(Y)")));  // free variables stay rigid
}

TEST_CASE("occurrence checks respect binders") {
  CHECK(pred_occurs(p("p(a) & q(b)"), "p"));
  CHECK(pred_occurs(p("pos(v, '~p')"), "p"));
  CHECK(!pred_occurs(p("all2 p/1: p(a)"), "p"));
  CHECK(!pred_occurs(p("ex 'p': pos(v, 'p')"), "p"));
  CHECK(pred_occurs(p("ex 'p': pos(v, '~p')"), "p"));
  CHECK(quoted_occurs(p("pos(v, 'p')"), "p"));
  CHECK(!quoted_occurs(p("p(a)"), "p"));
}

TEST_CASE("first-occurrence predicate listing") {
  auto names = free_preds_of_arity(p("q(a, b) & p(a, b) & (all2 z/2: z(a, b)) & q(b, a)"), 2);
  REQUIRE(names.size() == 2);
  CHECK(names[0] == "q");
  CHECK(names[1] == "p");
}

TEST_CASE("ascii printing round-trips random formulas") {
  Gen gen(20240817);
  for (int i = 0; i < 500; ++i) {
    FormulaPtr f = gen.formula(4);
    std::string s = print_formula(f);
    CAPTURE(s);
    // the modal entry point reads the whole grammar
    FormulaPtr g = parse_modal_formula(s);
    CHECK(formula_equal(f, g));
    CHECK(print_formula(g) == s);
  }
}

TEST_CASE("display styles") {
  FormulaPtr f = p("all X: (pos(v, '~g') -> ~(X = a | false))");
  CHECK(print_formula(f, Style::Unicode) ==
        "∀X: pos(v, ⟨¬g⟩) → ¬(X = a ∨ ⊥)");
  CHECK(print_formula(p("a != b & true"), Style::Unicode) == "a ≠ b ∧ ⊤");
  std::string lx = print_formula(p("all2 Q/2: Q(x_1, y)"), Style::Latex);
  CHECK(lx.find("\\forall Q/2") != std::string::npos);
  CHECK(lx.find("x\\_1") != std::string::npos);
}

TEST_CASE("definition stanzas parse") {
  ParsedDef d = parse_def(
      "def ax_1_lr(V, P) := world(V) -> (pos(V, N1) -> ~pos(V, P1)) "
      "where N1 = quote_neg(P), P1 = quote(P).");
  CHECK(d.name == "ax_1_lr");
  REQUIRE(d.params.size() == 2);
  CHECK(d.params[1] == "P");
  REQUIRE(d.wheres.size() == 2);
  CHECK(d.wheres[0].kind == ParsedDef::Where::K::QuoteNeg);
  CHECK(d.wheres[0].param == "P");
  CHECK(d.wheres[1].kind == ParsedDef::Where::K::Quote);
  CHECK(d.body->kind == FKind::Implies);

  auto defs = parse_kb_text(
      "% two definitions\n"
      "def a := p & q.\n"
      "def b(X) := a -> r(X).\n");
  CHECK(defs.size() == 2);
  CHECK_THROWS_AS(parse_def("def Bad := p."), Error);
  CHECK_THROWS_AS(parse_def("def a(x) := p."), Error);
  CHECK_THROWS_AS(parse_def("def a := p"), Error);  // missing final dot
}
