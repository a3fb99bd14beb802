#include <random>

#include "../src/model.hpp"
#include "../src/parser.hpp"
#include "../src/tptp.hpp"
#include "../vendor/doctest.h"
#include "tptp_reader.hpp"

using namespace lwb;
using lwb::tptp_test::read_fof;

namespace {

FormulaPtr p(const std::string& s) { return parse_formula(s); }

FormulaPtr closure(const FormulaPtr& f) {
  Signature sig = free_symbols(f);
  FormulaPtr g = f;
  for (auto it = sig.free_vars.rbegin(); it != sig.free_vars.rend(); ++it)
    g = mk_forall(*it, g);
  return g;
}

bool equivalent(const FormulaPtr& a, const FormulaPtr& b) {
  return !find_countermodel(mk_iff(a, b), 2).has_value();
}

// Plain first-order generator: no quoted terms, no predicate quantifiers, so
// reading the export back yields a formula over the same signature.
struct FoGen {
  std::mt19937 rng;
  std::vector<std::string> bound;

  explicit FoGen(uint32_t seed) : rng(seed) {}

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  TermPtr term() {
    if (!bound.empty() && pick(3) != 0) return mk_var(bound[pick((int)bound.size())]);
    return mk_const(pick(2) ? "a" : "b");
  }

  FormulaPtr gen(int depth) {
    if (depth == 0) {
      switch (pick(6)) {
        case 0: return mk_atom("p", {term()});
        case 1: return mk_atom("q", {term(), term()});
        case 2: return mk_atom("s", {});
        case 3: return mk_eq(term(), term());
        case 4: return f_true();
        default: return mk_atom("p", {term()});
      }
    }
    switch (pick(8)) {
      case 0: return mk_not(gen(depth - 1));
      case 1: return mk_and({gen(depth - 1), gen(depth - 1)});
      case 2: return mk_or({gen(depth - 1), gen(depth - 1)});
      case 3: return mk_implies(gen(depth - 1), gen(depth - 1));
      case 4: return mk_iff(gen(depth - 1), gen(depth - 1));
      case 5:
      case 6: {
        std::string v = std::string(1, "XYZUVW"[pick(6)]);
        bound.push_back(v);
        FormulaPtr body = gen(depth - 1);
        bound.pop_back();
        return pick(2) ? mk_forall(VarKey{v, Quote::None}, body)
                       : mk_exists(VarKey{v, Quote::None}, body);
      }
      default: return gen(depth - 1);
    }
  }
};

}  // namespace

TEST_CASE("exporter emits annotated formulas with closed variables") {
  CHECK(export_tptp(p("p(c)"), TptpRole::Conjecture) == "fof(c1, conjecture, p(c)).");
  CHECK(export_tptp(p("r(X, Y)"), TptpRole::Axiom) ==
        "fof(a1, axiom, ! [X, Y] : r(X, Y)).");
  CHECK(export_tptp(p("s"), TptpRole::Axiom, "ax_s") == "fof(ax_s, axiom, s).");
  CHECK(export_tptp(p("p -> true"), TptpRole::Conjecture) ==
        "fof(c1, conjecture, p => $true).");
  CHECK(export_tptp(p("~(p & q) | r <-> s & false"), TptpRole::Conjecture) ==
        "fof(c1, conjecture, (~ (p & q) | r) <=> (s & $false)).");
  CHECK(export_tptp(p("a = b & a != c"), TptpRole::Conjecture) ==
        "fof(c1, conjecture, a = b & a != c).");
  CHECK(export_tptp(p("all X: all Y: ex Z: q(X, Z)"), TptpRole::Conjecture) ==
        "fof(c1, conjecture, ! [X, Y] : (? [Z] : q(X, Z))).");
}

TEST_CASE("quoted constants and generated variables are renamed apart") {
  CHECK(export_tptp(p("pos(v, 'g') & pos(v, '~g')"), TptpRole::Conjecture) ==
        "fof(c1, conjecture, pos(v, q_g) & pos(v, qn_g)).");
  // An existing constant takes the preferred name first.
  CHECK(export_tptp(p("pos(q_g, 'g')"), TptpRole::Conjecture) ==
        "fof(c1, conjecture, pos(q_g, q_g_2)).");
  // A quoted term bound by an individual quantifier is a variable.
  CHECK(export_tptp(p("ex 'Q': pos(v, 'Q')"), TptpRole::Conjecture) ==
        "fof(c1, conjecture, ? [Q_Q] : pos(v, Q_Q)).");
  CHECK(export_tptp(p("ex '~Q': pos(v, '~Q')"), TptpRole::Conjecture) ==
        "fof(c1, conjecture, ? [QN_Q] : pos(v, QN_Q)).");
  // Internally generated variable names fall outside FOF's upper words.
  FormulaPtr f = mk_forall(VarKey{"_R0", Quote::None},
                           mk_atom("p", {mk_var("_R0")}));
  CHECK(export_tptp(f, TptpRole::Axiom) == "fof(a1, axiom, ! [V_R0] : p(V_R0)).");
}

TEST_CASE("constructs without a first-order reading are rejected") {
  CHECK_THROWS_AS((void)export_tptp(p("all2 P/1: P(c)"), TptpRole::Axiom), Error);
  CHECK_THROWS_AS((void)export_tptp(p("P(c)"), TptpRole::Axiom), Error);
  CHECK_THROWS_AS((void)export_tptp(mk_box(p("p")), TptpRole::Axiom), Error);
  CHECK_THROWS_AS((void)export_tptp(mk_macro_call("m", {}), TptpRole::Axiom), Error);
}

TEST_CASE("reader inverts the exporter on a proof-scale formula") {
  FormulaPtr f = p(
      "(all X: all Y: (r(X, Y) -> r(Y, X)))"
      " | (all X: all Y: all Z: (r(X, Y) & r(X, Z) -> r(Z, Y)))"
      " -> (((all V: all W: (r(V, W) -> world(W)))"
      "      & (all V2: (world(V2) -> ((ex X: (e(V2, X) & g(V2, X)))"
      "          -> all W: (r(V2, W) -> ex Y: (e(W, Y) & g(W, Y))))))"
      "      & (world(v) -> ex W: (r(v, W) & ex X: (e(W, X) & g(W, X)))))"
      "     -> (world(v) -> all W: (r(v, W) -> ex Y: (e(W, Y) & g(W, Y)))))");
  std::string text = export_tptp(f, TptpRole::Conjecture);
  auto line = read_fof(text);
  CHECK(line.name == "c1");
  CHECK(line.role == "conjecture");
  CHECK(equivalent(line.formula, f));
  CHECK(export_tptp(line.formula, TptpRole::Conjecture) == text);
}

TEST_CASE("export and read back preserves randomly generated formulas") {
  FoGen gen(20240821);
  for (int i = 0; i < 120; ++i) {
    FormulaPtr f = gen.gen(2 + gen.pick(2));
    std::string text = export_tptp(f, TptpRole::Axiom, "rt");
    auto line = read_fof(text);
    REQUIRE(line.role == "axiom");
    bool same_text = export_tptp(line.formula, TptpRole::Axiom, "rt") == text;
    bool equiv = equivalent(line.formula, closure(f));
    CHECK(same_text);
    CHECK(equiv);
    if (!same_text || !equiv) {
      CAPTURE(text);
      break;
    }
  }
}
