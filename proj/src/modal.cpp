#include "modal.hpp"

#include <set>
#include <vector>

#include "parser.hpp"

namespace lwb {

namespace {

// W, W2, W3, ... skipping taken names
struct WorldNames {
  std::set<std::string> taken;
  int n = 0;
  VarKey next() {
    for (;;) {
      ++n;
      std::string cand = n == 1 ? "W" : "W" + std::to_string(n);
      if (taken.insert(cand).second) return VarKey{cand, Quote::None};
    }
  }
};

void var_names_of_term(const TermPtr& t, std::set<std::string>& out) {
  out.insert(t->name);
  for (auto& a : t->args) var_names_of_term(a, out);
}

void var_names_of(const FormulaPtr& f, std::set<std::string>& out) {
  if (!f->var.base.empty()) out.insert(f->var.base);
  for (auto& a : f->args) var_names_of_term(a, out);
  for (auto& k : f->kids) var_names_of(k, out);
}

TermPtr modal_term(const TermPtr& t) {
  if (t->kind == TermKind::App)
    fail(Err::Unsupported, "function symbols have no modal reading");
  if (t->kind == TermKind::Quoted)
    fail(Err::Unsupported, "quoted terms have no modal reading");
  return t;
}

struct St {
  WorldNames names;

  FormulaPtr go(const FormulaPtr& f, const TermPtr& w) {
    switch (f->kind) {
      case FKind::Truth:
      case FKind::Falsity:
        return f;
      case FKind::Atom: {
        std::vector<TermPtr> args{w};
        for (auto& t : f->args) args.push_back(modal_term(t));
        return mk_atom(f->name, std::move(args));
      }
      case FKind::Not:
        return mk_not(go(f->kids[0], w));
      case FKind::And:
      case FKind::Or: {
        std::vector<FormulaPtr> kids;
        kids.reserve(f->kids.size());
        for (auto& k : f->kids) kids.push_back(go(k, w));
        return f->kind == FKind::And ? mk_and(std::move(kids))
                                     : mk_or(std::move(kids));
      }
      case FKind::Implies:
        return mk_implies(go(f->kids[0], w), go(f->kids[1], w));
      case FKind::Iff:
        return mk_iff(go(f->kids[0], w), go(f->kids[1], w));
      case FKind::ForallInd:
      case FKind::ExistsInd: {
        if (f->var.quote != Quote::None)
          fail(Err::Unsupported, "quoted binders have no modal reading");
        FormulaPtr guard = mk_atom("e", {w, mk_var(f->var)});
        FormulaPtr body = go(f->kids[0], w);
        return f->kind == FKind::ForallInd
                   ? mk_forall(f->var, mk_implies(guard, body))
                   : mk_exists(f->var, mk_and({guard, body}));
      }
      case FKind::Box:
      case FKind::Dia: {
        VarKey wk = names.next();
        TermPtr w2 = mk_var(wk);
        std::vector<FormulaPtr> guard{mk_atom("r", {w, w2})};
        // the free individuals of the scoped formula exist in the new world
        for (auto& v : free_symbols(f->kids[0]).free_vars) {
          if (v.quote != Quote::None)
            fail(Err::Unsupported, "quoted variables have no modal reading");
          guard.push_back(mk_atom("e", {w2, mk_var(v)}));
        }
        FormulaPtr body = go(f->kids[0], w2);
        if (f->kind == FKind::Dia) {
          guard.push_back(body);
          return mk_exists(wk, mk_and(std::move(guard)));
        }
        return mk_forall(wk, mk_implies(mk_and(std::move(guard)), body));
      }
      default:
        fail(Err::Unsupported, "this construct has no modal reading");
    }
  }
};

}  // namespace

FormulaPtr standard_translate(const FormulaPtr& m, const TermPtr& world) {
  St st;
  var_names_of(m, st.names.taken);
  var_names_of_term(world, st.names.taken);
  return st.go(m, world);
}

FormulaPtr frame_condition(const std::string& name) {
  if (name == "reflexive") return parse_formula("all X: r(X, X)");
  if (name == "symmetric")
    return parse_formula("all X: all Y: (r(X, Y) -> r(Y, X))");
  if (name == "euclidean")
    return parse_formula("all X: all Y: all Z: (r(X, Y) & r(X, Z) -> r(Z, Y))");
  if (name == "frame_cond_simp")
    return parse_formula(
        "all X: all Y: all Z: (r(X, Y) & r(X, Z) & Y != X & Y != Z -> "
        "r(Y, X) | r(Y, Z))");
  if (name == "r_world_1")
    return parse_formula("all V: all W: (r(V, W) -> world(W))");
  fail(Err::InvalidArg, "unknown frame condition " + name);
}

FormulaPtr domain_increase() {
  return parse_formula(
      "all V: all W: (r(V, W) -> all X: (e(V, X) -> e(W, X)))");
}

FormulaPtr domain_decrease() {
  return parse_formula(
      "all V: all W: (r(V, W) -> all X: (e(W, X) -> e(V, X)))");
}

}  // namespace lwb
