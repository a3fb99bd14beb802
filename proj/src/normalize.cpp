#include "normalize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "printer.hpp"

namespace lwb {

namespace {

std::vector<FormulaPtr> flat(FKind kind, std::vector<FormulaPtr> kids) {
  std::vector<FormulaPtr> out;
  for (auto& k : kids) {
    if (k->kind == kind)
      out.insert(out.end(), k->kids.begin(), k->kids.end());
    else
      out.push_back(k);
  }
  return out;
}

FormulaPtr nnf(const FormulaPtr& f, bool pos);

FormulaPtr nnf_nary(FKind kind, const std::vector<FormulaPtr>& kids,
                    bool pos) {
  std::vector<FormulaPtr> out;
  out.reserve(kids.size());
  for (auto& k : kids) out.push_back(nnf(k, pos));
  bool as_and = (kind == FKind::And) == pos;
  out = flat(as_and ? FKind::And : FKind::Or, std::move(out));
  return as_and ? mk_and(std::move(out)) : mk_or(std::move(out));
}

FormulaPtr nnf(const FormulaPtr& f, bool pos) {
  switch (f->kind) {
    case FKind::Truth:
      return pos ? f_true() : f_false();
    case FKind::Falsity:
      return pos ? f_false() : f_true();
    case FKind::Atom:
    case FKind::Eq:
      return pos ? f : mk_not(f);
    case FKind::Not:
      return nnf(f->kids[0], !pos);
    case FKind::And:
    case FKind::Or:
      return nnf_nary(f->kind, f->kids, pos);
    case FKind::Implies: {
      if (pos) {
        auto out = flat(FKind::Or, {nnf(f->kids[0], false), nnf(f->kids[1], true)});
        return mk_or(std::move(out));
      }
      auto out = flat(FKind::And, {nnf(f->kids[0], true), nnf(f->kids[1], false)});
      return mk_and(std::move(out));
    }
    case FKind::Iff: {
      const FormulaPtr& a = f->kids[0];
      const FormulaPtr& b = f->kids[1];
      if (pos) {
        // both implications
        FormulaPtr lr = mk_or(flat(FKind::Or, {nnf(a, false), nnf(b, true)}));
        FormulaPtr rl = mk_or(flat(FKind::Or, {nnf(b, false), nnf(a, true)}));
        return mk_and(flat(FKind::And, {lr, rl}));
      }
      FormulaPtr l = mk_and(flat(FKind::And, {nnf(a, true), nnf(b, false)}));
      FormulaPtr r = mk_and(flat(FKind::And, {nnf(b, true), nnf(a, false)}));
      return mk_or(flat(FKind::Or, {l, r}));
    }
    case FKind::ForallInd:
      return pos ? mk_forall(f->var, nnf(f->kids[0], true))
                 : mk_exists(f->var, nnf(f->kids[0], false));
    case FKind::ExistsInd:
      return pos ? mk_exists(f->var, nnf(f->kids[0], true))
                 : mk_forall(f->var, nnf(f->kids[0], false));
    case FKind::ForallPred:
      return pos ? mk_forall_pred(f->name, f->pred_arity, nnf(f->kids[0], true))
                 : mk_exists_pred(f->name, f->pred_arity, nnf(f->kids[0], false));
    case FKind::ExistsPred:
      return pos ? mk_exists_pred(f->name, f->pred_arity, nnf(f->kids[0], true))
                 : mk_forall_pred(f->name, f->pred_arity, nnf(f->kids[0], false));
    case FKind::MacroCall:
      fail(Err::InvalidArg, "expand calls before normalization");
    case FKind::Box:
    case FKind::Dia:
      fail(Err::Unsupported, "translate modal operators before normalization");
  }
  fail(Err::Internal, "unhandled formula kind");
}

}  // namespace

FormulaPtr to_nnf(const FormulaPtr& f) { return nnf(f, true); }

namespace {

struct Skolemizer {
  SkolemTrace* trace = nullptr;
  int* counter = nullptr;
  int local = 0;
  std::vector<VarKey> univ{};
  Fresh fresh{};
  Fresh rename{};

  int& cnt() { return counter ? *counter : local; }

  FormulaPtr go(const FormulaPtr& f) {
    switch (f->kind) {
      case FKind::Atom:
      case FKind::Eq:
      case FKind::Not:
      case FKind::Truth:
      case FKind::Falsity:
        return f;
      case FKind::And:
      case FKind::Or: {
        std::vector<FormulaPtr> kids;
        kids.reserve(f->kids.size());
        for (auto& k : f->kids) kids.push_back(go(k));
        return f->kind == FKind::And ? mk_and(std::move(kids))
                                     : mk_or(std::move(kids));
      }
      case FKind::ForallInd: {
        VarKey v = f->var;
        FormulaPtr body = f->kids[0];
        if (std::find(univ.begin(), univ.end(), v) != univ.end()) {
          // shadowed name: rename apart so Skolem argument lists stay exact
          std::string nn = fresh_name(body);
          Subst s;
          s.var_map[v] = mk_var(nn);
          body = substitute(body, s, fresh);
          v = VarKey{nn, Quote::None};
        }
        univ.push_back(v);
        FormulaPtr out = go(body);
        univ.pop_back();
        return mk_forall(v, out);
      }
      case FKind::ExistsInd: {
        Signature sig = free_symbols(f->kids[0]);
        std::vector<TermPtr> args;
        for (auto& u : univ)
          if (sig.free_vars.count(u)) args.push_back(mk_var(u));
        std::string name = "sk" + std::to_string(cnt()++);
        TermPtr t = args.empty() ? mk_const(name) : mk_app(name, args);
        if (trace)
          trace->entries.push_back({name, (int)args.size(), f->var});
        Subst s;
        s.var_map[f->var] = t;
        return go(substitute(f->kids[0], s, fresh));
      }
      default:
        fail(Err::InvalidArg,
             "skolemization expects negation normal form without predicate "
             "quantifiers or modal operators");
    }
  }

  std::string fresh_name(const FormulaPtr& body) {
    std::set<std::string> taken;
    for (auto& u : univ) taken.insert(u.base);
    Signature sig = free_symbols(body);
    for (auto& v : sig.free_vars) taken.insert(v.base);
    std::string nn;
    do {
      nn = rename.next("_R");
    } while (taken.count(nn));
    return nn;
  }
};

}  // namespace

FormulaPtr skolemize(const FormulaPtr& nnf_formula, SkolemTrace* trace,
                     int* counter) {
  Skolemizer sk{trace, counter};
  return sk.go(nnf_formula);
}

namespace {

TermPtr clause_term(const TermPtr& t, const std::map<VarKey, TermPtr>& env) {
  if (auto k = term_var_key(*t)) {
    auto it = env.find(*k);
    if (it != env.end()) return it->second;
    return t;
  }
  if (t->kind == TermKind::App) {
    std::vector<TermPtr> args;
    args.reserve(t->args.size());
    for (auto& a : t->args) args.push_back(clause_term(a, env));
    return mk_app(t->name, std::move(args));
  }
  return t;
}

bool literal_equal(const Literal& a, const Literal& b) {
  if (a.neg != b.neg || a.is_eq != b.is_eq || a.pred != b.pred ||
      a.args.size() != b.args.size())
    return false;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (!term_equal(a.args[i], b.args[i])) return false;
  return true;
}

bool atoms_equal(const Literal& a, const Literal& b) {
  Literal x = a, y = b;
  x.neg = y.neg = false;
  return literal_equal(x, y);
}

struct Clausifier {
  Fresh fresh{};
  std::set<std::string> in_scope;
  std::map<VarKey, TermPtr> env;

  Literal literal(const FormulaPtr& f, bool neg) {
    Literal l;
    l.neg = neg;
    if (f->kind == FKind::Eq) {
      l.is_eq = true;
      l.args = {clause_term(f->args[0], env), clause_term(f->args[1], env)};
      return l;
    }
    if (f->kind != FKind::Atom)
      fail(Err::InvalidArg, "clausification expects a skolemized NNF");
    l.pred = f->name;
    l.args.reserve(f->args.size());
    for (auto& a : f->args) l.args.push_back(clause_term(a, env));
    return l;
  }

  std::vector<Clause> go(const FormulaPtr& f) {
    switch (f->kind) {
      case FKind::Truth:
        return {};
      case FKind::Falsity:
        return {Clause{}};
      case FKind::Atom:
      case FKind::Eq:
        return {Clause{{literal(f, false)}}};
      case FKind::Not:
        return {Clause{{literal(f->kids[0], true)}}};
      case FKind::And: {
        std::vector<Clause> out;
        for (auto& k : f->kids) {
          auto cs = go(k);
          out.insert(out.end(), cs.begin(), cs.end());
        }
        return out;
      }
      case FKind::Or: {
        std::vector<Clause> acc{Clause{}};
        for (auto& k : f->kids) {
          auto cs = go(k);
          if (cs.empty()) return {};  // a true disjunct
          std::vector<Clause> next;
          next.reserve(acc.size() * cs.size());
          for (auto& a : acc)
            for (auto& c : cs) {
              Clause merged = a;
              merged.lits.insert(merged.lits.end(), c.lits.begin(),
                                 c.lits.end());
              next.push_back(std::move(merged));
            }
          acc = std::move(next);
        }
        return acc;
      }
      case FKind::ForallInd: {
        // every binder occurrence gets a name never used before: scopes of
        // distinct binders can meet in one clause after distribution
        std::string name = f->var.base;
        if (f->var.quote != Quote::None || in_scope.count(name)) {
          do {
            name = fresh.next("_V");
          } while (in_scope.count(name));
        }
        in_scope.insert(name);
        auto saved = env.find(f->var);
        TermPtr old = saved == env.end() ? nullptr : saved->second;
        env[f->var] = mk_var(name);
        auto out = go(f->kids[0]);
        if (old)
          env[f->var] = old;
        else
          env.erase(f->var);
        return out;
      }
      default:
        fail(Err::InvalidArg, "clausification expects a skolemized NNF");
    }
  }
};

}  // namespace

ClauseSet clausify(const FormulaPtr& f) {
  Clausifier cl;
  auto raw = cl.go(f);
  ClauseSet out;
  for (auto& c : raw) {
    Clause kept;
    bool taut = false;
    for (auto& l : c.lits) {
      bool dup = false;
      for (auto& k : kept.lits) {
        if (literal_equal(l, k)) dup = true;
        if (atoms_equal(l, k) && l.neg != k.neg) taut = true;
      }
      if (taut) break;
      if (!dup) kept.lits.push_back(l);
    }
    if (!taut) out.clauses.push_back(std::move(kept));
  }
  return out;
}

std::string print_literal(const Literal& l) {
  if (l.is_eq)
    return print_term(l.args[0]) + (l.neg ? " != " : " = ") +
           print_term(l.args[1]);
  std::string s = l.neg ? "~" : "";
  s += l.pred;
  if (!l.args.empty()) {
    s += '(';
    for (size_t i = 0; i < l.args.size(); ++i) {
      if (i) s += ", ";
      s += print_term(l.args[i]);
    }
    s += ')';
  }
  return s;
}

std::string print_clause(const Clause& c) {
  if (c.lits.empty()) return "false";
  std::string s;
  for (size_t i = 0; i < c.lits.size(); ++i) {
    if (i) s += " | ";
    s += print_literal(c.lits[i]);
  }
  return s;
}

namespace {

bool term_has_key(const TermPtr& t, const VarKey& k) {
  if (auto v = term_var_key(*t)) return *v == k;
  for (auto& a : t->args)
    if (term_has_key(a, k)) return true;
  return false;
}

std::vector<FormulaPtr> conjuncts(const FormulaPtr& f) {
  if (f->kind == FKind::And) return f->kids;
  return {f};
}

bool member(const FormulaPtr& f, const std::vector<FormulaPtr>& xs) {
  for (auto& x : xs)
    if (formula_equal(f, x)) return true;
  return false;
}

struct Simplifier {
  Fresh fresh{};

  FormulaPtr subst_one(const FormulaPtr& f, const VarKey& v, const TermPtr& t) {
    Subst s;
    s.var_map[v] = t;
    return substitute(f, s, fresh);
  }

  FormulaPtr snot(const FormulaPtr& a) {
    if (a->kind == FKind::Truth) return f_false();
    if (a->kind == FKind::Falsity) return f_true();
    if (a->kind == FKind::Not) return a->kids[0];
    return mk_not(a);
  }

  FormulaPtr nary(FKind kind, std::vector<FormulaPtr> kids) {
    bool is_and = kind == FKind::And;
    FormulaPtr absorb = is_and ? f_false() : f_true();
    FormulaPtr unit = is_and ? f_true() : f_false();
    kids = flat(kind, std::move(kids));
    std::vector<FormulaPtr> kept;
    for (auto& k : kids) {
      if (formula_equal(k, absorb)) return absorb;
      if (formula_equal(k, unit)) continue;
      if (!member(k, kept)) kept.push_back(k);
    }
    for (auto& a : kept)
      for (auto& b : kept)
        if (formula_equal(a, snot(b))) return absorb;
    // a conjunct absorbs any sibling disjunction containing it (and dually)
    FKind inner = is_and ? FKind::Or : FKind::And;
    std::vector<FormulaPtr> out;
    for (auto& k : kept) {
      bool subsumed = false;
      if (k->kind == inner)
        for (auto& other : kept)
          if (!formula_equal(other, k) && member(other, k->kids))
            subsumed = true;
      if (!subsumed) out.push_back(k);
    }
    return is_and ? mk_and(std::move(out)) : mk_or(std::move(out));
  }

  // x = t or t = x with x not inside t
  TermPtr eq_solves(const FormulaPtr& eq, const VarKey& v) {
    if (eq->kind != FKind::Eq) return nullptr;
    for (int side = 0; side < 2; ++side) {
      const TermPtr& a = eq->args[side];
      const TermPtr& b = eq->args[1 - side];
      auto k = term_var_key(*a);
      if (k && *k == v && !term_has_key(b, v)) return b;
    }
    return nullptr;
  }

  FormulaPtr quantifier(FKind kind, const VarKey& v, const FormulaPtr& body) {
    if (body->kind == FKind::Truth || body->kind == FKind::Falsity)
      return body;
    if (!free_symbols(body).free_vars.count(v)) return body;

    if (kind == FKind::ForallInd && body->kind == FKind::Implies) {
      // all X: (... & X = t & ... -> c)  becomes  (... & ...)[t/X] -> c[t/X]
      auto ante = conjuncts(body->kids[0]);
      for (size_t i = 0; i < ante.size(); ++i) {
        if (TermPtr t = eq_solves(ante[i], v)) {
          auto rest = conjunct_copy(ante, i);
          FormulaPtr g =
              rest.empty()
                  ? body->kids[1]
                  : mk_implies(mk_and(std::move(rest)), body->kids[1]);
          return subst_one(g, v, t);
        }
      }
    }
    if (kind == FKind::ForallInd && body->kind == FKind::Or) {
      // all X: (X != t | ...) becomes (...)[t/X]
      for (size_t i = 0; i < body->kids.size(); ++i) {
        const FormulaPtr& k = body->kids[i];
        if (k->kind != FKind::Not) continue;
        if (TermPtr t = eq_solves(k->kids[0], v)) {
          std::vector<FormulaPtr> rest;
          for (size_t j = 0; j < body->kids.size(); ++j)
            if (j != i) rest.push_back(body->kids[j]);
          return subst_one(mk_or(std::move(rest)), v, t);
        }
      }
    }
    if (kind == FKind::ExistsInd) {
      // ex X: (... & X = t & ...) becomes (... & ...)[t/X]
      auto parts = conjuncts(body);
      for (size_t i = 0; i < parts.size(); ++i) {
        if (TermPtr t = eq_solves(parts[i], v)) {
          std::vector<FormulaPtr> rest;
          for (size_t j = 0; j < parts.size(); ++j)
            if (j != i) rest.push_back(parts[j]);
          return subst_one(mk_and(std::move(rest)), v, t);
        }
      }
    }
    return kind == FKind::ForallInd ? mk_forall(v, body) : mk_exists(v, body);
  }

  static std::vector<FormulaPtr> conjunct_copy(
      const std::vector<FormulaPtr>& xs, size_t skip) {
    std::vector<FormulaPtr> out;
    for (size_t j = 0; j < xs.size(); ++j)
      if (j != skip) out.push_back(xs[j]);
    return out;
  }

  FormulaPtr go(const FormulaPtr& f) {
    switch (f->kind) {
      case FKind::Atom:
      case FKind::MacroCall:
      case FKind::Truth:
      case FKind::Falsity:
        return f;
      case FKind::Eq:
        return term_equal(f->args[0], f->args[1]) ? f_true() : f;
      case FKind::Not:
        return snot(go(f->kids[0]));
      case FKind::And:
      case FKind::Or: {
        std::vector<FormulaPtr> kids;
        kids.reserve(f->kids.size());
        for (auto& k : f->kids) kids.push_back(go(k));
        return nary(f->kind, std::move(kids));
      }
      case FKind::Implies: {
        FormulaPtr a = go(f->kids[0]);
        FormulaPtr b = go(f->kids[1]);
        if (a->kind == FKind::Falsity || b->kind == FKind::Truth)
          return f_true();
        if (a->kind == FKind::Truth) return b;
        if (b->kind == FKind::Falsity) return snot(a);
        if (formula_equal(a, b)) return f_true();
        auto bc = conjuncts(b);
        auto ac = conjuncts(a);
        bool all_in = true;
        for (auto& c : bc)
          if (!member(c, ac)) all_in = false;
        if (all_in) return f_true();
        return mk_implies(a, b);
      }
      case FKind::Iff: {
        FormulaPtr a = go(f->kids[0]);
        FormulaPtr b = go(f->kids[1]);
        if (a->kind == FKind::Truth) return b;
        if (b->kind == FKind::Truth) return a;
        if (a->kind == FKind::Falsity) return snot(b);
        if (b->kind == FKind::Falsity) return snot(a);
        if (formula_equal(a, b)) return f_true();
        return mk_iff(a, b);
      }
      case FKind::ForallInd:
      case FKind::ExistsInd:
        return quantifier(f->kind, f->var, go(f->kids[0]));
      case FKind::ForallPred:
      case FKind::ExistsPred: {
        FormulaPtr body = go(f->kids[0]);
        if (body->kind == FKind::Truth || body->kind == FKind::Falsity)
          return body;
        if (!pred_occurs(body, f->name) && !quoted_occurs(body, f->name))
          return body;
        return f->kind == FKind::ForallPred
                   ? mk_forall_pred(f->name, f->pred_arity, body)
                   : mk_exists_pred(f->name, f->pred_arity, body);
      }
      case FKind::Box:
        return mk_box(go(f->kids[0]));
      case FKind::Dia:
        return mk_dia(go(f->kids[0]));
    }
    fail(Err::Internal, "unhandled formula kind");
  }
};

}  // namespace

FormulaPtr simplify(const FormulaPtr& f) {
  Simplifier s;
  FormulaPtr cur = f;
  for (int i = 0; i < 100; ++i) {
    FormulaPtr next = s.go(cur);
    if (formula_equal(next, cur)) return cur;
    cur = next;
  }
  return cur;
}

namespace {

// first-occurrence order of trace symbols, pre-order, arguments left first
void occurrence_scan_term(const TermPtr& t,
                          const std::set<std::string>& names,
                          std::vector<std::string>& order,
                          std::set<std::string>& seen) {
  if ((t->kind == TermKind::Const || t->kind == TermKind::App) &&
      names.count(t->name) && seen.insert(t->name).second)
    order.push_back(t->name);
  for (auto& a : t->args) occurrence_scan_term(a, names, order, seen);
}

void occurrence_scan(const FormulaPtr& f, const std::set<std::string>& names,
                     std::vector<std::string>& order,
                     std::set<std::string>& seen) {
  for (auto& a : f->args) occurrence_scan_term(a, names, order, seen);
  for (auto& k : f->kids) occurrence_scan(k, names, order, seen);
}

// all argument tuples a Skolem function occurs with
void tuples_of(const TermPtr& t, const std::string& name,
               std::vector<std::vector<TermPtr>>& out) {
  if (t->kind == TermKind::App && t->name == name) out.push_back(t->args);
  for (auto& a : t->args) tuples_of(a, name, out);
}

void tuples_of(const FormulaPtr& f, const std::string& name,
               std::vector<std::vector<TermPtr>>& out) {
  for (auto& a : f->args) tuples_of(a, name, out);
  for (auto& k : f->kids) tuples_of(k, name, out);
}

bool term_mentions_symbol(const TermPtr& t, const std::string& name) {
  if ((t->kind == TermKind::Const || t->kind == TermKind::App) &&
      t->name == name)
    return true;
  for (auto& a : t->args)
    if (term_mentions_symbol(a, name)) return true;
  return false;
}

bool mentions_symbol(const FormulaPtr& f, const std::string& name) {
  for (auto& a : f->args)
    if (term_mentions_symbol(a, name)) return true;
  for (auto& k : f->kids)
    if (mentions_symbol(k, name)) return true;
  return false;
}

TermPtr replace_symbol_term(const TermPtr& t, const std::string& name,
                            const TermPtr& repl) {
  if ((t->kind == TermKind::Const || t->kind == TermKind::App) &&
      t->name == name)
    return repl;
  if (t->kind == TermKind::App) {
    std::vector<TermPtr> args;
    args.reserve(t->args.size());
    for (auto& a : t->args) args.push_back(replace_symbol_term(a, name, repl));
    return mk_app(t->name, std::move(args));
  }
  return t;
}

FormulaPtr replace_symbol(const FormulaPtr& f, const std::string& name,
                          const TermPtr& repl) {
  auto g = std::make_shared<Formula>(*f);
  auto& m = const_cast<Formula&>(*g);
  for (auto& a : m.args) a = replace_symbol_term(a, name, repl);
  for (auto& k : m.kids) k = replace_symbol(k, name, repl);
  return g;
}

struct PrettyNames {
  std::set<std::string> taken;
  int round = 0;
  size_t idx = 0;
  static constexpr const char* pool[6] = {"X", "Y", "Z", "U", "V", "W"};

  explicit PrettyNames(const FormulaPtr& f) {
    std::function<void(const FormulaPtr&)> walk = [&](const FormulaPtr& g) {
      taken.insert(g->name);
      taken.insert(g->var.base);
      std::function<void(const TermPtr&)> wt = [&](const TermPtr& t) {
        taken.insert(t->name);
        for (auto& a : t->args) wt(a);
      };
      for (auto& a : g->args) wt(a);
      for (auto& k : g->kids) walk(k);
    };
    walk(f);
  }

  std::string next() {
    for (;;) {
      std::string cand = pool[idx];
      if (round > 0) cand += std::to_string(round);
      if (++idx == 6) {
        idx = 0;
        ++round;
      }
      if (taken.insert(cand).second) return cand;
    }
  }
};

}  // namespace

UnskolemResult unskolemize(const FormulaPtr& f, const SkolemTrace& trace) {
  auto failed = [&](std::string why) {
    return UnskolemResult{f, false, std::move(why)};
  };

  std::set<std::string> names;
  std::map<std::string, int> arity;
  for (auto& e : trace.entries) {
    if (!mentions_symbol(f, e.name)) continue;
    names.insert(e.name);
    arity[e.name] = e.arity;
  }
  if (names.empty()) return {f, true, {}};

  std::vector<std::string> order;
  std::set<std::string> seen;
  occurrence_scan(f, names, order, seen);

  PrettyNames pretty(f);
  FormulaPtr cur = f;

  // constants first, in occurrence order; each later wraps further out, so
  // walk in reverse to leave the first-occurring one outermost
  std::vector<std::pair<std::string, std::string>> const_vars;  // sym, var
  for (auto& sym : order)
    if (arity[sym] == 0) const_vars.push_back({sym, pretty.next()});
  for (auto& [sym, var] : const_vars)
    cur = replace_symbol(cur, sym, mk_var(var));
  for (auto it = const_vars.rbegin(); it != const_vars.rend(); ++it)
    cur = mk_exists(VarKey{it->second, Quote::None}, cur);

  // functions: one identical tuple of distinct variables, quantifier placed
  // once every tuple variable is universally bound
  for (auto& sym : order) {
    int k = arity[sym];
    if (k == 0) continue;
    std::vector<std::vector<TermPtr>> tuples;
    tuples_of(cur, sym, tuples);
    std::vector<VarKey> tuple;
    for (auto& t : tuples[0]) {
      auto vk = term_var_key(*t);
      if (!vk)
        return failed("argument of " + sym + " is not a variable");
      if (std::find(tuple.begin(), tuple.end(), *vk) != tuple.end())
        return failed("repeated variable under " + sym);
      tuple.push_back(*vk);
    }
    for (auto& t : tuples)
      if (t.size() != tuple.size() ||
          ![&] {
            for (size_t i = 0; i < t.size(); ++i) {
              auto vk = term_var_key(*t[i]);
              if (!vk || !(*vk == tuple[i])) return false;
            }
            return true;
          }())
        return failed(sym + " occurs with differing argument tuples");

    std::string var = pretty.next();
    std::set<VarKey> need(tuple.begin(), tuple.end());

    std::function<FormulaPtr(const FormulaPtr&, std::set<VarKey>)> place =
        [&](const FormulaPtr& g, std::set<VarKey> bound) -> FormulaPtr {
      bool covered = true;
      for (auto& v : need)
        if (!bound.count(v)) covered = false;
      if (covered) {
        FormulaPtr repl = replace_symbol(g, sym, mk_var(var));
        return mk_exists(VarKey{var, Quote::None}, repl);
      }
      if (g->kind == FKind::ForallInd) {
        bound.insert(g->var);
        FormulaPtr body = place(g->kids[0], std::move(bound));
        if (!body) return nullptr;
        return mk_forall(g->var, body);
      }
      int holder = -1;
      for (size_t i = 0; i < g->kids.size(); ++i)
        if (mentions_symbol(g->kids[i], sym)) {
          if (holder >= 0) return nullptr;  // split occurrences
          holder = (int)i;
        }
      if (holder < 0) return nullptr;
      auto h = std::make_shared<Formula>(*g);
      auto placed = place(g->kids[holder], std::move(bound));
      if (!placed) return nullptr;
      const_cast<Formula&>(*h).kids[holder] = placed;
      return h;
    };

    FormulaPtr next = place(cur, {});
    if (!next)
      return failed("no position binds every argument of " + sym);
    cur = next;
  }
  return {cur, true, {}};
}

FormulaPtr pretty_rename(const FormulaPtr& f) {
  Signature sig = free_symbols(f);
  std::set<std::string> taken;
  for (auto& v : sig.free_vars) taken.insert(v.base);
  for (auto& [n, a] : sig.pred_vars) {
    (void)a;
    taken.insert(n);
  }
  static constexpr const char* pool[6] = {"X", "Y", "Z", "U", "V", "W"};
  int round = 0;
  size_t idx = 0;
  auto next = [&]() {
    for (;;) {
      std::string cand = pool[idx];
      if (round > 0) cand += std::to_string(round);
      if (++idx == 6) {
        idx = 0;
        ++round;
      }
      if (taken.insert(cand).second) return cand;
    }
  };

  std::map<VarKey, VarKey> env;
  std::function<TermPtr(const TermPtr&)> term = [&](const TermPtr& t) -> TermPtr {
    if (auto k = term_var_key(*t)) {
      auto it = env.find(*k);
      return it == env.end() ? t : mk_var(it->second);
    }
    if (t->kind == TermKind::App) {
      std::vector<TermPtr> args;
      for (auto& a : t->args) args.push_back(term(a));
      return mk_app(t->name, std::move(args));
    }
    return t;
  };
  std::function<FormulaPtr(const FormulaPtr&)> go = [&](const FormulaPtr& g) -> FormulaPtr {
    auto h = std::make_shared<Formula>(*g);
    auto& m = const_cast<Formula&>(*h);
    if (g->kind == FKind::ForallInd || g->kind == FKind::ExistsInd) {
      std::optional<VarKey> saved;
      auto old = env.find(g->var);
      if (old != env.end()) saved = old->second;
      if (g->var.quote == Quote::None) {
        m.var = VarKey{next(), Quote::None};
        env[g->var] = m.var;
      }
      m.kids[0] = go(g->kids[0]);
      if (g->var.quote == Quote::None) {
        if (saved) env[g->var] = *saved;
        else env.erase(g->var);
      }
      return h;
    }
    for (auto& a : m.args) a = term(a);
    for (auto& k : m.kids) k = go(k);
    return h;
  };
  return go(f);
}

}  // namespace lwb
