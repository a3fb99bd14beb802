#include "ast.hpp"

#include <algorithm>
#include <functional>

namespace lwb {

void fail(Err code, std::string msg, int line, int col) {
  throw Error(code, std::move(msg), line, col);
}

bool is_upper_ident(std::string_view s) {
  return !s.empty() && ((s[0] >= 'A' && s[0] <= 'Z') || s[0] == '_');
}

TermPtr mk_var(std::string name) {
  return std::make_shared<Term>(TermKind::Var, std::move(name), false,
                                std::vector<TermPtr>{});
}

TermPtr mk_var(const VarKey& key) {
  if (key.quote == Quote::None) return mk_var(key.base);
  return mk_quoted(key.base, key.quote == Quote::Neg);
}

TermPtr mk_const(std::string name) {
  return std::make_shared<Term>(TermKind::Const, std::move(name), false,
                                std::vector<TermPtr>{});
}

TermPtr mk_quoted(std::string base, bool neg) {
  return std::make_shared<Term>(TermKind::Quoted, std::move(base), neg,
                                std::vector<TermPtr>{});
}

TermPtr mk_app(std::string fn, std::vector<TermPtr> args) {
  return std::make_shared<Term>(TermKind::App, std::move(fn), false,
                                std::move(args));
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->name != b->name || a->qneg != b->qneg ||
      a->args.size() != b->args.size())
    return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!term_equal(a->args[i], b->args[i])) return false;
  return true;
}

std::optional<VarKey> term_var_key(const Term& t) {
  if (t.kind == TermKind::Var) return VarKey{t.name, Quote::None};
  if (t.kind == TermKind::Quoted)
    return VarKey{t.name, t.qneg ? Quote::Neg : Quote::Pos};
  return std::nullopt;
}

namespace {

FormulaPtr mk_node(FKind kind) {
  auto f = std::make_shared<Formula>();
  const_cast<Formula&>(*f).kind = kind;
  return f;
}

Formula& mut(FormulaPtr& f) { return const_cast<Formula&>(*f); }

}  // namespace

FormulaPtr mk_atom(std::string pred, std::vector<TermPtr> args) {
  auto f = mk_node(FKind::Atom);
  mut(f).name = std::move(pred);
  mut(f).args = std::move(args);
  return f;
}

FormulaPtr mk_eq(TermPtr lhs, TermPtr rhs) {
  auto f = mk_node(FKind::Eq);
  mut(f).args = {std::move(lhs), std::move(rhs)};
  return f;
}

FormulaPtr mk_not(FormulaPtr g) {
  auto f = mk_node(FKind::Not);
  mut(f).kids = {std::move(g)};
  return f;
}

FormulaPtr mk_and(std::vector<FormulaPtr> kids) {
  if (kids.empty()) return f_true();
  if (kids.size() == 1) return kids[0];
  auto f = mk_node(FKind::And);
  mut(f).kids = std::move(kids);
  return f;
}

FormulaPtr mk_or(std::vector<FormulaPtr> kids) {
  if (kids.empty()) return f_false();
  if (kids.size() == 1) return kids[0];
  auto f = mk_node(FKind::Or);
  mut(f).kids = std::move(kids);
  return f;
}

FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b) {
  auto f = mk_node(FKind::Implies);
  mut(f).kids = {std::move(a), std::move(b)};
  return f;
}

FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b) {
  auto f = mk_node(FKind::Iff);
  mut(f).kids = {std::move(a), std::move(b)};
  return f;
}

FormulaPtr mk_forall(VarKey v, FormulaPtr body) {
  auto f = mk_node(FKind::ForallInd);
  mut(f).var = std::move(v);
  mut(f).kids = {std::move(body)};
  return f;
}

FormulaPtr mk_exists(VarKey v, FormulaPtr body) {
  auto f = mk_node(FKind::ExistsInd);
  mut(f).var = std::move(v);
  mut(f).kids = {std::move(body)};
  return f;
}

FormulaPtr mk_forall_pred(std::string p, int arity, FormulaPtr body) {
  auto f = mk_node(FKind::ForallPred);
  mut(f).name = std::move(p);
  mut(f).pred_arity = arity;
  mut(f).kids = {std::move(body)};
  return f;
}

FormulaPtr mk_exists_pred(std::string p, int arity, FormulaPtr body) {
  auto f = mk_node(FKind::ExistsPred);
  mut(f).name = std::move(p);
  mut(f).pred_arity = arity;
  mut(f).kids = {std::move(body)};
  return f;
}

FormulaPtr mk_macro_call(std::string name, std::vector<TermPtr> args) {
  auto f = mk_node(FKind::MacroCall);
  mut(f).name = std::move(name);
  mut(f).args = std::move(args);
  return f;
}

FormulaPtr mk_box(FormulaPtr g) {
  auto f = mk_node(FKind::Box);
  mut(f).kids = {std::move(g)};
  return f;
}

FormulaPtr mk_dia(FormulaPtr g) {
  auto f = mk_node(FKind::Dia);
  mut(f).kids = {std::move(g)};
  return f;
}

FormulaPtr f_true() {
  static const FormulaPtr t = mk_node(FKind::Truth);
  return t;
}

FormulaPtr f_false() {
  static const FormulaPtr t = mk_node(FKind::Falsity);
  return t;
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->name != b->name ||
      a->pred_arity != b->pred_arity || a->var != b->var ||
      a->args.size() != b->args.size() || a->kids.size() != b->kids.size())
    return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!term_equal(a->args[i], b->args[i])) return false;
  for (size_t i = 0; i < a->kids.size(); ++i)
    if (!formula_equal(a->kids[i], b->kids[i])) return false;
  return true;
}

void Signature::add_pred(const std::string& name, int arity) {
  auto [it, inserted] = preds.emplace(name, arity);
  if (!inserted && it->second != arity)
    fail(Err::Arity, "predicate '" + name + "' used with arities " +
                         std::to_string(it->second) + " and " +
                         std::to_string(arity));
}

void Signature::add_pred_var(const std::string& name, int arity) {
  auto [it, inserted] = pred_vars.emplace(name, arity);
  if (!inserted && it->second != arity)
    fail(Err::Arity, "predicate variable '" + name + "' used with arities " +
                         std::to_string(it->second) + " and " +
                         std::to_string(arity));
}

void Signature::add_func(const std::string& name, int arity) {
  auto [it, inserted] = funcs.emplace(name, arity);
  if (!inserted && it->second != arity)
    fail(Err::Arity, "function '" + name + "' used with arities " +
                         std::to_string(it->second) + " and " +
                         std::to_string(arity));
}

void Signature::merge(const Signature& other) {
  for (auto& [n, a] : other.preds) add_pred(n, a);
  for (auto& [n, a] : other.pred_vars) add_pred_var(n, a);
  for (auto& [n, a] : other.funcs) add_func(n, a);
  consts.insert(other.consts.begin(), other.consts.end());
  quoted.insert(other.quoted.begin(), other.quoted.end());
  free_vars.insert(other.free_vars.begin(), other.free_vars.end());
  has_eq = has_eq || other.has_eq;
  has_pred_quant = has_pred_quant || other.has_pred_quant;
  has_macro_call = has_macro_call || other.has_macro_call;
}

namespace {

struct SigCollector {
  Signature sig;
  // arity of each in-scope bound predicate name, for use-site checks
  std::map<std::string, int> bound_preds;
  std::set<VarKey> bound_vars;

  void term(const TermPtr& t) {
    switch (t->kind) {
      case TermKind::Var:
        if (!bound_vars.count({t->name, Quote::None}))
          sig.free_vars.insert({t->name, Quote::None});
        break;
      case TermKind::Const:
        if (!bound_preds.count(t->name)) sig.consts.insert(t->name);
        break;
      case TermKind::Quoted: {
        VarKey k{t->name, t->qneg ? Quote::Neg : Quote::Pos};
        if (!bound_vars.count(k) && !bound_preds.count(t->name))
          sig.quoted.insert({t->name, t->qneg});
        break;
      }
      case TermKind::App:
        sig.add_func(t->name, (int)t->args.size());
        for (auto& a : t->args) term(a);
        break;
    }
  }

  void formula(const FormulaPtr& f) {
    switch (f->kind) {
      case FKind::Atom: {
        auto it = bound_preds.find(f->name);
        if (it != bound_preds.end()) {
          if (it->second != (int)f->args.size())
            fail(Err::Arity, "predicate '" + f->name + "' bound at arity " +
                                 std::to_string(it->second) +
                                 " applied to " +
                                 std::to_string(f->args.size()) + " arguments");
        } else if (is_upper_ident(f->name)) {
          sig.add_pred_var(f->name, (int)f->args.size());
        } else {
          sig.add_pred(f->name, (int)f->args.size());
        }
        for (auto& a : f->args) term(a);
        break;
      }
      case FKind::Eq:
        sig.has_eq = true;
        term(f->args[0]);
        term(f->args[1]);
        break;
      case FKind::MacroCall:
        sig.has_macro_call = true;
        for (auto& a : f->args) term(a);
        break;
      case FKind::ForallInd:
      case FKind::ExistsInd: {
        bool fresh_bind = bound_vars.insert(f->var).second;
        formula(f->kids[0]);
        if (fresh_bind) bound_vars.erase(f->var);
        break;
      }
      case FKind::ForallPred:
      case FKind::ExistsPred: {
        sig.has_pred_quant = true;
        auto prev = bound_preds.find(f->name);
        int saved = prev == bound_preds.end() ? -1 : prev->second;
        bound_preds[f->name] = f->pred_arity;
        formula(f->kids[0]);
        if (saved < 0)
          bound_preds.erase(f->name);
        else
          bound_preds[f->name] = saved;
        break;
      }
      case FKind::Truth:
      case FKind::Falsity:
        break;
      default:
        for (auto& k : f->kids) formula(k);
        break;
    }
  }
};

}  // namespace

Signature free_symbols(const FormulaPtr& f) {
  SigCollector c;
  c.formula(f);
  return c.sig;
}

namespace {

void term_keys(const TermPtr& t, std::set<VarKey>& out) {
  if (auto k = term_var_key(*t)) {
    out.insert(*k);
    return;
  }
  for (auto& a : t->args) term_keys(a, out);
}

bool term_mentions_name(const TermPtr& t, const std::string& name) {
  if (t->name == name) return true;
  for (auto& a : t->args)
    if (term_mentions_name(a, name)) return true;
  return false;
}

void collect_names(const TermPtr& t, std::set<std::string>& out) {
  out.insert(t->name);
  for (auto& a : t->args) collect_names(a, out);
}

// every identifier appearing anywhere in f, for picking collision-free names
void collect_names(const FormulaPtr& f, std::set<std::string>& out) {
  out.insert(f->name);
  out.insert(f->var.base);
  for (auto& a : f->args) collect_names(a, out);
  for (auto& k : f->kids) collect_names(k, out);
}

struct Substituter {
  Fresh& fresh;

  std::string fresh_for(const FormulaPtr& body, const Subst& s) {
    std::set<std::string> taken;
    collect_names(body, taken);
    for (auto& [k, t] : s.var_map) collect_names(t, taken);
    for (auto& [from, to] : s.pred_map) taken.insert(to);
    std::string name;
    do {
      name = fresh.next();
    } while (taken.count(name));
    return name;
  }

  TermPtr term(const TermPtr& t, const Subst& s) {
    switch (t->kind) {
      case TermKind::Var: {
        auto it = s.var_map.find({t->name, Quote::None});
        if (it != s.var_map.end()) return it->second;
        auto pt = s.pred_map.find(t->name);
        if (pt != s.pred_map.end())
          return is_upper_ident(pt->second) ? mk_var(pt->second)
                                            : mk_const(pt->second);
        return t;
      }
      case TermKind::Quoted: {
        auto it = s.var_map.find({t->name, t->qneg ? Quote::Neg : Quote::Pos});
        if (it != s.var_map.end()) return it->second;
        auto pt = s.pred_map.find(t->name);
        if (pt != s.pred_map.end()) return mk_quoted(pt->second, t->qneg);
        return t;
      }
      case TermKind::Const:
        return t;
      case TermKind::App: {
        std::vector<TermPtr> args;
        args.reserve(t->args.size());
        for (auto& a : t->args) args.push_back(term(a, s));
        return mk_app(t->name, std::move(args));
      }
    }
    return t;
  }

  // Would applying s under a binder of `key` capture anything?
  bool captures_ind(const VarKey& key, const Subst& s) const {
    for (auto& [k, t] : s.var_map) {
      std::set<VarKey> keys;
      term_keys(t, keys);
      if (keys.count(key)) return true;
    }
    for (auto& [from, to] : s.pred_map)
      if (to == key.base) return true;
    return false;
  }

  FormulaPtr ind_binder(const FormulaPtr& f, const Subst& s) {
    Subst inner = s;
    inner.var_map.erase(f->var);
    // A quoted binder over a substituted-away base loses its nominal link;
    // rename it to a plain variable, same for any capture risk.
    bool must_rename =
        (f->var.quote != Quote::None && s.pred_map.count(f->var.base)) ||
        captures_ind(f->var, inner);
    VarKey key = f->var;
    FormulaPtr body = f->kids[0];
    if (must_rename) {
      VarKey nk{fresh_for(body, s), Quote::None};
      Subst ren;
      ren.var_map[key] = mk_var(nk);
      body = formula(body, ren);
      key = nk;
      inner = s;
      inner.var_map.erase(nk);
    }
    body = formula(body, inner);
    return f->kind == FKind::ForallInd ? mk_forall(key, body)
                                       : mk_exists(key, body);
  }

  FormulaPtr pred_binder(const FormulaPtr& f, const Subst& s) {
    Subst inner = s;
    inner.pred_map.erase(f->name);
    for (auto q : {Quote::None, Quote::Pos, Quote::Neg})
      inner.var_map.erase({f->name, q});
    bool must_rename = false;
    for (auto& [from, to] : inner.pred_map)
      if (to == f->name) must_rename = true;
    for (auto& [k, t] : inner.var_map)
      if (term_mentions_name(t, f->name)) must_rename = true;
    std::string name = f->name;
    FormulaPtr body = f->kids[0];
    if (must_rename) {
      std::string nn = fresh_for(body, s);
      Subst ren;
      ren.pred_map[name] = nn;
      body = formula(body, ren);
      name = nn;
    }
    body = formula(body, inner);
    return f->kind == FKind::ForallPred
               ? mk_forall_pred(name, f->pred_arity, body)
               : mk_exists_pred(name, f->pred_arity, body);
  }

  FormulaPtr formula(const FormulaPtr& f, const Subst& s) {
    if (s.var_map.empty() && s.pred_map.empty()) return f;
    switch (f->kind) {
      case FKind::Atom: {
        std::string head = f->name;
        auto pt = s.pred_map.find(head);
        if (pt != s.pred_map.end()) head = pt->second;
        std::vector<TermPtr> args;
        args.reserve(f->args.size());
        for (auto& a : f->args) args.push_back(term(a, s));
        return mk_atom(head, std::move(args));
      }
      case FKind::Eq:
        return mk_eq(term(f->args[0], s), term(f->args[1], s));
      case FKind::MacroCall: {
        std::vector<TermPtr> args;
        args.reserve(f->args.size());
        for (auto& a : f->args) args.push_back(term(a, s));
        return mk_macro_call(f->name, std::move(args));
      }
      case FKind::ForallInd:
      case FKind::ExistsInd:
        return ind_binder(f, s);
      case FKind::ForallPred:
      case FKind::ExistsPred:
        return pred_binder(f, s);
      case FKind::Truth:
      case FKind::Falsity:
        return f;
      default: {
        std::vector<FormulaPtr> kids;
        kids.reserve(f->kids.size());
        for (auto& k : f->kids) kids.push_back(formula(k, s));
        auto g = std::make_shared<Formula>(*f);
        const_cast<Formula&>(*g).kids = std::move(kids);
        return g;
      }
    }
  }
};

}  // namespace

FormulaPtr substitute(const FormulaPtr& f, const Subst& s, Fresh& fresh) {
  Substituter sub{fresh};
  return sub.formula(f, s);
}

namespace {

struct TruthInstantiator {
  const std::string& pvar;
  bool value;
  Fresh& fresh;

  FormulaPtr go(const FormulaPtr& f) {
    switch (f->kind) {
      case FKind::Atom:
        if (f->name == pvar) return value ? f_true() : f_false();
        for (auto& a : f->args) check_term(a);
        return f;
      case FKind::Eq:
        check_term(f->args[0]);
        check_term(f->args[1]);
        return f;
      case FKind::MacroCall:
        for (auto& a : f->args) check_term(a);
        return f;
      case FKind::ForallPred:
      case FKind::ExistsPred: {
        if (f->name == pvar) return f;  // shadowed
        auto body = go(f->kids[0]);
        return f->kind == FKind::ForallPred
                   ? mk_forall_pred(f->name, f->pred_arity, body)
                   : mk_exists_pred(f->name, f->pred_arity, body);
      }
      case FKind::ForallInd:
      case FKind::ExistsInd: {
        VarKey key = f->var;
        FormulaPtr body = f->kids[0];
        if (key.quote != Quote::None && key.base == pvar) {
          std::set<std::string> taken;
          collect_names(body, taken);
          std::string nn;
          do {
            nn = fresh.next();
          } while (taken.count(nn));
          VarKey nk{nn, Quote::None};
          Fresh dummy;
          Subst ren;
          ren.var_map[key] = mk_var(nk);
          body = substitute(body, ren, dummy);
          key = nk;
        }
        body = go(body);
        return f->kind == FKind::ForallInd ? mk_forall(key, body)
                                           : mk_exists(key, body);
      }
      case FKind::Truth:
      case FKind::Falsity:
        return f;
      default: {
        std::vector<FormulaPtr> kids;
        kids.reserve(f->kids.size());
        for (auto& k : f->kids) kids.push_back(go(k));
        auto g = std::make_shared<Formula>(*f);
        const_cast<Formula&>(*g).kids = std::move(kids);
        return g;
      }
    }
  }

  void check_term(const TermPtr& t) const {
    if (t->kind == TermKind::Quoted && t->name == pvar)
      fail(Err::Unsupported,
           "quoted occurrence '" + std::string(t->qneg ? "~" : "") + pvar +
               "' has no truth-constant instance");
    for (auto& a : t->args) check_term(a);
  }
};

}  // namespace

FormulaPtr instantiate_pred_truth(const FormulaPtr& f, const std::string& pvar,
                                  bool value, Fresh& fresh) {
  TruthInstantiator ti{pvar, value, fresh};
  return ti.go(f);
}

namespace {

bool term_pred_occurs(const TermPtr& t, const std::string& name,
                      const std::set<VarKey>& bound_vars) {
  if (t->kind == TermKind::Quoted && t->name == name) {
    VarKey k{t->name, t->qneg ? Quote::Neg : Quote::Pos};
    return !bound_vars.count(k);
  }
  for (auto& a : t->args)
    if (term_pred_occurs(a, name, bound_vars)) return true;
  return false;
}

bool occurs_rec(const FormulaPtr& f, const std::string& name, bool heads,
                bool quotes, std::set<VarKey>& bound_vars) {
  switch (f->kind) {
    case FKind::Atom:
      if (heads && f->name == name) return true;
      if (quotes)
        for (auto& a : f->args)
          if (term_pred_occurs(a, name, bound_vars)) return true;
      return false;
    case FKind::Eq:
    case FKind::MacroCall:
      if (quotes)
        for (auto& a : f->args)
          if (term_pred_occurs(a, name, bound_vars)) return true;
      return false;
    case FKind::ForallPred:
    case FKind::ExistsPred:
      if (f->name == name) return false;  // shadowed
      return occurs_rec(f->kids[0], name, heads, quotes, bound_vars);
    case FKind::ForallInd:
    case FKind::ExistsInd: {
      bool fresh_bind = bound_vars.insert(f->var).second;
      bool r = occurs_rec(f->kids[0], name, heads, quotes, bound_vars);
      if (fresh_bind) bound_vars.erase(f->var);
      return r;
    }
    default:
      for (auto& k : f->kids)
        if (occurs_rec(k, name, heads, quotes, bound_vars)) return true;
      return false;
  }
}

}  // namespace

bool pred_occurs(const FormulaPtr& f, const std::string& name) {
  std::set<VarKey> bv;
  return occurs_rec(f, name, true, true, bv);
}

bool quoted_occurs(const FormulaPtr& f, const std::string& name) {
  std::set<VarKey> bv;
  return occurs_rec(f, name, false, true, bv);
}

std::vector<std::string> free_preds_of_arity(const FormulaPtr& f, int arity) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  std::map<std::string, int> bound;

  std::function<void(const FormulaPtr&)> go = [&](const FormulaPtr& g) {
    switch (g->kind) {
      case FKind::Atom:
        if ((int)g->args.size() == arity && !bound.count(g->name) &&
            !is_upper_ident(g->name) && seen.insert(g->name).second)
          out.push_back(g->name);
        break;
      case FKind::ForallPred:
      case FKind::ExistsPred: {
        auto prev = bound.find(g->name);
        int saved = prev == bound.end() ? -1 : prev->second;
        bound[g->name] = g->pred_arity;
        go(g->kids[0]);
        if (saved < 0)
          bound.erase(g->name);
        else
          bound[g->name] = saved;
        break;
      }
      default:
        for (auto& k : g->kids) go(k);
        break;
    }
  };
  go(f);
  return out;
}

namespace {

struct AlphaCtx {
  std::map<VarKey, int> va, vb;
  std::map<std::string, int> pa, pb;
  int next = 0;
};

bool alpha_term(const TermPtr& a, const TermPtr& b, const AlphaCtx& c) {
  if (a->kind != b->kind) {
    // a bound quoted key renamed to a plain variable stays distinct: kinds
    // must match even for bound occurrences
    return false;
  }
  switch (a->kind) {
    case TermKind::Var:
    case TermKind::Quoted: {
      VarKey ka = *term_var_key(*a), kb = *term_var_key(*b);
      auto ia = c.va.find(ka);
      auto ib = c.vb.find(kb);
      if ((ia != c.va.end()) != (ib != c.vb.end())) return false;
      if (ia != c.va.end()) return ia->second == ib->second;
      return ka == kb;
    }
    case TermKind::Const:
      return a->name == b->name;
    case TermKind::App: {
      if (a->name != b->name || a->args.size() != b->args.size()) return false;
      for (size_t i = 0; i < a->args.size(); ++i)
        if (!alpha_term(a->args[i], b->args[i], c)) return false;
      return true;
    }
  }
  return false;
}

bool alpha_head(const std::string& a, const std::string& b, const AlphaCtx& c) {
  auto ia = c.pa.find(a);
  auto ib = c.pb.find(b);
  if ((ia != c.pa.end()) != (ib != c.pb.end())) return false;
  if (ia != c.pa.end()) return ia->second == ib->second;
  return a == b;
}

bool alpha_rec(const FormulaPtr& a, const FormulaPtr& b, AlphaCtx& c) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FKind::Atom:
    case FKind::MacroCall: {
      if (a->kind == FKind::MacroCall ? (a->name != b->name)
                                      : !alpha_head(a->name, b->name, c))
        return false;
      if (a->args.size() != b->args.size()) return false;
      for (size_t i = 0; i < a->args.size(); ++i)
        if (!alpha_term(a->args[i], b->args[i], c)) return false;
      return true;
    }
    case FKind::Eq:
      return alpha_term(a->args[0], b->args[0], c) &&
             alpha_term(a->args[1], b->args[1], c);
    case FKind::ForallInd:
    case FKind::ExistsInd: {
      AlphaCtx inner = c;
      inner.va[a->var] = inner.vb[b->var] = inner.next++;
      return alpha_rec(a->kids[0], b->kids[0], inner);
    }
    case FKind::ForallPred:
    case FKind::ExistsPred: {
      if (a->pred_arity != b->pred_arity) return false;
      AlphaCtx inner = c;
      inner.pa[a->name] = inner.pb[b->name] = inner.next++;
      return alpha_rec(a->kids[0], b->kids[0], inner);
    }
    case FKind::Truth:
    case FKind::Falsity:
      return true;
    default: {
      if (a->kids.size() != b->kids.size()) return false;
      for (size_t i = 0; i < a->kids.size(); ++i)
        if (!alpha_rec(a->kids[i], b->kids[i], c)) return false;
      return true;
    }
  }
}

}  // namespace

bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b) {
  AlphaCtx c;
  return alpha_rec(a, b, c);
}

}  // namespace lwb
