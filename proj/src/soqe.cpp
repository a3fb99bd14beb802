#include "soqe.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

#include "normalize.hpp"
#include "printer.hpp"

namespace lwb {

namespace {

struct Occurrence {
  bool pos = false;      // the predicate applied under even negations
  bool neg = false;      // under odd negations
  bool quoted = false;   // appears as a quoted term
  bool foreign = false;  // applied at a different arity
};

void scan_term(const TermPtr& t, const std::string& p, Occurrence& o) {
  if (t->kind == TermKind::Quoted && t->name == p) o.quoted = true;
  for (auto& a : t->args) scan_term(a, p, o);
}

void scan(const FormulaPtr& f, const std::string& p, int arity, bool sign,
          Occurrence& o) {
  // a same-name predicate binder shadows: occurrences below are not ours
  if ((f->kind == FKind::ForallPred || f->kind == FKind::ExistsPred) &&
      f->name == p)
    return;
  switch (f->kind) {
    case FKind::Atom:
    case FKind::MacroCall:
      if (f->kind == FKind::Atom && f->name == p) {
        if ((int)f->args.size() == arity)
          (sign ? o.pos : o.neg) = true;
        else
          o.foreign = true;
      }
      for (auto& t : f->args) scan_term(t, p, o);
      return;
    case FKind::Eq:
      for (auto& t : f->args) scan_term(t, p, o);
      return;
    case FKind::Not:
      scan(f->kids[0], p, arity, !sign, o);
      return;
    case FKind::Implies:
      scan(f->kids[0], p, arity, !sign, o);
      scan(f->kids[1], p, arity, sign, o);
      return;
    case FKind::Iff:
      for (auto& k : f->kids) {
        scan(k, p, arity, sign, o);
        scan(k, p, arity, !sign, o);
      }
      return;
    default:
      for (auto& k : f->kids) scan(k, p, arity, sign, o);
      return;
  }
}

Occurrence scan_all(const FormulaPtr& f, const std::string& p, int arity) {
  Occurrence o;
  scan(f, p, arity, true, o);
  return o;
}

struct Ctx {
  int sk = 0;    // Skolem numbering, shared across steps of one elimination
  int uniq = 0;  // renamed-apart binder and definition-parameter numbering
  Fresh fresh;
  std::vector<std::string>* trace = nullptr;
  void note(std::string s) {
    if (trace) trace->push_back(std::move(s));
  }
  VarKey fresh_var() { return VarKey{"_E" + std::to_string(uniq++), Quote::None}; }
};

// Unique names for all plain individual binders, so that inserting a
// definition instance at any occurrence site can never capture a variable.
FormulaPtr rectify(const FormulaPtr& f, Ctx& ctx) {
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
  std::function<FormulaPtr(const FormulaPtr&)> go =
      [&](const FormulaPtr& g) -> FormulaPtr {
    auto h = std::make_shared<Formula>(*g);
    auto& m = const_cast<Formula&>(*h);
    if ((g->kind == FKind::ForallInd || g->kind == FKind::ExistsInd) &&
        g->var.quote == Quote::None) {
      std::optional<VarKey> saved;
      auto old = env.find(g->var);
      if (old != env.end()) saved = old->second;
      m.var = ctx.fresh_var();
      env[g->var] = m.var;
      m.kids[0] = go(g->kids[0]);
      if (saved)
        env[g->var] = *saved;
      else
        env.erase(g->var);
      return h;
    }
    for (auto& a : m.args) a = term(a);
    for (auto& k : m.kids) k = go(k);
    return h;
  };
  return go(f);
}

bool mentions_var(const FormulaPtr& f, const VarKey& v) {
  return free_symbols(f).free_vars.count(v) > 0;
}

// Push individual quantifiers toward the leaves: over every conjunct
// (universal) / disjunct (existential), into the single branch that needs the
// variable otherwise, and away entirely when vacuous.
FormulaPtr miniscope(const FormulaPtr& f) {
  if (f->kind == FKind::ForallInd || f->kind == FKind::ExistsInd) {
    bool univ = f->kind == FKind::ForallInd;
    VarKey v = f->var;
    FormulaPtr body = miniscope(f->kids[0]);
    if (!mentions_var(body, v)) return body;
    auto rewrap = [&](FormulaPtr g) {
      return univ ? mk_forall(v, std::move(g)) : mk_exists(v, std::move(g));
    };
    FKind across = univ ? FKind::And : FKind::Or;
    FKind into = univ ? FKind::Or : FKind::And;
    if (body->kind == across) {
      std::vector<FormulaPtr> out;
      for (auto& k : body->kids)
        out.push_back(mentions_var(k, v) ? miniscope(rewrap(k)) : k);
      return univ ? mk_and(std::move(out)) : mk_or(std::move(out));
    }
    if (body->kind == into) {
      std::vector<FormulaPtr> with, without;
      for (auto& k : body->kids)
        (mentions_var(k, v) ? with : without).push_back(k);
      if (!without.empty()) {
        without.push_back(miniscope(rewrap(univ ? mk_or(std::move(with))
                                               : mk_and(std::move(with)))));
        return univ ? mk_or(std::move(without)) : mk_and(std::move(without));
      }
    }
    return rewrap(body);
  }
  auto h = std::make_shared<Formula>(*f);
  auto& m = const_cast<Formula&>(*h);
  for (auto& k : m.kids) k = miniscope(k);
  return h;
}

constexpr size_t kDnfCap = 512;

// Top-level disjunctive form treating everything but And/Or as a unit. False
// when the distribution exceeds the cap.
bool dnf(const FormulaPtr& f, std::vector<std::vector<FormulaPtr>>& out) {
  if (f->kind == FKind::And) {
    out = {{}};
    for (auto& k : f->kids) {
      std::vector<std::vector<FormulaPtr>> kd;
      if (!dnf(k, kd)) return false;
      if (out.size() * kd.size() > kDnfCap) return false;
      std::vector<std::vector<FormulaPtr>> prod;
      for (auto& a : out)
        for (auto& b : kd) {
          auto c = a;
          c.insert(c.end(), b.begin(), b.end());
          prod.push_back(std::move(c));
        }
      out = std::move(prod);
    }
    return true;
  }
  if (f->kind == FKind::Or) {
    out.clear();
    for (auto& k : f->kids) {
      std::vector<std::vector<FormulaPtr>> kd;
      if (!dnf(k, kd)) return false;
      for (auto& d : kd) out.push_back(std::move(d));
      if (out.size() > kDnfCap) return false;
    }
    return true;
  }
  if (f->kind == FKind::Truth) {
    out = {{}};
    return true;
  }
  if (f->kind == FKind::Falsity) {
    out.clear();
    return true;
  }
  out = {{f}};
  return true;
}

// all ȳ (G | P(t̄))  [positive]  /  all ȳ (G | ~P(t̄))  [dual], G free of P
struct DefClause {
  std::vector<VarKey> ys;
  std::vector<TermPtr> ts;
  FormulaPtr guard;
};

// Classify one disjunct's conjuncts into definition clauses and a matrix of
// the orientation's polarity; combine the definition clauses into a single
// definition over fresh parameters:
//   positive: A(x̄) = or_i ex ȳi (x̄ = t̄i & ~Gi)
//   dual:     A(x̄) = and_i all ȳi (x̄ = t̄i -> Gi)
std::optional<AckermannForm> analyze(const std::vector<FormulaPtr>& conjuncts,
                                     const std::string& p, int arity,
                                     Orientation ori, Ctx& ctx) {
  std::vector<FormulaPtr> matrix;
  std::vector<DefClause> defs;
  for (auto& c : conjuncts) {
    Occurrence o = scan_all(c, p, arity);
    if (o.quoted || o.foreign) return std::nullopt;
    bool def_polarity = ori == Orientation::Positive ? o.pos : o.neg;
    if (!def_polarity) {
      matrix.push_back(c);
      continue;
    }
    std::vector<VarKey> ys;
    FormulaPtr core = c;
    while (core->kind == FKind::ForallInd) {
      ys.push_back(core->var);
      core = core->kids[0];
    }
    std::vector<FormulaPtr> kids =
        core->kind == FKind::Or ? core->kids : std::vector<FormulaPtr>{core};
    int lit = -1;
    for (size_t i = 0; i < kids.size(); ++i) {
      bool negl = kids[i]->kind == FKind::Not;
      const FormulaPtr& a = negl ? kids[i]->kids[0] : kids[i];
      if (a->kind == FKind::Atom && a->name == p &&
          (int)a->args.size() == arity &&
          negl == (ori == Orientation::Dual)) {
        if (lit >= 0) return std::nullopt;  // two definition literals
        lit = (int)i;
      }
    }
    if (lit < 0) return std::nullopt;  // occurrence not at clause top level
    std::vector<FormulaPtr> rest;
    for (size_t i = 0; i < kids.size(); ++i)
      if ((int)i != lit) rest.push_back(kids[i]);
    for (auto& r : rest) {
      Occurrence ro = scan_all(r, p, arity);
      if (ro.pos || ro.neg || ro.quoted) return std::nullopt;
    }
    const FormulaPtr& atom =
        ori == Orientation::Dual ? kids[lit]->kids[0] : kids[lit];
    defs.push_back({std::move(ys), atom->args, mk_or(std::move(rest))});
  }

  AckermannForm af;
  af.pred = p;
  af.arity = arity;
  af.orientation = ori;
  for (int i = 0; i < arity; ++i) af.params.push_back(ctx.fresh_var());
  std::vector<FormulaPtr> pieces;
  for (auto& d : defs) {
    std::vector<FormulaPtr> eqs;
    for (int j = 0; j < arity; ++j)
      eqs.push_back(mk_eq(mk_var(af.params[j]), d.ts[j]));
    FormulaPtr core;
    if (ori == Orientation::Positive) {
      if (d.guard->kind != FKind::Falsity) eqs.push_back(to_nnf(mk_not(d.guard)));
      core = mk_and(std::move(eqs));
      for (auto it = d.ys.rbegin(); it != d.ys.rend(); ++it)
        core = mk_exists(*it, core);
    } else {
      core = mk_implies(mk_and(std::move(eqs)), d.guard);
      for (auto it = d.ys.rbegin(); it != d.ys.rend(); ++it)
        core = mk_forall(*it, core);
    }
    pieces.push_back(core);
  }
  af.definition = ori == Orientation::Positive ? mk_or(std::move(pieces))
                                               : mk_and(std::move(pieces));
  af.matrix = mk_and(std::move(matrix));
  return af;
}

// Rename the given binders apart wherever they occur in f, against captures
// of the definition's free variables.
FormulaPtr shield_binders(const FormulaPtr& f, const std::set<VarKey>& conflict,
                          std::set<std::string>& taken, int& n) {
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
  std::function<FormulaPtr(const FormulaPtr&)> go =
      [&](const FormulaPtr& g) -> FormulaPtr {
    auto h = std::make_shared<Formula>(*g);
    auto& m = const_cast<Formula&>(*h);
    if ((g->kind == FKind::ForallInd || g->kind == FKind::ExistsInd) &&
        conflict.count(g->var)) {
      std::string base;
      do base = g->var.base + "_" + std::to_string(n++);
      while (!taken.insert(base).second);
      std::optional<VarKey> saved;
      auto old = env.find(g->var);
      if (old != env.end()) saved = old->second;
      m.var = VarKey{base, g->var.quote};
      env[g->var] = m.var;
      m.kids[0] = go(g->kids[0]);
      if (saved)
        env[g->var] = *saved;
      else
        env.erase(g->var);
      return h;
    }
    for (auto& a : m.args) a = term(a);
    for (auto& k : m.kids) k = go(k);
    return h;
  };
  return go(f);
}

void collect_var_names(const FormulaPtr& f, std::set<std::string>& out) {
  out.insert(f->var.base);
  std::function<void(const TermPtr&)> wt = [&](const TermPtr& t) {
    out.insert(t->name);
    for (auto& a : t->args) wt(a);
  };
  for (auto& a : f->args) wt(a);
  for (auto& k : f->kids) collect_var_names(k, out);
}

int next_sk_index(const Signature& sig) {
  int next = 0;
  auto probe = [&](const std::string& name) {
    if (name.size() < 3 || name.compare(0, 2, "sk") != 0) return;
    int idx = 0;
    for (size_t i = 2; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return;
      idx = idx * 10 + (name[i] - '0');
    }
    next = std::max(next, idx + 1);
  };
  for (auto& [n, a] : sig.funcs) {
    (void)a;
    probe(n);
  }
  for (auto& [n, a] : sig.preds) {
    (void)a;
    probe(n);
  }
  for (auto& n : sig.consts) probe(n);
  return next;
}

std::optional<FormulaPtr> exists_step(const FormulaPtr& raw, const std::string& p,
                                      int arity, Ctx& ctx, std::string& blocker) {
  FormulaPtr body = to_nnf(raw);
  Occurrence o = scan_all(body, p, arity);
  if (o.quoted) {
    blocker = "quoted occurrence of " + p;
    return std::nullopt;
  }
  if (o.foreign) {
    blocker = p + " is applied at a different arity";
    return std::nullopt;
  }
  if (!(o.pos && o.neg)) {
    if (auto r = purity_delete(body, p, arity)) {
      ctx.note(std::string("purity: ") + p +
               (o.pos ? " only positive, substituted true"
                      : o.neg ? " only negative, substituted false"
                              : " does not occur"));
      return *r;
    }
    blocker = "pure occurrence of " + p + " not substitutable";
    return std::nullopt;
  }

  body = rectify(body, ctx);
  SkolemTrace st;
  body = skolemize(body, &st, &ctx.sk);
  if (!st.entries.empty())
    ctx.note("skolemized " + std::to_string(st.entries.size()) +
             " individual existential(s)");
  body = miniscope(body);

  std::vector<std::vector<FormulaPtr>> disjuncts;
  if (!dnf(body, disjuncts)) {
    blocker = "distribution to disjunctive form exceeds the size cap";
    return std::nullopt;
  }

  std::vector<FormulaPtr> parts;
  for (size_t i = 0; i < disjuncts.size(); ++i) {
    auto af = analyze(disjuncts[i], p, arity, Orientation::Positive, ctx);
    const char* which = "positive";
    if (!af) {
      af = analyze(disjuncts[i], p, arity, Orientation::Dual, ctx);
      which = "dual";
    }
    if (!af) {
      blocker = "no Ackermann orientation for " + p + " in: " +
                print_formula(mk_and(disjuncts[i]));
      return std::nullopt;
    }
    ctx.note("disjunct " + std::to_string(i + 1) + ": " + which +
             " orientation");
    parts.push_back(apply_ackermann(*af));
  }

  FormulaPtr res = simplify(to_nnf(mk_or(std::move(parts))));
  auto un = unskolemize(res, st);
  if (!un.ok) {
    blocker = "introduced Skolem symbols cannot be quantified away: " + un.reason;
    return std::nullopt;
  }
  if (!st.entries.empty()) ctx.note("un-skolemized the introduced symbols");
  return simplify(un.formula);
}

FormulaPtr drive(const FormulaPtr& f, Ctx& ctx, std::string& blocker,
                 std::vector<std::string>& targets) {
  auto h = std::make_shared<Formula>(*f);
  auto& m = const_cast<Formula&>(*h);
  for (auto& k : m.kids) {
    k = drive(k, ctx, blocker, targets);
    if (!k) return nullptr;
  }
  if (f->kind != FKind::ForallPred && f->kind != FKind::ExistsPred) return h;

  targets.push_back(f->name);
  bool univ = f->kind == FKind::ForallPred;
  FormulaPtr body = m.kids[0];
  ctx.note(std::string(univ ? "all2 " : "ex2 ") + f->name + "/" +
           std::to_string(f->pred_arity) +
           (univ ? ": eliminating as a negated existential" : ": eliminating"));
  if (univ) body = to_nnf(mk_not(body));
  auto r = exists_step(body, f->name, f->pred_arity, ctx, blocker);
  if (!r) return nullptr;
  return univ ? simplify(to_nnf(mk_not(*r))) : *r;
}

}  // namespace

FormulaPtr apply_ackermann(const AckermannForm& af) {
  Signature dsig = free_symbols(af.definition);
  std::set<VarKey> conflict;
  for (auto& v : dsig.free_vars)
    if (std::find(af.params.begin(), af.params.end(), v) == af.params.end())
      conflict.insert(v);
  FormulaPtr matrix = af.matrix;
  if (!conflict.empty()) {
    std::set<std::string> taken;
    collect_var_names(af.matrix, taken);
    collect_var_names(af.definition, taken);
    int n = 0;
    matrix = shield_binders(matrix, conflict, taken, n);
  }
  Fresh fresh;
  std::function<FormulaPtr(const FormulaPtr&)> go =
      [&](const FormulaPtr& f) -> FormulaPtr {
    if ((f->kind == FKind::ForallPred || f->kind == FKind::ExistsPred) &&
        f->name == af.pred)
      return f;
    if (f->kind == FKind::Atom && f->name == af.pred &&
        (int)f->args.size() == af.arity) {
      Subst s;
      for (int j = 0; j < af.arity; ++j) s.var_map[af.params[j]] = f->args[j];
      return substitute(af.definition, s, fresh);
    }
    auto h = std::make_shared<Formula>(*f);
    auto& m = const_cast<Formula&>(*h);
    for (auto& k : m.kids) k = go(k);
    return h;
  };
  return go(matrix);
}

std::optional<FormulaPtr> purity_delete(const FormulaPtr& body,
                                        const std::string& pred, int arity) {
  Occurrence o = scan_all(body, pred, arity);
  if (o.quoted || o.foreign || (o.pos && o.neg)) return std::nullopt;
  if (!o.pos && !o.neg) return simplify(body);
  Fresh fresh;
  try {
    return simplify(instantiate_pred_truth(body, pred, o.pos, fresh));
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<AckermannForm> to_ackermann_form(const FormulaPtr& body,
                                               const std::string& pred,
                                               int arity) {
  Ctx ctx;
  ctx.sk = next_sk_index(free_symbols(body));
  FormulaPtr b = to_nnf(body);
  Occurrence o = scan_all(b, pred, arity);
  if (o.quoted || o.foreign) return std::nullopt;
  b = rectify(b, ctx);
  SkolemTrace st;
  b = skolemize(b, &st, &ctx.sk);
  b = miniscope(b);
  std::vector<std::vector<FormulaPtr>> ds;
  if (!dnf(b, ds) || ds.size() != 1) return std::nullopt;
  // uniformly positive occurrences read best left in the matrix
  if (o.pos && !o.neg) {
    if (auto af = analyze(ds[0], pred, arity, Orientation::Dual, ctx)) return af;
    return analyze(ds[0], pred, arity, Orientation::Positive, ctx);
  }
  if (auto af = analyze(ds[0], pred, arity, Orientation::Positive, ctx)) return af;
  return analyze(ds[0], pred, arity, Orientation::Dual, ctx);
}

ElimOutcome eliminate(const FormulaPtr& f) {
  Signature sig = free_symbols(f);
  if (sig.has_macro_call) fail(Err::InvalidArg, "eliminate expects an expanded formula");
  ElimOutcome out;
  out.result = f;
  if (!sig.has_pred_quant) {
    out.status = ElimStatus::Eliminated;
    out.trace.push_back("no predicate quantifiers");
    return out;
  }

  Ctx ctx;
  ctx.trace = &out.trace;
  ctx.sk = next_sk_index(sig);
  std::vector<std::string> targets;
  std::string blocker;
  FormulaPtr res = drive(f, ctx, blocker, targets);
  if (!res) {
    out.status = ElimStatus::Failed;
    out.blocker = blocker;
    out.trace.push_back("failed: " + blocker);
    return out;
  }

  res = pretty_rename(simplify(res));
  Signature rs = free_symbols(res);
  if (rs.has_pred_quant)
    fail(Err::Internal, "residual predicate quantifier after elimination");
  // a binder name may coincide with a genuinely free predicate; only names
  // the input does not use freely must be gone
  std::set<std::string> input_free;
  for (auto& [n, a] : sig.preds) {
    (void)a;
    input_free.insert(n);
  }
  for (auto& [n, a] : sig.pred_vars) {
    (void)a;
    input_free.insert(n);
  }
  for (auto& [n, q] : sig.quoted) {
    (void)q;
    input_free.insert(n);
  }
  for (auto& t : targets)
    if (!input_free.count(t) && (pred_occurs(res, t) || quoted_occurs(res, t)))
      fail(Err::Internal, "residual occurrence of eliminated predicate " + t);

  out.status = ElimStatus::Eliminated;
  out.result = res;
  return out;
}

}  // namespace lwb
