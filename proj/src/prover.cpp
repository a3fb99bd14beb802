#include "prover.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <set>
#include <unordered_map>

namespace lwb {

// ---------------------------------------------------------------- equality

namespace {

FormulaPtr close_over(std::vector<std::string> vars, FormulaPtr body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it)
    body = mk_forall(VarKey{*it, Quote::None}, body);
  return body;
}

}  // namespace

std::vector<FormulaPtr> equality_axioms(const Signature& sig) {
  auto v = [](const std::string& n) { return mk_var(n); };
  std::vector<FormulaPtr> out;
  out.push_back(close_over({"X"}, mk_eq(v("X"), v("X"))));
  out.push_back(close_over(
      {"X", "Y"},
      mk_implies(mk_eq(v("X"), v("Y")), mk_eq(v("Y"), v("X")))));
  out.push_back(close_over(
      {"X", "Y", "Z"},
      mk_implies(mk_and({mk_eq(v("X"), v("Y")), mk_eq(v("Y"), v("Z"))}),
                 mk_eq(v("X"), v("Z")))));

  auto congruence = [&](const std::string& name, int k, bool is_func) {
    std::vector<std::string> vars;
    std::vector<FormulaPtr> ante;
    std::vector<TermPtr> xs, ys;
    for (int i = 1; i <= k; ++i) {
      std::string x = "X" + std::to_string(i), y = "Y" + std::to_string(i);
      vars.push_back(x);
      vars.push_back(y);
      xs.push_back(v(x));
      ys.push_back(v(y));
      ante.push_back(mk_eq(v(x), v(y)));
    }
    FormulaPtr concl;
    if (is_func) {
      concl = mk_eq(mk_app(name, xs), mk_app(name, ys));
    } else {
      ante.push_back(mk_atom(name, xs));
      concl = mk_atom(name, ys);
    }
    out.push_back(close_over(vars, mk_implies(mk_and(ante), concl)));
  };
  for (auto& [name, k] : sig.preds)
    if (k >= 1) congruence(name, k, false);
  for (auto& [name, k] : sig.funcs)
    if (k >= 1) congruence(name, k, true);
  return out;
}

// ------------------------------------------- predicate quantifier grounding

namespace {

int next_q_index(const Signature& sig) {
  int ctr = 0;
  auto consider = [&](const std::string& s) {
    if (s.size() < 2 || s[0] != 'q') return;
    for (size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit((unsigned char)s[i])) return;
    ctr = std::max(ctr, std::stoi(s.substr(1)) + 1);
  };
  for (auto& [k, a] : sig.preds) consider(k);
  for (auto& [k, a] : sig.funcs) consider(k);
  for (auto& c : sig.consts) consider(c);
  for (auto& [q, n] : sig.quoted) consider(q);
  return ctr;
}

struct SoGrounder {
  FormulaPtr original;
  Fresh fresh{};
  int qctr = 0;
  std::vector<std::pair<std::string, int>> created{};  // fresh symbol, arity

  TermPtr lift_term(const TermPtr& t, const std::string& p, int m,
                    const std::string& qname) {
    if (t->kind == TermKind::Quoted && t->name == p) {
      if (m > 0)
        fail(Err::Unsupported,
             "quoted occurrence of a predicate variable that depends on "
             "universal individuals");
      return mk_quoted(qname, t->qneg);
    }
    if (t->kind == TermKind::App) {
      std::vector<TermPtr> args;
      args.reserve(t->args.size());
      for (auto& a : t->args) args.push_back(lift_term(a, p, m, qname));
      return mk_app(t->name, std::move(args));
    }
    return t;
  }

  FormulaPtr lift(const FormulaPtr& f, const std::string& p, int m,
                  const std::string& qname,
                  const std::vector<TermPtr>& prefix) {
    if ((f->kind == FKind::ForallPred || f->kind == FKind::ExistsPred) &&
        f->name == p)
      return f;  // shadowed
    auto g = std::make_shared<Formula>(*f);
    auto& w = const_cast<Formula&>(*g);
    if (f->kind == FKind::Atom && f->name == p) {
      w.name = qname;
      std::vector<TermPtr> args = prefix;
      for (auto& a : f->args) args.push_back(lift_term(a, p, m, qname));
      w.args = std::move(args);
      return g;
    }
    for (auto& a : w.args) a = lift_term(a, p, m, qname);
    for (auto& k : w.kids) k = lift(k, p, m, qname, prefix);
    return g;
  }

  // Skolemize existential predicate quantifiers, stopping at universal ones
  FormulaPtr sk_round(const FormulaPtr& f, std::vector<VarKey>& univ) {
    switch (f->kind) {
      case FKind::Atom:
      case FKind::Eq:
      case FKind::Not:
      case FKind::Truth:
      case FKind::Falsity:
      case FKind::ForallPred:
        return f;
      case FKind::And:
      case FKind::Or: {
        std::vector<FormulaPtr> kids;
        kids.reserve(f->kids.size());
        for (auto& k : f->kids) kids.push_back(sk_round(k, univ));
        return f->kind == FKind::And ? mk_and(std::move(kids))
                                     : mk_or(std::move(kids));
      }
      case FKind::ForallInd: {
        univ.push_back(f->var);
        FormulaPtr body = sk_round(f->kids[0], univ);
        univ.pop_back();
        return mk_forall(f->var, body);
      }
      case FKind::ExistsInd:
        return mk_exists(f->var, sk_round(f->kids[0], univ));
      case FKind::ExistsPred: {
        const FormulaPtr& body = f->kids[0];
        Signature bs = free_symbols(body);
        std::vector<TermPtr> prefix;
        std::set<VarKey> used;
        for (auto& u : univ)
          if (bs.free_vars.count(u) && used.insert(u).second)
            prefix.push_back(mk_var(u));
        std::string qname = "q" + std::to_string(qctr++);
        created.push_back({qname, (int)prefix.size() + f->pred_arity});
        FormulaPtr lifted =
            lift(body, f->name, (int)prefix.size(), qname, prefix);
        return sk_round(lifted, univ);
      }
      default:
        fail(Err::InvalidArg,
             "predicate quantifier grounding expects an NNF formula");
    }
  }

  // instantiate outermost universal predicate quantifiers
  FormulaPtr inst_round(const FormulaPtr& f) {
    switch (f->kind) {
      case FKind::Atom:
      case FKind::Eq:
      case FKind::Not:
      case FKind::Truth:
      case FKind::Falsity:
      case FKind::ExistsPred:
        return f;
      case FKind::And:
      case FKind::Or: {
        std::vector<FormulaPtr> kids;
        kids.reserve(f->kids.size());
        for (auto& k : f->kids) kids.push_back(inst_round(k));
        return f->kind == FKind::And ? mk_and(std::move(kids))
                                     : mk_or(std::move(kids));
      }
      case FKind::ForallInd:
        return mk_forall(f->var, inst_round(f->kids[0]));
      case FKind::ExistsInd:
        return mk_exists(f->var, inst_round(f->kids[0]));
      case FKind::ForallPred: {
        const FormulaPtr& body = f->kids[0];
        std::vector<std::string> pool;
        for (auto& [nm, ar] : created)
          if (ar == f->pred_arity) pool.push_back(nm);
        for (auto& nm : free_preds_of_arity(original, f->pred_arity))
          if (std::find(pool.begin(), pool.end(), nm) == pool.end())
            pool.push_back(nm);
        std::vector<FormulaPtr> inst;
        for (auto& nm : pool) {
          Subst s;
          s.pred_map[f->name] = nm;
          inst.push_back(substitute(body, s, fresh));
        }
        for (bool value : {true, false}) {
          try {
            // truth constants can land under a negation: renormalize
            inst.push_back(
                to_nnf(instantiate_pred_truth(body, f->name, value, fresh)));
          } catch (const Error& e) {
            if (e.code != Err::Unsupported) throw;  // else skip the instance
          }
        }
        return mk_and(std::move(inst));
      }
      default:
        fail(Err::InvalidArg,
             "predicate quantifier grounding expects an NNF formula");
    }
  }

  FormulaPtr run() {
    FormulaPtr g = original;
    for (int iter = 0; iter < 64; ++iter) {
      if (!free_symbols(g).has_pred_quant) return g;
      std::vector<VarKey> univ;
      g = sk_round(g, univ);
      g = inst_round(g);
    }
    fail(Err::Resource, "predicate quantifier grounding did not converge");
  }
};

}  // namespace

FormulaPtr ground_so(const FormulaPtr& refuted_nnf) {
  SoGrounder gr{refuted_nnf};
  gr.qctr = next_q_index(free_symbols(refuted_nnf));
  return gr.run();
}

// --------------------------------------------------------------- refutation

namespace {

// shared by search and replay: bindings with a trail, renaming, unification
struct Unifier {
  std::unordered_map<std::string, TermPtr> subst;
  std::vector<std::string> trail;

  TermPtr walk(TermPtr t) const {
    while (t->kind == TermKind::Var) {
      auto it = subst.find(t->name);
      if (it == subst.end()) break;
      t = it->second;
    }
    return t;
  }

  bool occurs(const std::string& v, TermPtr t) const {
    t = walk(t);
    if (t->kind == TermKind::Var) return t->name == v;
    for (auto& a : t->args)
      if (occurs(v, a)) return true;
    return false;
  }

  bool unify_terms(TermPtr a, TermPtr b) {
    a = walk(a);
    b = walk(b);
    if (a->kind == TermKind::Var && b->kind == TermKind::Var &&
        a->name == b->name)
      return true;
    if (a->kind == TermKind::Var) {
      if (occurs(a->name, b)) return false;
      subst[a->name] = b;
      trail.push_back(a->name);
      return true;
    }
    if (b->kind == TermKind::Var) {
      if (occurs(b->name, a)) return false;
      subst[b->name] = a;
      trail.push_back(b->name);
      return true;
    }
    if (a->kind != b->kind) return false;
    if (a->kind == TermKind::Const) return a->name == b->name;
    if (a->kind == TermKind::Quoted)
      return a->name == b->name && a->qneg == b->qneg;
    if (a->name != b->name || a->args.size() != b->args.size()) return false;
    for (size_t i = 0; i < a->args.size(); ++i)
      if (!unify_terms(a->args[i], b->args[i])) return false;
    return true;
  }

  // complementary atoms; signs are the caller's business
  bool connect(const Literal& a, const Literal& b) {
    if (a.is_eq != b.is_eq || a.pred != b.pred ||
        a.args.size() != b.args.size())
      return false;
    for (size_t i = 0; i < a.args.size(); ++i)
      if (!unify_terms(a.args[i], b.args[i])) return false;
    return true;
  }

  void undo(size_t mark) {
    while (trail.size() > mark) {
      subst.erase(trail.back());
      trail.pop_back();
    }
  }

  static TermPtr rename_term(const TermPtr& t, int inst) {
    if (t->kind == TermKind::Var)
      return mk_var(t->name + "@" + std::to_string(inst));
    if (t->kind == TermKind::App) {
      std::vector<TermPtr> args;
      args.reserve(t->args.size());
      for (auto& a : t->args) args.push_back(rename_term(a, inst));
      return mk_app(t->name, std::move(args));
    }
    return t;
  }

  static Literal rename_lit(const Literal& l, int inst) {
    Literal out = l;
    out.args.clear();
    for (auto& t : l.args) out.args.push_back(rename_term(t, inst));
    return out;
  }

  bool term_same(TermPtr a, TermPtr b) const {
    a = walk(a);
    b = walk(b);
    if (a->kind != b->kind) return false;
    if (a->kind == TermKind::Var || a->kind == TermKind::Const)
      return a->name == b->name;
    if (a->kind == TermKind::Quoted)
      return a->name == b->name && a->qneg == b->qneg;
    if (a->name != b->name || a->args.size() != b->args.size()) return false;
    for (size_t i = 0; i < a->args.size(); ++i)
      if (!term_same(a->args[i], b->args[i])) return false;
    return true;
  }

  bool lit_same(const Literal& a, const Literal& b) const {
    if (a.neg != b.neg || a.is_eq != b.is_eq || a.pred != b.pred ||
        a.args.size() != b.args.size())
      return false;
    for (size_t i = 0; i < a.args.size(); ++i)
      if (!term_same(a.args[i], b.args[i])) return false;
    return true;
  }
};

std::vector<Clause> sorted_clauses(const ClauseSet& cs) {
  std::vector<Clause> out = cs.clauses;
  std::stable_sort(out.begin(), out.end(),
                   [](const Clause& a, const Clause& b) {
                     return a.lits.size() < b.lits.size();
                   });
  return out;
}

std::string lit_key(bool neg, bool is_eq, const std::string& pred,
                    size_t arity) {
  std::string k = neg ? "-" : "+";
  k += is_eq ? "=" : pred;
  k += "/";
  k += std::to_string(arity);
  return k;
}

struct Engine : Unifier {
  std::vector<Clause> clauses;
  Budget budget;
  ProofStats stats;
  std::vector<ProofStep> trace;
  std::chrono::steady_clock::time_point t0;
  bool out_of_time = false;
  // prune alternative closings of an already-closed goal: much faster,
  // but incomplete, so a failed run proves nothing
  bool restricted = false;
  int instance = 0;
  // extension candidates per connectable literal shape
  std::unordered_map<std::string, std::vector<std::pair<int, int>>> index;

  void build_index() {
    for (int ci = 0; ci < (int)clauses.size(); ++ci) {
      const auto& lits = clauses[ci].lits;
      for (int li = 0; li < (int)lits.size(); ++li) {
        const Literal& m = lits[li];
        index[lit_key(m.neg, m.is_eq, m.pred, m.args.size())].push_back(
            {ci, li});
      }
    }
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
  }

  bool tick() {
    if (++stats.inferences > budget.max_inferences)
      out_of_time = true;
    else if ((stats.inferences & 4095) == 0 &&
             elapsed() > budget.max_seconds)
      out_of_time = true;
    return !out_of_time;
  }

  bool solve(const std::vector<Literal>& goals, size_t gi,
             std::vector<Literal>& path, std::vector<Literal>& lemmas,
             int limit, bool& cutoff) {
    if (out_of_time) return false;
    if (gi == goals.size()) return true;
    const Literal& goal = goals[gi];

    for (auto& pl : path)
      if (lit_same(goal, pl)) return false;  // regularity

    // an identical literal already closed on a sibling branch closes this
    // one: its subtree transfers (same ancestors, bindings only grew)
    for (int li = (int)lemmas.size() - 1; li >= 0 && getenv("LWB_LEMMA"); --li) {
      if (!lit_same(goal, lemmas[li])) continue;
      size_t tmark = trace.size();
      trace.push_back({ProofStep::Kind::Lemma, -1, -1, li});
      if (solve(goals, gi + 1, path, lemmas, limit, cutoff)) return true;
      trace.resize(tmark);
      if (restricted) return false;
      break;  // no bindings were made, so other lemmas change nothing
    }

    for (int pi = (int)path.size() - 1; pi >= 0; --pi) {
      const Literal& k = path[pi];
      if (k.neg == goal.neg) continue;
      if (!tick()) return false;
      size_t mark = trail.size(), tmark = trace.size();
      if (connect(goal, k)) {
        trace.push_back({ProofStep::Kind::Reduction, -1, -1, pi});
        lemmas.push_back(goal);
        if (solve(goals, gi + 1, path, lemmas, limit, cutoff)) return true;
        lemmas.pop_back();
        trace.resize(tmark);
        undo(mark);
        if (restricted) return false;
      } else {
        undo(mark);
      }
    }

    if ((int)path.size() >= limit) {
      cutoff = true;
      return false;
    }
    auto hit = index.find(
        lit_key(!goal.neg, goal.is_eq, goal.pred, goal.args.size()));
    if (hit == index.end()) return false;
    for (auto& [ci, li] : hit->second) {
      const Clause& c = clauses[ci];
      if (!tick()) return false;
      int inst = instance++;
      size_t mark = trail.size(), tmark = trace.size();
      if (connect(goal, rename_lit(c.lits[li], inst))) {
        trace.push_back({ProofStep::Kind::Extension, ci, li, -1});
        std::vector<Literal> sub;
        for (int lj = 0; lj < (int)c.lits.size(); ++lj)
          if (lj != li) sub.push_back(rename_lit(c.lits[lj], inst));
        path.push_back(goal);
        size_t lmark = lemmas.size();
        bool closed = solve(sub, 0, path, lemmas, limit, cutoff);
        lemmas.resize(lmark);  // subtree lemmas die with their context
        path.pop_back();
        if (closed) {
          lemmas.push_back(goal);
          if (solve(goals, gi + 1, path, lemmas, limit, cutoff)) return true;
          lemmas.pop_back();
          trace.resize(tmark);
          undo(mark);
          if (restricted) return false;
          continue;
        }
        trace.resize(tmark);
      }
      undo(mark);
    }
    return false;
  }

  ProofResult run() {
    t0 = std::chrono::steady_clock::now();
    build_index();
    // start clauses may be all-negative only: every unsatisfiable set
    // contains one (all-true falsifies it), so the search stays complete,
    // and negated conclusions land there, keeping the search goal-driven
    std::vector<int> starts;
    for (int ci = 0; ci < (int)clauses.size(); ++ci) {
      bool neg = true;
      for (auto& l : clauses[ci].lits) neg = neg && l.neg;
      if (neg || getenv("LWB_ALLSTART")) starts.push_back(ci);
    }
    for (int limit = 1; limit <= budget.max_depth; ++limit) {
      stats.depth_reached = limit;
      bool cutoff = false;
      for (int ci : starts) {
        if (out_of_time) break;
        subst.clear();
        trail.clear();
        trace.clear();
        trace.push_back({ProofStep::Kind::Start, ci, -1, -1});
        instance = 0;
        std::vector<Literal> goals;
        for (auto& l : clauses[ci].lits) goals.push_back(rename_lit(l, 0));
        instance = 1;
        std::vector<Literal> path;
        std::vector<Literal> lemmas;
        if (solve(goals, 0, path, lemmas, limit, cutoff)) {
          stats.seconds = elapsed();
          return {Verdict::Proved, trace, stats};
        }
      }
      stats.seconds = elapsed();
      if (out_of_time) return {Verdict::Timeout, {}, stats};
      if (!cutoff) return {Verdict::Exhausted, {}, stats};
    }
    stats.seconds = elapsed();
    return {Verdict::Exhausted, {}, stats};
  }
};

struct Replayer : Unifier {
  const std::vector<Clause>& clauses;
  const std::vector<ProofStep>& trace;
  size_t pos = 1;
  int instance = 1;

  bool go(const std::vector<Literal>& goals, std::vector<Literal>& path,
          std::vector<Literal>& lemmas) {
    for (auto& goal : goals) {
      if (pos >= trace.size()) return false;
      ProofStep step = trace[pos++];
      switch (step.kind) {
        case ProofStep::Kind::Lemma: {
          if (step.path < 0 || step.path >= (int)lemmas.size()) return false;
          if (!lit_same(goal, lemmas[step.path])) return false;
          continue;  // the lemma list does not grow on a lemma step
        }
        case ProofStep::Kind::Reduction: {
          if (step.path < 0 || step.path >= (int)path.size()) return false;
          const Literal& k = path[step.path];
          if (k.neg == goal.neg || !connect(goal, k)) return false;
          break;
        }
        case ProofStep::Kind::Extension: {
          if (step.clause < 0 || step.clause >= (int)clauses.size())
            return false;
          const Clause& c = clauses[step.clause];
          if (step.literal < 0 || step.literal >= (int)c.lits.size())
            return false;
          int inst = instance++;
          Literal m = rename_lit(c.lits[step.literal], inst);
          if (m.neg == goal.neg || !connect(goal, m)) return false;
          std::vector<Literal> sub;
          for (int lj = 0; lj < (int)c.lits.size(); ++lj)
            if (lj != step.literal)
              sub.push_back(rename_lit(c.lits[lj], inst));
          path.push_back(goal);
          size_t lmark = lemmas.size();
          bool ok = go(sub, path, lemmas);
          lemmas.resize(lmark);
          path.pop_back();
          if (!ok) return false;
          break;
        }
        case ProofStep::Kind::Start:
          return false;
      }
      lemmas.push_back(goal);
    }
    return true;
  }
};

void collect_funcs(const TermPtr& t, Signature& sig) {
  if (t->kind == TermKind::App) {
    sig.add_func(t->name, (int)t->args.size());
    for (auto& a : t->args) collect_funcs(a, sig);
  }
}

// ------------------------------------------------- subformula naming (CNF)
// Distribution of nested disjunctions multiplies clause counts. Oversized
// disjuncts are replaced by fresh _D<k> atoms over their free variables,
// defined one-sidedly (definition implies disjunct): every subformula here
// sits under an even number of negations, so this keeps refutability.

long est_clauses(const FormulaPtr& f) {
  constexpr long kCap = 1'000'000;
  switch (f->kind) {
    case FKind::Truth:
      return 0;
    case FKind::And: {
      long s = 0;
      for (auto& k : f->kids) s = std::min(kCap, s + est_clauses(k));
      return s;
    }
    case FKind::Or: {
      long p = 1;
      for (auto& k : f->kids) {
        p = std::min(kCap, p * est_clauses(k));
        if (p == 0) return 0;
      }
      return p;
    }
    case FKind::ForallInd:
    case FKind::ExistsInd:
      return est_clauses(f->kids[0]);
    default:
      return 1;
  }
}

int next_d_index(const Signature& sig) {
  int ctr = 0;
  for (auto& [name, a] : sig.preds) {
    if (name.size() < 3 || name[0] != '_' || name[1] != 'D') continue;
    bool digits = true;
    for (size_t i = 2; i < name.size(); ++i)
      digits = digits && std::isdigit((unsigned char)name[i]);
    if (digits) ctr = std::max(ctr, std::stoi(name.substr(2)) + 1);
  }
  return ctr;
}

struct Namer {
  int ctr = 0;
  std::vector<FormulaPtr> defs;
  static constexpr long kOrBudget = 16;

  // replace f by d(free vars) and record forall* (~d(..) | f)
  FormulaPtr name(const FormulaPtr& f) {
    Signature s = free_symbols(f);
    std::vector<std::string> vars;
    std::vector<TermPtr> args;
    for (auto& v : s.free_vars) {
      if (v.quote != Quote::None) return f;  // leave quoted contexts alone
      vars.push_back(v.base);
      args.push_back(mk_var(v.base));
    }
    FormulaPtr atom = mk_atom("_D" + std::to_string(ctr++), args);
    defs.push_back(close_over(vars, mk_or({mk_not(atom), f})));
    return atom;
  }

  FormulaPtr tx(const FormulaPtr& f) {
    switch (f->kind) {
      case FKind::And: {
        std::vector<FormulaPtr> kids;
        kids.reserve(f->kids.size());
        for (auto& k : f->kids) kids.push_back(tx(k));
        return mk_and(std::move(kids));
      }
      case FKind::ForallInd:
        return mk_forall(f->var, tx(f->kids[0]));
      case FKind::ExistsInd:
        return mk_exists(f->var, tx(f->kids[0]));
      case FKind::Or: {
        std::vector<FormulaPtr> kids;
        kids.reserve(f->kids.size());
        for (auto& k : f->kids) kids.push_back(tx(k));
        while (true) {
          long prod = 1;
          int big = -1;
          long big_est = 1;
          for (int i = 0; i < (int)kids.size(); ++i) {
            long e = est_clauses(kids[i]);
            prod = std::min((long)1'000'000, prod * std::max(e, 1L));
            if (e > big_est) big = i, big_est = e;
          }
          if (prod <= kOrBudget || big < 0) break;
          FormulaPtr named = name(kids[big]);
          if (named == kids[big]) break;  // could not be named
          kids[big] = named;
        }
        return mk_or(std::move(kids));
      }
      default:
        return f;
    }
  }
};

ClauseSet build_clauses(const FormulaPtr& f) {
  Signature s0 = free_symbols(f);
  if (s0.has_macro_call) fail(Err::InvalidArg, "expand calls before proving");
  FormulaPtr closed = f;
  for (auto it = s0.free_vars.rbegin(); it != s0.free_vars.rend(); ++it)
    closed = mk_forall(*it, closed);
  FormulaPtr g = to_nnf(mk_not(closed));
  if (free_symbols(g).has_pred_quant) g = ground_so(g);
  FormulaPtr sk = skolemize(g);
  Namer nm{next_d_index(free_symbols(sk)), {}};
  sk = nm.tx(sk);
  if (!nm.defs.empty()) {
    std::vector<FormulaPtr> parts{sk};
    parts.insert(parts.end(), nm.defs.begin(), nm.defs.end());
    sk = mk_and(std::move(parts));
  }
  ClauseSet cs = clausify(sk);

  bool has_eq = false;
  Signature sig;
  for (auto& c : cs.clauses)
    for (auto& l : c.lits) {
      if (l.is_eq)
        has_eq = true;
      else
        sig.add_pred(l.pred, (int)l.args.size());
      for (auto& t : l.args) collect_funcs(t, sig);
    }
  if (has_eq)
    for (auto& ax : equality_axioms(sig)) {
      ClauseSet axc = clausify(to_nnf(ax));
      cs.clauses.insert(cs.clauses.end(), axc.clauses.begin(),
                        axc.clauses.end());
    }
  return cs;
}

}  // namespace

ProofResult refute(const ClauseSet& cs, const Budget& budget) {
  // first a heavily pruned pass; its failures are inconclusive, so a
  // complete pass follows on the remaining budget
  Engine e1;
  e1.clauses = sorted_clauses(cs);
  e1.restricted = true;
  e1.budget = budget;
  e1.budget.max_seconds = budget.max_seconds * 0.3;
  e1.budget.max_inferences = budget.max_inferences * 3 / 10;
  ProofResult r1 = e1.run();
  if (r1.verdict == Verdict::Proved) return r1;

  Engine e2;
  e2.clauses = sorted_clauses(cs);
  e2.budget = budget;
  e2.budget.max_seconds = std::max(0.0, budget.max_seconds - r1.stats.seconds);
  e2.budget.max_inferences =
      budget.max_inferences > r1.stats.inferences
          ? budget.max_inferences - r1.stats.inferences
          : 1;
  ProofResult r2 = e2.run();
  r2.stats.inferences += r1.stats.inferences;
  r2.stats.seconds += r1.stats.seconds;
  r2.stats.depth_reached =
      std::max(r2.stats.depth_reached, r1.stats.depth_reached);
  return r2;
}

ClauseSet clauses_for_validity(const FormulaPtr& f) {
  return build_clauses(f);
}

ProofResult prove_valid(const FormulaPtr& f, const Budget& budget) {
  return refute(build_clauses(f), budget);
}

bool replay_proof(const ClauseSet& cs, const std::vector<ProofStep>& trace) {
  if (trace.empty() || trace[0].kind != ProofStep::Kind::Start) return false;
  std::vector<Clause> sorted = sorted_clauses(cs);
  if (trace[0].clause < 0 || trace[0].clause >= (int)sorted.size())
    return false;
  Replayer r{{}, sorted, trace};
  std::vector<Literal> goals;
  for (auto& l : sorted[trace[0].clause].lits)
    goals.push_back(Unifier::rename_lit(l, 0));
  std::vector<Literal> path;
  std::vector<Literal> lemmas;
  return r.go(goals, path, lemmas) && r.pos == trace.size();
}

}  // namespace lwb
