// Symbolic decision engine for formulas with predicate quantifiers on small
// domains. Ground atoms become decision-diagram variables; a predicate
// quantifier owns a block of n^k variables that is quantified out and the
// block is reused by the next quantifier at the same depth. Constants are
// enumerated outside the diagram, equalities are decided during grounding.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "model.hpp"

namespace lwb {

namespace {

constexpr int kMaxNodes = 1 << 21;  // ids must pack three to a 64-bit key

struct Bdd {
  struct Node {
    int var, lo, hi;
  };
  std::vector<Node> nodes;
  std::unordered_map<uint64_t, int> unique;
  std::unordered_map<uint64_t, int> ite_memo;

  Bdd() {
    nodes.push_back({1 << 21, -1, -1});  // 0: false
    nodes.push_back({1 << 21, -1, -1});  // 1: true
  }

  static uint64_t key(int a, int b, int c) {
    return ((uint64_t)a << 42) | ((uint64_t)b << 21) | (uint64_t)c;
  }

  int mk(int var, int lo, int hi) {
    if (lo == hi) return lo;
    uint64_t k = key(var, lo, hi);
    auto it = unique.find(k);
    if (it != unique.end()) return it->second;
    if ((int)nodes.size() >= kMaxNodes)
      fail(Err::Resource, "symbolic engine node limit exceeded");
    nodes.push_back({var, lo, hi});
    int id = (int)nodes.size() - 1;
    unique.emplace(k, id);
    return id;
  }

  int co(int f, int var, bool hi) const {
    const Node& n = nodes[f];
    if (n.var != var) return f;
    return hi ? n.hi : n.lo;
  }

  int ite(int f, int g, int h) {
    if (f == 1) return g;
    if (f == 0) return h;
    if (g == h) return g;
    if (g == 1 && h == 0) return f;
    uint64_t k = key(f, g, h);
    auto it = ite_memo.find(k);
    if (it != ite_memo.end()) return it->second;
    int var = nodes[f].var;
    if (nodes[g].var < var) var = nodes[g].var;
    if (nodes[h].var < var) var = nodes[h].var;
    int lo = ite(co(f, var, false), co(g, var, false), co(h, var, false));
    int hi = ite(co(f, var, true), co(g, var, true), co(h, var, true));
    int r = mk(var, lo, hi);
    ite_memo.emplace(k, r);
    return r;
  }

  int land(int a, int b) { return ite(a, b, 0); }
  int lor(int a, int b) { return ite(a, 1, b); }
  int lnot(int a) { return ite(a, 0, 1); }
  int limp(int a, int b) { return ite(a, b, 1); }
  int liff(int a, int b) { return ite(a, b, lnot(b)); }

  // quantify out every variable in [lo_var, hi_var); conj picks forall/exists
  int quant_block(int f, int lo_var, int hi_var, bool conj,
                  std::unordered_map<int, int>& memo) {
    if (f <= 1) return f;
    Node n = nodes[f];  // by value: recursion below may reallocate the table
    if (n.var >= hi_var) return f;
    auto it = memo.find(f);
    if (it != memo.end()) return it->second;
    int lo = quant_block(n.lo, lo_var, hi_var, conj, memo);
    int hi = quant_block(n.hi, lo_var, hi_var, conj, memo);
    int r;
    if (n.var >= lo_var)
      r = conj ? land(lo, hi) : lor(lo, hi);
    else
      r = mk(n.var, lo, hi);
    memo.emplace(f, r);
    return r;
  }
};

struct Grounder {
  const Interpretation& m;  // supplies n and constant values; preds unused
  Bdd& bdd;
  // base variable id of each interpretation-level predicate
  std::map<std::pair<std::string, int>, int> free_base;
  int watermark;  // first id available to predicate-quantifier blocks

  std::map<VarKey, int> env;
  std::map<std::string, std::pair<int, int>> pred_blocks;  // name -> base,ar

  int pow(int b, int e) const {
    int r = 1;
    while (e--) r *= b;
    return r;
  }

  int term_value(const TermPtr& t) {
    if (auto k = term_var_key(*t)) {
      auto it = env.find(*k);
      if (it != env.end()) return it->second;
    }
    if (t->kind == TermKind::App)
      fail(Err::Unsupported, "function symbols not supported here");
    std::string key = t->kind == TermKind::Quoted
                          ? (t->qneg ? "'~" + t->name + "'" : "'" + t->name + "'")
                          : t->name;
    auto it = m.consts.find(key);
    if (it == m.consts.end()) fail(Err::Internal, "unassigned constant " + key);
    return it->second;
  }

  int flat_index(const std::vector<TermPtr>& args) {
    int idx = 0;
    for (auto& a : args) idx = idx * m.n + term_value(a);
    return idx;
  }

  int ground(const FormulaPtr& f) {
    switch (f->kind) {
      case FKind::Truth:
        return 1;
      case FKind::Falsity:
        return 0;
      case FKind::Eq:
        return term_value(f->args[0]) == term_value(f->args[1]) ? 1 : 0;
      case FKind::Atom: {
        auto pb = pred_blocks.find(f->name);
        if (pb != pred_blocks.end() && pb->second.second == (int)f->args.size())
          return bdd.mk(pb->second.first + flat_index(f->args), 0, 1);
        if (f->args.empty() && env.count(VarKey{f->name, Quote::None}))
          fail(Err::Internal, "individual variable used as formula");
        auto fb = free_base.find({f->name, (int)f->args.size()});
        if (fb == free_base.end())
          fail(Err::Internal, "atom outside collected signature");
        return bdd.mk(fb->second + flat_index(f->args), 0, 1);
      }
      case FKind::Not:
        return bdd.lnot(ground(f->kids[0]));
      case FKind::And: {
        int r = 1;
        for (auto& k : f->kids) r = bdd.land(r, ground(k));
        return r;
      }
      case FKind::Or: {
        int r = 0;
        for (auto& k : f->kids) r = bdd.lor(r, ground(k));
        return r;
      }
      case FKind::Implies:
        return bdd.limp(ground(f->kids[0]), ground(f->kids[1]));
      case FKind::Iff:
        return bdd.liff(ground(f->kids[0]), ground(f->kids[1]));
      case FKind::ForallInd:
      case FKind::ExistsInd: {
        bool conj = f->kind == FKind::ForallInd;
        auto saved = env.find(f->var);
        int old = saved == env.end() ? -1 : saved->second;
        int r = conj ? 1 : 0;
        for (int d = 0; d < m.n; ++d) {
          env[f->var] = d;
          int g = ground(f->kids[0]);
          r = conj ? bdd.land(r, g) : bdd.lor(r, g);
        }
        if (old >= 0)
          env[f->var] = old;
        else
          env.erase(f->var);
        return r;
      }
      case FKind::ForallPred:
      case FKind::ExistsPred: {
        bool conj = f->kind == FKind::ForallPred;
        int cells = pow(m.n, f->pred_arity);
        int base = watermark;
        watermark += cells;
        if (watermark >= kMaxNodes)
          fail(Err::Resource, "too many ground atoms");
        auto saved = pred_blocks.find(f->name);
        auto old = saved == pred_blocks.end()
                       ? std::pair<int, int>{-1, -1}
                       : saved->second;
        pred_blocks[f->name] = {base, f->pred_arity};
        int body = ground(f->kids[0]);
        if (old.first >= 0)
          pred_blocks[f->name] = old;
        else
          pred_blocks.erase(f->name);
        watermark = base;
        std::unordered_map<int, int> memo;
        return bdd.quant_block(body, base, base + cells, conj, memo);
      }
      default:
        fail(Err::Unsupported,
             "symbolic engine expects an expanded non-modal formula");
    }
  }
};

// every interpretation-level atom gets a fixed variable id ahead of time
bool valid_at_size(const FormulaPtr& f, const Signature& sig, int n) {
  // enumerate constant assignments (constants, quoted constants, free vars)
  std::vector<std::string> names;
  for (auto& c : sig.consts) names.push_back(c);
  for (auto& q : sig.quoted)
    names.push_back(q.second ? "'~" + q.first + "'" : "'" + q.first + "'");
  for (auto& v : sig.free_vars) {
    if (v.quote != Quote::None)
      fail(Err::Unsupported, "free quoted variables not supported here");
    names.push_back(v.base);
  }
  if (!sig.funcs.empty())
    fail(Err::Unsupported, "function symbols not supported here");

  Interpretation m;
  m.n = n;

  std::vector<int> dial(names.size(), 0);
  for (;;) {
    Bdd bdd;
    Grounder g{m, bdd, {}, 0, {}, {}};
    for (auto& [pk, ar] : sig.preds) {
      g.free_base[{pk, ar}] = g.watermark;
      g.watermark += g.pow(n, ar);
    }
    if (g.watermark >= kMaxNodes) fail(Err::Resource, "too many ground atoms");
    for (size_t i = 0; i < names.size(); ++i) m.consts[names[i]] = dial[i];
    if (g.ground(f) != 1) return false;

    size_t i = 0;
    while (i < dial.size() && ++dial[i] == n) dial[i++] = 0;
    if (i == dial.size()) return true;
  }
}

}  // namespace

bool check_so_valid(const FormulaPtr& f, int max_n) {
  Signature sig = free_symbols(f);
  if (sig.has_macro_call)
    fail(Err::InvalidArg, "expand calls before checking");
  for (int n = 1; n <= max_n; ++n)
    if (!valid_at_size(f, sig, n)) return false;
  return true;
}

bool check_so_equivalence(const FormulaPtr& a, const FormulaPtr& b,
                          int max_n) {
  return check_so_valid(mk_iff(a, b), max_n);
}

}  // namespace lwb
