#include "model.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lwb {

namespace {

uint64_t ipow(uint64_t b, int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::string const_key(const Term& t) {
  switch (t.kind) {
    case TermKind::Var: return t.name;
    case TermKind::Const: return t.name;
    case TermKind::Quoted:
      return std::string("'") + (t.qneg ? "~" : "") + t.name + "'";
    default: return {};
  }
}

struct Evaluator {
  const Interpretation& m;
  EvalStats* stats;
  std::map<VarKey, int> env;
  std::map<std::string, std::pair<int, const std::vector<uint8_t>*>> pred_env;

  int term(const TermPtr& t) {
    if (auto k = term_var_key(*t)) {
      auto it = env.find(*k);
      if (it != env.end()) return it->second;
    }
    if (t->kind == TermKind::App) {
      auto it = m.funcs.find({t->name, (int)t->args.size()});
      if (it == m.funcs.end())
        fail(Err::InvalidArg, "no table for function '" + t->name + "'");
      uint64_t idx = 0;
      for (auto& a : t->args) idx = idx * m.n + term(a);
      return it->second[idx];
    }
    std::string key = const_key(*t);
    auto it = m.consts.find(key);
    if (it == m.consts.end())
      fail(Err::InvalidArg, "no value for constant '" + key + "'");
    return it->second;
  }

  bool atom(const FormulaPtr& f) {
    uint64_t idx = 0;
    for (auto& a : f->args) idx = idx * m.n + term(a);
    auto pe = pred_env.find(f->name);
    if (pe != pred_env.end() && pe->second.first == (int)f->args.size())
      return (*pe->second.second)[idx] != 0;
    auto it = m.preds.find({f->name, (int)f->args.size()});
    if (it == m.preds.end())
      fail(Err::InvalidArg, "no table for predicate '" + f->name + "'");
    return it->second[idx] != 0;
  }

  bool go(const FormulaPtr& f) {
    switch (f->kind) {
      case FKind::Truth: return true;
      case FKind::Falsity: return false;
      case FKind::Atom: return atom(f);
      case FKind::Eq: return term(f->args[0]) == term(f->args[1]);
      case FKind::Not: return !go(f->kids[0]);
      case FKind::And:
        for (auto& k : f->kids)
          if (!go(k)) return false;
        return true;
      case FKind::Or:
        for (auto& k : f->kids)
          if (go(k)) return true;
        return false;
      case FKind::Implies: return !go(f->kids[0]) || go(f->kids[1]);
      case FKind::Iff: return go(f->kids[0]) == go(f->kids[1]);
      case FKind::ForallInd:
      case FKind::ExistsInd: {
        bool forall = f->kind == FKind::ForallInd;
        auto saved = env.find(f->var);
        int old = saved == env.end() ? -1 : saved->second;
        for (int d = 0; d < m.n; ++d) {
          env[f->var] = d;
          bool v = go(f->kids[0]);
          if (v != forall) {
            restore(f->var, old);
            return !forall;
          }
        }
        restore(f->var, old);
        return forall;
      }
      case FKind::ForallPred:
      case FKind::ExistsPred: {
        bool forall = f->kind == FKind::ForallPred;
        uint64_t cells = ipow(m.n, f->pred_arity);
        if (cells > 20)
          fail(Err::Resource, "predicate quantifier over " +
                                  std::to_string(cells) +
                                  " cells exceeds the enumeration limit");
        std::vector<uint8_t> table(cells, 0);
        auto saved = pred_env.find(f->name);
        auto old = saved == pred_env.end()
                       ? std::pair<int, const std::vector<uint8_t>*>{-1, nullptr}
                       : saved->second;
        bool result = forall;
        for (uint64_t mask = 0; mask < (uint64_t(1) << cells); ++mask) {
          for (uint64_t i = 0; i < cells; ++i) table[i] = (mask >> i) & 1;
          pred_env[f->name] = {f->pred_arity, &table};
          if (stats) ++stats->relations;
          if (go(f->kids[0]) != forall) {
            result = !forall;
            break;
          }
        }
        if (old.second)
          pred_env[f->name] = old;
        else
          pred_env.erase(f->name);
        return result;
      }
      case FKind::MacroCall:
        fail(Err::InvalidArg, "cannot evaluate an unexpanded call");
      case FKind::Box:
      case FKind::Dia:
        fail(Err::InvalidArg, "cannot evaluate a modal operator directly");
    }
    fail(Err::Internal, "unhandled formula kind");
  }

  void restore(const VarKey& k, int old) {
    if (old < 0)
      env.erase(k);
    else
      env[k] = old;
  }
};

bool contains_kind(const FormulaPtr& f, FKind a, FKind b) {
  if (f->kind == a || f->kind == b) return true;
  for (auto& k : f->kids)
    if (contains_kind(k, a, b)) return true;
  return false;
}

}  // namespace

std::string Interpretation::describe() const {
  std::ostringstream os;
  os << "domain size " << n;
  for (auto& [name, v] : consts) os << ", " << name << " = " << v;
  for (auto& [key, table] : preds) {
    os << ", " << key.first << " = {";
    bool first = true;
    uint64_t cells = table.size();
    for (uint64_t i = 0; i < cells; ++i) {
      if (!table[i]) continue;
      if (!first) os << ", ";
      first = false;
      // decode row-major index back into a tuple
      std::vector<int> tuple(key.second);
      uint64_t rest = i;
      for (int j = key.second - 1; j >= 0; --j) {
        tuple[j] = int(rest % n);
        rest /= n;
      }
      os << "(";
      for (int j = 0; j < key.second; ++j)
        os << (j ? "," : "") << tuple[j];
      os << ")";
    }
    os << "}";
  }
  for (auto& [key, table] : funcs) {
    os << ", " << key.first << " = [";
    for (size_t i = 0; i < table.size(); ++i)
      os << (i ? "," : "") << table[i];
    os << "]";
  }
  return os.str();
}

bool eval_formula(const FormulaPtr& f, const Interpretation& m,
                  EvalStats* stats) {
  Evaluator ev{m, stats, {}, {}};
  return ev.go(f);
}

std::optional<Interpretation> find_countermodel(const FormulaPtr& f, int max_n,
                                                uint64_t max_interps) {
  if (contains_kind(f, FKind::Box, FKind::Dia))
    fail(Err::InvalidArg, "translate modal operators before model search");
  Signature sig = free_symbols(f);
  if (sig.has_macro_call)
    fail(Err::InvalidArg, "expand calls before model search");

  std::vector<std::string> const_names(sig.consts.begin(), sig.consts.end());
  for (auto& [base, neg] : sig.quoted)
    const_names.push_back(std::string("'") + (neg ? "~" : "") + base + "'");
  for (auto& v : sig.free_vars)
    const_names.push_back(v.quote == Quote::None
                              ? v.base
                              : std::string("'") +
                                    (v.quote == Quote::Neg ? "~" : "") +
                                    v.base + "'");
  std::sort(const_names.begin(), const_names.end());

  std::vector<std::pair<std::string, int>> pred_keys(sig.preds.begin(),
                                                     sig.preds.end());
  for (auto& [name, ar] : sig.pred_vars) pred_keys.push_back({name, ar});
  std::sort(pred_keys.begin(), pred_keys.end());
  std::vector<std::pair<std::string, int>> func_keys(sig.funcs.begin(),
                                                     sig.funcs.end());

  uint64_t tried = 0;
  for (int n = 1; n <= max_n; ++n) {
    Interpretation m;
    m.n = n;
    for (auto& [key, ar] : pred_keys) {
      uint64_t cells = ipow(n, ar);
      if (cells > 62)
        fail(Err::Resource, "predicate '" + key + "' needs " +
                                std::to_string(cells) + " cells at size " +
                                std::to_string(n));
      m.preds[{key, ar}] = std::vector<uint8_t>(cells, 0);
    }
    for (auto& [key, ar] : func_keys)
      m.funcs[{key, ar}] = std::vector<int>(ipow(n, ar), 0);

    // dial order: constants (canonical), then predicate tables, then
    // function tables; first falsifying interpretation wins
    std::function<bool(size_t, int)> consts_dial;
    std::function<bool(size_t)> preds_dial;
    std::function<bool(size_t)> funcs_dial;

    auto leaf = [&]() -> bool {
      if (++tried > max_interps)
        fail(Err::Resource,
             "countermodel search exceeded " + std::to_string(max_interps) +
                 " interpretations");
      return !eval_formula(f, m);
    };

    funcs_dial = [&](size_t i) -> bool {
      if (i == func_keys.size()) return leaf();
      auto& table = m.funcs[func_keys[i]];
      std::function<bool(size_t)> cells = [&](size_t c) -> bool {
        if (c == table.size()) return funcs_dial(i + 1);
        for (int v = 0; v < n; ++v) {
          table[c] = v;
          if (cells(c + 1)) return true;
        }
        table[c] = 0;
        return false;
      };
      return cells(0);
    };

    preds_dial = [&](size_t i) -> bool {
      if (i == pred_keys.size()) return funcs_dial(0);
      auto& table = m.preds[pred_keys[i]];
      uint64_t cells = table.size();
      for (uint64_t mask = 0; mask < (uint64_t(1) << cells); ++mask) {
        for (uint64_t c = 0; c < cells; ++c) table[c] = (mask >> c) & 1;
        if (preds_dial(i + 1)) return true;
      }
      return false;
    };

    consts_dial = [&](size_t i, int used) -> bool {
      if (i == const_names.size()) return preds_dial(0);
      // canonical form: each constant value at most one past the range in use
      int limit = std::min(n - 1, used);
      for (int v = 0; v <= limit; ++v) {
        m.consts[const_names[i]] = v;
        if (consts_dial(i + 1, std::max(used, v + 1))) return true;
      }
      return false;
    };

    if (consts_dial(0, 0)) return m;
  }
  return std::nullopt;
}

}  // namespace lwb
