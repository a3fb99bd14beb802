#include "macro.hpp"

#include <algorithm>
#include <set>

namespace lwb {

void KnowledgeBase::add(ParsedDef d) {
  if (d.name == "last_result")
    fail(Err::DuplicateDef, "'last_result' is built in", d.line);
  std::set<std::string> names(d.params.begin(), d.params.end());
  if (names.size() != d.params.size())
    fail(Err::InvalidArg, "duplicate parameter in '" + d.name + "'", d.line);
  for (auto& w : d.wheres) {
    if (!names.insert(w.name).second)
      fail(Err::InvalidArg,
           "where-clause name '" + w.name + "' reused in '" + d.name + "'",
           d.line);
    if (w.kind != ParsedDef::Where::K::LastResult &&
        std::find(d.params.begin(), d.params.end(), w.param) == d.params.end())
      fail(Err::InvalidArg,
           "where-clause in '" + d.name + "' quotes unknown parameter '" +
               w.param + "'",
           d.line);
  }
  std::pair<std::string, int> key{d.name, (int)d.params.size()};
  if (index_.count(key))
    fail(Err::DuplicateDef,
         "duplicate definition '" + d.name + "/" +
             std::to_string(d.params.size()) + "'",
         d.line);
  index_[key] = order_.size();
  order_.push_back(std::move(d));
}

void KnowledgeBase::add_text(std::string_view text) {
  for (auto& d : parse_kb_text(text)) add(std::move(d));
}

const ParsedDef* KnowledgeBase::find(const std::string& name,
                                     int arity) const {
  auto it = index_.find({name, arity});
  return it == index_.end() ? nullptr : &order_[it->second];
}

namespace {

// Replace 0-ary atoms named in `map` by whole formulas (where-bound results).
FormulaPtr replace_formula_names(
    const FormulaPtr& f, const std::map<std::string, FormulaPtr>& map) {
  switch (f->kind) {
    case FKind::Atom:
      if (f->args.empty()) {
        auto it = map.find(f->name);
        if (it != map.end()) return it->second;
      }
      return f;
    case FKind::ForallPred:
    case FKind::ExistsPred:
      if (map.count(f->name)) return f;  // shadowed
      [[fallthrough]];
    default: {
      if (f->kids.empty()) return f;
      std::vector<FormulaPtr> kids;
      kids.reserve(f->kids.size());
      for (auto& k : f->kids) kids.push_back(replace_formula_names(k, map));
      auto g = std::make_shared<Formula>(*f);
      const_cast<Formula&>(*g).kids = std::move(kids);
      return g;
    }
  }
}

struct Expander {
  const KnowledgeBase& kb;
  ExpansionState& st;
  std::set<std::pair<std::string, int>> in_progress;
  std::multiset<std::pair<std::string, int>> shadowed;

  FormulaPtr call(const ParsedDef& d, const std::vector<TermPtr>& args) {
    std::pair<std::string, int> key{d.name, (int)d.params.size()};
    if (in_progress.count(key))
      fail(Err::CyclicDef, "definition cycle through '" + d.name + "'");

    Subst s;
    std::map<std::string, FormulaPtr> fsubst;
    for (size_t i = 0; i < d.params.size(); ++i) {
      const TermPtr& t = args[i];
      s.var_map[{d.params[i], Quote::None}] = t;
      if (t->kind == TermKind::Const || t->kind == TermKind::Var)
        s.pred_map[d.params[i]] = t->name;
      else if (pred_occurs(d.body, d.params[i]))
        fail(Err::BadMacroCall,
             "argument " + std::to_string(i + 1) + " of '" + d.name +
                 "' is used as a predicate and must be a name");
    }
    for (auto& w : d.wheres) {
      if (w.kind == ParsedDef::Where::K::LastResult) {
        if (!st.last_result)
          fail(Err::LastResultUnset,
               "'" + d.name + "' needs a previous result");
        fsubst[w.name] = st.last_result;
        continue;
      }
      size_t idx =
          std::find(d.params.begin(), d.params.end(), w.param) -
          d.params.begin();
      const TermPtr& t = args[idx];
      if (t->kind != TermKind::Const && t->kind != TermKind::Var)
        fail(Err::BadMacroCall, "'" + d.name + "' can only quote a name");
      bool neg = w.kind == ParsedDef::Where::K::QuoteNeg;
      s.var_map[{w.name, Quote::None}] = mk_quoted(t->name, neg);
    }

    FormulaPtr body = substitute(d.body, s, st.fresh);
    if (!fsubst.empty()) body = replace_formula_names(body, fsubst);
    in_progress.insert(key);
    FormulaPtr out = go(body);
    in_progress.erase(key);
    return out;
  }

  FormulaPtr go(const FormulaPtr& f) {
    switch (f->kind) {
      case FKind::Atom:
      case FKind::MacroCall: {
        std::pair<std::string, int> key{f->name, (int)f->args.size()};
        if (!shadowed.count(key)) {
          if (const ParsedDef* d = kb.find(f->name, (int)f->args.size()))
            return call(*d, f->args);
          if (f->name == "last_result" && f->args.empty()) {
            if (!st.last_result)
              fail(Err::LastResultUnset, "no previous result is stored");
            return st.last_result;
          }
        }
        if (f->kind == FKind::MacroCall)
          fail(Err::UnknownMacro, "no definition '" + f->name + "/" +
                                      std::to_string(f->args.size()) + "'");
        return f;
      }
      case FKind::ForallPred:
      case FKind::ExistsPred: {
        std::pair<std::string, int> key{f->name, f->pred_arity};
        auto it = shadowed.insert(key);
        FormulaPtr body = go(f->kids[0]);
        shadowed.erase(it);
        return f->kind == FKind::ForallPred
                   ? mk_forall_pred(f->name, f->pred_arity, body)
                   : mk_exists_pred(f->name, f->pred_arity, body);
      }
      default: {
        if (f->kids.empty()) return f;
        std::vector<FormulaPtr> kids;
        kids.reserve(f->kids.size());
        for (auto& k : f->kids) kids.push_back(go(k));
        auto g = std::make_shared<Formula>(*f);
        const_cast<Formula&>(*g).kids = std::move(kids);
        return g;
      }
    }
  }
};

}  // namespace

FormulaPtr expand(const FormulaPtr& f, const KnowledgeBase& kb,
                  ExpansionState& st) {
  Expander e{kb, st, {}, {}};
  return e.go(f);
}

}  // namespace lwb
