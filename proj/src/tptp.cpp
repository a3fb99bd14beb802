#include "tptp.hpp"

#include <cctype>
#include <map>
#include <set>

namespace lwb {

namespace {

bool lower_word(const std::string& s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

bool upper_word(const std::string& s) {
  if (s.empty() || s[0] < 'A' || s[0] > 'Z') return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

// Collision-free renaming into the two TPTP namespaces (functors are lower
// words, variables upper words). Quoted constants and internally generated
// variable names (leading underscore) need renaming; everything else passes
// through unless taken.
struct Namer {
  std::set<std::string> used_sym;
  std::set<std::string> used_var;
  std::map<std::pair<std::string, bool>, std::string> quoted_names;
  std::map<VarKey, std::string> var_names;

  static std::string unique(const std::string& base, std::set<std::string>& used) {
    std::string cand = base;
    for (int i = 2; used.count(cand); ++i) cand = base + "_" + std::to_string(i);
    used.insert(cand);
    return cand;
  }

  const std::string& quoted(const std::string& base, bool neg) {
    auto it = quoted_names.find({base, neg});
    if (it == quoted_names.end())
      it = quoted_names
               .emplace(std::pair{base, neg},
                        unique((neg ? "qn_" : "q_") + base, used_sym))
               .first;
    return it->second;
  }

  const std::string& var(const VarKey& k) {
    auto it = var_names.find(k);
    if (it != var_names.end()) return it->second;
    std::string base = k.base;
    if (k.quote == Quote::Pos) base = "Q_" + base;
    if (k.quote == Quote::Neg) base = "QN_" + base;
    if (!upper_word(base)) base = "V" + base;
    return var_names.emplace(k, unique(base, used_var)).first->second;
  }
};

struct Writer {
  Namer nm;
  std::set<VarKey> bound;  // quoted term under a binder of its key = variable

  static std::string sym(const std::string& s) {
    if (lower_word(s)) return s;
    std::string quoted = "'";
    for (char c : s) {
      if (c == '\'' || c == '\\') quoted += '\\';
      quoted += c;
    }
    return quoted + "'";
  }

  std::string term(const TermPtr& t) {
    switch (t->kind) {
      case TermKind::Var:
        return nm.var({t->name, Quote::None});
      case TermKind::Const:
        return sym(t->name);
      case TermKind::Quoted: {
        VarKey k{t->name, t->qneg ? Quote::Neg : Quote::Pos};
        if (bound.count(k)) return nm.var(k);
        return sym(nm.quoted(t->name, t->qneg));
      }
      case TermKind::App: {
        std::string out = sym(t->name) + "(";
        for (size_t i = 0; i < t->args.size(); ++i)
          out += (i ? ", " : "") + term(t->args[i]);
        return out + ")";
      }
    }
    fail(Err::Internal, "unreachable term kind");
  }

  // FOF operands of binary connectives and quantifier bodies must be unit
  // formulas; parenthesize everything that is not atomic or a negation.
  std::string unit(const FormulaPtr& f) {
    switch (f->kind) {
      case FKind::Atom:
      case FKind::Eq:
      case FKind::Truth:
      case FKind::Falsity:
      case FKind::Not:
        return render(f);
      default:
        return "(" + render(f) + ")";
    }
  }

  std::string quantifier(const FormulaPtr& f) {
    FKind k = f->kind;
    std::vector<VarKey> vars;
    FormulaPtr body = f;
    while (body->kind == k) {
      vars.push_back(body->var);
      body = body->kids[0];
    }
    std::string out = (k == FKind::ForallInd) ? "! [" : "? [";
    std::vector<VarKey> fresh_bound;
    for (size_t i = 0; i < vars.size(); ++i) {
      out += (i ? ", " : "") + nm.var(vars[i]);
      if (bound.insert(vars[i]).second) fresh_bound.push_back(vars[i]);
    }
    out += "] : " + unit(body);
    for (auto& v : fresh_bound) bound.erase(v);
    return out;
  }

  std::string nary(const std::vector<FormulaPtr>& kids, const char* op) {
    std::string out;
    for (size_t i = 0; i < kids.size(); ++i)
      out += (i ? op : "") + unit(kids[i]);
    return out;
  }

  std::string render(const FormulaPtr& f) {
    switch (f->kind) {
      case FKind::Truth:
        return "$true";
      case FKind::Falsity:
        return "$false";
      case FKind::Atom: {
        if (is_upper_ident(f->name))
          fail(Err::Unsupported, "free predicate variable in TPTP export: " + f->name);
        if (f->args.empty()) return sym(f->name);
        std::string out = sym(f->name) + "(";
        for (size_t i = 0; i < f->args.size(); ++i)
          out += (i ? ", " : "") + term(f->args[i]);
        return out + ")";
      }
      case FKind::Eq:
        return term(f->args[0]) + " = " + term(f->args[1]);
      case FKind::Not:
        if (f->kids[0]->kind == FKind::Eq)
          return term(f->kids[0]->args[0]) + " != " + term(f->kids[0]->args[1]);
        return "~ " + unit(f->kids[0]);
      case FKind::And:
        return nary(f->kids, " & ");
      case FKind::Or:
        return nary(f->kids, " | ");
      case FKind::Implies:
        return unit(f->kids[0]) + " => " + unit(f->kids[1]);
      case FKind::Iff:
        return unit(f->kids[0]) + " <=> " + unit(f->kids[1]);
      case FKind::ForallInd:
      case FKind::ExistsInd:
        return quantifier(f);
      case FKind::ForallPred:
      case FKind::ExistsPred:
        fail(Err::Unsupported, "predicate quantifier in TPTP export");
      case FKind::MacroCall:
        fail(Err::Unsupported, "unexpanded macro call in TPTP export");
      case FKind::Box:
      case FKind::Dia:
        fail(Err::Unsupported, "modal operator in TPTP export");
    }
    fail(Err::Internal, "unreachable formula kind");
  }
};

}  // namespace

std::string export_tptp(const FormulaPtr& f, TptpRole role,
                        const std::string& name) {
  Signature sig = free_symbols(f);
  Writer w;
  for (auto& [n, a] : sig.preds) {
    (void)a;
    w.nm.used_sym.insert(n);
  }
  for (auto& [n, a] : sig.funcs) {
    (void)a;
    w.nm.used_sym.insert(n);
  }
  for (auto& n : sig.consts) w.nm.used_sym.insert(n);

  FormulaPtr g = f;
  for (auto it = sig.free_vars.rbegin(); it != sig.free_vars.rend(); ++it)
    g = mk_forall(*it, g);

  std::string label = name;
  if (label.empty()) label = (role == TptpRole::Conjecture) ? "c1" : "a1";
  const char* role_text = (role == TptpRole::Conjecture) ? "conjecture" : "axiom";
  return "fof(" + label + ", " + role_text + ", " + w.render(g) + ").";
}

}  // namespace lwb
