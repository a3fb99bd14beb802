#include "printer.hpp"

namespace lwb {

namespace {

// Binding strength. Quantifiers scope maximally right, so they print weakest
// and get parentheses in any child position.
constexpr int kQuant = 0;
constexpr int kIff = 1;
constexpr int kImplies = 2;
constexpr int kOr = 3;
constexpr int kAnd = 4;
constexpr int kNot = 5;
constexpr int kAtom = 10;

struct Printer {
  Style st;
  std::string out;

  void lit(const char* a, const char* u, const char* l) {
    out += st == Style::Ascii ? a : st == Style::Unicode ? u : l;
  }

  void name(const std::string& n) {
    if (st != Style::Latex) {
      out += n;
      return;
    }
    for (char c : n) {
      if (c == '_')
        out += "\\_";
      else
        out += c;
    }
  }

  void term(const TermPtr& t) {
    switch (t->kind) {
      case TermKind::Var:
      case TermKind::Const:
        name(t->name);
        break;
      case TermKind::Quoted:
        if (t->qneg)
          lit("'~", "⟨¬", "\\langle\\lnot ");
        else
          lit("'", "⟨", "\\langle ");
        name(t->name);
        lit("'", "⟩", "\\rangle ");
        break;
      case TermKind::App:
        name(t->name);
        out += '(';
        for (size_t i = 0; i < t->args.size(); ++i) {
          if (i) out += ", ";
          term(t->args[i]);
        }
        out += ')';
        break;
    }
  }

  void args(const std::vector<TermPtr>& as) {
    if (as.empty()) return;
    out += '(';
    for (size_t i = 0; i < as.size(); ++i) {
      if (i) out += ", ";
      term(as[i]);
    }
    out += ')';
  }

  void nary(const FormulaPtr& f, int min_prec, int prec, const char* a,
            const char* u, const char* l) {
    bool paren = prec < min_prec;
    if (paren) out += '(';
    for (size_t i = 0; i < f->kids.size(); ++i) {
      if (i) lit(a, u, l);
      formula(f->kids[i], prec + 1);
    }
    if (paren) out += ')';
  }

  void var_key(const VarKey& k) {
    if (k.quote == Quote::None) {
      name(k.base);
      return;
    }
    if (k.quote == Quote::Neg)
      lit("'~", "⟨¬", "\\langle\\lnot ");
    else
      lit("'", "⟨", "\\langle ");
    name(k.base);
    lit("'", "⟩", "\\rangle ");
  }

  void formula(const FormulaPtr& f, int min_prec) {
    switch (f->kind) {
      case FKind::Truth:
        lit("true", "⊤", "\\top ");
        break;
      case FKind::Falsity:
        lit("false", "⊥", "\\bot ");
        break;
      case FKind::Atom:
      case FKind::MacroCall:
        name(f->name);
        args(f->args);
        break;
      case FKind::Eq:
        term(f->args[0]);
        lit(" = ", " = ", " = ");
        term(f->args[1]);
        break;
      case FKind::Not:
        if (f->kids[0]->kind == FKind::Eq) {
          // prints back exactly as the != the parser desugared
          bool paren = kNot < min_prec;
          if (paren) out += '(';
          term(f->kids[0]->args[0]);
          lit(" != ", " ≠ ", " \\neq ");
          term(f->kids[0]->args[1]);
          if (paren) out += ')';
        } else {
          bool paren = kNot < min_prec;
          if (paren) out += '(';
          lit("~", "¬", "\\lnot ");
          formula(f->kids[0], kNot + 1);
          if (paren) out += ')';
        }
        break;
      case FKind::And:
        nary(f, min_prec, kAnd, " & ", " ∧ ", " \\land ");
        break;
      case FKind::Or:
        nary(f, min_prec, kOr, " | ", " ∨ ", " \\lor ");
        break;
      case FKind::Implies: {
        bool paren = kImplies < min_prec;
        if (paren) out += '(';
        formula(f->kids[0], kImplies + 1);
        lit(" -> ", " → ", " \\rightarrow ");
        formula(f->kids[1], kImplies);
        if (paren) out += ')';
        break;
      }
      case FKind::Iff: {
        bool paren = kIff < min_prec;
        if (paren) out += '(';
        formula(f->kids[0], kIff + 1);
        lit(" <-> ", " ↔ ", " \\leftrightarrow ");
        formula(f->kids[1], kIff);
        if (paren) out += ')';
        break;
      }
      case FKind::ForallInd:
      case FKind::ExistsInd: {
        bool paren = kQuant < min_prec;
        if (paren) out += '(';
        if (f->kind == FKind::ForallInd)
          lit("all ", "∀", "\\forall ");
        else
          lit("ex ", "∃", "\\exists ");
        var_key(f->var);
        out += ": ";
        formula(f->kids[0], kQuant);
        if (paren) out += ')';
        break;
      }
      case FKind::Box:
      case FKind::Dia: {
        bool paren = kNot < min_prec;
        if (paren) out += '(';
        if (f->kind == FKind::Box)
          lit("[]", "□", "\\Box ");
        else
          lit("<>", "◇", "\\Diamond ");
        formula(f->kids[0], kNot + 1);
        if (paren) out += ')';
        break;
      }
      case FKind::ForallPred:
      case FKind::ExistsPred: {
        bool paren = kQuant < min_prec;
        if (paren) out += '(';
        if (f->kind == FKind::ForallPred)
          lit("all2 ", "∀", "\\forall ");
        else
          lit("ex2 ", "∃", "\\exists ");
        name(f->name);
        out += '/';
        out += std::to_string(f->pred_arity);
        out += ": ";
        formula(f->kids[0], kQuant);
        if (paren) out += ')';
        break;
      }
    }
  }
};

}  // namespace

std::string print_term(const TermPtr& t, Style style) {
  Printer p{style, {}};
  p.term(t);
  return p.out;
}

std::string print_formula(const FormulaPtr& f, Style style) {
  Printer p{style, {}};
  p.formula(f, kQuant);
  return p.out;
}

}  // namespace lwb
