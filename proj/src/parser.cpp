#include "parser.hpp"

#include <algorithm>
#include <cctype>

#include "modal.hpp"

namespace lwb {

namespace {

enum class Tk {
  Ident,
  Num,
  QuotedName,
  LPar,
  RPar,
  Comma,
  Colon,
  Slash,
  Amp,
  Pipe,
  Arrow,
  IffOp,
  Tilde,
  EqOp,
  NeqOp,
  Dot,
  Assign,
  BoxOp,
  DiaOp,
  End,
};

struct Token {
  Tk t;
  std::string text;
  bool qneg = false;
  int line = 1, col = 1;
};

struct Lexer {
  std::string_view src;
  size_t pos = 0;
  int line = 1, col = 1;

  [[noreturn]] void err(const std::string& msg) const {
    fail(Err::Syntax, msg, line, col);
  }

  void bump(size_t n = 1) {
    for (size_t i = 0; i < n && pos < src.size(); ++i, ++pos) {
      if (src[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  }

  char at(size_t off = 0) const {
    return pos + off < src.size() ? src[pos + off] : '\0';
  }

  static bool ident_start(char c) {
    return std::isalpha((unsigned char)c) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum((unsigned char)c) || c == '_';
  }

  std::string ident() {
    size_t start = pos;
    while (ident_char(at())) bump();
    return std::string(src.substr(start, pos - start));
  }

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      while (std::isspace((unsigned char)at())) bump();
      if (at() == '%') {
        while (at() && at() != '\n') bump();
        continue;
      }
      Token tok;
      tok.line = line;
      tok.col = col;
      char c = at();
      if (!c) {
        tok.t = Tk::End;
        out.push_back(tok);
        return out;
      }
      if (ident_start(c)) {
        tok.t = Tk::Ident;
        tok.text = ident();
      } else if (std::isdigit((unsigned char)c)) {
        tok.t = Tk::Num;
        size_t start = pos;
        while (std::isdigit((unsigned char)at())) bump();
        tok.text = std::string(src.substr(start, pos - start));
      } else if (c == '\'') {
        bump();
        tok.t = Tk::QuotedName;
        if (at() == '~') {
          tok.qneg = true;
          bump();
        }
        if (!ident_start(at())) err("expected a name inside quotes");
        tok.text = ident();
        if (at() != '\'') err("unterminated quoted name");
        bump();
      } else {
        switch (c) {
          case '(': tok.t = Tk::LPar; bump(); break;
          case ')': tok.t = Tk::RPar; bump(); break;
          case ',': tok.t = Tk::Comma; bump(); break;
          case '/': tok.t = Tk::Slash; bump(); break;
          case '&': tok.t = Tk::Amp; bump(); break;
          case '|': tok.t = Tk::Pipe; bump(); break;
          case '~': tok.t = Tk::Tilde; bump(); break;
          case '.': tok.t = Tk::Dot; bump(); break;
          case '=': tok.t = Tk::EqOp; bump(); break;
          case ':':
            if (at(1) == '=') {
              tok.t = Tk::Assign;
              bump(2);
            } else {
              tok.t = Tk::Colon;
              bump();
            }
            break;
          case '-':
            if (at(1) != '>') err("expected '->'");
            tok.t = Tk::Arrow;
            bump(2);
            break;
          case '<':
            if (at(1) == '-' && at(2) == '>') {
              tok.t = Tk::IffOp;
              bump(3);
            } else if (at(1) == '>') {
              tok.t = Tk::DiaOp;
              bump(2);
            } else {
              err("expected '<->' or '<>'");
            }
            break;
          case '!':
            if (at(1) != '=') err("expected '!='");
            tok.t = Tk::NeqOp;
            bump(2);
            break;
          case '[':
            if (at(1) != ']') err("expected '[]'");
            tok.t = Tk::BoxOp;
            bump(2);
            break;
          default:
            err(std::string("unexpected character '") + c + "'");
        }
      }
      out.push_back(tok);
    }
  }
};

bool is_keyword(const std::string& s) {
  return s == "all" || s == "ex" || s == "all2" || s == "ex2" || s == "true" ||
         s == "false" || s == "def" || s == "where";
}

struct Parser {
  std::vector<Token> toks;
  size_t i = 0;
  bool modal = false;  // whether box/dia prefixes are part of the grammar

  const Token& peek(size_t off = 0) const {
    size_t j = i + off;
    return j < toks.size() ? toks[j] : toks.back();
  }
  const Token& next() { return toks[std::min(i++, toks.size() - 1)]; }

  [[noreturn]] void err(const std::string& msg, const Token& at) const {
    fail(Err::Syntax, msg, at.line, at.col);
  }

  bool accept(Tk t) {
    if (peek().t == t) {
      ++i;
      return true;
    }
    return false;
  }

  const Token& expect(Tk t, const char* what) {
    if (peek().t != t) err(std::string("expected ") + what, peek());
    return toks[i++];
  }

  bool at_ident(const char* kw) const {
    return peek().t == Tk::Ident && peek().text == kw;
  }

  std::string expect_name(const char* what) {
    const Token& t = expect(Tk::Ident, what);
    if (is_keyword(t.text)) err(std::string("expected ") + what, t);
    return t.text;
  }

  TermPtr term() {
    const Token& t = peek();
    if (t.t == Tk::QuotedName) {
      ++i;
      return mk_quoted(t.text, t.qneg);
    }
    if (t.t != Tk::Ident || is_keyword(t.text))
      err("expected a term", t);
    ++i;
    if (peek().t == Tk::LPar) {
      ++i;
      std::vector<TermPtr> args;
      if (peek().t != Tk::RPar) {
        args.push_back(term());
        while (accept(Tk::Comma)) args.push_back(term());
      }
      expect(Tk::RPar, "')'");
      return mk_app(t.text, std::move(args));
    }
    return is_upper_ident(t.text) ? mk_var(t.text) : mk_const(t.text);
  }

  FormulaPtr term_as_atom(const TermPtr& t, const Token& at) {
    switch (t->kind) {
      case TermKind::Var:
      case TermKind::Const:
        return mk_atom(t->name, {});
      case TermKind::App:
        return mk_atom(t->name, t->args);
      case TermKind::Quoted:
        break;
    }
    err("a quoted name is not a formula", at);
  }

  VarKey binder() {
    const Token& t = peek();
    if (t.t == Tk::QuotedName) {
      ++i;
      return VarKey{t.text, t.qneg ? Quote::Neg : Quote::Pos};
    }
    if (t.t == Tk::Ident && !is_keyword(t.text) && is_upper_ident(t.text)) {
      ++i;
      return VarKey{t.text, Quote::None};
    }
    err("expected a variable after the quantifier", t);
  }

  FormulaPtr quantifier() {
    const Token& kw = next();
    if (kw.text == "all" || kw.text == "ex") {
      VarKey v = binder();
      expect(Tk::Colon, "':'");
      FormulaPtr body = iff();
      return kw.text == "all" ? mk_forall(v, body) : mk_exists(v, body);
    }
    // all2 / ex2: binds a predicate name (variable or symbol) at an arity
    std::string name = expect_name("a predicate name");
    expect(Tk::Slash, "'/'");
    const Token& n = expect(Tk::Num, "an arity");
    int arity = std::stoi(n.text);
    expect(Tk::Colon, "':'");
    FormulaPtr body = iff();
    return kw.text == "all2" ? mk_forall_pred(name, arity, body)
                             : mk_exists_pred(name, arity, body);
  }

  FormulaPtr unary() {
    const Token& t = peek();
    if (t.t == Tk::Tilde) {
      ++i;
      return mk_not(unary());
    }
    if (t.t == Tk::BoxOp || t.t == Tk::DiaOp) {
      if (!modal) err("modal operators are only allowed in modal input", t);
      ++i;
      return t.t == Tk::BoxOp ? mk_box(unary()) : mk_dia(unary());
    }
    if (modal && t.t == Tk::Ident && (t.text == "box" || t.text == "dia")) {
      ++i;
      return t.text == "box" ? mk_box(unary()) : mk_dia(unary());
    }
    if (t.t == Tk::LPar) {
      ++i;
      FormulaPtr f = iff();
      expect(Tk::RPar, "')'");
      return f;
    }
    if (t.t == Tk::Ident) {
      if (t.text == "true") {
        ++i;
        return f_true();
      }
      if (t.text == "false") {
        ++i;
        return f_false();
      }
      if (t.text == "all" || t.text == "ex" || t.text == "all2" ||
          t.text == "ex2")
        return quantifier();
    }
    const Token& at = peek();
    TermPtr lhs = term();
    if (accept(Tk::EqOp)) return mk_eq(lhs, term());
    if (accept(Tk::NeqOp)) return mk_not(mk_eq(lhs, term()));
    return term_as_atom(lhs, at);
  }

  FormulaPtr conj() {
    FormulaPtr f = unary();
    if (peek().t != Tk::Amp) return f;
    std::vector<FormulaPtr> kids{f};
    while (accept(Tk::Amp)) kids.push_back(unary());
    return mk_and(std::move(kids));
  }

  FormulaPtr disj() {
    FormulaPtr f = conj();
    if (peek().t != Tk::Pipe) return f;
    std::vector<FormulaPtr> kids{f};
    while (accept(Tk::Pipe)) kids.push_back(conj());
    return mk_or(std::move(kids));
  }

  FormulaPtr implies() {
    FormulaPtr f = disj();
    if (accept(Tk::Arrow)) return mk_implies(f, implies());
    return f;
  }

  FormulaPtr iff() {
    FormulaPtr f = implies();
    if (accept(Tk::IffOp)) return mk_iff(f, iff());
    return f;
  }

  ParsedDef def_stanza() {
    const Token& kw = expect(Tk::Ident, "'def'");
    if (kw.text != "def") err("expected 'def'", kw);
    ParsedDef d;
    d.line = kw.line;
    d.name = expect_name("a macro name");
    if (is_upper_ident(d.name))
      err("macro names start lowercase", toks[i - 1]);
    if (accept(Tk::LPar)) {
      if (peek().t != Tk::RPar) {
        do {
          std::string p = expect_name("a parameter");
          if (!is_upper_ident(p))
            err("macro parameters start uppercase", toks[i - 1]);
          d.params.push_back(p);
        } while (accept(Tk::Comma));
      }
      expect(Tk::RPar, "')'");
    }
    expect(Tk::Assign, "':='");
    d.body = iff();
    if (at_ident("where")) {
      ++i;
      do {
        ParsedDef::Where w;
        w.name = expect_name("a where-clause name");
        if (!is_upper_ident(w.name))
          err("where-clause names start uppercase", toks[i - 1]);
        expect(Tk::EqOp, "'='");
        std::string rhs = expect_name("quote, quote_neg, or last_result");
        if (rhs == "quote" || rhs == "quote_neg") {
          w.kind = rhs == "quote" ? ParsedDef::Where::K::Quote
                                  : ParsedDef::Where::K::QuoteNeg;
          expect(Tk::LPar, "'('");
          w.param = expect_name("a parameter");
          expect(Tk::RPar, "')'");
        } else if (rhs == "last_result") {
          w.kind = ParsedDef::Where::K::LastResult;
        } else {
          err("expected quote, quote_neg, or last_result", toks[i - 1]);
        }
        d.wheres.push_back(std::move(w));
      } while (accept(Tk::Comma));
    }
    expect(Tk::Dot, "'.'");
    return d;
  }
};

Parser make_parser(std::string_view text) {
  Lexer lx{text};
  return Parser{lx.run(), 0, false};
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
  Parser p = make_parser(text);
  FormulaPtr f = p.iff();
  if (p.peek().t != Tk::End)
    p.err("unexpected trailing input", p.peek());
  return f;
}

FormulaPtr parse_modal_formula(const std::string& text) {
  Parser p = make_parser(text);
  p.modal = true;
  FormulaPtr f = p.iff();
  if (p.peek().t != Tk::End)
    p.err("unexpected trailing input", p.peek());
  return f;
}

ParsedDef parse_def(std::string_view text) {
  Parser p = make_parser(text);
  ParsedDef d = p.def_stanza();
  if (p.peek().t != Tk::End)
    p.err("unexpected trailing input", p.peek());
  return d;
}

std::vector<ParsedDef> parse_kb_text(std::string_view text) {
  Parser p = make_parser(text);
  std::vector<ParsedDef> out;
  while (p.peek().t != Tk::End) out.push_back(p.def_stanza());
  return out;
}

}  // namespace lwb
