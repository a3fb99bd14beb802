#pragma once
// Concrete syntax. Identifiers starting with a lowercase letter are symbols
// (predicates, constants, macros); uppercase or underscore start marks a
// variable. Connectives ~ & | -> <-> bind in that order, -> and <-> associate
// right, & and | collect unparenthesized chains into one n-ary node while a
// parenthesized chain stays nested. Quantifiers `all X:` `ex X:` `all2 P/n:`
// `ex2 P/n:` scope maximally right; `ex 'Q':` binds a quoted key. Modal []
// and <> parse as tight unary operators. `%` starts a line comment.

#include <string_view>
#include <vector>

#include "ast.hpp"

namespace lwb {

FormulaPtr parse_formula(std::string_view text);

// One `def name(Params) := body [where N = quote(P), ...] .` stanza.
struct ParsedDef {
  struct Where {
    enum class K { Quote, QuoteNeg, LastResult };
    std::string name;  // bound variable, uppercase
    K kind;
    std::string param;  // quoted parameter; empty for LastResult
  };
  std::string name;
  std::vector<std::string> params;
  FormulaPtr body;
  std::vector<Where> wheres;
  int line = -1;
};

ParsedDef parse_def(std::string_view text);
std::vector<ParsedDef> parse_kb_text(std::string_view text);

}  // namespace lwb
