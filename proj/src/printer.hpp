#pragma once
// Formula rendering. Ascii output re-parses to the identical tree; Unicode
// and Latex are display-only.

#include <string>

#include "ast.hpp"

namespace lwb {

enum class Style { Ascii, Unicode, Latex };

std::string print_term(const TermPtr& t, Style style = Style::Ascii);
std::string print_formula(const FormulaPtr& f, Style style = Style::Ascii);

}  // namespace lwb
