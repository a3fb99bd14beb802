// Standard translation from quantified modal logic under varying-domain
// Kripke semantics into the classical language: every n-ary predicate gains
// a world as first argument, individual quantifiers are relativized by the
// existence predicate e, and the modal operators quantify over r-accessible
// worlds, carrying existence of the free individuals along.
#pragma once

#include <string>

#include "ast.hpp"

namespace lwb {

// Modal source syntax: the classical grammar plus the unary prefixes
// `box F` and `dia F` (symbol forms `[]F`, `<>F`). Only this entry point
// accepts them.
FormulaPtr parse_modal_formula(const std::string& text);

// ST(m) at the given world term.
//   ST(p(t̄))   = p(w, t̄)
//   ST(ex X: F) = ex X: (e(w, X) & ST(F))        all X dually with ->
//   ST(dia F)  = ex W: (r(w, W) & e(W, x̄free(F)) & ST(F) at W)
//   ST(box F)  = all W: (r(w, W) & e(W, x̄free(F)) -> ST(F) at W)
// Connectives map through unchanged. Fresh world variables are named W,
// W2, W3, ... skipping every name occurring in m or world. Equality,
// predicate quantifiers, quoted terms, and function applications have no
// modal reading and raise Err::Unsupported.
FormulaPtr standard_translate(const FormulaPtr& m, const TermPtr& world);

// Closed frame properties of the accessibility relation, exactly as the
// bundled corpus states them: reflexive, symmetric, euclidean,
// frame_cond_simp, r_world_1. Unknown name raises Err::InvalidArg.
FormulaPtr frame_condition(const std::string& name);

// Optional constant-domain axiom schemas: domains grow resp. shrink along
// r. The translation itself never adds them.
FormulaPtr domain_increase();
FormulaPtr domain_decrease();

}  // namespace lwb
