#pragma once
// Export to the TPTP first-order form (FOF) so tasks can be cross-checked by
// external systems. One formula becomes one annotated line
//   fof(<name>, <role>, <formula>).
// Free individual variables are universally closed per FOF convention; quoted
// constants become fresh plain constants (q_<p>, qn_<p>); truth constants
// become $true/$false. Predicate quantifiers, free predicate variables, macro
// calls, and modal operators are not expressible and raise Err::Unsupported.

#include <string>

#include "ast.hpp"

namespace lwb {

enum class TptpRole { Axiom, Conjecture };

// name defaults to "a1" for axioms and "c1" for conjectures.
std::string export_tptp(const FormulaPtr& f, TptpRole role,
                        const std::string& name = "");

}  // namespace lwb
