#pragma once
// Second-order quantifier elimination on the Ackermann route: bring the body
// of an existential predicate quantifier toward Ackermann form (rename apart,
// Skolemize individual existentials, miniscope universals, distribute to a
// top-level disjunction), then replace the predicate by its extracted
// definition. Universal predicate quantifiers go through the dual negation.
// Failure is a first-class outcome: results are only reported when the
// predicate is gone and introduced Skolem symbols could be quantified away
// again.

#include <optional>
#include <string>
#include <vector>

#include "ast.hpp"

namespace lwb {

enum class Orientation { Positive, Dual };

// ex P (all x̄ (A(x̄) -> P(x̄)) & F)  with F negative in P   [Positive]
// ex P (all x̄ (P(x̄) -> A(x̄)) & F)  with F positive in P   [Dual]
// The definition A is stated over `params` and contains no P; every
// P-occurrence in `matrix` has the orientation's polarity.
struct AckermannForm {
  std::string pred;
  int arity = 0;
  std::vector<VarKey> params;
  FormulaPtr definition;
  FormulaPtr matrix;
  Orientation orientation = Orientation::Positive;
};

enum class ElimStatus { Eliminated, Failed };

struct ElimOutcome {
  ElimStatus status = ElimStatus::Failed;
  FormulaPtr result;  // the input when status is Failed
  std::vector<std::string> trace;
  std::string blocker;  // what stopped the elimination, when Failed
};

// Eliminates every predicate quantifier in f, innermost first. On success the
// result is equivalent to f, contains no predicate quantifier and none of the
// eliminated predicate names, and is simplified and un-Skolemized for
// presentation. f must be macro-free.
ElimOutcome eliminate(const FormulaPtr& f);

// Analyzes the body of `ex2 pred/arity:` (in NNF) into a single Ackermann
// form after preprocessing, when the preprocessed body has exactly one
// disjunct. Bodies whose occurrences are uniformly positive prefer the dual
// orientation (occurrences stay in the matrix); mixed bodies try positive
// first.
std::optional<AckermannForm> to_ackermann_form(const FormulaPtr& body,
                                               const std::string& pred,
                                               int arity);

// Replaces every occurrence of af.pred in af.matrix by the instantiated
// definition; the result is equivalent to the quantified input and free of
// the predicate.
FormulaPtr apply_ackermann(const AckermannForm& af);

// When pred occurs only positively (only negatively) in body, substituting
// the full (empty) relation preserves the meaning of `ex2 pred/arity: body`.
// Mixed polarity, quoted occurrences, or foreign arities: nullopt.
std::optional<FormulaPtr> purity_delete(const FormulaPtr& body,
                                        const std::string& pred, int arity);

}  // namespace lwb
