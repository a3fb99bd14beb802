#pragma once
// Finite interpretations over domain {0..n-1}, formula evaluation with
// exhaustive predicate-quantifier enumeration, and countermodel search.
// Equality is interpreted as identity. A second decision engine for
// predicate-quantified equivalence lives behind check_so_equivalence.

#include <cstdint>
#include <optional>

#include "ast.hpp"

namespace lwb {

struct Interpretation {
  int n = 1;
  // constants, quoted constants (keyed by printed form), and free variables
  std::map<std::string, int> consts;
  std::map<std::pair<std::string, int>, std::vector<uint8_t>> preds;
  std::map<std::pair<std::string, int>, std::vector<int>> funcs;

  std::string describe() const;
};

struct EvalStats {
  uint64_t relations = 0;  // predicate-quantifier instances enumerated
};

// The formula must be fully expanded (no macro calls, no modal operators).
// Free individual variables read from the constant map like constants.
bool eval_formula(const FormulaPtr& f, const Interpretation& m,
                  EvalStats* stats = nullptr);

inline constexpr uint64_t kDefaultInterpBudget = 20'000'000;

// Exhaustive search for a falsifying interpretation, sizes 1..max_n in
// order, canonical constant assignments only, first hit returned. Exceeding
// the interpretation budget raises Err::Resource.
std::optional<Interpretation> find_countermodel(
    const FormulaPtr& f, int max_n, uint64_t max_interps = kDefaultInterpBudget);

// Decides whether a <-> b holds in every interpretation of each size in
// 1..max_n. Complete for the given sizes; no function symbols allowed.
// Built on a symbolic engine that scales past naive relation enumeration.
bool check_so_equivalence(const FormulaPtr& a, const FormulaPtr& b, int max_n);

// Validity of one formula at every size in 1..max_n, same engine.
bool check_so_valid(const FormulaPtr& f, int max_n);

}  // namespace lwb
