#pragma once
// Normal forms: negation normal form, Skolemization with a replay trace,
// clausification by distribution, equivalence-preserving simplification, and
// the reverse direction (un-Skolemization) used to present first-order
// results.

#include <string>
#include <vector>

#include "ast.hpp"

namespace lwb {

// Negations pushed to atoms, -> and <-> rewritten, nested conjunctions and
// disjunctions flattened. Predicate quantifiers are kept and dualized.
FormulaPtr to_nnf(const FormulaPtr& f);

struct SkolemTrace {
  struct Entry {
    std::string name;
    int arity;
    VarKey replaced;  // the existential variable the symbol stands for
  };
  std::vector<Entry> entries;
};

// Replaces existential quantifiers in an NNF formula by sk<i> terms over the
// governing universal variables free in the body. Predicate quantifiers must
// be gone by now. `counter` continues an external numbering when given.
FormulaPtr skolemize(const FormulaPtr& nnf, SkolemTrace* trace = nullptr,
                     int* counter = nullptr);

struct Literal {
  bool neg = false;
  bool is_eq = false;
  std::string pred;  // empty for equality literals
  std::vector<TermPtr> args;
};

struct Clause {
  std::vector<Literal> lits;
};

struct ClauseSet {
  std::vector<Clause> clauses;
};

// Distributes a Skolemized NNF into clauses. Universal binders are stripped
// with renaming apart; tautologies and duplicate literals are deleted. No
// subformula renaming, so the result is an equivalent (not equisatisfiable
// surrogate) clause form.
ClauseSet clausify(const FormulaPtr& f);

std::string print_literal(const Literal& l);
std::string print_clause(const Clause& c);

// Fixpoint cleanup: truth-constant absorption, idempotence, complement
// detection, double negation, one-point rules for equality guards, subsumed
// conjunct/disjunct removal, implications whose consequent conjuncts all
// appear in the antecedent, vacuous quantifier removal, flattening.
FormulaPtr simplify(const FormulaPtr& f);

struct UnskolemResult {
  FormulaPtr formula;  // input unchanged when !ok
  bool ok = true;
  std::string reason;
};

// Replaces Skolem symbols listed in `trace` by existential variables with
// readable names: constants quantify at the root in first-occurrence order,
// functions must occur with one identical tuple of distinct variables and
// quantify inside the universals binding that tuple.
UnskolemResult unskolemize(const FormulaPtr& f, const SkolemTrace& trace);

// Renames every plain bound individual variable to the first unused name from
// X, Y, Z, U, V, W, X1, ... for presentation. Quoted binders keep their names.
FormulaPtr pretty_rename(const FormulaPtr& f);

}  // namespace lwb
