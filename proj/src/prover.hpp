#pragma once
// Proof search by refutation: a clausal connection calculus with iterative
// path-limit deepening, occurs-check unification, and regularity pruning.
// Successful searches leave a trace that an independent checker can replay.
// Preprocessing grounds predicate quantifiers and appends equality axioms.

#include <cstdint>
#include <string>
#include <vector>

#include "normalize.hpp"

namespace lwb {

struct Budget {
  double max_seconds = 10.0;
  int max_depth = 12;
  uint64_t max_inferences = 5'000'000;
};

// Proved: a closed connection tableau was found (refutation succeeded).
// Exhausted: the search space within the depth budget holds no proof.
// Timeout: the time or inference budget ran out first.
enum class Verdict { Proved, Exhausted, Timeout };

struct ProofStep {
  enum class Kind { Start, Extension, Reduction, Lemma };
  Kind kind;
  int clause = -1;   // Start, Extension: index into the sorted clause set
  int literal = -1;  // Extension: connected literal within that clause
  int path = -1;     // Reduction: index into the active path;
                     // Lemma: index into the active lemma list
};

struct ProofStats {
  uint64_t inferences = 0;
  int depth_reached = 0;
  double seconds = 0.0;
};

struct ProofResult {
  Verdict verdict = Verdict::Exhausted;
  std::vector<ProofStep> trace;  // filled when proved
  ProofStats stats;
};

// Reflexivity, symmetry, transitivity, plus one congruence axiom per
// predicate and per function symbol of arity >= 1.
std::vector<FormulaPtr> equality_axioms(const Signature& sig);

// Removes predicate quantifiers from a formula that is about to be refuted.
// Existential ones become fresh predicate symbols (q<k>, collision-free),
// arity-lifted by the governing universal individual variables free in the
// body; universal ones are instantiated with every fresh symbol so far,
// every original symbol of that arity in first-occurrence order, and the
// truth constants. Sound for refutation, incomplete. A quoted occurrence of
// an arity-lifted predicate variable is unsupported.
FormulaPtr ground_so(const FormulaPtr& refuted_nnf);

// Refutes a clause set. Clauses are considered in order of ascending
// literal count (stable), and trace indices refer to that order.
ProofResult refute(const ClauseSet& cs, const Budget& budget = {});

// Validity of an expanded non-modal formula: universally close free
// variables, negate, normalize, ground predicate quantifiers, Skolemize,
// clausify, append equality axioms when equality occurs, refute.
ProofResult prove_valid(const FormulaPtr& f, const Budget& budget = {});

// Clause set as prove_valid builds it, for replaying its traces.
ClauseSet clauses_for_validity(const FormulaPtr& f);

// Re-runs a recorded trace against the clause set, re-checking every
// connection; true only if the replay closes the tableau exactly.
bool replay_proof(const ClauseSet& cs, const std::vector<ProofStep>& trace);

}  // namespace lwb
