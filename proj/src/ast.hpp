#pragma once
// Core representation: first-order logic with equality, extended by predicate
// (second-order) quantifiers, quoted predicate constants in argument position,
// and macro calls prior to expansion. Formulas and terms are immutable and
// shared; every operation builds new nodes.

#include <compare>
#include <cstdint>
#include <exception>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lwb {

enum class Err {
  None = 0,
  Syntax,
  Arity,
  UnknownMacro,
  BadMacroCall,
  DuplicateDef,
  CyclicDef,
  LastResultUnset,
  Unsupported,
  Resource,
  Io,
  CorruptCorpus,
  InvalidArg,
  Internal,
};

// All failures surface as Error; the C API boundary maps codes 1:1.
struct Error : std::exception {
  Err code;
  std::string message;
  int line = -1;  // 1-based, -1 when not a text-input error
  int col = -1;

  Error(Err c, std::string msg, int ln = -1, int cl = -1)
      : code(c), message(std::move(msg)), line(ln), col(cl) {}
  const char* what() const noexcept override { return message.c_str(); }
};

[[noreturn]] void fail(Err code, std::string msg, int line = -1, int col = -1);

// Individual-variable key. Plain keys come from `all X:`; quoted keys from
// binders like `ex 'Q':` and from instantiating a predicate variable whose
// quoted occurrences are bound in scope.
enum class Quote : uint8_t { None, Pos, Neg };

struct VarKey {
  std::string base;
  Quote quote = Quote::None;
  auto operator<=>(const VarKey&) const = default;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

enum class TermKind : uint8_t { Var, Const, Quoted, App };

struct Term {
  TermKind kind;
  std::string name;  // Var: variable; Const/App: symbol; Quoted: base name
  bool qneg = false; // Quoted only: true for '~p'
  std::vector<TermPtr> args; // App only

  Term(TermKind k, std::string n, bool qn, std::vector<TermPtr> a)
      : kind(k), name(std::move(n)), qneg(qn), args(std::move(a)) {}
};

TermPtr mk_var(std::string name);
TermPtr mk_var(const VarKey& key); // plain or quoted, by key
TermPtr mk_const(std::string name);
TermPtr mk_quoted(std::string base, bool neg);
TermPtr mk_app(std::string fn, std::vector<TermPtr> args);

bool term_equal(const TermPtr& a, const TermPtr& b);

// The key this term would be bound under (Var or Quoted), nullopt otherwise.
std::optional<VarKey> term_var_key(const Term& t);

enum class FKind : uint8_t {
  Atom,
  Eq,
  Not,
  And,
  Or,
  Implies,
  Iff,
  ForallInd,
  ExistsInd,
  ForallPred,
  ExistsPred,
  MacroCall,
  Truth,
  Falsity,
  Box,  // modal necessity; removed by the standard translation
  Dia,  // modal possibility
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// One node type for all formula kinds keeps traversal code uniform.
//   Atom/MacroCall: name + args. Uppercase atom heads are predicate-variable
//   occurrences (bound by a predicate quantifier or a macro parameter).
//   Eq: args[0] = args[1].
//   ForallInd/ExistsInd: var + kids[0].
//   ForallPred/ExistsPred: name (uppercase variable, or lowercase to bind a
//   predicate symbol), pred_arity, kids[0].
//   Connectives: kids (And/Or are n-ary, kids.size() >= 2 in parsed formulas).
struct Formula {
  FKind kind;
  std::string name;
  int pred_arity = 0;
  VarKey var;
  std::vector<TermPtr> args;
  std::vector<FormulaPtr> kids;
};

FormulaPtr mk_atom(std::string pred, std::vector<TermPtr> args);
FormulaPtr mk_eq(TermPtr lhs, TermPtr rhs);
FormulaPtr mk_not(FormulaPtr f);
// mk_and/mk_or collapse: empty -> truth/falsity, singleton -> the child.
FormulaPtr mk_and(std::vector<FormulaPtr> kids);
FormulaPtr mk_or(std::vector<FormulaPtr> kids);
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_forall(VarKey v, FormulaPtr body);
FormulaPtr mk_exists(VarKey v, FormulaPtr body);
FormulaPtr mk_forall_pred(std::string p, int arity, FormulaPtr body);
FormulaPtr mk_exists_pred(std::string p, int arity, FormulaPtr body);
FormulaPtr mk_macro_call(std::string name, std::vector<TermPtr> args);
FormulaPtr mk_box(FormulaPtr f);
FormulaPtr mk_dia(FormulaPtr f);
FormulaPtr f_true();
FormulaPtr f_false();

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

// Equality up to consistent renaming of bound individual and predicate
// variables.
bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b);

// Uppercase or underscore first character marks a variable-class identifier.
bool is_upper_ident(std::string_view s);

// Free symbols of a formula. Building one checks arity consistency within the
// formula: a predicate, predicate variable, or function used at two distinct
// arities raises Err::Arity.
struct Signature {
  std::map<std::string, int> preds;      // free predicate symbols
  std::map<std::string, int> pred_vars;  // free predicate variables
  std::map<std::string, int> funcs;      // function symbols (Skolem only)
  std::set<std::string> consts;          // plain constants
  std::set<std::pair<std::string, bool>> quoted; // free quoted terms (base, neg)
  std::set<VarKey> free_vars;            // free individual variables
  bool has_eq = false;
  bool has_pred_quant = false;
  bool has_macro_call = false;

  void add_pred(const std::string& name, int arity);
  void add_pred_var(const std::string& name, int arity);
  void add_func(const std::string& name, int arity);
  void merge(const Signature& other);
};

Signature free_symbols(const FormulaPtr& f);

// Deterministic fresh-name supply. Expansion state owns one; internal passes
// create their own.
struct Fresh {
  uint64_t counter = 0;
  std::string next(std::string_view stem = "_G") {
    return std::string(stem) + std::to_string(counter++);
  }
};

// Capture-avoiding substitution. var_map replaces free individual variables
// (plain or quoted keys) by terms; pred_map renames free predicate-variable
// or predicate-symbol heads, rewriting quoted bases and quoted binder keys
// along. Binders are renamed via `fresh` when a replacement would be captured.
struct Subst {
  std::map<VarKey, TermPtr> var_map;
  std::map<std::string, std::string> pred_map;
};

FormulaPtr substitute(const FormulaPtr& f, const Subst& s, Fresh& fresh);

// Replace every application of predicate `pvar` by a truth constant
// (value = true -> Truth). Binders over quoted keys of `pvar` are renamed to
// plain fresh variables first; a remaining free quoted occurrence of `pvar`
// has no truth-constant reading and raises Err::Unsupported.
FormulaPtr instantiate_pred_truth(const FormulaPtr& f, const std::string& pvar,
                                  bool value, Fresh& fresh);

// Occurrence check for a predicate name (head position or quoted base),
// respecting binders of the same name.
bool pred_occurs(const FormulaPtr& f, const std::string& name);

// Free quoted occurrence of the given base name.
bool quoted_occurs(const FormulaPtr& f, const std::string& name);

// Collect predicate symbols and variables with the given arity occurring free
// in f, in first-occurrence order (head positions only).
std::vector<std::string> free_preds_of_arity(const FormulaPtr& f, int arity);

}  // namespace lwb
