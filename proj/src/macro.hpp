#pragma once
// Named definitions and their expansion. A knowledge base is keyed by
// (name, arity); an applied identifier is a call exactly when the base has a
// matching entry, otherwise it stays an atom. `last_result` is built in and
// expands to the most recent stored result.

#include <optional>
#include <string_view>
#include <vector>

#include "ast.hpp"
#include "parser.hpp"

namespace lwb {

class KnowledgeBase {
 public:
  void add(ParsedDef d);
  void add_text(std::string_view text);
  const ParsedDef* find(const std::string& name, int arity) const;
  const std::vector<ParsedDef>& defs() const { return order_; }

 private:
  std::vector<ParsedDef> order_;
  std::map<std::pair<std::string, int>, size_t> index_;
};

// Shared across the directives of one document run: the fresh-variable
// supply and the result most recently stored by an elimination.
struct ExpansionState {
  Fresh fresh;
  FormulaPtr last_result;  // null until set
};

FormulaPtr expand(const FormulaPtr& f, const KnowledgeBase& kb,
                  ExpansionState& st);

}  // namespace lwb
