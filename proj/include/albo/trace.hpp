#ifndef ALBO_TRACE_HPP
#define ALBO_TRACE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "albo/term.hpp"

namespace albo {

// Calculus rules. Given marks root facts, Refl the automatic registration
// of an individual's domain fact.
enum class Rule : std::uint8_t {
  Clash,
  NotNot,
  NotOr,
  Or,
  Exists,
  NotExists,
  Sym,
  NotSym,
  Mon,
  Refl,
  ExistsOr,
  NotExistsOr,
  ExistsInv,
  NotExistsInv,
  ExistsNot,
  NotExistsNot,
  ExistsId,
  NotExistsId,
  Ub,
  Given,
};

const char* rule_name(Rule r);

// Record of everything one rule application added, organized as a tree of
// derivation nodes. Fact references are branch-local insertion indices,
// which are stable along a root-to-leaf path. A log is not internally
// synchronized: workers expanding branches in parallel need one log each
// (or none).
struct TraceLog {
  struct Added {
    std::uint32_t fact_index;   // insertion index within the branch
    SymbolId label;             // individual the fact is about
    ConceptId concept_id;       // invalid for clash records
    Rule via;                   // rule that produced this fact (Refl / Clash for side records)
    std::uint32_t prem1 = kNoIndex;
    std::uint32_t prem2 = kNoIndex;
  };
  struct ChildRec {
    std::uint32_t node;
    std::vector<Added> added;
  };
  struct Event {
    std::uint32_t node;  // node the rule was applied at
    Rule rule;
    std::uint32_t prem1 = kNoIndex;
    std::uint32_t prem2 = kNoIndex;
    std::vector<ChildRec> children;
  };

  std::vector<Event> events;
  std::vector<std::uint32_t> roots;
  std::uint32_t next_node = 0;

  std::uint32_t new_node() { return next_node++; }
};

// Text rendering in derivation style: numbered lines, one per added fact,
// annotated with the rule and the line numbers of its premises; branching
// points are marked and indented.
std::string render_trace_text(const TermStore& store, const TraceLog& log);

// DOT rendering: one graph node per derivation node, edges follow rule
// application; the two children of an equality conjecture are labelled
// `merge` / `distinct`.
std::string render_trace_dot(const TermStore& store, const TraceLog& log);

}  // namespace albo

#endif  // ALBO_TRACE_HPP
