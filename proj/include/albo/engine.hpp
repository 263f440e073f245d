#ifndef ALBO_ENGINE_HPP
#define ALBO_ENGINE_HPP

#include <cstdint>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "albo/term.hpp"
#include "albo/trace.hpp"

namespace albo {

struct Model;

// A labelled concept: `individual : concept`. Labels are branch-local
// creation indices, which also define the individual ordering used by
// blocking.
struct Fact {
  std::uint32_t label;
  ConceptId concept_id;
  friend constexpr auto operator<=>(const Fact&, const Fact&) = default;
};

struct Individual {
  enum class Origin : std::uint8_t { Root, Input, Witness };
  SymbolId sym;
  Origin origin = Origin::Input;
  std::uint32_t parent = kNoIndex;     // witness: individual it was created for
  ConceptId witnessed;                 // witness: the existential it witnesses
  std::uint32_t domain_fact = kNoIndex;  // index of the fact `a:{a}`
};

struct RuleInstance {
  Rule rule;
  std::uint32_t premise1 = kNoIndex;  // fact index
  std::uint32_t premise2 = kNoIndex;  // fact index (two-premise rules)
  friend constexpr auto operator<=>(const RuleInstance&, const RuleInstance&) = default;
};

struct EngineOptions {
  bool ub_enabled = true;  // enable the equality-conjecture (blocking) rule
};

// One tableau branch. A Branch is a value: applying a rule yields child
// branches sharing nothing mutable with the parent or each other, so
// distinct branches may be expanded by distinct threads. Facts are a set;
// re-inserting an existing fact is a no-op. Closure is detected on every
// insertion.
class Branch {
 public:
  bool closed() const { return closed_; }
  std::pair<std::uint32_t, std::uint32_t> clash_premises() const { return clash_; }
  const std::vector<Fact>& facts() const { return facts_; }
  const std::vector<Individual>& individuals() const { return individuals_; }
  bool contains(std::uint32_t label, ConceptId c) const;
  std::uint32_t fact_index(std::uint32_t label, ConceptId c) const;  // kNoIndex if absent
  std::uint32_t individual_index(SymbolId sym) const;                // kNoIndex if unregistered

  // Least member of the equality class of `a` (also its representative).
  std::uint32_t find(std::uint32_t a) const;
  bool same_class(std::uint32_t a, std::uint32_t b) const { return find(a) == find(b); }
  // True when some fact `a':{a}` with `a' < a` is on the branch.
  bool blocked(std::uint32_t a) const { return blocked_[a]; }
  // True when a fact `x:not {y}` relates members of the two classes.
  bool known_distinct(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t step_count() const { return step_count_; }
  bool was_applied(const RuleInstance& r) const { return applied_.count(applied_key(r)) != 0; }
  std::uint32_t node_id() const { return node_id_; }
  TermStore& store() const { return *store_; }
  const EngineOptions& options() const { return opts_; }

 private:
  friend Branch make_branch(TermStore&, std::span<const std::pair<SymbolId, ConceptId>>, EngineOptions,
                            TraceLog*);
  friend std::vector<Branch> apply(const Branch&, const RuleInstance&);
  friend std::vector<RuleInstance> applicable(const Branch&);
  friend Model extract_model(const Branch&);

  static std::uint64_t applied_key(const RuleInstance& r) {
    return (static_cast<std::uint64_t>(r.rule) << 56) | (static_cast<std::uint64_t>(r.premise1 & 0xfffffffu) << 28) |
           (r.premise2 & 0xfffffffu);
  }
  static std::uint64_t fact_key(std::uint32_t label, ConceptId c) {
    return (static_cast<std::uint64_t>(label) << 32) | c.raw;
  }

  std::uint32_t register_individual(SymbolId sym, Individual::Origin origin, std::uint32_t parent,
                                    ConceptId witnessed, std::uint32_t trigger_fact,
                                    std::vector<TraceLog::Added>& recs);
  bool insert(std::uint32_t label, ConceptId c, Rule via, std::uint32_t prem1, std::uint32_t prem2,
              std::vector<TraceLog::Added>& recs);
  std::uint32_t fresh_witness(std::uint32_t parent, ConceptId witnessed, std::uint32_t trigger_fact,
                              std::vector<TraceLog::Added>& recs);

  TermStore* store_ = nullptr;
  TraceLog* log_ = nullptr;
  EngineOptions opts_;
  std::uint32_t node_id_ = 0;

  std::vector<Fact> facts_;
  std::unordered_map<std::uint64_t, std::uint32_t> fact_index_;
  std::vector<Individual> individuals_;
  std::unordered_map<std::uint32_t, std::uint32_t> individual_of_sym_;
  std::vector<std::uint32_t> uf_parent_;
  std::vector<char> blocked_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> distinct_;
  std::unordered_set<std::uint64_t> applied_;
  struct WitnessEntry {
    std::uint32_t creator;  // individual that triggered creation
    ConceptId premise;      // the existential concept
    std::uint32_t witness;
  };
  std::vector<WitnessEntry> witnesses_;
  bool closed_ = false;
  std::pair<std::uint32_t, std::uint32_t> clash_ = {kNoIndex, kNoIndex};
  std::uint32_t step_count_ = 0;
};

// Builds the root branch for an input set of labelled concepts. Labels must
// be individual symbols; every individual occurring anywhere in the facts
// is registered (in first-occurrence order) and receives its domain fact.
Branch make_branch(TermStore& store, std::span<const std::pair<SymbolId, ConceptId>> facts,
                   EngineOptions opts = {}, TraceLog* log = nullptr);

// Root branch `{a0 : c}` for a fresh root individual a0. `c` must be core
// syntax with inverse applied to atoms only.
Branch init(TermStore& store, ConceptId c, EngineOptions opts = {}, TraceLog* log = nullptr);

// An individual symbol not occurring in `c`, for use as a root label.
SymbolId fresh_root_symbol(TermStore& store, ConceptId c);

// All rule instances applicable to the (open) branch: side conditions hold,
// the instance has not been applied before, and — for non-branching rules —
// it would add at least one new fact. The existential rule is never offered
// for blocked labels or singleton fillers; equality conjectures pair class
// representatives whose equality is undecided.
std::vector<RuleInstance> applicable(const Branch& b);

// Applies one instance, returning its child branches (1, or 2 for the
// branching rules). Throws RuleNotApplicable if `r` is not applicable.
std::vector<Branch> apply(const Branch& b, const RuleInstance& r);

// True iff `b` is open and no rule instance is applicable.
bool is_fully_expanded(const Branch& b);

// Condition (c1) query, on the literal facts of the branch.
bool is_blocked(const Branch& b, std::uint32_t individual);

}  // namespace albo

#endif  // ALBO_ENGINE_HPP
