#ifndef ALBO_SEARCH_HPP
#define ALBO_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "albo/engine.hpp"
#include "albo/model.hpp"
#include "albo/term.hpp"
#include "albo/trace.hpp"

namespace albo {

// Model bounding function: 3 * (n * floor(log2(n+1))) * 2^n. Returns
// nothing on 64-bit overflow; callers treat that as "no bound".
std::optional<std::uint64_t> mu(std::uint64_t n);

// Per-branch derivation-step bound (n * i + 2n * i^2)^2 with
// i = k + M * mu(n), for input length n and k input individuals.
std::optional<std::uint64_t> step_bound(std::uint64_t n, std::uint64_t k, std::uint64_t m);

enum class StrategyKind : std::uint8_t {
  BreadthFirst,
  DfsIterativeDeepening,
  DfsAvoidHugeBranch,
};

struct Strategy {
  StrategyKind kind = StrategyKind::DfsIterativeDeepening;
  // Iterative deepening is on rule applications per branch.
  std::uint32_t initial_depth = 64;
  std::uint32_t increment = 64;
};

struct Limits {
  std::optional<std::uint64_t> max_steps_per_branch;
  std::optional<std::uint64_t> max_total_steps;
  std::optional<std::chrono::milliseconds> wall_clock;
};

enum class LimitReason : std::uint8_t { TotalSteps, BranchSteps, WallClock, BranchBound };
const char* limit_reason_name(LimitReason r);

struct SearchStats {
  std::uint64_t total_steps = 0;
  std::uint64_t branches_closed = 0;
  std::uint64_t branches_abandoned = 0;
  std::uint64_t max_branch_steps = 0;
  std::uint64_t max_individuals = 0;
  std::uint64_t restarts = 0;
  std::optional<std::uint64_t> branch_step_cap;  // active avoid-huge-branch cap
};

enum class VerdictKind : std::uint8_t { Satisfiable, Unsatisfiable, ResourceLimit };

struct DecideResult {
  VerdictKind verdict = VerdictKind::ResourceLimit;
  std::optional<Model> model;       // Satisfiable: checker-validated model
  std::optional<Branch> branch;     // Satisfiable: the fully expanded open branch
  std::uint32_t sat_node = kNoIndex;  // Satisfiable: trace node of that branch
  LimitReason limit_reason = LimitReason::TotalSteps;
  SearchStats stats;
};

struct SearchOptions {
  Strategy strategy;
  Limits limits;
  bool ub_enabled = true;
  // Eager scheduling fires every pending equality conjecture before any
  // other rule; the lazy variant defers them until just before the
  // existential rule (still ahead of every witness creation).
  bool ub_eager = true;
  // Explore the `distinct` child of an equality conjecture first (the
  // default explores `merge` first, which biases toward small models).
  bool ub_distinct_first = false;
  TraceLog* trace = nullptr;
};

// Deterministic rule selection: the applicable instance with the highest
// tier — clash handling is built into insertion; equality conjectures come
// first, then non-branching rules, then branching ones, then the
// existential rule — and, within a tier, the one whose premises are oldest.
// Returns nothing iff no instance is applicable.
std::optional<RuleInstance> schedule(const Branch& b, bool ub_eager = true);

// Tier of a rule under the selection order above (smaller runs earlier).
int rule_tier(Rule r);

// Decides satisfiability of a core concept. Satisfiable verdicts carry a
// model extracted from the found branch, validated against `c` before
// returning. Expansion applies every applicable equality conjecture before
// any existential rule from the root onward.
DecideResult decide(TermStore& store, ConceptId c, const SearchOptions& opts = {});

}  // namespace albo

#endif  // ALBO_SEARCH_HPP
