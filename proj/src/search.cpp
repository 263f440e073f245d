#include "albo/search.hpp"

#include <algorithm>
#include <deque>

namespace albo {

namespace {

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

std::optional<std::uint64_t> checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) return std::nullopt;
  return r;
}

std::uint64_t floor_log2(std::uint64_t v) {
  std::uint64_t r = 0;
  while (v >>= 1) ++r;
  return r;
}

}  // namespace

std::optional<std::uint64_t> mu(std::uint64_t n) {
  if (n == 0) return std::nullopt;
  if (n >= 64) return std::nullopt;  // 2^n overflows
  std::uint64_t pow2 = std::uint64_t{1} << n;
  auto a = checked_mul(n, floor_log2(n + 1));
  if (!a) return std::nullopt;
  auto b = checked_mul(3, *a);
  if (!b) return std::nullopt;
  return checked_mul(*b, pow2);
}

std::optional<std::uint64_t> step_bound(std::uint64_t n, std::uint64_t k, std::uint64_t m) {
  std::optional<std::uint64_t> i = k;
  if (m > 0) {
    auto bound = mu(n);
    if (!bound) return std::nullopt;
    auto extra = checked_mul(m, *bound);
    if (!extra) return std::nullopt;
    i = checked_add(k, *extra);
  }
  if (!i) return std::nullopt;
  auto lin = checked_mul(n, *i);
  if (!lin) return std::nullopt;
  auto sq = checked_mul(*i, *i);
  if (!sq) return std::nullopt;
  auto two_n = checked_mul(2, n);
  if (!two_n) return std::nullopt;
  auto quad = checked_mul(*two_n, *sq);
  if (!quad) return std::nullopt;
  auto sum = checked_add(*lin, *quad);
  if (!sum) return std::nullopt;
  return checked_mul(*sum, *sum);
}

const char* limit_reason_name(LimitReason r) {
  switch (r) {
    case LimitReason::TotalSteps: return "total step limit";
    case LimitReason::BranchSteps: return "branch step limit";
    case LimitReason::WallClock: return "timeout";
    case LimitReason::BranchBound: return "branch step bound";
  }
  return "?";
}

int rule_tier(Rule r) {
  switch (r) {
    case Rule::Clash:
      return 0;
    case Rule::Ub:
      return 1;
    // non-branching type-completing rules
    case Rule::NotNot:
    case Rule::NotOr:
    case Rule::NotExists:
    case Rule::Sym:
    case Rule::NotSym:
    case Rule::Mon:
    case Rule::Refl:
    case Rule::NotExistsOr:
    case Rule::ExistsInv:
    case Rule::NotExistsInv:
    case Rule::ExistsNot:
    case Rule::ExistsId:
    case Rule::NotExistsId:
      return 2;
    // branching type-completing rules
    case Rule::Or:
    case Rule::ExistsOr:
    case Rule::NotExistsNot:
      return 3;
    case Rule::Exists:
      return 5;
    case Rule::Given:
      return 6;
  }
  return 6;
}

std::optional<RuleInstance> schedule(const Branch& b, bool ub_eager) {
  std::vector<RuleInstance> insts = applicable(b);
  if (insts.empty()) return std::nullopt;
  auto key = [ub_eager](const RuleInstance& r) {
    int tier = rule_tier(r.rule);
    if (!ub_eager && r.rule == Rule::Ub) tier = 4;
    return std::tuple(tier, r.premise1, r.premise2, static_cast<int>(r.rule));
  };
  return *std::min_element(insts.begin(), insts.end(),
                           [&](const RuleInstance& a, const RuleInstance& c) { return key(a) < key(c); });
}

namespace {

using Clock = std::chrono::steady_clock;

struct Driver {
  TermStore& store;
  ConceptId goal;
  const SearchOptions& opts;
  SearchStats stats;
  std::optional<Clock::time_point> deadline;
  std::optional<std::uint64_t> user_branch_cap;
  std::optional<std::uint64_t> ahb_cap;

  // Flags accumulated during one traversal.
  bool cut_by_iterative_cap = false;
  bool cut_by_user_cap = false;
  bool cut_by_ahb_cap = false;

  std::optional<LimitReason> global_limit() {
    if (opts.limits.max_total_steps && stats.total_steps >= *opts.limits.max_total_steps) {
      return LimitReason::TotalSteps;
    }
    if (deadline && Clock::now() >= *deadline) return LimitReason::WallClock;
    return std::nullopt;
  }

  // Expands `b` by one scheduled rule. Returns children; sets `sat` when the
  // branch is fully expanded and open.
  std::vector<Branch> step(Branch&& b, std::optional<Branch>& sat, std::optional<std::uint64_t> id_cap) {
    if (b.closed()) {
      ++stats.branches_closed;
      return {};
    }
    auto inst = schedule(b, opts.ub_eager);
    if (!inst) {
      sat = std::move(b);
      return {};
    }
    // Caps are checked only when there is more work to do.
    if (ahb_cap && b.step_count() >= *ahb_cap) {
      cut_by_ahb_cap = true;
      ++stats.branches_abandoned;
      return {};
    }
    if (user_branch_cap && b.step_count() >= *user_branch_cap) {
      cut_by_user_cap = true;
      ++stats.branches_abandoned;
      return {};
    }
    if (id_cap && b.step_count() >= *id_cap) {
      cut_by_iterative_cap = true;
      return {};
    }
    std::vector<Branch> children = apply(b, *inst);
    ++stats.total_steps;
    for (const Branch& c : children) {
      stats.max_branch_steps = std::max<std::uint64_t>(stats.max_branch_steps, c.step_count());
      stats.max_individuals = std::max<std::uint64_t>(stats.max_individuals, c.individuals().size());
    }
    if (inst->rule == Rule::Ub && opts.ub_distinct_first && children.size() == 2) {
      std::swap(children[0], children[1]);
    }
    return children;
  }
};

DecideResult finish_sat(TermStore& store, ConceptId goal, std::optional<Branch>& sat, SearchStats stats) {
  DecideResult res;
  res.verdict = VerdictKind::Satisfiable;
  res.model = extract_model(*sat);
  if (!satisfied(store, *res.model, goal)) {
    throw InternalError("extracted model does not satisfy the decided concept");
  }
  res.sat_node = sat->node_id();
  res.branch = std::move(*sat);
  res.stats = stats;
  return res;
}

}  // namespace

DecideResult decide(TermStore& store, ConceptId goal, const SearchOptions& opts) {
  if (!is_core(store, goal)) throw Error("decide requires a normalized core concept");

  Driver d{store, goal, opts, {}, {}, {}, {}};
  if (opts.limits.wall_clock) d.deadline = Clock::now() + *opts.limits.wall_clock;
  d.user_branch_cap = opts.limits.max_steps_per_branch;
  if (opts.strategy.kind == StrategyKind::DfsAvoidHugeBranch) {
    std::uint64_t n = length(store, goal);
    std::uint64_t k = count_individuals(store, goal);
    std::uint64_t nprime = exists_subterm_count(store, goal);
    d.ahb_cap = step_bound(n, k, nprime);
    d.stats.branch_step_cap = d.ahb_cap;
  }

  EngineOptions eopts{opts.ub_enabled};
  // One root symbol for the whole run; iterative deepening rebuilds the
  // root branch per round so each round is a complete derivation tree.
  const std::pair<SymbolId, ConceptId> seed{fresh_root_symbol(store, goal), goal};
  auto fresh_root = [&] { return make_branch(store, std::span(&seed, 1), eopts, opts.trace); };

  auto limit_result = [&](LimitReason why) {
    DecideResult res;
    res.verdict = VerdictKind::ResourceLimit;
    res.limit_reason = why;
    res.stats = d.stats;
    return res;
  };

  switch (opts.strategy.kind) {
    case StrategyKind::BreadthFirst: {
      std::deque<Branch> frontier;
      frontier.push_back(fresh_root());
      while (!frontier.empty()) {
        if (auto why = d.global_limit()) return limit_result(*why);
        Branch b = std::move(frontier.front());
        frontier.pop_front();
        std::optional<Branch> sat;
        auto children = d.step(std::move(b), sat, std::nullopt);
        if (sat) return finish_sat(store, goal, sat, d.stats);
        for (auto& c : children) frontier.push_back(std::move(c));
      }
      if (d.cut_by_user_cap) return limit_result(LimitReason::BranchSteps);
      DecideResult res;
      res.verdict = VerdictKind::Unsatisfiable;
      res.stats = d.stats;
      return res;
    }

    case StrategyKind::DfsAvoidHugeBranch: {
      std::vector<Branch> stack;
      stack.push_back(fresh_root());
      while (!stack.empty()) {
        if (auto why = d.global_limit()) return limit_result(*why);
        Branch b = std::move(stack.back());
        stack.pop_back();
        std::optional<Branch> sat;
        auto children = d.step(std::move(b), sat, std::nullopt);
        if (sat) return finish_sat(store, goal, sat, d.stats);
        for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
      }
      if (d.cut_by_ahb_cap) return limit_result(LimitReason::BranchBound);
      if (d.cut_by_user_cap) return limit_result(LimitReason::BranchSteps);
      DecideResult res;
      res.verdict = VerdictKind::Unsatisfiable;
      res.stats = d.stats;
      return res;
    }

    case StrategyKind::DfsIterativeDeepening: {
      std::uint64_t cap = std::max<std::uint32_t>(1, opts.strategy.initial_depth);
      while (true) {
        d.cut_by_iterative_cap = false;
        d.cut_by_user_cap = false;
        std::vector<Branch> stack;
        stack.push_back(fresh_root());
        while (!stack.empty()) {
          if (auto why = d.global_limit()) return limit_result(*why);
          Branch b = std::move(stack.back());
          stack.pop_back();
          std::optional<Branch> sat;
          auto children = d.step(std::move(b), sat, cap);
          if (sat) return finish_sat(store, goal, sat, d.stats);
          for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
        }
        if (d.cut_by_user_cap) return limit_result(LimitReason::BranchSteps);
        if (!d.cut_by_iterative_cap) {
          DecideResult res;
          res.verdict = VerdictKind::Unsatisfiable;
          res.stats = d.stats;
          return res;
        }
        cap += std::max<std::uint32_t>(1, opts.strategy.increment);
        ++d.stats.restarts;
      }
    }
  }
  throw InternalError("decide: unhandled strategy");
}

}  // namespace albo
