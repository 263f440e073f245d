// Scripted derivations driven through apply(), used by the engine,
// semantics and trace tests.
#ifndef ALBO_TESTS_REPLAYS_HPP
#define ALBO_TESTS_REPLAYS_HPP

#include <stdexcept>
#include <vector>

#include "albo/engine.hpp"
#include "albo/parse.hpp"
#include "albo/trace.hpp"

namespace albo::testreplay {

inline std::uint32_t fact_of(const Branch& b, const char* ind, ConceptId c) {
  std::uint32_t label = b.individual_index(b.store().find_symbol(ind).value());
  std::uint32_t idx = b.fact_index(label, c);
  if (idx == kNoIndex) throw std::runtime_error("replay: missing fact");
  return idx;
}

inline Branch apply1(const Branch& b, Rule r, std::uint32_t p1, std::uint32_t p2 = kNoIndex) {
  auto children = apply(b, RuleInstance{r, p1, p2});
  if (children.size() != 1) throw std::runtime_error("replay: expected one child");
  return std::move(children[0]);
}

struct Fig2Replay {
  ConceptId input;
  Branch closed_left;
  Branch open_right;
};

// The two-branch derivation for `not (not some (Q or not Q).A or some Q.A)`,
// replayed without the equality-conjecture rule.
inline Fig2Replay replay_fig2(TermStore& s, TraceLog* log = nullptr) {
  ConceptId input = parse_concept(s, "not (not some (Q or not Q) . A or some Q . A)");
  EngineOptions opts;
  opts.ub_enabled = false;
  Branch b = init(s, input, opts, log);

  b = apply1(b, Rule::NotOr, fact_of(b, "a0", input));
  ConceptId ex_union = parse_concept(s, "some (Q or not Q) . A");
  b = apply1(b, Rule::NotNot, fact_of(b, "a0", s.not_(s.not_(ex_union))));
  b = apply1(b, Rule::Exists, fact_of(b, "a0", ex_union));

  ConceptId link = parse_concept(s, "some (Q or not Q) . {a1}");
  auto forks = apply(b, RuleInstance{Rule::ExistsOr, fact_of(b, "a0", link)});
  if (forks.size() != 2) throw std::runtime_error("replay: expected a fork");

  Branch left = apply1(forks[0], Rule::NotExists, fact_of(forks[0], "a0", parse_concept(s, "not some Q . A")),
                       fact_of(forks[0], "a0", parse_concept(s, "some Q . {a1}")));
  Branch right = apply1(forks[1], Rule::ExistsNot, fact_of(forks[1], "a0", parse_concept(s, "some not Q . {a1}")));
  return {input, std::move(left), std::move(right)};
}

struct Fig4Replay {
  std::vector<ConceptId> given;
  Branch merge_side;     // closed
  Branch distinct_side;  // still open
};

// The derivation head for the four-conjunct global-effect example, up to
// the window-rule fork whose merge side closes.
inline Fig4Replay replay_fig4(TermStore& s, TraceLog* log = nullptr) {
  std::vector<ConceptId> given = {
      parse_concept(s, "some Q . A"),
      parse_concept(s, "some Q' . A"),
      parse_concept(s, "some Q'' . not some Q'' . some inv(Q') . (A or not A)"),
      parse_concept(s, "not some Q'' . some not Q'' . not some inv(Q') . (A or not A)"),
  };
  SymbolId a0 = s.symbol("a0", SymbolKind::Individual);
  std::vector<std::pair<SymbolId, ConceptId>> root;
  for (ConceptId c : given) root.emplace_back(a0, c);
  Branch b = make_branch(s, root, EngineOptions{}, log);

  b = apply1(b, Rule::Exists, fact_of(b, "a0", given[0]));  // a1
  b = apply1(b, Rule::Exists, fact_of(b, "a0", given[1]));  // a2
  b = apply1(b, Rule::Exists, fact_of(b, "a0", given[2]));  // a3
  b = apply1(b, Rule::NotExists, fact_of(b, "a0", given[3]),
             fact_of(b, "a0", parse_concept(s, "some Q'' . {a3}")));

  ConceptId window = parse_concept(s, "not some not Q'' . not some inv(Q') . (A or not A)");
  auto forks = apply(b, RuleInstance{Rule::NotExistsNot, fact_of(b, "a3", window),
                                     fact_of(b, "a2", parse_concept(s, "{a2}"))});
  if (forks.size() != 2) throw std::runtime_error("replay: expected a fork");

  Branch merge = apply1(forks[0], Rule::NotExists,
                        fact_of(forks[0], "a3", parse_concept(s, "not some Q'' . some inv(Q') . (A or not A)")),
                        fact_of(forks[0], "a3", parse_concept(s, "some Q'' . {a2}")));
  merge = apply1(merge, Rule::NotExistsInv,
                 fact_of(merge, "a2", parse_concept(s, "not some inv(Q') . (A or not A)")),
                 fact_of(merge, "a0", parse_concept(s, "some Q' . {a2}")));
  merge = apply1(merge, Rule::NotOr, fact_of(merge, "a0", parse_concept(s, "not (A or not A)")));
  return {given, std::move(merge), std::move(forks[1])};
}

}  // namespace albo::testreplay

#endif  // ALBO_TESTS_REPLAYS_HPP
