#include <doctest.h>

#include <algorithm>

#include "albo/enumerate.hpp"
#include "albo/fo.hpp"
#include "albo/model.hpp"
#include "albo/normalize.hpp"
#include "albo/parse.hpp"
#include "albo/search.hpp"
#include "gen.hpp"
#include "replays.hpp"

using namespace albo;

namespace {

Model one_point_model() {
  Model m;
  m.domain = 1;
  m.concepts["A"] = {0};
  m.roles["Q"] = {{0, 0}};
  return m;
}

}  // namespace

TEST_CASE("eval_concept follows the defining semantics") {
  TermStore s;
  Model m = one_point_model();
  ConceptId boxed = desugar(s, parse_concept(s, "box some Q . A"));
  CHECK(eval_concept(s, m, boxed) == std::vector<std::size_t>{0});

  Model two;
  two.domain = 2;
  two.concepts["A"] = {0};
  CHECK(eval_concept(s, two, parse_concept(s, "not A")) == std::vector<std::size_t>{1});

  // complement of a total relation is empty
  Model loop;
  loop.domain = 1;
  loop.roles["Q"] = {{0, 0}};
  ConceptId some_not = desugar(s, parse_concept(s, "some not Q . top"));
  CHECK(eval_concept(s, loop, some_not).empty());
}

TEST_CASE("satisfied is nonemptiness of the extension") {
  TermStore s;
  Model m;
  m.domain = 1;
  CHECK(satisfied(s, m, desugar(s, parse_concept(s, "top"))));
  Model empty_a;
  empty_a.domain = 1;
  CHECK(!satisfied(s, empty_a, parse_concept(s, "A")));
}

TEST_CASE("evaluation requires assigned individuals") {
  TermStore s;
  Model m;
  m.domain = 1;
  CHECK_THROWS_AS(eval_concept(s, m, parse_concept(s, "{a}")), UnboundIndividual);
}

TEST_CASE("complement law holds on random models") {
  TermStore s;
  testgen::Gen gen(s, 2025);
  for (int i = 0; i < 120; ++i) {
    Model m = gen.random_model(1 + gen.pick(3));
    ConceptId c = gen.core_concept(7);
    auto pos = eval_concept(s, m, c);
    auto neg = eval_concept(s, m, s.not_(c));
    std::vector<std::size_t> joined;
    std::merge(pos.begin(), pos.end(), neg.begin(), neg.end(), std::back_inserter(joined));
    std::vector<std::size_t> all;
    for (std::size_t e = 0; e < m.domain; ++e) all.push_back(e);
    REQUIRE(joined == all);
  }
}

TEST_CASE("model extraction from the open fig2 branch") {
  TermStore s;
  auto replay = testreplay::replay_fig2(s);
  CHECK_THROWS_AS(extract_model(replay.closed_left), ClosedBranch);
  Model m = extract_model(replay.open_right);
  CHECK(m.domain == 2);
  CHECK(m.concepts.at("A") == std::vector<std::size_t>{1});
  CHECK(m.roles.count("Q") == 0);
  CHECK(m.individuals.at("a0") == 0);
  CHECK(m.individuals.at("a1") == 1);
  auto ext = eval_concept(s, m, replay.input);
  CHECK(std::find(ext.begin(), ext.end(), m.individuals.at("a0")) != ext.end());

  Branch fresh = init(s, parse_concept(s, "not not B"));
  CHECK_THROWS_AS(extract_model(fresh), NotExpanded);
}

TEST_CASE("merged individuals collapse to one element") {
  TermStore s;
  std::vector<std::pair<SymbolId, ConceptId>> facts = {
      {s.symbol("a0", SymbolKind::Individual), parse_concept(s, "{a1}")},
      {s.symbol("a1", SymbolKind::Individual), parse_concept(s, "A")},
  };
  Branch b = make_branch(s, facts, EngineOptions{false});
  // saturate the equality rules
  while (true) {
    auto insts = applicable(b);
    if (insts.empty()) break;
    b = std::move(apply(b, insts.front())[0]);
  }
  Model m = extract_model(b);
  CHECK(m.domain == 1);
  CHECK(m.individuals.at("a0") == m.individuals.at("a1"));
  CHECK(m.concepts.at("A") == std::vector<std::size_t>{0});
}

TEST_CASE("standard translation produces the expected formulas") {
  TermStore s;
  FoFormula f = st_translate(s, s.atom("A"));
  CHECK(fo_to_string(s, f) == "A(x)");

  FoFormula g = st_translate(s, s.exists(s.id_role(), s.singleton("a")));
  CHECK(fo_to_string(s, g) == "exists y. (x = y & y = a)");

  FoFormula h = st_translate(s, s.not_(s.exists(s.role_not(s.role("Q")), s.atom("A"))));
  CHECK(fo_to_string(s, h) == "~exists y. (~Q(x,y) & A(y))");
}

TEST_CASE("translation size is linear in concept length") {
  TermStore s;
  testgen::Gen gen(s, 808);
  for (int i = 0; i < 100; ++i) {
    ConceptId c = gen.core_concept(10);
    FoFormula f = st_translate(s, c);
    CHECK(f.size() <= 3 * length(s, c));
  }
}

TEST_CASE("translation agrees with direct evaluation") {
  TermStore s;
  testgen::Gen gen(s, 90210);
  for (int i = 0; i < 220; ++i) {
    ConceptId c = gen.core_concept(10);
    Model m = gen.random_model(1 + gen.pick(3));
    FoFormula f = st_translate(s, c);
    bool direct = satisfied(s, m, c);
    bool fo = false;
    for (std::size_t e = 0; e < m.domain && !fo; ++e) fo = fo_eval(s, m, f, e, std::nullopt);
    REQUIRE(direct == fo);
  }
}

TEST_CASE("enumeration returns the canonical first model") {
  TermStore s;
  auto m = enumerate_model(s, parse_concept(s, "some Q . A"), 1);
  REQUIRE(m.has_value());
  CHECK(m->domain == 1);
  CHECK(m->concepts.at("A") == std::vector<std::size_t>{0});
  CHECK(m->roles.at("Q") == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}});

  ConceptId contradiction = desugar(s, parse_concept(s, "(A and not A)"));
  CHECK(!enumerate_model(s, contradiction, 3).has_value());

  ConceptId fig6 = parse_concept(s, "not (some (Q' or not Q') . not some Q . A or not some Q'' . not some Q . A)");
  CHECK(!enumerate_model(s, fig6, 3).has_value());
}

TEST_CASE("enumeration respects the ascending-size order") {
  TermStore s;
  // needs two distinct named elements
  ConceptId c = desugar(s, parse_concept(s, "({a} and not {b})"));
  auto m = enumerate_model(s, c, 3);
  REQUIRE(m.has_value());
  CHECK(m->domain == 2);
  CHECK(m->individuals.at("a") != m->individuals.at("b"));
}

TEST_CASE("model serialization is canonical and reloads") {
  Model m;
  m.domain = 3;
  m.concepts["A"] = {0, 2};
  m.roles["Q"] = {{0, 1}, {1, 2}};
  m.individuals["a"] = 1;
  std::string text = serialize_model(m);
  CHECK(text == "domain 3\nconcept A: 0 2\nrole Q: (0,1) (1,2)\nind a = 1\n");
  CHECK(parse_model(text) == m);
  CHECK_THROWS_AS(parse_model("role Q: (0,1)\n"), ParseError);
}

TEST_CASE("reflection: branch facts hold in the extracted model") {
  TermStore s;
  testgen::Gen gen(s, 6060);
  int reflected = 0;
  for (int i = 0; i < 60; ++i) {
    ConceptId c = gen.core_concept(8);
    DecideResult r = decide(s, c, {});
    if (r.verdict != VerdictKind::Satisfiable) continue;
    const Branch& b = *r.branch;
    const Model& m = *r.model;
    for (const Fact& f : b.facts()) {
      std::size_t elem = m.individuals.at(s.name(b.individuals()[f.label].sym));
      auto ext = eval_concept(s, m, f.concept_id);
      REQUIRE(std::find(ext.begin(), ext.end(), elem) != ext.end());
    }
    ++reflected;
  }
  CHECK(reflected > 20);
}
