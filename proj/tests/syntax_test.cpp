#include <doctest.h>

#include "albo/parse.hpp"
#include "albo/print.hpp"
#include "albo/term.hpp"
#include "gen.hpp"

using namespace albo;

TEST_CASE("parser builds the expected trees") {
  TermStore s;
  ConceptId c = parse_concept(s, "some (Q or not Q) . A");
  RoleId q = s.role("Q");
  CHECK(c == s.exists(s.role_or(q, s.role_not(q)), s.atom("A")));

  ConceptId fig2 = parse_concept(s, "not (not some (Q or not Q).A or some Q.A)");
  ConceptId expected =
      s.not_(s.or_(s.not_(s.exists(s.role_or(q, s.role_not(q)), s.atom("A"))), s.exists(q, s.atom("A"))));
  CHECK(fig2 == expected);
}

TEST_CASE("parser reports positions for malformed input") {
  TermStore s;
  CHECK_THROWS_AS(parse_concept(s, "some Q ."), ParseError);
  try {
    parse_concept(s, "some Q .");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 9);
  }
  CHECK_THROWS_AS(parse_concept(s, "(A or B"), ParseError);
  CHECK_THROWS_AS(parse_concept(s, "(A or B))"), ParseError);
  CHECK_THROWS_AS(parse_concept(s, "$x"), ParseError);
  CHECK_THROWS_AS(parse_problem(s, "sat A;; "), ParseError);
}

TEST_CASE("one identifier cannot live in two alphabets") {
  TermStore s;
  CHECK_THROWS_AS(parse_concept(s, "some A . A"), AlphabetClash);
  TermStore s2;
  CHECK_THROWS_AS(parse_problem(s2, "sat some Q . {Q};"), AlphabetClash);
}

TEST_CASE("problem statements parse into the right boxes") {
  TermStore s;
  Problem p = parse_problem(s, R"(
    # a small knowledge base
    sat (A or not A);
    A <= some Q . B;
    Q <= S;
    b : B;
    (b, c) : Q;
    una;
  )");
  CHECK(p.goals.size() == 1);
  CHECK(p.tbox.size() == 1);
  CHECK(p.rbox.size() == 1);
  CHECK(p.abox.size() == 2);
  CHECK(p.una);
  CHECK(s.node(p.tbox[0]).kind == ConceptKind::ConceptIncl);
  CHECK(s.node(p.rbox[0]).kind == ConceptKind::RoleIncl);
  CHECK(s.node(p.abox[0]).kind == ConceptKind::Assertion);
  CHECK(s.node(p.abox[1]).kind == ConceptKind::RoleAssertion);
}

TEST_CASE("bare inclusions default to concepts unless a side is pinned as role") {
  TermStore s;
  Problem p = parse_problem(s, "sat top; X <= Y;");
  CHECK(p.tbox.size() == 1);
  CHECK(p.rbox.empty());

  TermStore s2;
  // Q is pinned as a role by the goal, so the inclusion lands in the RBox.
  Problem p2 = parse_problem(s2, "sat some Q . A; Q <= S;");
  CHECK(p2.rbox.size() == 1);
  CHECK(p2.tbox.empty());

  TermStore s3;
  Problem p3 = parse_problem(s3, "sat top; not (Q or R) <= id;");
  CHECK(p3.rbox.size() == 1);
}

TEST_CASE("printer output reparses to the same term") {
  TermStore s;
  ConceptId c = s.exists(s.role("Q"), s.atom("A"));
  CHECK(print_concept(s, c) == "some Q . A");
  CHECK(parse_concept(s, print_concept(s, c)) == c);
  CHECK(print_concept(s, s.singleton("a")) == "{a}");
  ConceptId nn = s.not_(s.not_(s.atom("A")));
  CHECK(print_concept(s, nn) == "not not A");
}

TEST_CASE("round-trip holds for generated grammar concepts") {
  TermStore s;
  testgen::Gen gen(s, 20240601);
  for (int i = 0; i < 300; ++i) {
    ConceptId c = gen.grammar_concept(1 + gen.pick(5));
    ConceptId back = parse_concept(s, print_concept(s, c));
    REQUIRE(back == c);
  }
}

TEST_CASE("length counts constructor nodes and symbol occurrences") {
  TermStore s;
  CHECK(length(s, s.atom("A")) == 1);
  CHECK(length(s, s.exists(s.role("Q"), s.atom("A"))) == 3);
  CHECK(length(s, s.not_(s.or_(s.atom("A"), s.atom("A")))) == 4);
  CHECK(length(s, s.singleton("a")) == 1);
  CHECK(length(s, s.exists(s.inverse(s.role("Q")), s.singleton("a"))) == 4);
}

TEST_CASE("length is strictly monotone under proper subterms") {
  TermStore s;
  testgen::Gen gen(s, 7);
  for (int i = 0; i < 200; ++i) {
    ConceptId c = gen.core_concept(1 + gen.pick(10));
    const ConceptNode& n = s.node(c);
    if (n.lhs.valid()) CHECK(length(s, n.lhs) < length(s, c));
    if (n.rhs.valid()) CHECK(length(s, n.rhs) < length(s, c));
    if (n.role.valid()) CHECK(length(s, n.role) < length(s, c));
  }
}

TEST_CASE("count_individuals includes the root label") {
  TermStore s;
  CHECK(count_individuals(s, s.atom("A")) == 1);
  ConceptId both = s.or_(s.singleton("a"), s.singleton("b"));
  CHECK(count_individuals(s, both) == 3);
  ConceptId twice = s.or_(s.singleton("a"), s.singleton("a"));
  CHECK(count_individuals(s, twice) == 2);
}

TEST_CASE("identifiers may carry primes like the usual role names") {
  TermStore s;
  ConceptId c = parse_concept(s, "some Q' . some Q'' . A");
  CHECK(s.node(c).kind == ConceptKind::Exists);
  CHECK(print_concept(s, c) == "some Q' . some Q'' . A");
}

TEST_CASE("absurdly deep nesting is rejected, not crashed on") {
  TermStore s;
  std::string deep;
  for (int i = 0; i < 100000; ++i) deep += "not ";
  deep += "A";
  CHECK_THROWS_AS(parse_concept(s, deep), ParseError);
}
