#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "albo/model.hpp"
#include "albo/normalize.hpp"
#include "albo/parse.hpp"

using namespace albo;

namespace {

struct RunResult {
  int status;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(ALBOID_BIN) + " " + args + " 2>/tmp/alboid_stderr.txt";
  std::array<char, 256> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int rc = pclose(pipe);
  return {WEXITSTATUS(rc), out};
}

std::string fixture(const char* name) { return std::string(ALBO_FIXTURES) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return text;
}

}  // namespace

TEST_CASE("verdicts, exit codes and output discipline") {
  for (const char* strategy : {"bfs", "dfs-id", "dfs-ahb"}) {
    auto sat = run_cli(fixture("fig2.albo") + " --strategy " + strategy);
    CHECK(sat.status == 0);
    CHECK(sat.out == "SAT\n");
    auto unsat = run_cli(fixture("fig6.albo") + " --strategy " + strategy);
    CHECK(unsat.status == 0);
    CHECK(unsat.out == "UNSAT\n");
  }
}

TEST_CASE("parse errors exit with status 2 and a diagnostic") {
  auto r = run_cli(fixture("parse_error.albo"));
  CHECK(r.status == 2);
  CHECK(r.out.empty());
  CHECK(slurp("/tmp/alboid_stderr.txt").find("parse error") != std::string::npos);
}

TEST_CASE("resource limits exit with status 3") {
  auto r = run_cli(fixture("box.albo") + " --ub off --max-steps 500");
  CHECK(r.status == 3);
  CHECK(r.out.rfind("LIMIT", 0) == 0);
}

TEST_CASE("written models reload and satisfy the problem") {
  std::string path = "/tmp/alboid_model.txt";
  auto r = run_cli(fixture("fig2.albo") + " --model-out " + path);
  REQUIRE(r.status == 0);
  REQUIRE(r.out == "SAT\n");
  Model m = parse_model(slurp(path));
  TermStore s;
  Problem p = parse_problem(s, slurp(fixture("fig2.albo")));
  for (ConceptId g : p.goals) CHECK(satisfied(s, m, g));
}

TEST_CASE("trace files contain the requested format") {
  auto text = run_cli(fixture("fig2.albo") + " --trace text --trace-out /tmp/alboid_trace.txt");
  REQUIRE(text.status == 0);
  std::string trace = slurp("/tmp/alboid_trace.txt");
  CHECK(trace.rfind("1.", 0) == 0);
  CHECK(trace.find("(given)") != std::string::npos);

  auto dot = run_cli(fixture("box.albo") + " --trace dot --trace-out /tmp/alboid_trace.dot");
  REQUIRE(dot.status == 0);
  std::string graph = slurp("/tmp/alboid_trace.dot");
  CHECK(graph.rfind("digraph", 0) == 0);
  CHECK(graph.find("merge") != std::string::npos);
  CHECK(graph.find("distinct") != std::string::npos);
}

TEST_CASE("una flag forces distinct named individuals") {
  std::string path = "/tmp/alboid_una.albo";
  {
    std::ofstream out(path);
    out << "sat (some Q . {a} and some Q . {b});\n";
  }
  auto merged = run_cli(path);
  CHECK(merged.status == 0);
  CHECK(merged.out == "SAT\n");
  auto distinct = run_cli(path + " --una --model-out /tmp/alboid_una_model.txt");
  CHECK(distinct.status == 0);
  CHECK(distinct.out == "SAT\n");
  Model m = parse_model(slurp("/tmp/alboid_una_model.txt"));
  CHECK(m.individuals.at("a") != m.individuals.at("b"));
}
