#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "albo/enumerate.hpp"
#include "albo/errors.hpp"
#include "albo/model.hpp"
#include "albo/normalize.hpp"
#include "albo/parse.hpp"
#include "albo/print.hpp"
#include "albo/search.hpp"
#include "albo/trace.hpp"

namespace {

constexpr int kExitVerdict = 0;
constexpr int kExitParse = 2;
constexpr int kExitLimit = 3;
constexpr int kExitInternal = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw albo::Error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A model satisfies a problem when every goal concept is satisfied and
// every statement is valid (holds on the whole domain).
bool model_fits_problem(const albo::TermStore& store, const albo::Model& m, const albo::Problem& p) {
  for (albo::ConceptId g : p.goals) {
    if (!albo::satisfied(store, m, g)) return false;
  }
  for (albo::ConceptId st : p.statements()) {
    if (albo::eval_concept(store, m, st).size() != m.domain) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alboid - tableau satisfiability solver for the description logic ALBO(id)"};

  std::string input_path;
  std::string strategy = "dfs-id";
  std::string trace_mode = "none";
  std::string trace_out;
  std::string model_out;
  std::string ub_mode = "eager";
  std::optional<std::uint64_t> max_steps;
  std::optional<std::uint64_t> max_branch_steps;
  std::optional<double> timeout_s;
  std::optional<bool> una_override;
  bool print_stats = false;

  app.add_option("input", input_path, "problem file (.albo)")->required();
  app.add_option("--strategy", strategy, "search strategy: bfs, dfs-id, dfs-ahb")
      ->check(CLI::IsMember({"bfs", "dfs-id", "dfs-ahb"}))
      ->capture_default_str();
  app.add_option("--max-steps", max_steps, "stop after this many rule applications in total");
  app.add_option("--max-branch-steps", max_branch_steps, "abandon branches longer than this many applications");
  app.add_option("--timeout", timeout_s, "wall-clock limit in seconds");
  app.add_option("--trace", trace_mode, "emit the derivation: text or dot")
      ->check(CLI::IsMember({"none", "text", "dot"}));
  app.add_option("--trace-out", trace_out, "write the trace to a file instead of stderr");
  app.add_option("--model-out", model_out, "write the model of a SAT verdict to a file");
  app.add_option("--ub", ub_mode, "equality-conjecture rule: eager, lazy or off")
      ->check(CLI::IsMember({"eager", "lazy", "off"}))
      ->capture_default_str();
  app.add_flag("--una,!--no-una", una_override, "force the unique name assumption on/off");
  app.add_flag("--stats", print_stats, "print search statistics to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;  // 0 covers --help
  }

  try {
    albo::TermStore store;
    albo::Problem problem;
    try {
      problem = albo::parse_problem(store, read_file(input_path));
    } catch (const albo::ParseError& e) {
      std::cerr << input_path << ": " << e.what() << "\n";
      return kExitParse;
    } catch (const albo::AlphabetClash& e) {
      std::cerr << input_path << ": " << e.what() << "\n";
      return kExitParse;
    } catch (const albo::Error& e) {
      std::cerr << e.what() << "\n";
      return kExitParse;
    }
    if (una_override) problem.una = *una_override;

    albo::NormalizedInput norm;
    try {
      norm = albo::normalize(store, problem);
    } catch (const albo::EmptyProblem& e) {
      std::cerr << input_path << ": " << e.what() << "\n";
      return kExitParse;
    }

    albo::SearchOptions opts;
    if (strategy == "bfs") opts.strategy.kind = albo::StrategyKind::BreadthFirst;
    if (strategy == "dfs-id") opts.strategy.kind = albo::StrategyKind::DfsIterativeDeepening;
    if (strategy == "dfs-ahb") opts.strategy.kind = albo::StrategyKind::DfsAvoidHugeBranch;
    opts.limits.max_total_steps = max_steps;
    opts.limits.max_steps_per_branch = max_branch_steps;
    if (timeout_s) {
      opts.limits.wall_clock = std::chrono::milliseconds(static_cast<std::int64_t>(*timeout_s * 1000.0));
    }
    opts.ub_enabled = ub_mode != "off";
    opts.ub_eager = ub_mode != "lazy";
    albo::TraceLog log;
    if (trace_mode != "none") opts.trace = &log;

    albo::DecideResult result = albo::decide(store, norm.concept_id, opts);

    if (opts.trace) {
      std::string rendered = trace_mode == "text" ? albo::render_trace_text(store, log)
                                                  : albo::render_trace_dot(store, log);
      if (trace_out.empty()) {
        std::cerr << rendered;
      } else {
        std::ofstream out(trace_out, std::ios::binary);
        if (!out) throw albo::Error("cannot write trace file: " + trace_out);
        out << rendered;
      }
    }
    if (print_stats) {
      const auto& st = result.stats;
      std::cerr << "steps=" << st.total_steps << " closed=" << st.branches_closed
                << " abandoned=" << st.branches_abandoned << " max-branch-steps=" << st.max_branch_steps
                << " max-individuals=" << st.max_individuals << " restarts=" << st.restarts << "\n";
    }

    switch (result.verdict) {
      case albo::VerdictKind::Satisfiable: {
        const albo::Model& m = *result.model;
        if (!model_fits_problem(store, m, problem)) {
          std::cerr << "internal error: extracted model fails the original problem\n";
          return kExitInternal;
        }
        if (!model_out.empty()) {
          std::ofstream out(model_out, std::ios::binary);
          if (!out) throw albo::Error("cannot write model file: " + model_out);
          out << albo::serialize_model(m);
          out.close();
          albo::Model reloaded = albo::parse_model(read_file(model_out));
          if (!model_fits_problem(store, reloaded, problem)) {
            std::cerr << "internal error: reloaded model fails the original problem\n";
            return kExitInternal;
          }
        }
        std::cout << "SAT\n";
        return kExitVerdict;
      }
      case albo::VerdictKind::Unsatisfiable:
        std::cout << "UNSAT\n";
        return kExitVerdict;
      case albo::VerdictKind::ResourceLimit:
        std::cout << "LIMIT " << albo::limit_reason_name(result.limit_reason) << "\n";
        return kExitLimit;
    }
    return kExitInternal;
  } catch (const albo::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
