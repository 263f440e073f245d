#include "albo/trace.hpp"

#include <map>
#include <sstream>

#include "albo/print.hpp"

namespace albo {

namespace {

struct TextRenderer {
  const TermStore& store;
  const TraceLog& log;
  std::ostringstream out;
  int line_no = 0;
  std::vector<int> fact_line;  // per path: fact index -> line number

  // First event applied at each node, in application order.
  std::map<std::uint32_t, const TraceLog::Event*> expansion;

  explicit TextRenderer(const TermStore& s, const TraceLog& l) : store(s), log(l) {
    for (const auto& ev : log.events) {
      if (ev.rule == Rule::Given) continue;
      expansion.emplace(ev.node, &ev);
    }
  }

  std::string premises_of(const TraceLog::Added& a) const {
    std::uint32_t q1 = a.prem1;
    std::uint32_t q2 = a.prem2;
    std::string s;
    if (q1 != kNoIndex && q1 < fact_line.size()) s += std::to_string(fact_line[q1]);
    if (q2 != kNoIndex && q2 < fact_line.size()) {
      if (!s.empty()) s += ",";
      s += std::to_string(fact_line[q2]);
    }
    return s;
  }

  void emit_added(const std::vector<TraceLog::Added>& added, int indent, bool mark_first) {
    bool first = true;
    for (const auto& a : added) {
      ++line_no;
      out << line_no << ".";
      for (int i = 0; i < indent + 1; ++i) out << "  ";
      if (mark_first && first) out << "> ";
      if (a.via == Rule::Clash) {
        out << "unsatisfiable    (" << rule_name(Rule::Clash) << ") " << premises_of(a) << "\n";
        continue;
      }
      out << store.name(a.label) << " : " << print_concept(store, a.concept_id);
      out << "    (" << rule_name(a.via) << ")";
      std::string prem = premises_of(a);
      if (!prem.empty()) out << " " << prem;
      out << "\n";
      if (a.fact_index != kNoIndex) {
        if (fact_line.size() <= a.fact_index) fact_line.resize(a.fact_index + 1, 0);
        fact_line[a.fact_index] = line_no;
      }
      first = false;
    }
  }

  void render_node(std::uint32_t node, int indent) {
    auto it = expansion.find(node);
    if (it == expansion.end()) return;
    const TraceLog::Event& ev = *it->second;
    if (ev.children.size() == 1) {
      emit_added(ev.children[0].added, indent, false);
      render_node(ev.children[0].node, indent);
      return;
    }
    for (const auto& child : ev.children) {
      std::size_t saved = fact_line.size();
      emit_added(child.added, indent + 1, true);
      render_node(child.node, indent + 1);
      fact_line.resize(saved);
    }
  }

  std::string run() {
    bool first_root = true;
    for (std::uint32_t root : log.roots) {
      const TraceLog::Event* given = nullptr;
      for (const auto& ev : log.events) {
        if (ev.rule == Rule::Given && !ev.children.empty() && ev.children[0].node == root) {
          given = &ev;
          break;
        }
      }
      if (!first_root) out << "--- restart ---\n";
      first_root = false;
      fact_line.clear();
      if (given != nullptr) {
        emit_added(given->children[0].added, 0, false);
      }
      render_node(root, 0);
    }
    return out.str();
  }
};

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string render_trace_text(const TermStore& store, const TraceLog& log) {
  if (log.events.empty()) return "";
  TextRenderer r(store, log);
  return r.run();
}

std::string render_trace_dot(const TermStore& store, const TraceLog& log) {
  std::ostringstream out;
  out << "digraph tableau {\n";
  if (!log.events.empty()) {
    out << "  node [shape=box];\n";
    for (const auto& ev : log.events) {
      if (ev.rule == Rule::Given) {
        std::uint32_t n = ev.children[0].node;
        std::string label = "given";
        for (const auto& a : ev.children[0].added) {
          if (a.via == Rule::Given) {
            label += "\\n" + dot_escape(store.name(a.label) + " : " + print_concept(store, a.concept_id));
          }
        }
        out << "  n" << n << " [label=\"" << label << "\"];\n";
        continue;
      }
      for (std::size_t k = 0; k < ev.children.size(); ++k) {
        const auto& child = ev.children[k];
        std::string label = "(" + std::string(rule_name(ev.rule)) + ")";
        for (const auto& a : child.added) {
          if (a.via == Rule::Clash) {
            label += "\\nunsatisfiable";
          } else {
            label += "\\n" + dot_escape(store.name(a.label) + " : " + print_concept(store, a.concept_id));
          }
        }
        out << "  n" << child.node << " [label=\"" << label << "\"];\n";
        out << "  n" << ev.node << " -> n" << child.node;
        if (ev.children.size() == 2) {
          const char* tag = ev.rule == Rule::Ub ? (k == 0 ? "merge" : "distinct") : (k == 0 ? "L" : "R");
          out << " [label=\"" << tag << "\"]";
        }
        out << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace albo
