#ifndef ALBO_PROBLEM_HPP
#define ALBO_PROBLEM_HPP

#include <vector>

#include "albo/term.hpp"

namespace albo {

// A parsed reasoning problem: goal concepts to test for joint satisfiability
// with respect to the TBox / RBox / ABox statements. Statements are stored
// as the corresponding statement-valued concept nodes.
struct Problem {
  std::vector<ConceptId> goals;
  std::vector<ConceptId> tbox;  // ConceptIncl nodes
  std::vector<ConceptId> rbox;  // RoleIncl nodes
  std::vector<ConceptId> abox;  // Assertion / RoleAssertion nodes
  bool una = false;             // unique name assumption, off by default

  std::vector<ConceptId> statements() const {
    std::vector<ConceptId> all;
    all.reserve(tbox.size() + rbox.size() + abox.size());
    all.insert(all.end(), tbox.begin(), tbox.end());
    all.insert(all.end(), rbox.begin(), rbox.end());
    all.insert(all.end(), abox.begin(), abox.end());
    return all;
  }
};

}  // namespace albo

#endif  // ALBO_PROBLEM_HPP
