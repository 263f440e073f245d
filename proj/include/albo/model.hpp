#ifndef ALBO_MODEL_HPP
#define ALBO_MODEL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "albo/term.hpp"

namespace albo {

class Branch;

// A finite interpretation. Elements are 0..domain-1; symbol extensions are
// keyed by name and kept sorted, so equality is structural and
// serialization is canonical. Symbols absent from the maps denote the
// empty extension.
struct Model {
  std::size_t domain = 0;
  std::map<std::string, std::vector<std::size_t>> concepts;
  std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> roles;
  std::map<std::string, std::size_t> individuals;

  bool operator==(const Model&) const = default;
};

// Extension of `c` in `m`, as a sorted element list. Handles the full
// (sugared) syntax directly by the defining semantics. Throws
// UnboundIndividual when `c` mentions an individual `m` does not assign.
std::vector<std::size_t> eval_concept(const TermStore& store, const Model& m, ConceptId c);

// Set of pairs in the extension of `r`.
std::vector<std::pair<std::size_t, std::size_t>> eval_role(const TermStore& store, const Model& m, RoleId r);

// True iff the extension of `c` is nonempty.
bool satisfied(const TermStore& store, const Model& m, ConceptId c);

// Extracts the model induced by a fully expanded open branch: elements are
// the equality classes of its individuals, a role atom holds between two
// classes iff the branch contains a link between members, and a concept
// atom holds on a class iff some member carries it. Throws ClosedBranch /
// NotExpanded when the branch is closed or still has applicable rules.
Model extract_model(const Branch& b);

// Line-oriented canonical text form:
//   domain 2
//   concept A: 0 1
//   role Q: (0,1)
//   ind a = 0
std::string serialize_model(const Model& m);
Model parse_model(std::string_view text);

}  // namespace albo

#endif  // ALBO_MODEL_HPP
