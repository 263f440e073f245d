#ifndef ALBO_NORMALIZE_HPP
#define ALBO_NORMALIZE_HPP

#include <map>
#include <string>
#include <vector>

#include "albo/problem.hpp"
#include "albo/term.hpp"

namespace albo {

// Reserved symbols introduced by normalization. `$top` backs the top
// concept (as $top or not $top), `$univ` backs the universal role. The
// parser rejects `$`-prefixed identifiers, so user input cannot capture
// them.
inline constexpr const char* kTopSymbol = "$top";
inline constexpr const char* kUnivSymbol = "$univ";

// Rewrites every defined operator into the five core concept constructors
// and four core role constructors. Statement forms (assertions,
// inclusions) become closed concepts. Restriction-family role operators
// (test, dom/ran restriction, cylindrifications, cross product) have no
// direct rewriting and must be compiled away by encode_restriction_ops()
// first; desugar throws Error if it meets one.
ConceptId desugar(TermStore& store, ConceptId c);

// Replaces every restriction-family role occurrence by a fresh role symbol
// `$cyl<n>` plus two defining inclusions per distinct encoded concept.
// The rewritten concept together with the definitions is satisfiability
// equivalent to the input, and larger only by a constant factor.
struct EncodeResult {
  ConceptId concept_id;
  std::vector<ConceptId> definitions;            // ConceptIncl statements
  std::map<std::string, std::string> fresh_roles;  // fresh role name -> printed source concept
};
EncodeResult encode_restriction_ops(TermStore& store, ConceptId c);

// Conjoins the goals with every (desugared) statement of the knowledge
// base into a single core concept. Under the unique name assumption a
// disjointness conjunct is added for every pair of distinct individuals
// occurring in the problem. Throws EmptyProblem when there is no goal.
ConceptId internalize(TermStore& store, const Problem& p);

// Pushes role inverse through union, negation and identity until it only
// wraps role atoms; double inverses cancel. Input must be core syntax.
ConceptId push_inverse(TermStore& store, ConceptId c);
RoleId push_inverse_role(TermStore& store, RoleId r);

// Full pipeline: encode restriction operators (collecting their defining
// inclusions), internalize, push inverse. The result is core syntax with
// inverse applied to atoms only.
struct NormalizedInput {
  ConceptId concept_id;
  std::map<std::string, std::string> fresh_roles;
};
NormalizedInput normalize(TermStore& store, const Problem& p);
NormalizedInput normalize(TermStore& store, ConceptId goal);

}  // namespace albo

#endif  // ALBO_NORMALIZE_HPP
