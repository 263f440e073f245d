#ifndef ALBO_PARSE_HPP
#define ALBO_PARSE_HPP

#include <string_view>

#include "albo/problem.hpp"
#include "albo/term.hpp"

namespace albo {

// Parses a whole problem file:
//
//   problem := (stmt ";")*
//   stmt    := "sat" concept            goal concept
//            | concept "<=" concept     TBox inclusion
//            | role "<=" role           RBox inclusion
//            | IDENT ":" concept        ABox concept assertion
//            | "(" IDENT "," IDENT ")" ":" role    ABox role assertion
//            | "una"                    enable the unique name assumption
//
// `#` starts a comment running to end of line. Identifiers beginning with
// `$` are reserved for symbols introduced by normalization and rejected.
//
// Throws ParseError on malformed input and AlphabetClash when one
// identifier is used in two alphabets.
Problem parse_problem(TermStore& store, std::string_view text);

// Parses a single concept / role expression (the whole string).
ConceptId parse_concept(TermStore& store, std::string_view text);
RoleId parse_role(TermStore& store, std::string_view text);

}  // namespace albo

#endif  // ALBO_PARSE_HPP
