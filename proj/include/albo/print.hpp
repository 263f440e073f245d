#ifndef ALBO_PRINT_HPP
#define ALBO_PRINT_HPP

#include <string>

#include "albo/term.hpp"

namespace albo {

// Renders a concept in the surface grammar. The printer never simplifies,
// so `not not A` prints as written. Reparsing the output of a
// grammar-expressible concept yields the identical term id.
std::string print_concept(const TermStore& store, ConceptId c);
std::string print_role(const TermStore& store, RoleId r);

}  // namespace albo

#endif  // ALBO_PRINT_HPP
