#ifndef ALBO_ENUMERATE_HPP
#define ALBO_ENUMERATE_HPP

#include <cstddef>
#include <optional>

#include "albo/model.hpp"
#include "albo/term.hpp"

namespace albo {

// Brute-force finite model search, intended for tiny alphabets (a few
// unary and binary symbols, at most a couple of individuals).
//
// Returns the first model of `c` in canonical order: domain sizes
// ascending; for a fixed size, interpretations ordered as one counter over
// (individual assignments, concept extensions, role extensions),
// individual digits most significant — symbols in name order, elements and
// pairs in ascending / row-major order. Absence of a model up to
// `max_domain` is the value nullopt.
//
// The search prunes interpretation prefixes that can no longer satisfy `c`
// (three-valued evaluation), which never changes the returned model.
std::optional<Model> enumerate_model(const TermStore& store, ConceptId c, std::size_t max_domain);

}  // namespace albo

#endif  // ALBO_ENUMERATE_HPP
