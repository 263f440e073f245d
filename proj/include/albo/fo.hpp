#ifndef ALBO_FO_HPP
#define ALBO_FO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "albo/model.hpp"
#include "albo/term.hpp"

namespace albo {

// Two-variable first-order formulas with equality over the variables x, y,
// unary/binary predicates and individual constants.
enum class FoVar : std::uint8_t { X, Y };

enum class FoKind : std::uint8_t {
  Pred1,       // P(v)
  Pred2,       // P(v1, v2)
  EqVarVar,    // v1 = v2
  EqVarConst,  // v = c
  Not,
  Or,
  And,
  Exists,  // exists v . phi
};

struct FoNode {
  FoKind kind;
  SymbolId sym;  // predicate or constant
  FoVar v1 = FoVar::X;
  FoVar v2 = FoVar::Y;
  std::uint32_t lhs = kNoIndex;
  std::uint32_t rhs = kNoIndex;
};

// Arena-allocated formula; `size()` is the node count.
struct FoFormula {
  std::vector<FoNode> nodes;
  std::uint32_t root = kNoIndex;
  std::size_t size() const { return nodes.size(); }
};

// Standard translation of a core concept, with free variable x. Linear in
// the length of the concept.
FoFormula st_translate(const TermStore& store, ConceptId c);

// Appends the translation of a role with the given variable pair to `out`.
std::uint32_t st_role(const TermStore& store, RoleId r, FoVar vx, FoVar vy, FoFormula& out);

// Evaluates a formula in a finite model under a (possibly partial) variable
// assignment. Throws UnboundIndividual for constants the model does not
// assign, and InternalError if a free variable is unassigned.
bool fo_eval(const TermStore& store, const Model& m, const FoFormula& f, std::optional<std::size_t> x,
             std::optional<std::size_t> y);

// Textual form, for diagnostics.
std::string fo_to_string(const TermStore& store, const FoFormula& f);

}  // namespace albo

#endif  // ALBO_FO_HPP
