#ifndef ALBO_TERM_HPP
#define ALBO_TERM_HPP

#include <compare>
#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "albo/errors.hpp"

namespace albo {

inline constexpr std::uint32_t kNoIndex = 0xffffffffu;

enum class SymbolKind : std::uint8_t { Individual, Concept, Role };

struct SymbolId {
  std::uint32_t raw = kNoIndex;
  constexpr bool valid() const { return raw != kNoIndex; }
  friend constexpr auto operator<=>(SymbolId, SymbolId) = default;
};

struct ConceptId {
  std::uint32_t raw = kNoIndex;
  constexpr bool valid() const { return raw != kNoIndex; }
  friend constexpr auto operator<=>(ConceptId, ConceptId) = default;
};

struct RoleId {
  std::uint32_t raw = kNoIndex;
  constexpr bool valid() const { return raw != kNoIndex; }
  friend constexpr auto operator<=>(RoleId, RoleId) = default;
};

// Concept constructors. The first five form the core syntax every other
// constructor rewrites into; the rest is surface sugar.
enum class ConceptKind : std::uint8_t {
  Atom,        // concept symbol
  Singleton,   // {a}
  Not,         // not C
  Or,          // (C or D)
  Exists,      // some R . C
  // sugar
  Top,
  Bottom,
  And,            // (C and D)
  Forall,         // all R . C
  Window,         // win R . C   (every C-element is an R-successor)
  Box,            // box C       (universal modality)
  Assertion,      // a : C
  RoleAssertion,  // (a, b) : R
  ConceptIncl,    // C <= D
  RoleIncl,       // R <= S
};

// Role constructors. Core: Atom, Id, Or, Not, Inverse. The restriction
// family (Test .. Cross) has no surface syntax; it exists for programmatic
// construction and is compiled away by encode_restriction_ops().
enum class RoleKind : std::uint8_t {
  Atom,
  Id,
  Or,
  Not,
  Inverse,
  // sugar
  TopRole,
  BottomRole,
  And,
  Diversity,
  // restriction family
  Test,         // C?
  DomRestrict,  // R restricted to sources in C
  RanRestrict,  // R restricted to targets in C
  LeftCyl,      // {(x,y) | x in C}
  RightCyl,     // {(x,y) | y in C}
  Cross,        // C x D
};

struct ConceptNode {
  ConceptKind kind;
  SymbolId sym;    // Atom, Singleton, Assertion, RoleAssertion (first individual)
  SymbolId sym2;   // RoleAssertion (second individual)
  ConceptId lhs;   // first child concept
  ConceptId rhs;   // second child concept
  RoleId role;     // Exists, Forall, Window, RoleAssertion, RoleIncl (lhs)
  RoleId role2;    // RoleIncl (rhs)
};

struct RoleNode {
  RoleKind kind;
  SymbolId sym;   // Atom
  RoleId lhs;     // first child role
  RoleId rhs;     // second child role
  ConceptId c1;   // Test, DomRestrict, RanRestrict, LeftCyl, RightCyl, Cross
  ConceptId c2;   // Cross
};

// Hash-consed term store. Structurally equal terms always receive the same
// id, so id comparison is structural comparison. Nodes are immutable once
// created; interning is serialized internally, so distinct threads may
// build terms in one store concurrently.
class TermStore {
 public:
  TermStore() = default;
  TermStore(const TermStore&) = delete;
  TermStore& operator=(const TermStore&) = delete;

  // --- symbols ---------------------------------------------------------
  SymbolId symbol(std::string_view name, SymbolKind kind);
  std::optional<SymbolId> find_symbol(std::string_view name) const;
  const std::string& name(SymbolId s) const;
  SymbolKind kind(SymbolId s) const;
  std::size_t symbol_count() const;

  // --- concept builders ------------------------------------------------
  ConceptId atom(std::string_view name);
  ConceptId atom(SymbolId s);
  ConceptId singleton(std::string_view individual);
  ConceptId singleton(SymbolId s);
  ConceptId not_(ConceptId c);
  ConceptId or_(ConceptId a, ConceptId b);
  ConceptId exists(RoleId r, ConceptId c);
  ConceptId top();
  ConceptId bottom();
  ConceptId and_(ConceptId a, ConceptId b);
  ConceptId forall(RoleId r, ConceptId c);
  ConceptId window(RoleId r, ConceptId c);
  ConceptId box(ConceptId c);
  ConceptId assertion(SymbolId individual, ConceptId c);
  ConceptId role_assertion(SymbolId a, SymbolId b, RoleId r);
  ConceptId incl(ConceptId a, ConceptId b);
  ConceptId rincl(RoleId a, RoleId b);

  // --- role builders ---------------------------------------------------
  RoleId role(std::string_view name);
  RoleId role(SymbolId s);
  RoleId id_role();
  RoleId role_or(RoleId a, RoleId b);
  RoleId role_not(RoleId r);
  RoleId inverse(RoleId r);
  RoleId top_role();
  RoleId bottom_role();
  RoleId role_and(RoleId a, RoleId b);
  RoleId diversity();
  RoleId test(ConceptId c);
  RoleId dom_restrict(RoleId r, ConceptId c);
  RoleId ran_restrict(RoleId r, ConceptId c);
  RoleId left_cyl(ConceptId c);
  RoleId right_cyl(ConceptId c);
  RoleId cross(ConceptId a, ConceptId b);

  const ConceptNode& node(ConceptId c) const;
  const RoleNode& node(RoleId r) const;

 private:
  ConceptId intern_concept(const ConceptNode& n);
  RoleId intern_role(const RoleNode& n);

  mutable std::mutex mutex_;
  std::deque<std::string> symbol_names_;
  std::deque<SymbolKind> symbol_kinds_;
  std::unordered_map<std::string, std::uint32_t> symbol_index_;
  std::deque<ConceptNode> concepts_;
  std::deque<RoleNode> roles_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> concept_index_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> role_index_;
};

// --- size metrics -------------------------------------------------------

// Symbol count of a concept: every constructor node, concept/role symbol
// occurrence and individual occurrence counts one. Atoms, singletons and
// `id` are single nodes.
std::size_t length(const TermStore& store, ConceptId c);
std::size_t length(const TermStore& store, RoleId r);

// Number of distinct individuals occurring in `c`, plus one for the root
// label every derivation introduces.
std::size_t count_individuals(const TermStore& store, ConceptId c);

// Distinct existential subconcepts of `c` (used by the per-branch step
// bound).
std::size_t exists_subterm_count(const TermStore& store, ConceptId c);

// True when `c` uses only the five core concept constructors and the four
// core role constructors, with inverse applied to role atoms only.
bool is_core(const TermStore& store, ConceptId c);

// Collects distinct individual symbols occurring in `c`, in first-occurrence
// order (left to right).
std::vector<SymbolId> individuals_of(const TermStore& store, ConceptId c);

}  // namespace albo

template <>
struct std::hash<albo::ConceptId> {
  std::size_t operator()(albo::ConceptId c) const noexcept { return std::hash<std::uint32_t>{}(c.raw); }
};
template <>
struct std::hash<albo::RoleId> {
  std::size_t operator()(albo::RoleId r) const noexcept { return std::hash<std::uint32_t>{}(r.raw); }
};
template <>
struct std::hash<albo::SymbolId> {
  std::size_t operator()(albo::SymbolId s) const noexcept { return std::hash<std::uint32_t>{}(s.raw); }
};

#endif  // ALBO_TERM_HPP
