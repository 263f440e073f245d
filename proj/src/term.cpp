#include "albo/term.hpp"

#include <algorithm>
#include <unordered_set>

namespace albo {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t concept_key(const ConceptNode& n) {
  std::uint64_t h = static_cast<std::uint64_t>(n.kind);
  h = mix(h, n.sym.raw);
  h = mix(h, n.sym2.raw);
  h = mix(h, n.lhs.raw);
  h = mix(h, n.rhs.raw);
  h = mix(h, n.role.raw);
  h = mix(h, n.role2.raw);
  return h;
}

std::uint64_t role_key(const RoleNode& n) {
  std::uint64_t h = static_cast<std::uint64_t>(n.kind) + 0x51ull;
  h = mix(h, n.sym.raw);
  h = mix(h, n.lhs.raw);
  h = mix(h, n.rhs.raw);
  h = mix(h, n.c1.raw);
  h = mix(h, n.c2.raw);
  return h;
}

bool same_node(const ConceptNode& a, const ConceptNode& b) {
  return a.kind == b.kind && a.sym == b.sym && a.sym2 == b.sym2 && a.lhs == b.lhs && a.rhs == b.rhs &&
         a.role == b.role && a.role2 == b.role2;
}

bool same_node(const RoleNode& a, const RoleNode& b) {
  return a.kind == b.kind && a.sym == b.sym && a.lhs == b.lhs && a.rhs == b.rhs && a.c1 == b.c1 && a.c2 == b.c2;
}

const char* kind_word(SymbolKind k) {
  switch (k) {
    case SymbolKind::Individual: return "individual";
    case SymbolKind::Concept: return "concept symbol";
    case SymbolKind::Role: return "role symbol";
  }
  return "symbol";
}

}  // namespace

SymbolId TermStore::symbol(std::string_view name, SymbolKind kind) {
  std::lock_guard lock(mutex_);
  auto it = symbol_index_.find(std::string(name));
  if (it != symbol_index_.end()) {
    SymbolId s{it->second};
    if (symbol_kinds_[s.raw] != kind) {
      throw AlphabetClash("identifier '" + std::string(name) + "' already used as " +
                          kind_word(symbol_kinds_[s.raw]) + ", cannot reuse it as " + kind_word(kind));
    }
    return s;
  }
  std::uint32_t idx = static_cast<std::uint32_t>(symbol_names_.size());
  symbol_names_.emplace_back(name);
  symbol_kinds_.push_back(kind);
  symbol_index_.emplace(std::string(name), idx);
  return SymbolId{idx};
}

std::optional<SymbolId> TermStore::find_symbol(std::string_view name) const {
  std::lock_guard lock(mutex_);
  auto it = symbol_index_.find(std::string(name));
  if (it == symbol_index_.end()) return std::nullopt;
  return SymbolId{it->second};
}

const std::string& TermStore::name(SymbolId s) const { return symbol_names_[s.raw]; }

SymbolKind TermStore::kind(SymbolId s) const { return symbol_kinds_[s.raw]; }

std::size_t TermStore::symbol_count() const {
  std::lock_guard lock(mutex_);
  return symbol_names_.size();
}

ConceptId TermStore::intern_concept(const ConceptNode& n) {
  std::lock_guard lock(mutex_);
  std::uint64_t key = concept_key(n);
  auto& bucket = concept_index_[key];
  for (std::uint32_t idx : bucket) {
    if (same_node(concepts_[idx], n)) return ConceptId{idx};
  }
  std::uint32_t idx = static_cast<std::uint32_t>(concepts_.size());
  concepts_.push_back(n);
  bucket.push_back(idx);
  return ConceptId{idx};
}

RoleId TermStore::intern_role(const RoleNode& n) {
  std::lock_guard lock(mutex_);
  std::uint64_t key = role_key(n);
  auto& bucket = role_index_[key];
  for (std::uint32_t idx : bucket) {
    if (same_node(roles_[idx], n)) return RoleId{idx};
  }
  std::uint32_t idx = static_cast<std::uint32_t>(roles_.size());
  roles_.push_back(n);
  bucket.push_back(idx);
  return RoleId{idx};
}

ConceptId TermStore::atom(std::string_view n) { return atom(symbol(n, SymbolKind::Concept)); }
ConceptId TermStore::atom(SymbolId s) { return intern_concept({ConceptKind::Atom, s, {}, {}, {}, {}, {}}); }
ConceptId TermStore::singleton(std::string_view n) { return singleton(symbol(n, SymbolKind::Individual)); }
ConceptId TermStore::singleton(SymbolId s) { return intern_concept({ConceptKind::Singleton, s, {}, {}, {}, {}, {}}); }
ConceptId TermStore::not_(ConceptId c) { return intern_concept({ConceptKind::Not, {}, {}, c, {}, {}, {}}); }
ConceptId TermStore::or_(ConceptId a, ConceptId b) { return intern_concept({ConceptKind::Or, {}, {}, a, b, {}, {}}); }
ConceptId TermStore::exists(RoleId r, ConceptId c) {
  return intern_concept({ConceptKind::Exists, {}, {}, c, {}, r, {}});
}
ConceptId TermStore::top() { return intern_concept({ConceptKind::Top, {}, {}, {}, {}, {}, {}}); }
ConceptId TermStore::bottom() { return intern_concept({ConceptKind::Bottom, {}, {}, {}, {}, {}, {}}); }
ConceptId TermStore::and_(ConceptId a, ConceptId b) { return intern_concept({ConceptKind::And, {}, {}, a, b, {}, {}}); }
ConceptId TermStore::forall(RoleId r, ConceptId c) {
  return intern_concept({ConceptKind::Forall, {}, {}, c, {}, r, {}});
}
ConceptId TermStore::window(RoleId r, ConceptId c) {
  return intern_concept({ConceptKind::Window, {}, {}, c, {}, r, {}});
}
ConceptId TermStore::box(ConceptId c) { return intern_concept({ConceptKind::Box, {}, {}, c, {}, {}, {}}); }
ConceptId TermStore::assertion(SymbolId individual, ConceptId c) {
  return intern_concept({ConceptKind::Assertion, individual, {}, c, {}, {}, {}});
}
ConceptId TermStore::role_assertion(SymbolId a, SymbolId b, RoleId r) {
  return intern_concept({ConceptKind::RoleAssertion, a, b, {}, {}, r, {}});
}
ConceptId TermStore::incl(ConceptId a, ConceptId b) {
  return intern_concept({ConceptKind::ConceptIncl, {}, {}, a, b, {}, {}});
}
ConceptId TermStore::rincl(RoleId a, RoleId b) {
  return intern_concept({ConceptKind::RoleIncl, {}, {}, {}, {}, a, b});
}

RoleId TermStore::role(std::string_view n) { return role(symbol(n, SymbolKind::Role)); }
RoleId TermStore::role(SymbolId s) { return intern_role({RoleKind::Atom, s, {}, {}, {}, {}}); }
RoleId TermStore::id_role() { return intern_role({RoleKind::Id, {}, {}, {}, {}, {}}); }
RoleId TermStore::role_or(RoleId a, RoleId b) { return intern_role({RoleKind::Or, {}, a, b, {}, {}}); }
RoleId TermStore::role_not(RoleId r) { return intern_role({RoleKind::Not, {}, r, {}, {}, {}}); }
RoleId TermStore::inverse(RoleId r) { return intern_role({RoleKind::Inverse, {}, r, {}, {}, {}}); }
RoleId TermStore::top_role() { return intern_role({RoleKind::TopRole, {}, {}, {}, {}, {}}); }
RoleId TermStore::bottom_role() { return intern_role({RoleKind::BottomRole, {}, {}, {}, {}, {}}); }
RoleId TermStore::role_and(RoleId a, RoleId b) { return intern_role({RoleKind::And, {}, a, b, {}, {}}); }
RoleId TermStore::diversity() { return intern_role({RoleKind::Diversity, {}, {}, {}, {}, {}}); }
RoleId TermStore::test(ConceptId c) { return intern_role({RoleKind::Test, {}, {}, {}, c, {}}); }
RoleId TermStore::dom_restrict(RoleId r, ConceptId c) { return intern_role({RoleKind::DomRestrict, {}, r, {}, c, {}}); }
RoleId TermStore::ran_restrict(RoleId r, ConceptId c) { return intern_role({RoleKind::RanRestrict, {}, r, {}, c, {}}); }
RoleId TermStore::left_cyl(ConceptId c) { return intern_role({RoleKind::LeftCyl, {}, {}, {}, c, {}}); }
RoleId TermStore::right_cyl(ConceptId c) { return intern_role({RoleKind::RightCyl, {}, {}, {}, c, {}}); }
RoleId TermStore::cross(ConceptId a, ConceptId b) { return intern_role({RoleKind::Cross, {}, {}, {}, a, b}); }

const ConceptNode& TermStore::node(ConceptId c) const { return concepts_[c.raw]; }
const RoleNode& TermStore::node(RoleId r) const { return roles_[r.raw]; }

std::size_t length(const TermStore& store, RoleId r) {
  const RoleNode& n = store.node(r);
  switch (n.kind) {
    case RoleKind::Atom:
    case RoleKind::Id:
    case RoleKind::TopRole:
    case RoleKind::BottomRole:
    case RoleKind::Diversity:
      return 1;
    case RoleKind::Not:
    case RoleKind::Inverse:
      return 1 + length(store, n.lhs);
    case RoleKind::Or:
    case RoleKind::And:
      return 1 + length(store, n.lhs) + length(store, n.rhs);
    case RoleKind::Test:
    case RoleKind::LeftCyl:
    case RoleKind::RightCyl:
      return 1 + length(store, n.c1);
    case RoleKind::DomRestrict:
    case RoleKind::RanRestrict:
      return 1 + length(store, n.lhs) + length(store, n.c1);
    case RoleKind::Cross:
      return 1 + length(store, n.c1) + length(store, n.c2);
  }
  return 1;
}

std::size_t length(const TermStore& store, ConceptId c) {
  const ConceptNode& n = store.node(c);
  switch (n.kind) {
    case ConceptKind::Atom:
    case ConceptKind::Singleton:
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return 1;
    case ConceptKind::Not:
    case ConceptKind::Box:
      return 1 + length(store, n.lhs);
    case ConceptKind::Or:
    case ConceptKind::And:
    case ConceptKind::ConceptIncl:
      return 1 + length(store, n.lhs) + length(store, n.rhs);
    case ConceptKind::Exists:
    case ConceptKind::Forall:
    case ConceptKind::Window:
      return 1 + length(store, n.role) + length(store, n.lhs);
    case ConceptKind::Assertion:
      return 2 + length(store, n.lhs);
    case ConceptKind::RoleAssertion:
      return 3 + length(store, n.role);
    case ConceptKind::RoleIncl:
      return 1 + length(store, n.role) + length(store, n.role2);
  }
  return 1;
}

namespace {

void collect_individuals_role(const TermStore& store, RoleId r, std::vector<SymbolId>& out);

void collect_individuals(const TermStore& store, ConceptId c, std::vector<SymbolId>& out) {
  const ConceptNode& n = store.node(c);
  auto add = [&out](SymbolId s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  switch (n.kind) {
    case ConceptKind::Singleton: add(n.sym); break;
    case ConceptKind::Assertion:
      add(n.sym);
      collect_individuals(store, n.lhs, out);
      break;
    case ConceptKind::RoleAssertion:
      add(n.sym);
      add(n.sym2);
      collect_individuals_role(store, n.role, out);
      break;
    default: break;
  }
  if (n.lhs.valid() && n.kind != ConceptKind::Assertion) collect_individuals(store, n.lhs, out);
  if (n.rhs.valid()) collect_individuals(store, n.rhs, out);
  if (n.role.valid() && n.kind != ConceptKind::RoleAssertion) collect_individuals_role(store, n.role, out);
  if (n.role2.valid()) collect_individuals_role(store, n.role2, out);
}

void collect_individuals_role(const TermStore& store, RoleId r, std::vector<SymbolId>& out) {
  const RoleNode& n = store.node(r);
  if (n.lhs.valid()) collect_individuals_role(store, n.lhs, out);
  if (n.rhs.valid()) collect_individuals_role(store, n.rhs, out);
  if (n.c1.valid()) collect_individuals(store, n.c1, out);
  if (n.c2.valid()) collect_individuals(store, n.c2, out);
}

void collect_exists(const TermStore& store, ConceptId c, std::unordered_set<std::uint32_t>& seen,
                    std::unordered_set<std::uint32_t>& exists) {
  if (!seen.insert(c.raw).second) return;
  const ConceptNode& n = store.node(c);
  if (n.kind == ConceptKind::Exists) exists.insert(c.raw);
  if (n.lhs.valid()) collect_exists(store, n.lhs, seen, exists);
  if (n.rhs.valid()) collect_exists(store, n.rhs, seen, exists);
}

bool is_core_role(const TermStore& store, RoleId r) {
  const RoleNode& n = store.node(r);
  switch (n.kind) {
    case RoleKind::Atom:
    case RoleKind::Id:
      return true;
    case RoleKind::Or:
      return is_core_role(store, n.lhs) && is_core_role(store, n.rhs);
    case RoleKind::Not:
      return is_core_role(store, n.lhs);
    case RoleKind::Inverse:
      return store.node(n.lhs).kind == RoleKind::Atom;
    default:
      return false;
  }
}

}  // namespace

std::vector<SymbolId> individuals_of(const TermStore& store, ConceptId c) {
  std::vector<SymbolId> out;
  collect_individuals(store, c, out);
  return out;
}

std::size_t count_individuals(const TermStore& store, ConceptId c) {
  return individuals_of(store, c).size() + 1;
}

std::size_t exists_subterm_count(const TermStore& store, ConceptId c) {
  std::unordered_set<std::uint32_t> seen, exists;
  collect_exists(store, c, seen, exists);
  return exists.size();
}

bool is_core(const TermStore& store, ConceptId c) {
  const ConceptNode& n = store.node(c);
  switch (n.kind) {
    case ConceptKind::Atom:
    case ConceptKind::Singleton:
      return true;
    case ConceptKind::Not:
      return is_core(store, n.lhs);
    case ConceptKind::Or:
      return is_core(store, n.lhs) && is_core(store, n.rhs);
    case ConceptKind::Exists:
      return is_core_role(store, n.role) && is_core(store, n.lhs);
    default:
      return false;
  }
}

}  // namespace albo
