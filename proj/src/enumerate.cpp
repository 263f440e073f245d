#include "albo/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "albo/errors.hpp"

namespace albo {

namespace {

enum class Tri : std::uint8_t { F, T, U };

Tri tri(bool b) { return b ? Tri::T : Tri::F; }

Tri not3(Tri a) {
  if (a == Tri::U) return Tri::U;
  return a == Tri::T ? Tri::F : Tri::T;
}

Tri or3(Tri a, Tri b) {
  if (a == Tri::T || b == Tri::T) return Tri::T;
  if (a == Tri::F && b == Tri::F) return Tri::F;
  return Tri::U;
}

Tri and3(Tri a, Tri b) {
  if (a == Tri::F || b == Tri::F) return Tri::F;
  if (a == Tri::T && b == Tri::T) return Tri::T;
  return Tri::U;
}

struct SymbolSets {
  std::vector<SymbolId> concepts;     // sorted by name
  std::vector<SymbolId> roles;        // sorted by name
  std::vector<SymbolId> individuals;  // sorted by name
};

void collect_symbols_role(const TermStore& s, RoleId r, SymbolSets& out);

void collect_symbols(const TermStore& s, ConceptId c, SymbolSets& out) {
  const ConceptNode& n = s.node(c);
  switch (n.kind) {
    case ConceptKind::Atom: out.concepts.push_back(n.sym); break;
    case ConceptKind::Singleton: out.individuals.push_back(n.sym); break;
    case ConceptKind::Assertion: out.individuals.push_back(n.sym); break;
    case ConceptKind::RoleAssertion:
      out.individuals.push_back(n.sym);
      out.individuals.push_back(n.sym2);
      break;
    default: break;
  }
  if (n.lhs.valid()) collect_symbols(s, n.lhs, out);
  if (n.rhs.valid()) collect_symbols(s, n.rhs, out);
  if (n.role.valid()) collect_symbols_role(s, n.role, out);
  if (n.role2.valid()) collect_symbols_role(s, n.role2, out);
}

void collect_symbols_role(const TermStore& s, RoleId r, SymbolSets& out) {
  const RoleNode& n = s.node(r);
  if (n.kind == RoleKind::Atom) out.roles.push_back(n.sym);
  if (n.lhs.valid()) collect_symbols_role(s, n.lhs, out);
  if (n.rhs.valid()) collect_symbols_role(s, n.rhs, out);
  if (n.c1.valid()) collect_symbols(s, n.c1, out);
  if (n.c2.valid()) collect_symbols(s, n.c2, out);
}

void sort_unique(const TermStore& s, std::vector<SymbolId>& v) {
  std::sort(v.begin(), v.end(), [&](SymbolId a, SymbolId b) { return s.name(a) < s.name(b); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Atomic role literal read by a role expression at a fixed pair.
struct AtomRef {
  std::size_t sym;  // index into SymbolSets::roles
  std::size_t x, y;
  friend auto operator<=>(const AtomRef&, const AtomRef&) = default;
};

class Search {
 public:
  Search(const TermStore& s, ConceptId c, std::size_t n, const SymbolSets& syms)
      : s_(s),
        goal_(c),
        n_(n),
        syms_(syms),
        conc_val_(syms.concepts.size() * n, Tri::U),
        role_val_(syms.roles.size() * n * n, Tri::U),
        ind_val_(syms.individuals.size(), kNoIndex) {
    for (std::size_t i = 0; i < syms_.concepts.size(); ++i) conc_index_[syms_.concepts[i].raw] = i;
    for (std::size_t i = 0; i < syms_.roles.size(); ++i) role_index_[syms_.roles[i].raw] = i;
    for (std::size_t i = 0; i < syms_.individuals.size(); ++i) ind_index_[syms_.individuals[i].raw] = i;
  }

  std::optional<Model> run() {
    if (dfs(0)) return build_model();
    return std::nullopt;
  }

 private:
  std::size_t total_vars() const { return conc_val_.size() + role_val_.size() + ind_val_.size(); }

  bool dfs(std::size_t depth) {
    Tri t = satisfied3();
    if (t == Tri::F) return false;
    if (t == Tri::T) {
      fill_minimal();
      return true;
    }
    if (depth == total_vars()) throw InternalError("enumeration reached a full assignment still undetermined");
    if (depth < ind_val_.size()) {
      for (std::size_t e = 0; e < n_; ++e) {
        ind_val_[depth] = e;
        if (dfs(depth + 1)) return true;
      }
      ind_val_[depth] = kNoIndex;
      return false;
    }
    std::size_t cd = depth - ind_val_.size();
    if (cd < conc_val_.size()) {
      for (int v = 0; v < 2; ++v) {
        conc_val_[cd] = tri(v != 0);
        if (dfs(depth + 1)) return true;
      }
      conc_val_[cd] = Tri::U;
      return false;
    }
    std::size_t rd = cd - conc_val_.size();
    for (int v = 0; v < 2; ++v) {
      role_val_[rd] = tri(v != 0);
      if (dfs(depth + 1)) return true;
    }
    role_val_[rd] = Tri::U;
    return false;
  }

  void fill_minimal() {
    for (auto& v : conc_val_)
      if (v == Tri::U) v = Tri::F;
    for (auto& v : role_val_)
      if (v == Tri::U) v = Tri::F;
    for (auto& v : ind_val_)
      if (v == kNoIndex) v = 0;
  }

  Model build_model() const {
    Model m;
    m.domain = n_;
    for (std::size_t i = 0; i < syms_.concepts.size(); ++i) {
      auto& ext = m.concepts[s_.name(syms_.concepts[i])];
      for (std::size_t e = 0; e < n_; ++e)
        if (conc_val_[i * n_ + e] == Tri::T) ext.push_back(e);
      if (ext.empty()) m.concepts.erase(s_.name(syms_.concepts[i]));
    }
    for (std::size_t i = 0; i < syms_.roles.size(); ++i) {
      auto& ext = m.roles[s_.name(syms_.roles[i])];
      for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y = 0; y < n_; ++y)
          if (role_val_[(i * n_ + x) * n_ + y] == Tri::T) ext.emplace_back(x, y);
      if (ext.empty()) m.roles.erase(s_.name(syms_.roles[i]));
    }
    for (std::size_t i = 0; i < syms_.individuals.size(); ++i) {
      m.individuals[s_.name(syms_.individuals[i])] = ind_val_[i];
    }
    return m;
  }

  Tri satisfied3() const {
    Tri acc = Tri::F;
    for (std::size_t x = 0; x < n_; ++x) {
      Tri t = cv(goal_, x);
      if (t == Tri::T) return Tri::T;
      acc = or3(acc, t);
    }
    return acc;
  }

  // --- three-valued evaluation ------------------------------------------

  Tri cv(ConceptId c, std::size_t x) const {
    const ConceptNode& n = s_.node(c);
    switch (n.kind) {
      case ConceptKind::Atom: return conc_val_[conc_index_.at(n.sym.raw) * n_ + x];
      case ConceptKind::Singleton: {
        std::size_t v = ind_val_[ind_index_.at(n.sym.raw)];
        return v == kNoIndex ? Tri::U : tri(v == x);
      }
      case ConceptKind::Not: return not3(cv(n.lhs, x));
      case ConceptKind::Or: return or3(cv(n.lhs, x), cv(n.rhs, x));
      case ConceptKind::And: return and3(cv(n.lhs, x), cv(n.rhs, x));
      case ConceptKind::Exists: {
        Tri acc = Tri::F;
        for (std::size_t y = 0; y < n_; ++y) {
          Tri t = and3(rv(n.role, x, y), cv(n.lhs, y));
          if (t == Tri::T) return Tri::T;
          acc = or3(acc, t);
        }
        return acc;
      }
      case ConceptKind::Forall: {
        Tri acc = Tri::T;
        for (std::size_t y = 0; y < n_; ++y) {
          Tri t = or3(not3(rv(n.role, x, y)), cv(n.lhs, y));
          if (t == Tri::F) return Tri::F;
          acc = and3(acc, t);
        }
        return acc;
      }
      case ConceptKind::Window: {
        Tri acc = Tri::T;
        for (std::size_t y = 0; y < n_; ++y) {
          Tri t = or3(not3(cv(n.lhs, y)), rv(n.role, x, y));
          if (t == Tri::F) return Tri::F;
          acc = and3(acc, t);
        }
        return acc;
      }
      case ConceptKind::Top: return Tri::T;
      case ConceptKind::Bottom: return Tri::F;
      case ConceptKind::Box: {
        Tri acc = Tri::T;
        for (std::size_t y = 0; y < n_; ++y) acc = and3(acc, cv(n.lhs, y));
        return acc;
      }
      case ConceptKind::Assertion: {
        std::size_t v = ind_val_[ind_index_.at(n.sym.raw)];
        return v == kNoIndex ? Tri::U : cv(n.lhs, v);
      }
      case ConceptKind::RoleAssertion: {
        std::size_t va = ind_val_[ind_index_.at(n.sym.raw)];
        std::size_t vb = ind_val_[ind_index_.at(n.sym2.raw)];
        if (va == kNoIndex || vb == kNoIndex) return Tri::U;
        return rv(n.role, va, vb);
      }
      case ConceptKind::ConceptIncl: {
        Tri acc = Tri::T;
        for (std::size_t y = 0; y < n_; ++y) acc = and3(acc, or3(not3(cv(n.lhs, y)), cv(n.rhs, y)));
        return acc;
      }
      case ConceptKind::RoleIncl: {
        Tri acc = Tri::T;
        for (std::size_t x2 = 0; x2 < n_; ++x2)
          for (std::size_t y = 0; y < n_; ++y)
            acc = and3(acc, or3(not3(rv(n.role, x2, y)), rv(n.role2, x2, y)));
        return acc;
      }
    }
    throw InternalError("enumerate: unhandled concept kind");
  }

  using Overlay = std::map<AtomRef, bool>;

  Tri rv_kleene(RoleId r, std::size_t x, std::size_t y, const Overlay* overlay) const {
    const RoleNode& n = s_.node(r);
    switch (n.kind) {
      case RoleKind::Atom: {
        AtomRef ref{role_index_.at(n.sym.raw), x, y};
        if (overlay) {
          auto it = overlay->find(ref);
          if (it != overlay->end()) return tri(it->second);
        }
        return role_val_[(ref.sym * n_ + x) * n_ + y];
      }
      case RoleKind::Id: return tri(x == y);
      case RoleKind::Or: return or3(rv_kleene(n.lhs, x, y, overlay), rv_kleene(n.rhs, x, y, overlay));
      case RoleKind::And: return and3(rv_kleene(n.lhs, x, y, overlay), rv_kleene(n.rhs, x, y, overlay));
      case RoleKind::Not: return not3(rv_kleene(n.lhs, x, y, overlay));
      case RoleKind::Inverse: return rv_kleene(n.lhs, y, x, overlay);
      case RoleKind::TopRole: return Tri::T;
      case RoleKind::BottomRole: return Tri::F;
      case RoleKind::Diversity: return tri(x != y);
      case RoleKind::Test: return x == y ? cv(n.c1, x) : Tri::F;
      case RoleKind::DomRestrict: return and3(rv_kleene(n.lhs, x, y, overlay), cv(n.c1, x));
      case RoleKind::RanRestrict: return and3(rv_kleene(n.lhs, x, y, overlay), cv(n.c1, y));
      case RoleKind::LeftCyl: return cv(n.c1, x);
      case RoleKind::RightCyl: return cv(n.c1, y);
      case RoleKind::Cross: return and3(cv(n.c1, x), cv(n.c2, y));
    }
    throw InternalError("enumerate: unhandled role kind");
  }

  void collect_atoms(RoleId r, std::size_t x, std::size_t y, std::vector<AtomRef>& out) const {
    const RoleNode& n = s_.node(r);
    switch (n.kind) {
      case RoleKind::Atom: out.push_back({role_index_.at(n.sym.raw), x, y}); return;
      case RoleKind::Or:
      case RoleKind::And:
        collect_atoms(n.lhs, x, y, out);
        collect_atoms(n.rhs, x, y, out);
        return;
      case RoleKind::Not: collect_atoms(n.lhs, x, y, out); return;
      case RoleKind::Inverse: collect_atoms(n.lhs, y, x, out); return;
      case RoleKind::DomRestrict:
      case RoleKind::RanRestrict:
        collect_atoms(n.lhs, x, y, out);
        return;
      default:
        return;
    }
  }

  // Exact three-valued role evaluation at one pair: a plain connective walk
  // cannot see tautologies like `Q or not Q`, so when it is undetermined we
  // enumerate every completion of the (few) unassigned atomic bits the
  // expression reads at this pair.
  Tri rv(RoleId r, std::size_t x, std::size_t y) const {
    Tri quick = rv_kleene(r, x, y, nullptr);
    if (quick != Tri::U) return quick;
    std::vector<AtomRef> atoms;
    collect_atoms(r, x, y, atoms);
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    std::erase_if(atoms, [&](const AtomRef& a) { return role_val_[(a.sym * n_ + a.x) * n_ + a.y] != Tri::U; });
    if (atoms.empty() || atoms.size() > 10) return Tri::U;
    bool any_true = false, any_false = false;
    for (std::size_t mask = 0; mask < (std::size_t{1} << atoms.size()); ++mask) {
      Overlay overlay;
      for (std::size_t i = 0; i < atoms.size(); ++i) overlay[atoms[i]] = (mask >> i) & 1;
      Tri t = rv_kleene(r, x, y, &overlay);
      if (t == Tri::U) return Tri::U;  // an embedded concept is still open
      (t == Tri::T ? any_true : any_false) = true;
      if (any_true && any_false) return Tri::U;
    }
    return any_true ? Tri::T : Tri::F;
  }

  const TermStore& s_;
  ConceptId goal_;
  std::size_t n_;
  const SymbolSets& syms_;
  std::vector<Tri> conc_val_;
  std::vector<Tri> role_val_;
  std::vector<std::size_t> ind_val_;  // kNoIndex = unassigned
  std::map<std::uint32_t, std::size_t> conc_index_;
  std::map<std::uint32_t, std::size_t> role_index_;
  std::map<std::uint32_t, std::size_t> ind_index_;
};

}  // namespace

std::optional<Model> enumerate_model(const TermStore& store, ConceptId c, std::size_t max_domain) {
  SymbolSets syms;
  collect_symbols(store, c, syms);
  sort_unique(store, syms.concepts);
  sort_unique(store, syms.roles);
  sort_unique(store, syms.individuals);
  for (std::size_t n = 1; n <= max_domain; ++n) {
    std::size_t vars = syms.concepts.size() * n + syms.roles.size() * n * n + syms.individuals.size();
    if (vars > 64) {
      throw Error("enumerate_model: alphabet too large for exhaustive search (" + std::to_string(vars) +
                  " interpretation variables)");
    }
    Search search(store, c, n, syms);
    if (auto m = search.run()) return m;
  }
  return std::nullopt;
}

}  // namespace albo
