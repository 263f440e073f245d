#include "albo/model.hpp"

#include <algorithm>
#include <sstream>

#include "albo/errors.hpp"

namespace albo {

namespace {

// Dense evaluation working set: one bit per element / per pair.
using Bits = std::vector<char>;

struct Eval {
  const TermStore& s;
  const Model& m;
  std::size_t n;

  Bits concept_bits(ConceptId c) const;
  Bits role_bits(RoleId r) const;

  std::size_t element_of(SymbolId ind) const {
    auto it = m.individuals.find(s.name(ind));
    if (it == m.individuals.end()) {
      throw UnboundIndividual("individual '" + s.name(ind) + "' is not assigned in the model");
    }
    return it->second;
  }

  Bits all(bool v) const { return Bits(n, v ? 1 : 0); }
  Bits all2(bool v) const { return Bits(n * n, v ? 1 : 0); }

  static bool universal(const Bits& b) {
    return std::all_of(b.begin(), b.end(), [](char x) { return x != 0; });
  }
  static bool empty(const Bits& b) {
    return std::none_of(b.begin(), b.end(), [](char x) { return x != 0; });
  }
};

Bits Eval::role_bits(RoleId r) const {
  const RoleNode& nd = s.node(r);
  switch (nd.kind) {
    case RoleKind::Atom: {
      Bits out = all2(false);
      auto it = m.roles.find(s.name(nd.sym));
      if (it != m.roles.end()) {
        for (auto [x, y] : it->second) out[x * n + y] = 1;
      }
      return out;
    }
    case RoleKind::Id: {
      Bits out = all2(false);
      for (std::size_t x = 0; x < n; ++x) out[x * n + x] = 1;
      return out;
    }
    case RoleKind::Or: {
      Bits a = role_bits(nd.lhs), b = role_bits(nd.rhs);
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] || b[i];
      return a;
    }
    case RoleKind::And: {
      Bits a = role_bits(nd.lhs), b = role_bits(nd.rhs);
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] && b[i];
      return a;
    }
    case RoleKind::Not: {
      Bits a = role_bits(nd.lhs);
      for (auto& x : a) x = !x;
      return a;
    }
    case RoleKind::Inverse: {
      Bits a = role_bits(nd.lhs);
      Bits out = all2(false);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) out[x * n + y] = a[y * n + x];
      return out;
    }
    case RoleKind::TopRole: return all2(true);
    case RoleKind::BottomRole: return all2(false);
    case RoleKind::Diversity: {
      Bits out = all2(true);
      for (std::size_t x = 0; x < n; ++x) out[x * n + x] = 0;
      return out;
    }
    case RoleKind::Test: {
      Bits c = concept_bits(nd.c1);
      Bits out = all2(false);
      for (std::size_t x = 0; x < n; ++x) out[x * n + x] = c[x];
      return out;
    }
    case RoleKind::DomRestrict: {
      Bits a = role_bits(nd.lhs);
      Bits c = concept_bits(nd.c1);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) a[x * n + y] = a[x * n + y] && c[x];
      return a;
    }
    case RoleKind::RanRestrict: {
      Bits a = role_bits(nd.lhs);
      Bits c = concept_bits(nd.c1);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) a[x * n + y] = a[x * n + y] && c[y];
      return a;
    }
    case RoleKind::LeftCyl: {
      Bits c = concept_bits(nd.c1);
      Bits out = all2(false);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) out[x * n + y] = c[x];
      return out;
    }
    case RoleKind::RightCyl: {
      Bits c = concept_bits(nd.c1);
      Bits out = all2(false);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) out[x * n + y] = c[y];
      return out;
    }
    case RoleKind::Cross: {
      Bits c = concept_bits(nd.c1), d = concept_bits(nd.c2);
      Bits out = all2(false);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) out[x * n + y] = c[x] && d[y];
      return out;
    }
  }
  throw InternalError("eval_role: unhandled role kind");
}

Bits Eval::concept_bits(ConceptId c) const {
  const ConceptNode& nd = s.node(c);
  switch (nd.kind) {
    case ConceptKind::Atom: {
      Bits out = all(false);
      auto it = m.concepts.find(s.name(nd.sym));
      if (it != m.concepts.end()) {
        for (std::size_t x : it->second) out[x] = 1;
      }
      return out;
    }
    case ConceptKind::Singleton: {
      Bits out = all(false);
      out[element_of(nd.sym)] = 1;
      return out;
    }
    case ConceptKind::Not: {
      Bits a = concept_bits(nd.lhs);
      for (auto& x : a) x = !x;
      return a;
    }
    case ConceptKind::Or: {
      Bits a = concept_bits(nd.lhs), b = concept_bits(nd.rhs);
      for (std::size_t i = 0; i < n; ++i) a[i] = a[i] || b[i];
      return a;
    }
    case ConceptKind::And: {
      Bits a = concept_bits(nd.lhs), b = concept_bits(nd.rhs);
      for (std::size_t i = 0; i < n; ++i) a[i] = a[i] && b[i];
      return a;
    }
    case ConceptKind::Exists: {
      Bits r = role_bits(nd.role);
      Bits f = concept_bits(nd.lhs);
      Bits out = all(false);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (r[x * n + y] && f[y]) {
            out[x] = 1;
            break;
          }
      return out;
    }
    case ConceptKind::Forall: {
      Bits r = role_bits(nd.role);
      Bits f = concept_bits(nd.lhs);
      Bits out = all(true);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (r[x * n + y] && !f[y]) {
            out[x] = 0;
            break;
          }
      return out;
    }
    case ConceptKind::Window: {
      // every element of the filler must be a successor
      Bits r = role_bits(nd.role);
      Bits f = concept_bits(nd.lhs);
      Bits out = all(true);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (f[y] && !r[x * n + y]) {
            out[x] = 0;
            break;
          }
      return out;
    }
    case ConceptKind::Top: return all(true);
    case ConceptKind::Bottom: return all(false);
    case ConceptKind::Box: return all(universal(concept_bits(nd.lhs)));
    case ConceptKind::Assertion: {
      Bits f = concept_bits(nd.lhs);
      return all(f[element_of(nd.sym)] != 0);
    }
    case ConceptKind::RoleAssertion: {
      Bits r = role_bits(nd.role);
      return all(r[element_of(nd.sym) * n + element_of(nd.sym2)] != 0);
    }
    case ConceptKind::ConceptIncl: {
      Bits a = concept_bits(nd.lhs), b = concept_bits(nd.rhs);
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] && !b[i]) return all(false);
      return all(true);
    }
    case ConceptKind::RoleIncl: {
      Bits a = role_bits(nd.role), b = role_bits(nd.role2);
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return all(false);
      return all(true);
    }
  }
  throw InternalError("eval_concept: unhandled concept kind");
}

}  // namespace

std::vector<std::size_t> eval_concept(const TermStore& store, const Model& m, ConceptId c) {
  Eval ev{store, m, m.domain};
  Bits b = ev.concept_bits(c);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i]) out.push_back(i);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> eval_role(const TermStore& store, const Model& m, RoleId r) {
  Eval ev{store, m, m.domain};
  Bits b = ev.role_bits(r);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < m.domain; ++x)
    for (std::size_t y = 0; y < m.domain; ++y)
      if (b[x * m.domain + y]) out.emplace_back(x, y);
  return out;
}

bool satisfied(const TermStore& store, const Model& m, ConceptId c) {
  return !eval_concept(store, m, c).empty();
}

std::string serialize_model(const Model& m) {
  std::ostringstream out;
  out << "domain " << m.domain << "\n";
  for (const auto& [name, ext] : m.concepts) {
    out << "concept " << name << ":";
    for (std::size_t e : ext) out << " " << e;
    out << "\n";
  }
  for (const auto& [name, ext] : m.roles) {
    out << "role " << name << ":";
    for (auto [x, y] : ext) out << " (" << x << "," << y << ")";
    out << "\n";
  }
  for (const auto& [name, e] : m.individuals) {
    out << "ind " << name << " = " << e << "\n";
  }
  return out.str();
}

Model parse_model(std::string_view text) {
  Model m;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    auto fail = [&](const std::string& msg) { throw ParseError(lineno, 1, "model file: " + msg); };
    if (word == "domain") {
      if (!(ls >> m.domain)) fail("expected domain size");
    } else if (word == "concept") {
      std::string name;
      ls >> name;
      if (name.empty() || name.back() != ':') fail("expected 'concept NAME:'");
      name.pop_back();
      auto& ext = m.concepts[name];
      std::size_t e;
      while (ls >> e) ext.push_back(e);
      std::sort(ext.begin(), ext.end());
      ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
    } else if (word == "role") {
      std::string name;
      ls >> name;
      if (name.empty() || name.back() != ':') fail("expected 'role NAME:'");
      name.pop_back();
      auto& ext = m.roles[name];
      std::string pair;
      while (ls >> pair) {
        std::size_t x = 0, y = 0;
        if (std::sscanf(pair.c_str(), "(%zu,%zu)", &x, &y) != 2) fail("bad pair '" + pair + "'");
        ext.emplace_back(x, y);
      }
      std::sort(ext.begin(), ext.end());
      ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
    } else if (word == "ind") {
      std::string name, eq;
      std::size_t e;
      if (!(ls >> name >> eq >> e) || eq != "=") fail("expected 'ind NAME = ELEMENT'");
      m.individuals[name] = e;
    } else {
      fail("unknown directive '" + word + "'");
    }
  }
  if (m.domain == 0) throw ParseError(lineno, 1, "model file: missing or empty domain");
  return m;
}

}  // namespace albo
