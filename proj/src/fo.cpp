#include "albo/fo.hpp"

#include "albo/errors.hpp"

namespace albo {

namespace {

std::uint32_t add(FoFormula& f, FoNode n) {
  f.nodes.push_back(n);
  return static_cast<std::uint32_t>(f.nodes.size() - 1);
}

FoVar other(FoVar v) { return v == FoVar::X ? FoVar::Y : FoVar::X; }

std::uint32_t st_concept(const TermStore& s, ConceptId c, FoVar vx, FoFormula& out) {
  const ConceptNode& n = s.node(c);
  switch (n.kind) {
    case ConceptKind::Atom:
      return add(out, {FoKind::Pred1, n.sym, vx, vx, kNoIndex, kNoIndex});
    case ConceptKind::Singleton:
      return add(out, {FoKind::EqVarConst, n.sym, vx, vx, kNoIndex, kNoIndex});
    case ConceptKind::Not: {
      std::uint32_t a = st_concept(s, n.lhs, vx, out);
      return add(out, {FoKind::Not, {}, vx, vx, a, kNoIndex});
    }
    case ConceptKind::Or: {
      std::uint32_t a = st_concept(s, n.lhs, vx, out);
      std::uint32_t b = st_concept(s, n.rhs, vx, out);
      return add(out, {FoKind::Or, {}, vx, vx, a, b});
    }
    case ConceptKind::Exists: {
      FoVar vy = other(vx);
      std::uint32_t r = st_role(s, n.role, vx, vy, out);
      std::uint32_t f = st_concept(s, n.lhs, vy, out);
      std::uint32_t conj = add(out, {FoKind::And, {}, vx, vx, r, f});
      return add(out, {FoKind::Exists, {}, vy, vy, conj, kNoIndex});
    }
    default:
      throw Error("st_translate requires core syntax");
  }
}

}  // namespace

std::uint32_t st_role(const TermStore& s, RoleId r, FoVar vx, FoVar vy, FoFormula& out) {
  const RoleNode& n = s.node(r);
  switch (n.kind) {
    case RoleKind::Atom:
      return add(out, {FoKind::Pred2, n.sym, vx, vy, kNoIndex, kNoIndex});
    case RoleKind::Id:
      return add(out, {FoKind::EqVarVar, {}, vx, vy, kNoIndex, kNoIndex});
    case RoleKind::Or: {
      std::uint32_t a = st_role(s, n.lhs, vx, vy, out);
      std::uint32_t b = st_role(s, n.rhs, vx, vy, out);
      return add(out, {FoKind::Or, {}, vx, vy, a, b});
    }
    case RoleKind::Not: {
      std::uint32_t a = st_role(s, n.lhs, vx, vy, out);
      return add(out, {FoKind::Not, {}, vx, vy, a, kNoIndex});
    }
    case RoleKind::Inverse:
      return st_role(s, n.lhs, vy, vx, out);
    default:
      throw Error("st_translate requires core syntax");
  }
}

FoFormula st_translate(const TermStore& store, ConceptId c) {
  FoFormula f;
  f.root = st_concept(store, c, FoVar::X, f);
  return f;
}

namespace {

bool eval_node(const TermStore& s, const Model& m, const FoFormula& f, std::uint32_t idx,
               std::optional<std::size_t> x, std::optional<std::size_t> y) {
  const FoNode& n = f.nodes[idx];
  auto value = [&](FoVar v) -> std::size_t {
    const auto& slot = v == FoVar::X ? x : y;
    if (!slot) throw InternalError("fo_eval: unassigned variable");
    return *slot;
  };
  switch (n.kind) {
    case FoKind::Pred1: {
      auto it = m.concepts.find(s.name(n.sym));
      if (it == m.concepts.end()) return false;
      std::size_t e = value(n.v1);
      return std::find(it->second.begin(), it->second.end(), e) != it->second.end();
    }
    case FoKind::Pred2: {
      auto it = m.roles.find(s.name(n.sym));
      if (it == m.roles.end()) return false;
      std::pair<std::size_t, std::size_t> p{value(n.v1), value(n.v2)};
      return std::find(it->second.begin(), it->second.end(), p) != it->second.end();
    }
    case FoKind::EqVarVar:
      return value(n.v1) == value(n.v2);
    case FoKind::EqVarConst: {
      auto it = m.individuals.find(s.name(n.sym));
      if (it == m.individuals.end()) {
        throw UnboundIndividual("individual '" + s.name(n.sym) + "' is not assigned in the model");
      }
      return value(n.v1) == it->second;
    }
    case FoKind::Not:
      return !eval_node(s, m, f, n.lhs, x, y);
    case FoKind::Or:
      return eval_node(s, m, f, n.lhs, x, y) || eval_node(s, m, f, n.rhs, x, y);
    case FoKind::And:
      return eval_node(s, m, f, n.lhs, x, y) && eval_node(s, m, f, n.rhs, x, y);
    case FoKind::Exists: {
      for (std::size_t e = 0; e < m.domain; ++e) {
        bool hit = n.v1 == FoVar::X ? eval_node(s, m, f, n.lhs, e, y) : eval_node(s, m, f, n.lhs, x, e);
        if (hit) return true;
      }
      return false;
    }
  }
  throw InternalError("fo_eval: unhandled node kind");
}

void print_node(const TermStore& s, const FoFormula& f, std::uint32_t idx, std::string& out) {
  const FoNode& n = f.nodes[idx];
  auto var = [](FoVar v) { return v == FoVar::X ? "x" : "y"; };
  switch (n.kind) {
    case FoKind::Pred1:
      out += s.name(n.sym);
      out += '(';
      out += var(n.v1);
      out += ')';
      return;
    case FoKind::Pred2:
      out += s.name(n.sym);
      out += '(';
      out += var(n.v1);
      out += ',';
      out += var(n.v2);
      out += ')';
      return;
    case FoKind::EqVarVar:
      out += var(n.v1);
      out += " = ";
      out += var(n.v2);
      return;
    case FoKind::EqVarConst:
      out += var(n.v1);
      out += " = ";
      out += s.name(n.sym);
      return;
    case FoKind::Not:
      out += "~";
      print_node(s, f, n.lhs, out);
      return;
    case FoKind::Or:
    case FoKind::And:
      out += '(';
      print_node(s, f, n.lhs, out);
      out += n.kind == FoKind::Or ? " | " : " & ";
      print_node(s, f, n.rhs, out);
      out += ')';
      return;
    case FoKind::Exists:
      out += "exists ";
      out += var(n.v1);
      out += ". ";
      print_node(s, f, n.lhs, out);
      return;
  }
}

}  // namespace

bool fo_eval(const TermStore& store, const Model& m, const FoFormula& f, std::optional<std::size_t> x,
             std::optional<std::size_t> y) {
  return eval_node(store, m, f, f.root, x, y);
}

std::string fo_to_string(const TermStore& store, const FoFormula& f) {
  std::string out;
  print_node(store, f, f.root, out);
  return out;
}

}  // namespace albo
