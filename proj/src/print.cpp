#include "albo/print.hpp"

namespace albo {

namespace {

void print_concept_to(const TermStore& store, ConceptId c, std::string& out);

void print_role_to(const TermStore& store, RoleId r, std::string& out) {
  const RoleNode& n = store.node(r);
  switch (n.kind) {
    case RoleKind::Atom: out += store.name(n.sym); return;
    case RoleKind::Id: out += "id"; return;
    case RoleKind::Or:
    case RoleKind::And:
      out += '(';
      print_role_to(store, n.lhs, out);
      out += n.kind == RoleKind::Or ? " or " : " and ";
      print_role_to(store, n.rhs, out);
      out += ')';
      return;
    case RoleKind::Not:
      out += "not ";
      print_role_to(store, n.lhs, out);
      return;
    case RoleKind::Inverse:
      out += "inv(";
      print_role_to(store, n.lhs, out);
      out += ')';
      return;
    // The remaining forms have no surface syntax; the renderings below are
    // for diagnostics and traces only.
    case RoleKind::TopRole: out += "<top-role>"; return;
    case RoleKind::BottomRole: out += "<bottom-role>"; return;
    case RoleKind::Diversity: out += "<div>"; return;
    case RoleKind::Test:
      out += "<test ";
      print_concept_to(store, n.c1, out);
      out += '>';
      return;
    case RoleKind::DomRestrict:
    case RoleKind::RanRestrict:
      out += n.kind == RoleKind::DomRestrict ? "<dom " : "<ran ";
      print_role_to(store, n.lhs, out);
      out += " : ";
      print_concept_to(store, n.c1, out);
      out += '>';
      return;
    case RoleKind::LeftCyl:
    case RoleKind::RightCyl:
      out += n.kind == RoleKind::LeftCyl ? "<lcyl " : "<rcyl ";
      print_concept_to(store, n.c1, out);
      out += '>';
      return;
    case RoleKind::Cross:
      out += "<cross ";
      print_concept_to(store, n.c1, out);
      out += " , ";
      print_concept_to(store, n.c2, out);
      out += '>';
      return;
  }
}

void print_concept_to(const TermStore& store, ConceptId c, std::string& out) {
  const ConceptNode& n = store.node(c);
  switch (n.kind) {
    case ConceptKind::Atom: out += store.name(n.sym); return;
    case ConceptKind::Singleton:
      out += '{';
      out += store.name(n.sym);
      out += '}';
      return;
    case ConceptKind::Not:
      out += "not ";
      print_concept_to(store, n.lhs, out);
      return;
    case ConceptKind::Or:
    case ConceptKind::And:
      out += '(';
      print_concept_to(store, n.lhs, out);
      out += n.kind == ConceptKind::Or ? " or " : " and ";
      print_concept_to(store, n.rhs, out);
      out += ')';
      return;
    case ConceptKind::Exists:
    case ConceptKind::Forall:
    case ConceptKind::Window:
      out += n.kind == ConceptKind::Exists ? "some " : n.kind == ConceptKind::Forall ? "all " : "win ";
      print_role_to(store, n.role, out);
      out += " . ";
      print_concept_to(store, n.lhs, out);
      return;
    case ConceptKind::Top: out += "top"; return;
    case ConceptKind::Bottom: out += "bot"; return;
    case ConceptKind::Box:
      out += "box ";
      print_concept_to(store, n.lhs, out);
      return;
    // Statement forms, shown in statement syntax when embedded.
    case ConceptKind::Assertion:
      out += store.name(n.sym);
      out += " : ";
      print_concept_to(store, n.lhs, out);
      return;
    case ConceptKind::RoleAssertion:
      out += '(';
      out += store.name(n.sym);
      out += ", ";
      out += store.name(n.sym2);
      out += ") : ";
      print_role_to(store, n.role, out);
      return;
    case ConceptKind::ConceptIncl:
      print_concept_to(store, n.lhs, out);
      out += " <= ";
      print_concept_to(store, n.rhs, out);
      return;
    case ConceptKind::RoleIncl:
      print_role_to(store, n.role, out);
      out += " <= ";
      print_role_to(store, n.role2, out);
      return;
  }
}

}  // namespace

std::string print_concept(const TermStore& store, ConceptId c) {
  std::string out;
  print_concept_to(store, c, out);
  return out;
}

std::string print_role(const TermStore& store, RoleId r) {
  std::string out;
  print_role_to(store, r, out);
  return out;
}

}  // namespace albo
