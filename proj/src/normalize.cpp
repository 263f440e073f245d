#include "albo/normalize.hpp"

#include <algorithm>

#include "albo/print.hpp"

namespace albo {

namespace {

ConceptId desugared_top(TermStore& s) {
  ConceptId a = s.atom(s.symbol(kTopSymbol, SymbolKind::Concept));
  return s.or_(a, s.not_(a));
}

RoleId desugared_univ(TermStore& s) {
  RoleId q = s.role(s.symbol(kUnivSymbol, SymbolKind::Role));
  return s.role_or(q, s.role_not(q));
}

// not (not C or not D)
ConceptId core_and(TermStore& s, ConceptId a, ConceptId b) {
  return s.not_(s.or_(s.not_(a), s.not_(b)));
}

// not some R . not C
ConceptId core_forall(TermStore& s, RoleId r, ConceptId c) {
  return s.not_(s.exists(r, s.not_(c)));
}

RoleId desugar_role(TermStore& s, RoleId r) {
  const RoleNode n = s.node(r);
  switch (n.kind) {
    case RoleKind::Atom:
    case RoleKind::Id:
      return r;
    case RoleKind::Or: return s.role_or(desugar_role(s, n.lhs), desugar_role(s, n.rhs));
    case RoleKind::Not: return s.role_not(desugar_role(s, n.lhs));
    case RoleKind::Inverse: return s.inverse(desugar_role(s, n.lhs));
    case RoleKind::TopRole: return desugared_univ(s);
    case RoleKind::BottomRole: return s.role_not(desugared_univ(s));
    case RoleKind::And: {
      RoleId a = desugar_role(s, n.lhs), b = desugar_role(s, n.rhs);
      return s.role_not(s.role_or(s.role_not(a), s.role_not(b)));
    }
    case RoleKind::Diversity: return s.role_not(s.id_role());
    default:
      throw Error("desugar: restriction-family role operator must be encoded first");
  }
}

}  // namespace

ConceptId desugar(TermStore& s, ConceptId c) {
  const ConceptNode n = s.node(c);
  switch (n.kind) {
    case ConceptKind::Atom:
    case ConceptKind::Singleton:
      return c;
    case ConceptKind::Not: return s.not_(desugar(s, n.lhs));
    case ConceptKind::Or: return s.or_(desugar(s, n.lhs), desugar(s, n.rhs));
    case ConceptKind::Exists: return s.exists(desugar_role(s, n.role), desugar(s, n.lhs));
    case ConceptKind::Top: return desugared_top(s);
    case ConceptKind::Bottom: return s.not_(desugared_top(s));
    case ConceptKind::And: return core_and(s, desugar(s, n.lhs), desugar(s, n.rhs));
    case ConceptKind::Forall: return core_forall(s, desugar_role(s, n.role), desugar(s, n.lhs));
    case ConceptKind::Window:
      // win R . C == not some (not R) . C
      return s.not_(s.exists(s.role_not(desugar_role(s, n.role)), desugar(s, n.lhs)));
    case ConceptKind::Box: return core_forall(s, desugared_univ(s), desugar(s, n.lhs));
    case ConceptKind::Assertion:
      // a : C == some univ . ({a} and C)
      return s.exists(desugared_univ(s), core_and(s, s.singleton(n.sym), desugar(s, n.lhs)));
    case ConceptKind::RoleAssertion:
      // (a, b) : R == a : some R . {b}
      return desugar(s, s.assertion(n.sym, s.exists(n.role, s.singleton(n.sym2))));
    case ConceptKind::ConceptIncl:
      // C <= D == box (not C or D)
      return desugar(s, s.box(s.or_(s.not_(n.lhs), n.rhs)));
    case ConceptKind::RoleIncl:
      // R <= S == box all (not (not R or S)) . bot
      return desugar(s, s.box(s.forall(s.role_not(s.role_or(s.role_not(n.role), n.role2)), s.bottom())));
  }
  throw InternalError("desugar: unhandled concept kind");
}

namespace {

class Encoder {
 public:
  explicit Encoder(TermStore& s) : s_(s) {}

  ConceptId rewrite(ConceptId c) {
    const ConceptNode n = s_.node(c);
    switch (n.kind) {
      case ConceptKind::Atom:
      case ConceptKind::Singleton:
      case ConceptKind::Top:
      case ConceptKind::Bottom:
        return c;
      case ConceptKind::Not: return s_.not_(rewrite(n.lhs));
      case ConceptKind::Or: return s_.or_(rewrite(n.lhs), rewrite(n.rhs));
      case ConceptKind::Exists: return s_.exists(rewrite_role(n.role), rewrite(n.lhs));
      case ConceptKind::And: return s_.and_(rewrite(n.lhs), rewrite(n.rhs));
      case ConceptKind::Forall: return s_.forall(rewrite_role(n.role), rewrite(n.lhs));
      case ConceptKind::Window: return s_.window(rewrite_role(n.role), rewrite(n.lhs));
      case ConceptKind::Box: return s_.box(rewrite(n.lhs));
      case ConceptKind::Assertion: return s_.assertion(n.sym, rewrite(n.lhs));
      case ConceptKind::RoleAssertion: return s_.role_assertion(n.sym, n.sym2, rewrite_role(n.role));
      case ConceptKind::ConceptIncl: return s_.incl(rewrite(n.lhs), rewrite(n.rhs));
      case ConceptKind::RoleIncl: return s_.rincl(rewrite_role(n.role), rewrite_role(n.role2));
    }
    throw InternalError("encode_restriction_ops: unhandled concept kind");
  }

  std::vector<ConceptId> definitions;
  std::map<std::string, std::string> fresh_roles;

 private:
  // Fresh role symbol standing for the left cylinder of `d`, one per
  // distinct encoded concept, with its two defining inclusions:
  //   not d <= all q . bot        (q reaches nothing outside the cylinder)
  //   d <= not some (not q) . top (inside the cylinder q reaches everything)
  RoleId cylinder(ConceptId d) {
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
    std::string name;
    for (std::size_t k = next_index_;; ++k) {
      name = "$cyl" + std::to_string(k);
      if (!s_.find_symbol(name)) {
        next_index_ = k + 1;
        break;
      }
    }
    RoleId q = s_.role(s_.symbol(name, SymbolKind::Role));
    cache_.emplace(d, q);
    fresh_roles.emplace(name, print_concept(s_, d));
    definitions.push_back(s_.incl(s_.not_(d), s_.forall(q, s_.bottom())));
    definitions.push_back(s_.incl(d, s_.not_(s_.exists(s_.role_not(q), s_.top()))));
    return q;
  }

  RoleId rewrite_role(RoleId r) {
    const RoleNode n = s_.node(r);
    switch (n.kind) {
      case RoleKind::Atom:
      case RoleKind::Id:
      case RoleKind::TopRole:
      case RoleKind::BottomRole:
      case RoleKind::Diversity:
        return r;
      case RoleKind::Or: return s_.role_or(rewrite_role(n.lhs), rewrite_role(n.rhs));
      case RoleKind::And: return s_.role_and(rewrite_role(n.lhs), rewrite_role(n.rhs));
      case RoleKind::Not: return s_.role_not(rewrite_role(n.lhs));
      case RoleKind::Inverse: return s_.inverse(rewrite_role(n.lhs));
      case RoleKind::LeftCyl: return cylinder(rewrite(n.c1));
      case RoleKind::RightCyl: return s_.inverse(cylinder(rewrite(n.c1)));
      case RoleKind::DomRestrict: return s_.role_and(rewrite_role(n.lhs), cylinder(rewrite(n.c1)));
      case RoleKind::RanRestrict: return s_.role_and(rewrite_role(n.lhs), s_.inverse(cylinder(rewrite(n.c1))));
      case RoleKind::Test:
        // C? == id restricted to targets in C
        return rewrite_role(s_.ran_restrict(s_.id_role(), n.c1));
      case RoleKind::Cross:
        // C x D == (left cylinder of C) and (right cylinder of D)
        return s_.role_and(cylinder(rewrite(n.c1)), s_.inverse(cylinder(rewrite(n.c2))));
    }
    throw InternalError("encode_restriction_ops: unhandled role kind");
  }

  TermStore& s_;
  std::map<ConceptId, RoleId> cache_;
  std::size_t next_index_ = 0;
};

}  // namespace

EncodeResult encode_restriction_ops(TermStore& s, ConceptId c) {
  Encoder enc(s);
  EncodeResult r;
  r.concept_id = enc.rewrite(c);
  r.definitions = std::move(enc.definitions);
  r.fresh_roles = std::move(enc.fresh_roles);
  return r;
}

ConceptId internalize(TermStore& s, const Problem& p) {
  if (p.goals.empty()) throw EmptyProblem("problem has no goal concept ('sat ...;')");
  std::vector<ConceptId> parts;
  for (ConceptId g : p.goals) parts.push_back(desugar(s, g));
  for (ConceptId st : p.statements()) parts.push_back(desugar(s, st));
  if (p.una) {
    // {a} and {a'} <= bot, for every distinct pair of individuals.
    std::vector<SymbolId> inds;
    auto gather = [&](ConceptId c) {
      for (SymbolId i : individuals_of(s, c)) {
        if (std::find(inds.begin(), inds.end(), i) == inds.end()) inds.push_back(i);
      }
    };
    for (ConceptId g : p.goals) gather(g);
    for (ConceptId st : p.statements()) gather(st);
    std::sort(inds.begin(), inds.end(), [&](SymbolId a, SymbolId b) { return s.name(a) < s.name(b); });
    for (std::size_t i = 0; i < inds.size(); ++i) {
      for (std::size_t j = i + 1; j < inds.size(); ++j) {
        ConceptId pair = s.and_(s.singleton(inds[i]), s.singleton(inds[j]));
        parts.push_back(desugar(s, s.incl(pair, s.bottom())));
      }
    }
  }
  ConceptId acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = core_and(s, acc, parts[i]);
  return acc;
}

RoleId push_inverse_role(TermStore& s, RoleId r) {
  const RoleNode n = s.node(r);
  switch (n.kind) {
    case RoleKind::Atom:
    case RoleKind::Id:
      return r;
    case RoleKind::Or: return s.role_or(push_inverse_role(s, n.lhs), push_inverse_role(s, n.rhs));
    case RoleKind::Not: return s.role_not(push_inverse_role(s, n.lhs));
    case RoleKind::Inverse: {
      const RoleNode inner = s.node(n.lhs);
      switch (inner.kind) {
        case RoleKind::Atom: return r;
        case RoleKind::Id: return s.id_role();
        case RoleKind::Or:
          return s.role_or(push_inverse_role(s, s.inverse(inner.lhs)), push_inverse_role(s, s.inverse(inner.rhs)));
        case RoleKind::Not: return s.role_not(push_inverse_role(s, s.inverse(inner.lhs)));
        case RoleKind::Inverse: return push_inverse_role(s, inner.lhs);
        default: throw Error("push_inverse: input is not core syntax");
      }
    }
    default:
      throw Error("push_inverse: input is not core syntax");
  }
}

ConceptId push_inverse(TermStore& s, ConceptId c) {
  const ConceptNode n = s.node(c);
  switch (n.kind) {
    case ConceptKind::Atom:
    case ConceptKind::Singleton:
      return c;
    case ConceptKind::Not: return s.not_(push_inverse(s, n.lhs));
    case ConceptKind::Or: return s.or_(push_inverse(s, n.lhs), push_inverse(s, n.rhs));
    case ConceptKind::Exists: return s.exists(push_inverse_role(s, n.role), push_inverse(s, n.lhs));
    default:
      throw Error("push_inverse: input is not core syntax");
  }
}

NormalizedInput normalize(TermStore& s, const Problem& p) {
  Problem q = p;
  std::map<std::string, std::string> fresh;
  std::vector<ConceptId> definitions;
  auto encode_all = [&](std::vector<ConceptId>& v) {
    for (ConceptId& c : v) {
      EncodeResult r = encode_restriction_ops(s, c);
      c = r.concept_id;
      definitions.insert(definitions.end(), r.definitions.begin(), r.definitions.end());
      fresh.insert(r.fresh_roles.begin(), r.fresh_roles.end());
    }
  };
  encode_all(q.goals);
  encode_all(q.tbox);
  encode_all(q.rbox);
  encode_all(q.abox);
  q.tbox.insert(q.tbox.end(), definitions.begin(), definitions.end());
  ConceptId core = push_inverse(s, internalize(s, q));
  return {core, std::move(fresh)};
}

NormalizedInput normalize(TermStore& s, ConceptId goal) {
  Problem p;
  p.goals.push_back(goal);
  return normalize(s, p);
}

}  // namespace albo
