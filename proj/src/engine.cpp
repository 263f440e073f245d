#include "albo/engine.hpp"

#include <algorithm>

#include "albo/model.hpp"

namespace albo {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Clash: return "clash";
    case Rule::NotNot: return "not-not";
    case Rule::NotOr: return "not-or";
    case Rule::Or: return "or";
    case Rule::Exists: return "exists";
    case Rule::NotExists: return "not-exists";
    case Rule::Sym: return "sym";
    case Rule::NotSym: return "not-sym";
    case Rule::Mon: return "mon";
    case Rule::Refl: return "refl";
    case Rule::ExistsOr: return "exists-or";
    case Rule::NotExistsOr: return "not-exists-or";
    case Rule::ExistsInv: return "exists-inv";
    case Rule::NotExistsInv: return "not-exists-inv";
    case Rule::ExistsNot: return "exists-not";
    case Rule::NotExistsNot: return "not-exists-not";
    case Rule::ExistsId: return "exists-id";
    case Rule::NotExistsId: return "not-exists-id";
    case Rule::Ub: return "ub";
    case Rule::Given: return "given";
  }
  return "?";
}

bool Branch::contains(std::uint32_t label, ConceptId c) const {
  return fact_index_.count(fact_key(label, c)) != 0;
}

std::uint32_t Branch::fact_index(std::uint32_t label, ConceptId c) const {
  auto it = fact_index_.find(fact_key(label, c));
  return it == fact_index_.end() ? kNoIndex : it->second;
}

std::uint32_t Branch::individual_index(SymbolId sym) const {
  auto it = individual_of_sym_.find(sym.raw);
  return it == individual_of_sym_.end() ? kNoIndex : it->second;
}

std::uint32_t Branch::find(std::uint32_t a) const {
  while (uf_parent_[a] != a) a = uf_parent_[a];
  return a;
}

bool Branch::known_distinct(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t ra = find(a), rb = find(b);
  for (auto [x, y] : distinct_) {
    std::uint32_t rx = find(x), ry = find(y);
    if ((rx == ra && ry == rb) || (rx == rb && ry == ra)) return true;
  }
  return false;
}

std::uint32_t Branch::register_individual(SymbolId sym, Individual::Origin origin, std::uint32_t parent,
                                          ConceptId witnessed, std::uint32_t trigger_fact,
                                          std::vector<TraceLog::Added>& recs) {
  auto it = individual_of_sym_.find(sym.raw);
  if (it != individual_of_sym_.end()) return it->second;
  std::uint32_t idx = static_cast<std::uint32_t>(individuals_.size());
  individuals_.push_back({sym, origin, parent, witnessed, kNoIndex});
  individual_of_sym_.emplace(sym.raw, idx);
  uf_parent_.push_back(idx);
  blocked_.push_back(0);
  // domain fact a:{a}
  std::uint32_t dom = static_cast<std::uint32_t>(facts_.size());
  individuals_[idx].domain_fact = dom;
  insert(idx, store_->singleton(sym), Rule::Refl, trigger_fact, kNoIndex, recs);
  return idx;
}

bool Branch::insert(std::uint32_t label, ConceptId c, Rule via, std::uint32_t prem1, std::uint32_t prem2,
                    std::vector<TraceLog::Added>& recs) {
  std::uint64_t key = fact_key(label, c);
  if (fact_index_.count(key)) return false;
  std::uint32_t idx = static_cast<std::uint32_t>(facts_.size());
  facts_.push_back({label, c});
  fact_index_.emplace(key, idx);
  recs.push_back({idx, individuals_[label].sym, c, via, prem1, prem2});

  // Register every individual the fact mentions; each registration adds the
  // corresponding domain fact right after this one.
  for (SymbolId ind : individuals_of(*store_, c)) {
    register_individual(ind, Individual::Origin::Input, kNoIndex, ConceptId{}, idx, recs);
  }

  const ConceptNode& n = store_->node(c);
  if (n.kind == ConceptKind::Singleton) {
    std::uint32_t m = individual_of_sym_.at(n.sym.raw);
    if (label < m) blocked_[m] = 1;
    std::uint32_t ra = find(label), rb = find(m);
    if (ra != rb) uf_parent_[std::max(ra, rb)] = std::min(ra, rb);
  } else if (n.kind == ConceptKind::Not && store_->node(n.lhs).kind == ConceptKind::Singleton) {
    std::uint32_t m = individual_of_sym_.at(store_->node(n.lhs).sym.raw);
    distinct_.emplace_back(label, m);
  }

  // Eager closure: look for the complement of the new fact.
  if (!closed_) {
    std::uint32_t other = kNoIndex;
    if (n.kind == ConceptKind::Not) {
      auto it = fact_index_.find(fact_key(label, n.lhs));
      if (it != fact_index_.end()) other = it->second;
    }
    if (other == kNoIndex) {
      auto it = fact_index_.find(fact_key(label, store_->not_(c)));
      if (it != fact_index_.end()) other = it->second;
    }
    if (other != kNoIndex) {
      closed_ = true;
      clash_ = {std::min(idx, other), std::max(idx, other)};
      recs.push_back({kNoIndex, individuals_[label].sym, ConceptId{}, Rule::Clash, clash_.first, clash_.second});
    }
  }
  return true;
}

std::uint32_t Branch::fresh_witness(std::uint32_t parent, ConceptId witnessed, std::uint32_t trigger_fact,
                                    std::vector<TraceLog::Added>& recs) {
  // Pick an unused individual name; reserved suffixes keep it unambiguous.
  std::string base = "a" + std::to_string(individuals_.size());
  std::string name = base;
  while (true) {
    auto existing = store_->find_symbol(name);
    if (!existing) break;
    if (store_->kind(*existing) == SymbolKind::Individual && individual_of_sym_.count(existing->raw) == 0) break;
    name += '\'';
  }
  SymbolId sym = store_->symbol(name, SymbolKind::Individual);
  return register_individual(sym, Individual::Origin::Witness, parent, witnessed, trigger_fact, recs);
}

Branch make_branch(TermStore& store, std::span<const std::pair<SymbolId, ConceptId>> facts, EngineOptions opts,
                   TraceLog* log) {
  Branch b;
  b.store_ = &store;
  b.log_ = log;
  b.opts_ = opts;
  b.node_id_ = log ? log->new_node() : 0;
  std::vector<TraceLog::Added> recs;
  for (const auto& [sym, c] : facts) {
    if (!is_core(store, c)) throw Error("engine input must be core syntax: " + std::to_string(c.raw));
    std::uint32_t label = b.register_individual(sym, Individual::Origin::Input, kNoIndex, ConceptId{}, kNoIndex, recs);
    b.insert(label, c, Rule::Given, kNoIndex, kNoIndex, recs);
  }
  if (log) {
    log->roots.push_back(b.node_id_);
    TraceLog::Event ev{b.node_id_, Rule::Given, kNoIndex, kNoIndex, {}};
    ev.children.push_back({b.node_id_, std::move(recs)});
    log->events.push_back(std::move(ev));
  }
  return b;
}

SymbolId fresh_root_symbol(TermStore& store, ConceptId c) {
  // The root must not occur in the concept; reusing a root name from an
  // earlier derivation is fine.
  std::vector<SymbolId> avoid = individuals_of(store, c);
  std::string name = "a0";
  while (true) {
    auto existing = store.find_symbol(name);
    if (!existing) return store.symbol(name, SymbolKind::Individual);
    if (store.kind(*existing) == SymbolKind::Individual &&
        std::find(avoid.begin(), avoid.end(), *existing) == avoid.end()) {
      return *existing;
    }
    name += '\'';
  }
}

Branch init(TermStore& store, ConceptId c, EngineOptions opts, TraceLog* log) {
  std::pair<SymbolId, ConceptId> fact{fresh_root_symbol(store, c), c};
  return make_branch(store, std::span(&fact, 1), opts, log);
}

namespace {

// True when the non-branching instance would add nothing new.
bool all_present(const Branch& b, std::initializer_list<Fact> concl) {
  for (const Fact& f : concl) {
    if (!b.contains(f.label, f.concept_id)) return false;
  }
  return true;
}

struct Shapes {
  const TermStore& s;

  bool is_singleton(ConceptId c) const { return s.node(c).kind == ConceptKind::Singleton; }

  // a : some R . {m}  (a link)
  bool is_link(const Fact& f, RoleId* role, std::uint32_t* m, const Branch& b) const {
    const ConceptNode& n = s.node(f.concept_id);
    if (n.kind != ConceptKind::Exists || !is_singleton(n.lhs)) return false;
    if (role) *role = n.role;
    if (m) *m = b.individual_index(s.node(n.lhs).sym);
    return true;
  }
};

}  // namespace

std::vector<RuleInstance> applicable(const Branch& b) {
  std::vector<RuleInstance> out;
  if (b.closed()) return out;
  TermStore& s = b.store();
  Shapes sh{s};
  const auto& facts = b.facts();

  auto offer = [&](Rule r, std::uint32_t p1, std::uint32_t p2, std::initializer_list<Fact> concl, bool branching) {
    RuleInstance inst{r, p1, p2};
    if (b.was_applied(inst)) return;
    if (!branching && all_present(b, concl)) return;
    out.push_back(inst);
  };

  for (std::uint32_t i = 0; i < facts.size(); ++i) {
    const Fact f = facts[i];
    const ConceptNode& n = s.node(f.concept_id);
    switch (n.kind) {
      case ConceptKind::Singleton: {
        std::uint32_t m = b.individual_index(n.sym);
        offer(Rule::Sym, i, kNoIndex, {{m, s.singleton(b.individuals()[f.label].sym)}}, false);
        // mon: a:{m}, m:C  =>  a:C
        for (std::uint32_t j = 0; j < facts.size(); ++j) {
          if (facts[j].label != m) continue;
          offer(Rule::Mon, i, j, {{f.label, facts[j].concept_id}}, false);
        }
        break;
      }
      case ConceptKind::Or:
        offer(Rule::Or, i, kNoIndex, {}, true);
        break;
      case ConceptKind::Exists: {
        const bool singleton_filler = sh.is_singleton(n.lhs);
        if (!singleton_filler) {
          if (!b.blocked(f.label)) offer(Rule::Exists, i, kNoIndex, {}, true);
          break;
        }
        std::uint32_t m = b.individual_index(s.node(n.lhs).sym);
        const RoleNode& rn = s.node(n.role);
        switch (rn.kind) {
          case RoleKind::Or:
            offer(Rule::ExistsOr, i, kNoIndex, {}, true);
            break;
          case RoleKind::Inverse:
            offer(Rule::ExistsInv, i, kNoIndex,
                  {{m, s.exists(rn.lhs, s.singleton(b.individuals()[f.label].sym))}}, false);
            break;
          case RoleKind::Not:
            offer(Rule::ExistsNot, i, kNoIndex, {{f.label, s.not_(s.exists(rn.lhs, n.lhs))}}, false);
            break;
          case RoleKind::Id:
            offer(Rule::ExistsId, i, kNoIndex, {{f.label, n.lhs}}, false);
            break;
          default:
            break;  // atomic link: no decomposition
        }
        break;
      }
      case ConceptKind::Not: {
        const ConceptNode& inner = s.node(n.lhs);
        switch (inner.kind) {
          case ConceptKind::Not:
            offer(Rule::NotNot, i, kNoIndex, {{f.label, inner.lhs}}, false);
            break;
          case ConceptKind::Or:
            offer(Rule::NotOr, i, kNoIndex, {{f.label, s.not_(inner.lhs)}, {f.label, s.not_(inner.rhs)}}, false);
            break;
          case ConceptKind::Singleton: {
            std::uint32_t m = b.individual_index(inner.sym);
            offer(Rule::NotSym, i, kNoIndex, {{m, s.not_(s.singleton(b.individuals()[f.label].sym))}}, false);
            break;
          }
          case ConceptKind::Exists: {
            // f = a : not some R . D
            const RoleId role = inner.role;
            const ConceptId filler = inner.lhs;
            // not-exists with every matching link of a
            for (std::uint32_t j = 0; j < facts.size(); ++j) {
              if (facts[j].label != f.label) continue;
              RoleId lr;
              std::uint32_t m;
              if (!sh.is_link(facts[j], &lr, &m, b) || lr != role) continue;
              offer(Rule::NotExists, i, j, {{m, s.not_(filler)}}, false);
            }
            const RoleNode& rn = s.node(role);
            switch (rn.kind) {
              case RoleKind::Or:
                offer(Rule::NotExistsOr, i, kNoIndex,
                      {{f.label, s.not_(s.exists(rn.lhs, filler))}, {f.label, s.not_(s.exists(rn.rhs, filler))}},
                      false);
                break;
              case RoleKind::Inverse: {
                // pairs with links pointing at a through the inverted role
                SymbolId asym = b.individuals()[f.label].sym;
                ConceptId target = s.singleton(asym);
                for (std::uint32_t j = 0; j < facts.size(); ++j) {
                  const ConceptNode& jn = s.node(facts[j].concept_id);
                  if (jn.kind != ConceptKind::Exists || jn.role != rn.lhs || jn.lhs != target) continue;
                  offer(Rule::NotExistsInv, i, j, {{facts[j].label, s.not_(filler)}}, false);
                }
                break;
              }
              case RoleKind::Not:
                // instantiate with every individual on the branch
                for (std::uint32_t d = 0; d < b.individuals().size(); ++d) {
                  offer(Rule::NotExistsNot, i, b.individuals()[d].domain_fact, {}, true);
                }
                break;
              case RoleKind::Id:
                offer(Rule::NotExistsId, i, kNoIndex, {{f.label, s.not_(filler)}}, false);
                break;
              default:
                break;
            }
            break;
          }
          default:
            break;
        }
        break;
      }
      default:
        break;
    }
  }

  // Equality conjectures: undecided pairs of class representatives, in
  // index order, gated behind the enable flag.
  if (b.options().ub_enabled) {
    const auto& inds = b.individuals();
    for (std::uint32_t x = 0; x < inds.size(); ++x) {
      if (b.find(x) != x) continue;
      for (std::uint32_t y = x + 1; y < inds.size(); ++y) {
        if (b.find(y) != y) continue;
        if (b.known_distinct(x, y)) continue;
        offer(Rule::Ub, inds[x].domain_fact, inds[y].domain_fact, {}, true);
      }
    }
  }
  return out;
}

std::vector<Branch> apply(const Branch& b, const RuleInstance& r) {
  TermStore& s = b.store();
  Shapes sh{s};
  if (b.closed()) throw RuleNotApplicable("branch is closed");
  if (b.was_applied(r)) throw RuleNotApplicable("rule instance already applied");
  const auto& facts = b.facts();
  auto premise = [&](std::uint32_t idx) -> const Fact& {
    if (idx >= facts.size()) throw RuleNotApplicable("premise index out of range");
    return facts[idx];
  };
  auto require = [&](bool cond, const char* msg) {
    if (!cond) throw RuleNotApplicable(msg);
  };

  const Fact f1 = premise(r.premise1);
  const ConceptNode& n1 = s.node(f1.concept_id);

  std::vector<std::vector<Fact>> concl;  // one vector per child
  bool exists_rule = false;

  switch (r.rule) {
    case Rule::NotNot: {
      require(n1.kind == ConceptKind::Not && s.node(n1.lhs).kind == ConceptKind::Not, "premise is not a double negation");
      concl = {{{f1.label, s.node(n1.lhs).lhs}}};
      break;
    }
    case Rule::NotOr: {
      require(n1.kind == ConceptKind::Not && s.node(n1.lhs).kind == ConceptKind::Or, "premise is not a negated union");
      const ConceptNode& inner = s.node(n1.lhs);
      concl = {{{f1.label, s.not_(inner.lhs)}, {f1.label, s.not_(inner.rhs)}}};
      break;
    }
    case Rule::Or: {
      require(n1.kind == ConceptKind::Or, "premise is not a union");
      concl = {{{f1.label, n1.lhs}}, {{f1.label, n1.rhs}}};
      break;
    }
    case Rule::Exists: {
      require(n1.kind == ConceptKind::Exists, "premise is not an existential");
      require(!sh.is_singleton(n1.lhs), "existential rule does not apply to links");
      require(!b.blocked(f1.label), "label is blocked");
      exists_rule = true;
      break;
    }
    case Rule::NotExists: {
      const Fact f2 = premise(r.premise2);
      require(n1.kind == ConceptKind::Not && s.node(n1.lhs).kind == ConceptKind::Exists, "first premise is not a negated existential");
      RoleId lr;
      std::uint32_t m = kNoIndex;
      require(f2.label == f1.label && sh.is_link(f2, &lr, &m, b) && lr == s.node(n1.lhs).role,
              "second premise is not a matching link");
      concl = {{{m, s.not_(s.node(n1.lhs).lhs)}}};
      break;
    }
    case Rule::Sym: {
      require(n1.kind == ConceptKind::Singleton, "premise is not a singleton fact");
      std::uint32_t m = b.individual_index(n1.sym);
      concl = {{{m, s.singleton(b.individuals()[f1.label].sym)}}};
      break;
    }
    case Rule::NotSym: {
      require(n1.kind == ConceptKind::Not && s.node(n1.lhs).kind == ConceptKind::Singleton,
              "premise is not a negated singleton fact");
      std::uint32_t m = b.individual_index(s.node(n1.lhs).sym);
      concl = {{{m, s.not_(s.singleton(b.individuals()[f1.label].sym))}}};
      break;
    }
    case Rule::Mon: {
      const Fact f2 = premise(r.premise2);
      require(n1.kind == ConceptKind::Singleton, "first premise is not a singleton fact");
      require(f2.label == b.individual_index(n1.sym), "second premise label does not match");
      concl = {{{f1.label, f2.concept_id}}};
      break;
    }
    case Rule::ExistsOr: {
      RoleId role;
      std::uint32_t m;
      require(sh.is_link(f1, &role, &m, b) && s.node(role).kind == RoleKind::Or, "premise is not a union link");
      const RoleNode& rn = s.node(role);
      ConceptId filler = s.node(f1.concept_id).lhs;
      concl = {{{f1.label, s.exists(rn.lhs, filler)}}, {{f1.label, s.exists(rn.rhs, filler)}}};
      break;
    }
    case Rule::NotExistsOr: {
      require(n1.kind == ConceptKind::Not && s.node(n1.lhs).kind == ConceptKind::Exists &&
                  s.node(s.node(n1.lhs).role).kind == RoleKind::Or,
              "premise is not a negated union existential");
      const ConceptNode& inner = s.node(n1.lhs);
      const RoleNode& rn = s.node(inner.role);
      concl = {{{f1.label, s.not_(s.exists(rn.lhs, inner.lhs))}, {f1.label, s.not_(s.exists(rn.rhs, inner.lhs))}}};
      break;
    }
    case Rule::ExistsInv: {
      RoleId role;
      std::uint32_t m;
      require(sh.is_link(f1, &role, &m, b) && s.node(role).kind == RoleKind::Inverse, "premise is not an inverse link");
      concl = {{{m, s.exists(s.node(role).lhs, s.singleton(b.individuals()[f1.label].sym))}}};
      break;
    }
    case Rule::NotExistsInv: {
      const Fact f2 = premise(r.premise2);
      require(n1.kind == ConceptKind::Not && s.node(n1.lhs).kind == ConceptKind::Exists &&
                  s.node(s.node(n1.lhs).role).kind == RoleKind::Inverse,
              "first premise is not a negated inverse existential");
      const ConceptNode& inner = s.node(n1.lhs);
      const RoleNode& rn = s.node(inner.role);
      const ConceptNode& jn = s.node(f2.concept_id);
      require(jn.kind == ConceptKind::Exists && jn.role == rn.lhs && sh.is_singleton(jn.lhs) &&
                  s.node(jn.lhs).sym == b.individuals()[f1.label].sym,
              "second premise is not a matching back-link");
      concl = {{{f2.label, s.not_(inner.lhs)}}};
      break;
    }
    case Rule::ExistsNot: {
      RoleId role;
      std::uint32_t m;
      require(sh.is_link(f1, &role, &m, b) && s.node(role).kind == RoleKind::Not, "premise is not a negated-role link");
      concl = {{{f1.label, s.not_(s.exists(s.node(role).lhs, s.node(f1.concept_id).lhs))}}};
      break;
    }
    case Rule::NotExistsNot: {
      const Fact f2 = premise(r.premise2);
      require(n1.kind == ConceptKind::Not && s.node(n1.lhs).kind == ConceptKind::Exists &&
                  s.node(s.node(n1.lhs).role).kind == RoleKind::Not,
              "first premise is not a negated window");
      const ConceptNode& f2n = s.node(f2.concept_id);
      require(f2n.kind == ConceptKind::Singleton && b.individual_index(f2n.sym) == f2.label,
              "second premise is not a domain fact");
      const ConceptNode& inner = s.node(n1.lhs);
      RoleId inner_role = s.node(inner.role).lhs;
      SymbolId other = b.individuals()[f2.label].sym;
      concl = {{{f1.label, s.exists(inner_role, s.singleton(other))}}, {{f2.label, s.not_(inner.lhs)}}};
      break;
    }
    case Rule::ExistsId: {
      RoleId role;
      std::uint32_t m;
      require(sh.is_link(f1, &role, &m, b) && s.node(role).kind == RoleKind::Id, "premise is not an identity link");
      concl = {{{f1.label, s.node(f1.concept_id).lhs}}};
      break;
    }
    case Rule::NotExistsId: {
      require(n1.kind == ConceptKind::Not && s.node(n1.lhs).kind == ConceptKind::Exists &&
                  s.node(s.node(n1.lhs).role).kind == RoleKind::Id,
              "premise is not a negated identity existential");
      concl = {{{f1.label, s.not_(s.node(n1.lhs).lhs)}}};
      break;
    }
    case Rule::Ub: {
      require(b.options().ub_enabled, "equality conjecture rule is disabled");
      const Fact f2 = premise(r.premise2);
      const ConceptNode& f2n = s.node(f2.concept_id);
      require(n1.kind == ConceptKind::Singleton && b.individual_index(n1.sym) == f1.label,
              "first premise is not a domain fact");
      require(f2n.kind == ConceptKind::Singleton && b.individual_index(f2n.sym) == f2.label,
              "second premise is not a domain fact");
      require(f1.label < f2.label, "conjecture premises must be ordered by creation");
      ConceptId other = s.singleton(b.individuals()[f2.label].sym);
      concl = {{{f1.label, other}}, {{f1.label, s.not_(other)}}};
      break;
    }
    case Rule::Clash:
    case Rule::Refl:
    case Rule::Given:
      throw RuleNotApplicable("rule is not schedulable");
  }

  Branch base = b;
  base.applied_.insert(Branch::applied_key(r));
  base.step_count_ += 1;

  std::vector<Branch> children;
  TraceLog::Event ev{b.node_id_, r.rule, r.premise1, r.premise2, {}};

  if (exists_rule) {
    // Reuse the witness previously created for this existential within the
    // label's equality class; otherwise create a fresh one.
    std::vector<TraceLog::Added> recs;
    std::uint32_t w = kNoIndex;
    for (const auto& entry : base.witnesses_) {
      if (entry.premise == f1.concept_id && base.find(entry.creator) == base.find(f1.label)) {
        w = entry.witness;
        break;
      }
    }
    if (w == kNoIndex) {
      w = base.fresh_witness(f1.label, f1.concept_id, r.premise1, recs);
      base.witnesses_.push_back({f1.label, f1.concept_id, w});
    }
    SymbolId wsym = base.individuals_[w].sym;
    ConceptId link = s.exists(n1.role, s.singleton(wsym));
    if (!base.closed_) base.insert(f1.label, link, Rule::Exists, r.premise1, kNoIndex, recs);
    if (!base.closed_) base.insert(w, n1.lhs, Rule::Exists, r.premise1, kNoIndex, recs);
    if (base.log_) base.node_id_ = base.log_->new_node();
    ev.children.push_back({base.node_id_, std::move(recs)});
    children.push_back(std::move(base));
  } else {
    for (std::size_t k = 0; k < concl.size(); ++k) {
      Branch child = (k + 1 == concl.size()) ? std::move(base) : base;
      std::vector<TraceLog::Added> recs;
      for (const Fact& g : concl[k]) {
        if (child.closed_) break;
        child.insert(g.label, g.concept_id, r.rule, r.premise1, r.premise2, recs);
      }
      if (child.log_) child.node_id_ = child.log_->new_node();
      ev.children.push_back({child.node_id_, std::move(recs)});
      children.push_back(std::move(child));
    }
  }

  if (b.log_ != nullptr) b.log_->events.push_back(std::move(ev));
  return children;
}

bool is_fully_expanded(const Branch& b) {
  if (b.closed()) return false;
  return applicable(b).empty();
}

bool is_blocked(const Branch& b, std::uint32_t individual) { return b.blocked(individual); }

Model extract_model(const Branch& b) {
  if (b.closed()) throw ClosedBranch("cannot extract a model from a closed branch");
  if (!applicable(b).empty()) throw NotExpanded("branch still has applicable rule instances");
  TermStore& s = b.store();
  const auto& inds = b.individuals();

  Model m;
  // Elements: equality classes, numbered by least member.
  std::vector<std::size_t> element(inds.size());
  for (std::uint32_t i = 0; i < inds.size(); ++i) {
    if (b.find(i) == i) {
      element[i] = m.domain;
      ++m.domain;
    }
  }
  for (std::uint32_t i = 0; i < inds.size(); ++i) element[i] = element[b.find(i)];

  for (const Fact& f : b.facts()) {
    const ConceptNode& n = s.node(f.concept_id);
    if (n.kind == ConceptKind::Atom) {
      m.concepts[s.name(n.sym)].push_back(element[f.label]);
    } else if (n.kind == ConceptKind::Exists && s.node(n.role).kind == RoleKind::Atom &&
               s.node(n.lhs).kind == ConceptKind::Singleton) {
      std::uint32_t target = b.individual_index(s.node(n.lhs).sym);
      m.roles[s.name(s.node(n.role).sym)].emplace_back(element[f.label], element[target]);
    }
  }
  for (std::uint32_t i = 0; i < inds.size(); ++i) m.individuals[s.name(inds[i].sym)] = element[i];

  for (auto& [_, ext] : m.concepts) {
    std::sort(ext.begin(), ext.end());
    ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
  }
  for (auto& [_, ext] : m.roles) {
    std::sort(ext.begin(), ext.end());
    ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
  }
  return m;
}

}  // namespace albo
