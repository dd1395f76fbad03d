#include "grp/nr.hpp"

#include <algorithm>

#include "grp/errors.hpp"
#include "grp/lattice.hpp"
#include "grp/structure.hpp"

namespace grp {

Subgroup normal_closure(const FiniteGroup& g, const Subgroup& k) {
  require_same_parent(g, k);
  auto seed = k.small_generating_set();
  DynBitset closure = detail::normal_closure_set(g, seed, g.generator_ordinals());
  return make_subgroup_unchecked(g.shared_from_this(), std::move(closure));
}

SpecialTripleRecord is_special_triple(const FiniteGroup& g, const Subgroup& h,
                                      const Subgroup& k) {
  require_same_parent(g, h);
  require_same_parent(g, k);
  if (!k.members().is_subset_of(h.members()))
    throw ChainViolation("k " + k.describe() + " is not contained in h " + h.describe());
  // k normal in h: conjugation by h's generators must fix k.
  auto h_gens = h.small_generating_set();
  auto k_gens = k.small_generating_set();
  for (Ordinal c : h_gens)
    for (Ordinal m : k_gens)
      if (!k.contains(g.conjugate_element(m, c)))
        throw NotNormalInH("k " + k.describe() + " is not normal in h " + h.describe());

  SpecialTripleRecord rec;
  rec.group = g.shared_from_this();
  rec.h = h;
  rec.k = k;
  rec.closure = normal_closure(g, k);
  rec.meet = make_subgroup_unchecked(rec.group, rec.closure.members() & h.members());
  rec.special = rec.meet.members() == k.members();
  return rec;
}

namespace {

// Normal subgroups of h, as subgroups of the parent, canonical order.
std::vector<Subgroup> normal_subgroups_of(const FiniteGroup& g, const Subgroup& h) {
  const PromotedGroup& promo = g.promoted(h);
  std::vector<Subgroup> out;
  for (const Subgroup& n : promo.group->normal_subgroups())
    out.push_back(map_to_parent(h.parent(), promo, n));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

std::pair<bool, std::optional<Subgroup>> is_nr_subgroup(const FiniteGroup& g,
                                                        const Subgroup& h) {
  require_same_parent(g, h);
  for (const Subgroup& k : normal_subgroups_of(g, h)) {
    SpecialTripleRecord rec = is_special_triple(g, h, k);
    if (!rec.special) return {false, k};
  }
  return {true, std::nullopt};
}

bool is_ne_subgroup(const FiniteGroup& g, const Subgroup& k) {
  require_same_parent(g, k);
  Subgroup n = normalizer(g, k);
  return is_special_triple(g, n, k).special;
}

HypothesisVerdict hypothesis(const FiniteGroup& g, TheoremId id,
                             std::size_t lattice_cap) {
  HypothesisVerdict verdict;
  verdict.theorem_id = id;

  unsigned level = 1;
  bool exempt_nilpotent = true;
  bool normal_route = true;  // th1 accepts normal, th2/cor accept subnormal
  switch (id) {
    case TheoremId::th1:
      level = 1;
      exempt_nilpotent = true;
      normal_route = true;
      break;
    case TheoremId::th2:
      level = 2;
      exempt_nilpotent = true;
      normal_route = false;
      break;
    case TheoremId::cor:
      level = 2;
      exempt_nilpotent = false;
      normal_route = false;
      break;
    default:
      throw UnknownTheoremId("hypothesis() evaluates th1, th2 and cor only");
  }

  bool tested_any = false;
  for (const Subgroup& h : n_maximal_subgroups(g, level, lattice_cap)) {
    if (exempt_nilpotent && is_nilpotent(h)) continue;
    tested_any = true;
    bool pass;
    std::string route;
    if (normal_route) {
      pass = h.is_normal();
      route = "normal";
    } else {
      pass = is_subnormal(g, h);
      route = "subnormal";
    }
    if (!pass) {
      auto [nr, witness_k] = is_nr_subgroup(g, h);
      pass = nr;
      if (!pass) {
        std::string reason = std::string(exempt_nilpotent ? "non-nilpotent " : "") +
                             std::to_string(level) + "-maximal " + h.describe() +
                             " is not " + route + " and not NR";
        if (witness_k)
          reason += "; failing normal subgroup " + witness_k->describe();
        verdict.witnesses.push_back({h, std::move(reason)});
      }
    }
  }
  verdict.holds = verdict.witnesses.empty();
  verdict.vacuous = verdict.holds && !tested_any;
  return verdict;
}

std::pair<bool, Subgroup> nc1_premises(const FiniteGroup& g, const Subgroup& p_sub,
                                       std::size_t lattice_cap) {
  require_same_parent(g, p_sub);
  if (p_sub.order() < 2 || !p_sub.is_prime_power_order())
    throw NotPGroup(p_sub.describe() + " is not a nontrivial p-subgroup");
  Subgroup n = normalizer(g, p_sub);
  if (!is_special_triple(g, n, p_sub).special) return {false, n};
  Subgroup phi = frattini(p_sub, lattice_cap);
  if (!is_special_triple(g, n, phi).special) return {false, n};
  return {true, n};
}

}  // namespace grp
