#include "grp/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "grp/errors.hpp"

namespace grp {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

SubgroupLattice build_lattice(const FiniteGroup& g) {
  GroupPtr self = detail::unowned_handle(g);  // the lattice lives inside g
  std::size_t n = g.order();

  std::vector<DynBitset> sets;
  std::vector<std::vector<Ordinal>> gens;
  std::unordered_map<DynBitset, std::size_t, DynBitsetHash> seen;
  auto add = [&](DynBitset set) -> bool {
    if (!seen.emplace(set, sets.size()).second) return false;
    gens.push_back(detail::small_generating_set_of(g, set));
    sets.push_back(std::move(set));
    return true;
  };

  // Cyclic seeds, then pairwise joins until fixpoint.
  for (std::size_t x = 0; x < n; ++x) {
    Ordinal gen[1] = {static_cast<Ordinal>(x)};
    add(detail::closure_set(g, gen));
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (sets[j].is_subset_of(sets[i]) || sets[i].is_subset_of(sets[j])) continue;
      std::vector<Ordinal> joint = gens[i];
      joint.insert(joint.end(), gens[j].begin(), gens[j].end());
      add(detail::closure_set(g, joint));
    }
  }

  SubgroupLattice lat;
  lat.parent = self;
  lat.subgroups.reserve(sets.size());
  for (auto& set : sets) lat.subgroups.push_back(Subgroup::from_members(self, set));
  std::sort(lat.subgroups.begin(), lat.subgroups.end(), canonical_less);

  std::unordered_map<DynBitset, std::size_t, DynBitsetHash> position;
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i)
    position.emplace(lat.subgroups[i].members(), i);

  // Closure sanity: the lattice must be closed under parent-conjugation and
  // under pairwise intersection.
  for (const Subgroup& sub : lat.subgroups)
    for (Ordinal c : g.generator_ordinals())
      if (!position.count(conjugate_by_ordinal(c, sub).members()))
        throw Error("subgroup lattice is not conjugation-closed");
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!position.count((lat.subgroups[i].members() & lat.subgroups[j].members())))
        throw Error("subgroup lattice is not intersection-closed");

  std::size_t count = lat.subgroups.size();
  lat.proper_subs.assign(count, DynBitset(count));
  lat.proper_sups.assign(count, DynBitset(count));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j) continue;
      if (lat.subgroups[i].members().is_subset_of(lat.subgroups[j].members())) {
        lat.proper_subs[j].set(i);
        lat.proper_sups[i].set(j);
      }
    }

  // Conjugacy classes: orbits under generator conjugation, numbered in order
  // of their smallest lattice index.
  lat.conjugacy_class.assign(count, 0xffffffff);
  for (std::size_t i = 0; i < count; ++i) {
    if (lat.conjugacy_class[i] != 0xffffffff) continue;
    auto cls = static_cast<std::uint32_t>(lat.classes.size());
    std::vector<std::uint32_t> orbit{static_cast<std::uint32_t>(i)};
    lat.conjugacy_class[i] = cls;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (Ordinal c : g.generator_ordinals()) {
        Subgroup image = conjugate_by_ordinal(c, lat.subgroups[orbit[k]]);
        std::size_t pos = position.at(image.members());
        if (lat.conjugacy_class[pos] == 0xffffffff) {
          lat.conjugacy_class[pos] = cls;
          orbit.push_back(static_cast<std::uint32_t>(pos));
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    lat.classes.push_back(std::move(orbit));
  }
  return lat;
}

}  // namespace

std::size_t SubgroupLattice::index_of(const DynBitset& members) const {
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    if (subgroups[i].members() == members) return i;
  throw ForeignSubgroup("subgroup not present in the lattice");
}

std::vector<std::uint32_t> SubgroupLattice::maximal_in(std::size_t i) const {
  std::vector<std::uint32_t> out;
  // j is maximal in i iff nothing sits strictly between them.
  proper_subs[i].for_each([&](std::size_t j) {
    if (!proper_sups[j].intersects(proper_subs[i]))
      out.push_back(static_cast<std::uint32_t>(j));
  });
  return out;
}

std::vector<std::uint32_t> SubgroupLattice::maximal_members_of(std::size_t i) const {
  std::vector<std::uint32_t> out;
  proper_sups[i].for_each([&](std::size_t j) {
    if (!proper_sups[i].intersects(proper_subs[j]))
      out.push_back(static_cast<std::uint32_t>(j));
  });
  return out;
}

const SubgroupLattice& FiniteGroup::lattice(std::size_t lattice_cap) const {
  if (order() > lattice_cap)
    throw LatticeCapExceeded("group order " + std::to_string(order()) +
                             " exceeds the lattice cap " + std::to_string(lattice_cap));
  return lattice_cache_.get([this] { return build_lattice(*this); });
}

const SubgroupLattice& all_subgroups(const FiniteGroup& g, std::size_t lattice_cap) {
  return g.lattice(lattice_cap);
}

std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g, std::size_t lattice_cap) {
  const auto& lat = g.lattice(lattice_cap);
  std::size_t top = lat.index_of(g.full_subgroup().members());
  std::vector<Subgroup> out;
  for (std::uint32_t i : lat.maximal_in(top)) out.push_back(lat.subgroups[i]);
  return out;
}

std::vector<Subgroup> n_maximal_subgroups(const FiniteGroup& g, unsigned n,
                                          std::size_t lattice_cap) {
  if (n < 1) throw Error("n-maximal requires n >= 1");
  const auto& lat = g.lattice(lattice_cap);
  std::size_t count = lat.size();
  DynBitset level(count);
  level.set(lat.index_of(g.full_subgroup().members()));
  for (unsigned step = 0; step < n; ++step) {
    DynBitset next(count);
    level.for_each([&](std::size_t i) {
      for (std::uint32_t j : lat.maximal_in(i)) next.set(j);
    });
    level = next;
  }
  std::vector<Subgroup> out;
  level.for_each([&](std::size_t i) { out.push_back(lat.subgroups[i]); });
  return out;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, std::size_t lattice_cap) {
  const auto& lat = g.lattice(lattice_cap);
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.classes[lat.conjugacy_class[i]].size() == 1)
      out.push_back(lat.subgroups[i]);
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g,
                                               std::size_t lattice_cap) {
  auto normals = normal_subgroups(g, lattice_cap);
  std::vector<Subgroup> out;
  for (const Subgroup& cand : normals) {
    if (cand.is_trivial()) continue;
    bool minimal = true;
    for (const Subgroup& other : normals) {
      if (other.is_trivial() || other == cand) continue;
      if (other.members().is_subset_of(cand.members())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(cand);
  }
  return out;
}

Subgroup frattini(const FiniteGroup& g, std::size_t lattice_cap) {
  if (g.order() == 1) return g.trivial_subgroup();
  auto maximals = maximal_subgroups(g, lattice_cap);
  if (maximals.empty()) return g.trivial_subgroup();
  DynBitset meet = maximals.front().members();
  for (std::size_t i = 1; i < maximals.size(); ++i)
    meet = meet & maximals[i].members();
  return make_subgroup_unchecked(g.shared_from_this(), std::move(meet));
}

Subgroup frattini(const Subgroup& h, std::size_t lattice_cap) {
  const FiniteGroup& parent = *h.parent();
  const PromotedGroup& promo = parent.promoted(h);
  Subgroup inner = frattini(*promo.group, lattice_cap);
  return map_to_parent(h.parent(), promo, inner);
}

std::vector<Subgroup> sylow(const FiniteGroup& g, unsigned p, std::size_t lattice_cap) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  std::size_t part = 1;
  std::size_t n = g.order();
  while (n % p == 0) {
    part *= p;
    n /= p;
  }
  if (part == 1) return {g.trivial_subgroup()};
  const auto& lat = g.lattice(lattice_cap);
  std::vector<Subgroup> out;
  for (const Subgroup& sub : lat.subgroups)
    if (sub.order() == part) out.push_back(sub);
  return out;
}

bool is_subnormal(const FiniteGroup& g, const Subgroup& h) {
  require_same_parent(g, h);
  GroupPtr self = g.shared_from_this();
  auto h_gens = h.small_generating_set();
  Subgroup term = g.full_subgroup();
  for (;;) {
    auto ambient_gens = term.small_generating_set();
    DynBitset next = detail::normal_closure_set(g, h_gens, ambient_gens);
    if (next == h.members()) return true;
    if (next == term.members()) return false;
    term = make_subgroup_unchecked(self, std::move(next));
  }
}

}  // namespace grp
