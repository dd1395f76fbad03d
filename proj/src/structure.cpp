#include "grp/structure.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "grp/errors.hpp"
#include "grp/lattice.hpp"

namespace grp {

bool is_prime_number(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::size_t p_part(std::size_t n, unsigned p) {
  std::size_t part = 1;
  while (n % p == 0) {
    part *= p;
    n /= p;
  }
  return part;
}

namespace {

std::vector<unsigned> prime_divisors(std::size_t n) {
  std::vector<unsigned> primes;
  for (unsigned p = 2; static_cast<std::size_t>(p) * p <= n; ++p)
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) primes.push_back(static_cast<unsigned>(n));
  return primes;
}

void require_prime(unsigned p) {
  if (!is_prime_number(p)) throw NotPrime(std::to_string(p) + " is not prime");
}

}  // namespace

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  assert(a.parent() == b.parent());
  const FiniteGroup& g = *a.parent();
  DynBitset seen(g.order());
  std::vector<Ordinal> gens;
  auto members_a = a.member_list();
  auto members_b = b.member_list();
  for (Ordinal x : members_a)
    for (Ordinal y : members_b) {
      Ordinal comm = g.product(g.product(g.inverse(x), g.inverse(y)), g.product(x, y));
      if (!seen.test(comm)) {
        seen.set(comm);
        gens.push_back(comm);
      }
    }
  return Subgroup::generated_by(a.parent(), gens);
}

SeriesRecord derived_series(const FiniteGroup& g) {
  SeriesRecord series;
  series.kind = SeriesKind::derived;
  series.terms.push_back(g.full_subgroup());
  for (;;) {
    const Subgroup& last = series.terms.back();
    Subgroup next = commutator_subgroup(last, last);
    if (next.members() == last.members()) break;
    series.terms.push_back(std::move(next));
  }
  series.reached_trivial = series.terms.back().is_trivial();
  return series;
}

SeriesRecord lower_central_series(const FiniteGroup& g) {
  SeriesRecord series;
  series.kind = SeriesKind::lower_central;
  Subgroup whole = g.full_subgroup();
  series.terms.push_back(whole);
  for (;;) {
    const Subgroup& last = series.terms.back();
    Subgroup next = commutator_subgroup(whole, last);
    if (next.members() == last.members()) break;
    series.terms.push_back(std::move(next));
  }
  series.reached_trivial = series.terms.back().is_trivial();
  return series;
}

std::vector<Subgroup> minimal_normal_subgroups_direct(const FiniteGroup& g) {
  const auto& normals = g.normal_subgroups();
  std::vector<Subgroup> out;
  for (const Subgroup& cand : normals) {
    if (cand.is_trivial()) continue;
    bool minimal = true;
    for (const Subgroup& other : normals) {
      if (other.is_trivial() || other == cand) continue;
      if (other.members().is_subset_of(cand.members()) && !(other == cand)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(cand);
  }
  return out;
}

SeriesRecord chief_series(const FiniteGroup& g, ChiefSelection selection) {
  SeriesRecord series;
  series.kind = SeriesKind::chief;
  GroupPtr self = g.shared_from_this();

  // Built ascending: each step lifts a minimal normal subgroup of the current
  // quotient; reversed to the descending convention at the end.
  std::vector<Subgroup> ascending{g.trivial_subgroup()};
  while (!(ascending.back().members() == g.full_subgroup().members())) {
    const Subgroup& current = ascending.back();
    Subgroup lifted = [&] {
      if (current.is_trivial()) {
        auto mins = minimal_normal_subgroups_direct(g);
        assert(!mins.empty());
        return selection == ChiefSelection::first ? mins.front() : mins.back();
      }
      const QuotientResult& quo = quotient(g, current);
      auto mins = minimal_normal_subgroups_direct(*quo.group);
      assert(!mins.empty());
      const Subgroup& chosen =
          selection == ChiefSelection::first ? mins.front() : mins.back();
      return make_subgroup_unchecked(self, quo.projection.preimage(chosen.members()));
    }();
    ascending.push_back(std::move(lifted));
  }
  series.terms.assign(ascending.rbegin(), ascending.rend());
  series.reached_trivial = true;
  return series;
}

std::pair<bool, SeriesRecord> is_solvable(const FiniteGroup& g) {
  SeriesRecord series = derived_series(g);
  return {series.reached_trivial, std::move(series)};
}

namespace {

// Every Sylow subgroup normal <=> for each prime p, the p-elements form a
// subgroup of order the full p-part.
bool all_sylow_normal(const FiniteGroup& g) {
  const auto& orders = g.element_orders();
  for (unsigned p : prime_divisors(g.order())) {
    std::vector<Ordinal> p_elements;
    for (std::size_t x = 0; x < g.order(); ++x)
      if (p_part(orders[x], p) == orders[x]) p_elements.push_back(static_cast<Ordinal>(x));
    if (detail::closure_set(g, p_elements).count() != p_part(g.order(), p))
      return false;
  }
  return true;
}

}  // namespace

bool is_nilpotent(const FiniteGroup& g) {
  bool by_series = lower_central_series(g).reached_trivial;
  bool by_sylow = all_sylow_normal(g);
  if (by_series != by_sylow)
    throw Error("nilpotency cross-check failed for " + g.name());
  return by_series;
}

bool is_nilpotent(const Subgroup& h) {
  return is_nilpotent(*h.parent()->promoted(h).group);
}

bool is_supersolvable(const FiniteGroup& g, ChiefSelection selection) {
  SeriesRecord series = chief_series(g, selection);
  for (std::size_t i = 0; i + 1 < series.terms.size(); ++i) {
    std::size_t factor = series.terms[i].order() / series.terms[i + 1].order();
    if (!is_prime_number(static_cast<unsigned>(factor))) return false;
  }
  return true;
}

std::optional<Subgroup> is_p_nilpotent(const FiniteGroup& g, unsigned p) {
  require_prime(p);
  std::size_t complement_order = g.order() / p_part(g.order(), p);
  const Subgroup* found = nullptr;
  for (const Subgroup& n : g.normal_subgroups())
    if (n.order() == complement_order) {
      // The complement is unique when it exists.
      if (found) throw Error("normal p-complement is not unique");
      found = &n;
    }
  if (!found) return std::nullopt;
  return *found;
}

bool is_minimal_non_nilpotent(const FiniteGroup& g, std::size_t lattice_cap) {
  if (is_nilpotent(g)) return false;
  for (const Subgroup& m : maximal_subgroups(g, lattice_cap))
    if (!is_nilpotent(m)) return false;
  return true;
}

Subgroup fitting(const FiniteGroup& g) {
  const Subgroup* best = nullptr;
  std::vector<const Subgroup*> nilpotent_normals;
  for (const Subgroup& n : g.normal_subgroups())
    if (is_nilpotent(n)) {
      nilpotent_normals.push_back(&n);
      if (!best || n.order() > best->order()) best = &n;
    }
  assert(best != nullptr);  // the trivial subgroup is nilpotent normal
  for (const Subgroup* n : nilpotent_normals)
    if (!n->members().is_subset_of(best->members()))
      throw Error("Fitting subgroup does not contain a nilpotent normal subgroup");
  return *best;
}

Subgroup solvable_radical(const FiniteGroup& g) {
  const Subgroup* best = nullptr;
  std::vector<const Subgroup*> solvable_normals;
  for (const Subgroup& n : g.normal_subgroups()) {
    const PromotedGroup& promo = g.promoted(n);
    if (derived_series(*promo.group).reached_trivial) {
      solvable_normals.push_back(&n);
      if (!best || n.order() > best->order()) best = &n;
    }
  }
  assert(best != nullptr);
  for (const Subgroup* n : solvable_normals)
    if (!n->members().is_subset_of(best->members()))
      throw Error("solvable radical does not contain a solvable normal subgroup");
  return *best;
}

Subgroup o_upper_p(const FiniteGroup& g, unsigned p) {
  require_prime(p);
  const auto& orders = g.element_orders();
  std::vector<Ordinal> gens;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (orders[x] % p != 0) gens.push_back(static_cast<Ordinal>(x));
  Subgroup result = Subgroup::generated_by(g.shared_from_this(), gens);
  std::size_t quotient_order = g.order() / result.order();
  if (p_part(quotient_order, p) != quotient_order)
    throw Error("quotient by O^p(G) is not a p-group");
  return result;
}

namespace {

void require_p_group(const Subgroup& p_sub) {
  if (!p_sub.is_prime_power_order())
    throw NotPGroup(p_sub.describe() + " is not a p-group");
}

}  // namespace

Subgroup thompson_subgroup(const Subgroup& p_sub, std::size_t lattice_cap) {
  require_p_group(p_sub);
  const FiniteGroup& parent = *p_sub.parent();
  const PromotedGroup& promo = parent.promoted(p_sub);
  const SubgroupLattice& lat = promo.group->lattice(lattice_cap);
  std::size_t max_abelian = 0;
  for (const Subgroup& sub : lat.subgroups)
    if (sub.is_abelian()) max_abelian = std::max(max_abelian, sub.order());
  std::vector<Ordinal> gens;
  DynBitset seen(promo.group->order());
  for (const Subgroup& sub : lat.subgroups) {
    if (sub.order() != max_abelian || !sub.is_abelian()) continue;
    sub.members().for_each([&](std::size_t m) {
      if (!seen.test(m)) {
        seen.set(m);
        gens.push_back(static_cast<Ordinal>(m));
      }
    });
  }
  Subgroup joined = Subgroup::generated_by(promo.group, gens);
  return map_to_parent(p_sub.parent(), promo, joined);
}

Subgroup z_j(const Subgroup& p_sub, std::size_t lattice_cap) {
  Subgroup j = thompson_subgroup(p_sub, lattice_cap);
  const FiniteGroup& parent = *p_sub.parent();
  const PromotedGroup& promo = parent.promoted(j);
  Subgroup zj = center(*promo.group);
  return map_to_parent(p_sub.parent(), promo, zj);
}

std::optional<Subgroup> normal_complement(const FiniteGroup& g, const Subgroup& n) {
  require_same_parent(g, n);
  for (const Subgroup& l : g.normal_subgroups()) {
    if (n.order() * l.order() != g.order()) continue;
    if ((n.members() & l.members()).count() == 1) return l;
  }
  return std::nullopt;
}

}  // namespace grp
