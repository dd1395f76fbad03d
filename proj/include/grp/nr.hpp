#ifndef GRP_NR_HPP
#define GRP_NR_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grp/group.hpp"

namespace grp {

/// Outcome of a special-triple test: closure = k^g, meet = k^g intersected
/// with h, special iff the meet equals k.
struct SpecialTripleRecord {
  GroupPtr group;
  Subgroup h;
  Subgroup k;
  Subgroup closure;
  Subgroup meet;
  bool special = false;
};

enum class TheoremId { th1, th2, cor, nc1, th4, th5 };

struct HypothesisWitness {
  Subgroup subgroup;
  std::string reason;
};

/// Literal evaluation of a theorem hypothesis over a group, with every
/// violating subgroup listed.
struct HypothesisVerdict {
  TheoremId theorem_id = TheoremId::th1;
  bool holds = false;
  /// Hypothesis held with nothing to test (no subgroup met the guard).
  bool vacuous = false;
  std::vector<HypothesisWitness> witnesses;
};

/// Smallest normal subgroup of g containing k (generated by all conjugates).
Subgroup normal_closure(const FiniteGroup& g, const Subgroup& k);

/// Requires k <= h <= g with k normal in h (ChainViolation / NotNormalInH).
SpecialTripleRecord is_special_triple(const FiniteGroup& g, const Subgroup& h,
                                      const Subgroup& k);

/// True iff every normal subgroup of h forms a special triple; on failure the
/// first failing subgroup in canonical order is returned.
std::pair<bool, std::optional<Subgroup>> is_nr_subgroup(const FiniteGroup& g,
                                                        const Subgroup& h);

/// (g, N_g(k), k) is special.
bool is_ne_subgroup(const FiniteGroup& g, const Subgroup& k);

/// th1: every non-nilpotent maximal subgroup is normal or NR.
/// th2: every non-nilpotent 2-maximal subgroup is subnormal or NR.
/// cor: every 2-maximal subgroup is subnormal or NR.
HypothesisVerdict hypothesis(const FiniteGroup& g, TheoremId id,
                             std::size_t lattice_cap = FiniteGroup::kDefaultLatticeCap);

/// Premises of the normal-complement criterion: with n = normalizer of the
/// p-subgroup, both (g, n, p_sub) and (g, n, frattini(p_sub)) are special.
/// The prime is inferred from |p_sub|; order 1 is rejected.
std::pair<bool, Subgroup> nc1_premises(const FiniteGroup& g, const Subgroup& p_sub,
                                       std::size_t lattice_cap = FiniteGroup::kDefaultLatticeCap);

}  // namespace grp

#endif  // GRP_NR_HPP
