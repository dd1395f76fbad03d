#ifndef GRP_LATTICE_HPP
#define GRP_LATTICE_HPP

#include <cstdint>
#include <vector>

#include "grp/group.hpp"

namespace grp {

/// The complete subgroup lattice of a group: every subgroup in canonical
/// order (ascending order, member sets lexicographically), the inclusion
/// relation, and the partition into conjugacy classes. Immutable once built;
/// construction asserts conjugation- and intersection-closedness.
struct SubgroupLattice {
  GroupPtr parent;
  std::vector<Subgroup> subgroups;
  /// proper_subs[i] holds j iff subgroups[j] < subgroups[i] strictly.
  std::vector<DynBitset> proper_subs;
  /// proper_sups[i] holds j iff subgroups[i] < subgroups[j] strictly.
  std::vector<DynBitset> proper_sups;
  std::vector<std::uint32_t> conjugacy_class;
  std::vector<std::vector<std::uint32_t>> classes;

  std::size_t size() const { return subgroups.size(); }
  std::size_t index_of(const DynBitset& members) const;  // throws ForeignSubgroup
  std::size_t index_of(const Subgroup& sub) const { return index_of(sub.members()); }
  bool leq(std::size_t i, std::size_t j) const {
    return i == j || proper_subs[j].test(i);
  }
  /// Indices of the subgroups maximal in subgroups[i].
  std::vector<std::uint32_t> maximal_in(std::size_t i) const;
  /// Indices of subgroups of which subgroups[i] is a maximal subgroup.
  std::vector<std::uint32_t> maximal_members_of(std::size_t i) const;
};

/// Full enumeration by cyclic seeds plus pairwise join closure to fixpoint.
/// Throws LatticeCapExceeded when |g| exceeds the cap. The result is cached
/// on the group; lattice_cap only gates access.
const SubgroupLattice& all_subgroups(const FiniteGroup& g,
                                     std::size_t lattice_cap = FiniteGroup::kDefaultLatticeCap);

std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g,
                                        std::size_t lattice_cap = FiniteGroup::kDefaultLatticeCap);

/// n = 1 gives the maximal subgroups; for n >= 2, the subgroups maximal in
/// some (n-1)-maximal subgroup, deduplicated as subgroups of g.
std::vector<Subgroup> n_maximal_subgroups(const FiniteGroup& g, unsigned n,
                                          std::size_t lattice_cap = FiniteGroup::kDefaultLatticeCap);

/// Fixed points of the conjugation action on the lattice.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g,
                                       std::size_t lattice_cap = FiniteGroup::kDefaultLatticeCap);

/// Nontrivial normal subgroups minimal under inclusion.
std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g,
                                               std::size_t lattice_cap = FiniteGroup::kDefaultLatticeCap);

/// Intersection of the maximal subgroups; the trivial group's Frattini
/// subgroup is trivial by convention.
Subgroup frattini(const FiniteGroup& g, std::size_t lattice_cap = FiniteGroup::kDefaultLatticeCap);

/// Frattini subgroup of a subgroup, computed within it (the subgroup is
/// re-rooted as a standalone group); the answer is a subgroup of the parent.
Subgroup frattini(const Subgroup& h, std::size_t lattice_cap = FiniteGroup::kDefaultLatticeCap);

/// All subgroups whose order is the full p-part of |g|; when p does not
/// divide |g| this is the singleton {trivial} by convention.
std::vector<Subgroup> sylow(const FiniteGroup& g, unsigned p,
                            std::size_t lattice_cap = FiniteGroup::kDefaultLatticeCap);

/// Normal-closure descent: true iff the series g >= h^g >= h^(h^g) >= ...
/// stabilizes at h.
bool is_subnormal(const FiniteGroup& g, const Subgroup& h);

}  // namespace grp

#endif  // GRP_LATTICE_HPP
