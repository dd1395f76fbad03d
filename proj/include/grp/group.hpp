#ifndef GRP_GROUP_HPP
#define GRP_GROUP_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "grp/bitset.hpp"
#include "grp/perm.hpp"
#include "grp/util.hpp"

namespace grp {

class FiniteGroup;
class Subgroup;
class GroupMap;
struct SubgroupLattice;
struct PromotedGroup;
struct QuotientResult;

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Index of an element within a group's canonical element list.
using Ordinal = std::uint16_t;

/// A fully enumerated permutation group. Instances are heap-allocated through
/// the factory functions, immutable after construction, and safe for
/// concurrent reads; the lazy caches (multiplication table, lattice,
/// promotions, quotients) build at most once under internal locks.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  static constexpr unsigned kDegreeCap = 1000;
  static constexpr std::size_t kDefaultOrderCap = 10000;
  static constexpr std::size_t kMaxOrder = 60000;  // ordinals are 16-bit
  static constexpr std::size_t kDefaultLatticeCap = 400;
  static constexpr std::size_t kOptInLatticeCap = 1200;

  /// Closure of the generators under products, enumerated breadth-first by
  /// generator with image-sequence ties broken lexicographically; the
  /// ordering is reproducible for a fixed generator set.
  static GroupPtr from_generators(std::vector<Perm> generators, unsigned degree,
                                  std::size_t order_cap = kDefaultOrderCap,
                                  std::string name = {});

  unsigned degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Ordinal>& generator_ordinals() const { return gen_ordinals_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(Ordinal o) const { return elements_[o]; }

  static constexpr Ordinal kIdentity = 0;

  /// Ordinal lookup; throws ForeignElement for non-members.
  Ordinal ordinal_of(const Perm& p) const;
  std::optional<Ordinal> find(const Perm& p) const;
  bool contains(const Perm& p) const { return find(p).has_value(); }

  Ordinal product(Ordinal a, Ordinal b) const;
  Ordinal inverse(Ordinal a) const;
  /// g^-1 * x * g.
  Ordinal conjugate_element(Ordinal x, Ordinal g) const;
  unsigned element_order(Ordinal a) const;
  const std::vector<unsigned>& element_orders() const;

  Subgroup trivial_subgroup() const;
  Subgroup full_subgroup() const;

  bool is_abelian() const;

  /// All normal subgroups in canonical order (ascending order, then member
  /// sets lexicographically). Computed by join-closure over the normal
  /// closures of the cyclic subgroups; no subgroup lattice is required.
  const std::vector<Subgroup>& normal_subgroups() const;

  /// The complete subgroup lattice; throws LatticeCapExceeded when the group
  /// order exceeds the cap. Built once and cached.
  const SubgroupLattice& lattice(std::size_t lattice_cap = kDefaultLatticeCap) const;

  /// A subgroup re-rooted as a standalone group on the same points, with the
  /// ordinal translation back to this group. Cached per member set.
  const PromotedGroup& promoted(const Subgroup& sub) const;

  /// Permutation group induced on the cosets of a normal subgroup, plus the
  /// projection; cached per member set. See quotient() below.
  const QuotientResult& quotient_by(const Subgroup& normal_sub) const;

 private:
  struct Private {};

 public:
  FiniteGroup(Private, std::vector<Perm> generators, unsigned degree,
              std::size_t order_cap, std::string name);

 private:
  const std::vector<std::uint16_t>* mult_table_or_null() const;

  unsigned degree_;
  std::string name_;
  std::vector<Perm> generators_;
  std::vector<Ordinal> gen_ordinals_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, Ordinal, PermHash> index_;

  Lazy<std::vector<std::uint16_t>> mult_table_;
  Lazy<std::vector<Ordinal>> inverse_table_;
  Lazy<std::vector<unsigned>> element_orders_;
  Lazy<std::vector<Subgroup>> normals_;
  Lazy<SubgroupLattice> lattice_cache_;
  mutable std::mutex promo_mu_;
  mutable std::unordered_map<DynBitset, std::unique_ptr<PromotedGroup>, DynBitsetHash> promotions_;
  mutable std::mutex quot_mu_;
  mutable std::unordered_map<DynBitset, std::unique_ptr<QuotientResult>, DynBitsetHash> quotients_;
};

/// An element-ordinal set within a parent group, closed under product and
/// inverse. Construction through from_members verifies closure and the
/// Lagrange divisibility; the generated_by factories produce closures.
/// Subgroups handed out of a group's caches (lattice, normal subgroups)
/// stay valid only while that group is alive.
class Subgroup {
 public:
  Subgroup() = default;

  /// Verifies identity membership, closure under product and inverse, and
  /// that the order divides the parent order.
  static Subgroup from_members(GroupPtr parent, DynBitset members);

  static Subgroup generated_by(GroupPtr parent, std::span<const Ordinal> gens);
  static Subgroup generated_by_perms(GroupPtr parent, std::span<const Perm> gens);

  const GroupPtr& parent() const { return parent_; }
  const DynBitset& members() const { return members_; }
  std::size_t order() const { return members_.count(); }
  bool contains(Ordinal o) const { return members_.test(o); }
  bool contains_all(const Subgroup& other) const {
    return other.members_.is_subset_of(members_);
  }
  bool is_trivial() const { return order() == 1; }
  bool is_full() const { return order() == parent_order(); }
  std::size_t parent_order() const;
  std::size_t index_in_parent() const { return parent_order() / order(); }

  std::vector<Ordinal> member_list() const;

  /// Deterministic small generating set: scan members in ascending ordinal
  /// order, keeping each element that enlarges the subgroup generated so far.
  std::vector<Ordinal> small_generating_set() const;
  std::vector<Perm> generator_perms() const;

  bool is_normal() const;
  bool is_abelian() const;
  /// Order is a power of a single prime (the trivial subgroup is excluded).
  bool is_prime_power_order() const;

  Subgroup meet(const Subgroup& other) const;
  Subgroup join(const Subgroup& other) const;

  bool operator==(const Subgroup& other) const {
    return parent_ == other.parent_ && members_ == other.members_;
  }

  /// One-line description with the generators in cycle notation.
  std::string describe() const;

 private:
  friend class FiniteGroup;
  Subgroup(GroupPtr parent, DynBitset members)
      : parent_(std::move(parent)), members_(std::move(members)) {}
  static Subgroup unchecked(GroupPtr parent, DynBitset members) {
    return Subgroup(std::move(parent), std::move(members));
  }
  friend Subgroup make_subgroup_unchecked(GroupPtr, DynBitset);

  GroupPtr parent_;
  DynBitset members_;
};

/// Canonical subgroup comparison: ascending order, member sets
/// lexicographically as a tie-break.
bool canonical_less(const Subgroup& a, const Subgroup& b);

enum class MapKind { homomorphism, isomorphism, quotient_projection };

/// A verified map between two groups, stored element-by-element. Validation
/// checks multiplicativity on all element pairs and bijectivity for
/// isomorphisms.
class GroupMap {
 public:
  GroupMap() = default;  // empty map; populate through verified()

  static GroupMap verified(GroupPtr source, GroupPtr target, MapKind kind,
                           std::vector<Ordinal> element_image);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  MapKind kind() const { return kind_; }
  const std::vector<Perm>& image_of_generator() const { return image_of_generator_; }

  Ordinal apply(Ordinal src) const { return element_image_[src]; }
  Perm apply(const Perm& p) const;

  /// Source ordinals mapping into a target member set.
  DynBitset preimage(const DynBitset& target_set) const;
  DynBitset kernel() const;
  bool is_bijective() const;

 private:
  GroupPtr source_;
  GroupPtr target_;
  MapKind kind_ = MapKind::homomorphism;
  std::vector<Perm> image_of_generator_;
  std::vector<Ordinal> element_image_;
};

struct PromotedGroup {
  GroupPtr group;                    // same points, re-rooted
  std::vector<Ordinal> to_parent;    // promoted ordinal -> parent ordinal
};

struct QuotientResult {
  GroupPtr group;
  GroupMap projection;
};

// --- perm-core operations ---

/// g^-1 H g as a subgroup of the same parent; g must be a parent element.
Subgroup conjugate(const Perm& g, const Subgroup& h);
Subgroup conjugate_by_ordinal(Ordinal g, const Subgroup& h);

/// Elements commuting with every member of s.
Subgroup centralizer(const FiniteGroup& g, const Subgroup& s);

/// Elements whose conjugation fixes h as a set.
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);

Subgroup center(const FiniteGroup& g);

/// The group induced by g acting on the cosets of a normal subgroup, with the
/// projection map; the projection kernel is exactly the normal subgroup.
const QuotientResult& quotient(const FiniteGroup& g, const Subgroup& normal_sub);

/// Permutation group on disjoint point sets; order is the product of orders.
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b,
                        std::string name = {});

/// Exact isomorphism decision: invariant prefilters (order, element-order
/// profile, abelianization and center orders), then backtracking over images
/// of a minimal generating sequence. Returns a verified witness or nullopt.
std::optional<GroupMap> are_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

/// Translate a subgroup of a promoted group back into the parent.
Subgroup map_to_parent(const GroupPtr& parent, const PromotedGroup& promo,
                       const Subgroup& sub_of_promoted);

/// Restrict a parent subgroup contained in the promoted subgroup to promoted
/// coordinates.
Subgroup restrict_to_promoted(const PromotedGroup& promo, const Subgroup& parent_sub);

/// Requires same parent; throws ForeignSubgroup otherwise.
void require_same_parent(const FiniteGroup& g, const Subgroup& sub);

/// Internal: wraps a member set known to be a subgroup without re-verifying
/// closure. Callers must guarantee closedness.
Subgroup make_subgroup_unchecked(GroupPtr parent, DynBitset members);

namespace detail {

/// Non-owning handle to a group, used for subgroups stored inside that
/// group's own caches (owning handles there would make the group immortal).
/// Anything holding such a subgroup must not outlive the group.
GroupPtr unowned_handle(const FiniteGroup& g);

/// Closure of the given ordinals under products (breadth-first by right
/// multiplication); always contains the identity.
DynBitset closure_set(const FiniteGroup& g, std::span<const Ordinal> gens);

/// Smallest subgroup containing the seed that is invariant under conjugation
/// by the conjugators (pass an ambient subgroup's generating set).
DynBitset normal_closure_set(const FiniteGroup& g, std::span<const Ordinal> seed,
                             std::span<const Ordinal> conjugators);

std::vector<Ordinal> small_generating_set_of(const FiniteGroup& g,
                                             const DynBitset& members);

}  // namespace detail

}  // namespace grp

#endif  // GRP_GROUP_HPP
