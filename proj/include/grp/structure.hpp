#ifndef GRP_STRUCTURE_HPP
#define GRP_STRUCTURE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "grp/group.hpp"

namespace grp {

enum class SeriesKind { derived, lower_central, chief };

/// A descending subgroup series starting at the whole group.
struct SeriesRecord {
  SeriesKind kind = SeriesKind::derived;
  std::vector<Subgroup> terms;
  bool reached_trivial = false;
};

/// Which minimal normal subgroup a chief series picks at each step; the
/// supersolvability verdict is independent of the choice.
enum class ChiefSelection { first, last };

/// Commutator subgroup [a, b] within their common parent.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);

SeriesRecord derived_series(const FiniteGroup& g);
SeriesRecord lower_central_series(const FiniteGroup& g);
SeriesRecord chief_series(const FiniteGroup& g,
                          ChiefSelection selection = ChiefSelection::first);

/// Derived series to fixpoint; solvable iff it reaches the trivial subgroup.
std::pair<bool, SeriesRecord> is_solvable(const FiniteGroup& g);

/// Lower central series reaches trivial; cross-checked internally against
/// "every Sylow subgroup is normal".
bool is_nilpotent(const FiniteGroup& g);
bool is_nilpotent(const Subgroup& h);

/// True iff every chief factor has prime order.
bool is_supersolvable(const FiniteGroup& g,
                      ChiefSelection selection = ChiefSelection::first);

/// The normal p-complement (the normal subgroup of order the p'-part of |g|)
/// or nullopt; unique when it exists.
std::optional<Subgroup> is_p_nilpotent(const FiniteGroup& g, unsigned p);

/// Non-nilpotent, but every maximal subgroup is nilpotent.
bool is_minimal_non_nilpotent(const FiniteGroup& g,
                              std::size_t lattice_cap = FiniteGroup::kDefaultLatticeCap);

/// Largest nilpotent normal subgroup; asserts that it contains every
/// nilpotent normal subgroup.
Subgroup fitting(const FiniteGroup& g);

/// Largest solvable normal subgroup S(g).
Subgroup solvable_radical(const FiniteGroup& g);

/// Subgroup generated by all elements of order coprime to p; the quotient by
/// it is a p-group (asserted).
Subgroup o_upper_p(const FiniteGroup& g, unsigned p);

/// Thompson subgroup J(P): join of the abelian subgroups of P of maximal
/// order. P must be a p-group.
Subgroup thompson_subgroup(const Subgroup& p_sub,
                           std::size_t lattice_cap = FiniteGroup::kDefaultLatticeCap);

/// Z(J(P)).
Subgroup z_j(const Subgroup& p_sub,
             std::size_t lattice_cap = FiniteGroup::kDefaultLatticeCap);

/// Some normal complement of the subgroup (normal l with n*l = g and
/// trivial intersection), the canonically first one, or nullopt.
std::optional<Subgroup> normal_complement(const FiniteGroup& g, const Subgroup& n);

/// Nontrivial normal subgroups minimal under inclusion, canonical order.
std::vector<Subgroup> minimal_normal_subgroups_direct(const FiniteGroup& g);

bool is_prime_number(unsigned n);

/// Largest power of p dividing n.
std::size_t p_part(std::size_t n, unsigned p);

}  // namespace grp

#endif  // GRP_STRUCTURE_HPP
