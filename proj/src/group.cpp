#include "grp/group.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>

#include "grp/errors.hpp"
#include "grp/lattice.hpp"  // completes SubgroupLattice for the lazy cache

namespace grp {

namespace {

constexpr std::size_t kMultTableMaxOrder = 4096;

std::string ordinal_set_text(const FiniteGroup& g, const std::vector<Ordinal>& gens) {
  if (gens.empty()) return "<()>";
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += format_cycles(g.element(gens[i]));
  }
  out += ">";
  return out;
}

}  // namespace

namespace detail {

GroupPtr unowned_handle(const FiniteGroup& g) {
  return GroupPtr(GroupPtr{}, &g);  // aliasing constructor, no ownership
}

DynBitset closure_set(const FiniteGroup& g, std::span<const Ordinal> gens) {
  DynBitset members(g.order());
  members.set(FiniteGroup::kIdentity);
  std::vector<Ordinal> stack{FiniteGroup::kIdentity};
  for (Ordinal gen : gens) {
    if (!members.test(gen)) {
      members.set(gen);
      stack.push_back(gen);
    }
  }
  while (!stack.empty()) {
    Ordinal x = stack.back();
    stack.pop_back();
    for (Ordinal gen : gens) {
      Ordinal y = g.product(x, gen);
      if (!members.test(y)) {
        members.set(y);
        stack.push_back(y);
      }
    }
  }
  return members;
}

DynBitset normal_closure_set(const FiniteGroup& g, std::span<const Ordinal> seed,
                             std::span<const Ordinal> conjugators) {
  std::vector<Ordinal> gens(seed.begin(), seed.end());
  DynBitset members = closure_set(g, gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Ordinal c : conjugators) {
      Ordinal y = g.conjugate_element(gens[i], c);
      if (!members.test(y)) {
        gens.push_back(y);
        members = closure_set(g, gens);
      }
    }
  }
  return members;
}

std::vector<Ordinal> small_generating_set_of(const FiniteGroup& g,
                                             const DynBitset& members) {
  std::vector<Ordinal> gens;
  DynBitset current(g.order());
  current.set(FiniteGroup::kIdentity);
  if (current == members) return gens;
  std::size_t want = members.count();
  bool done = false;
  members.for_each([&](std::size_t m) {
    if (done || current.test(m)) return;
    gens.push_back(static_cast<Ordinal>(m));
    current = closure_set(g, gens);
    if (current.count() == want) done = true;
  });
  assert(current == members);
  return gens;
}

}  // namespace detail

Subgroup make_subgroup_unchecked(GroupPtr parent, DynBitset members) {
  return Subgroup::unchecked(std::move(parent), std::move(members));
}

// --- FiniteGroup ---

GroupPtr FiniteGroup::from_generators(std::vector<Perm> generators, unsigned degree,
                                      std::size_t order_cap, std::string name) {
  return std::make_shared<FiniteGroup>(Private{}, std::move(generators), degree,
                                       order_cap, std::move(name));
}

FiniteGroup::FiniteGroup(Private, std::vector<Perm> generators, unsigned degree,
                         std::size_t order_cap, std::string name)
    : degree_(degree), name_(std::move(name)), generators_(std::move(generators)) {
  if (degree_ < 1 || degree_ > kDegreeCap)
    throw DegreeCapExceeded("degree " + std::to_string(degree_) +
                            " outside [1, " + std::to_string(kDegreeCap) + "]");
  if (order_cap < 1) throw OrderCapExceeded("order cap must be at least 1");
  order_cap = std::min(order_cap, kMaxOrder);
  for (const Perm& gen : generators_)
    if (gen.degree() != degree_)
      throw DegreeMismatch("generator " + format_cycles(gen) + " has degree " +
                           std::to_string(gen.degree()) + ", expected " +
                           std::to_string(degree_));

  // Breadth-first closure; each new level is sorted lexicographically by
  // image sequence so the enumeration is reproducible.
  elements_.emplace_back(degree_);
  index_.emplace(elements_.front(), kIdentity);
  std::vector<Ordinal> frontier{kIdentity};
  while (!frontier.empty()) {
    std::set<Perm> fresh;
    for (Ordinal x : frontier)
      for (const Perm& gen : generators_) {
        Perm p = elements_[x] * gen;
        if (!index_.count(p)) fresh.insert(std::move(p));
      }
    frontier.clear();
    for (const Perm& p : fresh) {
      if (elements_.size() >= order_cap)
        throw OrderCapExceeded("group closure exceeds order cap " +
                               std::to_string(order_cap));
      Ordinal o = static_cast<Ordinal>(elements_.size());
      elements_.push_back(p);
      index_.emplace(p, o);
      frontier.push_back(o);
    }
  }

  gen_ordinals_.reserve(generators_.size());
  for (const Perm& gen : generators_) gen_ordinals_.push_back(index_.at(gen));

  // Elementwise invariant scan: identity present by construction; every
  // inverse must be a member, and membership must be closed under products
  // with the generators (which is closure for a finite set).
  for (const Perm& e : elements_)
    if (!index_.count(e.inverse()))
      throw Error("closure invariant violated: missing inverse of " + format_cycles(e));
}

Ordinal FiniteGroup::ordinal_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw ForeignElement(format_cycles(p) + " is not an element of " +
                         (name_.empty() ? "the group" : name_));
  return it->second;
}

std::optional<Ordinal> FiniteGroup::find(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::uint16_t>* FiniteGroup::mult_table_or_null() const {
  if (order() > kMultTableMaxOrder) return nullptr;
  return &mult_table_.get([this] {
    std::size_t n = order();
    std::vector<std::uint16_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table[a * n + b] = index_.at(elements_[a] * elements_[b]);
    return table;
  });
}

Ordinal FiniteGroup::product(Ordinal a, Ordinal b) const {
  if (const auto* table = mult_table_or_null())
    return static_cast<Ordinal>((*table)[static_cast<std::size_t>(a) * order() + b]);
  return index_.at(elements_[a] * elements_[b]);
}

Ordinal FiniteGroup::inverse(Ordinal a) const {
  const auto& table = inverse_table_.get([this] {
    std::vector<Ordinal> inv(order());
    for (std::size_t i = 0; i < order(); ++i)
      inv[i] = index_.at(elements_[i].inverse());
    return inv;
  });
  return table[a];
}

Ordinal FiniteGroup::conjugate_element(Ordinal x, Ordinal g) const {
  return product(product(inverse(g), x), g);
}

const std::vector<unsigned>& FiniteGroup::element_orders() const {
  return element_orders_.get([this] {
    std::vector<unsigned> orders(order());
    for (std::size_t i = 0; i < order(); ++i) orders[i] = elements_[i].order();
    return orders;
  });
}

unsigned FiniteGroup::element_order(Ordinal a) const { return element_orders()[a]; }

Subgroup FiniteGroup::trivial_subgroup() const {
  DynBitset members(order());
  members.set(kIdentity);
  return Subgroup::unchecked(shared_from_this(), std::move(members));
}

Subgroup FiniteGroup::full_subgroup() const {
  DynBitset members(order());
  for (std::size_t i = 0; i < order(); ++i) members.set(i);
  return Subgroup::unchecked(shared_from_this(), std::move(members));
}

bool FiniteGroup::is_abelian() const {
  for (Ordinal a : gen_ordinals_)
    for (Ordinal b : gen_ordinals_)
      if (product(a, b) != product(b, a)) return false;
  return true;
}

const std::vector<Subgroup>& FiniteGroup::normal_subgroups() const {
  return normals_.get([this] {
    GroupPtr self = detail::unowned_handle(*this);  // cache-resident subgroups
    // Seeds: normal closures of the cyclic subgroups. Every normal subgroup
    // is a join of such closures, and joins of normal subgroups are normal,
    // so the pairwise-join fixpoint is exactly the set of normal subgroups.
    std::vector<DynBitset> sets;
    std::vector<std::vector<Ordinal>> gens;
    std::unordered_map<DynBitset, std::size_t, DynBitsetHash> seen;
    auto add = [&](DynBitset set) {
      if (seen.emplace(set, sets.size()).second) {
        gens.push_back(detail::small_generating_set_of(*this, set));
        sets.push_back(std::move(set));
      }
    };
    for (std::size_t x = 0; x < order(); ++x) {
      Ordinal seed[1] = {static_cast<Ordinal>(x)};
      add(detail::normal_closure_set(*this, seed, gen_ordinals_));
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (sets[i].is_subset_of(sets[j]) || sets[j].is_subset_of(sets[i])) continue;
        std::vector<Ordinal> joint = gens[i];
        joint.insert(joint.end(), gens[j].begin(), gens[j].end());
        add(detail::closure_set(*this, joint));
      }
    }
    std::vector<Subgroup> result;
    result.reserve(sets.size());
    for (auto& set : sets)
      result.push_back(Subgroup::unchecked(self, std::move(set)));
    std::sort(result.begin(), result.end(), canonical_less);
    return result;
  });
}

const PromotedGroup& FiniteGroup::promoted(const Subgroup& sub) const {
  require_same_parent(*this, sub);
  std::lock_guard<std::mutex> lock(promo_mu_);
  auto it = promotions_.find(sub.members());
  if (it != promotions_.end()) return *it->second;

  auto promo = std::make_unique<PromotedGroup>();
  promo->group = FiniteGroup::from_generators(sub.generator_perms(), degree_,
                                              std::max<std::size_t>(sub.order(), 1));
  if (promo->group->order() != sub.order())
    throw Error("re-rooted subgroup closure mismatch");
  promo->to_parent.reserve(sub.order());
  for (const Perm& p : promo->group->elements())
    promo->to_parent.push_back(index_.at(p));
  return *promotions_.emplace(sub.members(), std::move(promo)).first->second;
}

const QuotientResult& FiniteGroup::quotient_by(const Subgroup& normal_sub) const {
  require_same_parent(*this, normal_sub);
  if (!normal_sub.is_normal())
    throw NotNormal(normal_sub.describe() + " is not normal in " +
                    (name_.empty() ? "the group" : name_));
  std::size_t idx = order() / normal_sub.order();
  if (idx > kDegreeCap)
    throw IndexCapExceeded("quotient index " + std::to_string(idx) +
                           " exceeds the degree cap " + std::to_string(kDegreeCap));

  std::lock_guard<std::mutex> lock(quot_mu_);
  auto it = quotients_.find(normal_sub.members());
  if (it != quotients_.end()) return *it->second;

  // Coset ids appear in ascending order of their smallest member, so the
  // identity coset gets id 0 and the labelling is canonical.
  std::vector<Ordinal> members = normal_sub.member_list();
  constexpr std::uint32_t kUnassigned = 0xffffffff;
  std::vector<std::uint32_t> coset_of(order(), kUnassigned);
  std::vector<Ordinal> rep;
  for (std::size_t x = 0; x < order(); ++x) {
    if (coset_of[x] != kUnassigned) continue;
    auto id = static_cast<std::uint32_t>(rep.size());
    rep.push_back(static_cast<Ordinal>(x));
    for (Ordinal n : members) coset_of[product(static_cast<Ordinal>(x), n)] = id;
  }
  assert(rep.size() == idx);

  auto induced = [&](Ordinal g) {
    std::vector<Point> images(idx);
    for (std::size_t c = 0; c < idx; ++c)
      images[c] = static_cast<Point>(coset_of[product(rep[c], g)]);
    return Perm(std::move(images));
  };

  std::vector<Perm> qgens;
  qgens.reserve(gen_ordinals_.size());
  for (Ordinal g : gen_ordinals_) qgens.push_back(induced(g));
  auto result = std::make_unique<QuotientResult>();
  result->group = FiniteGroup::from_generators(std::move(qgens),
                                               static_cast<unsigned>(idx), idx);
  if (result->group->order() != idx)
    throw Error("quotient closure mismatch: expected order " + std::to_string(idx));

  std::vector<Ordinal> element_image(order());
  for (std::size_t x = 0; x < order(); ++x)
    element_image[x] = result->group->ordinal_of(induced(static_cast<Ordinal>(x)));
  // The cached projection must not own its own source group.
  result->projection =
      GroupMap::verified(detail::unowned_handle(*this), result->group,
                         MapKind::quotient_projection, std::move(element_image));
  if (!(result->projection.kernel() == normal_sub.members()))
    throw Error("quotient projection kernel differs from the normal subgroup");
  return *quotients_.emplace(normal_sub.members(), std::move(result)).first->second;
}

// FiniteGroup::lattice is defined with the lattice machinery in lattice.cpp.

// --- Subgroup ---

std::size_t Subgroup::parent_order() const { return parent_->order(); }

Subgroup Subgroup::from_members(GroupPtr parent, DynBitset members) {
  if (members.size() != parent->order())
    throw ForeignSubgroup("member set size does not match the parent order");
  if (!members.test(FiniteGroup::kIdentity))
    throw Error("subgroup member set lacks the identity");
  Subgroup sub(std::move(parent), std::move(members));
  const auto& g = *sub.parent_;
  std::vector<Ordinal> list = sub.member_list();
  for (Ordinal a : list) {
    if (!sub.members_.test(g.inverse(a)))
      throw Error("member set not closed under inverse");
    for (Ordinal b : list)
      if (!sub.members_.test(g.product(a, b)))
        throw Error("member set not closed under product");
  }
  if (g.order() % list.size() != 0)
    throw Error("subgroup order does not divide the group order");
  return sub;
}

Subgroup Subgroup::generated_by(GroupPtr parent, std::span<const Ordinal> gens) {
  DynBitset members = detail::closure_set(*parent, gens);
  return Subgroup(std::move(parent), std::move(members));
}

Subgroup Subgroup::generated_by_perms(GroupPtr parent, std::span<const Perm> gens) {
  std::vector<Ordinal> ordinals;
  ordinals.reserve(gens.size());
  for (const Perm& p : gens) ordinals.push_back(parent->ordinal_of(p));
  return generated_by(std::move(parent), ordinals);
}

std::vector<Ordinal> Subgroup::member_list() const {
  std::vector<Ordinal> list;
  list.reserve(order());
  members_.for_each([&](std::size_t i) { list.push_back(static_cast<Ordinal>(i)); });
  return list;
}

std::vector<Ordinal> Subgroup::small_generating_set() const {
  return detail::small_generating_set_of(*parent_, members_);
}

std::vector<Perm> Subgroup::generator_perms() const {
  std::vector<Perm> out;
  for (Ordinal o : small_generating_set()) out.push_back(parent_->element(o));
  return out;
}

bool Subgroup::is_normal() const {
  auto gens = small_generating_set();
  for (Ordinal g : parent_->generator_ordinals())
    for (Ordinal h : gens)
      if (!members_.test(parent_->conjugate_element(h, g))) return false;
  return true;
}

bool Subgroup::is_abelian() const {
  auto gens = small_generating_set();
  for (Ordinal a : gens)
    for (Ordinal b : gens)
      if (parent_->product(a, b) != parent_->product(b, a)) return false;
  return true;
}

bool Subgroup::is_prime_power_order() const {
  std::size_t n = order();
  if (n < 2) return false;
  std::size_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

Subgroup Subgroup::meet(const Subgroup& other) const {
  assert(parent_ == other.parent_);
  return Subgroup(parent_, members_ & other.members_);
}

Subgroup Subgroup::join(const Subgroup& other) const {
  assert(parent_ == other.parent_);
  std::vector<Ordinal> gens = small_generating_set();
  auto extra = other.small_generating_set();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return generated_by(parent_, gens);
}

std::string Subgroup::describe() const {
  std::ostringstream os;
  os << ordinal_set_text(*parent_, small_generating_set()) << " (order " << order()
     << ")";
  return os.str();
}

bool canonical_less(const Subgroup& a, const Subgroup& b) {
  std::size_t oa = a.order(), ob = b.order();
  if (oa != ob) return oa < ob;
  return a.members().lex_less(b.members());
}

// --- GroupMap ---

GroupMap GroupMap::verified(GroupPtr source, GroupPtr target, MapKind kind,
                            std::vector<Ordinal> element_image) {
  if (element_image.size() != source->order())
    throw Error("element map size differs from the source order");
  GroupMap map;
  map.source_ = std::move(source);
  map.target_ = std::move(target);
  map.kind_ = kind;
  map.element_image_ = std::move(element_image);

  const FiniteGroup& s = *map.source_;
  const FiniteGroup& t = *map.target_;
  std::size_t n = s.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Ordinal lhs = map.element_image_[s.product(static_cast<Ordinal>(a),
                                                 static_cast<Ordinal>(b))];
      Ordinal rhs = t.product(map.element_image_[a], map.element_image_[b]);
      if (lhs != rhs) throw Error("map does not respect products");
    }

  DynBitset image(t.order());
  for (Ordinal img : map.element_image_) image.set(img);
  if (kind == MapKind::isomorphism) {
    if (s.order() != t.order() || image.count() != t.order())
      throw Error("isomorphism witness is not a bijection");
  }
  if (kind == MapKind::quotient_projection && image.count() != t.order())
    throw Error("quotient projection is not surjective");

  map.image_of_generator_.reserve(s.generators().size());
  for (Ordinal g : s.generator_ordinals())
    map.image_of_generator_.push_back(t.element(map.element_image_[g]));
  return map;
}

Perm GroupMap::apply(const Perm& p) const {
  return target_->element(element_image_[source_->ordinal_of(p)]);
}

DynBitset GroupMap::preimage(const DynBitset& target_set) const {
  DynBitset out(source_->order());
  for (std::size_t x = 0; x < element_image_.size(); ++x)
    if (target_set.test(element_image_[x])) out.set(x);
  return out;
}

DynBitset GroupMap::kernel() const {
  DynBitset id_only(target_->order());
  id_only.set(FiniteGroup::kIdentity);
  return preimage(id_only);
}

bool GroupMap::is_bijective() const {
  if (source_->order() != target_->order()) return false;
  DynBitset image(target_->order());
  for (Ordinal img : element_image_) image.set(img);
  return image.count() == target_->order();
}

// --- perm-core operations ---

void require_same_parent(const FiniteGroup& g, const Subgroup& sub) {
  if (sub.parent().get() != &g)
    throw ForeignSubgroup("subgroup belongs to a different group");
}

Subgroup conjugate_by_ordinal(Ordinal g, const Subgroup& h) {
  const FiniteGroup& parent = *h.parent();
  DynBitset members(parent.order());
  h.members().for_each([&](std::size_t m) {
    members.set(parent.conjugate_element(static_cast<Ordinal>(m), g));
  });
  assert(members.count() == h.order());
  return make_subgroup_unchecked(h.parent(), std::move(members));
}

Subgroup conjugate(const Perm& g, const Subgroup& h) {
  return conjugate_by_ordinal(h.parent()->ordinal_of(g), h);
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& s) {
  require_same_parent(g, s);
  auto gens = s.small_generating_set();
  DynBitset members(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (Ordinal h : gens)
      if (g.product(static_cast<Ordinal>(x), h) != g.product(h, static_cast<Ordinal>(x))) {
        commutes = false;
        break;
      }
    if (commutes) members.set(x);
  }
  return make_subgroup_unchecked(g.shared_from_this(), std::move(members));
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  require_same_parent(g, h);
  auto gens = h.small_generating_set();
  DynBitset members(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool fixes = true;
    for (Ordinal m : gens)
      if (!h.contains(g.conjugate_element(m, static_cast<Ordinal>(x)))) {
        fixes = false;
        break;
      }
    if (fixes) members.set(x);
  }
  return make_subgroup_unchecked(g.shared_from_this(), std::move(members));
}

Subgroup center(const FiniteGroup& g) {
  return centralizer(g, g.full_subgroup());
}

const QuotientResult& quotient(const FiniteGroup& g, const Subgroup& normal_sub) {
  return g.quotient_by(normal_sub);
}

GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string name) {
  unsigned degree = a.degree() + b.degree();
  if (degree > FiniteGroup::kDegreeCap)
    throw DegreeCapExceeded("combined degree " + std::to_string(degree) +
                            " exceeds the cap");
  std::vector<Perm> gens;
  for (const Perm& g : a.generators()) {
    std::vector<Point> images(degree);
    for (unsigned i = 0; i < a.degree(); ++i) images[i] = g[i];
    for (unsigned i = a.degree(); i < degree; ++i) images[i] = static_cast<Point>(i);
    gens.emplace_back(std::move(images));
  }
  for (const Perm& g : b.generators()) {
    std::vector<Point> images(degree);
    for (unsigned i = 0; i < a.degree(); ++i) images[i] = static_cast<Point>(i);
    for (unsigned i = 0; i < b.degree(); ++i)
      images[a.degree() + i] = static_cast<Point>(a.degree() + g[i]);
    gens.emplace_back(std::move(images));
  }
  std::size_t expected = a.order() * b.order();
  if (name.empty() && !a.name().empty() && !b.name().empty())
    name = a.name() + "x" + b.name();
  GroupPtr prod = FiniteGroup::from_generators(std::move(gens), degree,
                                               std::max<std::size_t>(expected, 1),
                                               std::move(name));
  if (prod->order() != expected)
    throw Error("direct product order mismatch");
  return prod;
}

Subgroup map_to_parent(const GroupPtr& parent, const PromotedGroup& promo,
                       const Subgroup& sub_of_promoted) {
  DynBitset members(parent->order());
  sub_of_promoted.members().for_each(
      [&](std::size_t m) { members.set(promo.to_parent[m]); });
  return make_subgroup_unchecked(parent, std::move(members));
}

Subgroup restrict_to_promoted(const PromotedGroup& promo, const Subgroup& parent_sub) {
  const FiniteGroup& child = *promo.group;
  DynBitset members(child.order());
  const FiniteGroup& parent = *parent_sub.parent();
  parent_sub.members().for_each([&](std::size_t m) {
    members.set(child.ordinal_of(parent.element(static_cast<Ordinal>(m))));
  });
  return make_subgroup_unchecked(promo.group, std::move(members));
}

}  // namespace grp
