#include <algorithm>
#include <map>
#include <vector>

#include "grp/errors.hpp"
#include "grp/group.hpp"

namespace grp {

namespace {

// Sorted multiset of element orders; equal for isomorphic groups.
std::map<unsigned, std::size_t> order_profile(const FiniteGroup& g) {
  std::map<unsigned, std::size_t> profile;
  for (unsigned o : g.element_orders()) ++profile[o];
  return profile;
}

std::size_t derived_subgroup_order(const FiniteGroup& g) {
  std::vector<Ordinal> gens;
  DynBitset seen(g.order());
  std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Ordinal comm = g.product(
          g.product(g.inverse(static_cast<Ordinal>(a)), g.inverse(static_cast<Ordinal>(b))),
          g.product(static_cast<Ordinal>(a), static_cast<Ordinal>(b)));
      if (!seen.test(comm)) {
        seen.set(comm);
        gens.push_back(comm);
      }
    }
  return detail::closure_set(g, gens).count();
}

// Lexicographically first generating sequence of minimal length. Tuples are
// scanned in ascending ordinal order per slot; length grows until one
// generates.
std::vector<Ordinal> minimal_generating_sequence(const FiniteGroup& g) {
  std::size_t n = g.order();
  if (n == 1) return {};
  std::vector<Ordinal> tuple;
  for (std::size_t len = 1; len <= 10; ++len) {
    tuple.assign(len, 0);
    // Depth-first scan over ascending tuples.
    std::vector<std::size_t> cursor(len, 1);
    std::size_t depth = 0;
    while (true) {
      if (cursor[depth] >= n) {
        if (depth == 0) break;
        --depth;
        ++cursor[depth];
        continue;
      }
      tuple[depth] = static_cast<Ordinal>(cursor[depth]);
      std::span<const Ordinal> prefix(tuple.data(), depth + 1);
      DynBitset span_set = detail::closure_set(g, prefix);
      if (span_set.count() == n && depth + 1 == len)
        return {tuple.begin(), tuple.begin() + len};
      if (depth + 1 < len) {
        ++depth;
        cursor[depth] = cursor[depth - 1] + 1;
      } else {
        ++cursor[depth];
      }
    }
  }
  throw Error("no generating sequence of length <= 10 found");
}

// Parallel closure walk: defines the image of every element of <src_gens>
// from the candidate generator images and checks consistency on every
// (element, generator) pair, which is the full homomorphism condition.
// Returns false on any mismatch; fills element_image when src_gens generate
// the whole source group.
bool try_extend(const FiniteGroup& s, const FiniteGroup& t,
                std::span<const Ordinal> src_gens, std::span<const Ordinal> img_gens,
                bool full, std::vector<Ordinal>* element_image) {
  constexpr std::uint32_t kUnset = 0xffffffff;
  std::vector<std::uint32_t> image(s.order(), kUnset);
  image[FiniteGroup::kIdentity] = FiniteGroup::kIdentity;
  std::vector<Ordinal> queue{FiniteGroup::kIdentity};
  std::size_t src_count = 1, img_seen = 0;
  DynBitset img_set(t.order());
  img_set.set(FiniteGroup::kIdentity);
  ++img_seen;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Ordinal x = queue[qi];
    for (std::size_t k = 0; k < src_gens.size(); ++k) {
      Ordinal nx = s.product(x, src_gens[k]);
      Ordinal ni = t.product(static_cast<Ordinal>(image[x]), img_gens[k]);
      if (image[nx] == kUnset) {
        image[nx] = ni;
        queue.push_back(nx);
        ++src_count;
        if (!img_set.test(ni)) {
          img_set.set(ni);
          ++img_seen;
        }
      } else if (image[nx] != ni) {
        return false;
      }
    }
  }
  // Injectivity on the generated subgroup: image size must match.
  if (img_seen != src_count) return false;
  if (full) {
    if (src_count != s.order()) return false;
    element_image->resize(s.order());
    for (std::size_t i = 0; i < s.order(); ++i)
      (*element_image)[i] = static_cast<Ordinal>(image[i]);
  }
  return true;
}

bool backtrack(const FiniteGroup& s, const FiniteGroup& t,
               const std::vector<Ordinal>& src_gens,
               const std::vector<std::vector<Ordinal>>& candidates,
               std::vector<Ordinal>& img_gens, std::size_t depth,
               std::vector<Ordinal>* element_image) {
  if (depth == src_gens.size())
    return try_extend(s, t, src_gens, img_gens, /*full=*/true, element_image);
  for (Ordinal cand : candidates[depth]) {
    img_gens[depth] = cand;
    std::span<const Ordinal> src_prefix(src_gens.data(), depth + 1);
    std::span<const Ordinal> img_prefix(img_gens.data(), depth + 1);
    if (!try_extend(s, t, src_prefix, img_prefix, /*full=*/false, nullptr)) continue;
    if (backtrack(s, t, src_gens, candidates, img_gens, depth + 1, element_image))
      return true;
  }
  return false;
}

}  // namespace

std::optional<GroupMap> are_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() == 1) {
    return GroupMap::verified(a.shared_from_this(), b.shared_from_this(),
                              MapKind::isomorphism, {FiniteGroup::kIdentity});
  }
  if (order_profile(a) != order_profile(b)) return std::nullopt;
  if (center(a).order() != center(b).order()) return std::nullopt;
  if (derived_subgroup_order(a) != derived_subgroup_order(b)) return std::nullopt;

  std::vector<Ordinal> src_gens = minimal_generating_sequence(a);
  std::vector<std::vector<Ordinal>> candidates(src_gens.size());
  const auto& orders_b = b.element_orders();
  for (std::size_t k = 0; k < src_gens.size(); ++k) {
    unsigned want = a.element_order(src_gens[k]);
    for (std::size_t x = 0; x < b.order(); ++x)
      if (orders_b[x] == want) candidates[k].push_back(static_cast<Ordinal>(x));
  }

  std::vector<Ordinal> img_gens(src_gens.size());
  std::vector<Ordinal> element_image;
  if (!backtrack(a, b, src_gens, candidates, img_gens, 0, &element_image))
    return std::nullopt;
  return GroupMap::verified(a.shared_from_this(), b.shared_from_this(),
                            MapKind::isomorphism, std::move(element_image));
}

}  // namespace grp
