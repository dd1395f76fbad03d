#include <doctest.h>

#include <random>

#include "grp/corpus.hpp"
#include "grp/lattice.hpp"
#include "grp/nr.hpp"
#include "grp/structure.hpp"

using namespace grp;

namespace {

// Corpus entries within the default lattice cap, built once for the file.
const std::vector<CorpusEntry>& capped_corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for (auto& entry : default_corpus())
      if (entry.group->order() <= FiniteGroup::kDefaultLatticeCap)
        out.push_back(std::move(entry));
    return out;
  }();
  return entries;
}

}  // namespace

TEST_CASE("Sylow counting congruences hold corpus-wide") {
  for (const auto& entry : capped_corpus()) {
    const FiniteGroup& g = *entry.group;
    std::size_t n = g.order();
    for (unsigned p = 2; p <= n; ++p) {
      if (!is_prime_number(p) || n % p != 0) continue;
      auto syl = sylow(g, p);
      INFO(entry.spec.name << " at p = " << p);
      CHECK(syl.size() % p == 1);
      CHECK((n / p_part(n, p)) % syl.size() == 0);
      for (const Subgroup& s : syl) CHECK(s.order() == p_part(n, p));
    }
  }
}

TEST_CASE("solvability matches the small-order facts") {
  GroupPtr a5;
  for (const auto& entry : capped_corpus())
    if (entry.spec.name == "A5") a5 = entry.group;
  REQUIRE(a5);
  for (const auto& entry : capped_corpus()) {
    const FiniteGroup& g = *entry.group;
    INFO(entry.spec.name);
    if (g.order() < 60) CHECK(is_solvable(g).first);
    if (g.order() == 60 && !is_solvable(g).first)
      CHECK(are_isomorphic(g, *a5).has_value());
  }
}

TEST_CASE("lattice normal subgroups agree with the direct enumeration") {
  for (const auto& entry : capped_corpus()) {
    if (entry.group->order() > 128) continue;  // keep the scan quick
    const FiniteGroup& g = *entry.group;
    INFO(entry.spec.name);
    auto via_lattice = normal_subgroups(g);
    const auto& direct = g.normal_subgroups();
    REQUIRE(via_lattice.size() == direct.size());
    for (std::size_t i = 0; i < direct.size(); ++i)
      CHECK(via_lattice[i] == direct[i]);

    auto mins_lattice = minimal_normal_subgroups(g);
    auto mins_direct = minimal_normal_subgroups_direct(g);
    REQUIRE(mins_lattice.size() == mins_direct.size());
    for (std::size_t i = 0; i < mins_direct.size(); ++i)
      CHECK(mins_lattice[i] == mins_direct[i]);
  }
}

TEST_CASE("nilpotent normal subgroups sit inside the Fitting subgroup corpus-wide") {
  for (const auto& entry : capped_corpus()) {
    if (entry.group->order() > 128) continue;
    const FiniteGroup& g = *entry.group;
    Subgroup fit = fitting(g);
    for (const Subgroup& n : g.normal_subgroups())
      if (is_nilpotent(n)) CHECK(n.members().is_subset_of(fit.members()));
  }
}

TEST_CASE("normal closure properties on random corpus subgroups") {
  std::mt19937 rng(424242);
  for (const auto& entry : capped_corpus()) {
    const FiniteGroup& g = *entry.group;
    if (g.order() > 60 || g.order() < 2) continue;
    const auto& lat = g.lattice();
    for (int trial = 0; trial < 8; ++trial) {
      const Subgroup& k = lat.subgroups[rng() % lat.size()];
      Subgroup closure = normal_closure(g, k);
      CHECK(closure.is_normal());
      CHECK(k.members().is_subset_of(closure.members()));
      CHECK(normal_closure(g, closure) == closure);
      auto conj = conjugate_by_ordinal(static_cast<Ordinal>(rng() % g.order()), k);
      CHECK(normal_closure(g, conj) == closure);
    }
  }
}
