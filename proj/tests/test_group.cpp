#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "grp/errors.hpp"
#include "grp/group.hpp"

using namespace grp;

namespace {

GroupPtr from_cycles(std::initializer_list<const char*> gens, unsigned degree,
                     std::string name = "") {
  std::vector<Perm> perms;
  for (const char* text : gens) perms.push_back(parse_cycles(text, degree));
  return FiniteGroup::from_generators(std::move(perms), degree,
                                      FiniteGroup::kDefaultOrderCap, std::move(name));
}

// Independent closure oracle: repeated multiply-until-fixpoint over a plain
// element set, no BFS bookkeeping shared with the implementation.
std::set<std::vector<Point>> closure_oracle(const std::vector<Perm>& gens,
                                            unsigned degree) {
  std::set<std::vector<Point>> elements{Perm(degree).images()};
  for (const Perm& g : gens) elements.insert(g.images());
  for (;;) {
    std::set<std::vector<Point>> next = elements;
    for (const auto& a : elements)
      for (const auto& b : elements) {
        Perm pa{std::vector<Point>(a)}, pb{std::vector<Point>(b)};
        next.insert((pa * pb).images());
      }
    if (next.size() == elements.size()) return elements;
    elements.swap(next);
  }
}

}  // namespace

TEST_CASE("closure from generators matches the fixpoint oracle") {
  auto s3 = from_cycles({"(1 2)", "(1 2 3)"}, 3, "S3");
  CHECK(s3->order() == 6);

  auto trivial = FiniteGroup::from_generators({}, 4);
  CHECK(trivial->order() == 1);
  CHECK(trivial->degree() == 4);

  auto a5 = from_cycles({"(1 2 3 4 5)", "(1 2 3)"}, 5, "A5");
  CHECK(a5->order() == 60);

  auto oracle = closure_oracle(a5->generators(), 5);
  CHECK(oracle.size() == 60);
  std::set<std::vector<Point>> ours;
  for (const Perm& e : a5->elements()) ours.insert(e.images());
  CHECK(ours == oracle);
}

TEST_CASE("construction is deterministic") {
  auto first = from_cycles({"(1 2 3 4)", "(1 3)"}, 4);
  auto second = from_cycles({"(1 2 3 4)", "(1 3)"}, 4);
  REQUIRE(first->order() == second->order());
  for (std::size_t i = 0; i < first->order(); ++i)
    CHECK(first->element(static_cast<Ordinal>(i)) ==
          second->element(static_cast<Ordinal>(i)));
}

TEST_CASE("construction errors") {
  std::vector<Perm> mixed{parse_cycles("(1 2)", 2)};
  CHECK_THROWS_AS(FiniteGroup::from_generators(std::move(mixed), 3), DegreeMismatch);
  std::vector<Perm> a5gens{parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)};
  CHECK_THROWS_AS(FiniteGroup::from_generators(std::move(a5gens), 5, 30),
                  OrderCapExceeded);
}

TEST_CASE("group invariants hold elementwise") {
  for (auto g : {from_cycles({"(1 2)", "(1 2 3)"}, 3),
                 from_cycles({"(1 2 3 4)", "(1 3)"}, 4),
                 from_cycles({"(1 2 3 4 5)", "(1 2 3)"}, 5)}) {
    for (std::size_t a = 0; a < g->order(); ++a) {
      CHECK(g->product(g->inverse(static_cast<Ordinal>(a)), static_cast<Ordinal>(a)) ==
            FiniteGroup::kIdentity);
      for (std::size_t b = 0; b < g->order(); ++b) {
        Perm direct = g->element(static_cast<Ordinal>(a)) * g->element(static_cast<Ordinal>(b));
        CHECK(g->element(g->product(static_cast<Ordinal>(a), static_cast<Ordinal>(b))) ==
              direct);
      }
    }
  }
}

TEST_CASE("conjugate moves subgroups as expected") {
  auto s4 = from_cycles({"(1 2)", "(1 2 3 4)"}, 4, "S4");
  Subgroup h = Subgroup::generated_by_perms(
      s4, std::vector<Perm>{parse_cycles("(1 2 3)", 4)});

  SUBCASE("identity fixes") {
    CHECK(conjugate(Perm(4), h) == h);
  }
  SUBCASE("three-cycle relabels through the conjugator") {
    Subgroup image = conjugate(parse_cycles("(3 4)", 4), h);
    Subgroup expected = Subgroup::generated_by_perms(
        s4, std::vector<Perm>{parse_cycles("(1 2 4)", 4)});
    CHECK(image == expected);
  }
  SUBCASE("normal subgroups are fixed by every conjugator") {
    Subgroup v4 = Subgroup::generated_by_perms(
        s4, std::vector<Perm>{parse_cycles("(1 2)(3 4)", 4),
                              parse_cycles("(1 3)(2 4)", 4)});
    REQUIRE(v4.is_normal());
    for (std::size_t x = 0; x < s4->order(); ++x)
      CHECK(conjugate_by_ordinal(static_cast<Ordinal>(x), v4) == v4);
  }
  SUBCASE("foreign conjugators are rejected") {
    CHECK_THROWS_AS(conjugate(parse_cycles("(1 2 3 4 5)", 5), h), Error);
  }
  SUBCASE("double conjugation is the identity") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
      auto g_ord = static_cast<Ordinal>(rng() % s4->order());
      Subgroup once = conjugate_by_ordinal(g_ord, h);
      Subgroup back = conjugate_by_ordinal(s4->inverse(g_ord), once);
      CHECK(back == h);
    }
  }
}

TEST_CASE("centralizer and normalizer") {
  auto s4 = from_cycles({"(1 2)", "(1 2 3 4)"}, 4, "S4");
  Subgroup c3 = Subgroup::generated_by_perms(
      s4, std::vector<Perm>{parse_cycles("(1 2 3)", 4)});
  CHECK(normalizer(*s4, c3).order() == 6);
  CHECK(centralizer(*s4, s4->trivial_subgroup()).order() == 24);

  auto a5 = from_cycles({"(1 2 3 4 5)", "(1 2 3)"}, 5, "A5");
  Subgroup v4 = Subgroup::generated_by_perms(
      a5, std::vector<Perm>{parse_cycles("(1 2)(3 4)", 5),
                            parse_cycles("(1 3)(2 4)", 5)});
  CHECK(normalizer(*a5, v4).order() == 12);
}

TEST_CASE("center") {
  auto d8 = from_cycles({"(1 2 3 4)", "(1 3)"}, 4, "D8");
  CHECK(center(*d8).order() == 2);

  auto c6 = from_cycles({"(1 2 3 4 5 6)"}, 6, "C6");
  CHECK(center(*c6).order() == 6);

  auto s4 = from_cycles({"(1 2)", "(1 2 3 4)"}, 4, "S4");
  CHECK(center(*s4).order() == 1);
}

TEST_CASE("quotient by a normal subgroup") {
  auto s4 = from_cycles({"(1 2)", "(1 2 3 4)"}, 4, "S4");
  auto s3 = from_cycles({"(1 2)", "(1 2 3)"}, 3, "S3");
  Subgroup v4 = Subgroup::generated_by_perms(
      s4, std::vector<Perm>{parse_cycles("(1 2)(3 4)", 4),
                            parse_cycles("(1 3)(2 4)", 4)});

  const QuotientResult& quo = quotient(*s4, v4);
  CHECK(quo.group->order() == 6);
  CHECK(are_isomorphic(*quo.group, *s3).has_value());
  CHECK(quo.projection.kernel() == v4.members());
  CHECK(quo.group->order() * v4.order() == s4->order());

  SUBCASE("quotient by the whole group is trivial") {
    CHECK(quotient(*s4, s4->full_subgroup()).group->order() == 1);
  }
  SUBCASE("quotient by the trivial subgroup is the regular image") {
    const QuotientResult& regular = quotient(*s3, s3->trivial_subgroup());
    CHECK(regular.group->order() == 6);
    CHECK(regular.group->degree() == 6);
    CHECK(are_isomorphic(*regular.group, *s3).has_value());
  }
  SUBCASE("non-normal subgroups are rejected") {
    Subgroup c2 = Subgroup::generated_by_perms(
        s4, std::vector<Perm>{parse_cycles("(1 2)", 4)});
    CHECK_THROWS_AS(quotient(*s4, c2), NotNormal);
  }
}

TEST_CASE("direct products") {
  auto c2 = from_cycles({"(1 2)"}, 2, "C2");
  auto c3 = from_cycles({"(1 2 3)"}, 3, "C3");
  auto prod = direct_product(*c2, *c3);
  CHECK(prod->order() == 6);
  CHECK(prod->is_abelian());

  auto a5 = from_cycles({"(1 2 3 4 5)", "(1 2 3)"}, 5, "A5");
  auto big = direct_product(*a5, *c2);
  CHECK(big->order() == 120);

  auto trivial = FiniteGroup::from_generators({}, 1);
  auto same = direct_product(*a5, *trivial);
  CHECK(are_isomorphic(*same, *a5).has_value());
}

TEST_CASE("isomorphism testing") {
  auto a5 = from_cycles({"(1 2 3 4 5)", "(1 2 3)"}, 5, "A5");
  // Moebius generators of L2(5) on 6 points: z -> z + 1 and z -> -1/z.
  auto l2_5 = from_cycles({"(1 2 3 4 5)", "(1 6)(2 5)"}, 6, "L2_5");
  REQUIRE(l2_5->order() == 60);

  SUBCASE("L2(5) is A5") {
    auto witness = are_isomorphic(*l2_5, *a5);
    REQUIRE(witness.has_value());
    CHECK(witness->is_bijective());
  }
  SUBCASE("S4 and A4 x C2 have order 24 but are not isomorphic") {
    auto s4 = from_cycles({"(1 2)", "(1 2 3 4)"}, 4, "S4");
    auto a4 = from_cycles({"(1 2 3)", "(2 3 4)"}, 4, "A4");
    auto c2 = from_cycles({"(1 2)"}, 2, "C2");
    auto a4xc2 = direct_product(*a4, *c2);
    REQUIRE(a4xc2->order() == 24);
    CHECK(!are_isomorphic(*s4, *a4xc2).has_value());
  }
  SUBCASE("reflexive and symmetric on a small sample") {
    std::vector<GroupPtr> sample{
        a5, from_cycles({"(1 2)", "(1 2 3 4)"}, 4, "S4"),
        from_cycles({"(1 2 3 4)", "(1 3)"}, 4, "D8"),
        from_cycles({"(1 2 3 4 5 6)"}, 6, "C6")};
    for (const auto& g : sample) {
      CHECK(are_isomorphic(*g, *g).has_value());
      for (const auto& h : sample)
        CHECK(are_isomorphic(*g, *h).has_value() == are_isomorphic(*h, *g).has_value());
    }
  }
}

TEST_CASE("subgroup verification catches bad member sets") {
  auto s4 = from_cycles({"(1 2)", "(1 2 3 4)"}, 4, "S4");
  DynBitset bad(s4->order());
  bad.set(FiniteGroup::kIdentity);
  bad.set(s4->ordinal_of(parse_cycles("(1 2 3)", 4)));
  CHECK_THROWS(Subgroup::from_members(s4, bad));  // not closed

  DynBitset good(s4->order());
  good.set(FiniteGroup::kIdentity);
  good.set(s4->ordinal_of(parse_cycles("(1 2 3)", 4)));
  good.set(s4->ordinal_of(parse_cycles("(1 3 2)", 4)));
  CHECK(Subgroup::from_members(s4, good).order() == 3);
}

TEST_CASE("promotion re-roots a subgroup on the same points") {
  auto s4 = from_cycles({"(1 2)", "(1 2 3 4)"}, 4, "S4");
  Subgroup a4 = Subgroup::generated_by_perms(
      s4, std::vector<Perm>{parse_cycles("(1 2 3)", 4), parse_cycles("(2 3 4)", 4)});
  const PromotedGroup& promo = s4->promoted(a4);
  CHECK(promo.group->order() == 12);
  CHECK(promo.group->degree() == 4);
  for (std::size_t i = 0; i < promo.group->order(); ++i)
    CHECK(s4->element(promo.to_parent[i]) == promo.group->element(static_cast<Ordinal>(i)));
  // Mapping a promoted subgroup back lands inside the original subgroup.
  Subgroup back = map_to_parent(s4, promo, promo.group->full_subgroup());
  CHECK(back == a4);
}
