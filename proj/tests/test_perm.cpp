#include <doctest.h>

#include <algorithm>
#include <random>

#include "grp/errors.hpp"
#include "grp/perm.hpp"

using namespace grp;

namespace {

Perm random_perm(std::mt19937& rng, unsigned degree) {
  std::vector<Point> images(degree);
  for (unsigned i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return Perm(std::move(images));
}

}  // namespace

TEST_CASE("cycle notation parses and formats") {
  Perm p = parse_cycles("(1 2 3)(4 5)", 6);
  CHECK(p.degree() == 6);
  CHECK(p[0] == 1);
  CHECK(p[1] == 2);
  CHECK(p[2] == 0);
  CHECK(p[3] == 4);
  CHECK(p[4] == 3);
  CHECK(p[5] == 5);
  CHECK(format_cycles(p) == "(1 2 3)(4 5)");

  CHECK(parse_cycles("()", 4).is_identity());
  CHECK(format_cycles(Perm(4)) == "()");

  // Degree inferred from the largest point.
  CHECK(parse_cycles("(2 7)").degree() == 7);
}

TEST_CASE("cycle notation rejects malformed input") {
  CHECK_THROWS_AS(parse_cycles("(1 2", 4), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 4), ParseError);  // repeated point
  CHECK_THROWS_AS(parse_cycles("(0 1)", 4), ParseError);       // 1-based points
  CHECK_THROWS_AS(parse_cycles("(1 5)", 4), ParseError);       // above the degree
  CHECK_THROWS_AS(parse_cycles("1 2 3", 4), ParseError);
  CHECK_THROWS_AS(parse_cycles("", 4), ParseError);
}

TEST_CASE("parse_perm_list splits on commas and pads degrees") {
  auto perms = parse_perm_list("(1 2 3 4 5), (1 2 3)");
  REQUIRE(perms.size() == 2);
  CHECK(perms[0].degree() == 5);
  CHECK(perms[1].degree() == 5);
}

TEST_CASE("composition applies left then right") {
  Perm a = parse_cycles("(1 2)", 3);
  Perm b = parse_cycles("(2 3)", 3);
  // 1 -> a -> 2 -> b -> 3
  CHECK((a * b)[0] == 2);
  CHECK(format_cycles(a * b) == "(1 3 2)");
}

TEST_CASE("round trip, inverse and order properties") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    unsigned degree = 1 + rng() % 12;
    Perm p = random_perm(rng, degree);
    CHECK(parse_cycles(format_cycles(p), degree) == p);
    CHECK((p * p.inverse()).is_identity());

    Perm q = random_perm(rng, degree);
    Perm r = random_perm(rng, degree);
    CHECK((p * q) * r == p * (q * r));

    // order is the least positive exponent reaching the identity
    Perm power = p;
    unsigned steps = 1;
    while (!power.is_identity()) {
      power = power * p;
      ++steps;
    }
    CHECK(steps == p.order());
  }
}

TEST_CASE("image sequences must be bijections") {
  CHECK_THROWS(Perm(std::vector<Point>{0, 0, 1}));
  CHECK_THROWS(Perm(std::vector<Point>{3, 1, 2}));
}
