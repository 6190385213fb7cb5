#include <doctest.h>

#include <random>

#include "fermat/bundle_geometry.hpp"
#include "oracles.hpp"

using namespace fermat;

namespace {
P3Point pt(Int a, Int b, Int c, Int d) { return normalize<4>({a, b, c, d}); }
}  // namespace

TEST_CASE("Pairing") {
  CHECK(Pairing(1).to_string() == "{0,1}|{2,3}");
  CHECK(Pairing(2).to_string() == "{0,2}|{1,3}");
  CHECK(Pairing(3).to_string() == "{0,3}|{1,2}");
  CHECK_THROWS_AS(Pairing(0), InvalidArgument);
  CHECK_THROWS_AS(Pairing(4), InvalidArgument);
}

TEST_CASE("on_X") {
  CHECK(on_X(pt(1, 1, 1, 1), pt(1, -1, 1, -1)));
  CHECK_FALSE(on_X(pt(1, 1, 1, 1), pt(1, 1, 1, 1)));
  CHECK(on_X(pt(1, 0, 0, 0), pt(0, 1, 2, 3)));
  CHECK_THROWS_AS(make_bundle_point(pt(1, 1, 1, 1), pt(1, 1, 1, 1)), NotOnVariety);
}

TEST_CASE("in_V") {
  const auto p = make_bundle_point(pt(1, 1, 1, 1), pt(1, -1, 1, -1));
  CHECK(in_V(p, Pairing(1)));
  CHECK_FALSE(in_V(p, Pairing(2)));
  // y = (0, 0, 1, y3) with x2 + x3 y3^3 = 0.
  const auto q = make_bundle_point(pt(5, 7, 8, 1), pt(0, 0, 1, -2));
  CHECK(in_V(q, Pairing(1)));
}

TEST_CASE("liftable") {
  for (Pairing tau : Pairing::all()) {
    CHECK(liftable(pt(1, 1, 1, 1), tau));
    CHECK(liftable(pt(0, 1, 1, 1), tau));
    CHECK_FALSE(liftable(pt(1, 1, 1, 2), tau));
  }
  // 1*2 / (4*1) = 1/2 for {0,1}|{2,3}; 1*4 / (2*1) = 2; 1*1/(2*4) = 1/8.
  CHECK_FALSE(liftable(pt(1, 2, 4, 1), Pairing(1)));
  CHECK_FALSE(liftable(pt(1, 2, 4, 1), Pairing(2)));
  CHECK(liftable(pt(1, 2, 4, 1), Pairing(3)));
}

TEST_CASE("over_singular_fiber") {
  CHECK_FALSE(over_singular_fiber(pt(1, 1, 1, 1)));
  CHECK(over_singular_fiber(pt(0, 1, 2, 3)));
  CHECK(over_singular_fiber(pt(1, 0, 0, 1)));
}

TEST_CASE("singular fibers are liftable for every pairing") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Int> c(-50, 50);
  std::uniform_int_distribution<int> slot(0, 3);
  for (int trial = 0; trial < 500; ++trial) {
    std::array<Int, 4> v{c(rng), c(rng), c(rng), c(rng)};
    v[slot(rng)] = 0;
    if (v == std::array<Int, 4>{}) continue;
    const auto x = normalize(v);
    REQUIRE(over_singular_fiber(x));
    for (Pairing tau : Pairing::all()) CHECK(liftable(x, tau));
  }
}

TEST_CASE("liftable agrees with the (s:t) search on [-10, 10]^4") {
  std::array<Int, 4> v{};
  int checked = 0;
  for (v[0] = -10; v[0] <= 10; ++v[0])
    for (v[1] = -10; v[1] <= 10; ++v[1])
      for (v[2] = -10; v[2] <= 10; ++v[2])
        for (v[3] = -10; v[3] <= 10; ++v[3]) {
          const auto p = P3Point::if_canonical(v);
          REQUIRE(p.has_value() == oracle::canonical(v));
          if (!p) continue;
          for (Pairing tau : Pairing::all()) {
            // A cube ratio of products up to 100 has a root of height < 5.
            REQUIRE(liftable(*p, tau) == oracle::brute_liftable(v, tau.order(), 5));
          }
          ++checked;
        }
  CHECK(checked == 88448);
}

TEST_CASE("liftable is scale invariant and V implies X") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<Int> c(-30, 30);
  for (int trial = 0; trial < 300; ++trial) {
    std::array<Int, 4> v{c(rng), c(rng), c(rng), c(rng)};
    if (v == std::array<Int, 4>{}) continue;
    std::array<Int, 4> w{};
    for (int i = 0; i < 4; ++i) w[i] = -7 * v[i];
    for (Pairing tau : Pairing::all()) CHECK(liftable(normalize(v), tau) == liftable(normalize(w), tau));
  }
  // Points on some V from the pair-sum construction: x_a y_a^3 = -x_b y_b^3.
  const BundlePoint p{pt(8, 1, 27, 1), pt(1, -2, 1, -3)};
  CHECK(in_V(p, Pairing(1)));
  CHECK(on_X(p.x, p.y));
}
