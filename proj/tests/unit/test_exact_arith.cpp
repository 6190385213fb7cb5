#include <doctest.h>

#include <numeric>
#include <random>

#include "fermat/exact_arith.hpp"
#include "oracles.hpp"

using namespace fermat;

TEST_CASE("normalize picks the canonical representative") {
  CHECK(normalize<4>({2, 4, 6, 0}).coords() == std::array<Int, 4>{1, 2, 3, 0});
  CHECK(normalize<4>({-1, 2, 0, 0}).coords() == std::array<Int, 4>{1, -2, 0, 0});
  CHECK(normalize<4>({0, -3, 9, 3}).coords() == std::array<Int, 4>{0, 1, -3, -1});
  CHECK(normalize<2>({-4, -6}).coords() == std::array<Int, 2>{2, 3});
}

TEST_CASE("normalize rejects zero and oversized input") {
  CHECK_THROWS_AS(normalize<4>({0, 0, 0, 0}), InvalidPoint);
  CHECK_THROWS_AS(normalize<4>({Int{1} << 40, 1, 0, 0}), InvalidPoint);
  CHECK_THROWS_AS(normalize<4>({std::numeric_limits<Int>::min(), 1, 0, 0}), InvalidPoint);
  const std::vector<Int> three{1, 2, 3};
  CHECK_THROWS_AS(normalize<4>(std::span<const Int>(three)), InvalidPoint);
}

TEST_CASE("parse_point") {
  CHECK(parse_point<4>("1:-1:1:-1").to_string() == "1:-1:1:-1");
  CHECK(parse_point<4>("-2:4:0:6").to_string() == "1:-2:0:-3");
  CHECK_THROWS_AS(parse_point<4>("1:2:3"), InvalidPoint);
  CHECK_THROWS_AS(parse_point<4>("1:2:3:4:5"), InvalidPoint);
  CHECK_THROWS_AS(parse_point<4>("1:x:3:4"), InvalidPoint);
  CHECK_THROWS_AS(parse_point<4>("1::3:4"), InvalidPoint);
  CHECK_THROWS_AS(parse_point<4>("0:0:0:0"), InvalidPoint);
}

TEST_CASE("normalize is idempotent and scale invariant") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> coord(-1000, 1000);
  std::uniform_int_distribution<Int> scale(-50, 50);
  for (int trial = 0; trial < 2000; ++trial) {
    std::array<Int, 4> v{coord(rng), coord(rng), coord(rng), coord(rng)};
    if (v == std::array<Int, 4>{}) continue;
    Int lambda = scale(rng);
    if (lambda == 0) lambda = 1;
    const auto p = normalize(v);
    CHECK(normalize(p.coords()) == p);
    std::array<Int, 4> w{};
    for (int i = 0; i < 4; ++i) w[i] = lambda * v[i];
    CHECK(normalize(w) == p);
    CHECK(P3Point::if_canonical(p.coords()).has_value());
  }
}

TEST_CASE("heights") {
  CHECK(naive_height(normalize<4>({1, 2, 3, 0})) == 3);
  CHECK(naive_height(normalize<2>({1, 0})) == 1);
  CHECK(naive_height(normalize<4>({1, -7, 2, 5})) == 7);

  CHECK(anticanonical_height(normalize<4>({1, 1, 1, 1}), normalize<4>({1, -1, 0, 0})) == 1);
  CHECK(anticanonical_height(normalize<4>({1, 0, 0, 2}), normalize<4>({0, 1, -1, 0})) == 8);
  CHECK(anticanonical_height(normalize<4>({1, 1, 1, 1}), normalize<4>({3, -3, 1, -1})) == 3);
  CHECK_THROWS_AS(anticanonical_height(normalize<4>({kMaxCoordinate, 1, 0, 0}),
                                       normalize<4>({kMaxCoordinate, 1, 0, 0})),
                  std::overflow_error);
}

TEST_CASE("cube_class examples") {
  CHECK(cube_class(8, 27).trivial());
  CHECK(cube_class(-8, 1).trivial());
  const std::map<Int, int> expected{{2, 1}, {3, 2}, {5, 2}};
  CHECK(cube_class(2, 15).exponents() == expected);
  CHECK(cube_class(2, 15).to_string() == "{2:1, 3:2, 5:2}");
  CHECK_THROWS_AS(cube_class(0, 1), InvalidArgument);
  CHECK_THROWS_AS(cube_class(1, 0), InvalidArgument);
}

TEST_CASE("is_cube examples") {
  CHECK(is_cube(1, 1));
  CHECK_FALSE(is_cube(2, 1));
  CHECK(is_cube(216, 125));
  CHECK(is_cube(-216, 125));
  CHECK_THROWS_AS(is_cube(0, 3), InvalidArgument);
}

TEST_CASE("cube_class is invariant under multiplication by cubes") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Int> small(-60, 60);
  for (int trial = 0; trial < 500; ++trial) {
    Int p = small(rng), q = small(rng), a = small(rng), b = small(rng);
    if (p == 0 || q == 0 || a == 0 || b == 0) continue;
    CHECK(cube_class(p, q) == cube_class(p * a * a * a, q * b * b * b));
  }
}

TEST_CASE("is_cube agrees with brute force on reduced fractions up to 200") {
  int checked = 0;
  for (Int p = -200; p <= 200; ++p) {
    if (p == 0) continue;
    for (Int q = 1; q <= 200; ++q) {
      if (std::gcd(p, q) != 1) continue;
      REQUIRE(is_cube(p, q) == oracle::brute_is_rational_cube(p, q, 6));
      ++checked;
    }
  }
  CHECK(checked > 40000);
}

TEST_CASE("factorize handles large cofactors") {
  // p * q with both primes above the cube root of the product.
  const Int p = 1000003, q = 1000033;
  const auto f = factorize(p * q);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == std::pair<Int, int>{p, 1});
  CHECK(f[1] == std::pair<Int, int>{q, 1});
  const auto sq = factorize(p * p);
  REQUIRE(sq.size() == 1);
  CHECK(sq[0] == std::pair<Int, int>{p, 2});
  CHECK(is_cube(p * p * p, 8));
  CHECK_FALSE(is_cube(p * q, 1));
  CHECK(is_probable_prime(2147483647));
  CHECK_FALSE(is_probable_prime(2147483647LL * 3));
  CHECK(factorize(-360) == std::vector<std::pair<Int, int>>{{2, 3}, {3, 2}, {5, 1}});
}

TEST_CASE("CubeClass group operations") {
  const auto two = CubeClass::of(2);
  CHECK((two * two * two).trivial());
  CHECK((two * two.inverse()).trivial());
  CHECK(two.pow(2) == CubeClass::of(4));
  CHECK(two.pow(-1) == two.inverse());
  CHECK(two.pow(3).trivial());
}

TEST_CASE("exact_cube_root") {
  CHECK(exact_cube_root(27) == 3);
  CHECK(exact_cube_root(-64) == -4);
  CHECK_FALSE(exact_cube_root(10).has_value());
  CHECK(exact_cube_root(0) == 0);
  CHECK_FALSE(exact_cube_root(std::numeric_limits<Int>::max()).has_value());
  for (Int m = -1000000; m <= 1000000; ++m) {
    if (exact_cube_root(m * m * m) != m) {
      FAIL("cube root mismatch at " << m);
    }
  }
  for (Int m = 2; m < 3000; ++m) {
    CHECK_FALSE(exact_cube_root(m * m * m + 1).has_value());
    CHECK_FALSE(exact_cube_root(m * m * m - 1).has_value());
  }
}
