#pragma once

#include <array>
#include <string>

#include "fermat/exact_arith.hpp"

namespace fermat {

/// One of the three ways to split {0,1,2,3} into two pairs:
/// 1 -> {0,1}|{2,3}, 2 -> {0,2}|{1,3}, 3 -> {0,3}|{1,2}.
class Pairing {
 public:
  static constexpr int kCount = 3;

  /// Throws InvalidArgument unless index is 1, 2 or 3.
  explicit Pairing(int index);

  int index() const noexcept { return index_; }
  /// Coordinate order (p0, p1 | p2, p3) with p0 = 0.
  const std::array<int, 4>& order() const noexcept;

  std::string to_string() const;

  static std::array<Pairing, kCount> all() { return {Pairing(1), Pairing(2), Pairing(3)}; }

  friend auto operator<=>(const Pairing&, const Pairing&) = default;

 private:
  int index_;
};

/// A point of X: x_0 y_0^3 + x_1 y_1^3 + x_2 y_2^3 + x_3 y_3^3 = 0.
struct BundlePoint {
  P3Point x;
  P3Point y;

  friend auto operator<=>(const BundlePoint&, const BundlePoint&) = default;
};

/// Evaluates x_0 y_0^3 + ... + x_3 y_3^3 exactly.
Wide bundle_form(const P3Point& x, const P3Point& y) noexcept;

bool on_X(const P3Point& x, const P3Point& y) noexcept;

/// Checked construction; throws NotOnVariety.
BundlePoint make_bundle_point(const P3Point& x, const P3Point& y);

/// Both pair sums x_a y_a^3 + x_b y_b^3 vanish for the pairing.
bool in_V(const BundlePoint& p, Pairing tau) noexcept;

/// Whether x lifts to a rational point of s^3 x_a x_b = t^3 x_c x_d, i.e.
/// one of the products vanishes or their ratio is a rational cube.
bool liftable(const P3Point& x, Pairing tau);

/// The pi_x fiber over x is singular exactly when x has a zero coordinate.
bool over_singular_fiber(const P3Point& x) noexcept;

}  // namespace fermat
