#include "fermat/bundle_geometry.hpp"

namespace fermat {

namespace {

constexpr std::array<std::array<int, 4>, 3> kOrders{{
    {0, 1, 2, 3},
    {0, 2, 1, 3},
    {0, 3, 1, 2},
}};

Wide term(const P3Point& x, const P3Point& y, int i) noexcept {
  const Wide v = y[i];
  return Wide{x[i]} * v * v * v;
}

}  // namespace

Pairing::Pairing(int index) : index_(index) {
  if (index < 1 || index > kCount) {
    throw InvalidArgument("pairing index must be 1, 2 or 3, got " + std::to_string(index));
  }
}

const std::array<int, 4>& Pairing::order() const noexcept { return kOrders[index_ - 1]; }

std::string Pairing::to_string() const {
  const auto& o = order();
  return "{" + std::to_string(o[0]) + "," + std::to_string(o[1]) + "}|{" + std::to_string(o[2]) +
         "," + std::to_string(o[3]) + "}";
}

Wide bundle_form(const P3Point& x, const P3Point& y) noexcept {
  return term(x, y, 0) + term(x, y, 1) + term(x, y, 2) + term(x, y, 3);
}

bool on_X(const P3Point& x, const P3Point& y) noexcept { return bundle_form(x, y) == 0; }

BundlePoint make_bundle_point(const P3Point& x, const P3Point& y) {
  if (!on_X(x, y)) {
    throw NotOnVariety("point (" + x.to_string() + ", " + y.to_string() + ") is not on X");
  }
  return {x, y};
}

bool in_V(const BundlePoint& p, Pairing tau) noexcept {
  const auto& o = tau.order();
  return term(p.x, p.y, o[0]) + term(p.x, p.y, o[1]) == 0 &&
         term(p.x, p.y, o[2]) + term(p.x, p.y, o[3]) == 0;
}

bool liftable(const P3Point& x, Pairing tau) {
  const auto& o = tau.order();
  if (x[o[0]] == 0 || x[o[1]] == 0 || x[o[2]] == 0 || x[o[3]] == 0) return true;
  // Class of (x_a x_b) / (x_c x_d), assembled per coordinate so nothing overflows.
  const CubeClass ratio = CubeClass::of(x[o[0]]) * CubeClass::of(x[o[1]]) *
                          (CubeClass::of(x[o[2]]) * CubeClass::of(x[o[3]])).inverse();
  return ratio.trivial();
}

bool over_singular_fiber(const P3Point& x) noexcept { return x.has_zero_coordinate(); }

}  // namespace fermat
