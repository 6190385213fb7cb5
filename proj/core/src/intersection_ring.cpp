#include "fermat/intersection_ring.hpp"

#include <random>
#include <sstream>

#include "fermat/errors.hpp"

namespace fermat {

DivisorClass DivisorClass::monomial(int i, int j, const Rational& coefficient) {
  if (i < 0 || j < 0) throw InvalidArgument("negative exponent in monomial");
  DivisorClass c;
  if (i <= kTop && j <= kTop) c.coeffs_[i][j] = coefficient;
  return c;
}

DivisorClass DivisorClass::linear(const Rational& a, const Rational& b) {
  return monomial(1, 0, a) + monomial(0, 1, b);
}

Rational DivisorClass::coefficient(int i, int j) const {
  if (i < 0 || j < 0 || i > kTop || j > kTop) return 0;
  return coeffs_[i][j];
}

bool DivisorClass::is_zero() const {
  for (const auto& row : coeffs_) {
    for (const auto& c : row) {
      if (c != 0) return false;
    }
  }
  return true;
}

std::optional<int> DivisorClass::degree() const {
  std::optional<int> deg;
  for (int i = 0; i <= kTop; ++i) {
    for (int j = 0; j <= kTop; ++j) {
      if (coeffs_[i][j] == 0) continue;
      if (deg && *deg != i + j) return std::nullopt;
      deg = i + j;
    }
  }
  return deg;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  for (int i = 0; i <= kTop; ++i) {
    for (int j = 0; j <= kTop; ++j) coeffs_[i][j] += other.coeffs_[i][j];
  }
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  for (int i = 0; i <= kTop; ++i) {
    for (int j = 0; j <= kTop; ++j) coeffs_[i][j] -= other.coeffs_[i][j];
  }
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& scalar) {
  for (auto& row : coeffs_) {
    for (auto& c : row) c *= scalar;
  }
  return *this;
}

DivisorClass& DivisorClass::operator*=(const DivisorClass& other) {
  DivisorClass out;
  for (int i = 0; i <= kTop; ++i) {
    for (int j = 0; j <= kTop; ++j) {
      if (coeffs_[i][j] == 0) continue;
      for (int k = 0; i + k <= kTop; ++k) {
        for (int l = 0; j + l <= kTop; ++l) {
          if (other.coeffs_[k][l] == 0) continue;
          out.coeffs_[i + k][j + l] += coeffs_[i][j] * other.coeffs_[k][l];
        }
      }
    }
  }
  *this = std::move(out);
  return *this;
}

std::string DivisorClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  // Highest total degree first, then by h1 exponent.
  for (int deg = 2 * kTop; deg >= 0; --deg) {
    for (int i = kTop; i >= 0; --i) {
      const int j = deg - i;
      if (j < 0 || j > kTop) continue;
      Rational c = coeffs_[i][j];
      if (c == 0) continue;
      if (!first) {
        os << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
      } else if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
      std::string mono;
      if (i > 0) mono += i > 1 ? "h1^" + std::to_string(i) : "h1";
      if (j > 0) {
        if (!mono.empty()) mono += "*";
        mono += j > 1 ? "h2^" + std::to_string(j) : "h2";
      }
      if (mono.empty()) {
        os << c;
      } else if (c == 1) {
        os << mono;
      } else {
        os << c << "*" << mono;
      }
    }
  }
  if (first) return "0";
  return os.str();
}

DivisorClass anticanonical_class() { return DivisorClass::linear(3, 1); }

DivisorClass hypersurface_class() { return DivisorClass::linear(1, 3); }

DivisorClass multiply(std::span<const DivisorClass> classes) {
  DivisorClass out = DivisorClass::monomial(0, 0);
  for (const auto& c : classes) out *= c;
  return out;
}

Rational ambient_degree(const DivisorClass& c) {
  return c.coefficient(DivisorClass::kTop, DivisorClass::kTop);
}

Rational intersect_on_X(std::span<const DivisorClass> classes) {
  constexpr int kDimX = 5;
  int total = 0;
  bool has_zero = false;
  for (const auto& c : classes) {
    if (c.is_zero()) {
      has_zero = true;
      continue;
    }
    const auto d = c.degree();
    if (!d) throw DegreeMismatch("intersect_on_X: factor " + c.to_string() + " is not homogeneous");
    total += *d;
  }
  if (has_zero && total <= kDimX) return 0;
  if (total != kDimX) {
    throw DegreeMismatch("intersect_on_X: total degree " + std::to_string(total) +
                         " does not equal dim X = 5");
  }
  return ambient_degree(multiply(classes) * hypersurface_class());
}

Rational curve_a_value(int h1_degree, int h2_degree) {
  if (h1_degree < 0 || h2_degree < 0) throw InvalidArgument("curve degrees must be non-negative");
  if (h1_degree == 0 && h2_degree == 0) {
    throw InvalidArgument("curve with bidegree (0, 0) has no L-degree");
  }
  return Rational(2, 3 * h1_degree + h2_degree);
}

// ---------------------------------------------------------------------------

std::string to_string(SubvarietyKind kind) {
  switch (kind) {
    case SubvarietyKind::WholeSpace: return "WholeSpace";
    case SubvarietyKind::SmoothPiFiber: return "SmoothPiFiber";
    case SubvarietyKind::ConeFiber: return "ConeFiber";
    case SubvarietyKind::PlaneComponentFiber: return "PlaneComponentFiber";
    case SubvarietyKind::PiYFiber: return "PiYFiber";
    case SubvarietyKind::LineInFiber: return "LineInFiber";
    case SubvarietyKind::ConicInFiber: return "ConicInFiber";
    case SubvarietyKind::PreimageOfLine: return "PreimageOfLine";
    case SubvarietyKind::PreimageOfPlane: return "PreimageOfPlane";
  }
  return "Unknown";
}

InvariantReport lookup_invariants(const SubvarietyDescriptor& d) {
  const bool smooth_fiber = d.kind == SubvarietyKind::SmoothPiFiber;
  if (smooth_fiber != d.rank_over_ground_field.has_value()) {
    throw InvalidArgument("rank_over_ground_field is required for SmoothPiFiber and only there");
  }
  using R = Rigidity;
  switch (d.kind) {
    case SubvarietyKind::WholeSpace: return {1, R::Rigid, 2};
    case SubvarietyKind::SmoothPiFiber: {
      const int rho = *d.rank_over_ground_field;
      if (rho < 1 || rho > 7) throw InvalidArgument("Picard rank of a cubic surface lies in 1..7");
      return {1, R::Rigid, rho};
    }
    case SubvarietyKind::ConeFiber: return {2, R::NotRigid, std::nullopt};
    case SubvarietyKind::PlaneComponentFiber: return {3, R::Rigid, std::nullopt};
    case SubvarietyKind::PiYFiber: return {1, R::Rigid, 1};
    case SubvarietyKind::LineInFiber: return {curve_a_value(0, 1), R::Rigid, 1};
    case SubvarietyKind::ConicInFiber: return {curve_a_value(0, 2), R::Rigid, 1};
    case SubvarietyKind::PreimageOfLine: return {1, R::NotRigid, std::nullopt};
    case SubvarietyKind::PreimageOfPlane: return {1, R::NotRigid, std::nullopt};
  }
  throw InvalidArgument("unknown subvariety kind");
}

// ---------------------------------------------------------------------------

Rational weak_del_pezzo_degree_3fold(const Rational& a, const Rational& b) {
  const auto h1 = DivisorClass::h1();
  const auto s = DivisorClass::linear(1, 1);
  const std::array<DivisorClass, 5> f{s, s, h1, h1, DivisorClass::linear(a, b)};
  return intersect_on_X(f);
}

Rational weak_del_pezzo_degree_4fold(const Rational& a, const Rational& b) {
  const auto t = DivisorClass::linear(2, 1);
  const auto y = DivisorClass::monomial(2, 0, a) + DivisorClass::monomial(1, 1, b);
  const std::array<DivisorClass, 4> f{t, t, y, DivisorClass::h1()};
  return intersect_on_X(f);
}

Rational curve_section_degree(const Rational& a, const Rational& b, const Rational& c) {
  const auto h1 = DivisorClass::h1();
  const auto y = DivisorClass::monomial(2, 0, a) + DivisorClass::monomial(1, 1, b) +
                 DivisorClass::monomial(0, 2, c);
  const std::array<DivisorClass, 4> f{DivisorClass::linear(1, 1), h1, h1, y};
  return intersect_on_X(f);
}

std::vector<IdentityResult> verify_intersection_identities(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-1000, 1000);

  IdentityResult r1{"K_{Y2}^2 on 3-fold sections", "(h1+h2)^2 h1^2 (a h1 + b h2) (h1+3h2) = 3a+7b", 0, 0};
  IdentityResult r2{"K_{Y1}^2 on 4-fold sections", "(2h1+h2)^2 (a h1^2 + b h1 h2) h1 (h1+3h2) = 3a+13b", 0, 0};
  IdentityResult r3{"deg(h1+h2) on curve sections", "(h1+h2) h1^2 (a h1^2 + b h1 h2 + c h2^2) (h1+3h2) = 3b+4c", 0, 0};

  for (int s = 0; s < samples; ++s) {
    const Rational a = coeff(rng), b = coeff(rng), c = coeff(rng);
    ++r1.samples;
    if (weak_del_pezzo_degree_3fold(a, b) != 3 * a + 7 * b) ++r1.failures;
    ++r2.samples;
    if (weak_del_pezzo_degree_4fold(a, b) != 3 * a + 13 * b) ++r2.failures;
    ++r3.samples;
    if (curve_section_degree(a, b, c) != 3 * b + 4 * c) ++r3.failures;
  }
  return {r1, r2, r3};
}

}  // namespace fermat
