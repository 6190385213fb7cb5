#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fermat/errors.hpp"

namespace fermat {

using Rational = boost::multiprecision::cpp_rational;

/// Element of Q[h1, h2] / (h1^4, h2^4), the numerical ring of P^3 x P^3.
/// Monomials h1^i h2^j with i or j above 3 vanish and are never stored.
class DivisorClass {
 public:
  static constexpr int kTop = 3;

  DivisorClass() = default;

  static DivisorClass monomial(int i, int j, const Rational& coefficient = 1);
  static DivisorClass h1() { return monomial(1, 0); }
  static DivisorClass h2() { return monomial(0, 1); }
  /// a*h1 + b*h2
  static DivisorClass linear(const Rational& a, const Rational& b);

  /// Coefficient of h1^i h2^j; zero outside 0..3.
  Rational coefficient(int i, int j) const;

  bool is_zero() const;
  /// i + j shared by every nonzero monomial; nullopt for zero or mixed classes.
  std::optional<int> degree() const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass& operator*=(const Rational& scalar);
  DivisorClass& operator*=(const DivisorClass& other);

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(DivisorClass a, const DivisorClass& b) { return a *= b; }
  friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }
  friend DivisorClass operator*(DivisorClass a, const Rational& s) { return a *= s; }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  /// e.g. "9*h1^2 + 6*h1*h2 + h2^2"
  std::string to_string() const;

 private:
  std::array<std::array<Rational, kTop + 1>, kTop + 1> coeffs_{};
};

/// L = -K_X = 3h1 + h2.
DivisorClass anticanonical_class();
/// Class of the hypersurface X, h1 + 3h2.
DivisorClass hypersurface_class();

/// Product of all factors; the empty product is 1.
DivisorClass multiply(std::span<const DivisorClass> classes);

/// Coefficient of h1^3 h2^3, the degree on P^3 x P^3.
Rational ambient_degree(const DivisorClass& c);

/// Intersection number on X of classes whose degrees add up to dim X = 5.
/// Zero factors short-circuit to 0; otherwise each factor must be
/// homogeneous and the degrees must total 5, else DegreeMismatch.
Rational intersect_on_X(std::span<const DivisorClass> classes);

/// 2 / (3*h1_degree + h2_degree): the a-value of a rational curve of that
/// bidegree against L. Throws InvalidArgument for (0, 0) or negative input.
Rational curve_a_value(int h1_degree, int h2_degree);

// ---------------------------------------------------------------------------
// Tabulated a/b invariants

enum class SubvarietyKind {
  WholeSpace,
  SmoothPiFiber,
  ConeFiber,
  PlaneComponentFiber,
  PiYFiber,
  LineInFiber,
  ConicInFiber,
  PreimageOfLine,
  PreimageOfPlane,
};

std::string to_string(SubvarietyKind kind);

struct SubvarietyDescriptor {
  SubvarietyKind kind = SubvarietyKind::WholeSpace;
  /// Picard rank over Q of the fiber; only for SmoothPiFiber, in 1..7.
  std::optional<int> rank_over_ground_field;
};

enum class Rigidity { Rigid, NotRigid, Unknown };

struct InvariantReport {
  Rational a_value;
  Rigidity adjoint_rigid = Rigidity::Unknown;
  /// Absent where only a and rigidity are known.
  std::optional<int> b_value;
};

InvariantReport lookup_invariants(const SubvarietyDescriptor& d);

// ---------------------------------------------------------------------------
// Randomized verification of the parametric identities

struct IdentityResult {
  std::string name;
  std::string formula;
  int samples = 0;
  int failures = 0;
  bool passed() const { return samples > 0 && failures == 0; }
};

/// (h1+h2)^2 h1^2 (a h1 + b h2) on X.
Rational weak_del_pezzo_degree_3fold(const Rational& a, const Rational& b);
/// (2h1+h2)^2 (a h1^2 + b h1 h2) h1 on X.
Rational weak_del_pezzo_degree_4fold(const Rational& a, const Rational& b);
/// (h1+h2) h1^2 (a h1^2 + b h1 h2 + c h2^2) on X.
Rational curve_section_degree(const Rational& a, const Rational& b, const Rational& c);

/// Evaluates the three parametric identities at `samples` random integer
/// points drawn from [-1000, 1000] with the given seed.
std::vector<IdentityResult> verify_intersection_identities(std::uint64_t seed, int samples = 20);

}  // namespace fermat
