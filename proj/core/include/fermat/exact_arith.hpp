#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fermat/errors.hpp"

namespace fermat {

using Int = std::int64_t;
using Wide = __int128;

/// Coordinates are capped so that x_i * y_i^3 and four-term sums stay inside
/// a 128-bit accumulator.
inline constexpr Int kMaxCoordinate = (Int{1} << 31) - 1;

template <std::size_t N>
class ProjectivePoint;

template <std::size_t N>
ProjectivePoint<N> normalize(const std::array<Int, N>& raw);

/// A point of P^{N-1}(Q) stored as its canonical integer representative:
/// coprime coordinates, first nonzero coordinate positive.
template <std::size_t N>
class ProjectivePoint {
  static_assert(N >= 2, "projective space needs at least two coordinates");

 public:
  static constexpr std::size_t kSize = N;

  /// Returns the point when `raw` already is a canonical representative,
  /// std::nullopt otherwise. Used by enumerators that filter instead of
  /// normalizing.
  static std::optional<ProjectivePoint> if_canonical(const std::array<Int, N>& raw);

  const std::array<Int, N>& coords() const noexcept { return coords_; }
  Int operator[](std::size_t i) const noexcept { return coords_[i]; }
  constexpr std::size_t size() const noexcept { return N; }

  bool has_zero_coordinate() const noexcept {
    for (Int c : coords_) {
      if (c == 0) return true;
    }
    return false;
  }

  /// "a:b:c:d"
  std::string to_string() const;

  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  explicit ProjectivePoint(const std::array<Int, N>& c) : coords_(c) {}
  friend ProjectivePoint normalize<N>(const std::array<Int, N>& raw);

  std::array<Int, N> coords_{};
};

using P1Point = ProjectivePoint<2>;
using P3Point = ProjectivePoint<4>;

/// Divides by the gcd and flips the sign so the first nonzero entry is
/// positive. Throws InvalidPoint on the zero vector or on coordinates beyond
/// kMaxCoordinate.
template <std::size_t N>
ProjectivePoint<N> normalize(const std::array<Int, N>& raw);

/// Runtime-length variant; `raw.size()` must equal N.
template <std::size_t N>
ProjectivePoint<N> normalize(std::span<const Int> raw);

/// Parses "a:b:c:d" (exactly N integer fields) and normalizes.
template <std::size_t N>
ProjectivePoint<N> parse_point(std::string_view text);

/// max |x_i| of the canonical representative.
template <std::size_t N>
Int naive_height(const ProjectivePoint<N>& p) noexcept;

/// H(x)^3 * H(y), the height attached to L = 3h1 + h2. Throws
/// std::overflow_error if the product exceeds 64 bits.
Int anticanonical_height(const P3Point& x, const P3Point& y);

// ---------------------------------------------------------------------------
// Cube classes in Q* / (Q*)^3

/// Prime factorization of |n| for n != 0, ascending primes.
std::vector<std::pair<Int, int>> factorize(Int n);

bool is_probable_prime(Int n);

/// Element of Q*/(Q*)^3 stored as prime -> exponent in {1, 2}. The empty map
/// is the trivial class. Sign is discarded since -1 is a cube.
class CubeClass {
 public:
  CubeClass() = default;

  /// Class of the nonzero integer n.
  static CubeClass of(Int n);

  bool trivial() const noexcept { return exponents_.empty(); }
  const std::map<Int, int>& exponents() const noexcept { return exponents_; }

  CubeClass operator*(const CubeClass& other) const;
  CubeClass inverse() const;
  CubeClass pow(int e) const;

  std::string to_string() const;

  friend bool operator==(const CubeClass&, const CubeClass&) = default;

 private:
  void add(Int prime, int exponent);

  std::map<Int, int> exponents_;
};

/// Class of numerator/denominator. Throws InvalidArgument on a zero input.
CubeClass cube_class(Int numerator, Int denominator);

bool is_cube(Int numerator, Int denominator);

/// m with m^3 = n when it exists.
std::optional<Int> exact_cube_root(Int n) noexcept;

}  // namespace fermat
