#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "fermat/bundle_geometry.hpp"
#include "fermat/exact_arith.hpp"

namespace fermat {

/// a0 y0^3 + a1 y1^3 + a2 y2^3 + a3 y3^3 = 0 with every a_i nonzero.
class DiagonalCubic {
 public:
  /// Throws InvalidArgument if a coefficient is zero.
  explicit DiagonalCubic(const std::array<Int, 4>& coefficients);

  /// The fiber of X over x; x must have no zero coordinate.
  static DiagonalCubic fiber_over(const P3Point& x) { return DiagonalCubic(x.coords()); }

  const std::array<Int, 4>& coefficients() const noexcept { return coeffs_; }
  Int operator[](std::size_t i) const noexcept { return coeffs_[i]; }

  std::string to_string() const;

 private:
  std::array<Int, 4> coeffs_;
};

/// Label (pairing, m, n) of one of the 27 lines. Writing u_i for the real cube
/// root of a_i/a_0 (u_0 = 1) and ω = exp(2πi/3), the line of pairing
/// {0,j}|{k,l} is
///   y_0 + ω^m u_j y_j = 0,   u_k y_k + ω^n u_l y_l = 0.
struct LineLabel {
  Pairing pairing{1};
  int m = 0;
  int n = 0;

  /// 0..26, pairing-major.
  int index() const noexcept { return (pairing.index() - 1) * 9 + m * 3 + n; }
  static LineLabel from_index(int index);
  std::string to_string() const;

  friend auto operator<=>(const LineLabel&, const LineLabel&) = default;
};

/// All 27 labels in index order.
std::vector<LineLabel> all_lines();

/// Element of Gal(Q(ω, u_1, u_2, u_3)/Q): ω ↦ ω^{(-1)^conj} and
/// u_i ↦ ω^{twist_i} u_i.
struct GaloisElement {
  int conj = 0;
  std::array<int, 3> twist{0, 0, 0};

  int sign() const noexcept { return conj ? -1 : 1; }
  static GaloisElement identity() { return {}; }

  friend bool operator==(const GaloisElement&, const GaloisElement&) = default;
  friend auto operator<=>(const GaloisElement&, const GaloisElement&) = default;
};

/// g ∘ h (apply h first).
GaloisElement compose(const GaloisElement& g, const GaloisElement& h);

/// True when no pairing gives a product ratio that is a rational cube.
bool segre_rank_one(const DiagonalCubic& s);

/// Exponent vectors e in (Z/3)^3 with prod (a_i/a_0)^{e_i} a cube in Q.
std::vector<std::array<int, 3>> cube_relations(const DiagonalCubic& s);

/// All Galois elements, conj-major then twist lexicographic. The order is
/// 2 * 3^d with d the rank of the subgroup generated by the three ratios.
std::vector<GaloisElement> galois_group(const DiagonalCubic& s);

LineLabel line_action(const GaloisElement& g, const LineLabel& l);

/// -1 on the diagonal, 1 if the two lines meet, 0 if disjoint.
int incidence(const LineLabel& l1, const LineLabel& l2);

/// 27x27 matrix of incidence numbers in label index order.
std::vector<std::vector<int>> incidence_matrix();

struct PicardReport {
  int rank_over_Q = 0;
  bool segre_rank_one = false;
  /// Sorted descending; sums to 27.
  std::vector<int> orbit_sizes;
  bool agreement = false;
  std::size_t group_order = 0;
};

/// Galois orbits of the lines, rank of the Gram matrix of the orbit sums.
std::vector<std::vector<LineLabel>> line_orbits(const DiagonalCubic& s);

PicardReport picard_rank(const DiagonalCubic& s);

}  // namespace fermat
