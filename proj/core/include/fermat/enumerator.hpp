#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fermat/bundle_geometry.hpp"
#include "fermat/classifier.hpp"

namespace fermat {

/// Fiber bounds are capped so bound^3 fits in 64 bits.
inline constexpr Int kMaxFiberBound = (Int{1} << 21) - 1;

/// Normalized y with H(y) <= bound on the fiber over x, ascending
/// lexicographic order. Empty for bound < 1.
std::vector<P3Point> enumerate_fiber(const P3Point& x, Int y_height_bound);

/// Normalized points of P^3 with H <= bound, ascending lexicographic order.
std::vector<P3Point> projective_points_up_to(Int bound);

/// Largest h with h^3 <= B.
Int integer_cube_root_floor(Int B);

using PointSink = std::function<void(const BundlePoint&, Int height)>;

/// Streams every point of X with anticanonical height <= B exactly once,
/// lexicographic in x then y.
void enumerate_X(Int height_bound, const PointSink& sink);

/// Collecting form. With workers > 1 the x-loop is split across threads; the
/// result is identical for every worker count.
std::vector<BundlePoint> enumerate_X(Int height_bound, unsigned workers = 1);

// ---------------------------------------------------------------------------

enum class CountClass { All, InZ, NotInZ, InSomeV, LiftableOnly, SingularFiber };

inline constexpr std::array<CountClass, 6> kCountClasses{
    CountClass::All,          CountClass::InZ,           CountClass::NotInZ,
    CountClass::InSomeV,      CountClass::LiftableOnly,  CountClass::SingularFiber};

std::string_view label(CountClass c);

/// N(U, L, B) per class, aligned with `bounds`.
struct CountSeries {
  std::vector<Int> bounds;
  /// counts[class][i] is the count at bounds[i].
  std::array<std::vector<std::uint64_t>, kCountClasses.size()> counts;

  const std::vector<std::uint64_t>& of(CountClass c) const {
    return counts[static_cast<std::size_t>(c)];
  }
  std::vector<std::uint64_t>& of(CountClass c) { return counts[static_cast<std::size_t>(c)]; }

  friend bool operator==(const CountSeries&, const CountSeries&) = default;
};

/// Which count classes a classified point belongs to (besides All).
std::vector<CountClass> classes_of(const ClassificationRecord& r);

/// One enumeration pass at the largest bound; each point is classified once
/// and thresholded into every bound it satisfies. Throws InvalidArgument on
/// an empty or non-ascending bounds list.
CountSeries count_series(std::span<const Int> bounds, Classifier& classifier,
                         unsigned workers = 1);

/// Header "B,ALL,IN_Z,NOT_IN_Z,IN_SOME_V,LIFTABLE_ONLY,SINGULAR_FIBER" and
/// one integer row per bound.
std::string to_csv(const CountSeries& series);

/// Inverse of to_csv. Throws std::runtime_error on malformed input.
CountSeries parse_csv(std::string_view text);

/// "x0:x1:x2:x3|y0:y1:y2:y3|height|flags", flags comma-separated class labels.
std::string point_dump_line(const ClassificationRecord& r);

// ---------------------------------------------------------------------------
// Lines on a fixed fiber

/// The line {y_a = r1 * y_b, y_c = r2 * y_d} in the fiber over x, where
/// (a, b | c, d) is the pairing order.
struct LineSpec {
  P3Point x;
  Pairing pairing{1};
  Int first_ratio = -1;
  Int second_ratio = -1;
};

bool line_on_X(const LineSpec& line);

/// Image of (s:t) on the line: y_a = r1 s, y_b = s, y_c = r2 t, y_d = t.
P3Point line_point(const LineSpec& line, const P1Point& st);

/// Number of points of P^1(Q) with naive height <= bound.
std::uint64_t count_p1_points(Int bound);

/// Points (s:t) of height <= bound parametrizing the line. Throws
/// InvalidArgument if the line is not on X.
std::uint64_t line_count(const LineSpec& line, Int height_bound);

}  // namespace fermat
