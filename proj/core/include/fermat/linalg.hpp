#pragma once

#include <cstddef>
#include <vector>

#include "fermat/intersection_ring.hpp"

namespace fermat {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank by exact Gaussian elimination over Q. Rows may be ragged only if
/// empty; otherwise all rows must have equal length.
std::size_t exact_rank(RationalMatrix m);

}  // namespace fermat
