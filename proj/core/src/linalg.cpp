#include "fermat/linalg.hpp"

#include <utility>

#include "fermat/errors.hpp"

namespace fermat {

std::size_t exact_rank(RationalMatrix m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  for (const auto& row : m) {
    if (row.size() != cols) throw InvalidArgument("exact_rank: ragged matrix");
  }

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    const Rational inv = 1 / m[rank][c];
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace fermat
