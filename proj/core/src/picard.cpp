#include "fermat/picard.hpp"

#include <algorithm>
#include <functional>

#include "fermat/linalg.hpp"

namespace fermat {

namespace {

int mod3(int v) noexcept { return ((v % 3) + 3) % 3; }

// Class of a_i / a_0 for i = 1, 2, 3.
std::array<CubeClass, 3> ratio_classes(const DiagonalCubic& s) {
  const CubeClass base_inv = CubeClass::of(s[0]).inverse();
  return {CubeClass::of(s[1]) * base_inv, CubeClass::of(s[2]) * base_inv,
          CubeClass::of(s[3]) * base_inv};
}

}  // namespace

DiagonalCubic::DiagonalCubic(const std::array<Int, 4>& coefficients) : coeffs_(coefficients) {
  for (Int c : coeffs_) {
    if (c == 0) throw InvalidArgument("diagonal cubic needs four nonzero coefficients");
  }
}

std::string DiagonalCubic::to_string() const {
  return std::to_string(coeffs_[0]) + " " + std::to_string(coeffs_[1]) + " " +
         std::to_string(coeffs_[2]) + " " + std::to_string(coeffs_[3]);
}

LineLabel LineLabel::from_index(int index) {
  if (index < 0 || index >= 27) throw InvalidArgument("line index must lie in 0..26");
  return {Pairing(index / 9 + 1), (index % 9) / 3, index % 3};
}

std::string LineLabel::to_string() const {
  return "L" + std::to_string(pairing.index()) + "(" + std::to_string(m) + "," +
         std::to_string(n) + ")";
}

std::vector<LineLabel> all_lines() {
  std::vector<LineLabel> out;
  out.reserve(27);
  for (int i = 0; i < 27; ++i) out.push_back(LineLabel::from_index(i));
  return out;
}

GaloisElement compose(const GaloisElement& g, const GaloisElement& h) {
  GaloisElement out;
  out.conj = (g.conj + h.conj) % 2;
  for (int i = 0; i < 3; ++i) out.twist[i] = mod3(g.sign() * h.twist[i] + g.twist[i]);
  return out;
}

bool segre_rank_one(const DiagonalCubic& s) {
  for (Pairing tau : Pairing::all()) {
    const auto& o = tau.order();
    const CubeClass ratio = CubeClass::of(s[o[0]]) * CubeClass::of(s[o[1]]) *
                            (CubeClass::of(s[o[2]]) * CubeClass::of(s[o[3]])).inverse();
    if (ratio.trivial()) return false;
  }
  return true;
}

std::vector<std::array<int, 3>> cube_relations(const DiagonalCubic& s) {
  const auto r = ratio_classes(s);
  std::vector<std::array<int, 3>> out;
  for (int e1 = 0; e1 < 3; ++e1) {
    for (int e2 = 0; e2 < 3; ++e2) {
      for (int e3 = 0; e3 < 3; ++e3) {
        if ((r[0].pow(e1) * r[1].pow(e2) * r[2].pow(e3)).trivial()) out.push_back({e1, e2, e3});
      }
    }
  }
  return out;
}

std::vector<GaloisElement> galois_group(const DiagonalCubic& s) {
  const auto relations = cube_relations(s);
  std::vector<std::array<int, 3>> twists;
  for (int k1 = 0; k1 < 3; ++k1) {
    for (int k2 = 0; k2 < 3; ++k2) {
      for (int k3 = 0; k3 < 3; ++k3) {
        const bool annihilates = std::all_of(relations.begin(), relations.end(), [&](const auto& e) {
          return mod3(e[0] * k1 + e[1] * k2 + e[2] * k3) == 0;
        });
        if (annihilates) twists.push_back({k1, k2, k3});
      }
    }
  }
  std::vector<GaloisElement> group;
  group.reserve(2 * twists.size());
  for (int conj = 0; conj < 2; ++conj) {
    for (const auto& k : twists) group.push_back({conj, k});
  }
  return group;
}

LineLabel line_action(const GaloisElement& g, const LineLabel& l) {
  const int e = g.sign();
  const auto& k = g.twist;
  LineLabel out = l;
  switch (l.pairing.index()) {
    case 1:
      out.m = mod3(e * l.m + k[0]);
      out.n = mod3(e * l.n + k[2] - k[1]);
      break;
    case 2:
      out.m = mod3(e * l.m + k[1]);
      out.n = mod3(e * l.n + k[2] - k[0]);
      break;
    default:
      out.m = mod3(e * l.m + k[2]);
      out.n = mod3(e * l.n + k[1] - k[0]);
      break;
  }
  return out;
}

int incidence(const LineLabel& l1, const LineLabel& l2) {
  if (l1 == l2) return -1;
  const int p1 = l1.pairing.index();
  const int p2 = l2.pairing.index();
  if (p1 == p2) return (l1.m == l2.m || l1.n == l2.n) ? 1 : 0;

  // Cross-pairing conditions, obtained by eliminating y from the four forms.
  // Symmetric in the two arguments, so order by pairing index first.
  const LineLabel& a = p1 < p2 ? l1 : l2;
  const LineLabel& b = p1 < p2 ? l2 : l1;
  const int pa = a.pairing.index();
  const int pb = b.pairing.index();
  bool meet = false;
  if (pa == 1 && pb == 2) {
    meet = mod3(a.m + b.n - b.m - a.n) == 0;
  } else if (pa == 1 && pb == 3) {
    meet = mod3(a.m + a.n + b.n - b.m) == 0;
  } else {
    meet = mod3(a.m + a.n - b.m - b.n) == 0;
  }
  return meet ? 1 : 0;
}

std::vector<std::vector<int>> incidence_matrix() {
  const auto lines = all_lines();
  std::vector<std::vector<int>> m(27, std::vector<int>(27));
  for (int i = 0; i < 27; ++i) {
    for (int j = 0; j < 27; ++j) m[i][j] = incidence(lines[i], lines[j]);
  }
  return m;
}

std::vector<std::vector<LineLabel>> line_orbits(const DiagonalCubic& s) {
  const auto group = galois_group(s);
  std::array<bool, 27> seen{};
  std::vector<std::vector<LineLabel>> orbits;
  for (const auto& l : all_lines()) {
    if (seen[l.index()]) continue;
    std::vector<LineLabel> orbit;
    for (const auto& g : group) {
      const LineLabel image = line_action(g, l);
      if (!seen[image.index()]) {
        seen[image.index()] = true;
        orbit.push_back(image);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

PicardReport picard_rank(const DiagonalCubic& s) {
  const auto orbits = line_orbits(s);

  // Gram matrix of orbit sums: <O, O'> = sum over l in O, l' in O' of l.l'.
  RationalMatrix gram(orbits.size(), std::vector<Rational>(orbits.size()));
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    for (std::size_t j = i; j < orbits.size(); ++j) {
      int total = 0;
      for (const auto& a : orbits[i]) {
        for (const auto& b : orbits[j]) total += incidence(a, b);
      }
      gram[i][j] = gram[j][i] = total;
    }
  }

  PicardReport report;
  report.rank_over_Q = static_cast<int>(exact_rank(std::move(gram)));
  report.segre_rank_one = segre_rank_one(s);
  for (const auto& o : orbits) report.orbit_sizes.push_back(static_cast<int>(o.size()));
  std::sort(report.orbit_sizes.begin(), report.orbit_sizes.end(), std::greater<>());
  report.agreement = report.segre_rank_one == (report.rank_over_Q == 1);
  report.group_order = galois_group(s).size();
  return report;
}

}  // namespace fermat
