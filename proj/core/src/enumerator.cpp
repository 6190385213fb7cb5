#include "fermat/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace fermat {

namespace {

// Runs fn(i) for i in [0, count) on `workers` threads pulling indices from a
// shared counter.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i, 0u);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i, w);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

// Core fiber loop. Acc is Int when every partial sum provably fits in 63
// bits, Wide otherwise.
template <typename Acc>
void scan_fiber(const P3Point& x, Int bound, std::vector<P3Point>& out) {
  int solved = 3;
  while (x[solved] == 0) --solved;
  std::array<int, 3> free{};
  for (int i = 0, k = 0; i < 4; ++i) {
    if (i != solved) free[k++] = i;
  }

  std::vector<Acc> cube(2 * bound + 1);
  for (Int v = -bound; v <= bound; ++v) cube[v + bound] = Acc{v} * v * v;
  const Acc bound_cube = Acc{bound} * bound * bound;
  const Acc lead = x[solved];
  const Acc c0 = x[free[0]], c1 = x[free[1]], c2 = x[free[2]];

  // y -> -y is the same projective point; when y_0 is free, keep y_0 >= 0.
  const Int lo0 = free[0] == 0 ? 0 : -bound;

  std::array<Int, 4> y{};
  for (Int a = lo0; a <= bound; ++a) {
    const Acc s0 = c0 * cube[a + bound];
    y[free[0]] = a;
    for (Int b = -bound; b <= bound; ++b) {
      const Acc s1 = s0 + c1 * cube[b + bound];
      y[free[1]] = b;
      for (Int c = -bound; c <= bound; ++c) {
        const Acc s = s1 + c2 * cube[c + bound];
        if (s % lead != 0) continue;
        const Acc q = -s / lead;
        if (q > bound_cube || q < -bound_cube) continue;
        const auto qd = static_cast<double>(q);
        const Int r = static_cast<Int>(std::llround(std::cbrt(qd)));
        if (Acc{r} * r * r != q) continue;
        y[free[2]] = c;
        y[solved] = r;
        if (auto p = P3Point::if_canonical(y)) out.push_back(*p);
      }
    }
  }
}

}  // namespace

std::vector<P3Point> enumerate_fiber(const P3Point& x, Int y_height_bound) {
  std::vector<P3Point> out;
  if (y_height_bound < 1) return out;
  if (y_height_bound > kMaxFiberBound) {
    throw InvalidArgument("fiber height bound exceeds " + std::to_string(kMaxFiberBound));
  }
  // |x_i y_i^3| summed over three coordinates must stay below 2^62.
  const Wide worst = Wide{naive_height(x)} * y_height_bound * y_height_bound * y_height_bound * 4;
  if (worst < (Wide{1} << 62)) {
    scan_fiber<Int>(x, y_height_bound, out);
  } else {
    scan_fiber<Wide>(x, y_height_bound, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<P3Point> projective_points_up_to(Int bound) {
  std::vector<P3Point> out;
  if (bound < 1) return out;
  std::array<Int, 4> v{};
  for (v[0] = -bound; v[0] <= bound; ++v[0]) {
    for (v[1] = -bound; v[1] <= bound; ++v[1]) {
      for (v[2] = -bound; v[2] <= bound; ++v[2]) {
        for (v[3] = -bound; v[3] <= bound; ++v[3]) {
          if (auto p = P3Point::if_canonical(v)) out.push_back(*p);
        }
      }
    }
  }
  return out;
}

Int integer_cube_root_floor(Int B) {
  if (B < 1) return 0;
  Int h = static_cast<Int>(std::cbrt(static_cast<double>(B)));
  while (Wide{h + 1} * (h + 1) * (h + 1) <= B) ++h;
  while (h > 0 && Wide{h} * h * h > B) --h;
  return h;
}

namespace {

Int fiber_bound_for(const P3Point& x, Int height_bound) {
  const Int h = naive_height(x);
  return height_bound / (h * h * h);
}

}  // namespace

void enumerate_X(Int height_bound, const PointSink& sink) {
  for (const auto& x : projective_points_up_to(integer_cube_root_floor(height_bound))) {
    for (const auto& y : enumerate_fiber(x, fiber_bound_for(x, height_bound))) {
      sink(BundlePoint{x, y}, anticanonical_height(x, y));
    }
  }
}

std::vector<BundlePoint> enumerate_X(Int height_bound, unsigned workers) {
  const auto xs = projective_points_up_to(integer_cube_root_floor(height_bound));
  std::vector<std::vector<P3Point>> fibers(xs.size());
  parallel_for(xs.size(), workers, [&](std::size_t i, unsigned) {
    fibers[i] = enumerate_fiber(xs[i], fiber_bound_for(xs[i], height_bound));
  });
  std::vector<BundlePoint> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (const auto& y : fibers[i]) out.push_back({xs[i], y});
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string_view label(CountClass c) {
  switch (c) {
    case CountClass::All: return "ALL";
    case CountClass::InZ: return "IN_Z";
    case CountClass::NotInZ: return "NOT_IN_Z";
    case CountClass::InSomeV: return "IN_SOME_V";
    case CountClass::LiftableOnly: return "LIFTABLE_ONLY";
    case CountClass::SingularFiber: return "SINGULAR_FIBER";
  }
  return "?";
}

std::vector<CountClass> classes_of(const ClassificationRecord& r) {
  std::vector<CountClass> out;
  out.push_back(r.in_Z ? CountClass::InZ : CountClass::NotInZ);
  if (r.in_some_V()) out.push_back(CountClass::InSomeV);
  if (r.liftable_only()) out.push_back(CountClass::LiftableOnly);
  if (r.singular_fiber) out.push_back(CountClass::SingularFiber);
  return out;
}

CountSeries count_series(std::span<const Int> bounds, Classifier& classifier, unsigned workers) {
  if (bounds.empty()) throw InvalidArgument("count_series: empty bounds list");
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (bounds[i] < 1) throw InvalidArgument("count_series: bounds must be positive");
    if (i > 0 && bounds[i] <= bounds[i - 1]) {
      throw InvalidArgument("count_series: bounds must be strictly ascending");
    }
  }
  const Int top = bounds.back();
  const std::size_t nb = bounds.size();
  const std::size_t nc = kCountClasses.size();
  const auto xs = projective_points_up_to(integer_cube_root_floor(top));

  // Per-worker histograms of "first bound index reached"; merged by addition.
  const unsigned pool = std::max(1u, workers);
  std::vector<std::vector<std::uint64_t>> local(pool, std::vector<std::uint64_t>(nc * nb, 0));

  parallel_for(xs.size(), pool, [&](std::size_t i, unsigned w) {
    const P3Point& x = xs[i];
    const Int hx = naive_height(x);
    auto& hist = local[w];
    for (const auto& y : enumerate_fiber(x, top / (hx * hx * hx))) {
      const Int height = anticanonical_height(x, y);
      const auto slot = static_cast<std::size_t>(
          std::lower_bound(bounds.begin(), bounds.end(), height) - bounds.begin());
      const ClassificationRecord r = classifier.classify({x, y});
      ++hist[static_cast<std::size_t>(CountClass::All) * nb + slot];
      for (CountClass c : classes_of(r)) ++hist[static_cast<std::size_t>(c) * nb + slot];
    }
  });

  CountSeries series;
  series.bounds.assign(bounds.begin(), bounds.end());
  for (std::size_t c = 0; c < nc; ++c) {
    auto& row = series.counts[c];
    row.assign(nb, 0);
    std::uint64_t running = 0;
    for (std::size_t b = 0; b < nb; ++b) {
      for (const auto& hist : local) running += hist[c * nb + b];
      row[b] = running;
    }
  }
  return series;
}

std::string to_csv(const CountSeries& series) {
  std::ostringstream os;
  os << "B";
  for (CountClass c : kCountClasses) os << ',' << label(c);
  os << '\n';
  for (std::size_t i = 0; i < series.bounds.size(); ++i) {
    os << series.bounds[i];
    for (CountClass c : kCountClasses) os << ',' << series.of(c)[i];
    os << '\n';
  }
  return os.str();
}

CountSeries parse_csv(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::string expected = "B";
  for (CountClass c : kCountClasses) expected += "," + std::string(label(c));
  if (line != expected) throw std::runtime_error("unexpected CSV header: " + line);

  CountSeries series;
  for (auto& row : series.counts) row.clear();
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string field;
    std::vector<long long> values;
    while (std::getline(fields, field, ',')) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(field, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != field.size() || field.empty() || v < 0) {
        throw std::runtime_error("CSV line " + std::to_string(lineno) + ": bad field '" + field + "'");
      }
      values.push_back(v);
    }
    if (values.size() != 1 + kCountClasses.size()) {
      throw std::runtime_error("CSV line " + std::to_string(lineno) + ": expected 7 fields");
    }
    series.bounds.push_back(values[0]);
    for (std::size_t c = 0; c < kCountClasses.size(); ++c) {
      series.counts[c].push_back(static_cast<std::uint64_t>(values[c + 1]));
    }
  }
  return series;
}

std::string point_dump_line(const ClassificationRecord& r) {
  std::string flags;
  for (CountClass c : classes_of(r)) {
    if (!flags.empty()) flags += ',';
    flags += label(c);
  }
  return r.point.x.to_string() + "|" + r.point.y.to_string() + "|" +
         std::to_string(anticanonical_height(r.point.x, r.point.y)) + "|" + flags;
}

// ---------------------------------------------------------------------------

bool line_on_X(const LineSpec& line) {
  const auto& o = line.pairing.order();
  const Wide r1 = line.first_ratio, r2 = line.second_ratio;
  return Wide{line.x[o[0]]} * r1 * r1 * r1 + line.x[o[1]] == 0 &&
         Wide{line.x[o[2]]} * r2 * r2 * r2 + line.x[o[3]] == 0;
}

P3Point line_point(const LineSpec& line, const P1Point& st) {
  const auto& o = line.pairing.order();
  std::array<Int, 4> y{};
  y[o[0]] = line.first_ratio * st[0];
  y[o[1]] = st[0];
  y[o[2]] = line.second_ratio * st[1];
  y[o[3]] = st[1];
  return normalize(y);
}

std::uint64_t count_p1_points(Int bound) {
  if (bound < 1) return 0;
  // Moebius inversion over the box [-B, B]^2.
  std::vector<int> mu(bound + 1, 1);
  std::vector<bool> composite(bound + 1, false);
  for (Int p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    for (Int k = p; k <= bound; k += p) {
      if (k > p) composite[k] = true;
      mu[k] = -mu[k];
    }
    for (Int k = p * p; k <= bound; k += p * p) mu[k] = 0;
  }
  long long primitive = 0;
  for (Int d = 1; d <= bound; ++d) {
    if (mu[d] == 0) continue;
    const long long side = 2 * (bound / d) + 1;
    primitive += mu[d] * (side * side - 1);
  }
  return static_cast<std::uint64_t>(primitive / 2);
}

std::uint64_t line_count(const LineSpec& line, Int height_bound) {
  if (!line_on_X(line)) throw InvalidArgument("line_count: line does not lie on X");
  return count_p1_points(height_bound);
}

}  // namespace fermat
