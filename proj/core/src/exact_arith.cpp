#include "fermat/exact_arith.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fermat {

namespace {

Int abs_checked(Int v) {
  if (v == std::numeric_limits<Int>::min()) {
    throw InvalidPoint("coordinate out of range");
  }
  return v < 0 ? -v : v;
}

}  // namespace

template <std::size_t N>
ProjectivePoint<N> normalize(const std::array<Int, N>& raw) {
  Int g = 0;
  for (Int c : raw) {
    if (abs_checked(c) > kMaxCoordinate) {
      throw InvalidPoint("coordinate exceeds supported magnitude 2^31-1");
    }
    g = std::gcd(g, c);
  }
  if (g == 0) throw InvalidPoint("all coordinates are zero");

  std::array<Int, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = raw[i] / g;
  for (Int c : out) {
    if (c == 0) continue;
    if (c < 0) {
      for (Int& v : out) v = -v;
    }
    break;
  }
  return ProjectivePoint<N>(out);
}

template <std::size_t N>
ProjectivePoint<N> normalize(std::span<const Int> raw) {
  if (raw.size() != N) {
    throw InvalidPoint("expected " + std::to_string(N) + " coordinates, got " +
                       std::to_string(raw.size()));
  }
  std::array<Int, N> a{};
  std::copy(raw.begin(), raw.end(), a.begin());
  return normalize<N>(a);
}

template <std::size_t N>
std::optional<ProjectivePoint<N>> ProjectivePoint<N>::if_canonical(
    const std::array<Int, N>& raw) {
  Int g = 0;
  Int first = 0;
  for (Int c : raw) {
    if (first == 0) first = c;
    g = std::gcd(g, c);
  }
  if (g != 1 || first <= 0) return std::nullopt;
  for (Int c : raw) {
    if (c > kMaxCoordinate || c < -kMaxCoordinate) return std::nullopt;
  }
  return ProjectivePoint<N>(raw);
}

template <std::size_t N>
std::string ProjectivePoint<N>::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < N; ++i) {
    if (i) s += ':';
    s += std::to_string(coords_[i]);
  }
  return s;
}

template <std::size_t N>
ProjectivePoint<N> parse_point(std::string_view text) {
  std::array<Int, N> raw{};
  std::size_t field = 0;
  std::size_t pos = 0;
  while (true) {
    const std::size_t colon = text.find(':', pos);
    const std::string_view part =
        text.substr(pos, colon == std::string_view::npos ? std::string_view::npos : colon - pos);
    if (field >= N) {
      throw InvalidPoint("too many coordinates in '" + std::string(text) + "'");
    }
    Int value = 0;
    const char* begin = part.data();
    const char* end = part.data() + part.size();
    if (!part.empty() && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (part.empty() || ec != std::errc() || ptr != end) {
      throw InvalidPoint("bad coordinate '" + std::string(part) + "'");
    }
    raw[field++] = value;
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  if (field != N) {
    throw InvalidPoint("expected " + std::to_string(N) + " coordinates in '" +
                       std::string(text) + "'");
  }
  return normalize<N>(raw);
}

template <std::size_t N>
Int naive_height(const ProjectivePoint<N>& p) noexcept {
  Int h = 0;
  for (Int c : p.coords()) h = std::max(h, c < 0 ? -c : c);
  return h;
}

template class ProjectivePoint<2>;
template class ProjectivePoint<4>;
template ProjectivePoint<2> normalize<2>(const std::array<Int, 2>&);
template ProjectivePoint<4> normalize<4>(const std::array<Int, 4>&);
template ProjectivePoint<2> normalize<2>(std::span<const Int>);
template ProjectivePoint<4> normalize<4>(std::span<const Int>);
template ProjectivePoint<2> parse_point<2>(std::string_view);
template ProjectivePoint<4> parse_point<4>(std::string_view);
template Int naive_height<2>(const ProjectivePoint<2>&) noexcept;
template Int naive_height<4>(const ProjectivePoint<4>&) noexcept;

Int anticanonical_height(const P3Point& x, const P3Point& y) {
  const Wide hx = naive_height(x);
  const Wide h = hx * hx * hx * Wide{naive_height(y)};
  if (h > std::numeric_limits<Int>::max()) {
    throw std::overflow_error("anticanonical height exceeds 64 bits");
  }
  return static_cast<Int>(h);
}

// ---------------------------------------------------------------------------
// Factorization

namespace {

using UWide = unsigned __int128;
using U64 = std::uint64_t;

U64 mulmod(U64 a, U64 b, U64 m) { return static_cast<U64>(UWide{a} * b % m); }

U64 powmod(U64 a, U64 e, U64 m) {
  U64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

U64 isqrt(U64 n) {
  U64 r = static_cast<U64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && UWide{r} * r > n) --r;
  while (UWide{r + 1} * (r + 1) <= n) ++r;
  return r;
}

U64 pollard_rho(U64 n) {
  if (n % 2 == 0) return 2;
  for (U64 c = 1;; ++c) {
    U64 x = 2, y = 2, d = 1;
    auto f = [&](U64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_rec(U64 n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_probable_prime(static_cast<Int>(n))) {
    ++out[static_cast<Int>(n)];
    return;
  }
  const U64 d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

bool is_probable_prime(Int n) {
  if (n < 2) return false;
  const U64 m = static_cast<U64>(n);
  for (U64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (m % p == 0) return m == p;
  }
  U64 d = m - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit inputs.
  for (U64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    U64 x = powmod(a, d, m);
    if (x == 1 || x == m - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, m);
      if (x == m - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n == 0) throw InvalidArgument("cannot factor zero");
  U64 r = n < 0 ? U64(0) - static_cast<U64>(n) : static_cast<U64>(n);
  std::map<Int, int> exps;

  auto strip = [&](U64 p) {
    while (r % p == 0) {
      r /= p;
      ++exps[static_cast<Int>(p)];
    }
  };
  strip(2);
  strip(3);
  // Trial division up to the cube root of what is left.
  for (U64 d = 5; UWide{d} * d * d <= r; d += 6) {
    strip(d);
    strip(d + 2);
  }

  // The cofactor has no prime factor below its cube root, so it is 1, p, p^2
  // or p*q.
  if (r > 1) {
    const U64 s = isqrt(r);
    if (s * s == r) {
      exps[static_cast<Int>(s)] += 2;
    } else {
      factor_rec(r, exps);
    }
  }
  return {exps.begin(), exps.end()};
}

// ---------------------------------------------------------------------------
// CubeClass

void CubeClass::add(Int prime, int exponent) {
  const int e = ((exponents_[prime] + exponent) % 3 + 3) % 3;
  if (e == 0) {
    exponents_.erase(prime);
  } else {
    exponents_[prime] = e;
  }
}

CubeClass CubeClass::of(Int n) {
  CubeClass c;
  for (const auto& [p, e] : factorize(n)) {
    if (e % 3 != 0) c.exponents_[p] = e % 3;
  }
  return c;
}

CubeClass CubeClass::operator*(const CubeClass& other) const {
  CubeClass out = *this;
  for (const auto& [p, e] : other.exponents_) out.add(p, e);
  return out;
}

CubeClass CubeClass::inverse() const {
  CubeClass out;
  for (const auto& [p, e] : exponents_) out.exponents_[p] = 3 - e;
  return out;
}

CubeClass CubeClass::pow(int e) const {
  const int k = ((e % 3) + 3) % 3;
  CubeClass out;
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string CubeClass::to_string() const {
  if (trivial()) return "{}";
  std::string s = "{";
  bool first = true;
  for (const auto& [p, e] : exponents_) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(p) + ":" + std::to_string(e);
  }
  return s + "}";
}

CubeClass cube_class(Int numerator, Int denominator) {
  if (numerator == 0 || denominator == 0) {
    throw InvalidArgument("cube_class of zero or with zero denominator");
  }
  return CubeClass::of(numerator) * CubeClass::of(denominator).inverse();
}

bool is_cube(Int numerator, Int denominator) {
  return cube_class(numerator, denominator).trivial();
}

std::optional<Int> exact_cube_root(Int n) noexcept {
  if (n == 0) return Int{0};
  const bool negative = n < 0;
  const U64 mag = negative ? U64(0) - static_cast<U64>(n) : static_cast<U64>(n);
  U64 r = static_cast<U64>(std::llround(std::cbrt(static_cast<long double>(mag))));
  while (r > 0 && UWide{r} * r * r > mag) --r;
  while (UWide{r + 1} * (r + 1) * (r + 1) <= mag) ++r;
  if (UWide{r} * r * r != mag) return std::nullopt;
  const Int root = static_cast<Int>(r);
  return negative ? -root : root;
}

}  // namespace fermat
