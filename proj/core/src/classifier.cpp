#include "fermat/classifier.hpp"

#include <mutex>
#include <sstream>

namespace fermat {

namespace {

ClassificationRecord assemble(const BundlePoint& p, const FiberSummary& f) {
  if (!on_X(p.x, p.y)) {
    throw NotOnVariety("point (" + p.x.to_string() + ", " + p.y.to_string() + ") is not on X");
  }
  ClassificationRecord r{.point = p, .in_V = {}, .liftable = {}, .singular_fiber = false, .fiber_rank = std::nullopt, .in_Z = false};
  for (Pairing tau : Pairing::all()) r.in_V[tau.index() - 1] = in_V(p, tau);
  r.liftable = f.liftable;
  r.singular_fiber = f.singular;
  r.fiber_rank = f.rank;
  r.in_Z = r.in_some_V() || r.any_liftable();
  return r;
}

}  // namespace

std::string ClassificationRecord::to_string() const {
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::ostringstream os;
  os << "x=" << point.x.to_string() << "\n"
     << "y=" << point.y.to_string() << "\n"
     << "height=" << anticanonical_height(point.x, point.y) << "\n";
  for (int i = 0; i < 3; ++i) os << "in_V" << i + 1 << "=" << b(in_V[i]) << "\n";
  for (int i = 0; i < 3; ++i) os << "liftable" << i + 1 << "=" << b(liftable[i]) << "\n";
  os << "singular_fiber=" << b(singular_fiber) << "\n"
     << "rank=" << (fiber_rank ? std::to_string(*fiber_rank) : std::string("n/a")) << "\n"
     << "in_Z=" << b(in_Z) << "\n";
  return os.str();
}

FiberSummary summarize_fiber(const P3Point& x) {
  FiberSummary f;
  for (Pairing tau : Pairing::all()) f.liftable[tau.index() - 1] = liftable(x, tau);
  f.singular = over_singular_fiber(x);
  if (!f.singular) f.rank = picard_rank(DiagonalCubic::fiber_over(x)).rank_over_Q;
  return f;
}

ClassificationRecord classify_point(const BundlePoint& p) {
  return assemble(p, summarize_fiber(p.x));
}

bool z_membership(const BundlePoint& p) { return classify_point(p).in_Z; }

std::size_t Classifier::Hash::operator()(const P3Point& x) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Int c : x.coords()) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

FiberSummary Classifier::fiber(const P3Point& x) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(x); it != cache_.end()) return it->second;
  }
  FiberSummary computed = summarize_fiber(x);
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(x, std::move(computed)).first->second;
}

ClassificationRecord Classifier::classify(const BundlePoint& p) {
  return assemble(p, fiber(p.x));
}

std::size_t Classifier::cached_fibers() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

}  // namespace fermat
