#pragma once

#include <array>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "fermat/bundle_geometry.hpp"
#include "fermat/picard.hpp"

namespace fermat {

struct ClassificationRecord {
  BundlePoint point;
  /// Indexed by pairing index - 1.
  std::array<bool, 3> in_V{};
  std::array<bool, 3> liftable{};
  bool singular_fiber = false;
  /// Picard rank over Q of the smooth fiber through the point.
  std::optional<int> fiber_rank;
  bool in_Z = false;

  bool in_some_V() const noexcept { return in_V[0] || in_V[1] || in_V[2]; }
  bool any_liftable() const noexcept { return liftable[0] || liftable[1] || liftable[2]; }
  /// In Z only through f_tau images.
  bool liftable_only() const noexcept { return in_Z && !in_some_V(); }

  std::string to_string() const;

  friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;
};

/// Per-fiber data shared by every point over the same x.
struct FiberSummary {
  std::array<bool, 3> liftable{};
  bool singular = false;
  std::optional<int> rank;
};

/// Classifies points of X against the exceptional set Z. Fiber data is
/// memoized per x; lookups take a shared lock, inserts an exclusive one.
class Classifier {
 public:
  Classifier() = default;
  Classifier(const Classifier&) = delete;
  Classifier& operator=(const Classifier&) = delete;

  /// Throws NotOnVariety if p is not on X.
  ClassificationRecord classify(const BundlePoint& p);
  bool z_membership(const BundlePoint& p) { return classify(p).in_Z; }

  FiberSummary fiber(const P3Point& x);

  std::size_t cached_fibers() const;

 private:
  struct Hash {
    std::size_t operator()(const P3Point& x) const noexcept;
  };

  mutable std::shared_mutex mutex_;
  std::unordered_map<P3Point, FiberSummary, Hash> cache_;
};

/// Uncached fiber computation.
FiberSummary summarize_fiber(const P3Point& x);

/// Uncached classification.
ClassificationRecord classify_point(const BundlePoint& p);

bool z_membership(const BundlePoint& p);

}  // namespace fermat
