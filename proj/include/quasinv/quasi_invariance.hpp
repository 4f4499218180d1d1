#pragma once

// Invariant, internally-k- and externally-k-quasi-invariant sets, and the
// decision "every large enough finite set (or interval) is invariant".

#include <cstdint>
#include <optional>
#include <vector>

#include "quasinv/selfmap.hpp"

namespace quasinv {

struct QuasiInvarianceReport {
  bool holds = false;
  // internal: the removal set P (only when holds); external: f(L) \ L.
  std::optional<PointSet> witness;
};

/// Points of `lambda` whose image leaves `lambda`.
inline PointSet escapees(const SelfMap& map, const PointSet& lambda) {
  std::vector<Point> out;
  for (Point x : lambda)
    if (!lambda.contains(map(x))) out.push_back(x);
  return PointSet(std::move(out));
}

inline bool is_invariant(const SelfMap& map, const PointSet& lambda) {
  for (Point x : lambda)
    if (!lambda.contains(map(x))) return false;
  return true;
}

/// Every admissible P must contain the escapees, and removing exactly them
/// works, so the escapee set is the unique size-minimal witness.
inline QuasiInvarianceReport internal_quasi_invariant(const SelfMap& map, const PointSet& lambda,
                                                      std::int64_t k) {
  if (lambda.empty()) throw precondition_error("quasi-invariance needs a nonempty set");
  if (k < 0) throw precondition_error("k must be >= 0");
  auto e = escapees(map, lambda);
  if (static_cast<std::int64_t>(e.size()) > k) return {false, std::nullopt};
  return {true, std::move(e)};
}

inline QuasiInvarianceReport external_quasi_invariant(const SelfMap& map, const PointSet& lambda,
                                                      std::int64_t k) {
  if (lambda.empty()) throw precondition_error("quasi-invariance needs a nonempty set");
  if (k < 0) throw precondition_error("k must be >= 0");
  auto excess = image(map, lambda).minus(lambda);
  const bool ok = static_cast<std::int64_t>(excess.size()) <= k;
  return {ok, std::move(excess)};
}

enum class Scope { subsets, intervals };

/// True iff every finite set with at least k elements (scope subsets), or
/// every interval of N with at least k points (scope intervals), is invariant.
///
/// For subsets this is "map is the identity" unless k equals the domain
/// size, where only the whole domain qualifies. For intervals a point x with
/// x < f(x) <= k-1 cannot be separated from its image by an interval of
/// length >= k, so such bumps near 0 are allowed when k >= 2.
inline bool identity_decision(const SelfMap& map, Scope scope, std::int64_t k) {
  if (k < 1) throw precondition_error("k must be >= 1");
  if (scope == Scope::subsets) {
    if (map.is_finite()) {
      const auto n = map.table().size();
      if (k > n) throw precondition_error("k exceeds the domain size");
      return k == n || map.is_identity();
    }
    return map.is_identity();
  }
  if (!map.is_nat()) throw not_nat_domain("interval scope needs a map on N");
  const auto& d = map.described();
  for (auto c : d.shifts)
    if (c != 0) return false;
  for (Point x = 0; x < d.prefix_len(); ++x) {
    const Point y = d.prefix[static_cast<std::size_t>(x)];
    if (y == x) continue;
    if (y < x || y > k - 1) return false;
  }
  return true;
}

}  // namespace quasinv
