#pragma once

// Maps for which every finite subset (or every interval of N) is
// internally-1-quasi-invariant: case data and a witness selector w with
// w(S) in S and f(S \ {w(S)}) contained in S.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "quasinv/residue.hpp"
#include "quasinv/selfmap.hpp"

namespace quasinv {

// ---------------------------------------------------------------------------
// Finite subsets

enum class SubsetCase { one, two };

struct SubsetClassification {
  SubsetCase kase = SubsetCase::one;
  Point a = 0, b = 0, c = 0;

  /// w(S). Unlisted combinations fall back to min(S).
  Point select(const PointSet& s) const {
    if (s.empty()) throw precondition_error("selector needs a nonempty set");
    const bool ha = s.contains(a), hb = s.contains(b);
    if (kase == SubsetCase::one) {
      if (ha && hb) return b;
      if (ha) return a;
      if (hb) return b;
      return s.min();
    }
    const bool hc = s.contains(c);
    const int count = int(ha) + int(hb) + int(hc);
    if (count == 1) return ha ? a : hb ? b : c;
    if (count == 2) {
      if (ha && hb) return b;
      if (ha && hc) return a;
      return c;
    }
    return s.min();
  }
};

namespace detail {

/// Non-fixed points of a map that moves only finitely many points.
inline std::optional<std::vector<Point>> finite_moved_points(const SelfMap& map) {
  std::vector<Point> moved;
  if (map.is_finite()) {
    for (Point x = 0; x < map.table().size(); ++x)
      if (map.apply(x) != x) moved.push_back(x);
    return moved;
  }
  const auto& d = map.described();
  if (std::any_of(d.shifts.begin(), d.shifts.end(), [](auto c) { return c != 0; }))
    return std::nullopt;
  for (Point x = 0; x < d.prefix_len(); ++x)
    if (map.apply(x) != x) moved.push_back(x);
  return moved;
}

}  // namespace detail

inline std::optional<SubsetClassification> classify_subsets_1qi(const SelfMap& map) {
  if (map.is_finite() && map.table().size() < 3)
    throw domain_too_small("subset classification needs at least 3 points");
  auto moved = detail::finite_moved_points(map);
  if (!moved) return std::nullopt;
  const auto& m = *moved;
  const auto f = [&](Point x) { return map.apply(x); };
  switch (m.size()) {
    case 0:
      return SubsetClassification{SubsetCase::one, 0, 0, 0};
    case 1: {
      const Point p = m[0];
      return SubsetClassification{SubsetCase::one, p, f(p), f(p)};
    }
    case 2: {
      for (Point a : m) {
        const Point b = a == m[0] ? m[1] : m[0];
        if (f(a) == b) return SubsetClassification{SubsetCase::one, a, b, f(b)};
      }
      return std::nullopt;
    }
    case 3: {
      const Point a = m[0], b = f(a), c = f(b);
      if (b != a && c != a && c != b && f(c) == a)
        return SubsetClassification{SubsetCase::two, a, b, c};
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Intervals of N

enum class IntervalCase { one, two, three };

class IntervalClassification {
 public:
  IntervalClassification(SelfMap map, IntervalCase kase, std::optional<std::int64_t> pivot)
      : map_(std::move(map)), seq_(nonfixed_points(map_.described())), kase_(kase), pivot_(pivot) {}

  IntervalCase kase() const noexcept { return kase_; }
  /// n*, absent in case one; may be -1.
  std::optional<std::int64_t> pivot() const noexcept { return pivot_; }
  const EventuallyPeriodicSequence& nonfixed() const noexcept { return seq_; }
  std::optional<Point> b(std::int64_t n) const { return seq_.at(n); }
  std::optional<Point> beta_of_b(std::int64_t n) const {
    auto v = seq_.at(n);
    if (!v) return std::nullopt;
    return map_.apply(*v);
  }

  /// w([lo,hi]). The branch conditions single out at most one non-fixed
  /// point; a second match means the classification is wrong and throws.
  Point select(const Interval& iv) const {
    const auto first = seq_.count_below(iv.lo);
    const auto last = seq_.count_below(iv.hi + 1);  // indices [first, last)
    const std::int64_t split = pivot_ ? *pivot_ : std::numeric_limits<std::int64_t>::max();
    std::optional<Point> chosen;
    auto take = [&](Point x) {
      if (chosen && *chosen != x) throw error("witness selector: branch condition not unique");
      chosen = x;
    };
    for (auto n = first; n < last; ++n) {
      const Point x = *seq_.at(n);
      const Point y = map_.apply(x);
      if (n <= split) {
        if (y > iv.hi) take(x);
      } else if (y < iv.lo) {
        take(x);
      }
      // Case three: b_{n*+1} jumps upward and must be removed when it leaves.
      if (kase_ == IntervalCase::three && n == split + 1 && y > iv.hi) take(x);
    }
    return chosen.value_or(iv.lo);
  }

 private:
  SelfMap map_;
  EventuallyPeriodicSequence seq_;
  IntervalCase kase_;
  std::optional<std::int64_t> pivot_;
};

inline std::optional<IntervalClassification> classify_intervals_1qi(const SelfMap& map) {
  if (!map.is_nat()) throw not_nat_domain("interval classification needs a map on N");
  const auto& d = map.described();
  const auto seq = nonfixed_points(d);
  constexpr Point kInf = std::numeric_limits<Point>::max();
  auto b = [&](std::int64_t n) -> Point {
    if (n < 0) return -1;
    return seq.at(n).value_or(kInf);
  };
  auto beta = [&](std::int64_t n) { return map.apply(b(n)); };
  auto exists = [&](std::int64_t n) { return n >= 0 && seq.at(n).has_value(); };

  // All local conditions repeat with period m above the prefix, so indices
  // with b_n below N + 3m cover every class.
  const Point horizon = d.prefix_len() + 3 * d.modulus;
  auto in_scope = [&](std::int64_t n) { return exists(n) && b(n) < horizon; };

  std::optional<std::int64_t> failure;
  for (std::int64_t n = 0; in_scope(n); ++n) {
    const Point y = beta(n);
    if (!(b(n) < y && y <= b(n + 1))) {
      failure = n;
      break;
    }
  }
  if (!failure) return IntervalClassification(map, IntervalCase::one, std::nullopt);

  const auto f = *failure;
  for (auto k = f + 1; in_scope(k); ++k) {
    const Point y = beta(k);
    if (!(b(k - 1) <= y && y < b(k))) return std::nullopt;
  }
  const Point y = beta(f);
  if (y < b(f)) return IntervalClassification(map, IntervalCase::two, f - 1);
  return IntervalClassification(map, IntervalCase::three, f - 1);
}

// ---------------------------------------------------------------------------
// Intervals with the exclusion condition f(w([a,b])) not in [a,b]

enum class StrictKind { succ, pivot };

struct StrictClassification {
  StrictKind kind = StrictKind::succ;
  Point pivot = 0;  // n*
  Point target = 0;  // u = f(n*)
  // Whether f(w(I)) lies outside I for every interval. Always true for the
  // successor. A pivot map leaves [0, max(n*, u)] invariant, so no w can
  // push its image out there; the interval is kept as a counterexample.
  bool exclusion_holds = true;
  std::optional<Interval> counterexample;

  /// w([lo,hi]): hi up to the pivot, lo above it, the 1-quasi-invariance
  /// witness for straddling intervals.
  Point select(const Interval& iv) const {
    if (kind == StrictKind::succ || iv.hi <= pivot) return iv.hi;
    if (iv.lo >= pivot + 1) return iv.lo;
    // Straddling interval: pivot leaves only if u is outside.
    if (!iv.contains(target)) return pivot;
    return iv.lo;
  }
};

inline std::optional<StrictClassification> classify_strict_intervals_1qi(const SelfMap& map) {
  if (!map.is_nat()) throw not_nat_domain("interval classification needs a map on N");
  const auto& d = map.described();
  const auto n = d.prefix_len();
  auto all_shifts = [&](std::int64_t s) {
    return std::all_of(d.shifts.begin(), d.shifts.end(), [&](auto c) { return c == s; });
  };
  if (all_shifts(1)) {
    for (Point x = 0; x < n; ++x)
      if (map.apply(x) != x + 1) return std::nullopt;
    return StrictClassification{};
  }
  if (!all_shifts(-1)) return std::nullopt;
  Point star = 0;
  while (star < n && map.apply(star) == star + 1) ++star;
  const Point u = map.apply(star);
  if (u == star) return std::nullopt;
  for (Point x = star + 1; x < n; ++x)
    if (map.apply(x) != x - 1) return std::nullopt;
  StrictClassification res;
  res.kind = StrictKind::pivot;
  res.pivot = star;
  res.target = u;
  res.exclusion_holds = false;
  res.counterexample = Interval(0, std::max(star, u));
  return res;
}

}  // namespace quasinv
