#pragma once

// Ground truth by direct search: all finite maps of a given size, witness
// tables by exhaustion, naive orbit simulation, and seeded random N-maps.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "quasinv/selfmap.hpp"

namespace quasinv {

// ---------------------------------------------------------------------------
// Finite maps

/// All n^n tables on [0, n) in lexicographic order.
class FiniteMapRange {
 public:
  explicit FiniteMapRange(Point n) : n_(n) {
    if (n < 1 || n > 7) throw bound_too_large("finite map enumeration needs 1 <= n <= 7");
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SelfMap;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = SelfMap;

    iterator() = default;
    explicit iterator(Point n) : table_(static_cast<std::size_t>(n), 0), done_(false) {}

    SelfMap operator*() const { return SelfMap::finite(table_); }
    iterator& operator++() {
      const auto n = static_cast<Point>(table_.size());
      for (auto i = table_.size(); i-- > 0;) {
        if (++table_[i] < n) return *this;
        table_[i] = 0;
      }
      done_ = true;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    std::vector<Point> table_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }
  std::uint64_t count() const {
    std::uint64_t c = 1;
    for (Point i = 0; i < n_; ++i) c *= static_cast<std::uint64_t>(n_);
    return c;
  }

 private:
  Point n_;
};

inline FiniteMapRange enumerate_finite_maps(Point n) { return FiniteMapRange(n); }

namespace oracle {

using Mask = std::uint32_t;

inline PointSet mask_set(Mask m) { return PointSet::from_mask(m); }

inline Mask set_mask(const PointSet& s) {
  Mask m = 0;
  for (Point x : s) m |= Mask{1} << x;
  return m;
}

/// Image of a subset of [0, n) as a bitmask.
inline Mask image_mask(const std::vector<Point>& t, Mask s) {
  Mask out = 0;
  for (Mask rest = s; rest; rest &= rest - 1) out |= Mask{1} << t[static_cast<std::size_t>(std::countr_zero(rest))];
  return out;
}

/// True when f(S \ {drop}) is inside S; drop = -1 removes nothing.
inline bool closed_without(const std::vector<Point>& t, Mask s, int drop) {
  Mask rest = s;
  if (drop >= 0) rest &= ~(Mask{1} << drop);
  return (image_mask(t, rest) & ~s) == 0;
}

}  // namespace oracle

/// First nonempty subset (in increasing mask order) with no admissible
/// witness, i.e. no a in S with f(S \ {a}) inside S.
inline std::optional<PointSet> first_w_failure(const SelfMap& map) {
  if (!map.is_finite()) throw precondition_error("witness tables need a finite map");
  const auto& t = map.table().table;
  const auto n = t.size();
  if (n > 7) throw bound_too_large("witness tables need n <= 7");
  for (oracle::Mask s = 1; s < (oracle::Mask{1} << n); ++s) {
    bool ok = false;
    for (int a = 0; a < static_cast<int>(n) && !ok; ++a)
      if ((s >> a) & 1) ok = oracle::closed_without(t, s, a);
    if (!ok) return oracle::mask_set(s);
  }
  return std::nullopt;
}

/// For each nonempty subset (indexed by bitmask) the smallest admissible
/// witness; empty if some subset has none. Entry 0 is unused (-1).
inline std::optional<std::vector<Point>> brute_force_w_table(const SelfMap& map) {
  if (!map.is_finite()) throw precondition_error("witness tables need a finite map");
  const auto& t = map.table().table;
  const auto n = t.size();
  if (n > 7) throw bound_too_large("witness tables need n <= 7");
  std::vector<Point> table(std::size_t{1} << n, -1);
  for (oracle::Mask s = 1; s < (oracle::Mask{1} << n); ++s) {
    for (int a = 0; a < static_cast<int>(n); ++a) {
      if (((s >> a) & 1) && oracle::closed_without(t, s, a)) {
        table[s] = a;
        break;
      }
    }
    if (table[s] < 0) return std::nullopt;
  }
  return table;
}

/// First interval inside [0, hi] (ordered by hi, then lo) where more than
/// one point leaves under f, so no witness exists.
inline std::optional<Interval> interval_w_failure(const SelfMap& map, Point hi) {
  for (Point b = 0; b <= hi; ++b)
    for (Point a = 0; a <= b; ++a) {
      int out = 0;
      for (Point x = a; x <= b && out < 2; ++x) {
        const Point y = map(x);
        if (y < a || y > b) ++out;
      }
      if (out >= 2) return Interval(a, b);
    }
  return std::nullopt;
}

/// Every interval inside [0, hi] has a witness w whose image also leaves.
inline bool strict_interval_w_exists(const SelfMap& map, Point hi) {
  for (Point b = 0; b <= hi; ++b)
    for (Point a = 0; a <= b; ++a) {
      std::vector<Point> out;
      for (Point x = a; x <= b; ++x) {
        const Point y = map(x);
        if (y < a || y > b) out.push_back(x);
      }
      if (out.size() != 1) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Naive orbit simulation

namespace oracle {

/// a, f(a), ..., the first k iterates.
inline std::vector<Point> iterates(const SelfMap& map, Point a, std::size_t k) {
  std::vector<Point> v;
  v.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    v.push_back(a);
    a = map(a);
  }
  return v;
}

/// Simulated orbit of length k with first-visit indices.
struct Trace {
  std::vector<Point> seq;
  std::unordered_map<Point, std::size_t> first;
  bool repeats = false;

  bool contains(Point y) const { return first.count(y) != 0; }
  std::optional<std::size_t> index(Point y) const {
    auto it = first.find(y);
    if (it == first.end()) return std::nullopt;
    return it->second;
  }
};

inline Trace trace(const SelfMap& map, Point a, std::size_t k) {
  Trace t;
  t.seq.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (!t.first.emplace(a, i).second) {
      t.repeats = true;
      break;
    }
    t.seq.push_back(a);
    a = map(a);
  }
  return t;
}

/// No repeat among the first k iterates.
inline bool looks_infinite(const SelfMap& map, Point a, std::size_t k = 4000) {
  return !trace(map, a, k).repeats;
}

/// Number of points of [0, w) missing from a simulated orbit.
inline std::size_t missing_below(const Trace& t, Point w) {
  std::size_t missing = 0;
  for (Point y = 0; y < w; ++y)
    if (!t.contains(y)) ++missing;
  return missing;
}

}  // namespace oracle

// ---------------------------------------------------------------------------
// Random described maps

struct RandomMapParams {
  Point max_prefix_len = 6;
  std::int64_t max_modulus = 3;
  std::int64_t max_shift = 3;
  Point max_prefix_value = 12;
};

/// Deterministic in (seed, params); always valid (shifts are clamped so the
/// prefix length plus every shift is a natural number).
inline SelfMap random_described_map(std::uint64_t seed, const RandomMapParams& p = {}) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  const Point n = uniform(0, p.max_prefix_len);
  const auto m = uniform(1, std::max<std::int64_t>(1, p.max_modulus));
  std::vector<Point> prefix;
  for (Point i = 0; i < n; ++i) prefix.push_back(uniform(0, p.max_prefix_value));
  std::vector<std::int64_t> shifts;
  for (std::int64_t r = 0; r < m; ++r) shifts.push_back(std::max(uniform(-p.max_shift, p.max_shift), -n));
  return SelfMap::nat(std::move(prefix), std::move(shifts));
}

/// Named N-maps exercised by the suite and the acceptance run.
inline std::vector<std::pair<std::string, SelfMap>> named_maps() {
  return {
      {"succ", maps::succ()},
      {"id", maps::identity_nat()},
      {"shift2", maps::shift_by(2)},
      {"remark", maps::remark_conjugate()},
      {"bullet", maps::bullet()},
      {"fixed-zero-succ", maps::fixed_zero_then_succ()},
      {"pivot-2-5", maps::pivot(2, 5)},
      {"pivot-3-0", maps::pivot(3, 0)},
      {"jump-then-down", SelfMap::nat({2}, {-1})},
      {"fixed-jump-then-down", SelfMap::nat({0, 5}, {-1})},
      {"round-up-even", maps::round_up_to_even()},
      {"evens-with-jumps", SelfMap::nat({6, 4, 2}, {0, 1})},
      {"z-chain", SelfMap::nat({2, 0}, {2, -2})},
      {"descend-to-zero", SelfMap::nat({0}, {-1})},
      {"two-families", SelfMap::nat({}, {1, 3})},
      {"swap-then-succ", SelfMap::nat({1, 0}, {1})},
  };
}

/// Named maps followed by `samples` random maps with seeds seed, seed+1, ...
inline std::vector<SelfMap> described_corpus(std::uint64_t seed, std::size_t samples,
                                             const RandomMapParams& p = {}) {
  std::vector<SelfMap> out;
  for (auto& [name, m] : named_maps()) out.push_back(m);
  for (std::size_t i = 0; i < samples; ++i) out.push_back(random_described_map(seed + i, p));
  return out;
}

}  // namespace quasinv
