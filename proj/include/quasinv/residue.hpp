#pragma once

// Residue dynamics of a described N-map above its prefix.
//
// For x >= N the next residue depends only on the current one:
// (x + c_r) mod m = (r + c_r) mod m. The residue graph r -> sigma(r) is a
// functional graph on Z_m, and along any of its cycles the height changes by
// the cycle's drift D per period. Since the residue returns after one period,
// m divides D.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <vector>

#include "quasinv/selfmap.hpp"

namespace quasinv {

struct ResidueCycle {
  std::vector<std::int64_t> residues;  // in orbit order, starting at the smallest
  std::int64_t drift = 0;              // sum of shifts over one period
};

struct ResidueDynamics {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> next;       // sigma(r)
  std::vector<int> cycle_of;            // cycle index, -1 when r is off every cycle
  std::vector<int> terminal;            // cycle eventually reached from r
  std::vector<int> indegree;            // |sigma^{-1}(r)|
  std::vector<ResidueCycle> cycles;
  std::vector<std::int64_t> min_offset;  // on-cycle r: min partial shift sum over a period
  std::int64_t max_abs_shift = 0;

  std::int64_t terminal_drift(std::int64_t r) const {
    return cycles[static_cast<std::size_t>(terminal[static_cast<std::size_t>(r)])].drift;
  }

  /// Number of pairwise-disjoint families of infinite orbits: each positive
  /// cycle with drift D carries D/m of them.
  std::int64_t infinite_class_count() const {
    std::int64_t n = 0;
    for (const auto& c : cycles)
      if (c.drift > 0) n += c.drift / modulus;
    return n;
  }

  bool has_cycle_with_drift(auto pred) const {
    return std::any_of(cycles.begin(), cycles.end(), [&](const auto& c) { return pred(c.drift); });
  }
};

inline ResidueDynamics analyze_residues(const DescribedNatMap& d) {
  ResidueDynamics rd;
  const auto m = d.modulus;
  const auto mz = static_cast<std::size_t>(m);
  rd.modulus = m;
  rd.next.resize(mz);
  rd.indegree.assign(mz, 0);
  for (std::int64_t r = 0; r < m; ++r) {
    auto s = ((r + d.shifts[static_cast<std::size_t>(r)]) % m + m) % m;
    rd.next[static_cast<std::size_t>(r)] = s;
    ++rd.indegree[static_cast<std::size_t>(s)];
    rd.max_abs_shift = std::max(rd.max_abs_shift, std::abs(d.shifts[static_cast<std::size_t>(r)]));
  }

  rd.cycle_of.assign(mz, -1);
  std::vector<int> state(mz, 0);  // 0 new, 1 on stack, 2 done
  for (std::int64_t r0 = 0; r0 < m; ++r0) {
    if (state[static_cast<std::size_t>(r0)] != 0) continue;
    std::vector<std::int64_t> path;
    auto r = r0;
    while (state[static_cast<std::size_t>(r)] == 0) {
      state[static_cast<std::size_t>(r)] = 1;
      path.push_back(r);
      r = rd.next[static_cast<std::size_t>(r)];
    }
    if (state[static_cast<std::size_t>(r)] == 1) {
      ResidueCycle cyc;
      auto it = std::find(path.begin(), path.end(), r);
      cyc.residues.assign(it, path.end());
      for (auto q : cyc.residues) cyc.drift += d.shifts[static_cast<std::size_t>(q)];
      std::rotate(cyc.residues.begin(),
                  std::min_element(cyc.residues.begin(), cyc.residues.end()),
                  cyc.residues.end());
      const int id = static_cast<int>(rd.cycles.size());
      for (auto q : cyc.residues) rd.cycle_of[static_cast<std::size_t>(q)] = id;
      rd.cycles.push_back(std::move(cyc));
    }
    for (auto q : path) state[static_cast<std::size_t>(q)] = 2;
  }

  rd.terminal.assign(mz, -1);
  for (std::int64_t r = 0; r < m; ++r) {
    auto q = r;
    while (rd.cycle_of[static_cast<std::size_t>(q)] < 0) q = rd.next[static_cast<std::size_t>(q)];
    rd.terminal[static_cast<std::size_t>(r)] = rd.cycle_of[static_cast<std::size_t>(q)];
  }

  rd.min_offset.assign(mz, 0);
  for (const auto& cyc : rd.cycles) {
    for (auto start : cyc.residues) {
      std::int64_t acc = 0;
      std::int64_t lo = 0;
      auto q = start;
      for (std::size_t k = 0; k < cyc.residues.size(); ++k) {
        lo = std::min(lo, acc);
        acc += d.shifts[static_cast<std::size_t>(q)];
        q = rd.next[static_cast<std::size_t>(q)];
      }
      rd.min_offset[static_cast<std::size_t>(start)] = lo;
    }
  }
  return rd;
}

/// A set of naturals that agrees with a union of residue classes mod m from
/// `start` on, listed in increasing order as p_0 < p_1 < ...
class EventuallyPeriodicSequence {
 public:
  EventuallyPeriodicSequence(std::vector<Point> head, Point start, std::int64_t modulus,
                             std::vector<Point> block)
      : head_(std::move(head)), block_(std::move(block)), start_(start), modulus_(modulus) {}

  bool infinite() const noexcept { return !block_.empty(); }

  /// Number of elements when finite.
  std::optional<std::size_t> size() const {
    if (infinite()) return std::nullopt;
    return head_.size();
  }

  /// p_n, or empty past the end.
  std::optional<Point> at(std::int64_t n) const {
    if (n < 0) return std::nullopt;
    const auto un = static_cast<std::size_t>(n);
    if (un < head_.size()) return head_[un];
    if (!infinite()) return std::nullopt;
    const auto k = un - head_.size();
    return block_[k % block_.size()] + static_cast<Point>(k / block_.size()) * modulus_;
  }

  /// Number of elements below x.
  std::int64_t count_below(Point x) const {
    auto p = std::lower_bound(head_.begin(), head_.end(), x) - head_.begin();
    if (x <= start_ || !infinite()) return p;
    const Point k = x - start_;
    const auto in_last = std::count_if(block_.begin(), block_.end(),
                                       [&](Point t) { return t - start_ < k % modulus_; });
    return p + (k / modulus_) * static_cast<std::int64_t>(block_.size()) + in_last;
  }

  bool contains(Point x) const { return count_below(x + 1) > count_below(x); }

  /// All elements below bound.
  std::vector<Point> below(Point bound) const {
    std::vector<Point> out;
    for (std::int64_t n = 0;; ++n) {
      auto v = at(n);
      if (!v || *v >= bound) break;
      out.push_back(*v);
    }
    return out;
  }

 private:
  std::vector<Point> head_;   // elements below start
  std::vector<Point> block_;  // elements in [start, start + m)
  Point start_;
  std::int64_t modulus_;
};

namespace detail {

template <class Pred>
EventuallyPeriodicSequence points_where(const DescribedNatMap& d, Pred moved) {
  std::vector<Point> head, block;
  for (Point x = 0; x < d.prefix_len(); ++x)
    if (moved(x, d.prefix[static_cast<std::size_t>(x)])) head.push_back(x);
  for (Point x = d.prefix_len(); x < d.prefix_len() + d.modulus; ++x)
    if (moved(x, x + d.shift_at(x))) block.push_back(x);
  return EventuallyPeriodicSequence(std::move(head), d.prefix_len(), d.modulus, std::move(block));
}

}  // namespace detail

inline EventuallyPeriodicSequence nonfixed_points(const DescribedNatMap& d) {
  return detail::points_where(d, [](Point x, Point y) { return x != y; });
}

inline EventuallyPeriodicSequence fixed_points(const DescribedNatMap& d) {
  return detail::points_where(d, [](Point x, Point y) { return x == y; });
}

}  // namespace quasinv
