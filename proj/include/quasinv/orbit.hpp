#pragma once

// Forward orbits: tail/cycle decomposition, certified infinitude, hitting
// times, orbit intersection, the nearest common point xi, and the predicate
// "every two infinite orbits intersect".

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "quasinv/residue.hpp"
#include "quasinv/selfmap.hpp"

namespace quasinv {

/// Finite evidence that an orbit never repeats: from `entry_height` on the
/// trajectory follows `residue_cycle`, stays >= N, and climbs by `drift` > 0
/// every period.
struct DriftCertificate {
  Point entry_height = 0;
  std::vector<std::int64_t> residue_cycle;
  std::vector<std::int64_t> offsets;  // phi^k(entry) - entry for k < period
  std::int64_t drift = 0;

  std::size_t period() const noexcept { return residue_cycle.size(); }
};

struct FiniteOrbit {
  std::vector<Point> tail;
  std::vector<Point> cycle;
};

struct InfiniteOrbit {
  std::vector<Point> head;  // iterates before entry_height
  DriftCertificate certificate;
};

class OrbitResult {
 public:
  explicit OrbitResult(FiniteOrbit f) : rep_(std::move(f)) { build_index(); }
  explicit OrbitResult(InfiniteOrbit i) : rep_(std::move(i)) { build_index(); }

  bool is_finite() const noexcept { return std::holds_alternative<FiniteOrbit>(rep_); }
  bool is_infinite() const noexcept { return !is_finite(); }
  const FiniteOrbit& finite() const { return std::get<FiniteOrbit>(rep_); }
  const InfiniteOrbit& infinite() const { return std::get<InfiniteOrbit>(rep_); }

  Point start() const { return at(0); }

  /// Number of distinct points (finite orbits only).
  std::size_t size() const { return finite().tail.size() + finite().cycle.size(); }

  /// Iterates before the periodic part: tail length u, or head length.
  std::size_t pre_length() const {
    return is_finite() ? finite().tail.size() : infinite().head.size();
  }

  /// phi^n(start).
  Point at(std::uint64_t n) const {
    if (is_finite()) {
      const auto& f = finite();
      if (n < f.tail.size()) return f.tail[n];
      return f.cycle[(n - f.tail.size()) % f.cycle.size()];
    }
    const auto& inf = infinite();
    if (n < inf.head.size()) return inf.head[n];
    const auto& c = inf.certificate;
    const auto k = n - inf.head.size();
    const auto j = static_cast<std::int64_t>(k / c.period());
    return c.entry_height + c.offsets[k % c.period()] + j * c.drift;
  }

  /// Least n with phi^n(start) = y.
  std::optional<std::uint64_t> index_of(Point y) const {
    auto it = std::lower_bound(index_.begin(), index_.end(), std::make_pair(y, std::uint64_t{0}));
    if (it != index_.end() && it->first == y) return it->second;
    if (is_finite()) return std::nullopt;
    const auto& inf = infinite();
    const auto& c = inf.certificate;
    for (std::size_t k = 0; k < c.period(); ++k) {
      const auto diff = y - c.entry_height - c.offsets[k];
      if (diff >= 0 && diff % c.drift == 0)
        return inf.head.size() + static_cast<std::uint64_t>(diff / c.drift) * c.period() + k;
    }
    return std::nullopt;
  }

  bool contains(Point y) const { return index_of(y).has_value(); }

  /// First `n` iterates (n need not be bounded by the orbit size).
  std::vector<Point> first(std::size_t n) const {
    std::vector<Point> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(at(i));
    return v;
  }

  /// Orbit points that lie in [0, bound).
  PointSet points_below(Point bound) const {
    std::vector<Point> v;
    if (is_finite()) {
      for (const auto& [p, i] : index_)
        if (p < bound) v.push_back(p);
      return PointSet(std::move(v));
    }
    const auto& inf = infinite();
    for (Point p : inf.head)
      if (p < bound) v.push_back(p);
    const auto& c = inf.certificate;
    for (std::size_t k = 0; k < c.period(); ++k)
      for (Point p = c.entry_height + c.offsets[k]; p < bound; p += c.drift) v.push_back(p);
    return PointSet(std::move(v));
  }

 private:
  void build_index() {
    auto add = [&](const std::vector<Point>& pts, std::uint64_t base) {
      for (std::size_t i = 0; i < pts.size(); ++i) index_.emplace_back(pts[i], base + i);
    };
    if (is_finite()) {
      add(finite().tail, 0);
      add(finite().cycle, finite().tail.size());
    } else {
      add(infinite().head, 0);
    }
    std::sort(index_.begin(), index_.end());
  }

  std::variant<FiniteOrbit, InfiniteOrbit> rep_;
  std::vector<std::pair<Point, std::uint64_t>> index_;
};

namespace detail {

inline constexpr std::size_t kOrbitStepLimit = 50'000'000;

inline OrbitResult finite_orbit(const std::vector<Point>& table, Point x) {
  std::vector<std::int64_t> seen(table.size(), -1);
  std::vector<Point> seq;
  while (seen[static_cast<std::size_t>(x)] < 0) {
    seen[static_cast<std::size_t>(x)] = static_cast<std::int64_t>(seq.size());
    seq.push_back(x);
    x = table[static_cast<std::size_t>(x)];
  }
  const auto cut = static_cast<std::size_t>(seen[static_cast<std::size_t>(x)]);
  FiniteOrbit f;
  f.tail.assign(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(cut));
  f.cycle.assign(seq.begin() + static_cast<std::ptrdiff_t>(cut), seq.end());
  return OrbitResult(std::move(f));
}

inline OrbitResult nat_orbit(const DescribedNatMap& d, const ResidueDynamics& rd, Point x) {
  const auto n = d.prefix_len();
  std::unordered_map<Point, std::size_t> seen;
  std::vector<Point> seq;
  for (;;) {
    if (auto it = seen.find(x); it != seen.end()) {
      FiniteOrbit f;
      f.tail.assign(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(it->second));
      f.cycle.assign(seq.begin() + static_cast<std::ptrdiff_t>(it->second), seq.end());
      return OrbitResult(std::move(f));
    }
    if (x >= n) {
      const auto r = static_cast<std::size_t>(x % d.modulus);
      const int cyc = rd.cycle_of[r];
      if (cyc >= 0 && rd.cycles[static_cast<std::size_t>(cyc)].drift > 0 &&
          x + rd.min_offset[r] >= n) {
        DriftCertificate cert;
        cert.entry_height = x;
        cert.drift = rd.cycles[static_cast<std::size_t>(cyc)].drift;
        auto q = static_cast<std::int64_t>(r);
        std::int64_t acc = 0;
        for (std::size_t k = 0; k < rd.cycles[static_cast<std::size_t>(cyc)].residues.size(); ++k) {
          cert.residue_cycle.push_back(q);
          cert.offsets.push_back(acc);
          acc += d.shifts[static_cast<std::size_t>(q)];
          q = rd.next[static_cast<std::size_t>(q)];
        }
        return OrbitResult(InfiniteOrbit{std::move(seq), std::move(cert)});
      }
    }
    if (seq.size() >= kOrbitStepLimit) throw error("orbit step limit exceeded");
    seen.emplace(x, seq.size());
    seq.push_back(x);
    x = x < n ? d.prefix[static_cast<std::size_t>(x)] : x + d.shift_at(x);
  }
}

}  // namespace detail

/// Reusable orbit oracle for one map: caches the residue analysis.
class OrbitEngine {
 public:
  explicit OrbitEngine(SelfMap map) : map_(std::move(map)) {
    if (map_.is_nat()) rd_ = analyze_residues(map_.described());
  }

  const SelfMap& map() const noexcept { return map_; }
  const ResidueDynamics& residues() const { return *rd_; }

  OrbitResult orbit(Point x) const {
    if (!map_.in_domain(x)) throw out_of_domain("point " + std::to_string(x));
    if (map_.is_finite()) return detail::finite_orbit(map_.table().table, x);
    return detail::nat_orbit(map_.described(), *rd_, x);
  }

 private:
  SelfMap map_;
  std::optional<ResidueDynamics> rd_;
};

inline OrbitResult orbit(const SelfMap& map, Point x) { return OrbitEngine(map).orbit(x); }

/// Least n with phi^n(x) = y, if y lies on the orbit of x.
inline std::optional<std::uint64_t> hitting_time(const SelfMap& map, Point x, Point y) {
  if (!map.in_domain(y)) throw out_of_domain("point " + std::to_string(y));
  return orbit(map, x).index_of(y);
}

/// A common point of several orbits with the hitting time from each start.
struct XiResult {
  Point point = 0;
  std::vector<std::pair<Point, std::uint64_t>> hitting_times;  // (a, m_a), ordered like the input

  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (const auto& [a, t] : hitting_times) s += t;
    return s;
  }
};

/// Sum-minimal common point of the given orbits; smallest point on ties.
inline std::optional<XiResult> xi_of_orbits(std::span<const OrbitResult> orbits) {
  if (orbits.empty()) throw precondition_error("xi needs a nonempty set");

  auto collect = [&](Point z) -> std::optional<XiResult> {
    XiResult res;
    res.point = z;
    for (const auto& o : orbits) {
      auto t = o.index_of(z);
      if (!t) return std::nullopt;
      res.hitting_times.emplace_back(o.start(), *t);
    }
    return res;
  };

  auto finite_it = std::find_if(orbits.begin(), orbits.end(), [](const auto& o) { return o.is_finite(); });
  if (finite_it != orbits.end()) {
    std::optional<XiResult> best;
    const auto& f = finite_it->finite();
    for (const auto* part : {&f.tail, &f.cycle}) {
      for (Point z : *part) {
        auto cand = collect(z);
        if (!cand) continue;
        if (!best || cand->total() < best->total() ||
            (cand->total() == best->total() && cand->point < best->point))
          best = std::move(cand);
      }
    }
    return best;
  }

  // All orbits infinite: two of them meet iff one entry point lies on the
  // other orbit, and their common points form a suffix of each.
  const auto& first = orbits.front();
  std::uint64_t idx = 0;
  for (const auto& other : orbits.subspan(1)) {
    std::uint64_t bound = 0;
    if (other.contains(first.infinite().certificate.entry_height)) {
      bound = first.pre_length();
    } else if (auto t = first.index_of(other.infinite().certificate.entry_height)) {
      bound = *t;
    } else {
      return std::nullopt;
    }
    std::uint64_t s = 0;
    while (s < bound && !other.contains(first.at(s))) ++s;
    idx = std::max(idx, s);
  }
  return collect(first.at(idx));
}

inline std::optional<XiResult> xi(const SelfMap& map, const PointSet& istar) {
  if (istar.empty()) throw precondition_error("xi needs a nonempty set");
  OrbitEngine eng(map);
  std::vector<OrbitResult> orbits;
  orbits.reserve(istar.size());
  for (Point a : istar) orbits.push_back(eng.orbit(a));
  return xi_of_orbits(orbits);
}

/// True iff the orbits of all elements of `istar` share a point.
inline bool in_D_phi(const SelfMap& map, const PointSet& istar) { return xi(map, istar).has_value(); }

struct OrbitMeet {
  Point point = 0;
  std::uint64_t steps_from_a = 0;
  std::uint64_t steps_from_b = 0;
};

/// Sum-minimal common point of the orbits of a and b.
inline std::optional<OrbitMeet> orbits_intersect(const OrbitResult& oa, const OrbitResult& ob) {
  std::vector<OrbitResult> pair{oa, ob};
  auto r = xi_of_orbits(pair);
  if (!r) return std::nullopt;
  return OrbitMeet{r->point, r->hitting_times[0].second, r->hitting_times[1].second};
}

inline std::optional<OrbitMeet> orbits_intersect(const SelfMap& map, Point a, Point b) {
  OrbitEngine eng(map);
  return orbits_intersect(eng.orbit(a), eng.orbit(b));
}

/// Every two infinite orbits intersect. Vacuous on finite domains; on N the
/// infinite orbits split into one family per (positive residue cycle, height
/// class mod drift), so the predicate holds iff there is at most one family.
inline bool check_p_tilde(const SelfMap& map) {
  if (map.is_finite()) return true;
  return analyze_residues(map.described()).infinite_class_count() <= 1;
}

/// Exact list of preimages of y.
inline std::vector<Point> preimages(const SelfMap& map, Point y) {
  std::vector<Point> out;
  if (map.is_finite()) {
    const auto& t = map.table().table;
    for (std::size_t x = 0; x < t.size(); ++x)
      if (t[x] == y) out.push_back(static_cast<Point>(x));
    return out;
  }
  const auto& d = map.described();
  for (std::size_t x = 0; x < d.prefix.size(); ++x)
    if (d.prefix[x] == y) out.push_back(static_cast<Point>(x));
  for (std::int64_t r = 0; r < d.modulus; ++r) {
    const Point x = y - d.shifts[static_cast<std::size_t>(r)];
    if (x >= d.prefix_len() && x % d.modulus == r) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// A window [0, end) of N that represents every point of a described map up
/// to the symmetries of its tail: for y >= stable_height, the preimage count
/// of y depends only on y mod m and whether its orbit is finite depends only
/// on y mod period_of(y mod m). Every such class has a representative below
/// `end`, so quantifiers over N reduce to the window.
struct StructureWindow {
  Point stable_height = 0;
  Point end = 0;
  std::vector<OrbitResult> orbits;          // orbit of y, y < end
  std::vector<std::vector<Point>> preimage;  // preimages of y, y < end

  bool infinite(Point y) const { return orbits[static_cast<std::size_t>(y)].is_infinite(); }
};

inline StructureWindow structure_window(const OrbitEngine& eng) {
  const auto& map = eng.map();
  if (!map.is_nat()) throw not_nat_domain("structure window is defined for N-maps");
  const auto& d = map.described();
  const auto& rd = eng.residues();
  const auto c = rd.max_abs_shift;
  Point max_prefix = -1;
  for (Point p : d.prefix) max_prefix = std::max(max_prefix, p);
  StructureWindow w;
  w.stable_height = std::max(d.prefix_len(), max_prefix + 1) + 2 * c * d.modulus + c + 1;
  std::int64_t period = d.modulus;
  for (const auto& cyc : rd.cycles)
    if (cyc.drift < 0) period = std::max(period, -cyc.drift);
  w.end = w.stable_height + period;
  w.orbits.reserve(static_cast<std::size_t>(w.end));
  for (Point y = 0; y < w.end; ++y) {
    w.orbits.push_back(eng.orbit(y));
    w.preimage.push_back(preimages(map, y));
  }
  return w;
}

}  // namespace quasinv
