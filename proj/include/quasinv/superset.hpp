#pragma once

// Finite invariant supersets G(I*): orbit unions, closure checks, and the
// N-maps whose supersets can be chosen with max G(I*) in f(I*).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "quasinv/orbit.hpp"
#include "quasinv/residue.hpp"
#include "quasinv/selfmap.hpp"

namespace quasinv {

/// Union of the orbits of I* and H. Every orbit must be finite.
inline PointSet build_G_orbit_union(const SelfMap& map, const PointSet& istar, const PointSet& h) {
  OrbitEngine eng(map);
  std::vector<Point> out;
  for (const auto* s : {&istar, &h}) {
    for (Point a : *s) {
      auto o = eng.orbit(a);
      if (o.is_infinite()) throw infinite_orbit(a, "orbit of " + std::to_string(a) + " is infinite");
      const auto& f = o.finite();
      out.insert(out.end(), f.tail.begin(), f.tail.end());
      out.insert(out.end(), f.cycle.begin(), f.cycle.end());
    }
  }
  return PointSet(std::move(out));
}

/// I* contained in G and f(G) contained in G.
inline bool check_superset_closure(const SelfMap& map, const PointSet& istar, const PointSet& g) {
  if (!g.includes(istar)) return false;
  for (Point x : g) {
    if (!map.in_domain(x) || !g.contains(map.apply(x))) return false;
  }
  return true;
}

/// Maps with f(f(n)) = f(n) >= n: every image is a fixed point at or above
/// its preimage. b_n lists the fixed points, j(a) is the index of f(a)
/// among them and r(a) the number of fixed points <= a.
class MaxCondProfile {
 public:
  explicit MaxCondProfile(SelfMap map) : map_(std::move(map)), fixed_(fixed_points(map_.described())) {}

  const SelfMap& map() const noexcept { return map_; }
  const EventuallyPeriodicSequence& fixed() const noexcept { return fixed_; }

  Point b(std::int64_t n) const { return *fixed_.at(n); }
  std::int64_t j(Point a) const { return fixed_.count_below(map_(a)); }
  std::int64_t r(Point a) const { return fixed_.count_below(a + 1); }

 private:
  SelfMap map_;
  EventuallyPeriodicSequence fixed_;
};

inline std::optional<MaxCondProfile> analyze_maxcond(const SelfMap& map) {
  if (!map.is_nat()) throw not_nat_domain("max-condition profile needs a map on N");
  const auto& d = map.described();
  for (Point x = 0; x < d.prefix_len(); ++x) {
    const Point y = map.apply(x);
    if (y < x || map.apply(y) != y) return std::nullopt;
  }
  // x >= N: x + c_r with c_r >= 0 must land on a fixed point, whose residue
  // is sigma(r) and which is again >= N.
  for (std::int64_t r = 0; r < d.modulus; ++r) {
    const auto c = d.shifts[static_cast<std::size_t>(r)];
    if (c < 0) return std::nullopt;
    const auto s = (r + c) % d.modulus;
    if (c != 0 && d.shifts[static_cast<std::size_t>(s)] != 0) return std::nullopt;
  }
  return MaxCondProfile(map);
}

/// The admissibility condition on H: some a in I* has j(x) <= j(a) for all x in H.
inline bool maxcond_h_admissible(const MaxCondProfile& p, const PointSet& istar, const PointSet& h) {
  std::int64_t top = -1;
  for (Point a : istar) top = std::max(top, p.j(a));
  return std::all_of(h.begin(), h.end(), [&](Point x) { return p.j(x) <= top; });
}

/// Union of {a, f(a)} over I* and H.
inline PointSet build_G_maxcond(const MaxCondProfile& p, const PointSet& istar, const PointSet& h) {
  std::vector<Point> out;
  for (const auto* s : {&istar, &h})
    for (Point a : *s) {
      out.push_back(a);
      out.push_back(p.map()(a));
    }
  return PointSet(std::move(out));
}

struct SupersetBounds {
  Point u_star = 0;
  Point u_max = 0;
  Point v = 0;

  Interval smallest() const { return Interval(u_max, v); }
  Interval largest() const { return Interval(u_star, v); }
  friend bool operator==(const SupersetBounds&, const SupersetBounds&) = default;
};

/// Checks the interval-variant conditions on the profile: j non-increasing
/// on [0, b_0) and j(a) = r(a) for every non-fixed a > b_0.
inline void validate_interval_profile(const MaxCondProfile& p) {
  const Point b0 = p.b(0);
  for (Point a = 0; a + 1 < b0; ++a)
    if (p.j(a) < p.j(a + 1))
      throw profile_invalid("j increases between " + std::to_string(a) + " and " +
                            std::to_string(a + 1));
  // Above the prefix j(a) - r(a) only depends on a mod m.
  const auto& d = p.map().described();
  const Point limit = std::max(d.prefix_len(), b0 + 1) + 2 * d.modulus;
  for (Point a = b0 + 1; a < limit; ++a) {
    if (p.map().apply(a) == a) continue;
    if (p.j(a) != p.r(a))
      throw profile_invalid("j(" + std::to_string(a) + ") != r(" + std::to_string(a) + ")");
  }
}

/// Bounds [u*, min I*] for the left end of an interval superset [u, v],
/// v = max f(I*), with u* = min{n <= b_0 : v >= f(n)}.
inline SupersetBounds interval_superset_bounds(const MaxCondProfile& p, const SelfMap& map,
                                               const PointSet& istar) {
  if (istar.empty()) throw precondition_error("I* must be nonempty");
  if (!(p.map() == map)) throw precondition_error("profile belongs to a different map");
  validate_interval_profile(p);
  SupersetBounds res;
  for (Point a : istar) res.v = std::max(res.v, map(a));
  res.u_max = istar.min();
  const Point b0 = p.b(0);
  res.u_star = b0;
  for (Point n = 0; n <= b0; ++n)
    if (res.v >= map(n)) {
      res.u_star = n;
      break;
    }
  return res;
}

}  // namespace quasinv
