#pragma once

// Supersets preserved up to one removed point (P1: the point is anywhere in
// G(I*), P2: it lies in I*), the orbit-reachability order, full orbits, and
// the bounded indivisibility search.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quasinv/orbit.hpp"
#include "quasinv/selfmap.hpp"

namespace quasinv {

enum class PMode { P1, P2 };

inline const char* to_string(PMode m) { return m == PMode::P1 ? "P1" : "P2"; }

/// One instance of the defining clauses: I* in G, the removal point in G
/// (P1) or in I* (P2), and f(G \ {u}) contained in G.
inline bool check_P(PMode mode, const SelfMap& map, const PointSet& g, Point u, const PointSet& istar) {
  if (!g.includes(istar)) return false;
  if (mode == PMode::P1 ? !g.contains(u) : !istar.contains(u)) return false;
  for (Point x : g) {
    if (x == u) continue;
    if (!map.in_domain(x) || !g.contains(map.apply(x))) return false;
  }
  return true;
}

/// G(I*) split by orbit type: H infinite orbits, H-bar finite orbits through
/// v, H-tilde the remaining finite orbits.
struct HDecomposition {
  PointSet h, h_bar, h_tilde;
  char shape = 'a';  // 'a': H nonempty, 'b': every orbit in G finite
};

/// Splits (G, v) and checks it has one of the two shapes that characterize
/// P1; throws structure_violation otherwise.
inline HDecomposition decompose_HHH(const SelfMap& map, const PointSet& g, Point v) {
  OrbitEngine eng(map);
  std::vector<Point> h, hb, ht;
  std::vector<OrbitResult> inf_orbits, fin_bar, fin_tilde;
  for (Point a : g) {
    auto o = eng.orbit(a);
    if (o.is_infinite()) {
      h.push_back(a);
      inf_orbits.push_back(std::move(o));
    } else if (o.contains(v)) {
      hb.push_back(a);
      fin_bar.push_back(std::move(o));
    } else {
      ht.push_back(a);
      fin_tilde.push_back(std::move(o));
    }
  }
  HDecomposition d{PointSet(h), PointSet(hb), PointSet(ht), h.empty() ? 'b' : 'a'};

  std::vector<Point> rebuilt;
  for (const auto& o : fin_tilde) {
    const auto& f = o.finite();
    rebuilt.insert(rebuilt.end(), f.tail.begin(), f.tail.end());
    rebuilt.insert(rebuilt.end(), f.cycle.begin(), f.cycle.end());
  }
  if (d.shape == 'a') {
    if (!hb.empty()) throw structure_violation("finite orbit through v next to an infinite orbit");
    auto x = xi_of_orbits(inf_orbits);
    if (!x) throw structure_violation("infinite orbits in G do not meet");
    if (x->point != v)
      throw structure_violation("v = " + std::to_string(v) + " differs from xi(H) = " +
                                std::to_string(x->point));
    for (std::size_t i = 0; i < inf_orbits.size(); ++i) {
      auto seg = inf_orbits[i].first(x->hitting_times[i].second + 1);
      rebuilt.insert(rebuilt.end(), seg.begin(), seg.end());
    }
  } else {
    if (hb.empty()) throw structure_violation("no orbit in G passes through v");
    for (const auto& o : fin_bar) {
      auto seg = o.first(*o.index_of(v) + 1);
      rebuilt.insert(rebuilt.end(), seg.begin(), seg.end());
    }
  }
  if (PointSet(std::move(rebuilt)) != g)
    throw structure_violation("G is not the union of the orbit pieces");
  return d;
}

/// A pair of selectors I* -> G(I*) and I* -> u(I*).
struct PSolution {
  PMode mode = PMode::P1;
  std::string construction;  // "orbit-segments" or "full-orbit"
  std::function<PointSet(const PointSet&)> G;
  std::function<Point(const PointSet&)> u;
};

namespace detail {

/// G = orbits of the finite-orbit elements plus the segments from each
/// infinite-orbit element up to xi of those elements; u = that xi, or min I*
/// when every orbit is finite.
inline PSolution orbit_segment_solution(PMode mode, const SelfMap& map) {
  auto eng = std::make_shared<const OrbitEngine>(map);
  auto build = [eng](const PointSet& istar) {
    if (istar.empty()) throw precondition_error("I* must be nonempty");
    std::vector<Point> g;
    std::vector<OrbitResult> inf;
    for (Point a : istar) {
      auto o = eng->orbit(a);
      if (o.is_infinite()) {
        inf.push_back(std::move(o));
        continue;
      }
      const auto& f = o.finite();
      g.insert(g.end(), f.tail.begin(), f.tail.end());
      g.insert(g.end(), f.cycle.begin(), f.cycle.end());
    }
    Point u = istar.min();
    if (!inf.empty()) {
      auto x = xi_of_orbits(inf);
      if (!x) throw precondition_error("infinite orbits of I* do not meet");
      for (std::size_t i = 0; i < inf.size(); ++i) {
        auto seg = inf[i].first(x->hitting_times[i].second + 1);
        g.insert(g.end(), seg.begin(), seg.end());
      }
      u = x->point;
    }
    return std::make_pair(PointSet(std::move(g)), u);
  };
  PSolution s;
  s.mode = mode;
  s.construction = "orbit-segments";
  s.G = [build](const PointSet& istar) { return build(istar).first; };
  s.u = [build](const PointSet& istar) { return build(istar).second; };
  return s;
}

/// With O(a) = everything: n(I*) = max hitting time from a into I*,
/// G = {a, ..., f^n(a)}, u = f^n(a).
inline PSolution full_orbit_solution(const SelfMap& map, Point start) {
  auto o = std::make_shared<const OrbitResult>(OrbitEngine(map).orbit(start));
  auto n_of = [o](const PointSet& istar) {
    if (istar.empty()) throw precondition_error("I* must be nonempty");
    std::uint64_t n = 0;
    for (Point x : istar) {
      auto t = o->index_of(x);
      if (!t) throw precondition_error("point outside the full orbit");
      n = std::max(n, *t);
    }
    return n;
  };
  PSolution s;
  s.mode = PMode::P2;
  s.construction = "full-orbit";
  s.G = [o, n_of](const PointSet& istar) { return PointSet(o->first(n_of(istar) + 1)); };
  s.u = [o, n_of](const PointSet& istar) { return o->at(n_of(istar)); };
  return s;
}

}  // namespace detail

/// Exists iff every two infinite orbits meet.
inline std::optional<PSolution> solve_P1(const SelfMap& map) {
  if (!check_p_tilde(map)) return std::nullopt;
  return detail::orbit_segment_solution(PMode::P1, map);
}

// ---------------------------------------------------------------------------
// The order a <= b iff b lies on the orbit of a.

enum class OrderScope { all, infinite_only };

using PointPair = std::pair<Point, Point>;

namespace detail {

inline std::optional<PointPair> finite_incomparable(const SelfMap& map, OrderScope scope) {
  if (scope == OrderScope::infinite_only) return std::nullopt;  // no infinite orbits
  OrbitEngine eng(map);
  const auto n = map.table().size();
  std::vector<OrbitResult> orbits;
  for (Point x = 0; x < n; ++x) orbits.push_back(eng.orbit(x));
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b)
      if (!orbits[static_cast<std::size_t>(a)].contains(b) &&
          !orbits[static_cast<std::size_t>(b)].contains(a))
        return PointPair{a, b};
  return std::nullopt;
}

/// Smallest point >= floor with residue r mod m.
inline Point lift_to_residue(Point floor, std::int64_t r, std::int64_t m) {
  return floor + ((r - floor) % m + m) % m;
}

/// Two points in different infinite-orbit families, if there are two families.
inline std::optional<PointPair> split_infinite_families(const ResidueDynamics& rd, Point floor) {
  const ResidueCycle* first = nullptr;
  for (const auto& c : rd.cycles) {
    if (c.drift <= 0) continue;
    const Point h = lift_to_residue(floor, c.residues.front(), rd.modulus);
    if (first) return PointPair{lift_to_residue(floor, first->residues.front(), rd.modulus), h};
    if (c.drift / rd.modulus >= 2) return PointPair{h, h + rd.modulus};
    first = &c;
  }
  return std::nullopt;
}

inline std::optional<PointPair> nat_incomparable(const SelfMap& map, OrderScope scope) {
  OrbitEngine eng(map);
  const auto& rd = eng.residues();
  const auto w = structure_window(eng);
  std::optional<Point> some_finite, some_infinite;
  for (Point y = 0; y < w.end; ++y) {
    auto& slot = w.infinite(y) ? some_infinite : some_finite;
    if (!slot) slot = y;
  }

  auto infinite_part = [&]() -> std::optional<PointPair> {
    if (auto p = split_infinite_families(rd, w.stable_height)) return p;
    for (Point y = 0; y < w.end; ++y) {
      const auto& pre = w.preimage[static_cast<std::size_t>(y)];
      if (w.infinite(y) && pre.size() >= 2) return PointPair{pre[0], pre[1]};
    }
    return std::nullopt;
  };

  if (scope == OrderScope::infinite_only) return infinite_part();
  if (some_finite && some_infinite) return PointPair{std::min(*some_finite, *some_infinite),
                                                     std::max(*some_finite, *some_infinite)};
  if (some_infinite) return infinite_part();

  // Every orbit finite. A zero-drift residue cycle carries infinitely many
  // separate cycles far up.
  for (const auto& c : rd.cycles) {
    if (c.drift == 0) {
      const Point h = lift_to_residue(w.stable_height, c.residues.front(), rd.modulus);
      return PointPair{h, h + rd.modulus};
    }
  }
  // Otherwise every cycle lies below the stable height: need a single cycle
  // and a single chain of off-cycle points feeding into it.
  std::vector<Point> cycle_min;
  std::vector<char> on_cycle(static_cast<std::size_t>(w.end), 0);
  for (Point y = 0; y < w.end; ++y) {
    const auto& cyc = w.orbits[static_cast<std::size_t>(y)].finite().cycle;
    const Point lo = *std::min_element(cyc.begin(), cyc.end());
    if (std::find(cycle_min.begin(), cycle_min.end(), lo) == cycle_min.end()) {
      cycle_min.push_back(lo);
      for (Point c : cyc) on_cycle[static_cast<std::size_t>(c)] = 1;
    }
  }
  if (cycle_min.size() >= 2) return PointPair{std::min(cycle_min[0], cycle_min[1]),
                                              std::max(cycle_min[0], cycle_min[1])};
  std::vector<Point> entries;
  for (Point y = 0; y < w.end; ++y) {
    const auto& pre = w.preimage[static_cast<std::size_t>(y)];
    if (on_cycle[static_cast<std::size_t>(y)]) {
      for (Point x : pre)
        if (!(x < w.end && on_cycle[static_cast<std::size_t>(x)])) entries.push_back(x);
    } else if (pre.size() >= 2) {
      return PointPair{pre[0], pre[1]};
    }
  }
  if (entries.size() >= 2) return PointPair{entries[0], entries[1]};
  return std::nullopt;
}

}  // namespace detail

/// Two points of the scope, neither on the orbit of the other; empty when
/// the order is total on the scope.
inline std::optional<PointPair> incomparable_pair(const SelfMap& map, OrderScope scope) {
  return map.is_finite() ? detail::finite_incomparable(map, scope) : detail::nat_incomparable(map, scope);
}

inline bool is_total_order(const SelfMap& map, OrderScope scope) {
  return !incomparable_pair(map, scope).has_value();
}

/// Some orbit is cofinite: on N this needs one residue cycle through every
/// residue with drift exactly m. Finite domains are trivially cofinite.
inline bool has_cofinite_orbit(const SelfMap& map) {
  if (map.is_finite()) return true;
  const auto rd = analyze_residues(map.described());
  return rd.cycles.size() == 1 && static_cast<std::int64_t>(rd.cycles[0].residues.size()) == rd.modulus &&
         rd.cycles[0].drift == rd.modulus;
}

/// A start point whose orbit is the whole domain. On N: all orbits infinite,
/// the order total, and the start is the unique point without preimage.
inline std::optional<Point> has_full_orbit(const SelfMap& map) {
  OrbitEngine eng(map);
  if (map.is_finite()) {
    const auto n = map.table().size();
    for (Point a = 0; a < n; ++a)
      if (static_cast<Point>(eng.orbit(a).size()) == n) return a;
    return std::nullopt;
  }
  const auto w = structure_window(eng);
  for (Point y = 0; y < w.end; ++y)
    if (!w.infinite(y)) return std::nullopt;
  if (!is_total_order(map, OrderScope::infinite_only)) return std::nullopt;
  for (Point y = 0; y < w.end; ++y)
    if (w.preimage[static_cast<std::size_t>(y)].empty()) return y;
  return std::nullopt;
}

/// Exists iff the order restricted to infinite-orbit points is total. Uses
/// the explicit full-orbit construction when a full orbit exists.
inline std::optional<PSolution> solve_P2(const SelfMap& map) {
  if (!is_total_order(map, OrderScope::infinite_only)) return std::nullopt;
  if (map.is_nat()) {
    if (auto a = has_full_orbit(map)) return detail::full_orbit_solution(map, *a);
  }
  return detail::orbit_segment_solution(PMode::P2, map);
}

// ---------------------------------------------------------------------------
// Indivisibility: f = beta o alpha with alpha a bijection preserving every
// G(I*) and beta keeping an infinite orbit in every G(I*) forces alpha = id.

struct IndivisibilityReport {
  std::int64_t search_bound = 0;
  std::uint64_t candidates = 0;          // permutations of [0, bound] tried
  std::uint64_t sets_checked = 0;        // sampled I*
  std::vector<std::vector<Point>> survivors;  // alpha restricted to [0, bound]
};

namespace detail {

inline void for_each_small_subset(Point lo, Point hi, std::size_t max_size,
                                  const std::function<void(const PointSet&)>& fn) {
  std::vector<Point> cur;
  std::function<void(Point)> rec = [&](Point next) {
    if (!cur.empty()) fn(PointSet(cur));
    if (cur.size() == max_size) return;
    for (Point x = next; x <= hi; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(lo);
}

}  // namespace detail

inline IndivisibilityReport indivisibility_check(const SelfMap& map, const PSolution& solution,
                                                 std::int64_t search_bound) {
  if (!map.is_nat()) throw not_nat_domain("indivisibility search needs a map on N");
  if (search_bound < 0 || search_bound > 10) throw bound_too_large("search bound must lie in [0, 10]");
  const Point b = search_bound;

  std::vector<PointSet> istars, gs;
  detail::for_each_small_subset(0, b, 3, [&](const PointSet& s) {
    auto g = solution.G(s);
    if (!check_P(PMode::P2, map, g, solution.u(s), s))
      throw not_a_p2_solution("clauses fail for I* = " + to_json(s).dump());
    istars.push_back(s);
    gs.push_back(std::move(g));
  });

  IndivisibilityReport rep;
  rep.search_bound = b;
  rep.sets_checked = istars.size();

  const auto& d = map.described();
  const Point plen = std::max(d.prefix_len(), b + 1);
  std::vector<Point> alpha(static_cast<std::size_t>(b + 1));
  std::iota(alpha.begin(), alpha.end(), Point{0});

  auto preserves = [&]() {
    for (const auto& g : gs)
      for (Point x : g)
        if (x <= b && !g.contains(alpha[static_cast<std::size_t>(x)])) return false;
    return true;
  };
  auto beta_keeps_infinite_orbits = [&]() {
    std::vector<Point> inverse(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) inverse[static_cast<std::size_t>(alpha[i])] = static_cast<Point>(i);
    std::vector<Point> prefix(static_cast<std::size_t>(plen));
    for (Point y = 0; y < plen; ++y)
      prefix[static_cast<std::size_t>(y)] = map.apply(y <= b ? inverse[static_cast<std::size_t>(y)] : y);
    // Above plen alpha is the identity, so beta follows the tail of f.
    const SelfMap beta(DescribedNatMap{std::move(prefix), d.modulus, d.shifts});
    OrbitEngine eng(beta);
    for (const auto& g : gs) {
      bool any = false;
      for (Point x : g)
        if (eng.orbit(x).is_infinite()) {
          any = true;
          break;
        }
      if (!any) return false;
    }
    return true;
  };

  do {
    ++rep.candidates;
    if (preserves() && beta_keeps_infinite_orbits()) rep.survivors.push_back(alpha);
  } while (std::next_permutation(alpha.begin(), alpha.end()));
  return rep;
}

}  // namespace quasinv
