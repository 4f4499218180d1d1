#pragma once

// The theorem suite: every library verdict cross-checked against direct
// search, over all small finite maps and a seeded corpus of N-maps.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "quasinv/classifier.hpp"
#include "quasinv/oracle.hpp"
#include "quasinv/orbit.hpp"
#include "quasinv/p_solver.hpp"
#include "quasinv/quasi_invariance.hpp"
#include "quasinv/selfmap.hpp"
#include "quasinv/superset.hpp"

namespace quasinv {

// ---------------------------------------------------------------------------
// Injectable operations, so mutants can replace one library function.

struct SuiteOps {
  std::function<std::optional<SubsetClassification>(const SelfMap&)> classify_subsets =
      [](const SelfMap& m) { return classify_subsets_1qi(m); };
  std::function<std::optional<XiResult>(const SelfMap&, const PointSet&)> xi =
      [](const SelfMap& m, const PointSet& s) { return quasinv::xi(m, s); };
  std::function<QuasiInvarianceReport(const SelfMap&, const PointSet&, std::int64_t)> internal_qi =
      [](const SelfMap& m, const PointSet& s, std::int64_t k) { return internal_quasi_invariant(m, s, k); };
  std::function<bool(const SelfMap&)> p_tilde = [](const SelfMap& m) { return check_p_tilde(m); };
  std::function<PointSet(const SelfMap&, const PointSet&, const PointSet&)> orbit_union =
      [](const SelfMap& m, const PointSet& i, const PointSet& h) { return build_G_orbit_union(m, i, h); };
};

struct Mutant {
  std::string name;
  std::string description;
  std::function<void(SuiteOps&)> apply;
};

inline const std::vector<Mutant>& mutant_catalogue() {
  static const std::vector<Mutant> catalogue = {
      {"classifier-accepts-4-cycle", "subset classifier reports the 4-cycle [1,2,3,0] as classifiable",
       [](SuiteOps& ops) {
         ops.classify_subsets = [](const SelfMap& m) -> std::optional<SubsetClassification> {
           if (m == SelfMap::finite({1, 2, 3, 0})) return SubsetClassification{SubsetCase::two, 0, 1, 2};
           return classify_subsets_1qi(m);
         };
       }},
      {"xi-max-sum", "xi picks the common point with the largest hitting-time sum",
       [](SuiteOps& ops) {
         ops.xi = [](const SelfMap& m, const PointSet& s) -> std::optional<XiResult> {
           OrbitEngine eng(m);
           std::vector<OrbitResult> orbits;
           for (Point a : s) orbits.push_back(eng.orbit(a));
           auto fin = std::find_if(orbits.begin(), orbits.end(), [](const auto& o) { return o.is_finite(); });
           if (fin == orbits.end()) return xi_of_orbits(orbits);
           std::optional<XiResult> best;
           const auto& f = fin->finite();
           for (const auto* part : {&f.tail, &f.cycle})
             for (Point z : *part) {
               XiResult r{z, {}};
               bool ok = true;
               for (const auto& o : orbits) {
                 auto t = o.index_of(z);
                 if (!t) ok = false;
                 else r.hitting_times.emplace_back(o.start(), *t);
               }
               if (ok && (!best || r.total() > best->total())) best = r;
             }
           return best;
         };
       }},
      {"qi-off-by-one", "internal quasi-invariance accepts |escapees| <= k + 1",
       [](SuiteOps& ops) {
         ops.internal_qi = [](const SelfMap& m, const PointSet& s, std::int64_t k) {
           return internal_quasi_invariant(m, s, k + 1);
         };
       }},
      {"p-tilde-always-true", "the pairwise-intersection predicate always answers true",
       [](SuiteOps& ops) { ops.p_tilde = [](const SelfMap&) { return true; }; }},
      {"orbit-union-drops-max", "the orbit union loses its largest point",
       [](SuiteOps& ops) {
         ops.orbit_union = [](const SelfMap& m, const PointSet& i, const PointSet& h) {
           auto g = build_G_orbit_union(m, i, h);
           return g.without(g.max());
         };
       }},
  };
  return catalogue;
}

inline SuiteOps mutated_ops(const std::string& name) {
  SuiteOps ops;
  for (const auto& m : mutant_catalogue())
    if (m.name == name) {
      m.apply(ops);
      return ops;
    }
  throw config_error("unknown mutant: " + name);
}

// ---------------------------------------------------------------------------
// Report

struct Counterexample {
  json map;
  json set;
  std::string expected;
  std::string got;

  json to_json() const { return json{{"map", map}, {"set", set}, {"expected", expected}, {"got", got}}; }
};

struct TheoremReport {
  std::string id;
  std::string anchor;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::vector<Counterexample> failures;  // first kMaxStored of them

  static constexpr std::size_t kMaxStored = 20;

  bool passed() const noexcept { return failed == 0; }

  void fail(const SelfMap& map, json set, std::string expected, std::string got) {
    ++failed;
    if (failures.size() < kMaxStored)
      failures.push_back({quasinv::to_json(map), std::move(set), std::move(expected), std::move(got)});
  }
  /// Counts one instance and records a failure when `ok` is false.
  void expect(bool ok, const SelfMap& map, const json& set, const std::string& expected,
              const std::string& got) {
    ++checked;
    if (!ok) fail(map, set, expected, got);
  }

  json to_json() const {
    json f = json::array();
    for (const auto& c : failures) f.push_back(c.to_json());
    return json{{"id", id}, {"anchor", anchor}, {"checked", checked}, {"failed", failed}, {"failures", f}};
  }
};

struct SuiteReport {
  std::vector<TheoremReport> theorems;  // sorted by id

  bool passed() const {
    return std::all_of(theorems.begin(), theorems.end(), [](const auto& t) { return t.passed(); });
  }
  std::uint64_t failure_count() const {
    std::uint64_t n = 0;
    for (const auto& t : theorems) n += t.failed;
    return n;
  }
  std::uint64_t checked_count() const {
    std::uint64_t n = 0;
    for (const auto& t : theorems) n += t.checked;
    return n;
  }
  const TheoremReport* find(const std::string& id) const {
    for (const auto& t : theorems)
      if (t.id == id) return &t;
    return nullptr;
  }
  json to_json() const {
    json ts = json::array();
    for (const auto& t : theorems) ts.push_back(t.to_json());
    return json{{"passed", passed()}, {"checked", checked_count()}, {"failed", failure_count()},
                {"theorems", ts}};
  }
  std::string dump(int indent = -1) const { return to_json().dump(indent); }
};

// ---------------------------------------------------------------------------
// Configuration

struct SuiteConfig {
  std::optional<std::vector<std::string>> theorems;  // empty optional: all
  Point n_max = 5;
  Point window = 200;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::int64_t indivisibility_bound = 6;
  SuiteOps ops;

  void validate() const {
    if (n_max < 1 || n_max > 6) throw config_error("n must lie in [1, 6]");
    if (window < 40 || window > 2000) throw config_error("window must lie in [40, 2000]");
    if (samples > 10000) throw config_error("at most 10000 random maps");
    if (indivisibility_bound < 0 || indivisibility_bound > 8)
      throw config_error("indivisibility bound must lie in [0, 8]");
  }
};

namespace suite_detail {

using oracle::Mask;

/// A corpus map with its engine and cached naive traces.
struct NatCase {
  NatCase(SelfMap m, std::size_t steps) : map(m), eng(std::move(m)), steps(steps) {}

  SelfMap map;
  OrbitEngine eng;
  std::size_t steps;
  mutable std::unordered_map<Point, oracle::Trace> traces;
  mutable std::unordered_map<Point, OrbitResult> orbits;

  const oracle::Trace& trace(Point a) const {
    auto it = traces.find(a);
    if (it == traces.end()) it = traces.emplace(a, oracle::trace(map, a, steps)).first;
    return it->second;
  }
  const OrbitResult& orbit(Point a) const {
    auto it = orbits.find(a);
    if (it == orbits.end()) it = orbits.emplace(a, eng.orbit(a)).first;
    return it->second;
  }
  bool looks_infinite(Point a) const { return !trace(a).repeats; }
  /// Infinite with the same number of missing points below w/2 and w.
  bool looks_cofinite(Point a, Point w) const {
    const auto& t = trace(a);
    return !t.repeats && oracle::missing_below(t, w / 2) == oracle::missing_below(t, w);
  }
  /// Naive orbit meeting: a complete (finite) trace is searched point by
  /// point; two infinite orbits meet iff each contains a late point of the other.
  bool meets(Point a, Point b) const {
    const auto& ta = trace(a);
    const auto& tb = trace(b);
    if (ta.repeats || tb.repeats) {
      const auto& small = ta.repeats ? ta : tb;
      const auto& other = ta.repeats ? tb : ta;
      return std::any_of(small.seq.begin(), small.seq.end(), [&](Point p) { return other.contains(p); });
    }
    const auto mid = steps / 2;
    return tb.contains(ta.seq[mid]) || ta.contains(tb.seq[mid]);
  }
  bool reaches(Point a, Point b) const { return trace(a).contains(b); }
};

class Context {
 public:
  explicit Context(const SuiteConfig& cfg) : cfg_(cfg) {}

  const SuiteConfig& cfg() const { return cfg_; }
  const SuiteOps& ops() const { return cfg_.ops; }
  std::size_t steps() const { return static_cast<std::size_t>(cfg_.window) * 10; }

  const std::vector<std::unique_ptr<NatCase>>& corpus() {
    if (corpus_.empty())
      for (auto& m : described_corpus(cfg_.seed, cfg_.samples))
        corpus_.push_back(std::make_unique<NatCase>(std::move(m), steps()));
    return corpus_;
  }

  template <class F>
  void for_finite(Point lo, Point hi, F&& fn) {
    for (Point n = lo; n <= std::min(hi, cfg_.n_max); ++n)
      for (SelfMap m : enumerate_finite_maps(n)) fn(m);
  }

 private:
  SuiteConfig cfg_;
  std::vector<std::unique_ptr<NatCase>> corpus_;
};

inline json set_json(const PointSet& s) { return to_json(s); }
inline json set_json(Mask m) { return to_json(oracle::mask_set(m)); }
inline std::string str(bool b) { return b ? "true" : "false"; }
inline std::string str(const std::optional<Point>& p) { return p ? std::to_string(*p) : "absent"; }

inline Mask orbit_mask(const std::vector<Point>& t, Point a) {
  Mask m = 0;
  for (std::size_t i = 0; i <= t.size(); ++i) {
    m |= Mask{1} << a;
    a = t[static_cast<std::size_t>(a)];
  }
  return m;
}

/// Nonempty subsets of [0, n) with at most `max_size` elements.
inline std::vector<Mask> small_masks(Point n, int max_size) {
  std::vector<Mask> out;
  for (Mask s = 1; s < (Mask{1} << n); ++s)
    if (std::popcount(s) <= max_size) out.push_back(s);
  return out;
}

inline std::vector<PointSet> small_sets(Point hi, std::size_t max_size) {
  std::vector<PointSet> out;
  detail::for_each_small_subset(0, hi, max_size, [&](const PointSet& s) { out.push_back(s); });
  return out;
}

/// f^k(a) = z first at step k, within n steps on a finite table.
inline std::optional<std::uint64_t> first_hit(const std::vector<Point>& t, Point a, Point z) {
  for (std::uint64_t k = 0; k <= t.size(); ++k) {
    if (a == z) return k;
    a = t[static_cast<std::size_t>(a)];
  }
  return std::nullopt;
}

/// Sum-minimal common point on a finite table, smallest point on ties.
inline std::optional<std::pair<Point, std::uint64_t>> naive_xi_finite(const std::vector<Point>& t,
                                                                      const PointSet& s) {
  std::optional<std::pair<Point, std::uint64_t>> best;
  for (Point z = 0; z < static_cast<Point>(t.size()); ++z) {
    std::uint64_t sum = 0;
    bool ok = true;
    for (Point a : s) {
      auto h = first_hit(t, a, z);
      if (!h) {
        ok = false;
        break;
      }
      sum += *h;
    }
    if (ok && (!best || sum < best->second)) best = std::make_pair(z, sum);
  }
  return best;
}

/// Same over simulated traces of an N-map.
inline std::optional<std::pair<Point, std::uint64_t>> naive_xi_traces(const NatCase& c, const PointSet& s) {
  std::optional<std::pair<Point, std::uint64_t>> best;
  for (Point z : c.trace(s.min()).seq) {
    std::uint64_t sum = 0;
    bool ok = true;
    for (Point a : s) {
      auto h = c.trace(a).index(z);
      if (!h) {
        ok = false;
        break;
      }
      sum += *h;
    }
    if (ok && (!best || sum < best->second || (sum == best->second && z < best->first)))
      best = std::make_pair(z, sum);
  }
  return best;
}

inline bool links_ok(const SelfMap& map, const OrbitResult& o) {
  if (o.is_infinite()) return true;
  const auto& f = o.finite();
  if (f.cycle.empty()) return false;
  for (std::size_t i = 0; i < f.tail.size(); ++i) {
    const Point next = i + 1 < f.tail.size() ? f.tail[i + 1] : f.cycle[0];
    if (map(f.tail[i]) != next) return false;
  }
  for (std::size_t i = 0; i < f.cycle.size(); ++i)
    if (map(f.cycle[i]) != f.cycle[(i + 1) % f.cycle.size()]) return false;
  std::set<Point> all(f.tail.begin(), f.tail.end());
  all.insert(f.cycle.begin(), f.cycle.end());
  return all.size() == f.tail.size() + f.cycle.size();
}

// ---------------------------------------------------------------------------
// Checks

inline void enumeration_complete(Context& ctx, TheoremReport& rep) {
  for (Point n = 1; n <= ctx.cfg().n_max; ++n) {
    std::unordered_set<std::string> seen;
    std::vector<Point> prev;
    bool ordered = true;
    std::uint64_t count = 0;
    for (SelfMap m : enumerate_finite_maps(n)) {
      ++count;
      if (!prev.empty() && !(prev < m.table().table)) ordered = false;
      prev = m.table().table;
      seen.insert(serialize_map(m));
    }
    const auto expect = enumerate_finite_maps(n).count();
    rep.expect(count == expect && seen.size() == expect && ordered, SelfMap::finite(prev), json(n),
               std::to_string(expect) + " distinct ordered maps",
               std::to_string(seen.size()) + " of " + std::to_string(count) + (ordered ? "" : ", unordered"));
  }
}

inline void selfmap_semantics(Context& ctx, TheoremReport& rep) {
  auto roundtrip = [&](const SelfMap& m) {
    const auto text = serialize_map(m);
    const auto back = parse_map(text);
    rep.expect(back == m && serialize_map(back) == text, m, json(nullptr), text, serialize_map(back));
  };
  ctx.for_finite(1, 4, roundtrip);
  for (const auto& c : ctx.corpus()) {
    const auto& m = c->map;
    roundtrip(m);
    const auto& d = m.described();
    for (Point x = d.prefix_len(); x < d.prefix_len() + 10 * d.modulus; ++x)
      rep.expect(m(x) == x + d.shift_at(x), m, json(x), "tail rule", std::to_string(m(x)));
    for (Point x = 0; x < 20; ++x)
      for (auto [a, b] : {std::pair{0, 5}, {2, 3}, {5, 8}, {13, 0}}) {
        const Point lhs = iterate(m, iterate(m, x, a), b), rhs = iterate(m, x, a + b);
        rep.expect(lhs == rhs, m, json(x), std::to_string(rhs), std::to_string(lhs));
      }
  }
}

inline void orbit_dichotomy(Context& ctx, TheoremReport& rep) {
  ctx.for_finite(1, 5, [&](const SelfMap& m) {
    OrbitEngine eng(m);
    const auto n = static_cast<std::size_t>(m.table().size());
    for (Point x = 0; x < m.table().size(); ++x) {
      auto o = eng.orbit(x);
      const bool ok = o.is_finite() && o.size() <= n && o.start() == x && links_ok(m, o);
      rep.expect(ok, m, json(x), "finite orbit with valid links", "violated");
    }
  });
  for (const auto& c : ctx.corpus()) {
    for (Point x = 0; x < 60; ++x) {
      const auto& o = c->orbit(x);
      const auto& t = c->trace(x);
      if (o.is_finite()) {
        rep.expect(links_ok(c->map, o) && t.repeats && t.seq.size() == o.size() && o.start() == x, c->map,
                   json(x), "finite orbit matching simulation", "mismatch");
      } else {
        bool ok = !t.repeats;
        for (std::size_t k = 0; ok && k < 200; ++k) ok = o.at(k) == t.seq[k];
        rep.expect(ok, c->map, json(x), "200 distinct iterates matching simulation", "mismatch");
      }
    }
  }
}

inline void orbit_hitting_time(Context& ctx, TheoremReport& rep) {
  ctx.for_finite(1, 4, [&](const SelfMap& m) {
    const auto& t = m.table().table;
    for (Point x = 0; x < m.table().size(); ++x)
      for (Point y = 0; y < m.table().size(); ++y) {
        auto lib = hitting_time(m, x, y);
        auto naive = first_hit(t, x, y);
        rep.expect(lib == naive, m, json{x, y}, naive ? std::to_string(*naive) : "absent",
                   lib ? std::to_string(*lib) : "absent");
      }
  });
  for (const auto& c : ctx.corpus())
    for (Point x = 0; x < 30; ++x)
      for (Point y = 0; y < 30; ++y) {
        auto lib = c->orbit(x).index_of(y);
        auto naive = c->trace(x).index(y);
        const bool complete = c->trace(x).repeats;
        bool ok;
        if (complete || naive) ok = lib.has_value() == naive.has_value() && (!lib || *lib == *naive);
        else ok = !lib || *lib >= c->steps;
        rep.expect(ok, c->map, json{x, y}, naive ? std::to_string(*naive) : "absent",
                   lib ? std::to_string(*lib) : "absent");
      }
}

inline void lemma_finite_infinite_disjoint(Context& ctx, TheoremReport& rep) {
  for (const auto& c : ctx.corpus())
    for (Point a = 0; a < 40; ++a) {
      if (c->orbit(a).is_finite()) continue;
      for (Point b = 0; b < 40; ++b) {
        if (c->orbit(b).is_infinite()) continue;
        const bool lib = orbits_intersect(c->orbit(a), c->orbit(b)).has_value();
        rep.expect(!lib && !c->meets(a, b), c->map, json{a, b}, "no intersection", "intersection");
      }
    }
}

/// Start points probed for cofiniteness. An orbit starting near w/2 can look
/// cofinite (or not) just because of where it starts, so stay below w/4.
inline Point cofinite_probe(Point cap, Point w) { return std::min(cap, w / 4); }

inline std::optional<Point> find_cofinite(const NatCase& c, Point w) {
  for (Point a = 0; a < cofinite_probe(60, w); ++a)
    if (c.looks_cofinite(a, w)) return a;
  return std::nullopt;
}

inline void lemma_cofinite_meets_infinite(Context& ctx, TheoremReport& rep) {
  const Point w = ctx.cfg().window;
  for (const auto& c : ctx.corpus()) {
    auto a = find_cofinite(*c, w);
    if (!a) continue;
    for (Point b = 0; b < cofinite_probe(40, w); ++b) {
      if (!c->looks_infinite(b)) continue;
      const bool lib = orbits_intersect(c->orbit(*a), c->orbit(b)).has_value();
      rep.expect(lib && c->meets(*a, b), c->map, json{*a, b}, "orbits meet", "disjoint");
    }
  }
}

inline void lemma_cofinite_propagates(Context& ctx, TheoremReport& rep) {
  const Point w = ctx.cfg().window;
  for (const auto& c : ctx.corpus()) {
    const bool full = has_full_orbit(c->map).has_value();
    if (!full && !find_cofinite(*c, w)) continue;
    for (Point b = 0; b < cofinite_probe(40, w); ++b) {
      if (!full && !c->looks_infinite(b)) continue;
      rep.expect(c->looks_cofinite(b, w), c->map, json(b), "complement stable between W/2 and W",
                 "complement grows");
    }
  }
}

inline void lemma_xi_generates(Context& ctx, TheoremReport& rep) {
  const auto& ops = ctx.ops();
  ctx.for_finite(1, 5, [&](const SelfMap& m) {
    const auto& t = m.table().table;
    const auto n = m.table().size();
    for (Mask s : small_masks(n, 3)) {
      Mask common = ~Mask{0};
      for (Mask r = s; r; r &= r - 1) common &= orbit_mask(t, std::countr_zero(r));
      common &= (Mask{1} << n) - 1;
      auto x = ops.xi(m, oracle::mask_set(s));
      const Mask got = x ? orbit_mask(t, x->point) : 0;
      rep.expect(got == common, m, set_json(s), set_json(common).dump(), set_json(got).dump());
    }
  });
  const Point w = ctx.cfg().window;
  for (const auto& c : ctx.corpus())
    for (const auto& s : small_sets(12, 2)) {
      std::vector<Point> common;
      for (Point y = 0; y < w; ++y)
        if (std::all_of(s.begin(), s.end(), [&](Point a) { return c->trace(a).contains(y); }))
          common.push_back(y);
      std::vector<Point> got;
      if (auto x = ops.xi(c->map, s)) {
        for (Point y = 0; y < w; ++y)
          if (c->trace(x->point).contains(y)) got.push_back(y);
      }
      rep.expect(got == common, c->map, set_json(s), set_json(PointSet(common)).dump(),
                 set_json(PointSet(got)).dump());
    }
}

inline void lemma_class_purity(Context& ctx, TheoremReport& rep) {
  const auto& ops = ctx.ops();
  for (const auto& c : ctx.corpus())
    for (const auto& s : small_sets(12, 3)) {
      if (!ops.xi(c->map, s)) continue;
      const bool first = c->looks_infinite(s.min());
      const bool pure = std::all_of(s.begin(), s.end(), [&](Point a) { return c->looks_infinite(a) == first; });
      rep.expect(pure, c->map, set_json(s), "one finiteness class", "mixed classes");
    }
}

inline void lemma_pairwise_jointly(Context& ctx, TheoremReport& rep) {
  const auto& ops = ctx.ops();
  ctx.for_finite(1, 5, [&](const SelfMap& m) {
    const auto& t = m.table().table;
    for (Mask s : small_masks(m.table().size(), 3)) {
      std::vector<Mask> orbits;
      for (Mask r = s; r; r &= r - 1) orbits.push_back(orbit_mask(t, std::countr_zero(r)));
      bool pairwise = true;
      for (std::size_t i = 0; i < orbits.size(); ++i)
        for (std::size_t j = i + 1; j < orbits.size(); ++j) pairwise = pairwise && (orbits[i] & orbits[j]);
      if (!pairwise) continue;
      rep.expect(ops.xi(m, oracle::mask_set(s)).has_value(), m, set_json(s), "common point", "absent");
    }
  });
  for (const auto& c : ctx.corpus())
    for (const auto& s : small_sets(12, 3)) {
      if (s.size() < 2) continue;
      if (!std::all_of(s.begin(), s.end(), [&](Point a) { return c->looks_infinite(a); })) continue;
      bool pairwise = true;
      for (Point a : s)
        for (Point b : s) pairwise = pairwise && (a >= b || c->meets(a, b));
      if (!pairwise) continue;
      auto x = ops.xi(c->map, s);
      rep.expect(x && c->looks_infinite(x->point), c->map, set_json(s), "common point with infinite orbit",
                 x ? "finite orbit at " + std::to_string(x->point) : "absent");
    }
}

inline void lemma_cofinite_ptilde(Context& ctx, TheoremReport& rep) {
  const auto& ops = ctx.ops();
  ctx.for_finite(1, 5, [&](const SelfMap& m) {
    rep.expect(ops.p_tilde(m), m, json(nullptr), "true", "false");
  });
  const Point w = ctx.cfg().window;
  for (const auto& c : ctx.corpus()) {
    if (!find_cofinite(*c, w)) continue;
    rep.expect(ops.p_tilde(c->map), c->map, json(nullptr), "true", "false");
  }
}

inline void orbit_p_tilde(Context& ctx, TheoremReport& rep) {
  const auto& ops = ctx.ops();
  for (const auto& c : ctx.corpus()) {
    bool naive = true;
    json pair = nullptr;
    for (Point a = 0; a < 60 && naive; ++a) {
      if (!c->looks_infinite(a)) continue;
      for (Point b = a + 1; b < 60 && naive; ++b)
        if (c->looks_infinite(b) && !c->meets(a, b)) {
          naive = false;
          pair = json{a, b};
        }
    }
    rep.expect(ops.p_tilde(c->map) == naive, c->map, pair, str(naive), str(ops.p_tilde(c->map)));
  }
}

inline void xi_minimality(Context& ctx, TheoremReport& rep) {
  const auto& ops = ctx.ops();
  ctx.for_finite(1, 5, [&](const SelfMap& m) {
    const auto& t = m.table().table;
    for (Mask mk : small_masks(m.table().size(), 3)) {
      const auto s = oracle::mask_set(mk);
      auto naive = naive_xi_finite(t, s);
      auto lib = ops.xi(m, s);
      bool ok = lib.has_value() == naive.has_value();
      if (ok && lib) {
        ok = lib->point == naive->first && lib->total() == naive->second;
        for (const auto& [a, k] : lib->hitting_times) ok = ok && first_hit(t, a, lib->point) == k;
      }
      rep.expect(ok, m, set_json(s), naive ? std::to_string(naive->first) : "absent",
                 lib ? std::to_string(lib->point) : "absent");
    }
  });
  for (const auto& c : ctx.corpus())
    for (const auto& s : small_sets(12, 2)) {
      auto naive = naive_xi_traces(*c, s);
      auto lib = ops.xi(c->map, s);
      bool ok = lib.has_value() == naive.has_value();
      if (ok && lib) {
        ok = lib->point == naive->first && lib->total() == naive->second;
        for (const auto& [a, k] : lib->hitting_times) ok = ok && c->trace(a).index(lib->point) == k;
      }
      rep.expect(ok, c->map, set_json(s), naive ? std::to_string(naive->first) : "absent",
                 lib ? std::to_string(lib->point) : "absent");
    }
}

inline void qi_oracle(Context& ctx, TheoremReport& rep) {
  const auto& ops = ctx.ops();
  ctx.for_finite(1, 5, [&](const SelfMap& m) {
    const auto& t = m.table().table;
    const auto n = m.table().size();
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
      const auto lambda = oracle::mask_set(s);
      const bool invariant = (oracle::image_mask(t, s) & ~s) == 0;
      for (std::int64_t k = 0; k <= 2; ++k) {
        // Internal: some P inside the set with |P| <= k and f(set \ P) inside the set.
        int best = -1;
        for (Mask p = s;; p = (p - 1) & s) {
          if (std::popcount(p) <= k && (oracle::image_mask(t, s & ~p) & ~s) == 0)
            if (best < 0 || std::popcount(p) < best) best = std::popcount(p);
          if (p == 0) break;
        }
        auto in = ops.internal_qi(m, lambda, k);
        bool ok = in.holds == (best >= 0);
        if (ok && in.holds) {
          const Mask w = in.witness ? oracle::set_mask(*in.witness) : ~Mask{0};
          ok = (w & ~s) == 0 && std::popcount(w) == best && (oracle::image_mask(t, s & ~w) & ~s) == 0;
        }
        rep.expect(ok, m, set_json(s), "internal k=" + std::to_string(k) + ": " + str(best >= 0),
                   str(in.holds));
        // External: |f(set) \ set| <= k.
        const int excess = std::popcount(oracle::image_mask(t, s) & ~s);
        auto ex = external_quasi_invariant(m, lambda, k);
        rep.expect(ex.holds == (excess <= k) && ex.witness && static_cast<int>(ex.witness->size()) == excess, m,
                   set_json(s), "external k=" + std::to_string(k) + ": " + str(excess <= k), str(ex.holds));
        if (k == 0)
          rep.expect(in.holds == invariant && ex.holds == invariant, m, set_json(s), str(invariant),
                     str(in.holds) + "/" + str(ex.holds));
      }
    }
  });
}

inline void identity_subsets(Context& ctx, TheoremReport& rep) {
  ctx.for_finite(1, 6, [&](const SelfMap& m) {
    const auto& t = m.table().table;
    const auto n = m.table().size();
    for (std::int64_t k = 1; k <= n; ++k) {
      bool naive = true;
      Mask bad = 0;
      for (Mask s = 1; s < (Mask{1} << n) && naive; ++s)
        if (std::popcount(s) >= k && (oracle::image_mask(t, s) & ~s) != 0) {
          naive = false;
          bad = s;
        }
      const bool lib = identity_decision(m, Scope::subsets, k);
      rep.expect(lib == naive, m, naive ? json(k) : set_json(bad), str(naive), str(lib));
    }
  });
}

inline void identity_intervals(Context& ctx, TheoremReport& rep) {
  for (const auto& c : ctx.corpus())
    for (std::int64_t k = 1; k <= 4; ++k) {
      std::optional<Interval> bad;
      for (Point b = 0; b <= 40 && !bad; ++b)
        for (Point a = 0; a + k - 1 <= b && !bad; ++a)
          if (!is_invariant(c->map, Interval(a, b).to_set())) bad = Interval(a, b);
      const bool lib = identity_decision(c->map, Scope::intervals, k);
      rep.expect(lib == !bad, c->map, bad ? to_json(*bad) : json(k), str(!bad), str(lib));
    }
}

inline void classifier_subsets(Context& ctx, TheoremReport& rep) {
  const auto& ops = ctx.ops();
  ctx.for_finite(3, 6, [&](const SelfMap& m) {
    const auto& t = m.table().table;
    const auto n = m.table().size();
    auto lib = ops.classify_subsets(m);
    const auto brute = brute_force_w_table(m);
    ++rep.checked;
    if (lib.has_value() != brute.has_value()) {
      rep.fail(m, brute ? json(nullptr) : set_json(*first_w_failure(m)), brute ? "present" : "absent",
               lib ? "present" : "absent");
      return;
    }
    if (!lib) return;
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
      const Point w = lib->select(oracle::mask_set(s));
      if (w < 0 || w >= n || !((s >> w) & 1) || !oracle::closed_without(t, s, static_cast<int>(w))) {
        rep.fail(m, set_json(s), "valid witness", std::to_string(w));
        return;
      }
    }
  });
}

inline void classifier_intervals(Context& ctx, TheoremReport& rep) {
  for (const auto& c : ctx.corpus()) {
    const auto& m = c->map;
    auto lib = classify_intervals_1qi(m);
    auto bad = interval_w_failure(m, 30);
    ++rep.checked;
    if (lib.has_value() == bad.has_value()) {
      rep.fail(m, bad ? to_json(*bad) : json(nullptr), bad ? "absent" : "present", lib ? "present" : "absent");
      continue;
    }
    if (!lib) continue;
    for (Point b = 0; b <= 30; ++b)
      for (Point a = 0; a <= b; ++a) {
        const Interval iv(a, b);
        std::string got;
        try {
          const Point w = lib->select(iv);
          if (!iv.contains(w)) got = "w outside";
          for (Point x = a; x <= b && got.empty(); ++x)
            if (x != w && !iv.contains(m(x))) got = "w = " + std::to_string(w) + " leaves " + std::to_string(x);
        } catch (const error& e) {
          got = e.what();
        }
        if (!got.empty()) {
          rep.fail(m, to_json(iv), "valid witness", got);
          goto next_map;
        }
      }
  next_map:;
  }
}

inline void classifier_strict(Context& ctx, TheoremReport& rep) {
  auto check = [&](const SelfMap& m, std::optional<std::pair<Point, Point>> expect_pivot, bool expect_succ) {
    auto lib = classify_strict_intervals_1qi(m);
    const bool brute = strict_interval_w_exists(m, 30);
    bool ok = (lib && lib->kind == StrictKind::succ) == brute;
    if (ok && lib && lib->kind == StrictKind::pivot)
      ok = lib->counterexample && is_invariant(m, lib->counterexample->to_set()) && !lib->exclusion_holds &&
           classify_intervals_1qi(m).has_value();
    if (ok && expect_succ) ok = lib && lib->kind == StrictKind::succ;
    if (ok && expect_pivot) {
      ok = lib && lib->kind == StrictKind::pivot && lib->pivot == expect_pivot->first &&
           lib->target == expect_pivot->second;
      auto iv = classify_intervals_1qi(m);
      const auto kase = expect_pivot->second < expect_pivot->first ? IntervalCase::two : IntervalCase::three;
      ok = ok && iv && iv->kase() == kase && iv->pivot() == expect_pivot->first - 1;
    }
    // Selector: a 1-removal witness on every interval, whose image also
    // leaves when the exclusion condition holds.
    for (Point b = 0; ok && lib && b <= 30; ++b)
      for (Point a = 0; ok && a <= b; ++a) {
        const Interval iv(a, b);
        const Point w = lib->select(iv);
        ok = iv.contains(w) && (!lib->exclusion_holds || !iv.contains(m(w)));
        for (Point x = a; ok && x <= b; ++x) ok = x == w || iv.contains(m(x));
      }
    std::string got = !lib ? "absent" : lib->kind == StrictKind::succ ? "succ" : "pivot";
    if (lib && lib->kind == StrictKind::pivot)
      got += " " + std::to_string(lib->pivot) + "->" + std::to_string(lib->target);
    rep.expect(ok, m, json(nullptr), brute ? "succ" : "not succ", got);
  };
  for (const auto& c : ctx.corpus()) check(c->map, std::nullopt, false);
  check(maps::succ(), std::nullopt, true);
  for (Point p = 0; p <= 4; ++p)
    for (Point u = 0; u <= 8; ++u) {
      if (u == p) continue;
      // u = p + 1 extends the successor run by one, moving the pivot up.
      const auto expect = u == p + 1 ? std::pair{p + 1, p} : std::pair{p, u};
      check(maps::pivot(p, u), expect, false);
    }
}

inline void superset_orbit_union(Context& ctx, TheoremReport& rep) {
  const auto& ops = ctx.ops();
  ctx.for_finite(1, 5, [&](const SelfMap& m) {
    const auto& t = m.table().table;
    const auto n = m.table().size();
    const Mask all = (Mask{1} << n) - 1;
    for (Mask i = 1; i <= all; ++i) {
      const auto istar = oracle::mask_set(i);
      Mask expect = 0;
      for (Mask r = i; r; r &= r - 1) expect |= orbit_mask(t, std::countr_zero(r));
      const auto g = ops.orbit_union(m, istar, PointSet{});
      rep.expect(oracle::set_mask(g) == expect && check_superset_closure(m, istar, g), m, set_json(i),
                 set_json(expect).dump(), set_json(g).dump());
      // Every closed superset is the orbit union of itself.
      for (Mask sup = i;; sup = ((sup + 1) | i) & all) {
        const auto gs = oracle::mask_set(sup);
        if (check_superset_closure(m, istar, gs)) {
          const auto h = oracle::mask_set(sup & ~i);
          const auto back = ops.orbit_union(m, istar, h);
          rep.expect(back == gs, m, json{{"istar", set_json(i)}, {"G", set_json(sup)}}, set_json(sup).dump(),
                     set_json(back).dump());
        }
        if (sup == all) break;
      }
    }
  });
}

inline void superset_maxcond(Context& ctx, TheoremReport& rep) {
  for (const auto& c : ctx.corpus()) {
    auto p = analyze_maxcond(c->map);
    if (!p) continue;
    const auto istars = small_sets(10, 2);
    std::vector<PointSet> hs{PointSet{}};
    for (Point x = 0; x <= 10; ++x) hs.push_back(PointSet{x});
    for (const auto& i : istars)
      for (const auto& h : hs) {
        const auto g = build_G_maxcond(*p, i, h);
        const bool admissible = maxcond_h_admissible(*p, i, h);
        const bool max_in_image = image(c->map, i).contains(g.max());
        rep.expect(check_superset_closure(c->map, i, g) && admissible == max_in_image, c->map,
                   json{{"istar", set_json(i)}, {"H", set_json(h)}}, str(max_in_image), str(admissible));
      }
  }
}

inline void superset_interval_bounds(Context& ctx, TheoremReport& rep) {
  for (const auto& c : ctx.corpus()) {
    auto p = analyze_maxcond(c->map);
    if (!p) continue;
    try {
      validate_interval_profile(*p);
    } catch (const profile_invalid&) {
      continue;
    }
    for (const auto& i : small_sets(10, 2)) {
      const auto bounds = interval_superset_bounds(*p, c->map, i);
      const Point v = image(c->map, i).max();
      bool ok = bounds.v == v && bounds.u_max == i.min();
      std::optional<Point> first_closed;
      for (Point u = 0; u <= i.min(); ++u) {
        const bool closed = check_superset_closure(c->map, i, Interval(u, v).to_set());
        if (closed && !first_closed) first_closed = u;
        ok = ok && closed == (u >= bounds.u_star);
      }
      rep.expect(ok, c->map, set_json(i), "u* = " + str(first_closed) + ", v = " + std::to_string(v),
                 "u* = " + std::to_string(bounds.u_star) + ", v = " + std::to_string(bounds.v));
    }
  }
}

/// Finite maps up to n = 4 followed by the corpus.
template <class F>
void each_map(Context& ctx, F&& fn) {
  ctx.for_finite(1, 4, [&](const SelfMap& m) { fn(m, nullptr); });
  for (const auto& c : ctx.corpus()) fn(c->map, c.get());
}

inline std::vector<PointSet> istar_samples(const SelfMap& m) {
  if (m.is_finite()) {
    std::vector<PointSet> out;
    for (Mask s : small_masks(m.table().size(), 3)) out.push_back(oracle::mask_set(s));
    return out;
  }
  return small_sets(12, 3);
}

inline void check_solution(TheoremReport& rep, const SelfMap& m, const PSolution& sol) {
  for (const auto& s : istar_samples(m)) {
    std::string got;
    try {
      if (!check_P(sol.mode, m, sol.G(s), sol.u(s), s)) got = "clauses fail";
    } catch (const error& e) {
      got = e.what();
    }
    rep.expect(got.empty(), m, set_json(s), std::string(to_string(sol.mode)) + " clauses hold", got);
  }
}

inline void p1_existence(Context& ctx, TheoremReport& rep) {
  const auto& ops = ctx.ops();
  each_map(ctx, [&](const SelfMap& m, const NatCase*) {
    auto sol = solve_P1(m);
    const bool expect = ops.p_tilde(m);
    rep.expect(sol.has_value() == expect, m, json(nullptr), str(expect), str(sol.has_value()));
    if (sol) check_solution(rep, m, *sol);
  });
}

inline void p1_structure(Context& ctx, TheoremReport& rep) {
  each_map(ctx, [&](const SelfMap& m, const NatCase*) {
    auto sol = solve_P1(m);
    if (!sol) return;
    for (const auto& s : istar_samples(m)) {
      std::string got;
      try {
        decompose_HHH(m, sol->G(s), sol->u(s));
      } catch (const error& e) {
        got = e.what();
      }
      rep.expect(got.empty(), m, set_json(s), "decomposes", got);
    }
  });
  // Hand-built shape-(b) sets: finite orbits plus segments ending at v.
  ctx.for_finite(1, 4, [&](const SelfMap& m) {
    const auto& t = m.table().table;
    for (Mask i : small_masks(m.table().size(), 2))
      for (Point v = 0; v < m.table().size(); ++v) {
        Mask g = 0;
        bool reaches_v = false;
        for (Mask r = i; r; r &= r - 1) {
          Point a = std::countr_zero(r);
          if (!first_hit(t, a, v)) {
            g |= orbit_mask(t, a);
            continue;
          }
          for (; a != v; a = t[static_cast<std::size_t>(a)]) g |= Mask{1} << a;
          g |= Mask{1} << v;
          reaches_v = true;
        }
        if (!reaches_v) continue;
        const auto gs = oracle::mask_set(g);
        bool ok = check_P(PMode::P1, m, gs, v, oracle::mask_set(i));
        try {
          decompose_HHH(m, gs, v);
        } catch (const error&) {
          ok = false;
        }
        rep.expect(ok, m, json{{"istar", set_json(i)}, {"G", set_json(g)}, {"v", v}}, "P1 and decomposes",
                   "rejected");
      }
  });
}

/// Two infinite points in [0, 40) neither reaching the other, by simulation.
inline std::optional<PointPair> naive_incomparable(const NatCase& c, bool infinite_only) {
  for (Point a = 0; a < 40; ++a)
    for (Point b = a + 1; b < 40; ++b) {
      if (infinite_only && !(c.looks_infinite(a) && c.looks_infinite(b))) continue;
      if (!c.reaches(a, b) && !c.reaches(b, a)) return PointPair{a, b};
    }
  return std::nullopt;
}

inline bool naive_pair_incomparable(const NatCase& c, PointPair p, bool infinite_only) {
  if (infinite_only && !(c.looks_infinite(p.first) && c.looks_infinite(p.second))) return false;
  return !c.reaches(p.first, p.second) && !c.reaches(p.second, p.first);
}

inline void p2_existence(Context& ctx, TheoremReport& rep) {
  each_map(ctx, [&](const SelfMap& m, const NatCase* c) {
    auto sol = solve_P2(m);
    auto pair = incomparable_pair(m, OrderScope::infinite_only);
    bool ok = sol.has_value() == !pair.has_value();
    if (c) {
      if (pair) ok = ok && naive_pair_incomparable(*c, *pair, true);
      else ok = ok && !naive_incomparable(*c, true);
    }
    rep.expect(ok, m, pair ? json{pair->first, pair->second} : json(nullptr), "total iff solvable",
               str(sol.has_value()));
    if (sol) check_solution(rep, m, *sol);
  });
}

inline void p2_removal_escapes(Context& ctx, TheoremReport& rep) {
  for (const auto& c : ctx.corpus())
    for (auto* solve : {&solve_P1, &solve_P2}) {
      auto sol = (*solve)(c->map);
      if (!sol) continue;
      for (const auto& s : small_sets(12, 2)) {
        const Point u = sol->u(s);
        if (!c->orbit(u).is_infinite()) continue;
        const auto g = sol->G(s);
        const Point next = c->map(u);
        rep.expect(!g.contains(next) && !s.contains(next), c->map, set_json(s), "f(u) outside G",
                   std::to_string(next) + " in G");
      }
    }
}

inline bool all_orbits_infinite(const NatCase& c) {
  const auto w = structure_window(c.eng);
  for (Point y = 0; y < w.end; ++y)
    if (!w.infinite(y)) return false;
  return true;
}

inline void p2_chain_endpoint(Context& ctx, TheoremReport& rep) {
  for (const auto& c : ctx.corpus()) {
    if (!all_orbits_infinite(*c)) continue;
    auto sol = solve_P2(c->map);
    if (!sol) continue;
    for (Point b = 0; b <= 10; ++b)
      for (std::uint64_t k = 0; k <= 6; ++k) {
        std::vector<Point> chain;
        for (std::uint64_t i = 0; i <= k; ++i) chain.push_back(iterate(c->map, b, i));
        const PointSet s(chain);
        const Point u = sol->u(s);
        rep.expect(u == chain.back(), c->map, set_json(s), std::to_string(chain.back()), std::to_string(u));
      }
  }
}

inline void p2_total_order(Context& ctx, TheoremReport& rep) {
  for (const auto& c : ctx.corpus()) {
    if (!all_orbits_infinite(*c)) continue;
    const bool p2 = solve_P2(c->map).has_value();
    const bool total_all = is_total_order(c->map, OrderScope::all);
    const bool naive = !naive_incomparable(*c, false);
    rep.expect(p2 == total_all && total_all == naive, c->map, json(nullptr), str(naive),
               "P2 " + str(p2) + ", total " + str(total_all));
  }
}

inline void p2_full_orbit(Context& ctx, TheoremReport& rep) {
  const Point w = ctx.cfg().window;
  ctx.for_finite(1, 4, [&](const SelfMap& m) {
    const auto& t = m.table().table;
    const auto n = m.table().size();
    std::optional<Point> naive;
    for (Point a = 0; a < n && !naive; ++a)
      if (orbit_mask(t, a) == (Mask{1} << n) - 1) naive = a;
    auto lib = has_full_orbit(m);
    const bool triple = has_cofinite_orbit(m) && is_total_order(m, OrderScope::all);
    rep.expect(lib.has_value() == naive.has_value() && triple == lib.has_value(), m, json(nullptr), str(naive),
               str(lib));
  });
  for (const auto& c : ctx.corpus()) {
    auto lib = has_full_orbit(c->map);
    const bool cofinite = has_cofinite_orbit(c->map);
    const bool triple = cofinite && is_total_order(c->map, OrderScope::all);
    bool ok = lib.has_value() == triple && cofinite == find_cofinite(*c, w).has_value();
    if (lib) {
      const auto& tr = c->trace(*lib);
      for (Point y = 0; y < 60 && ok; ++y) ok = tr.contains(y);
    }
    rep.expect(ok, c->map, json(nullptr), "full iff cofinite and total (cofinite " + str(cofinite) + ")",
               str(lib));
  }
}

inline void p2_from_common_points(Context& ctx, TheoremReport& rep) {
  const auto& ops = ctx.ops();
  for (const auto& c : ctx.corpus()) {
    bool contained = true;
    for (const auto& s : small_sets(12, 3)) {
      auto x = ops.xi(c->map, s);
      if (!x || !s.contains(x->point)) {
        contained = false;
        break;
      }
    }
    if (!contained) continue;
    rep.expect(solve_P2(c->map).has_value(), c->map, json(nullptr), "present", "absent");
  }
}

inline void p2_indivisibility(Context& ctx, TheoremReport& rep) {
  const auto b = ctx.cfg().indivisibility_bound;
  for (const auto& m : {maps::succ(), maps::remark_conjugate()}) {
    auto sol = solve_P2(m);
    if (!sol) {
      rep.expect(false, m, json(nullptr), "P2 solution", "absent");
      continue;
    }
    auto r = indivisibility_check(m, *sol, b);
    std::vector<Point> id(static_cast<std::size_t>(b + 1));
    for (Point i = 0; i <= b; ++i) id[static_cast<std::size_t>(i)] = i;
    const bool ok = r.survivors.size() == 1 && r.survivors[0] == id;
    rep.expect(ok, m, json(b), "survivors = {identity}", std::to_string(r.survivors.size()) + " survivors");
  }
}

struct Registered {
  const char* id;
  const char* anchor;
  void (*run)(Context&, TheoremReport&);
};

inline const std::vector<Registered>& registry() {
  static const std::vector<Registered> checks = {
      {"classifier.intervals", "1-removal witness on intervals of N vs window search", classifier_intervals},
      {"classifier.strict", "witness whose image also leaves: successor and pivot families", classifier_strict},
      {"classifier.subsets", "1-removal witness on finite subsets vs exhaustive search", classifier_subsets},
      {"enumeration.complete", "n^n tables, each once, lexicographic", enumeration_complete},
      {"identity.intervals", "all long intervals invariant vs window search", identity_intervals},
      {"identity.subsets", "all large subsets invariant iff identity", identity_subsets},
      {"lemma.class_purity", "common point forces one finiteness class", lemma_class_purity},
      {"lemma.cofinite_meets_infinite", "cofinite orbit meets every infinite orbit", lemma_cofinite_meets_infinite},
      {"lemma.cofinite_propagates", "one cofinite orbit makes every infinite orbit cofinite",
       lemma_cofinite_propagates},
      {"lemma.cofinite_ptilde", "cofinite orbit implies pairwise intersection", lemma_cofinite_ptilde},
      {"lemma.finite_infinite_disjoint", "finite and infinite orbits never meet", lemma_finite_infinite_disjoint},
      {"lemma.pairwise_jointly", "pairwise meeting orbits share a common point", lemma_pairwise_jointly},
      {"lemma.xi_generates", "common points are exactly the orbit of xi", lemma_xi_generates},
      {"orbit.dichotomy", "tail plus cycle, or distinct iterates, matching simulation", orbit_dichotomy},
      {"orbit.hitting_time", "hitting times match simulation", orbit_hitting_time},
      {"orbit.p_tilde", "pairwise intersection of infinite orbits vs simulation", orbit_p_tilde},
      {"p1.existence", "P1 solvable iff infinite orbits pairwise meet; clauses hold", p1_existence},
      {"p1.structure", "P1 supersets split into orbit pieces", p1_structure},
      {"p2.chain_endpoint", "removal point of an orbit chain is its last element", p2_chain_endpoint},
      {"p2.common_points", "xi inside every sampled I* gives P2", p2_from_common_points},
      {"p2.existence", "P2 solvable iff reachability is total on infinite orbits", p2_existence},
      {"p2.full_orbit", "full orbit iff cofinite orbit and total order", p2_full_orbit},
      {"p2.indivisibility", "a preserving bijection factor is the identity", p2_indivisibility},
      {"p2.removal_escapes", "removal point with infinite orbit maps outside G", p2_removal_escapes},
      {"p2.total_order", "all-infinite maps: P2 iff total order", p2_total_order},
      {"qi.oracle", "quasi-invariance vs removal-set enumeration", qi_oracle},
      {"selfmap.semantics", "serialization round trip, tail rule, iterate additivity", selfmap_semantics},
      {"superset.interval_bounds", "interval supersets [u, v] closed exactly for u >= u*", superset_interval_bounds},
      {"superset.maxcond", "max G in f(I*) iff H admissible", superset_maxcond},
      {"superset.orbit_union", "finite invariant supersets are orbit unions", superset_orbit_union},
      {"xi.minimality", "xi is the sum-minimal common point", xi_minimality},
  };
  return checks;
}

}  // namespace suite_detail

inline std::vector<std::string> theorem_ids() {
  std::vector<std::string> ids;
  for (const auto& r : suite_detail::registry()) ids.emplace_back(r.id);
  return ids;
}

inline SuiteReport run_theorem_suite(const SuiteConfig& config) {
  config.validate();
  const auto& reg = suite_detail::registry();
  std::vector<const suite_detail::Registered*> selected;
  if (!config.theorems) {
    for (const auto& r : reg) selected.push_back(&r);
  } else {
    for (const auto& id : *config.theorems) {
      auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& r) { return id == r.id; });
      if (it == reg.end()) throw config_error("unknown theorem id: " + id);
      if (std::find(selected.begin(), selected.end(), &*it) == selected.end()) selected.push_back(&*it);
    }
  }
  suite_detail::Context ctx(config);
  SuiteReport report;
  for (const auto* r : selected) {
    TheoremReport t;
    t.id = r->id;
    t.anchor = r->anchor;
    r->run(ctx, t);
    report.theorems.push_back(std::move(t));
  }
  std::sort(report.theorems.begin(), report.theorems.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  return report;
}

}  // namespace quasinv
