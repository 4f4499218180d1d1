// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "quasinv/quasinv.hpp"

using namespace quasinv;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << what;
    ok = ok && cond;
  }
};

SuiteReport run_checks(std::vector<std::string> ids, SuiteConfig cfg = {}) {
  cfg.theorems = std::move(ids);
  return run_theorem_suite(cfg);
}

void require_suite(Outcome& o, const SuiteReport& rep) {
  for (const auto& t : rep.theorems)
    if (!t.passed()) {
      std::ostringstream s;
      s << t.id << ": " << t.failed << " failure(s)";
      if (!t.failures.empty()) s << ", first " << t.failures[0].to_json().dump();
      o.require(false, s.str());
    }
  o.require(!rep.theorems.empty(), "no checks ran");
}

// identity_decision over subsets singles out the identity for k < n.
void ac1(Outcome& o) {
  for (Point n = 2; n <= 5; ++n) {
    const auto total = enumerate_finite_maps(n).count();
    for (std::int64_t k = 1; k <= n; ++k) {
      std::uint64_t count = 0;
      bool identity_counted = false;
      for (SelfMap m : enumerate_finite_maps(n))
        if (identity_decision(m, Scope::subsets, k)) {
          ++count;
          identity_counted = identity_counted || m.is_identity();
        }
      const std::uint64_t want = k < n ? 1 : total;
      o.require(count == want && identity_counted, "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                                       ": " + std::to_string(count) + " maps, want " +
                                                       std::to_string(want));
    }
  }
}

// Subset classifier against the brute-force witness table, with the selector
// checked on every nonempty subset.
void ac2(Outcome& o) {
  std::uint64_t present = 0, total = 0;
  for (Point n = 3; n <= 5; ++n)
    for (SelfMap m : enumerate_finite_maps(n)) {
      ++total;
      const auto c = classify_subsets_1qi(m);
      const bool brute = brute_force_w_table(m).has_value();
      o.require(c.has_value() == brute, "presence differs on " + serialize_map(m));
      if (!c) continue;
      ++present;
      const auto& t = m.table().table;
      for (oracle::Mask s = 1; s < (oracle::Mask{1} << n); ++s) {
        const Point w = c->select(oracle::mask_set(s));
        o.require(w >= 0 && w < n && ((s >> w) & 1) && oracle::closed_without(t, s, static_cast<int>(w)),
                  "selector fails on " + serialize_map(m) + " S=" + to_json(oracle::mask_set(s)).dump());
      }
    }
  o.detail << (o.ok ? "" : " ") << "(" << present << "/" << total << " classifiable)";
}

// Interval and strict classification against window search on [0,30].
void ac3(Outcome& o) {
  SuiteConfig cfg;
  o.require(cfg.samples >= 100, "corpus too small");
  require_suite(o, run_checks({"classifier.intervals", "classifier.strict"}, cfg));
  auto case3 = classify_intervals_1qi(SelfMap::nat({2}, {-1}));
  o.require(case3 && case3->kase() == IntervalCase::three && case3->pivot() == -1, "case three map");
  auto p = classify_intervals_1qi(maps::pivot(3, 0));
  o.require(p && p->kase() == IntervalCase::two && p->pivot() == 2, "pivot(3,0) interval case");
  auto s = classify_strict_intervals_1qi(maps::succ());
  o.require(s && s->kind == StrictKind::succ, "succ strict kind");
  auto ps = classify_strict_intervals_1qi(maps::pivot(2, 5));
  o.require(ps && ps->kind == StrictKind::pivot && ps->pivot == 2 && ps->target == 5, "pivot(2,5) strict kind");
  o.require(!classify_strict_intervals_1qi(maps::identity_nat()), "identity strict should be absent");
}

void ac4(Outcome& o) {
  require_suite(o, run_checks({"lemma.finite_infinite_disjoint", "lemma.cofinite_meets_infinite",
                               "lemma.cofinite_propagates", "lemma.xi_generates", "lemma.class_purity",
                               "lemma.pairwise_jointly", "lemma.cofinite_ptilde", "orbit.dichotomy"}));
}

// Orbit-union characterization plus the worked evens map.
void ac5(Outcome& o) {
  require_suite(o, run_checks({"superset.orbit_union", "superset.interval_bounds"}));
  const auto m = SelfMap::nat({6, 4, 2}, {0, 1});
  const auto p = analyze_maxcond(m);
  o.require(p.has_value(), "evens map has no profile");
  if (!p) return;
  for (Point a : {0, 1}) {
    const PointSet istar{a};
    const auto b = interval_superset_bounds(*p, m, istar);
    const Interval want = a == 0 ? Interval(0, 6) : Interval(1, 4);
    o.require(b.largest() == want, "G({" + std::to_string(a) + "}) bounds");
    for (Point u = 0; u <= a; ++u)
      o.require(check_superset_closure(m, istar, Interval(u, b.v).to_set()) == (u >= b.u_star),
                "closure at u=" + std::to_string(u));
  }
}

void ac6(Outcome& o) {
  require_suite(o, run_checks({"p1.existence", "p1.structure", "p2.existence", "p2.full_orbit",
                               "p2.total_order", "p2.chain_endpoint", "p2.common_points"}));
  o.require(solve_P1(maps::succ()) && solve_P2(maps::succ()) && has_full_orbit(maps::succ()) == 0,
            "succ outcomes");
  o.require(!solve_P1(maps::shift_by(2)), "shift2 P1 should be absent");
  o.require(!solve_P2(maps::bullet()) && !has_full_orbit(maps::bullet()), "bullet outcomes");
  o.require(has_full_orbit(maps::remark_conjugate()) == 0, "remark full orbit");
}

void ac7(Outcome& o) {
  const std::vector<Point> identity{0, 1, 2, 3, 4, 5, 6, 7, 8};
  for (const auto& [name, m] : {std::pair{"succ", maps::succ()}, std::pair{"remark", maps::remark_conjugate()}}) {
    const auto sol = solve_P2(m);
    o.require(sol.has_value(), std::string(name) + " has no P2 solution");
    if (!sol) continue;
    const auto rep = indivisibility_check(m, *sol, 8);
    o.require(rep.survivors.size() == 1 && rep.survivors[0] == identity,
              std::string(name) + ": " + std::to_string(rep.survivors.size()) + " survivors");
    o.detail << (o.ok ? "" : " ") << name << " " << rep.candidates << " candidates;";
  }
}

void ac8(Outcome& o) {
  for (const auto& mut : mutant_catalogue()) {
    SuiteConfig cfg;
    cfg.ops = mutated_ops(mut.name);
    const auto rep = run_theorem_suite(cfg);
    bool serialized = false;
    for (const auto& t : rep.theorems)
      for (const auto& ce : t.failures) {
        try {
          (void)map_from_json(ce.map);
          serialized = true;
        } catch (const error&) {
        }
      }
    o.require(rep.failure_count() >= 1 && serialized, mut.name + " not detected");
    o.detail << (o.ok ? "" : " ") << mut.name << "=" << rep.failure_count() << ";";
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* what;
    double limit_s;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "subset identity decision counts", 10, ac1},
      {"AC2", "subset classifier vs brute force", 30, ac2},
      {"AC3", "interval classifiers vs window search", 30, ac3},
      {"AC4", "orbit lemmas", 60, ac4},
      {"AC5", "invariant supersets", 10, ac5},
      {"AC6", "P1/P2 equivalences", 60, ac6},
      {"AC7", "indivisibility at bound 8", 60, ac7},
      {"AC8", "mutant detection", 300, ac8},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) o.require(false, "over time limit");
    failures += !o.ok;
    std::printf("%s %s %s (%.2fs / %.0fs) %s\n", o.ok ? "PASS" : "FAIL", c.id, c.what, secs, c.limit_s,
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
