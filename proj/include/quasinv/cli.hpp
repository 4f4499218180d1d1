#pragma once

// Command-line front end. run_cli takes the arguments after the program
// name and returns the exit code: 0 holds/present, 1 fails/absent, 2 bad input.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quasinv/classifier.hpp"
#include "quasinv/oracle.hpp"
#include "quasinv/orbit.hpp"
#include "quasinv/p_solver.hpp"
#include "quasinv/quasi_invariance.hpp"
#include "quasinv/selfmap.hpp"
#include "quasinv/suite.hpp"
#include "quasinv/superset.hpp"

namespace quasinv {

namespace cli_detail {

inline constexpr Point kDefaultWindow = 200;

/// A built-in name, inline JSON, or a path to a JSON file.
inline SelfMap load_map(const std::string& arg) {
  if (arg == "id") return maps::identity_nat();
  for (const auto& [name, m] : named_maps())
    if (name == arg) return m;
  if (!arg.empty() && arg.front() == '{') return parse_map(arg);
  std::ifstream in(arg);
  if (!in) throw parse_error("cannot read map file '" + arg + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_map(ss.str());
}

/// {"set":[...]}, [1,2], {1,2} or 1,2.
inline PointSet parse_set_arg(std::string text) {
  auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text.compare(first, 1, "{") == 0 && text.find("set") != std::string::npos)
    return parse_point_set(text);
  std::replace_if(text.begin(), text.end(), [](char c) { return c == '[' || c == ']' || c == '{' || c == '}' || c == ','; }, ' ');
  std::istringstream in(text);
  std::vector<Point> v;
  std::string tok;
  while (in >> tok) {
    std::size_t pos = 0;
    Point p = 0;
    try {
      p = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size() || p < 0) throw parse_error("bad set element '" + tok + "'");
    v.push_back(p);
  }
  return PointSet(std::move(v));
}

inline Point window_from_env() {
  const char* env = std::getenv("QUASINV_WINDOW");
  if (!env || !*env) return kDefaultWindow;
  std::size_t pos = 0;
  Point w = 0;
  try {
    w = std::stoll(env, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != std::string(env).size() || w < 1) throw config_error("QUASINV_WINDOW must be a positive integer");
  return w;
}

inline std::string join(const std::vector<Point>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

template <class T>
std::string show(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

/// Small sets used for sample output: nonempty subsets of [0, min(4, n)).
inline std::vector<PointSet> sample_sets(const SelfMap& map, std::size_t max_size) {
  Point hi = 3;
  if (auto n = map.domain_size()) hi = std::min<Point>(hi, *n - 1);
  std::vector<PointSet> out;
  detail::for_each_small_subset(0, hi, max_size, [&](const PointSet& s) { out.push_back(s); });
  return out;
}

inline std::vector<Interval> sample_intervals() {
  std::vector<Interval> out;
  for (Point b = 0; b <= 4; ++b)
    for (Point a = 0; a <= b; ++a) out.emplace_back(a, b);
  return out;
}

// ---------------------------------------------------------------------------

inline int cmd_orbit(const SelfMap& map, Point x, bool as_json, std::ostream& out) {
  if (!map.in_domain(x)) throw out_of_domain("point " + std::to_string(x) + " is outside the domain");
  const auto o = orbit(map, x);
  if (as_json) {
    json j{{"start", x}, {"kind", o.is_finite() ? "finite" : "infinite"}};
    if (o.is_finite()) {
      j["tail"] = o.finite().tail;
      j["cycle"] = o.finite().cycle;
    } else {
      const auto& c = o.infinite().certificate;
      j["head"] = o.infinite().head;
      j["entry_height"] = c.entry_height;
      j["residue_cycle"] = c.residue_cycle;
      j["offsets"] = c.offsets;
      j["drift"] = c.drift;
    }
    out << j.dump() << '\n';
    return 0;
  }
  out << "start: " << x << '\n';
  if (o.is_finite()) {
    out << "kind: finite\n"
        << "tail: " << join(o.finite().tail) << '\n'
        << "cycle: " << join(o.finite().cycle) << '\n';
  } else {
    const auto& c = o.infinite().certificate;
    out << "kind: infinite\n"
        << "head: " << join(o.infinite().head) << '\n'
        << "entry: " << c.entry_height << '\n'
        << "period: " << c.period() << '\n'
        << "drift: " << c.drift << '\n'
        << "first: " << join(o.first(12)) << '\n';
  }
  return 0;
}

inline int cmd_qi(const SelfMap& map, const PointSet& lambda, std::int64_t k, bool external, bool as_json,
                  std::ostream& out) {
  const auto rep = external ? external_quasi_invariant(map, lambda, k) : internal_quasi_invariant(map, lambda, k);
  if (as_json) {
    out << json{{"mode", external ? "external" : "internal"},
                {"k", k},
                {"set", to_json(lambda)},
                {"holds", rep.holds},
                {"witness", rep.witness ? to_json(*rep.witness) : json(nullptr)}}
               .dump()
        << '\n';
  } else {
    out << "holds: " << (rep.holds ? "true" : "false") << '\n';
    if (rep.witness) out << (external ? "excess: " : "P: ") << *rep.witness << '\n';
  }
  return rep.holds ? 0 : 1;
}

inline int cmd_classify(const SelfMap& map, const std::string& what, bool as_json, std::ostream& out) {
  json j{{"scope", what}};
  std::vector<std::pair<std::string, Point>> samples;
  bool present = false;
  if (what == "subsets") {
    auto c = classify_subsets_1qi(map);
    present = c.has_value();
    if (c) {
      j["case"] = c->kase == SubsetCase::one ? 1 : 2;
      j["a"] = c->a;
      j["b"] = c->b;
      j["c"] = c->c;
      for (const auto& s : sample_sets(map, 4)) samples.emplace_back(show(s), c->select(s));
    }
  } else if (what == "intervals") {
    auto c = classify_intervals_1qi(map);
    present = c.has_value();
    if (c) {
      j["case"] = c->kase() == IntervalCase::one ? 1 : c->kase() == IntervalCase::two ? 2 : 3;
      j["pivot"] = c->pivot() ? json(*c->pivot()) : json(nullptr);
      for (const auto& iv : sample_intervals()) samples.emplace_back(show(iv), c->select(iv));
    }
  } else {
    auto c = classify_strict_intervals_1qi(map);
    present = c.has_value();
    if (c) {
      j["kind"] = c->kind == StrictKind::succ ? "succ" : "pivot";
      if (c->kind == StrictKind::pivot) {
        j["pivot"] = c->pivot;
        j["target"] = c->target;
      }
      j["exclusion"] = c->exclusion_holds;
      if (c->counterexample) j["counterexample"] = to_json(*c->counterexample);
      for (const auto& iv : sample_intervals()) samples.emplace_back(show(iv), c->select(iv));
    }
  }
  j["present"] = present;
  if (as_json) {
    json w = json::array();
    for (const auto& [s, x] : samples) w.push_back(json{s, x});
    j["samples"] = w;
    out << j.dump() << '\n';
    return present ? 0 : 1;
  }
  out << what << ": " << (present ? "present" : "absent") << '\n';
  for (const char* key : {"case", "kind", "a", "b", "c", "pivot", "target", "exclusion"}) {
    if (!j.contains(key)) continue;
    out << key << ": " << (j[key].is_string() ? j[key].get<std::string>() : j[key].dump()) << '\n';
  }
  if (j.contains("counterexample"))
    out << "counterexample: [" << j["counterexample"]["interval"][0] << ',' << j["counterexample"]["interval"][1]
        << "]\n";
  for (const auto& [s, x] : samples) out << "w(" << s << ") = " << x << '\n';
  return present ? 0 : 1;
}

inline int cmd_superset(const SelfMap& map, const PointSet& istar, const PointSet& h, const std::string& mode,
                        bool as_json, std::ostream& out) {
  if (istar.empty()) throw precondition_error("I* must be nonempty");
  for (const auto* s : {&istar, &h})
    for (Point x : *s)
      if (!map.in_domain(x)) throw out_of_domain("point " + std::to_string(x) + " is outside the domain");
  json j{{"mode", mode}, {"istar", to_json(istar)}};
  int code = 0;
  std::string absent_reason;
  if (mode == "orbit") {
    try {
      j["G"] = to_json(build_G_orbit_union(map, istar, h));
    } catch (const infinite_orbit& e) {
      absent_reason = e.what();
    }
  } else {
    if (!map.is_nat()) throw not_nat_domain("mode '" + mode + "' needs a map on N");
    auto p = analyze_maxcond(map);
    if (!p) {
      absent_reason = "map does not satisfy f(f(n)) = f(n) >= n";
    } else if (mode == "maxcond") {
      const auto g = build_G_maxcond(*p, istar, h);
      j["G"] = to_json(g);
      j["admissible"] = maxcond_h_admissible(*p, istar, h);
      j["closed"] = check_superset_closure(map, istar, g);
    } else {
      try {
        const auto b = interval_superset_bounds(*p, map, istar);
        j["u_star"] = b.u_star;
        j["u_max"] = b.u_max;
        j["v"] = b.v;
        j["G"] = to_json(b.largest());
        j["smallest"] = to_json(b.smallest());
      } catch (const profile_invalid& e) {
        absent_reason = e.what();
      }
    }
  }
  if (!absent_reason.empty()) {
    j["G"] = nullptr;
    j["reason"] = absent_reason;
    code = 1;
  }
  if (as_json) {
    out << j.dump() << '\n';
    return code;
  }
  if (code) {
    out << "G: absent\nreason: " << absent_reason << '\n';
    return code;
  }
  if (mode == "interval") {
    out << "u*: " << j["u_star"].get<Point>() << '\n'
        << "u_max: " << j["u_max"].get<Point>() << '\n'
        << "v: " << j["v"].get<Point>() << '\n'
        << "G: [" << j["u_star"].get<Point>() << ',' << j["v"].get<Point>() << "]\n";
    return 0;
  }
  out << "G: " << PointSet(j["G"]["set"].get<std::vector<Point>>()) << '\n';
  if (mode == "maxcond")
    out << "admissible: " << (j["admissible"].get<bool>() ? "true" : "false") << '\n'
        << "closed: " << (j["closed"].get<bool>() ? "true" : "false") << '\n';
  return 0;
}

inline int cmd_solve(const SelfMap& map, PMode mode, const std::vector<PointSet>& requested, bool as_json,
                     std::ostream& out) {
  const auto sol = mode == PMode::P1 ? solve_P1(map) : solve_P2(map);
  json j{{"mode", to_string(mode)}, {"present", sol.has_value()}};
  if (!sol && mode == PMode::P2)
    if (auto p = incomparable_pair(map, OrderScope::infinite_only)) j["incomparable"] = {p->first, p->second};
  std::vector<std::string> lines;
  if (sol) {
    j["construction"] = sol->construction;
    if (mode == PMode::P2 && map.is_nat())
      if (auto a = has_full_orbit(map)) j["full_orbit"] = *a;
    json samples = json::array();
    for (const auto& s : requested.empty() ? sample_sets(map, 2) : requested) {
      for (Point x : s)
        if (!map.in_domain(x)) throw out_of_domain("point " + std::to_string(x) + " is outside the domain");
      const auto g = sol->G(s);
      const Point u = sol->u(s);
      samples.push_back(json{{"istar", to_json(s)}, {"G", to_json(g)}, {"u", u}});
      lines.push_back("I*=" + show(s) + " G=" + show(g) + " u=" + std::to_string(u));
    }
    j["samples"] = samples;
  }
  if (as_json) {
    out << j.dump() << '\n';
  } else {
    out << to_string(mode) << ": " << (sol ? "present" : "absent") << '\n';
    if (j.contains("incomparable"))
      out << "incomparable: " << j["incomparable"][0] << ' ' << j["incomparable"][1] << '\n';
    if (sol) out << "construction: " << sol->construction << '\n';
    if (j.contains("full_orbit")) out << "full orbit: " << j["full_orbit"] << '\n';
    for (const auto& l : lines) out << l << '\n';
  }
  return sol ? 0 : 1;
}

inline int cmd_verify(SuiteConfig cfg, const std::string& mutant, bool as_json, std::ostream& out) {
  if (!mutant.empty()) cfg.ops = mutated_ops(mutant);
  const auto rep = run_theorem_suite(cfg);
  if (as_json) {
    out << rep.dump(2) << '\n';
    return rep.passed() ? 0 : 1;
  }
  for (const auto& t : rep.theorems) {
    out << (t.passed() ? "PASS " : "FAIL ") << t.id << " checked=" << t.checked;
    if (!t.passed()) out << " failed=" << t.failed;
    out << '\n';
    for (std::size_t i = 0; i < std::min<std::size_t>(3, t.failures.size()); ++i)
      out << "  counterexample: " << t.failures[i].to_json().dump() << '\n';
  }
  out << "suite: " << (rep.passed() ? "PASS" : "FAIL") << " (" << rep.checked_count() << " checks, "
      << rep.failure_count() << " failures)\n";
  return rep.passed() ? 0 : 1;
}

/// Functional graph in DOT. N-maps are cut at the window; tail edges carry
/// the shift as a label.
inline int cmd_export_dot(const SelfMap& map, Point window, std::ostream& out) {
  out << "digraph quasinv {\n";
  if (map.is_finite()) {
    for (Point x = 0; x < map.table().size(); ++x) out << "  " << x << " -> " << map.apply(x) << ";\n";
  } else {
    const auto& d = map.described();
    for (Point x = 0; x < window; ++x) {
      out << "  " << x << " -> " << map.apply(x);
      if (x >= d.prefix_len()) {
        const auto c = d.shift_at(x);
        out << " [label=\"" << (c >= 0 ? "+" : "") << c << "\"]";
      }
      out << ";\n";
    }
  }
  out << "}\n";
  return 0;
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"Orbits, quasi-invariant sets and invariant supersets of self-maps"};
  app.require_subcommand(1);

  std::string map_arg;
  bool as_json = false;
  auto add_map = [&](CLI::App* sub) {
    sub->add_option("map", map_arg, "map file, inline JSON, or a built-in name (succ, id, ...)")->required();
    sub->add_flag("--json", as_json, "JSON output");
  };

  auto* orbit_cmd = app.add_subcommand("orbit", "orbit of a point");
  add_map(orbit_cmd);
  Point x = 0;
  orbit_cmd->add_option("x", x, "start point")->required();

  auto* qi_cmd = app.add_subcommand("qi", "quasi-invariance of a set or interval");
  add_map(qi_cmd);
  std::string set_arg;
  std::vector<Point> interval_arg;
  std::int64_t k = 1;
  bool internal = false, external = false;
  auto* set_opt = qi_cmd->add_option("--set", set_arg, "finite set, e.g. 1,2,5");
  auto* iv_opt = qi_cmd->add_option("--interval", interval_arg, "interval bounds LO HI")->expected(2);
  set_opt->excludes(iv_opt);
  qi_cmd->add_option("--k", k, "number of points allowed to leave")->check(CLI::NonNegativeNumber);
  auto* int_flag = qi_cmd->add_flag("--internal", internal, "internal variant (default)");
  qi_cmd->add_flag("--external", external, "external variant")->excludes(int_flag);

  auto* classify_cmd = app.add_subcommand("classify", "classify 1-quasi-invariance witnesses");
  add_map(classify_cmd);
  bool subsets = false, intervals = false, strict = false;
  classify_cmd->add_flag("--subsets", subsets, "all finite subsets");
  classify_cmd->add_flag("--intervals", intervals, "all intervals of N");
  classify_cmd->add_flag("--strict", strict, "intervals with the image of w outside");

  auto* superset_cmd = app.add_subcommand("superset", "invariant superset G(I*)");
  superset_cmd->set_help_flag("--help", "print this help");  // frees --h for H
  add_map(superset_cmd);
  std::string istar_arg, h_arg;
  std::string mode = "orbit";
  superset_cmd->add_option("--istar", istar_arg, "I*")->required();
  superset_cmd->add_option("--h", h_arg, "extra points H");
  superset_cmd->add_option("--mode", mode, "orbit, maxcond or interval")
      ->check(CLI::IsMember({"orbit", "maxcond", "interval"}));

  auto* solve_cmd = app.add_subcommand("solve", "superset with one removable point");
  add_map(solve_cmd);
  bool p1 = false, p2 = false;
  std::vector<std::string> solve_sets;
  auto* p1_flag = solve_cmd->add_flag("--p1", p1, "removal point anywhere in G");
  solve_cmd->add_flag("--p2", p2, "removal point inside I*")->excludes(p1_flag);
  solve_cmd->add_option("--istar", solve_sets, "I* to evaluate (repeatable)");

  auto* verify_cmd = app.add_subcommand("verify", "run the theorem suite");
  SuiteConfig cfg;
  std::optional<Point> window_opt;
  std::vector<std::string> theorems;
  std::string mutant;
  verify_cmd->add_option("--n", cfg.n_max, "largest finite domain enumerated");
  verify_cmd->add_option("--window", window_opt, "window W for N-maps");
  verify_cmd->add_option("--seed", cfg.seed, "seed for random maps");
  verify_cmd->add_option("--samples", cfg.samples, "number of random N-maps");
  verify_cmd->add_option("--bound", cfg.indivisibility_bound, "indivisibility search bound");
  verify_cmd->add_option("--theorem", theorems, "restrict to these ids (repeatable)");
  verify_cmd->add_option("--mutant", mutant, "run against a catalogued mutant");
  verify_cmd->add_flag("--json", as_json, "JSON report");

  auto* dot_cmd = app.add_subcommand("export-dot", "functional graph in DOT");
  dot_cmd->add_option("map", map_arg, "map file, inline JSON, or a built-in name")->required();
  dot_cmd->add_option("--window", window_opt, "points of N to draw");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    auto window = [&] { return window_opt ? *window_opt : window_from_env(); };
    if (orbit_cmd->parsed()) return cmd_orbit(load_map(map_arg), x, as_json, out);
    if (qi_cmd->parsed()) {
      if (set_arg.empty() == interval_arg.empty()) throw precondition_error("give exactly one of --set, --interval");
      const PointSet lambda = interval_arg.empty() ? parse_set_arg(set_arg)
                                                   : Interval(interval_arg[0], interval_arg[1]).to_set();
      const auto map = load_map(map_arg);
      for (Point p : lambda)
        if (!map.in_domain(p)) throw out_of_domain("point " + std::to_string(p) + " is outside the domain");
      return cmd_qi(map, lambda, k, external, as_json, out);
    }
    if (classify_cmd->parsed()) {
      if (int(subsets) + int(intervals) + int(strict) != 1)
        throw precondition_error("give exactly one of --subsets, --intervals, --strict");
      return cmd_classify(load_map(map_arg), subsets ? "subsets" : intervals ? "intervals" : "strict", as_json,
                          out);
    }
    if (superset_cmd->parsed())
      return cmd_superset(load_map(map_arg), parse_set_arg(istar_arg), parse_set_arg(h_arg), mode, as_json, out);
    if (solve_cmd->parsed()) {
      if (!p1 && !p2) throw precondition_error("give one of --p1, --p2");
      std::vector<PointSet> sets;
      for (const auto& s : solve_sets) sets.push_back(parse_set_arg(s));
      return cmd_solve(load_map(map_arg), p1 ? PMode::P1 : PMode::P2, sets, as_json, out);
    }
    if (verify_cmd->parsed()) {
      cfg.window = window();
      if (!theorems.empty()) cfg.theorems = theorems;
      return cmd_verify(cfg, mutant, as_json, out);
    }
    if (dot_cmd->parsed()) return cmd_export_dot(load_map(map_arg), window(), out);
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace quasinv
