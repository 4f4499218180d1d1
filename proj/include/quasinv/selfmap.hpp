#pragma once

// Self-maps on a finite domain [0,n) or on N, plus the point-set and
// interval value types every other module works with.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "quasinv/error.hpp"

namespace quasinv {

/// A domain element. Always non-negative; signed so that shifts compose
/// without casts.
using Point = std::int64_t;

/// Sorted, duplicate-free finite set of domain elements.
class PointSet {
 public:
  using const_iterator = std::vector<Point>::const_iterator;

  PointSet() = default;
  PointSet(std::initializer_list<Point> pts) : PointSet(std::vector<Point>(pts)) {}
  explicit PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
    if (!pts_.empty() && pts_.front() < 0) throw precondition_error("negative point in set");
  }

  /// Builds [lo, hi] as a set.
  static PointSet range(Point lo, Point hi) {
    std::vector<Point> v;
    for (Point x = lo; x <= hi; ++x) v.push_back(x);
    return PointSet(std::move(v));
  }

  /// Bit i of `mask` selects element `base + i`.
  static PointSet from_mask(std::uint64_t mask, Point base = 0) {
    std::vector<Point> v;
    for (int i = 0; mask != 0; ++i, mask >>= 1)
      if (mask & 1U) v.push_back(base + i);
    PointSet s;
    s.pts_ = std::move(v);
    return s;
  }

  bool empty() const noexcept { return pts_.empty(); }
  std::size_t size() const noexcept { return pts_.size(); }
  Point min() const { return pts_.front(); }
  Point max() const { return pts_.back(); }
  bool contains(Point x) const { return std::binary_search(pts_.begin(), pts_.end(), x); }
  bool includes(const PointSet& other) const {
    return std::includes(pts_.begin(), pts_.end(), other.pts_.begin(), other.pts_.end());
  }
  const_iterator begin() const noexcept { return pts_.begin(); }
  const_iterator end() const noexcept { return pts_.end(); }
  const std::vector<Point>& values() const noexcept { return pts_; }
  std::span<const Point> view() const noexcept { return pts_; }

  PointSet with(Point x) const {
    auto v = pts_;
    v.push_back(x);
    return PointSet(std::move(v));
  }
  PointSet without(Point x) const {
    PointSet s;
    s.pts_.reserve(pts_.size());
    for (Point p : pts_)
      if (p != x) s.pts_.push_back(p);
    return s;
  }
  PointSet united(const PointSet& other) const {
    PointSet s;
    std::set_union(pts_.begin(), pts_.end(), other.pts_.begin(), other.pts_.end(),
                   std::back_inserter(s.pts_));
    return s;
  }
  PointSet minus(const PointSet& other) const {
    PointSet s;
    std::set_difference(pts_.begin(), pts_.end(), other.pts_.begin(), other.pts_.end(),
                        std::back_inserter(s.pts_));
    return s;
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;
  friend auto operator<=>(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> pts_;
};

inline std::ostream& operator<<(std::ostream& os, const PointSet& s) {
  os << '{';
  bool first = true;
  for (Point p : s) {
    os << (first ? "" : ",") << p;
    first = false;
  }
  return os << '}';
}

/// Closed interval [lo, hi] of naturals.
struct Interval {
  Point lo = 0;
  Point hi = 0;

  Interval() = default;
  Interval(Point l, Point h) : lo(l), hi(h) {
    if (l < 0 || l > h) throw precondition_error("interval requires 0 <= lo <= hi");
  }
  bool contains(Point x) const noexcept { return lo <= x && x <= hi; }
  Point length() const noexcept { return hi - lo + 1; }
  PointSet to_set() const { return PointSet::range(lo, hi); }
  friend bool operator==(const Interval&, const Interval&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Interval& iv) {
  return os << '[' << iv.lo << ',' << iv.hi << ']';
}

/// Self-map of [0, n) given by its table.
struct FiniteTable {
  std::vector<Point> table;

  Point size() const noexcept { return static_cast<Point>(table.size()); }
  friend bool operator==(const FiniteTable&, const FiniteTable&) = default;
};

/// Self-map of N: explicit images for x < N, then x -> x + shifts[x mod m].
struct DescribedNatMap {
  std::vector<Point> prefix;
  std::int64_t modulus = 1;
  std::vector<std::int64_t> shifts{0};

  Point prefix_len() const noexcept { return static_cast<Point>(prefix.size()); }
  std::int64_t shift_at(Point x) const noexcept {
    return shifts[static_cast<std::size_t>(x % modulus)];
  }
  friend bool operator==(const DescribedNatMap&, const DescribedNatMap&) = default;
};

/// A validated self-map. Immutable after construction.
class SelfMap {
 public:
  explicit SelfMap(FiniteTable t) : rep_(std::move(t)) { validate(); }
  explicit SelfMap(DescribedNatMap d) : rep_(std::move(d)) { validate(); }

  static SelfMap finite(std::vector<Point> table) { return SelfMap(FiniteTable{std::move(table)}); }
  static SelfMap nat(std::vector<Point> prefix, std::vector<std::int64_t> shifts) {
    auto m = static_cast<std::int64_t>(shifts.size());
    return SelfMap(DescribedNatMap{std::move(prefix), m, std::move(shifts)});
  }

  bool is_finite() const noexcept { return std::holds_alternative<FiniteTable>(rep_); }
  bool is_nat() const noexcept { return !is_finite(); }
  const FiniteTable& table() const { return std::get<FiniteTable>(rep_); }
  const DescribedNatMap& described() const { return std::get<DescribedNatMap>(rep_); }

  /// Number of domain elements; empty for N.
  std::optional<Point> domain_size() const {
    if (is_finite()) return table().size();
    return std::nullopt;
  }

  bool in_domain(Point x) const noexcept {
    if (x < 0) return false;
    return is_nat() || x < table().size();
  }

  /// phi(x) without the domain check.
  Point apply(Point x) const noexcept {
    if (const auto* t = std::get_if<FiniteTable>(&rep_)) return t->table[static_cast<std::size_t>(x)];
    const auto& d = std::get<DescribedNatMap>(rep_);
    if (x < d.prefix_len()) return d.prefix[static_cast<std::size_t>(x)];
    return x + d.shift_at(x);
  }

  Point operator()(Point x) const {
    if (!in_domain(x)) throw out_of_domain("point " + std::to_string(x));
    return apply(x);
  }

  /// True when phi(x) = x for every x.
  bool is_identity() const {
    if (is_finite()) {
      const auto& t = table().table;
      for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] != static_cast<Point>(i)) return false;
      return true;
    }
    const auto& d = described();
    for (std::size_t i = 0; i < d.prefix.size(); ++i)
      if (d.prefix[i] != static_cast<Point>(i)) return false;
    return std::all_of(d.shifts.begin(), d.shifts.end(), [](auto c) { return c == 0; });
  }

  friend bool operator==(const SelfMap&, const SelfMap&) = default;

 private:
  void validate() const {
    if (const auto* t = std::get_if<FiniteTable>(&rep_)) {
      if (t->table.empty()) throw invalid_map("finite table must have size >= 1");
      for (std::size_t i = 0; i < t->table.size(); ++i) {
        if (t->table[i] < 0 || t->table[i] >= t->size())
          throw invalid_map("table entry " + std::to_string(i) + " = " +
                            std::to_string(t->table[i]) + " outside [0," +
                            std::to_string(t->size()) + ")");
      }
      return;
    }
    const auto& d = std::get<DescribedNatMap>(rep_);
    if (d.modulus < 1) throw invalid_map("modulus must be >= 1");
    if (static_cast<std::int64_t>(d.shifts.size()) != d.modulus)
      throw invalid_map("shifts must have exactly modulus entries");
    for (std::size_t i = 0; i < d.prefix.size(); ++i)
      if (d.prefix[i] < 0) throw invalid_map("prefix entry " + std::to_string(i) + " is negative");
    for (std::size_t r = 0; r < d.shifts.size(); ++r)
      if (d.prefix_len() + d.shifts[r] < 0)
        throw invalid_map("prefix length + shift of residue " + std::to_string(r) +
                          " is negative");
  }

  std::variant<FiniteTable, DescribedNatMap> rep_;
};

/// phi^k(x).
inline Point iterate(const SelfMap& map, Point x, std::uint64_t k) {
  if (!map.in_domain(x)) throw out_of_domain("point " + std::to_string(x));
  for (std::uint64_t i = 0; i < k; ++i) x = map.apply(x);
  return x;
}

inline Point eval(const SelfMap& map, Point x) { return map(x); }

/// Image phi(S) as a set.
inline PointSet image(const SelfMap& map, const PointSet& s) {
  std::vector<Point> v;
  v.reserve(s.size());
  for (Point x : s) v.push_back(map(x));
  return PointSet(std::move(v));
}

// ---------------------------------------------------------------------------
// Named maps used throughout the tests and the CLI.

namespace maps {

inline SelfMap succ() { return SelfMap::nat({}, {1}); }
inline SelfMap identity_nat() { return SelfMap::nat({}, {0}); }
inline SelfMap identity_finite(Point n) {
  std::vector<Point> t(static_cast<std::size_t>(n));
  for (Point i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = i;
  return SelfMap::finite(std::move(t));
}
/// x -> x + s for every x.
inline SelfMap shift_by(std::int64_t s) { return SelfMap::nat({}, {s}); }
/// 0 -> 2, odd -> +3, even >= 2 -> -1: conjugate of the successor with full orbit at 0.
inline SelfMap remark_conjugate() { return SelfMap::nat({2}, {-1, 3}); }
/// 0 -> 2, k -> k+1 for k >= 1: every orbit cofinite, none of them all of N.
inline SelfMap bullet() { return SelfMap::nat({2}, {1}); }
/// 0 -> 0, x -> x+1 for x >= 1.
inline SelfMap fixed_zero_then_succ() { return SelfMap::nat({0}, {1}); }
/// n -> n+1 below the pivot, pivot -> u, n -> n-1 above the pivot.
inline SelfMap pivot(Point pivot_point, Point u) {
  std::vector<Point> prefix;
  for (Point x = 0; x < pivot_point; ++x) prefix.push_back(x + 1);
  prefix.push_back(u);
  return SelfMap::nat(std::move(prefix), {-1});
}
/// 2n -> 2n, 2n+1 -> 2n+2.
inline SelfMap round_up_to_even() { return SelfMap::nat({}, {0, 1}); }

}  // namespace maps

// ---------------------------------------------------------------------------
// JSON encoding. Canonical form: keys sorted, empty prefix omitted.

using json = nlohmann::json;

inline json to_json(const SelfMap& map) {
  json j;
  if (map.is_finite()) {
    j["kind"] = "finite";
    j["size"] = map.table().size();
    j["table"] = map.table().table;
  } else {
    const auto& d = map.described();
    j["kind"] = "nat";
    if (!d.prefix.empty()) j["prefix"] = d.prefix;
    j["modulus"] = d.modulus;
    j["shifts"] = d.shifts;
  }
  return j;
}

inline std::string serialize_map(const SelfMap& map) { return to_json(map).dump(); }

namespace detail {

inline std::vector<Point> int_array(const json& j, const char* key) {
  if (!j.is_array()) throw parse_error(std::string("'") + key + "' must be an array");
  std::vector<Point> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw parse_error(std::string("'") + key + "' must hold integers");
    out.push_back(e.get<Point>());
  }
  return out;
}

inline json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw parse_error(e.what());
  }
}

}  // namespace detail

inline SelfMap map_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("map must be a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string()) throw parse_error("missing string 'kind'");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "finite") {
    if (!j.contains("table")) throw parse_error("finite map needs 'table'");
    auto table = detail::int_array(j["table"], "table");
    if (j.contains("size")) {
      if (!j["size"].is_number_integer()) throw parse_error("'size' must be an integer");
      if (j["size"].get<Point>() != static_cast<Point>(table.size()))
        throw invalid_map("'size' disagrees with table length");
    }
    return SelfMap(FiniteTable{std::move(table)});
  }
  if (kind == "nat") {
    if (!j.contains("shifts")) throw parse_error("nat map needs 'shifts'");
    auto shifts = detail::int_array(j["shifts"], "shifts");
    std::vector<Point> prefix;
    if (j.contains("prefix")) prefix = detail::int_array(j["prefix"], "prefix");
    std::int64_t modulus = static_cast<std::int64_t>(shifts.size());
    if (j.contains("modulus")) {
      if (!j["modulus"].is_number_integer()) throw parse_error("'modulus' must be an integer");
      modulus = j["modulus"].get<std::int64_t>();
    }
    return SelfMap(DescribedNatMap{std::move(prefix), modulus, std::move(shifts)});
  }
  throw parse_error("unknown kind '" + kind + "'");
}

inline SelfMap parse_map(std::string_view text) { return map_from_json(detail::parse_json_text(text)); }

inline json to_json(const PointSet& s) { return json{{"set", s.values()}}; }
inline json to_json(const Interval& iv) { return json{{"interval", {iv.lo, iv.hi}}}; }

inline PointSet parse_point_set(std::string_view text) {
  auto j = detail::parse_json_text(text);
  if (!j.is_object() || !j.contains("set")) throw parse_error("expected {\"set\":[...]}");
  auto v = detail::int_array(j["set"], "set");
  if (std::any_of(v.begin(), v.end(), [](Point p) { return p < 0; }))
    throw parse_error("set elements must be naturals");
  return PointSet(std::move(v));
}

inline Interval parse_interval(std::string_view text) {
  auto j = detail::parse_json_text(text);
  if (!j.is_object() || !j.contains("interval")) throw parse_error("expected {\"interval\":[lo,hi]}");
  auto v = detail::int_array(j["interval"], "interval");
  if (v.size() != 2 || v[0] < 0 || v[0] > v[1]) throw parse_error("interval must be [lo,hi] with 0<=lo<=hi");
  return Interval(v[0], v[1]);
}

}  // namespace quasinv
