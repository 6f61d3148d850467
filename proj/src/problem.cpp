#include "ladder/problem.hpp"

#include "ladder/errors.hpp"

#include <json.hpp>

#include <set>

namespace ladder {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &field, const std::string &what) {
  throw InvalidInput("field '" + field + "': " + what);
}

void only_keys(const json &obj, const std::string &where,
               std::initializer_list<const char *> keys) {
  const std::set<std::string> known(keys.begin(), keys.end());
  for (const auto &item : obj.items())
    if (!known.count(item.key()))
      fail(where.empty() ? item.key() : where + "." + item.key(),
           "unknown field");
}

int get_int(const json &j, const std::string &field) {
  if (!j.is_number_integer())
    fail(field, "expected an integer");
  return j.get<int>();
}

const json &require(const json &obj, const char *key,
                    const std::string &where) {
  const std::string field = where.empty() ? key : where + "." + key;
  if (!obj.contains(key))
    fail(field, "missing");
  return obj.at(key);
}

std::vector<int> int_list(const json &j, const std::string &field) {
  if (!j.is_array())
    fail(field, "expected a list of integers");
  std::vector<int> out;
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(get_int(j[k], field + "[" + std::to_string(k) + "]"));
  return out;
}

Point point(const json &j, const std::string &field) {
  if (!j.is_array() || j.size() != 2)
    fail(field, "expected a point [x, y]");
  return {get_int(j[0], field + "[0]"), get_int(j[1], field + "[1]")};
}

std::vector<Point> point_list(const json &j, const std::string &field) {
  if (!j.is_array())
    fail(field, "expected a list of points");
  std::vector<Point> out;
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(point(j[k], field + "[" + std::to_string(k) + "]"));
  return out;
}

template <class F> auto semantic(const std::string &field, F &&build) {
  try {
    return build();
  } catch (const InvalidInput &e) {
    fail(field, e.what());
  }
}

LadderRegion parse_region(const json &j, int A, int B) {
  if (j.is_string()) {
    if (j.get<std::string>() != "full")
      fail("region", "expected \"full\" or an object");
    return semantic("region", [&] { return LadderRegion::rectangle(A, B); });
  }
  if (!j.is_object())
    fail("region", "expected \"full\" or an object");
  only_keys(j, "region", {"upper_corners", "corners", "rows"});
  if (j.contains("upper_corners") && j.contains("corners"))
    fail("region", "give either upper_corners or corners, not both");

  std::optional<LadderRegion> by_corners;
  if (j.contains("upper_corners")) {
    auto upper = point_list(j.at("upper_corners"), "region.upper_corners");
    by_corners = semantic("region.upper_corners", [&] {
      return LadderRegion::from_corners(A, B, upper, {});
    });
  } else if (j.contains("corners")) {
    const json &c = j.at("corners");
    if (!c.is_object())
      fail("region.corners", "expected an object with upper and lower");
    only_keys(c, "region.corners", {"upper", "lower"});
    auto upper = c.contains("upper")
                     ? point_list(c.at("upper"), "region.corners.upper")
                     : std::vector<Point>{};
    auto lower = c.contains("lower")
                     ? point_list(c.at("lower"), "region.corners.lower")
                     : std::vector<Point>{};
    by_corners = semantic("region.corners", [&] {
      return LadderRegion::from_corners(A, B, upper, lower);
    });
  }

  std::optional<LadderRegion> by_rows;
  if (j.contains("rows")) {
    const json &rows = j.at("rows");
    if (!rows.is_array())
      fail("region.rows", "expected a list of [lo, hi] pairs");
    std::vector<RowInterval> intervals;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      Point p = point(rows[k], "region.rows[" + std::to_string(k) + "]");
      intervals.push_back({p.x, p.y});
    }
    by_rows = semantic("region.rows", [&] {
      return LadderRegion::from_row_intervals(A, B, intervals);
    });
  }

  if (by_corners && by_rows && !(*by_corners == *by_rows))
    fail("region", "corners and rows describe different ladders");
  if (by_corners)
    return *by_corners;
  if (by_rows)
    return *by_rows;
  fail("region", "needs upper_corners, corners or rows");
}

SlalomSpec parse_slalom(const json &j) {
  if (!j.is_object())
    fail("slalom", "expected an object");
  only_keys(j, "slalom", {"start", "end", "se", "nw"});
  SlalomSpec s;
  s.start = point(require(j, "start", "slalom"), "slalom.start");
  s.end = point(require(j, "end", "slalom"), "slalom.end");
  if (j.contains("se"))
    s.se = point_list(j.at("se"), "slalom.se");
  if (j.contains("nw"))
    s.nw = point_list(j.at("nw"), "slalom.nw");
  if (s.end.x < s.start.x || s.end.y < s.start.y)
    fail("slalom.end", "must lie weakly north-east of slalom.start");
  return s;
}

} // namespace

Problem parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    throw InvalidInput("syntax error at byte " + std::to_string(e.byte) +
                       ": " + e.what());
  }
  if (!doc.is_object())
    throw InvalidInput("problem file must hold a JSON object");
  only_keys(doc, "", {"schema", "A", "B", "u", "v", "region", "slalom"});
  if (doc.contains("schema") && get_int(doc.at("schema"), "schema") != 1)
    fail("schema", "only schema 1 is supported");

  Problem p;
  const bool has_ladder = doc.contains("A") || doc.contains("B") ||
                          doc.contains("u") || doc.contains("v") ||
                          doc.contains("region");
  if (has_ladder) {
    const int A = get_int(require(doc, "A", ""), "A");
    const int B = get_int(require(doc, "B", ""), "B");
    if (A < 0)
      fail("A", "must be nonnegative");
    if (B < 0)
      fail("B", "must be nonnegative");
    auto u = int_list(require(doc, "u", ""), "u");
    auto v = int_list(require(doc, "v", ""), "v");
    Minor minor = semantic("u/v", [&] { return Minor(u, v); });
    if (minor.u().back() > A + 1)
      fail("u", "entries must not exceed A+1");
    if (minor.v().back() > B + 1)
      fail("v", "entries must not exceed B+1");
    LadderRegion region = parse_region(require(doc, "region", ""), A, B);
    p.instance = Instance{std::move(region), std::move(minor)};
  }
  if (doc.contains("slalom"))
    p.slalom = parse_slalom(doc.at("slalom"));
  if (!p.instance && !p.slalom)
    throw InvalidInput("problem file needs a ladder (A, B, u, v, region) or "
                       "a slalom object");
  return p;
}

} // namespace ladder
