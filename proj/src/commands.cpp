#include "ladder/a_invariant.hpp"
#include "ladder/cli.hpp"
#include "ladder/errors.hpp"
#include "ladder/hilbert_series.hpp"
#include "ladder/oracle.hpp"
#include "ladder/turn_maximization.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <sstream>

namespace ladder {

namespace {

using json = nlohmann::ordered_json;

json to_json(Point p) { return json::array({p.x, p.y}); }

json to_json(std::span<const Point> pts) {
  json a = json::array();
  for (Point p : pts)
    a.push_back(to_json(p));
  return a;
}

json to_json(const BigInt &n) {
  // Small values stay numbers; anything wider is carried as a string.
  if (n >= std::numeric_limits<long long>::min() &&
      n <= std::numeric_limits<long long>::max())
    return n.convert_to<long long>();
  return n.str();
}

const char *label_name(GateLabel l) {
  switch (l) {
  case GateLabel::S:
    return "S";
  case GateLabel::T:
    return "T";
  case GateLabel::Both:
    return "ST";
  }
  return "?";
}

std::string gates_text(std::span<const GatePoint> gates) {
  std::string s;
  for (std::size_t k = 0; k < gates.size(); ++k) {
    if (k)
      s += ',';
    s += "(" + std::to_string(gates[k].level) + "," +
         std::to_string(gates[k].offset) + ")";
  }
  return s;
}

json gates_json(std::span<const GatePoint> gates) {
  json a = json::array();
  for (const auto &g : gates)
    a.push_back({{"level", g.level},
                 {"offset", g.offset},
                 {"label", label_name(g.label)}});
  return a;
}

std::string labels_text(std::span<const GatePoint> gates) {
  std::string s;
  for (std::size_t k = 0; k < gates.size(); ++k) {
    if (k)
      s += ',';
    s += k == 0 ? "start" : label_name(gates[k].label);
  }
  return s;
}

template <class T> std::string join(const std::vector<T> &xs) {
  std::ostringstream os;
  for (std::size_t k = 0; k < xs.size(); ++k)
    os << (k ? "," : "") << xs[k];
  return os.str();
}

/// Ordered key/value report, printed either as `key: value` lines or as a
/// JSON object.
class Report {
public:
  void add(const std::string &key, const std::string &text, json value) {
    lines_.push_back(key + ": " + (text.empty() ? "none" : text));
    obj_[key] = std::move(value);
  }
  void add(const std::string &key, long long v) {
    add(key, std::to_string(v), v);
  }
  void add(const std::string &key, const std::string &v) { add(key, v, v); }
  void add(const std::string &key, const char *v) { add(key, std::string(v)); }
  void add_flag(const std::string &key, bool v) { add(key, v ? "yes" : "no", v); }
  void add_ints(const std::string &key, const std::vector<int> &v) {
    add(key, join(v), v);
  }
  void add_points(const std::string &key, std::span<const Point> pts) {
    add(key, to_string(std::vector<Point>(pts.begin(), pts.end())),
        to_json(pts));
  }
  void add_block(const std::string &key, const std::string &block) {
    lines_.push_back(key + ":");
    json rows = json::array();
    std::istringstream in(block);
    for (std::string line; std::getline(in, line);) {
      lines_.push_back(line);
      rows.push_back(line);
    }
    obj_[key] = rows;
  }
  [[nodiscard]] std::string str(bool as_json) const {
    if (as_json)
      return obj_.dump(2) + "\n";
    std::string s;
    for (const auto &l : lines_)
      s += l + "\n";
    return s;
  }

private:
  std::vector<std::string> lines_;
  json obj_ = json::object();
};

struct Context {
  const Problem &problem;
  const RunOptions &options;
  Report report;
  std::string err;
  int code = exit_code::ok;

  [[nodiscard]] const Instance &instance() const {
    if (!problem.instance)
      throw InvalidInput("this subcommand needs a ladder (A, B, u, v, region)");
    return *problem.instance;
  }
  [[nodiscard]] OracleBudget budget() const {
    OracleBudget b;
    b.max_steps = options.budget;
    return b;
  }
  void mismatch(const std::string &what) {
    err += "verify: " + what + "\n";
    code = exit_code::verify_mismatch;
  }
  // Runs an oracle cross-check; a budget overrun only skips it.
  void verify(const std::function<void()> &check) {
    if (!options.verify)
      return;
    try {
      check();
    } catch (const InstanceTooLarge &e) {
      report.add("verify", "skipped");
      err += std::string("verify skipped: ") + e.what() + "\n";
    }
  }
};

void add_flags(Report &r, const AssumptionFlags &f) {
  r.add_flag("endpoints-in-ladder", f.endpoints_in_region);
  r.add_flag("boundaries-in-ladder", f.boundaries_in_region);
  r.add_flag("d-formula", f.d_matches_formula);
}

void cmd_a_invariant(Context &ctx) {
  const auto &in = ctx.instance();
  const auto rep = a_invariant(in.region, in.minor);
  ctx.report.add("method", std::string(method_name(rep.method)));
  ctx.report.add("a-invariant", rep.value);
  ctx.report.add_ints("t", rep.t);
  ctx.report.add("d", rep.d);
  add_flags(ctx.report, rep.flags);
  ctx.verify([&] {
    const auto gf = a_invariant_from_gf(in.region, in.minor, ctx.budget());
    ctx.report.add("verify-gf-degree", gf.value);
    if (gf.value == rep.value)
      ctx.report.add("verify", "ok");
    else {
      ctx.report.add("verify", "mismatch");
      ctx.mismatch("gf-degree gives " + std::to_string(gf.value));
    }
  });
}

void add_trace(Report &r, const std::string &prefix, const SlalomTrace &t) {
  r.add(prefix + "max", t.max_turns);
  r.add(prefix + "p3", gates_text(t.p3), gates_json(t.p3));
  r.add(prefix + "p3-labels", labels_text(t.p3));
}

void cmd_max_turns(Context &ctx) {
  const auto &in = ctx.instance();
  const int A = in.region.max_y(), B = in.region.max_x();
  const auto upper = upper_inwards_corners(in.region);
  const auto lower = lower_inwards_corners(in.region);
  require_endpoints_in_region(in.region, in.minor);
  if (in.region.is_upper()) {
    const auto one = theorem1_family_max(in.minor, A, B, upper);
    ctx.report.add_ints("one-sided-t", one.t);
    ctx.report.add("one-sided-total", one.total);
  }
  const auto two = theorem2_family_max(in.minor, A, B, upper, lower);
  ctx.report.add_ints("t", two.t);
  ctx.report.add("total", two.total);
  for (std::size_t k = 0; k < two.traces.size(); ++k)
    add_trace(ctx.report, "path-" + std::to_string(k + 1) + "-",
              two.traces[k]);
  const auto family = witness_family(in.region, in.minor);
  int turns = 0;
  for (const auto &p : family)
    turns += static_cast<int>(ne_turns(p).size());
  ctx.report.add("witness-turns", turns);
  ctx.verify([&] {
    const auto gf =
        gf_families(theorem3_constraints(in.region, in.minor), ctx.budget());
    ctx.report.add("verify-gf-degree", gf.degree());
    if (gf.degree() == two.total)
      ctx.report.add("verify", "ok");
    else {
      ctx.report.add("verify", "mismatch");
      ctx.mismatch("gf degree is " + std::to_string(gf.degree()));
    }
  });
}

void cmd_slalom(Context &ctx) {
  if (ctx.problem.slalom) {
    const auto &s = *ctx.problem.slalom;
    const auto trace = slalom_max(s.start, s.end, s.se, s.nw);
    ctx.report.add_points("start", std::vector<Point>{s.start});
    ctx.report.add_points("end", std::vector<Point>{s.end});
    ctx.report.add("p2", gates_text(trace.p2), gates_json(trace.p2));
    add_trace(ctx.report, "", trace);
    const auto path = slalom_witness(trace);
    ctx.report.add("witness", path.word());
    ctx.report.add("witness-turns", countable_turns(path, trace.nw));
    ctx.verify([&] {
      const int brute = max_ne_single(s.start, s.end, s.se, s.nw, s.nw,
                                      ctx.budget());
      ctx.report.add("verify-brute-force", brute);
      if (brute == trace.max_turns)
        ctx.report.add("verify", "ok");
      else {
        ctx.report.add("verify", "mismatch");
        ctx.mismatch("brute force gives " + std::to_string(brute));
      }
    });
    return;
  }
  const auto &in = ctx.instance();
  const int A = in.region.max_y(), B = in.region.max_x();
  const auto upper = upper_inwards_corners(in.region);
  const auto lower = lower_inwards_corners(in.region);
  require_endpoints_in_region(in.region, in.minor);
  bool all_ok = true;
  for (int i = 1; i <= in.minor.size(); ++i) {
    const auto gates = lemma2b_constraints(i, in.minor, A, B, upper, lower);
    const auto trace = slalom_max(in.minor.start(i), in.minor.end(i, A, B),
                                  gates.se, gates.nw);
    const std::string prefix = "path-" + std::to_string(i) + "-";
    add_trace(ctx.report, prefix, trace);
    ctx.verify([&] {
      const int brute =
          max_ne_single(in.minor.start(i), in.minor.end(i, A, B), gates.se,
                        gates.nw, gates.nw, ctx.budget());
      ctx.report.add(prefix + "verify-brute-force", brute);
      if (brute != trace.max_turns) {
        all_ok = false;
        ctx.mismatch("path " + std::to_string(i) + ": brute force gives " +
                     std::to_string(brute));
      }
    });
  }
  if (ctx.options.verify && ctx.code == exit_code::ok)
    ctx.report.add("verify", all_ok ? "ok" : "mismatch");
}

void cmd_oracle(Context &ctx) {
  const auto &in = ctx.instance();
  const auto data = theorem3_data(in.region, in.minor);
  const auto gf =
      gf_families(theorem3_constraints(in.region, in.minor), ctx.budget());
  ctx.report.add("gf", gf.to_string());
  ctx.report.add("gf-degree", gf.degree());
  ctx.report.add("families", gf.evaluate(1).str(), to_json(gf.evaluate(1)));
  ctx.report.add("d", data.d);
  if (gf.is_zero())
    throw AssumptionViolated("no admissible family of paths exists");
  ctx.report.add("a-invariant", gf.degree() - data.d);
}

void cmd_hilbert(Context &ctx) {
  const auto &in = ctx.instance();
  const auto hs = hilbert_numerator(in.region, in.minor, ctx.budget());
  ctx.report.add("numerator", hs.numerator.to_string());
  ctx.report.add("d", hs.d);
  std::vector<std::string> text;
  json values = json::array();
  for (int ell = 0; ell < ctx.options.coeffs; ++ell) {
    const BigInt c = hilbert_coefficient(hs.numerator, hs.d, ell);
    text.push_back(c.str());
    values.push_back(to_json(c));
  }
  ctx.report.add("coefficients", join(text), values);
  if (!hs.numerator.is_zero())
    ctx.report.add("a-invariant", hs.numerator.degree() - hs.d);
}

void cmd_validate(Context &ctx) {
  const auto &in = ctx.instance();
  const auto &r = in.region;
  const int A = r.max_y(), B = r.max_x();
  ctx.report.add("A", A);
  ctx.report.add("B", B);
  ctx.report.add("kind", r.is_rectangle() ? "rectangle"
                         : r.is_upper()   ? "upper"
                         : r.is_lower()   ? "lower"
                                          : "two-sided");
  ctx.report.add_points("upper-corners", upper_inwards_corners(r));
  ctx.report.add_points("lower-corners", lower_inwards_corners(r));
  std::vector<Point> starts, ends;
  for (int i = 1; i <= in.minor.size(); ++i) {
    starts.push_back(in.minor.start(i));
    ends.push_back(in.minor.end(i, A, B));
  }
  ctx.report.add_points("starts", starts);
  ctx.report.add_points("ends", ends);
  try {
    const auto data = theorem3_data(r, in.minor);
    add_flags(ctx.report, {true, data.boundaries_in_region,
                           data.d_matches_formula});
    ctx.report.add("d", data.d);
    if (!data.boundaries_in_region) {
      ctx.err += "some boundary set B^(i) is not a full path inside the "
                 "ladder\n";
      ctx.code = exit_code::assumption;
    }
  } catch (const AssumptionViolated &e) {
    ctx.report.add_flag("endpoints-in-ladder", false);
    ctx.err += std::string(e.what()) + "\n";
    ctx.code = exit_code::assumption;
  }
}

void cmd_render(Context &ctx) {
  if (!ctx.problem.instance && ctx.problem.slalom) {
    const auto &s = *ctx.problem.slalom;
    if (s.start.x < 0 || s.start.y < 0)
      throw InvalidInput("render needs nonnegative slalom coordinates");
    const auto trace = slalom_max(s.start, s.end, s.se, s.nw);
    const auto path = slalom_witness(trace);
    const auto box = LadderRegion::rectangle(s.end.y, s.end.x);
    ctx.report.add("witness-turns", countable_turns(path, trace.nw));
    ctx.report.add_block("picture",
                         render_ascii(box, std::vector<LatticePath>{path},
                                      {trace.se, trace.nw}));
    return;
  }
  const auto &in = ctx.instance();
  std::vector<LatticePath> family;
  try {
    family = witness_family(in.region, in.minor);
  } catch (const Infeasible &e) {
    ctx.err += std::string("no witness family: ") + e.what() + "\n";
  }
  int turns = 0;
  for (const auto &p : family)
    turns += static_cast<int>(ne_turns(p).size());
  ctx.report.add("witness-turns", turns);
  ctx.report.add_block("picture", render_ascii(in.region, family));
}

using Handler = void (*)(Context &);

const std::map<std::string_view, Handler> &handlers() {
  static const std::map<std::string_view, Handler> table{
      {"a-invariant", cmd_a_invariant}, {"max-turns", cmd_max_turns},
      {"slalom", cmd_slalom},           {"oracle", cmd_oracle},
      {"hilbert", cmd_hilbert},         {"validate", cmd_validate},
      {"render", cmd_render},
  };
  return table;
}

} // namespace

RunResult run(std::string_view command, const Problem &problem,
              const RunOptions &options) {
  RunResult result;
  const auto it = handlers().find(command);
  if (it == handlers().end()) {
    result.exit_code = exit_code::invalid_input;
    result.err = "unknown subcommand '" + std::string(command) + "'\n";
    return result;
  }
  Context ctx{problem, options, {}, {}, exit_code::ok};
  try {
    it->second(ctx);
  } catch (const InvalidInput &e) {
    ctx.err += std::string("invalid input: ") + e.what() + "\n";
    ctx.code = exit_code::invalid_input;
  } catch (const AssumptionViolated &e) {
    ctx.err += std::string("assumption violated: ") + e.what() + "\n";
    ctx.code = exit_code::assumption;
  } catch (const Infeasible &e) {
    ctx.err += std::string("infeasible: ") + e.what() + "\n";
    ctx.code = exit_code::assumption;
  } catch (const InstanceTooLarge &e) {
    ctx.err += std::string("instance too large: ") + e.what() + "\n";
    ctx.code = exit_code::too_large;
  } catch (const std::exception &e) {
    ctx.err += std::string("internal error: ") + e.what() + "\n";
    ctx.code = exit_code::invalid_input;
  }
  result.exit_code = ctx.code;
  // Partial reports are withheld on failure so stdout only carries results.
  if (ctx.code == exit_code::ok || ctx.code == exit_code::verify_mismatch ||
      command == "validate")
    result.out = ctx.report.str(options.json);
  result.err = ctx.err;
  return result;
}

RunResult run_text(std::string_view command, std::string_view text,
                   const RunOptions &options) {
  Problem problem;
  try {
    problem = parse_problem(text);
  } catch (const InvalidInput &e) {
    RunResult r;
    r.exit_code = exit_code::invalid_input;
    r.err = std::string("parse error: ") + e.what() + "\n";
    return r;
  }
  return run(command, problem, options);
}

} // namespace ladder
