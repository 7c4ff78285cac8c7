// rcm: analytic sweeps, simulations, comparisons and scalability reports.
//
// Links against the C interface only.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "rcm/rcm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBreach = 2;

constexpr double kMaxGridQ = 0.95;
constexpr int kMaxSimBits = 20;
constexpr std::array<int64_t, 4> kHorizons = {10, 100, 1000, 10000};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- configuration ------------------------------------------------------

struct Config {
  std::string command;
  std::vector<std::string> geometry = {"all"};
  std::vector<int> d;
  double q_start = 0.0;
  double q_stop = 0.5;
  double q_step = 0.05;
  uint32_t trials = 10;
  uint32_t pairs = 2000;
  uint64_t seed = 1;
  std::string denominator = "paper";
  int kn = 1;
  int ks = 1;
  std::string ring_fingers = "fixed";
  std::string format = "csv";
  std::string out;
  bool check = false;
  std::string config_file;
};

std::vector<int> default_bits(const std::string& command) {
  if (command == "asymptotic") {
    std::vector<int> ds;
    for (int d = 10; d <= 100; d += 10) ds.push_back(d);
    return ds;
  }
  return {16};
}

std::vector<double> make_grid(double start, double stop, double step) {
  if (!(step > 0.0)) throw UsageError("--q-step must be positive");
  if (stop < start) throw UsageError("--q-stop must not be below --q-start");
  std::vector<double> grid;
  for (long i = 0;; ++i) {
    double q = start + static_cast<double>(i) * step;
    if (q > stop + 1e-9) break;
    // Snap away accumulated binary noise so 0.15 prints as 0.15.
    q = std::round(q * 1e12) / 1e12;
    grid.push_back(q);
    if (grid.size() > 100000) throw UsageError("q grid too large");
  }
  return grid;
}

std::vector<rcm_geometry_kind> parse_geometries(const std::vector<std::string>& names) {
  std::vector<rcm_geometry_kind> kinds;
  for (const auto& name : names) {
    if (name == "all") {
      for (int k = RCM_TREE; k <= RCM_SYMPHONY; ++k) {
        kinds.push_back(static_cast<rcm_geometry_kind>(k));
      }
      continue;
    }
    rcm_geometry_kind kind{};
    if (rcm_geometry_kind_parse(name.c_str(), &kind) != RCM_OK) {
      throw UsageError("unknown geometry '" + name + "'");
    }
    kinds.push_back(kind);
  }
  return kinds;
}

// ---- cells and formatting ----------------------------------------------

struct Empty {};
using Cell = std::variant<Empty, double, int64_t, uint64_t, std::string, bool>;

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  std::array<char, 64> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 10);
  return std::string(buf.data(), res.ptr);
}

// 2^d in decimal.
std::string power_of_two(int d) {
  std::vector<int> digits = {1};  // little-endian
  for (int i = 0; i < d; ++i) {
    int carry = 0;
    for (int& digit : digits) {
      const int v = digit * 2 + carry;
      digit = v % 10;
      carry = v / 10;
    }
    if (carry) digits.push_back(carry);
  }
  std::string s;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) s.push_back(static_cast<char>('0' + *it));
  return s;
}

Cell size_cell(int d) {
  if (d < 64) return uint64_t{1} << d;
  return power_of_two(d);
}

std::string csv_field(const Cell& cell) {
  struct {
    std::string operator()(Empty) const { return {}; }
    std::string operator()(double x) const { return format_real(x); }
    std::string operator()(int64_t x) const { return std::to_string(x); }
    std::string operator()(uint64_t x) const { return std::to_string(x); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
      std::string quoted = "\"";
      for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      return quoted + '"';
    }
  } visitor;
  return std::visit(visitor, cell);
}

nlohmann::ordered_json json_value(const Cell& cell) {
  struct {
    nlohmann::ordered_json operator()(Empty) const { return nullptr; }
    nlohmann::ordered_json operator()(double x) const {
      if (!std::isfinite(x)) return format_real(x);
      // Round-trip through the 10-digit text so JSON and CSV agree.
      const std::string text = format_real(x);
      double rounded = x;
      std::from_chars(text.data(), text.data() + text.size(), rounded);
      return rounded;
    }
    nlohmann::ordered_json operator()(int64_t x) const { return x; }
    nlohmann::ordered_json operator()(uint64_t x) const { return x; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  } visitor;
  return std::visit(visitor, cell);
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::vector<Cell>& add_row() {
    rows.emplace_back(columns.size(), Cell{Empty{}});
    return rows.back();
  }
  std::size_t col(const std::string& name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw std::logic_error("no column " + name);
    return static_cast<std::size_t>(it - columns.begin());
  }
};

using Metadata = std::vector<std::pair<std::string, Cell>>;

std::string render_csv(const Metadata& meta, const Table& table) {
  std::ostringstream os;
  for (const auto& [key, value] : meta) os << "# " << key << ": " << csv_field(value) << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << '\n';
  }
  return os.str();
}

std::string render_json(const Metadata& meta, const Table& table) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json m = nlohmann::ordered_json::object();
  for (const auto& [key, value] : meta) m[key] = json_value(value);
  doc["metadata"] = std::move(m);
  doc["columns"] = table.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) r[table.columns[i]] = json_value(row[i]);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + '\n';
}

// ---- C API wrappers ----------------------------------------------------

struct GeometryDeleter {
  void operator()(rcm_geometry* g) const { rcm_geometry_destroy(g); }
};
using Geometry = std::unique_ptr<rcm_geometry, GeometryDeleter>;

struct VerdictDeleter {
  void operator()(rcm_verdict* v) const { rcm_verdict_destroy(v); }
};
using Verdict = std::unique_ptr<rcm_verdict, VerdictDeleter>;

// Either a value or the library's message for the failure.
template <typename T>
using Result = std::variant<T, std::string>;

std::string last_error() { return rcm_last_error(); }

Result<Geometry> make_geometry(rcm_geometry_kind kind, int d, const Config& c) {
  rcm_geometry* g = nullptr;
  if (rcm_geometry_create(kind, d, c.kn, c.ks, &g) != RCM_OK) return last_error();
  return Geometry(g);
}

rcm_denominator denominator_of(const Config& c) {
  return c.denominator == "exact" ? RCM_DENOM_EXACT_SURVIVORS : RCM_DENOM_SURVIVORS_MINUS_ONE;
}

unsigned sim_flags(const Config& c) {
  return c.ring_fingers == "random" ? RCM_SIM_RANDOMIZED_FINGERS : 0u;
}

std::optional<std::string> grid_error(double q) {
  if (q < 0.0 || q > kMaxGridQ) return "q outside [0, 0.95]";
  return std::nullopt;
}

Result<rcm_routability_result> analytic(const rcm_geometry* g, double q, const Config& c) {
  if (auto e = grid_error(q)) return *e;
  rcm_routability_result r{};
  if (rcm_routability(g, q, denominator_of(c), &r) != RCM_OK) return last_error();
  return r;
}

Result<rcm_sim_outcome> simulate(const rcm_geometry* g, int d, double q, const Config& c) {
  if (auto e = grid_error(q)) return *e;
  if (d > kMaxSimBits) return "simulation requires d <= " + std::to_string(kMaxSimBits);
  rcm_sim_outcome s{};
  if (rcm_simulate(g, q, c.trials, c.pairs, c.seed, sim_flags(c), &s) != RCM_OK) {
    return last_error();
  }
  return s;
}

// ---- commands ------------------------------------------------------------

struct Job {
  rcm_geometry_kind kind;
  int d;
  double q;
};

std::vector<Job> jobs_for(const Config& c, const std::vector<double>& grid) {
  std::vector<Job> jobs;
  const auto bits = c.d.empty() ? default_bits(c.command) : c.d;
  for (rcm_geometry_kind kind : parse_geometries(c.geometry)) {
    for (int d : bits) {
      for (double q : grid) jobs.push_back({kind, d, q});
    }
  }
  return jobs;
}

void fill_key(const Table& t, std::vector<Cell>& row, const Job& job) {
  row[t.col("geometry")] = std::string(rcm_geometry_kind_name(job.kind));
  row[t.col("d")] = int64_t{job.d};
  row[t.col("N")] = job.d >= 1 ? size_cell(job.d) : Cell{Empty{}};
  row[t.col("q")] = job.q;
}

void fill_analytic(const Table& t, std::vector<Cell>& row, const rcm_routability_result& r) {
  row[t.col("expected_reach")] = r.expected_reach;
  row[t.col("reach_normalized")] = r.reach_normalized != 0;
  row[t.col("analytic_routability")] = r.routability;
  row[t.col("analytic_failed_fraction")] = r.failed_fraction;
  row[t.col("clamped")] = r.clamped != 0;
}

void fill_sim(const Table& t, std::vector<Cell>& row, const rcm_sim_outcome& s) {
  row[t.col("sim_routability")] = s.routable_fraction;
  row[t.col("sim_failed_fraction")] = 1.0 - s.routable_fraction;
  row[t.col("sim_std_error")] = s.std_error;
  row[t.col("hop_cap_hits")] = uint64_t{s.hop_cap_hits};
}

const std::vector<std::string> kKeyColumns = {"geometry", "d", "N", "q"};
const std::vector<std::string> kAnalyticColumns = {
    "expected_reach", "reach_normalized", "analytic_routability",
    "analytic_failed_fraction", "clamped"};
const std::vector<std::string> kSimColumns = {"sim_routability", "sim_failed_fraction",
                                              "sim_std_error", "hop_cap_hits", "seed"};

Table table_with(std::initializer_list<const std::vector<std::string>*> groups,
                 std::vector<std::string> extra) {
  Table t;
  t.columns = kKeyColumns;
  for (const auto* g : groups) t.columns.insert(t.columns.end(), g->begin(), g->end());
  t.columns.insert(t.columns.end(), extra.begin(), extra.end());
  return t;
}

struct Outcome {
  Table table;
  bool breach = false;
};

Outcome run_analytic(const Config& c, const std::vector<double>& grid) {
  Outcome out{table_with({&kAnalyticColumns}, {"error"})};
  Table& t = out.table;
  for (const Job& job : jobs_for(c, grid)) {
    auto& row = t.add_row();
    fill_key(t, row, job);
    auto g = make_geometry(job.kind, job.d, c);
    if (auto* e = std::get_if<std::string>(&g)) {
      row[t.col("error")] = *e;
      out.breach = true;
      continue;
    }
    const auto r = analytic(std::get<Geometry>(g).get(), job.q, c);
    if (auto* e = std::get_if<std::string>(&r)) {
      row[t.col("error")] = *e;
      out.breach = true;
      continue;
    }
    fill_analytic(t, row, std::get<rcm_routability_result>(r));
  }
  return out;
}

Outcome run_simulate(const Config& c, const std::vector<double>& grid) {
  Outcome out{table_with({&kSimColumns}, {"redrawn_patterns", "error"})};
  Table& t = out.table;
  for (const Job& job : jobs_for(c, grid)) {
    auto& row = t.add_row();
    fill_key(t, row, job);
    auto g = make_geometry(job.kind, job.d, c);
    if (auto* e = std::get_if<std::string>(&g)) {
      row[t.col("error")] = *e;
      out.breach = true;
      continue;
    }
    const auto s = simulate(std::get<Geometry>(g).get(), job.d, job.q, c);
    if (auto* e = std::get_if<std::string>(&s)) {
      row[t.col("error")] = *e;
      out.breach = true;
      continue;
    }
    const auto& sim = std::get<rcm_sim_outcome>(s);
    fill_sim(t, row, sim);
    row[t.col("seed")] = c.seed;
    row[t.col("redrawn_patterns")] = uint64_t{sim.redrawn_patterns};
  }
  return out;
}

// Agreement rule per geometry. gap = simulated - analytic routability.
struct Tolerance {
  std::optional<double> two_sided;  // |gap| bound
  std::optional<double> one_sided;  // gap >= -bound
};

Tolerance tolerance_for(rcm_geometry_kind kind, double q, double std_error) {
  switch (kind) {
    case RCM_TREE:
    case RCM_HYPERCUBE:
    case RCM_XOR: return {std::max(0.02, 3.0 * std_error), std::nullopt};
    case RCM_RING:
      // The model is a lower bound; it should be tight at low q.
      return {q <= 0.2 + 1e-12 ? std::optional<double>(0.03) : std::nullopt, 0.02};
    case RCM_SYMPHONY: return {0.05, std::nullopt};
  }
  return {};
}

Outcome run_compare(const Config& c, const std::vector<double>& grid) {
  Outcome out{table_with({&kAnalyticColumns, &kSimColumns},
                         {"gap", "tolerance", "lower_bound_slack", "within_tolerance",
                          "error"})};
  Table& t = out.table;
  for (const Job& job : jobs_for(c, grid)) {
    auto& row = t.add_row();
    fill_key(t, row, job);
    auto g = make_geometry(job.kind, job.d, c);
    if (auto* e = std::get_if<std::string>(&g)) {
      row[t.col("error")] = *e;
      out.breach = true;
      continue;
    }
    const rcm_geometry* geom = std::get<Geometry>(g).get();
    const auto r = analytic(geom, job.q, c);
    const auto s = simulate(geom, job.d, job.q, c);
    std::string error;
    if (auto* e = std::get_if<std::string>(&r)) error = *e;
    if (auto* e = std::get_if<std::string>(&s)) error += (error.empty() ? "" : "; ") + *e;
    if (auto* a = std::get_if<rcm_routability_result>(&r)) fill_analytic(t, row, *a);
    if (auto* sim = std::get_if<rcm_sim_outcome>(&s)) {
      fill_sim(t, row, *sim);
      row[t.col("seed")] = c.seed;
    }
    if (!error.empty()) {
      row[t.col("error")] = error;
      out.breach = true;
      continue;
    }
    const auto& a = std::get<rcm_routability_result>(r);
    const auto& sim = std::get<rcm_sim_outcome>(s);
    const double gap = sim.routable_fraction - a.routability;
    const Tolerance tol = tolerance_for(job.kind, job.q, sim.std_error);
    bool ok = sim.hop_cap_hits == 0;
    if (tol.two_sided) {
      row[t.col("tolerance")] = *tol.two_sided;
      ok = ok && std::abs(gap) <= *tol.two_sided;
    }
    if (tol.one_sided) {
      row[t.col("lower_bound_slack")] = *tol.one_sided;
      ok = ok && gap >= -*tol.one_sided;
    }
    row[t.col("gap")] = gap;
    row[t.col("within_tolerance")] = ok;
    out.breach = out.breach || !ok;
  }
  return out;
}

Outcome run_asymptotic(const Config& c, const std::vector<double>& grid) {
  // Same row shape as the analytic sweep, over a list of identifier lengths.
  return run_analytic(c, grid);
}

Outcome run_scalability(const Config& c, const std::vector<double>& grid) {
  std::vector<std::string> extra = {"verdict", "limit_estimate", "vanishing_horizon"};
  for (int64_t h : kHorizons) {
    extra.push_back("partial_sum_h" + std::to_string(h));
    extra.push_back("partial_product_h" + std::to_string(h));
  }
  extra.push_back("error");
  Outcome out{table_with({}, extra)};
  Table& t = out.table;
  for (const Job& job : jobs_for(c, grid)) {
    auto& row = t.add_row();
    fill_key(t, row, job);
    auto g = make_geometry(job.kind, job.d, c);
    rcm_verdict* raw = nullptr;
    std::string error;
    if (auto* e = std::get_if<std::string>(&g)) {
      error = *e;
    } else if (job.q == 0.0) {
      error = "scalability needs q > 0; a failure-free system is trivially routable";
    } else if (rcm_classify(std::get<Geometry>(g).get(), job.q, &raw) != RCM_OK) {
      error = last_error();
    }
    if (!error.empty()) {
      row[t.col("error")] = error;
      out.breach = true;
      continue;
    }
    const Verdict v(raw);
    row[t.col("verdict")] =
        std::string(rcm_verdict_get_kind(v.get()) == RCM_SCALABLE ? "scalable" : "unscalable");
    row[t.col("limit_estimate")] = rcm_verdict_limit_estimate(v.get());
    const int64_t horizon = rcm_verdict_vanishing_horizon(v.get());
    if (horizon >= 0) row[t.col("vanishing_horizon")] = horizon;
    for (size_t i = 0; i < rcm_verdict_evidence_count(v.get()); ++i) {
      int64_t h = 0;
      double sum = 0.0;
      double product = 0.0;
      rcm_verdict_evidence(v.get(), i, &h, &sum, &product);
      row[t.col("partial_sum_h" + std::to_string(h))] = sum;
      row[t.col("partial_product_h" + std::to_string(h))] = product;
    }
  }
  return out;
}

// ---- metadata ------------------------------------------------------------

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ",") + x;
  return s;
}

std::string join(const std::vector<int>& xs) {
  std::vector<std::string> parts;
  for (int x : xs) parts.push_back(std::to_string(x));
  return join(parts);
}

Metadata metadata(const Config& c, const std::vector<double>& grid) {
  const bool simulates = c.command == "simulate" || c.command == "compare";
  Metadata m;
  m.emplace_back("tool", std::string("rcm"));
  m.emplace_back("version", std::string(rcm_version()));
  m.emplace_back("command", c.command);
  m.emplace_back("config", c.config_file);
  m.emplace_back("geometry", join(c.geometry));
  m.emplace_back("d", join(c.d.empty() ? default_bits(c.command) : c.d));
  m.emplace_back("q_start", c.q_start);
  m.emplace_back("q_stop", c.q_stop);
  m.emplace_back("q_step", c.q_step);
  m.emplace_back("q_points", uint64_t{grid.size()});
  m.emplace_back("trials", uint64_t{c.trials});
  m.emplace_back("pairs", uint64_t{c.pairs});
  m.emplace_back("denominator", c.denominator);
  m.emplace_back("kn", int64_t{c.kn});
  m.emplace_back("ks", int64_t{c.ks});
  m.emplace_back("ring_fingers", c.ring_fingers);
  m.emplace_back("format", c.format);
  m.emplace_back("out", c.out);
  m.emplace_back("check", c.check);
  m.emplace_back("seed", c.seed);
  if (c.command == "scalability") {
    m.emplace_back("caveat", std::string(
        "verdicts assume q lies below the percolation threshold 1-p_c (not computed)"));
  }
  if (simulates) {
    uint64_t build = 0, fail = 0, pair = 0;
    rcm_sim_seeds(c.seed, &build, &fail, &pair);
    m.emplace_back("build_seed", build);
    m.emplace_back("fail_seed", fail);
    m.emplace_back("pair_seed", pair);
  }
  return m;
}

// ---- entry point -----------------------------------------------------------

void add_options(CLI::App& app, Config& c) {
  app.add_option("--geometry", c.geometry,
                 "Comma-separated geometries (tree, hypercube, xor, ring, symphony) or 'all'")
      ->delimiter(',');
  app.add_option("--d", c.d, "Comma-separated identifier lengths")->delimiter(',');
  app.add_option("--q-start", c.q_start, "First failure probability");
  app.add_option("--q-stop", c.q_stop, "Last failure probability (inclusive)");
  app.add_option("--q-step", c.q_step, "Failure probability step");
  app.add_option("--trials", c.trials, "Simulation trials per row")
      ->check(CLI::Range(uint32_t{1}, UINT32_MAX));
  app.add_option("--pairs", c.pairs, "Routed pairs per trial")
      ->check(CLI::Range(uint32_t{1}, UINT32_MAX));
  app.add_option("--seed", c.seed, "Master seed");
  app.add_option("--denominator", c.denominator, "Routability denominator")
      ->check(CLI::IsMember({"paper", "exact"}));
  app.add_option("--kn", c.kn, "Symphony near neighbors")->check(CLI::PositiveNumber);
  app.add_option("--ks", c.ks, "Symphony shortcuts")->check(CLI::PositiveNumber);
  app.add_option("--ring-fingers", c.ring_fingers, "Ring finger placement")
      ->check(CLI::IsMember({"fixed", "random"}));
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", c.out, "Output path (stdout when omitted)");
  app.add_flag("--check", c.check, "Exit with status 2 on a tolerance breach or row error");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Routability of DHT routing geometries under static node failure"};
  app.set_version_flag("--version", std::string(rcm_version()));
  app.set_config("--config", "", "Flat key=value file; command-line flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);
  app.fallthrough();

  Config c;
  add_options(app, c);
  const std::array<std::pair<const char*, const char*>, 5> commands = {{
      {"analytic", "Analytic routability over a q grid"},
      {"simulate", "Monte Carlo routability over a q grid"},
      {"compare", "Analytic and simulated routability side by side"},
      {"asymptotic", "Analytic routability across identifier lengths (default d=10..100)"},
      {"scalability", "Scalability verdict with convergence evidence (default q=0.1)"},
  }};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  c.command = app.get_subcommands().front()->get_name();
  if (auto* opt = app.get_option("--config"); opt->count() > 0) c.config_file = opt->as<std::string>();

  const bool q_given = app.count("--q-start") + app.count("--q-stop") + app.count("--q-step") > 0;
  if (c.command == "scalability" && !q_given) {
    c.q_start = c.q_stop = 0.1;
  }

  try {
    const std::vector<double> grid = make_grid(c.q_start, c.q_stop, c.q_step);
    parse_geometries(c.geometry);

    Outcome result;
    if (c.command == "analytic") result = run_analytic(c, grid);
    else if (c.command == "simulate") result = run_simulate(c, grid);
    else if (c.command == "compare") result = run_compare(c, grid);
    else if (c.command == "asymptotic") result = run_asymptotic(c, grid);
    else result = run_scalability(c, grid);

    const Metadata meta = metadata(c, grid);
    const std::string text =
        c.format == "json" ? render_json(meta, result.table) : render_csv(meta, result.table);
    if (c.out.empty()) {
      std::cout << text << std::flush;
    } else {
      std::ofstream f(c.out, std::ios::binary);
      if (!(f << text)) {
        std::cerr << "error: cannot write " << c.out << '\n';
        return kExitUsage;
      }
    }
    return c.check && result.breach ? kExitBreach : kExitOk;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
