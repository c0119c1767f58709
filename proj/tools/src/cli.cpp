#include "suliciu_tools/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "suliciu/errors.hpp"
#include "suliciu/exact_riemann.hpp"
#include "suliciu/lax_friedrichs.hpp"
#include "suliciu/output.hpp"
#include "suliciu/verification.hpp"
#include "suliciu_tools/config.hpp"

namespace suliciu::tools {

namespace fs = std::filesystem;

namespace {

struct Check {
  std::string name;
  double value;
  double limit;
  bool pass() const { return value <= limit; }
};

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + path.string());
}

void state_array(io::JsonWriter& json, std::string_view key, const State& u) {
  const double xs[3] = {u.rho, u.u, u.v};
  json.array(key, xs);
}

double max_abs(const Vec3& v) { return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])}); }

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnsolvedRegion:
    case ErrorCode::kNotInDeltaRegion:
    case ErrorCode::kDegenerateJump:
    case ErrorCode::kNoClassicalSolution:
      return kExitUnsolved;
    case ErrorCode::kInvalidState:
    case ErrorCode::kInvalidParams:
    case ErrorCode::kDomainExcludesOrigin:
      return kExitConfig;
    default:
      return kExitSolver;
  }
}

int cmd_classify(const RunConfig& c, const KeyValues& kv, std::ostream& out) {
  const Region region = classify(c.left, c.right, c.params);
  const DeltaCondition cond = delta_condition_sides(c.left, c.right, c.params);
  io::JsonWriter json;
  json.begin_object()
      .value("command", "classify")
      .value("region", to_string(region))
      .value("lambda1_left", eigenvalues(c.left, c.params).lambda1)
      .value("lambda3_right", eigenvalues(c.right, c.params).lambda3)
      .value("condition8_lhs", cond.lhs)
      .value("condition8_rhs", cond.rhs);
  write_config(json, kv);
  json.end_object();
  out << json.str();
  return kExitOk;
}

void write_sample_csv(const fs::path& path, const RiemannSolution& sol, const RunConfig& c, double t) {
  const fv::Field f = verify::rasterize(sol, c.grid, t, verify::RasterMode::kPointSample);
  std::optional<std::size_t> singular;
  if (const auto* d = std::get_if<DeltaShockSolution>(&sol)) {
    const double rel = (d->position(t) - c.grid.x_min) / c.grid.dx();
    if (rel >= 0.0 && rel < static_cast<double>(c.grid.n_cells)) singular = static_cast<std::size_t>(rel);
  }
  std::ostringstream os;
  os << "x,rho,u,v,singular\n";
  for (std::size_t j = 0; j < f.cells.size(); ++j) {
    const State s = to_primitive(f.cells[j], c.params);
    os << io::format_double(c.grid.center(j)) << ',' << io::format_double(s.rho) << ','
       << io::format_double(s.u) << ',' << io::format_double(s.v) << ',' << (singular == j ? 1 : 0) << '\n';
  }
  write_file(path, os.str());
}

int cmd_exact(const RunConfig& c, const KeyValues& kv, std::ostream& out) {
  const RiemannSolution sol = solve(c.left, c.right, c.params);
  io::JsonWriter json;
  json.begin_object().value("command", "exact");
  if (const auto* d = std::get_if<DeltaShockSolution>(&sol)) {
    const EntropyCheck ec = check_entropy(d->u_delta, d->left, d->right, c.params);
    json.value("type", "delta_shock")
        .value("u_delta", d->u_delta)
        .value("w_rate", d->w_rate)
        .value("g", d->g)
        .value("entropy_margin_left", ec.margin_left)
        .value("entropy_margin_right", ec.margin_right);
  } else {
    const auto& cl = std::get<ClassicalSolution>(sol);
    const double speeds[3] = {cl.sigma1, cl.sigma2, cl.sigma3};
    json.value("type", "classical");
    state_array(json, "left", cl.left);
    state_array(json, "star_left", cl.star_left);
    state_array(json, "star_right", cl.star_right);
    state_array(json, "right", cl.right);
    json.array("speeds", speeds);
  }
  if (c.sample_at) {
    char name[64];
    std::snprintf(name, sizeof(name), "exact_t%.6f.csv", *c.sample_at);
    write_sample_csv(fs::path(c.out_dir) / name, sol, c, *c.sample_at);
    json.value("sample_file", std::string_view(name));
  }
  write_config(json, kv);
  json.end_object();
  out << json.str();
  return kExitOk;
}

void write_snapshots(const fv::SimResult& res, const RunConfig& c, io::JsonWriter& json) {
  json.begin_array("snapshots");
  for (const auto& snap : res.snapshots) {
    const std::string name = io::snapshot_filename(snap.time);
    std::ostringstream os;
    io::write_snapshot_csv(os, snap.field, c.grid, c.params);
    write_file(fs::path(c.out_dir) / name, os.str());
    json.value("", std::string_view(name));
  }
  json.end_array();
}

void write_stats(io::JsonWriter& json, const fv::RunStats& s) {
  json.value("steps", s.steps)
      .value("max_step_drift", s.max_step_drift)
      .value("total_drift", s.total_drift)
      .value("min_density", s.min_density)
      .value("max_mesh_courant", s.max_mesh_courant);
}

int cmd_simulate(const RunConfig& c, const KeyValues& kv, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const fv::SimResult res = fv::run(c.sim(), c.left, c.right);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  io::JsonWriter json;
  json.begin_object().value("command", "simulate").value("wall_time_s", wall);
  write_stats(json, res.stats);
  write_snapshots(res, c, json);
  write_config(json, kv);
  json.end_object();
  write_file(fs::path(c.out_dir) / "summary.json", json.str());
  out << json.str();
  return kExitOk;
}

int cmd_verify(const RunConfig& c, const KeyValues& kv, std::ostream& out) {
  if (!(c.t_final > 0.0)) throw ConfigError("t_final", "verify needs a positive final time");
  const RiemannSolution sol = solve(c.left, c.right, c.params);
  fv::SimConfig sim = c.sim();
  sim.snapshot_times = {c.t_final};
  const fv::SimResult res = fv::run(sim, c.left, c.right);
  const fv::Field& f = res.snapshots.back().field;
  const verify::ResidualReport rep = verify::make_report(f, c.grid, sol, c.params, c.t_final, c.report);

  const Thresholds& th = c.thresholds;
  std::vector<Check> checks;
  if (rep.shock_position_error) {
    checks.push_back({"shock_error_dx", *rep.shock_position_error / c.grid.dx(), th.max_shock_error_dx});
  }
  if (rep.weight_error_rel) checks.push_back({"weight_error_rel", *rep.weight_error_rel, th.max_weight_error_rel});
  checks.push_back({"plateau_error", max_abs(rep.linf_errors_away_from_shock), th.max_plateau_error});
  checks.push_back({"weak_residual", max_abs(rep.weak_residuals), th.max_weak_residual});
  checks.push_back({"conservation_drift", std::max(res.stats.total_drift, res.stats.max_step_drift),
                    th.max_conservation_drift});
  const bool pass = std::all_of(checks.begin(), checks.end(), [](const Check& k) { return k.pass(); });

  io::JsonWriter json;
  json.begin_object().value("command", "verify").value("region", is_delta(sol) ? "DeltaShock" : "Classical");
  io::write_report(json, rep);
  write_stats(json, res.stats);
  json.begin_array("checks");
  for (const Check& k : checks) {
    json.begin_object().value("name", k.name).value("value", k.value).value("limit", k.limit).value("pass", k.pass());
    json.end_object();
  }
  json.end_array().value("pass", pass);
  write_config(json, kv);
  json.end_object();
  write_file(fs::path(c.out_dir) / "report.json", json.str());
  out << json.str();
  return pass ? kExitOk : kExitThreshold;
}

int cmd_converge(const RunConfig& c, const KeyValues& kv, std::ostream& out) {
  if (c.refinements.empty()) throw ConfigError("refinements", "at least one cell count is required");
  if (!(c.t_final > 0.0)) throw ConfigError("t_final", "converge needs a positive final time");
  const auto rows = verify::convergence_study(c.sim(), c.left, c.right, c.refinements, c.report);

  std::ostringstream csv;
  io::write_convergence_csv(csv, rows);
  write_file(fs::path(c.out_dir) / "convergence.csv", csv.str());

  io::JsonWriter json;
  json.begin_object().value("command", "converge").value("rows", rows.size());
  if (rows.size() > 1) {
    std::vector<double> orders;
    for (std::size_t k = 0; k < 3; ++k) {
      std::vector<double> err;
      for (const auto& r : rows) err.push_back(r.l1_errors[k]);
      orders.push_back(verify::observed_order(c.refinements, err));
    }
    json.array("l1_observed_order", orders);
  }
  write_config(json, kv);
  json.end_object();
  write_file(fs::path(c.out_dir) / "convergence.json", json.str());
  out << csv.str();
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Riemann solutions and Lax-Friedrichs runs for the Suliciu relaxation system", "suliciu"};
  app.require_subcommand(1);
  app.allow_extras();
  app.fallthrough();
  app.footer("Any config key may be overridden with --key=value.");

  std::string config_path;
  std::string out_dir;
  double sample_at = 0.0;
  app.add_option("--config", config_path, "Flat 'key = value' configuration file");
  app.add_option("--out", out_dir, "Output directory");

  const char* names[][2] = {
      {"classify", "Classify the state pair and print both region conditions"},
      {"exact", "Print the exact Riemann solution"},
      {"simulate", "Run Lax-Friedrichs and write snapshot CSVs"},
      {"verify", "Compare a run with the exact solution; exit 5 on exceeded thresholds"},
      {"converge", "Error table over the configured refinements"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : names) subs.push_back(app.add_subcommand(name, help)->allow_extras());
  subs[1]->add_option("--sample-at", sample_at, "Also write the rasterized solution at this time");

  std::vector<const char*> argv{"suliciu"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  CLI::App* cmd = nullptr;
  for (CLI::App* s : subs) {
    if (s->parsed()) cmd = s;
  }

  try {
    KeyValues kv;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw ConfigError("config", "cannot read '" + config_path + "'");
      kv = parse_key_values(in, config_path);
    }
    std::vector<std::string> extras = app.remaining();
    for (const auto& e : cmd->remaining()) extras.push_back(e);
    for (const auto& e : extras) {
      const auto eq = e.find('=');
      if (e.rfind("--", 0) != 0 || eq == std::string::npos || eq == 2) {
        throw ConfigError(e, "overrides must look like --key=value");
      }
      kv[e.substr(2, eq - 2)] = e.substr(eq + 1);
    }
    if (!out_dir.empty()) kv["out"] = out_dir;
    if (subs[1]->count("--sample-at") > 0) {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", sample_at);
      kv["sample_at"] = buf;
    }

    const RunConfig c = resolve(kv);
    const KeyValues resolved = to_key_values(c);
    const std::string name = cmd->get_name();
    if (name == "classify") return cmd_classify(c, resolved, out);
    if (name == "exact") return cmd_exact(c, resolved, out);
    if (name == "simulate") return cmd_simulate(c, resolved, out);
    if (name == "verify") return cmd_verify(c, resolved, out);
    return cmd_converge(c, resolved, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace suliciu::tools
