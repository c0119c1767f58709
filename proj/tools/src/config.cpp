#include "suliciu_tools/config.hpp"

#include <charconv>
#include <cstdio>
#include <functional>
#include <sstream>

#include "suliciu/errors.hpp"

namespace suliciu::tools {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

double parse_number(const std::string& key, std::string_view text) {
  const std::string s = trim(text);
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const double num = parse_number(key, std::string_view(s).substr(0, slash));
    const double den = parse_number(key, std::string_view(s).substr(slash + 1));
    if (den == 0.0) throw ConfigError(key, "zero denominator in '" + s + "'");
    return num / den;
  }
  double x = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, x);
  if (s.empty() || ec != std::errc() || ptr != last) {
    throw ConfigError(key, "expected a number, got '" + s + "'");
  }
  return x;
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::vector<double> parse_numbers(const std::string& key, std::string_view s) {
  std::vector<double> out;
  for (const auto& item : split_list(s)) out.push_back(parse_number(key, item));
  return out;
}

State parse_state(const std::string& key, std::string_view s) {
  const auto xs = parse_numbers(key, s);
  if (xs.size() != 3) throw ConfigError(key, "expected a (rho, u, v) triple");
  return {xs[0], xs[1], xs[2]};
}

std::size_t parse_count(const std::string& key, std::string_view s) {
  const double x = parse_number(key, s);
  if (!(x >= 1.0) || x != static_cast<double>(static_cast<std::size_t>(x))) {
    throw ConfigError(key, "expected a positive integer");
  }
  return static_cast<std::size_t>(x);
}

std::string join(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += g17(xs[i]);
  }
  return out;
}

// Re-raises library validation failures against the key that caused them.
template <class F>
void checked(const std::string& key, F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    throw ConfigError(key, e.what());
  }
}

}  // namespace

fv::SimConfig RunConfig::sim() const {
  fv::SimConfig c;
  c.grid = grid;
  c.cfl = cfl;
  c.t_final = t_final;
  c.params = params;
  c.snapshot_times = snapshots;
  c.policy = policy;
  return c;
}

KeyValues parse_key_values(std::istream& in, const std::string& source) {
  KeyValues kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(t, source + ":" + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(std::string_view(t).substr(0, eq));
    if (key.empty()) throw ConfigError("", source + ":" + std::to_string(lineno) + ": empty key");
    kv[key] = trim(std::string_view(t).substr(eq + 1));
  }
  return kv;
}

RunConfig resolve(const KeyValues& kv) {
  RunConfig c;
  bool have_left = false;
  bool have_right = false;

  using Setter = std::function<void(const std::string&, const std::string&)>;
  const auto num = [](double& slot) -> Setter {
    return [&slot](const std::string& k, const std::string& v) { slot = parse_number(k, v); };
  };
  const std::map<std::string, Setter> setters{
      {"s", num(c.params.s)},
      {"eps_rho", num(c.params.eps_rho)},
      {"eps_tie", num(c.params.eps_tie)},
      {"left", [&](const std::string& k, const std::string& v) { c.left = parse_state(k, v); have_left = true; }},
      {"right", [&](const std::string& k, const std::string& v) { c.right = parse_state(k, v); have_right = true; }},
      {"x_min", num(c.grid.x_min)},
      {"x_max", num(c.grid.x_max)},
      {"n_cells", [&](const std::string& k, const std::string& v) { c.grid.n_cells = parse_count(k, v); }},
      {"cfl", num(c.cfl)},
      {"time_step",
       [&](const std::string& k, const std::string& v) {
         if (v == "courant") {
           c.policy = fv::TimeStepPolicy::kCourant;
         } else if (v == "fixed_ratio") {
           c.policy = fv::TimeStepPolicy::kFixedRatio;
         } else {
           throw ConfigError(k, "expected 'courant' or 'fixed_ratio', got '" + v + "'");
         }
       }},
      {"t_final", num(c.t_final)},
      {"snapshots", [&](const std::string& k, const std::string& v) { c.snapshots = parse_numbers(k, v); }},
      {"out", [&](const std::string&, const std::string& v) { c.out_dir = v; }},
      {"window", num(c.report.spike.window_halfwidth)},
      {"spike_threshold_jump", num(c.report.spike.threshold_jump)},
      {"spike_threshold_level", num(c.report.spike.threshold_level)},
      {"exclusion_cells", num(c.report.exclusion_cells)},
      {"quad_n",
       [&](const std::string& k, const std::string& v) {
         const std::size_t n = parse_count(k, v);
         if (n < 16 || n > 512) throw ConfigError(k, "quadrature order must lie in [16, 512]");
         c.report.quad_n = static_cast<int>(n);
       }},
      {"refinements",
       [&](const std::string& k, const std::string& v) {
         c.refinements.clear();
         for (const auto& item : split_list(v)) c.refinements.push_back(parse_count(k, item));
       }},
      {"sample_at", [&](const std::string& k, const std::string& v) { c.sample_at = parse_number(k, v); }},
      {"max_shock_error_dx", num(c.thresholds.max_shock_error_dx)},
      {"max_weight_error_rel", num(c.thresholds.max_weight_error_rel)},
      {"max_plateau_error", num(c.thresholds.max_plateau_error)},
      {"max_weak_residual", num(c.thresholds.max_weak_residual)},
      {"max_conservation_drift", num(c.thresholds.max_conservation_drift)},
  };

  for (const auto& [key, value] : kv) {
    const auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError(key, "unknown key");
    it->second(key, value);
  }
  if (!have_left) throw ConfigError("left", "missing");
  if (!have_right) throw ConfigError("right", "missing");

  checked("s", [&] { validate(c.params); });
  checked("left", [&] { validate(c.left, c.params); });
  checked("right", [&] { validate(c.right, c.params); });
  checked("n_cells", [&] { fv::validate(c.grid); });
  if (!(c.grid.x_min < 0.0 && 0.0 < c.grid.x_max)) throw ConfigError("x_min", "domain must contain x = 0");
  if (!(c.cfl > 0.0 && c.cfl < 1.0)) throw ConfigError("cfl", "must lie in (0, 1)");
  if (!(c.t_final >= 0.0)) throw ConfigError("t_final", "must be non-negative");
  checked("snapshots", [&] { fv::validate(c.sim()); });
  if (!(c.report.spike.window_halfwidth > 0.0)) throw ConfigError("window", "must be positive");
  if (c.sample_at && !(*c.sample_at > 0.0)) throw ConfigError("sample_at", "must be positive");
  return c;
}

KeyValues to_key_values(const RunConfig& c) {
  const auto triple = [](const State& u) { return join({u.rho, u.u, u.v}); };
  KeyValues kv{
      {"s", g17(c.params.s)},
      {"eps_rho", g17(c.params.eps_rho)},
      {"eps_tie", g17(c.params.eps_tie)},
      {"left", triple(c.left)},
      {"right", triple(c.right)},
      {"x_min", g17(c.grid.x_min)},
      {"x_max", g17(c.grid.x_max)},
      {"n_cells", std::to_string(c.grid.n_cells)},
      {"cfl", g17(c.cfl)},
      {"time_step", c.policy == fv::TimeStepPolicy::kCourant ? "courant" : "fixed_ratio"},
      {"t_final", g17(c.t_final)},
      {"snapshots", join(c.snapshots)},
      {"out", c.out_dir},
      {"window", g17(c.report.spike.window_halfwidth)},
      {"spike_threshold_jump", g17(c.report.spike.threshold_jump)},
      {"spike_threshold_level", g17(c.report.spike.threshold_level)},
      {"exclusion_cells", g17(c.report.exclusion_cells)},
      {"quad_n", std::to_string(c.report.quad_n)},
      {"max_shock_error_dx", g17(c.thresholds.max_shock_error_dx)},
      {"max_weight_error_rel", g17(c.thresholds.max_weight_error_rel)},
      {"max_plateau_error", g17(c.thresholds.max_plateau_error)},
      {"max_weak_residual", g17(c.thresholds.max_weak_residual)},
      {"max_conservation_drift", g17(c.thresholds.max_conservation_drift)},
  };
  std::string refs;
  for (std::size_t i = 0; i < c.refinements.size(); ++i) {
    if (i) refs += ", ";
    refs += std::to_string(c.refinements[i]);
  }
  kv["refinements"] = refs;
  if (c.sample_at) kv["sample_at"] = g17(*c.sample_at);
  return kv;
}

std::string to_ini(const KeyValues& kv) {
  std::ostringstream os;
  for (const auto& [k, v] : kv) os << k << " = " << v << '\n';
  return os.str();
}

void write_config(io::JsonWriter& json, const KeyValues& kv) {
  json.begin_object("config");
  for (const auto& [k, v] : kv) json.value(k, std::string_view(v));
  json.end_object();
}

}  // namespace suliciu::tools
