#include "suliciu/lax_friedrichs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "suliciu/errors.hpp"

namespace suliciu::fv {

namespace {

// Neumaier summation; totals feed a 1e-12 relative conservation check.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      c_ += (sum_ - t) + x;
    } else {
      c_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + c_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

Vec3 absolute_totals(const Field& f, double dx) {
  CompensatedSum a, b, c;
  for (const Conserved& u : f.cells) {
    a.add(std::abs(u.rho));
    b.add(std::abs(u.mom));
    c.add(std::abs(u.q));
  }
  return {a.value() * dx, b.value() * dx, c.value() * dx};
}

double relative_defect(const Vec3& before, const Vec3& after, const Vec3& outflow, const Vec3& scale) {
  double worst = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    const double defect = after[k] - before[k] + outflow[k];
    const double denom = std::max(scale[k], std::numeric_limits<double>::min());
    worst = std::max(worst, std::abs(defect) / denom);
  }
  return worst;
}

}  // namespace

void validate(const Grid& g) {
  if (!(g.x_min < g.x_max) || g.n_cells == 0 || !std::isfinite(g.x_min) || !std::isfinite(g.x_max)) {
    throw Error(ErrorCode::kInvalidParams, "grid needs x_min < x_max and n_cells > 0");
  }
}

void validate(const SimConfig& c) {
  validate(c.grid);
  suliciu::validate(c.params);
  if (!(c.cfl > 0.0 && c.cfl < 1.0)) {
    throw Error(ErrorCode::kInvalidParams, "cfl must lie in (0, 1)");
  }
  if (!(c.t_final >= 0.0) || !std::isfinite(c.t_final)) {
    throw Error(ErrorCode::kInvalidParams, "t_final must be non-negative");
  }
  for (double t : c.snapshot_times) {
    if (!(t >= 0.0 && t <= c.t_final)) {
      std::ostringstream os;
      os << "snapshot time " << t << " outside [0, " << c.t_final << "]";
      throw Error(ErrorCode::kInvalidParams, os.str());
    }
  }
}

Field init_riemann(const Grid& grid, const State& Ul, const State& Ur) {
  validate(grid);
  if (!(grid.x_min < 0.0 && 0.0 < grid.x_max)) {
    std::ostringstream os;
    os << "origin not inside (" << grid.x_min << ", " << grid.x_max << ")";
    throw Error(ErrorCode::kDomainExcludesOrigin, os.str());
  }
  Field f;
  f.cells.reserve(grid.n_cells);
  const Conserved cl = to_conserved(Ul);
  const Conserved cr = to_conserved(Ur);
  for (std::size_t j = 0; j < grid.n_cells; ++j) {
    f.cells.push_back(grid.center(j) < 0.0 ? cl : cr);
  }
  return f;
}

double max_wave_speed(const Field& f, const Params& p) {
  double vmax = 0.0;
  for (const Conserved& c : f.cells) {
    const Eigenvalues ev = eigenvalues(to_primitive(c, p), p);
    vmax = std::max({vmax, std::abs(ev.lambda1), std::abs(ev.lambda3)});
  }
  return vmax;
}

double cfl_dt(const Field& f, double dx, double cfl, const Params& p) {
  return cfl * dx / max_wave_speed(f, p);
}

Field lxf_step(const Field& f, double dx, double dt, const Params& p) {
  const std::size_t n = f.cells.size();
  std::vector<Vec3> F(n);
  for (std::size_t j = 0; j < n; ++j) {
    F[j] = flux(to_primitive(f.cells[j], p), p);
  }

  const double lam = dt / (2.0 * dx);
  Field out;
  out.cells.resize(n);
  out.time = f.time + dt;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t jl = j == 0 ? 0 : j - 1;
    const std::size_t jr = j + 1 == n ? n - 1 : j + 1;
    const Vec3 ul = f.cells[jl].as_array();
    const Vec3 ur = f.cells[jr].as_array();
    Vec3 u{};
    for (std::size_t k = 0; k < 3; ++k) {
      u[k] = 0.5 * (ul[k] + ur[k]) - lam * (F[jr][k] - F[jl][k]);
    }
    if (!(u[0] >= p.eps_rho)) {
      std::ostringstream os;
      os << "density " << u[0] << " in cell " << j << " at t = " << out.time;
      throw Error(ErrorCode::kVacuumProduced, os.str());
    }
    out.cells[j] = {u[0], u[1], u[2]};
  }
  return out;
}

Vec3 boundary_flux(const Field& f, const Params& p) {
  const Vec3 first = flux(to_primitive(f.cells.front(), p), p);
  const Vec3 last = flux(to_primitive(f.cells.back(), p), p);
  return {last[0] - first[0], last[1] - first[1], last[2] - first[2]};
}

Vec3 conserved_totals(const Field& f, double dx) {
  CompensatedSum a, b, c;
  for (const Conserved& u : f.cells) {
    a.add(u.rho);
    b.add(u.mom);
    c.add(u.q);
  }
  return {a.value() * dx, b.value() * dx, c.value() * dx};
}

SimResult run(const SimConfig& config, const State& Ul, const State& Ur) {
  validate(config);
  const Params& p = config.params;
  const double dx = config.grid.dx();

  std::vector<double> wanted = config.snapshot_times;
  if (wanted.empty()) wanted.push_back(config.t_final);
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  // Steps land on every snapshot time and on t_final.
  std::vector<double> targets = wanted;
  if (targets.back() < config.t_final) targets.push_back(config.t_final);
  const auto is_wanted = [&](double t) { return std::binary_search(wanted.begin(), wanted.end(), t); };

  SimResult result;
  Field field = init_riemann(config.grid, Ul, Ur);
  auto next_target = targets.begin();
  while (next_target != targets.end() && *next_target <= 0.0) {
    result.snapshots.push_back({0.0, field});
    ++next_target;
  }

  const Vec3 initial = conserved_totals(field, dx);
  Vec3 outflow_total{0.0, 0.0, 0.0};
  Vec3 outflow_comp{0.0, 0.0, 0.0};
  double min_rho = std::numeric_limits<double>::infinity();
  for (const Conserved& c : field.cells) min_rho = std::min(min_rho, c.rho);

  while (next_target != targets.end()) {
    const double vmax = max_wave_speed(field, p);
    double dt = config.policy == TimeStepPolicy::kCourant ? config.cfl * dx / vmax : config.cfl * dx;
    bool lands = false;
    if (field.time + dt >= *next_target * (1.0 - 1e-14)) {
      dt = *next_target - field.time;
      lands = true;
    }

    const Vec3 before = conserved_totals(field, dx);
    const Vec3 bflux = boundary_flux(field, p);
    Field next = lxf_step(field, dx, dt, p);
    if (lands) next.time = *next_target;
    const Vec3 after = conserved_totals(next, dx);

    Vec3 outflow{};
    for (std::size_t k = 0; k < 3; ++k) {
      outflow[k] = dt * bflux[k];
      // Kahan-accumulate the boundary budget for the whole-run check.
      const double y = outflow[k] - outflow_comp[k];
      const double t = outflow_total[k] + y;
      outflow_comp[k] = (t - outflow_total[k]) - y;
      outflow_total[k] = t;
    }
    const Vec3 scale = absolute_totals(next, dx);
    result.stats.max_step_drift =
        std::max(result.stats.max_step_drift, relative_defect(before, after, outflow, scale));
    result.stats.max_mesh_courant = std::max(result.stats.max_mesh_courant, dt * vmax / dx);
    ++result.stats.steps;

    field = std::move(next);
    for (const Conserved& c : field.cells) min_rho = std::min(min_rho, c.rho);
    while (next_target != targets.end() && field.time >= *next_target) {
      if (is_wanted(*next_target)) result.snapshots.push_back({field.time, field});
      ++next_target;
    }
  }

  result.stats.total_drift =
      relative_defect(initial, conserved_totals(field, dx), outflow_total, absolute_totals(field, dx));
  result.stats.min_density = min_rho;
  return result;
}

std::vector<State> primitives(const Field& f, const Params& p) {
  std::vector<State> out;
  out.reserve(f.cells.size());
  for (const Conserved& c : f.cells) out.push_back(to_primitive(c, p));
  return out;
}

}  // namespace suliciu::fv
