#include "suliciu/verification.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "suliciu/errors.hpp"
#include "suliciu/quadrature.hpp"

namespace suliciu::verify {

double SpikeOptions::threshold(const State& Ul, const State& Ur) const {
  return threshold_jump * std::abs(Ul.rho - Ur.rho) + threshold_level * std::max(Ul.rho, Ur.rho);
}

double background_density(double x, double split, const State& Ul, const State& Ur) {
  if (x < split) return Ul.rho;
  if (x > split) return Ur.rho;
  return 0.5 * (Ul.rho + Ur.rho);
}

double estimate_shock_position(const fv::Field& f, const fv::Grid& grid, const State& Ul, const State& Ur,
                               const SpikeOptions& opts) {
  if (f.cells.empty()) throw Error(ErrorCode::kNoSpikeFound, "empty field");
  const auto peak = std::max_element(f.cells.begin(), f.cells.end(),
                                     [](const Conserved& a, const Conserved& b) { return a.rho < b.rho; });
  const double seed = grid.center(static_cast<std::size_t>(peak - f.cells.begin()));
  const double thr = opts.threshold(Ul, Ur);

  double num = 0.0;
  double den = 0.0;
  for (std::size_t j = 0; j < f.cells.size(); ++j) {
    const double x = grid.center(j);
    if (std::abs(x - seed) > opts.window_halfwidth) continue;
    const double e = f.cells[j].rho - background_density(x, seed, Ul, Ur);
    if (e > thr) {
      num += x * e;
      den += e;
    }
  }
  if (!(den > 0.0)) {
    std::ostringstream os;
    os << "no density excess above " << thr << " near x = " << seed;
    throw Error(ErrorCode::kNoSpikeFound, os.str());
  }
  return num / den;
}

double extract_delta_weight(const fv::Field& f, const fv::Grid& grid, const State& Ul, const State& Ur,
                            double window_halfwidth, const SpikeOptions& opts) {
  const double x_hat = estimate_shock_position(f, grid, Ul, Ur, opts);
  double w = 0.0;
  for (std::size_t j = 0; j < f.cells.size(); ++j) {
    const double x = grid.center(j);
    if (std::abs(x - x_hat) <= window_halfwidth) {
      w += f.cells[j].rho - background_density(x, x_hat, Ul, Ur);
    }
  }
  return w * grid.dx();
}

// ---------------------------------------------------------------------------
// Test functions

namespace {

double profile(double z) {
  if (std::abs(z) >= 1.0) return 0.0;
  const double a = 1.0 - z * z;
  return a * a * a;
}

double profile_derivative(double z) {
  if (std::abs(z) >= 1.0) return 0.0;
  const double a = 1.0 - z * z;
  return -6.0 * z * a * a;
}

}  // namespace

double TestFunction::value(double t, double x) const {
  double acc = 0.0;
  for (const Bump& b : terms_) {
    acc += b.coef * profile((t - b.t0) / b.ht) * profile((x - b.x0) / b.hx);
  }
  return acc;
}

double TestFunction::dt(double t, double x) const {
  double acc = 0.0;
  for (const Bump& b : terms_) {
    acc += b.coef * profile_derivative((t - b.t0) / b.ht) / b.ht * profile((x - b.x0) / b.hx);
  }
  return acc;
}

double TestFunction::dx(double t, double x) const {
  double acc = 0.0;
  for (const Bump& b : terms_) {
    acc += b.coef * profile((t - b.t0) / b.ht) * profile_derivative((x - b.x0) / b.hx) / b.hx;
  }
  return acc;
}

TestFunction operator+(const TestFunction& a, const TestFunction& b) {
  TestFunction out = a;
  out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
  return out;
}

TestFunction operator*(double c, const TestFunction& a) {
  TestFunction out = a;
  for (Bump& b : out.terms_) b.coef *= c;
  return out;
}

TestFunction standard_bump(const RiemannSolution& sol, double t) {
  const double speed = std::visit(
      [](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, DeltaShockSolution>) {
          return s.u_delta;
        } else {
          return s.sigma2;
        }
      },
      sol);
  const double t0 = 0.5 * t;
  return TestFunction::bump(t0, speed * t0, 0.4 * t, 0.8 * t);
}

// ---------------------------------------------------------------------------
// Weak-form residuals

namespace {

// Piecewise-constant exact solution described by the lines x = speeds[k] t
// separating states[k] | states[k+1].
struct Piecewise {
  std::vector<double> speeds;
  std::vector<State> states;
  std::optional<DeltaShockSolution> delta;

  const State& state_at(double t, double x) const {
    std::size_t k = 0;
    while (k < speeds.size() && x > speeds[k] * t) ++k;
    return states[k];
  }
};

Piecewise piecewise_of(const RiemannSolution& sol) {
  Piecewise pw;
  if (const auto* c = std::get_if<ClassicalSolution>(&sol)) {
    pw.speeds = {c->sigma1, c->sigma2, c->sigma3};
    pw.states = {c->left, c->star_left, c->star_right, c->right};
  } else {
    const auto& d = std::get<DeltaShockSolution>(sol);
    pw.speeds = {d.u_delta};
    pw.states = {d.left, d.right};
    pw.delta = d;
  }
  return pw;
}

void sort_unique(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Vec3 weak_residual(const RiemannSolution& sol, const TestFunction& phi, const Params& p, int quad_n) {
  if (quad_n < 16) throw std::invalid_argument("weak_residual: quad_n must be at least 16");
  if (phi.terms().empty()) return {0.0, 0.0, 0.0};

  double t_lo = std::numeric_limits<double>::infinity();
  double t_hi = -t_lo;
  double x_lo = t_lo;
  double x_hi = -t_lo;
  std::vector<double> x_edges;
  std::vector<double> t_breaks;
  for (const Bump& b : phi.terms()) {
    if (!(b.ht > 0.0) || !(b.hx > 0.0) || b.t0 - b.ht <= 0.0) {
      std::ostringstream os;
      os << "bump at (" << b.t0 << ", " << b.x0 << ") with half-widths (" << b.ht << ", " << b.hx
         << ") must be supported in t > 0";
      throw Error(ErrorCode::kUnsupportedTestFunction, os.str());
    }
    t_lo = std::min(t_lo, b.t0 - b.ht);
    t_hi = std::max(t_hi, b.t0 + b.ht);
    x_lo = std::min(x_lo, b.x0 - b.hx);
    x_hi = std::max(x_hi, b.x0 + b.hx);
    t_breaks.push_back(b.t0 - b.ht);
    t_breaks.push_back(b.t0 + b.ht);
    x_edges.push_back(b.x0 - b.hx);
    x_edges.push_back(b.x0 + b.hx);
  }

  const Piecewise pw = piecewise_of(sol);
  // A wave line crossing a bump edge changes the panel structure in x.
  for (double speed : pw.speeds) {
    if (speed == 0.0) continue;
    for (double xe : x_edges) {
      const double tc = xe / speed;
      if (tc > t_lo && tc < t_hi) t_breaks.push_back(tc);
    }
  }
  sort_unique(t_breaks);

  const quad::GaussLegendre gl(static_cast<std::size_t>(quad_n));
  const double s2 = p.s * p.s;

  // Integrand of the absolutely continuous part at (t, x) in state U.
  const auto density = [&](const State& U, double t, double x) -> Vec3 {
    const double ft = phi.dt(t, x);
    const double fx = phi.dx(t, x);
    const double transport = U.rho * (ft + U.u * fx);
    return {transport, U.u * transport + s2 * U.v * fx, U.v * transport + U.u * fx};
  };

  Vec3 total{0.0, 0.0, 0.0};
  std::vector<double> xb;
  for (std::size_t it = 0; it + 1 < t_breaks.size(); ++it) {
    const double ta = t_breaks[it];
    const double tb = t_breaks[it + 1];
    if (!(tb > ta)) continue;
    const double th = 0.5 * (tb - ta);
    const double tm = 0.5 * (ta + tb);

    for (std::size_t i = 0; i < gl.size(); ++i) {
      const double t = tm + th * gl.nodes[i];
      const double wt = th * gl.weights[i];

      xb = x_edges;
      for (double speed : pw.speeds) {
        const double xl = speed * t;
        if (xl > x_lo && xl < x_hi) xb.push_back(xl);
      }
      sort_unique(xb);
      for (std::size_t ix = 0; ix + 1 < xb.size(); ++ix) {
        const double xa = xb[ix];
        const double xz = xb[ix + 1];
        if (!(xz > xa)) continue;
        const State& U = pw.state_at(t, 0.5 * (xa + xz));
        const double xh = 0.5 * (xz - xa);
        const double xm = 0.5 * (xa + xz);
        for (std::size_t m = 0; m < gl.size(); ++m) {
          const Vec3 v = density(U, t, xm + xh * gl.nodes[m]);
          const double w = wt * xh * gl.weights[m];
          for (std::size_t k = 0; k < 3; ++k) total[k] += w * v[k];
        }
      }

      // Singular part carried by the delta line.
      if (pw.delta) {
        const DeltaShockSolution& d = *pw.delta;
        const double x = d.u_delta * t;
        const double line = wt * d.weight(t) * (phi.dt(t, x) + d.u_delta * phi.dx(t, x));
        total[0] += line;
        total[1] += d.u_delta * line;
        total[2] += d.g * line;
      }
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Rasterization and reports

fv::Field rasterize(const RiemannSolution& sol, const fv::Grid& grid, double t, RasterMode mode) {
  if (!(t > 0.0)) throw std::invalid_argument("rasterize: t must be positive");
  fv::validate(grid);
  const double dx = grid.dx();
  fv::Field f;
  f.time = t;
  f.cells.resize(grid.n_cells);

  if (const auto* c = std::get_if<ClassicalSolution>(&sol)) {
    if (mode == RasterMode::kPointSample) {
      for (std::size_t j = 0; j < grid.n_cells; ++j) {
        f.cells[j] = to_conserved(sample_classical(*c, grid.center(j) / t));
      }
    } else {
      const Piecewise pw = piecewise_of(sol);
      for (std::size_t j = 0; j < grid.n_cells; ++j) {
        const double a = grid.x_min + static_cast<double>(j) * dx;
        const double b = a + dx;
        std::vector<double> cuts{a, b};
        for (double speed : pw.speeds) {
          if (speed * t > a && speed * t < b) cuts.push_back(speed * t);
        }
        sort_unique(cuts);
        Vec3 acc{0.0, 0.0, 0.0};
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
          const Vec3 u = to_conserved(pw.state_at(t, 0.5 * (cuts[k] + cuts[k + 1]))).as_array();
          for (std::size_t m = 0; m < 3; ++m) acc[m] += u[m] * (cuts[k + 1] - cuts[k]);
        }
        f.cells[j] = {acc[0] / dx, acc[1] / dx, acc[2] / dx};
      }
    }
    return f;
  }

  const auto& d = std::get<DeltaShockSolution>(sol);
  const double xs = d.position(t);
  const Conserved cl = to_conserved(d.left);
  const Conserved cr = to_conserved(d.right);
  for (std::size_t j = 0; j < grid.n_cells; ++j) {
    f.cells[j] = grid.center(j) < xs ? cl : cr;
  }
  const double rel = (xs - grid.x_min) / dx;
  if (rel < 0.0 || rel >= static_cast<double>(grid.n_cells)) return f;
  const auto jd = static_cast<std::size_t>(rel);
  const double a = grid.x_min + static_cast<double>(jd) * dx;
  double rho = 0.0;
  if (mode == RasterMode::kPointSample) {
    rho = 0.5 * (d.left.rho + d.right.rho) + d.weight(t) / dx;
  } else {
    rho = (d.left.rho * (xs - a) + d.right.rho * (a + dx - xs) + d.weight(t)) / dx;
  }
  f.cells[jd] = {rho, rho * d.u_delta, rho * d.g};
  return f;
}

namespace {

State exact_point(const RiemannSolution& sol, double t, double x) {
  if (const auto* c = std::get_if<ClassicalSolution>(&sol)) {
    return sample_classical(*c, x / t);
  }
  const auto& d = std::get<DeltaShockSolution>(sol);
  return x < d.position(t) ? d.left : d.right;
}

std::vector<double> wave_positions(const RiemannSolution& sol, double t) {
  if (const auto* c = std::get_if<ClassicalSolution>(&sol)) {
    return {c->sigma1 * t, c->sigma2 * t, c->sigma3 * t};
  }
  return {std::get<DeltaShockSolution>(sol).position(t)};
}

}  // namespace

ResidualReport make_report(const fv::Field& f, const fv::Grid& grid, const RiemannSolution& sol,
                           const Params& p, double t, const ReportOptions& opts) {
  ResidualReport rep;
  const double dx = grid.dx();
  const std::vector<State> prim = fv::primitives(f, p);

  double plateau_exclusion = std::max(opts.exclusion_cells * dx, opts.spike.window_halfwidth);
  std::vector<double> centers = wave_positions(sol, t);
  const double l1_half = 0.5 * opts.exclusion_cells * dx;

  if (const auto* d = std::get_if<DeltaShockSolution>(&sol)) {
    const double x_hat = estimate_shock_position(f, grid, d->left, d->right, opts.spike);
    const double w_hat = extract_delta_weight(f, grid, d->left, d->right, opts.spike.window_halfwidth, opts.spike);
    rep.shock_position = x_hat;
    rep.shock_position_error = std::abs(x_hat - d->position(t));
    rep.weight_estimate = w_hat;
    rep.weight_exact = d->weight(t);
    rep.weight_error_rel = std::abs(w_hat - d->weight(t)) / d->weight(t);
    double peak = 0.0;
    for (const Conserved& c : f.cells) peak = std::max(peak, c.rho);
    rep.peak_density = peak;
    centers = {x_hat};
  }

  Vec3 linf{0.0, 0.0, 0.0};
  Vec3 l1{0.0, 0.0, 0.0};
  const std::vector<double> exact_waves = wave_positions(sol, t);
  for (std::size_t j = 0; j < prim.size(); ++j) {
    const double x = grid.center(j);
    const State ex = exact_point(sol, t, x);
    const Vec3 err{std::abs(prim[j].rho - ex.rho), std::abs(prim[j].u - ex.u), std::abs(prim[j].v - ex.v)};

    const bool near_wave = std::any_of(centers.begin(), centers.end(),
                                       [&](double c) { return std::abs(x - c) <= plateau_exclusion; });
    if (!near_wave) {
      for (std::size_t k = 0; k < 3; ++k) linf[k] = std::max(linf[k], err[k]);
    }
    const bool in_l1_window = is_delta(sol) && std::abs(x - exact_waves.front()) <= l1_half;
    if (!in_l1_window) {
      for (std::size_t k = 0; k < 3; ++k) l1[k] += err[k] * dx;
    }
  }
  rep.linf_errors_away_from_shock = linf;
  rep.l1_errors = l1;
  rep.weak_residuals = weak_residual(sol, standard_bump(sol, t), p, opts.quad_n);
  return rep;
}

std::vector<ConvergenceRow> convergence_study(const fv::SimConfig& base, const State& Ul, const State& Ur,
                                              std::span<const std::size_t> refinements,
                                              const ReportOptions& opts) {
  const RiemannSolution sol = solve(Ul, Ur, base.params);
  const auto one = [&](std::size_t n) {
    fv::SimConfig cfg = base;
    cfg.grid.n_cells = n;
    cfg.snapshot_times = {cfg.t_final};
    const fv::SimResult res = fv::run(cfg, Ul, Ur);
    const fv::Field& f = res.snapshots.back().field;

    ConvergenceRow row;
    row.n_cells = n;
    const ResidualReport rep = make_report(f, cfg.grid, sol, cfg.params, cfg.t_final, opts);
    row.shock_error = rep.shock_position_error;
    row.weight_error_rel = rep.weight_error_rel;
    row.peak_density = rep.peak_density;
    row.l1_errors = rep.l1_errors;
    return row;
  };

  std::vector<std::future<ConvergenceRow>> pending;
  pending.reserve(refinements.size());
  for (std::size_t n : refinements) {
    pending.push_back(std::async(std::launch::async, one, n));
  }
  std::vector<ConvergenceRow> rows;
  rows.reserve(pending.size());
  for (auto& fut : pending) rows.push_back(fut.get());
  return rows;
}

double observed_order(std::span<const std::size_t> n_cells, std::span<const double> errors) {
  if (n_cells.size() != errors.size() || n_cells.size() < 2) {
    throw std::invalid_argument("observed_order: need at least two matching samples");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double m = static_cast<double>(n_cells.size());
  for (std::size_t i = 0; i < n_cells.size(); ++i) {
    const double x = std::log(static_cast<double>(n_cells[i]));
    const double y = -std::log(errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace suliciu::verify
