#include "suliciu/grh_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "suliciu/errors.hpp"

namespace suliciu::grh {

namespace {

// Brackets computed straight from the primitive states so the oracle does not
// share code with the closed-form solver.
struct Brackets {
  double rho, mom, mom_flux, q, q_flux;

  double magnitude() const {
    return std::max({std::abs(rho), std::abs(mom), std::abs(mom_flux), std::abs(q), std::abs(q_flux)});
  }
};

Brackets brackets(const State& l, const State& r, const Params& p) {
  const double s2 = p.s * p.s;
  return {
      l.rho - r.rho,
      l.rho * l.u - r.rho * r.u,
      (l.rho * l.u * l.u + s2 * l.v) - (r.rho * r.u * r.u + s2 * r.v),
      l.rho * l.v - r.rho * r.v,
      (l.rho * l.u * l.v + l.u) - (r.rho * r.u * r.v + r.u),
  };
}

}  // namespace

std::vector<double> default_sample_times(double t_final) {
  std::vector<double> times;
  for (int k = 0; k <= 10; ++k) {
    const double t = 1e-3 * std::ldexp(1.0, k);
    if (t <= t_final) times.push_back(t);
  }
  if (t_final > 0.0 && (times.empty() || times.back() != t_final)) {
    times.push_back(t_final);
  }
  return times;
}

std::vector<double> stencil_times(double t_begin, double t_end, double h) {
  if (!(h > 0.0) || !(t_end >= t_begin)) {
    throw std::invalid_argument("stencil_times: need h > 0 and t_end >= t_begin");
  }
  const auto n = static_cast<std::size_t>(std::floor((t_end - t_begin) / h + 1e-9));
  std::vector<double> times(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    times[i] = t_begin + static_cast<double>(i) * h;
  }
  return times;
}

Trajectory trajectory_from_solution(const DeltaShockSolution& sol, std::span<const double> times) {
  Trajectory traj;
  traj.times.assign(times.begin(), times.end());
  for (double t : times) {
    traj.x.push_back(sol.u_delta * t);
    traj.w.push_back(sol.w_rate * t);
    traj.wu.push_back(sol.w_rate * sol.u_delta * t);
    traj.wg.push_back(sol.w_rate * sol.g * t);
  }
  return traj;
}

double verify_integrated(const Trajectory& traj, const State& Ul, const State& Ur, const Params& p) {
  const Brackets b = brackets(Ul, Ur, p);
  const double m = b.magnitude();
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double t = traj.times[i];
    const double x = traj.x[i];
    const double scale = std::max(1.0, std::abs(t) * m);
    const double r1 = traj.w[i] + b.rho * x - b.mom * t;
    const double r2 = traj.wu[i] + b.mom * x - b.mom_flux * t;
    const double r3 = traj.wg[i] + b.q * x - b.q_flux * t;
    worst = std::max({worst, std::abs(r1) / scale, std::abs(r2) / scale, std::abs(r3) / scale});
  }
  return worst;
}

double verify_derivatives(const Trajectory& traj, const State& Ul, const State& Ur, const Params& p,
                          double h, double eps) {
  const Brackets b = brackets(Ul, Ur, p);
  const double scale = std::max(1.0, b.magnitude());
  const double slack = h * (1.0 + 1e-6);
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
    const double t = traj.times[i];
    const double dt_lo = t - traj.times[i - 1];
    const double dt_hi = traj.times[i + 1] - t;
    if (dt_lo > slack || dt_hi > slack || !(dt_lo > 0.0) || !(dt_hi > 0.0)) {
      std::ostringstream os;
      os << "samples around t = " << t << " are not within h = " << h;
      throw std::invalid_argument(os.str());
    }
    if (std::abs(traj.w[i]) <= eps) {
      std::ostringstream os;
      os << "w(" << t << ") = " << traj.w[i] << ": u_delta = wu/w is undefined";
      throw Error(ErrorCode::kSingularAtOrigin, os.str());
    }
    const double span = dt_lo + dt_hi;
    const auto d = [&](const std::vector<double>& f) { return (f[i + 1] - f[i - 1]) / span; };
    const double u_delta = traj.wu[i] / traj.w[i];
    const double uscale = std::max(1.0, std::abs(u_delta));

    const double r0 = (d(traj.x) - u_delta) / uscale;
    const double r1 = (d(traj.w) - (-b.rho * u_delta + b.mom)) / (scale * uscale);
    const double r2 = (d(traj.wu) - (-b.mom * u_delta + b.mom_flux)) / (scale * uscale);
    const double r3 = (d(traj.wg) - (-b.q * u_delta + b.q_flux)) / (scale * uscale);
    worst = std::max({worst, std::abs(r0), std::abs(r1), std::abs(r2), std::abs(r3)});
  }
  return worst;
}

}  // namespace suliciu::grh
