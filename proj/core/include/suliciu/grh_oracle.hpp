#pragma once

#include <span>
#include <vector>

#include "suliciu/exact_riemann.hpp"
#include "suliciu/state.hpp"

namespace suliciu::grh {

/// Samples of a candidate delta-shock trajectory. `wu` and `wg` hold the
/// products w(t) u_delta(t) and w(t) g(t).
struct Trajectory {
  std::vector<double> times;
  std::vector<double> x;
  std::vector<double> w;
  std::vector<double> wu;
  std::vector<double> wg;

  std::size_t size() const { return times.size(); }
};

/// 1e-3 * 2^k for k = 0..10, dropping values past t_final and appending
/// t_final itself when it is not already present.
std::vector<double> default_sample_times(double t_final);

/// Uniform samples with spacing h on [t_begin, t_end], suitable for
/// verify_derivatives.
std::vector<double> stencil_times(double t_begin, double t_end, double h);

Trajectory trajectory_from_solution(const DeltaShockSolution& sol, std::span<const double> times);

/// Largest scaled residual of the integrated relations
///   w      = -[rho] x     + [rho u] t
///   w u    = -[rho u] x   + [rho u^2 + s^2 v] t
///   w g    = -[rho v] x   + [rho u v + u] t
/// Each residual is divided by max(1, |t| * M), M the largest bracket.
double verify_integrated(const Trajectory& traj, const State& Ul, const State& Ur, const Params& p);

/// Largest scaled residual of the differential relations
///   dx/dt = u_delta,  dw/dt = -[rho] u_delta + [rho u],
///   d(wu)/dt = -[rho u] u_delta + [rho u^2 + s^2 v],
///   d(wg)/dt = -[rho v] u_delta + [rho u v + u],
/// with derivatives from central differences over neighbouring samples and
/// u_delta = wu / w. Every interior sample is checked; neighbours must lie
/// within h (times a small slack) of it. Throws Error(kSingularAtOrigin) if
/// any checked sample has |w| <= eps.
double verify_derivatives(const Trajectory& traj, const State& Ul, const State& Ur, const Params& p,
                          double h, double eps = 1e-14);

}  // namespace suliciu::grh
