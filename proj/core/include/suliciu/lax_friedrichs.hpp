#pragma once

#include <cstddef>
#include <vector>

#include "suliciu/state.hpp"

namespace suliciu::fv {

struct Grid {
  double x_min = -1.0;
  double x_max = 1.0;
  std::size_t n_cells = 100;

  double dx() const { return (x_max - x_min) / static_cast<double>(n_cells); }
  double center(std::size_t j) const { return x_min + (static_cast<double>(j) + 0.5) * dx(); }
};

void validate(const Grid& g);

/// How the time step follows from `cfl`:
///  - kCourant:    dt = cfl * dx / max_j max(|lambda1|, |lambda3|)
///  - kFixedRatio: dt = cfl * dx, i.e. cfl is the mesh ratio dt/dx
enum class TimeStepPolicy { kCourant, kFixedRatio };

struct SimConfig {
  Grid grid;
  double cfl = 0.5;
  double t_final = 0.0;
  Params params;
  std::vector<double> snapshot_times;  // empty means {t_final}
  TimeStepPolicy policy = TimeStepPolicy::kCourant;
};

void validate(const SimConfig& c);

struct Field {
  std::vector<Conserved> cells;
  double time = 0.0;
};

/// Cell j takes Ul when its center is negative and Ur otherwise. Throws
/// Error(kDomainExcludesOrigin) unless x_min < 0 < x_max.
Field init_riemann(const Grid& grid, const State& Ul, const State& Ur);

double max_wave_speed(const Field& f, const Params& p);

/// Courant-limited step cfl * dx / max wave speed.
double cfl_dt(const Field& f, double dx, double cfl, const Params& p);

/// One Lax-Friedrichs step with zero-gradient ghost cells,
///   U_j <- (U_{j-1} + U_{j+1}) / 2 - dt / (2 dx) (F_{j+1} - F_{j-1}).
/// Throws Error(kVacuumProduced) if any updated density falls below eps_rho.
Field lxf_step(const Field& f, double dx, double dt, const Params& p);

/// Net outflow rate F(U_last) - F(U_first); with zero-gradient ghosts one
/// step changes the discrete totals by exactly -dt times this.
Vec3 boundary_flux(const Field& f, const Params& p);

/// Compensated sums of U_j dx.
Vec3 conserved_totals(const Field& f, double dx);

struct Snapshot {
  double time = 0.0;
  Field field;
};

struct RunStats {
  std::size_t steps = 0;
  double max_step_drift = 0.0;   // worst per-step relative conservation defect
  double total_drift = 0.0;      // whole-run relative defect after boundary fluxes
  double min_density = 0.0;
  double max_mesh_courant = 0.0; // largest dt * max speed / dx used
};

struct SimResult {
  std::vector<Snapshot> snapshots;
  RunStats stats;
};

/// Advances from Riemann data to t_final, clamping steps so every snapshot
/// time is hit exactly. Snapshots come back in increasing time order.
SimResult run(const SimConfig& config, const State& Ul, const State& Ur);

/// Primitive values per cell.
std::vector<State> primitives(const Field& f, const Params& p);

}  // namespace suliciu::fv
