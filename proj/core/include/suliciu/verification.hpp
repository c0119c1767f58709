#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "suliciu/exact_riemann.hpp"
#include "suliciu/lax_friedrichs.hpp"
#include "suliciu/state.hpp"

namespace suliciu::verify {

/// Spike detection settings. A cell belongs to the spike when its density
/// excess over the background exceeds
///   threshold_jump * |rho_l - rho_r| + threshold_level * max(rho_l, rho_r).
struct SpikeOptions {
  double window_halfwidth = 0.05;
  double threshold_jump = 0.1;
  double threshold_level = 0.05;

  double threshold(const State& Ul, const State& Ur) const;
};

/// Background density for a split at `split`: rho_l to the left, rho_r to
/// the right, their mean exactly at the split.
double background_density(double x, double split, const State& Ul, const State& Ur);

/// Two passes: the density maximum seeds the split, then the estimate is the
/// excess-weighted centroid of the above-threshold cells within the window
/// around the seed. Throws Error(kNoSpikeFound) if no cell qualifies.
double estimate_shock_position(const fv::Field& f, const fv::Grid& grid, const State& Ul, const State& Ur,
                               const SpikeOptions& opts = {});

/// Excess mass sum (rho_j - background) dx over |x_j - x_hat| <= window,
/// background split at the estimated position.
double extract_delta_weight(const fv::Field& f, const fv::Grid& grid, const State& Ul, const State& Ur,
                            double window_halfwidth, const SpikeOptions& opts = {});

/// Compactly supported C^2 bump (1 - tau^2)^3 (1 - xi^2)^3, tau = (t - t0)/ht,
/// xi = (x - x0)/hx, scaled by `coef`.
struct Bump {
  double t0 = 0.0;
  double x0 = 0.0;
  double ht = 1.0;
  double hx = 1.0;
  double coef = 1.0;
};

/// Finite linear combination of bumps.
class TestFunction {
 public:
  TestFunction() = default;
  explicit TestFunction(Bump b) : terms_{b} {}

  static TestFunction bump(double t0, double x0, double ht, double hx) { return TestFunction(Bump{t0, x0, ht, hx, 1.0}); }

  std::span<const Bump> terms() const { return terms_; }

  double value(double t, double x) const;
  double dt(double t, double x) const;
  double dx(double t, double x) const;

  friend TestFunction operator+(const TestFunction& a, const TestFunction& b);
  friend TestFunction operator*(double c, const TestFunction& a);

 private:
  std::vector<Bump> terms_;
};

/// Bump centred on the middle wave (or delta line) at t/2 with half-widths
/// 0.4 t and 0.8 t.
TestFunction standard_bump(const RiemannSolution& sol, double t);

/// Integrals I1, I2, I3 of the measure-solution identities
///   I1 = int int (phi_t + u phi_x) drho dt
///   I2 = int int u (phi_t + u phi_x) drho dt + int int s^2 v phi_x dx dt
///   I3 = int int v (phi_t + u phi_x) drho dt + int int u phi_x dx dt
/// for an exact solution. The bounding box of the support is split along
/// every wave line and every bump edge, so each panel integrand is a
/// polynomial and quad_n-point Gauss-Legendre on each panel is exact up to
/// rounding. Throws Error(kUnsupportedTestFunction) if any bump reaches t <= 0.
Vec3 weak_residual(const RiemannSolution& sol, const TestFunction& phi, const Params& p, int quad_n = 64);

enum class RasterMode {
  kPointSample,  // cell-center values; the delta cell holds mean(rho_l, rho_r) + w / dx
  kCellAverage,  // exact cell averages of the measure
};

/// Exact solution at time t > 0 on the grid.
fv::Field rasterize(const RiemannSolution& sol, const fv::Grid& grid, double t, RasterMode mode);

struct ResidualReport {
  std::optional<double> shock_position;
  std::optional<double> shock_position_error;
  std::optional<double> weight_estimate;
  std::optional<double> weight_exact;
  std::optional<double> weight_error_rel;
  std::optional<double> peak_density;
  Vec3 weak_residuals{};
  Vec3 linf_errors_away_from_shock{};
  Vec3 l1_errors{};
};

struct ReportOptions {
  SpikeOptions spike;
  int quad_n = 64;
  double exclusion_cells = 10.0;  // width, in cells, of the L1 exclusion window
};

/// Compares a numerical field at time t against the exact solution. Plateau
/// errors skip cells within max(exclusion_cells * dx, window) of the shock
/// (or of any contact for classical data); the L1 errors skip a window of
/// exclusion_cells * dx centred on the shock.
ResidualReport make_report(const fv::Field& f, const fv::Grid& grid, const RiemannSolution& sol,
                           const Params& p, double t, const ReportOptions& opts = {});

struct ConvergenceRow {
  std::size_t n_cells = 0;
  std::optional<double> shock_error;
  std::optional<double> weight_error_rel;
  std::optional<double> peak_density;
  Vec3 l1_errors{};
};

/// Runs the solver at every resolution (concurrently) and reports errors at
/// t_final. Rows come back in the order of `refinements`.
std::vector<ConvergenceRow> convergence_study(const fv::SimConfig& base, const State& Ul, const State& Ur,
                                              std::span<const std::size_t> refinements,
                                              const ReportOptions& opts = {});

/// Least-squares slope of -log(error) against log(N).
double observed_order(std::span<const std::size_t> n_cells, std::span<const double> errors);

}  // namespace suliciu::verify
