#pragma once

#include <array>
#include <string_view>

namespace suliciu {

using Vec3 = std::array<double, 3>;

inline constexpr double kDefaultEpsRho = 1e-12;
inline constexpr double kDefaultEpsTie = 1e-12;

/// Model parameters of the relaxation system
///
///   rho_t + (rho u)_x           = 0
///   (rho u)_t + (rho u^2 + s^2 v)_x = 0
///   (rho v)_t + (rho u v + u)_x = 0
///
/// `eps_rho` is the vacuum guard, `eps_tie` the absolute tolerance used when
/// comparing characteristic speeds.
struct Params {
  double s = 1.0;
  double eps_rho = kDefaultEpsRho;
  double eps_tie = kDefaultEpsTie;
};

/// Throws Error(kInvalidParams) unless s > 0 and both tolerances are positive.
void validate(const Params& p);

/// Primitive state (density, velocity, auxiliary field).
struct State {
  double rho = 1.0;
  double u = 0.0;
  double v = 0.0;

  friend bool operator==(const State&, const State&) = default;
};

/// Throws Error(kInvalidState) for non-finite entries or rho < eps_rho.
void validate(const State& U, const Params& p);

/// Conserved variables (rho, rho u, rho v).
struct Conserved {
  double rho = 1.0;
  double mom = 0.0;
  double q = 0.0;

  Vec3 as_array() const { return {rho, mom, q}; }
  friend bool operator==(const Conserved&, const Conserved&) = default;
};

Conserved to_conserved(const State& U);

/// Recovers primitives by division. Throws Error(kInvalidState) when
/// rho < eps_rho.
State to_primitive(const Conserved& C, const Params& p);

struct Eigenvalues {
  double lambda1;
  double lambda2;
  double lambda3;
};

struct RiemannInvariants {
  double r1;  // s^2 v - s u
  double r2;  // v + 1/rho
  double r3;  // s^2 v + s u
};

Eigenvalues eigenvalues(const State& U, const Params& p);
RiemannInvariants riemann_invariants(const State& U, const Params& p);

/// Physical flux (rho u, rho u^2 + s^2 v, rho u v + u).
Vec3 flux(const State& U, const Params& p);

/// Jump across a discontinuity, always taken as left minus right.
constexpr double bracket(double a_minus, double a_plus) { return a_minus - a_plus; }

/// The five jumps that enter the delta-shock relations, all left minus right.
struct Jumps {
  double rho;       // [rho]
  double mom;       // [rho u]
  double mom_flux;  // [rho u^2 + s^2 v]
  double q;         // [rho v]
  double q_flux;    // [rho u v + u]
};

Jumps jumps(const State& Ul, const State& Ur, const Params& p);

/// Both sides of the admissibility inequality for delta shocks,
/// (u_l - u_r)^2 >= s^2 (v_l - v_r)(1/rho_r - 1/rho_l).
struct DeltaCondition {
  double lhs;
  double rhs;
  bool holds() const { return lhs >= rhs; }
};

DeltaCondition delta_condition_sides(const State& Ul, const State& Ur, const Params& p);
bool delta_condition(const State& Ul, const State& Ur, const Params& p);

enum class Region { kClassical, kDeltaShock, kUnsolved };

std::string_view to_string(Region r);

/// Classical if lambda1(Ul) < lambda3(Ur) - eps_tie. Otherwise DeltaShock
/// when the delta condition holds and Unsolved when it does not. The tie
/// lambda1(Ul) == lambda3(Ur) counts as DeltaShock.
Region classify(const State& Ul, const State& Ur, const Params& p);

}  // namespace suliciu
