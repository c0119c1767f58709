#pragma once

#include <array>
#include <variant>

#include "suliciu/state.hpp"

namespace suliciu {

/// Three contact discontinuities separating Ul | U1 | U2 | Ur.
struct ClassicalSolution {
  State left;
  State star_left;   // U1
  State star_right;  // U2
  State right;
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  double sigma3 = 0.0;
};

/// Delta shock x = u_delta t carrying w(t) = w_rate t in the density and the
/// value g for v on the support line. g is constant in time.
struct DeltaShockSolution {
  double u_delta = 0.0;
  double w_rate = 0.0;
  double g = 0.0;
  State left;
  State right;

  double position(double t) const { return u_delta * t; }
  double weight(double t) const { return w_rate * t; }
};

using RiemannSolution = std::variant<ClassicalSolution, DeltaShockSolution>;

inline bool is_delta(const RiemannSolution& sol) {
  return std::holds_alternative<DeltaShockSolution>(sol);
}

/// Intermediate states from the Riemann invariants: R2, R3 continue across
/// the 1-contact, u and v across the 2-contact, R1, R2 across the 3-contact.
/// Throws Error(kNoClassicalSolution) when the pair is not classical or an
/// intermediate density is not positive.
ClassicalSolution solve_classical(const State& Ul, const State& Ur, const Params& p);

/// Relative threshold below which [rho] is treated as zero.
inline constexpr double kZeroDensityJump = 1e-10;

/// Entropy-admissible delta shock. Throws Error(kNotInDeltaRegion) outside
/// the delta region, and also inside it when the root lies outside the
/// entropy bracket (the region conditions do not rule this out). Throws
/// Error(kDegenerateJump) when the delta would carry no mass, so g is undefined.
DeltaShockSolution solve_delta(const State& Ul, const State& Ur, const Params& p);

enum class DeltaRoot { kPlus, kMinus };

/// Either root of [rho] u^2 - 2[rho u] u + [rho u^2 + s^2 v] = 0 together with
/// the weight and g implied by the integrated jump relations. No entropy
/// check is applied; the minus root is exposed so callers can confirm that
/// it is rejected. Requires [rho] != 0.
DeltaShockSolution delta_root(const State& Ul, const State& Ur, const Params& p, DeltaRoot root);

/// Dispatches on classify(). Throws Error(kUnsolvedRegion) when the pair
/// admits neither solution type.
RiemannSolution solve(const State& Ul, const State& Ur, const Params& p);

/// Self-similar evaluation at xi = x/t. Right-continuous: at a wave speed
/// (within eps) the state to the right of the wave is returned.
State sample_classical(const ClassicalSolution& sol, double xi, double eps = kDefaultEpsTie);

struct SingularPoint {
  double weight = 0.0;
  double speed = 0.0;
  double g_value = 0.0;
};

using SamplePoint = std::variant<State, SingularPoint>;

/// Ul left of the band |x - u_delta t| <= half_width, Ur right of it, the
/// singular record inside it.
SamplePoint sample_delta(const DeltaShockSolution& sol, double t, double x, double half_width = 0.0);

struct EntropyCheck {
  bool admissible = false;
  double margin_left = 0.0;   // lambda1(Ul) - u_delta
  double margin_right = 0.0;  // u_delta - lambda3(Ur)
};

/// lambda3(Ur) <= u_delta <= lambda1(Ul), each side relaxed by eps_tie.
EntropyCheck check_entropy(double u_delta, const State& Ul, const State& Ur, const Params& p);

/// [rho] u^2 - 2 [rho u] u + [rho u^2 + s^2 v]. For [rho] = 0 this is the
/// linear residual -2 [rho u] u + [rho u^2 + s^2 v].
double quadratic_residual(double u_delta, const State& Ul, const State& Ur, const Params& p);

/// sigma (cons(A) - cons(B)) - (flux(A) - flux(B)) across each of the three
/// contacts, A and B the states to the left and right of the wave.
std::array<Vec3, 3> rh_residual_classical(const ClassicalSolution& sol, const Params& p);

}  // namespace suliciu
