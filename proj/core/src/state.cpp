#include "suliciu/state.hpp"

#include <cmath>
#include <sstream>

#include "suliciu/errors.hpp"

namespace suliciu {

void validate(const Params& p) {
  if (!(p.s > 0.0) || !std::isfinite(p.s)) {
    throw Error(ErrorCode::kInvalidParams, "s must be a positive finite number");
  }
  if (!(p.eps_rho > 0.0) || !(p.eps_tie > 0.0)) {
    throw Error(ErrorCode::kInvalidParams, "eps_rho and eps_tie must be positive");
  }
}

void validate(const State& U, const Params& p) {
  if (!std::isfinite(U.rho) || !std::isfinite(U.u) || !std::isfinite(U.v)) {
    throw Error(ErrorCode::kInvalidState, "state has non-finite entries");
  }
  if (U.rho < p.eps_rho) {
    std::ostringstream os;
    os << "density " << U.rho << " is below the vacuum guard " << p.eps_rho;
    throw Error(ErrorCode::kInvalidState, os.str());
  }
}

Conserved to_conserved(const State& U) { return {U.rho, U.rho * U.u, U.rho * U.v}; }

State to_primitive(const Conserved& C, const Params& p) {
  if (!(C.rho >= p.eps_rho)) {
    std::ostringstream os;
    os << "density " << C.rho << " is below the vacuum guard " << p.eps_rho;
    throw Error(ErrorCode::kInvalidState, os.str());
  }
  return {C.rho, C.mom / C.rho, C.q / C.rho};
}

Eigenvalues eigenvalues(const State& U, const Params& p) {
  const double c = p.s / U.rho;
  return {U.u - c, U.u, U.u + c};
}

RiemannInvariants riemann_invariants(const State& U, const Params& p) {
  const double s2v = p.s * p.s * U.v;
  const double su = p.s * U.u;
  return {s2v - su, U.v + 1.0 / U.rho, s2v + su};
}

Vec3 flux(const State& U, const Params& p) {
  const double m = U.rho * U.u;
  return {m, m * U.u + p.s * p.s * U.v, m * U.v + U.u};
}

Jumps jumps(const State& Ul, const State& Ur, const Params& p) {
  const Vec3 fl = flux(Ul, p);
  const Vec3 fr = flux(Ur, p);
  return {
      bracket(Ul.rho, Ur.rho),
      bracket(fl[0], fr[0]),
      bracket(fl[1], fr[1]),
      bracket(Ul.rho * Ul.v, Ur.rho * Ur.v),
      bracket(fl[2], fr[2]),
  };
}

DeltaCondition delta_condition_sides(const State& Ul, const State& Ur, const Params& p) {
  const double du = Ul.u - Ur.u;
  const double dv = Ul.v - Ur.v;
  return {du * du, p.s * p.s * dv * (1.0 / Ur.rho - 1.0 / Ul.rho)};
}

bool delta_condition(const State& Ul, const State& Ur, const Params& p) {
  return delta_condition_sides(Ul, Ur, p).holds();
}

std::string_view to_string(Region r) {
  switch (r) {
    case Region::kClassical: return "Classical";
    case Region::kDeltaShock: return "DeltaShock";
    case Region::kUnsolved: return "Unsolved";
  }
  return "Unknown";
}

Region classify(const State& Ul, const State& Ur, const Params& p) {
  const double l1 = eigenvalues(Ul, p).lambda1;
  const double l3 = eigenvalues(Ur, p).lambda3;
  if (l1 < l3 - p.eps_tie) {
    return Region::kClassical;
  }
  return delta_condition(Ul, Ur, p) ? Region::kDeltaShock : Region::kUnsolved;
}

}  // namespace suliciu
