#include "suliciu/exact_riemann.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "suliciu/errors.hpp"

namespace suliciu {

namespace {

void require_delta_region(const State& Ul, const State& Ur, const Params& p) {
  const double l1 = eigenvalues(Ul, p).lambda1;
  const double l3 = eigenvalues(Ur, p).lambda3;
  if (l1 < l3 - p.eps_tie) {
    std::ostringstream os;
    os << "lambda1(Ul) = " << l1 << " < lambda3(Ur) = " << l3;
    throw Error(ErrorCode::kNotInDeltaRegion, os.str());
  }
  const DeltaCondition cond = delta_condition_sides(Ul, Ur, p);
  if (!cond.holds()) {
    std::ostringstream os;
    os << "(u_l - u_r)^2 = " << cond.lhs << " < s^2 (v_l - v_r)(1/rho_r - 1/rho_l) = " << cond.rhs;
    throw Error(ErrorCode::kNotInDeltaRegion, os.str());
  }
}

// g from the third integrated relation w g = -[rho v] x + [rho u v + u] t.
double delta_value(const Jumps& j, double u_delta, double w_rate) {
  return (-j.q * u_delta + j.q_flux) / w_rate;
}

}  // namespace

ClassicalSolution solve_classical(const State& Ul, const State& Ur, const Params& p) {
  if (classify(Ul, Ur, p) != Region::kClassical) {
    throw Error(ErrorCode::kNoClassicalSolution, "lambda1(Ul) >= lambda3(Ur): pair is not classical");
  }
  const double s = p.s;
  const double u_star = 0.5 * (Ul.u + Ur.u) + 0.5 * s * (Ul.v - Ur.v);
  const double v_star = 0.5 * (Ul.v + Ur.v) + (Ul.u - Ur.u) / (2.0 * s);
  const double inv_rho1 = Ul.v + 1.0 / Ul.rho - v_star;
  const double inv_rho2 = Ur.v + 1.0 / Ur.rho - v_star;
  if (!(inv_rho1 > p.eps_rho) || !(inv_rho2 > p.eps_rho)) {
    std::ostringstream os;
    os << "intermediate specific volumes (" << inv_rho1 << ", " << inv_rho2 << ") are not positive";
    throw Error(ErrorCode::kNoClassicalSolution, os.str());
  }

  ClassicalSolution sol;
  sol.left = Ul;
  sol.right = Ur;
  sol.star_left = {1.0 / inv_rho1, u_star, v_star};
  sol.star_right = {1.0 / inv_rho2, u_star, v_star};
  sol.sigma1 = eigenvalues(Ul, p).lambda1;
  sol.sigma2 = u_star;
  sol.sigma3 = eigenvalues(Ur, p).lambda3;
  if (sol.sigma1 > sol.sigma2 + p.eps_tie || sol.sigma2 > sol.sigma3 + p.eps_tie) {
    std::ostringstream os;
    os << "wave speeds out of order (" << sol.sigma1 << ", " << sol.sigma2 << ", " << sol.sigma3 << ")";
    throw Error(ErrorCode::kNoClassicalSolution, os.str());
  }
  return sol;
}

DeltaShockSolution delta_root(const State& Ul, const State& Ur, const Params& p, DeltaRoot root) {
  const Jumps j = jumps(Ul, Ur, p);
  if (j.rho == 0.0) {
    throw Error(ErrorCode::kDegenerateJump, "[rho] = 0: the jump relation is linear, not quadratic");
  }
  // Quarter discriminant, written in the factored form
  // [rho u]^2 - [rho][rho u^2 + s^2 v] = rho_l rho_r [u]^2 - s^2 [rho][v].
  const double du = Ul.u - Ur.u;
  const double dv = Ul.v - Ur.v;
  const double d4 = Ul.rho * Ur.rho * du * du - p.s * p.s * j.rho * dv;
  const double sq = std::sqrt(std::max(d4, 0.0));

  DeltaShockSolution sol;
  sol.left = Ul;
  sol.right = Ur;
  if (root == DeltaRoot::kPlus) {
    // (B - sqrt(D))/a, evaluated without cancellation.
    sol.u_delta = j.mom > 0.0 ? j.mom_flux / (j.mom + sq) : (j.mom - sq) / j.rho;
    sol.w_rate = sq;
  } else {
    sol.u_delta = j.mom < 0.0 ? j.mom_flux / (j.mom - sq) : (j.mom + sq) / j.rho;
    sol.w_rate = -sq;
  }
  if (sq == 0.0) {
    throw Error(ErrorCode::kDegenerateJump, "vanishing discriminant: the delta carries no mass");
  }
  sol.g = delta_value(j, sol.u_delta, sol.w_rate);
  return sol;
}

DeltaShockSolution solve_delta(const State& Ul, const State& Ur, const Params& p) {
  require_delta_region(Ul, Ur, p);
  const Jumps j = jumps(Ul, Ur, p);

  DeltaShockSolution sol;
  if (std::abs(j.rho) <= kZeroDensityJump * std::max(Ul.rho, Ur.rho)) {
    const double du = Ul.u - Ur.u;
    if (du <= p.eps_tie) {
      std::ostringstream os;
      os << "[rho] = 0 and [u] = " << du << ": delta speed undefined";
      throw Error(ErrorCode::kDegenerateJump, os.str());
    }
    sol.left = Ul;
    sol.right = Ur;
    sol.u_delta = 0.5 * (Ul.u + Ur.u) + p.s * p.s * (Ul.v - Ur.v) / (2.0 * Ul.rho * du);
    sol.w_rate = Ul.rho * du;
    sol.g = delta_value(j, sol.u_delta, sol.w_rate);
  } else {
    sol = delta_root(Ul, Ur, p, DeltaRoot::kPlus);
  }

  const EntropyCheck ec = check_entropy(sol.u_delta, Ul, Ur, p);
  if (!ec.admissible) {
    std::ostringstream os;
    os << "computed speed " << sol.u_delta << " violates the entropy bracket (margins "
       << ec.margin_left << ", " << ec.margin_right << ")";
    throw Error(ErrorCode::kNotInDeltaRegion, os.str());
  }
  return sol;
}

RiemannSolution solve(const State& Ul, const State& Ur, const Params& p) {
  validate(p);
  validate(Ul, p);
  validate(Ur, p);
  switch (classify(Ul, Ur, p)) {
    case Region::kClassical:
      return solve_classical(Ul, Ur, p);
    case Region::kDeltaShock:
      return solve_delta(Ul, Ur, p);
    case Region::kUnsolved:
      break;
  }
  const DeltaCondition cond = delta_condition_sides(Ul, Ur, p);
  std::ostringstream os;
  os << "lambda1(Ul) >= lambda3(Ur) but (u_l - u_r)^2 >= s^2 (v_l - v_r)(1/rho_r - 1/rho_l) fails: "
     << cond.lhs << " < " << cond.rhs;
  throw Error(ErrorCode::kUnsolvedRegion, os.str());
}

State sample_classical(const ClassicalSolution& sol, double xi, double eps) {
  if (xi < sol.sigma1 - eps) return sol.left;
  if (xi < sol.sigma2 - eps) return sol.star_left;
  if (xi < sol.sigma3 - eps) return sol.star_right;
  return sol.right;
}

SamplePoint sample_delta(const DeltaShockSolution& sol, double t, double x, double half_width) {
  const double xs = sol.position(t);
  if (x < xs - half_width) return sol.left;
  if (x > xs + half_width) return sol.right;
  return SingularPoint{sol.weight(t), sol.u_delta, sol.g};
}

EntropyCheck check_entropy(double u_delta, const State& Ul, const State& Ur, const Params& p) {
  EntropyCheck ec;
  ec.margin_left = eigenvalues(Ul, p).lambda1 - u_delta;
  ec.margin_right = u_delta - eigenvalues(Ur, p).lambda3;
  ec.admissible = ec.margin_left >= -p.eps_tie && ec.margin_right >= -p.eps_tie;
  return ec;
}

double quadratic_residual(double u_delta, const State& Ul, const State& Ur, const Params& p) {
  const Jumps j = jumps(Ul, Ur, p);
  return j.rho * u_delta * u_delta - 2.0 * j.mom * u_delta + j.mom_flux;
}

std::array<Vec3, 3> rh_residual_classical(const ClassicalSolution& sol, const Params& p) {
  const auto across = [&p](double sigma, const State& a, const State& b) {
    const Vec3 ca = to_conserved(a).as_array();
    const Vec3 cb = to_conserved(b).as_array();
    const Vec3 fa = flux(a, p);
    const Vec3 fb = flux(b, p);
    Vec3 r{};
    for (std::size_t k = 0; k < 3; ++k) {
      r[k] = sigma * (ca[k] - cb[k]) - (fa[k] - fb[k]);
    }
    return r;
  };
  return {
      across(sol.sigma1, sol.left, sol.star_left),
      across(sol.sigma2, sol.star_left, sol.star_right),
      across(sol.sigma3, sol.star_right, sol.right),
  };
}

}  // namespace suliciu
