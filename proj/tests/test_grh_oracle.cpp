#include <gtest/gtest.h>

#include <stdexcept>

#include "suliciu/errors.hpp"
#include "suliciu/grh_oracle.hpp"
#include "test_support.hpp"

namespace suliciu::grh {
namespace {

using suliciu::testing::kLeft;
using suliciu::testing::kRight;

const Params kUnit{};

TEST(DefaultSampleTimes, GeometricAndCapped) {
  const auto t = default_sample_times(0.1);
  const std::vector<double> want{1e-3, 2e-3, 4e-3, 8e-3, 16e-3, 32e-3, 64e-3, 0.1};
  ASSERT_EQ(t.size(), want.size());
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_DOUBLE_EQ(t[i], want[i]);

  const auto full = default_sample_times(10.0);
  ASSERT_EQ(full.size(), 12u);
  EXPECT_DOUBLE_EQ(full[10], 1.024);
  EXPECT_DOUBLE_EQ(full.back(), 10.0);

  const auto exact = default_sample_times(1.024);
  EXPECT_EQ(exact.size(), 11u);
}

TEST(Trajectory, ExperimentValuesAtTenthSecond) {
  const auto sol = solve_delta(kLeft, kRight, kUnit);
  const std::vector<double> times{0.0, 0.1};
  const Trajectory tr = trajectory_from_solution(sol, times);
  EXPECT_EQ(tr.x[0], 0.0);
  EXPECT_EQ(tr.w[0], 0.0);
  EXPECT_EQ(tr.wu[0], 0.0);
  EXPECT_EQ(tr.wg[0], 0.0);
  EXPECT_NEAR(tr.x[1], 0.45699264745632278, 1e-14);
  EXPECT_NEAR(tr.w[1], 0.54405882034941773, 1e-14);
  EXPECT_NEAR(tr.wu[1], tr.w[1] * tr.x[1] / 0.1, 1e-14);
}

TEST(Trajectory, EqualDensityExample) {
  const auto sol = solve_delta({1.0, 2.0, 0.0}, {1.0, -2.0, 0.0}, kUnit);
  const std::vector<double> times{1.0};
  const Trajectory tr = trajectory_from_solution(sol, times);
  EXPECT_DOUBLE_EQ(tr.x[0], 0.0);
  EXPECT_DOUBLE_EQ(tr.w[0], 4.0);
  EXPECT_DOUBLE_EQ(tr.wu[0], 0.0);
  EXPECT_DOUBLE_EQ(tr.wg[0], 4.0);
  EXPECT_LE(verify_integrated(tr, sol.left, sol.right, kUnit), 1e-15);
}

TEST(VerifyIntegrated, ExperimentAndPerturbation) {
  const auto sol = solve_delta(kLeft, kRight, kUnit);
  Trajectory tr = trajectory_from_solution(sol, default_sample_times(0.1));
  EXPECT_LE(verify_integrated(tr, kLeft, kRight, kUnit), 1e-10);

  // The mass relation moves by [rho] 1e-3 = 8e-3 and the momentum relation by
  // [rho u] 1e-3 = 42e-3, both over the scale 0.1 * 216.8.
  tr.x.back() += 1e-3;
  const double r = verify_integrated(tr, kLeft, kRight, kUnit);
  EXPECT_GE(r, 1e-4);
  EXPECT_NEAR(r, 42e-3 / 21.68, 1e-9);
}

TEST(VerifyIntegrated, NoJumpNoMass) {
  Trajectory tr;
  tr.times = {0.5, 1.0, 2.0};
  tr.x = {0.3, -7.0, 11.0};
  tr.w = tr.wu = tr.wg = {0.0, 0.0, 0.0};
  EXPECT_EQ(verify_integrated(tr, kLeft, kLeft, kUnit), 0.0);
}

TEST(VerifyDerivatives, ExperimentStencil) {
  const auto sol = solve_delta(kLeft, kRight, kUnit);
  const double h = 1e-4;
  const Trajectory tr = trajectory_from_solution(sol, stencil_times(0.01, 0.1, h));
  EXPECT_GE(tr.size(), 900u);
  EXPECT_LE(verify_derivatives(tr, kLeft, kRight, kUnit, h), 1e-8);
}

TEST(VerifyDerivatives, DetectsWrongSpeed) {
  auto sol = solve_delta(kLeft, kRight, kUnit);
  sol.u_delta += 1e-3;
  const double h = 1e-3;
  const Trajectory tr = trajectory_from_solution(sol, stencil_times(0.01, 0.1, h));
  EXPECT_GT(verify_derivatives(tr, kLeft, kRight, kUnit, h), 1e-5);
}

TEST(VerifyDerivatives, SingularAtOrigin) {
  Trajectory tr;
  tr.times = {0.0, 1e-3, 2e-3};
  tr.x = tr.w = tr.wu = tr.wg = {0.0, 0.0, 0.0};
  try {
    verify_derivatives(tr, kLeft, kRight, kUnit, 1e-3);
    FAIL() << "expected SingularAtOrigin";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularAtOrigin);
  }
}

TEST(VerifyDerivatives, RejectsSparseSamples) {
  const auto sol = solve_delta(kLeft, kRight, kUnit);
  const Trajectory tr = trajectory_from_solution(sol, default_sample_times(0.1));
  EXPECT_THROW(verify_derivatives(tr, kLeft, kRight, kUnit, 1e-4), std::invalid_argument);
}

// Both roots satisfy the relations; only the entropy bracket picks S+.
TEST(RootSelection, BothRootsPassOracleOnlyPlusIsAdmissible) {
  const auto plus = delta_root(kLeft, kRight, kUnit, DeltaRoot::kPlus);
  const auto minus = delta_root(kLeft, kRight, kUnit, DeltaRoot::kMinus);
  const double h = 1e-4;
  const auto times = stencil_times(0.01, 0.1, h);
  for (const auto& sol : {plus, minus}) {
    const Trajectory tr = trajectory_from_solution(sol, times);
    EXPECT_LE(verify_integrated(tr, kLeft, kRight, kUnit), 1e-10);
    EXPECT_LE(verify_derivatives(tr, kLeft, kRight, kUnit, h), 1e-8);
  }
  EXPECT_TRUE(check_entropy(plus.u_delta, kLeft, kRight, kUnit).admissible);
  EXPECT_FALSE(check_entropy(minus.u_delta, kLeft, kRight, kUnit).admissible);
}

TEST(RootSelection, RandomPairs) {
  suliciu::testing::StateSampler draw(7);
  const double h = 1e-3;
  const auto stencil = stencil_times(0.01, 0.05, h);
  int distinct = 0;
  for (int i = 0; i < 500; ++i) {
    const auto [l, r] = draw.pair_in(Region::kDeltaShock, kUnit);
    const auto plus = delta_root(l, r, kUnit, DeltaRoot::kPlus);
    const auto minus = delta_root(l, r, kUnit, DeltaRoot::kMinus);
    for (const auto& sol : {plus, minus}) {
      EXPECT_LE(verify_integrated(trajectory_from_solution(sol, default_sample_times(1.0)), l, r, kUnit), 1e-10);
      EXPECT_LE(verify_derivatives(trajectory_from_solution(sol, stencil), l, r, kUnit, h), 1e-8);
    }
    if (std::abs(plus.u_delta - minus.u_delta) > 1e-9) {
      ++distinct;
      EXPECT_FALSE(check_entropy(minus.u_delta, l, r, kUnit).admissible);
    }
  }
  EXPECT_GT(distinct, 450);
}

TEST(RoundTrip, SolveDeltaAgreesWithOracle) {
  suliciu::testing::StateSampler draw(11);
  int solved = 0;
  while (solved < 500) {
    const auto [l, r] = draw.pair_in(Region::kDeltaShock, kUnit);
    DeltaShockSolution sol;
    try {
      sol = solve_delta(l, r, kUnit);
    } catch (const Error&) {
      continue;
    }
    ++solved;
    EXPECT_LE(verify_integrated(trajectory_from_solution(sol, default_sample_times(1.0)), l, r, kUnit), 1e-10);
  }
}

}  // namespace
}  // namespace suliciu::grh
