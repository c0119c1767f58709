#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "suliciu/errors.hpp"
#include "suliciu/state.hpp"
#include "test_support.hpp"

namespace suliciu {
namespace {

using testing::kLeft;
using testing::kRight;

const Params kUnit{};

TEST(Eigenvalues, ExperimentStates) {
  const auto l = eigenvalues(kLeft, kUnit);
  EXPECT_DOUBLE_EQ(l.lambda1, 44.0 / 9.0);
  EXPECT_DOUBLE_EQ(l.lambda2, 5.0);
  EXPECT_DOUBLE_EQ(l.lambda3, 46.0 / 9.0);

  const auto r = eigenvalues(kRight, kUnit);
  EXPECT_DOUBLE_EQ(r.lambda1, 2.0);
  EXPECT_DOUBLE_EQ(r.lambda2, 3.0);
  EXPECT_DOUBLE_EQ(r.lambda3, 4.0);

  const auto z = eigenvalues({1.0, 0.0, 0.0}, kUnit);
  EXPECT_EQ(z.lambda1, -1.0);
  EXPECT_EQ(z.lambda2, 0.0);
  EXPECT_EQ(z.lambda3, 1.0);
}

TEST(RiemannInvariants, DirectEvaluation) {
  const auto ri = riemann_invariants(kLeft, kUnit);
  EXPECT_NEAR(ri.r1, -11.0 / 5.0, 1e-15);
  EXPECT_NEAR(ri.r2, 131.0 / 45.0, 1e-15);
  EXPECT_NEAR(ri.r3, 39.0 / 5.0, 1e-15);

  const auto unit = riemann_invariants({1.0, 0.0, 0.0}, kUnit);
  EXPECT_EQ(unit.r1, 0.0);
  EXPECT_EQ(unit.r2, 1.0);
  EXPECT_EQ(unit.r3, 0.0);
}

TEST(RiemannInvariants, EigenvalueIdentitiesOnRandomStates) {
  std::mt19937_64 gen(20141);
  std::uniform_real_distribution<double> log_rho(std::log(kDefaultEpsRho), std::log(1e6));
  std::uniform_real_distribution<double> uv(-1e6, 1e6);
  std::uniform_real_distribution<double> log_s(std::log(1e-2), std::log(1e2));
  for (int i = 0; i < 5000; ++i) {
    const Params p{std::exp(log_s(gen))};
    const State U{std::exp(log_rho(gen)), uv(gen), uv(gen)};
    const auto ev = eigenvalues(U, p);
    const auto ri = riemann_invariants(U, p);
    // Relative to the magnitudes that enter each identity.
    const double scale1 = std::abs(ri.r3 / p.s) + std::abs(p.s * ri.r2) + std::abs(ev.lambda1);
    const double scale2 = std::abs(ri.r3) / p.s + std::abs(ri.r1) / p.s + std::abs(ev.lambda2);
    const double scale3 = std::abs(p.s * ri.r2) + std::abs(ri.r1 / p.s) + std::abs(ev.lambda3);
    EXPECT_LE(std::abs(ri.r3 / p.s - p.s * ri.r2 - ev.lambda1), 1e-13 * scale1);
    EXPECT_LE(std::abs((ri.r3 - ri.r1) / (2.0 * p.s) - ev.lambda2), 1e-13 * scale2);
    EXPECT_LE(std::abs(p.s * ri.r2 - ri.r1 / p.s - ev.lambda3), 1e-13 * scale3);

    // Strict hyperbolicity with gaps s/rho.
    EXPECT_LT(ev.lambda1, ev.lambda2);
    EXPECT_LT(ev.lambda2, ev.lambda3);
  }
}

TEST(Flux, Values) {
  const Vec3 fl = flux(kLeft, kUnit);
  EXPECT_DOUBLE_EQ(fl[0], 45.0);
  EXPECT_DOUBLE_EQ(fl[1], 227.8);
  EXPECT_DOUBLE_EQ(fl[2], 131.0);

  const Vec3 fr = flux(kRight, kUnit);
  EXPECT_EQ(fr, (Vec3{3.0, 11.0, 9.0}));

  for (double s : {0.5, 1.0, 7.0}) {
    EXPECT_EQ(flux({1.0, 0.0, 0.0}, Params{s}), (Vec3{0.0, 0.0, 0.0}));
  }
}

TEST(Bracket, LeftMinusRight) {
  EXPECT_EQ(bracket(9.0, 1.0), 8.0);
  EXPECT_EQ(bracket(5.0, 3.0), 2.0);
  EXPECT_EQ(bracket(1.25, 1.25), 0.0);
}

TEST(Jumps, ExperimentData) {
  const Jumps j = jumps(kLeft, kRight, kUnit);
  EXPECT_DOUBLE_EQ(j.rho, 8.0);
  EXPECT_DOUBLE_EQ(j.mom, 42.0);
  EXPECT_NEAR(j.mom_flux, 216.8, 1e-12);
  EXPECT_NEAR(j.q, 23.2, 1e-12);
  EXPECT_DOUBLE_EQ(j.q_flux, 122.0);
}

TEST(DeltaCondition, Examples) {
  const auto c = delta_condition_sides(kLeft, kRight, kUnit);
  EXPECT_DOUBLE_EQ(c.lhs, 4.0);
  EXPECT_NEAR(c.rhs, 0.8 * 8.0 / 9.0, 1e-15);
  EXPECT_TRUE(c.holds());

  EXPECT_TRUE(delta_condition(kLeft, kLeft, kUnit));

  const State hot{10.0, 1.2, 2.0};
  const auto d = delta_condition_sides(hot, {1.0, 0.0, 0.0}, kUnit);
  EXPECT_NEAR(d.lhs, 1.44, 1e-15);
  EXPECT_NEAR(d.rhs, 1.8, 1e-15);
  EXPECT_FALSE(d.holds());
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(kLeft, kRight, kUnit), Region::kDeltaShock);
  EXPECT_EQ(classify({1.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, kUnit), Region::kClassical);
  EXPECT_EQ(classify({10.0, 1.2, 2.0}, {1.0, 0.0, 0.0}, kUnit), Region::kUnsolved);
}

TEST(Classify, TieCountsAsDelta) {
  // lambda1(Ul) = 2 - 1 = 1 = lambda3(Ur) = 0 + 1.
  EXPECT_EQ(classify({1.0, 2.0, 0.0}, {1.0, 0.0, 0.0}, kUnit), Region::kDeltaShock);
  // Within eps_tie below the tie still counts.
  EXPECT_EQ(classify({1.0, 2.0 - 0.5e-12, 0.0}, {1.0, 0.0, 0.0}, kUnit), Region::kDeltaShock);
  EXPECT_EQ(classify({1.0, 2.0 - 1e-9, 0.0}, {1.0, 0.0, 0.0}, kUnit), Region::kClassical);
}

TEST(Classify, ConsistentWithItsDefinitionOnRandomPairs) {
  testing::StateSampler draw(7);
  std::uniform_real_distribution<double> shift(-10.0, 10.0);
  for (int i = 0; i < 20000; ++i) {
    const State a = draw();
    const State b = draw();
    const Region r = classify(a, b, kUnit);
    const bool classical = eigenvalues(a, kUnit).lambda1 < eigenvalues(b, kUnit).lambda3 - kUnit.eps_tie;
    const bool cond = delta_condition(a, b, kUnit);
    // Exactly one tag, matching the two inequalities.
    EXPECT_EQ(r == Region::kClassical, classical);
    EXPECT_EQ(r == Region::kDeltaShock, !classical && cond);
    EXPECT_EQ(r == Region::kUnsolved, !classical && !cond);

    // A common velocity shift preserves lambda1(Ul) - lambda3(Ur) and the
    // delta condition, hence the tag (away from the tie band).
    const double c = shift(draw.engine());
    const State as{a.rho, a.u + c, a.v};
    const State bs{b.rho, b.u + c, b.v};
    const double gap = eigenvalues(a, kUnit).lambda1 - eigenvalues(b, kUnit).lambda3;
    if (std::abs(gap) > 1e-9) {
      EXPECT_EQ(classify(as, bs, kUnit), r);
    }
  }
}

TEST(Conversions, RoundTrip) {
  testing::StateSampler draw(11, 1e-6, 1e6, 1e6);
  for (int i = 0; i < 10000; ++i) {
    const State U = draw();
    const State back = to_primitive(to_conserved(U), kUnit);
    EXPECT_EQ(back.rho, U.rho);
    EXPECT_LE(std::abs(back.u - U.u), 1e-14 * std::abs(U.u) + 1e-300);
    EXPECT_LE(std::abs(back.v - U.v), 1e-14 * std::abs(U.v) + 1e-300);
  }
}

TEST(Validation, RejectsVacuumAndBadParams) {
  EXPECT_THROW(validate(State{0.0, 1.0, 1.0}, kUnit), Error);
  EXPECT_THROW(validate(State{1e-13, 1.0, 1.0}, kUnit), Error);
  EXPECT_NO_THROW(validate(State{1e-12, 1.0, 1.0}, kUnit));
  EXPECT_THROW(validate(State{1.0, NAN, 1.0}, kUnit), Error);
  EXPECT_THROW(to_primitive(Conserved{-1.0, 0.0, 0.0}, kUnit), Error);
  EXPECT_THROW(validate(Params{0.0}), Error);
  EXPECT_THROW(validate(Params{1.0, 0.0, 1e-12}), Error);

  try {
    validate(State{0.0, 1.0, 1.0}, kUnit);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidState);
  }
}

}  // namespace
}  // namespace suliciu
