#include <gtest/gtest.h>

#include <cmath>

#include "suliciu/errors.hpp"
#include "suliciu/lax_friedrichs.hpp"
#include "test_support.hpp"

namespace suliciu::fv {
namespace {

using suliciu::testing::kLeft;
using suliciu::testing::kRight;

const Params kUnit{};

void expect_cell(const Conserved& c, double rho, double mom, double q, double tol = 1e-13) {
  EXPECT_NEAR(c.rho, rho, tol * std::abs(rho));
  EXPECT_NEAR(c.mom, mom, tol * std::abs(mom));
  EXPECT_NEAR(c.q, q, tol * std::abs(q));
}

TEST(Grid, Validation) {
  EXPECT_THROW(validate(Grid{1.0, 1.0, 10}), Error);
  EXPECT_THROW(validate(Grid{-1.0, 1.0, 0}), Error);
  EXPECT_NO_THROW(validate(Grid{-1.0, 1.0, 1}));
  EXPECT_DOUBLE_EQ((Grid{-1.0, 1.0, 4}.center(0)), -0.75);
}

TEST(InitRiemann, ExperimentSplit) {
  const Grid g{-1.0, 1.0, 1780};
  const Field f = init_riemann(g, kLeft, kRight);
  ASSERT_EQ(f.cells.size(), 1780u);
  EXPECT_EQ(f.time, 0.0);
  std::size_t left = 0;
  for (const Conserved& c : f.cells) left += c.rho == 9.0 ? 1 : 0;
  EXPECT_EQ(left, 890u);
  expect_cell(f.cells[889], 9.0, 45.0, 25.2);
  expect_cell(f.cells[890], 1.0, 3.0, 2.0);
}

TEST(InitRiemann, DomainMustContainOrigin) {
  try {
    init_riemann(Grid{0.5, 1.0, 10}, kLeft, kRight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomainExcludesOrigin);
  }
  EXPECT_THROW(init_riemann(Grid{-1.0, 0.0, 10}, kLeft, kRight), Error);
}

TEST(CflDt, Examples) {
  const Grid g{-1.0, 1.0, 1780};
  const Field f = init_riemann(g, kLeft, kRight);
  EXPECT_DOUBLE_EQ(max_wave_speed(f, kUnit), 46.0 / 9.0);
  EXPECT_NEAR(cfl_dt(f, g.dx(), 0.1969889, kUnit), 0.1969889 * (2.0 / 1780.0) / (46.0 / 9.0), 1e-20);
  EXPECT_NEAR(cfl_dt(f, g.dx(), 0.1969889, kUnit), 4.33048387884709e-05, 1e-18);

  const Field flat = init_riemann(Grid{-1.0, 1.0, 20}, {1.0, 0.0, 0.0}, {1.0, 0.0, 0.0});
  EXPECT_DOUBLE_EQ(cfl_dt(flat, 0.1, 0.5, kUnit), 0.05);
  EXPECT_DOUBLE_EQ(cfl_dt(flat, 0.1, 0.8, kUnit), 2.0 * cfl_dt(flat, 0.1, 0.4, kUnit));
}

TEST(LxfStep, ConstantFieldUnchanged) {
  const State U{2.0, -0.7, 1.3};
  const Grid g{-1.0, 1.0, 50};
  const Field f = init_riemann(g, U, U);
  const Field next = lxf_step(f, g.dx(), 0.01, kUnit);
  EXPECT_DOUBLE_EQ(next.time, 0.01);
  for (std::size_t j = 0; j < f.cells.size(); ++j) {
    EXPECT_EQ(next.cells[j].rho, f.cells[j].rho);
    EXPECT_EQ(next.cells[j].mom, f.cells[j].mom);
    EXPECT_EQ(next.cells[j].q, f.cells[j].q);
  }
}

// Hand evaluation on six cells of width 1/3 with dt = 1/100: only the two
// cells adjacent to the interface change, both to
// (Ul + Ur)/2 - 0.015 (F(Ur) - F(Ul)).
TEST(LxfStep, SixCellOracle) {
  const Grid g{-1.0, 1.0, 6};
  const Field f = init_riemann(g, kLeft, kRight);
  const Field next = lxf_step(f, g.dx(), 0.01, kUnit);
  expect_cell(next.cells[0], 9.0, 45.0, 25.2);
  expect_cell(next.cells[1], 9.0, 45.0, 25.2);
  expect_cell(next.cells[2], 5.63, 27.252, 15.43);
  expect_cell(next.cells[3], 5.63, 27.252, 15.43);
  expect_cell(next.cells[4], 1.0, 3.0, 2.0);
  expect_cell(next.cells[5], 1.0, 3.0, 2.0);
}

TEST(LxfStep, TotalsChangeOnlyByBoundaryFlux) {
  suliciu::testing::StateSampler draw(5, 0.5, 3.0, 1.0);
  const Grid g{-1.0, 1.0, 64};
  Field f;
  for (std::size_t j = 0; j < g.n_cells; ++j) f.cells.push_back(to_conserved(draw()));
  const double dt = 0.2 * cfl_dt(f, g.dx(), 0.9, kUnit);
  const Field next = lxf_step(f, g.dx(), dt, kUnit);
  const Vec3 before = conserved_totals(f, g.dx());
  const Vec3 after = conserved_totals(next, g.dx());
  const Vec3 bf = boundary_flux(f, kUnit);
  for (std::size_t k = 0; k < 3; ++k) {
    double mag = 0.0;
    for (const Conserved& c : f.cells) mag += std::abs(c.as_array()[k]) * g.dx();
    EXPECT_NEAR(after[k] - before[k], -dt * bf[k], 1e-14 * mag) << "component " << k;
  }
}

TEST(LxfStep, VacuumIsReported) {
  const Grid g{-1.0, 1.0, 40};
  const Field f = init_riemann(g, {1.0, -10.0, 0.0}, {1.0, 10.0, 0.0});
  try {
    lxf_step(f, g.dx(), 0.5 * g.dx(), kUnit);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kVacuumProduced);
  }
}

TEST(Run, FinalTimeZeroReturnsInitialField) {
  SimConfig c;
  c.grid = {-1.0, 1.0, 10};
  c.t_final = 0.0;
  const SimResult r = run(c, kLeft, kRight);
  ASSERT_EQ(r.snapshots.size(), 1u);
  EXPECT_EQ(r.snapshots[0].time, 0.0);
  EXPECT_EQ(r.stats.steps, 0u);
  EXPECT_EQ(r.snapshots[0].field.cells[0].rho, 9.0);
}

TEST(Run, LandsOnEverySnapshot) {
  SimConfig c;
  c.grid = {-1.0, 1.0, 200};
  c.cfl = 0.9;
  c.t_final = 0.05;
  c.snapshot_times = {0.03, 0.0, 0.0123};
  const SimResult r = run(c, kLeft, kRight);
  ASSERT_EQ(r.snapshots.size(), 3u);
  EXPECT_EQ(r.snapshots[0].time, 0.0);
  EXPECT_EQ(r.snapshots[1].time, 0.0123);
  EXPECT_EQ(r.snapshots[2].time, 0.03);
  EXPECT_GT(r.stats.steps, 0u);
  EXPECT_LE(r.stats.max_mesh_courant, 0.9 * (1.0 + 1e-12));
  EXPECT_LE(r.stats.max_step_drift, 1e-13);
  EXPECT_LE(r.stats.total_drift, 1e-13);
}

TEST(Run, ConstantDataStaysConstant) {
  const State U{0.4, 1.5, -2.0};
  SimConfig c;
  c.grid = {-2.0, 3.0, 100};
  c.cfl = 0.7;
  c.t_final = 0.3;
  c.snapshot_times = {0.1, 0.3};
  const SimResult r = run(c, U, U);
  ASSERT_EQ(r.snapshots.size(), 2u);
  const Conserved want = to_conserved(U);
  for (const auto& snap : r.snapshots) {
    for (const Conserved& cell : snap.field.cells) {
      EXPECT_NEAR(cell.rho, want.rho, 1e-15);
      EXPECT_NEAR(cell.mom, want.mom, 1e-15);
      EXPECT_NEAR(cell.q, want.q, 1e-15);
    }
  }
}

TEST(Run, FixedRatioPolicyUsesMeshRatio) {
  SimConfig c;
  c.grid = {-1.0, 1.0, 100};
  c.cfl = 0.1;
  c.t_final = 0.05;
  c.policy = TimeStepPolicy::kFixedRatio;
  const SimResult r = run(c, kLeft, kRight);
  // dt = 0.1 * 0.02 = 0.002 exactly divides 0.05.
  EXPECT_EQ(r.stats.steps, 25u);
  EXPECT_EQ(r.snapshots.back().time, 0.05);
}

TEST(Run, RejectsBadConfig) {
  SimConfig c;
  c.t_final = 1.0;
  c.cfl = 1.0;
  EXPECT_THROW(run(c, kLeft, kRight), Error);
  c.cfl = 0.5;
  c.snapshot_times = {1.5};
  EXPECT_THROW(run(c, kLeft, kRight), Error);
}

TEST(Primitives, RecoverStates) {
  const Grid g{-1.0, 1.0, 4};
  const auto prim = primitives(init_riemann(g, kLeft, kRight), kUnit);
  EXPECT_NEAR(prim[0].v, 2.8, 1e-15);
  EXPECT_EQ(prim[3], kRight);
}

}  // namespace
}  // namespace suliciu::fv
