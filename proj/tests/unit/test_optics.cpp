#include <gtest/gtest.h>

#include <algorithm>

#include "nvapor/optics.hpp"

using namespace nvapor;
namespace op = nvapor::optics;

namespace {

op::SpectrumParams figure_params(double h) {
  op::SpectrumParams p;
  p.rates = AtomRates::dimensionless(0.1);
  p.drive = DriveConfig::resonant(10.0, 1.0, 0.0, 0.1);
  p.field = MagneticConfig::make(h);
  p.ensemble = DopplerEnsemble::make(100.0);
  return p;
}

}  // namespace

TEST(Backend, NamesRoundTrip) {
  for (auto b : {op::Backend::RestAtom, op::Backend::DopplerClosed, op::Backend::DopplerQuadrature, op::Backend::Oracle})
    EXPECT_EQ(op::backend_from_string(op::to_string(b)), b);
  EXPECT_THROW(op::backend_from_string("doppler"), Error);
}

TEST(Grid, LinearGrid) {
  const auto g = op::linear_grid(-1.0, 1.0, 5);
  ASSERT_EQ(g.size(), 5u);
  EXPECT_DOUBLE_EQ(g[2], 0.0);
  EXPECT_DOUBLE_EQ(g.back(), 1.0);
  EXPECT_EQ(op::linear_grid(3.0, 3.0, 1).size(), 1u);
  EXPECT_THROW(op::linear_grid(0.0, 1.0, 0), Error);
  EXPECT_THROW(op::spectrum(op::Backend::RestAtom, figure_params(0), {}), Error);
  EXPECT_THROW(op::spectrum(op::Backend::RestAtom, figure_params(0), {1.0, 0.0}), Error);
}

TEST(Spectrum, RestAtomThreePeaksAtZeroField) {
  auto p = figure_params(0.0);
  const auto grid = op::linear_grid(-30, 30, 601);
  const auto s = op::spectrum(op::Backend::RestAtom, p, grid);
  std::vector<double> peaks;
  for (std::size_t i = 1; i + 1 < s.size(); ++i)
    if (s[i].absorption() > s[i - 1].absorption() && s[i].absorption() > s[i + 1].absorption())
      peaks.push_back(s[i].f_p);
  ASSERT_EQ(peaks.size(), 3u);
  EXPECT_NEAR(peaks[0], -peaks[2], 1e-9);
  EXPECT_NEAR(peaks[1], 0.0, 1e-9);
}

TEST(Spectrum, OracleMatchesRestAtom) {
  auto p = figure_params(7.0);
  for (double fp : {-5.0, 0.0, 6.5, 9.0}) {
    const cplx a = op::evaluate(op::Backend::RestAtom, p, fp);
    const cplx b = op::evaluate(op::Backend::Oracle, p, fp);
    EXPECT_LE(std::abs(a - b), 1e-6 * std::abs(a));
  }
}

TEST(Spectrum, DopplerEiaPeakAtZero) {
  const auto s = op::spectrum(op::Backend::DopplerClosed, figure_params(0.0), op::linear_grid(-30, 30, 121));
  const auto best = std::max_element(s.begin(), s.end(), [](auto& a, auto& b) { return a.absorption() < b.absorption(); });
  EXPECT_DOUBLE_EQ(best->f_p, 0.0);
}

TEST(Spectrum, DopplerDipNearShiftedLine) {
  const auto p = figure_params(10.0);
  const auto w = op::transparency_window_minimum(p, 5.0, 15.0);
  EXPECT_NEAR(w.f_p, 10.0, 2.0);
  EXPECT_LT(w.absorption, op::evaluate(op::Backend::DopplerClosed, p, 0.0).imag());
  EXPECT_LE(w.absorption, op::eit_eia_metric(p));
}

TEST(Metric, ZeroDriveAnchor) {
  auto p = figure_params(0.0);
  p.drive = p.drive.with_alpha(0.0);
  EXPECT_NEAR(op::eit_eia_metric(p), 1.0, 0.01);
}

TEST(Slope, SymmetryPointAndStepInvariance) {
  const auto p = figure_params(0.0);
  const auto s = op::dispersion_slope(p, 0.0);
  EXPECT_FALSE(s.accuracy_warning);
  EXPECT_NEAR(s.value, s.half_step_value, 1e-4 * std::abs(s.value));
  // Away from the sharp central feature the step does not matter.
  const auto smooth = op::dispersion_slope(p, 20.0, 1e-3);
  const auto fine = op::dispersion_slope(p, 20.0, 1e-4);
  EXPECT_NEAR(smooth.value, fine.value, 1e-5);
  EXPECT_THROW(op::dispersion_slope(p, 0.0, 0.0), Error);
}

TEST(Slope, ZeroDriveAnalyticDerivative) {
  auto p = figure_params(3.0);
  p.drive = p.drive.with_alpha(0.0);
  // Re of i/(1 + i y) is y/(1 + y^2), slope 1 at y = 0.
  const auto s = op::dispersion_slope(p, 3.0, 1e-3, op::Backend::RestAtom);
  EXPECT_NEAR(s.value, 1.0, 1e-3);
}

TEST(GroupVelocity, VacuumLimit) {
  op::GroupVelocityParams gv;
  gv.N = 0.0;
  EXPECT_EQ(op::group_velocity(figure_params(10.0), gv, 10.0).v_over_c, 1.0);
}

TEST(GroupVelocity, SlowLightPlateau) {
  const op::GroupVelocityParams gv;
  for (double h : {6.0, 10.0, 14.0}) {
    const double v = op::group_velocity(figure_params(h), gv, h).v_over_c;
    EXPECT_GE(v, 1e-5) << h;
    EXPECT_LE(v, 1e-3) << h;
  }
}

TEST(GroupVelocity, StepRefinement) {
  const op::GroupVelocityParams gv;
  const auto p = figure_params(10.0);
  const double a = op::group_velocity(p, gv, 10.0, 1e-3).v_over_c;
  const double b = op::group_velocity(p, gv, 10.0, 1e-4).v_over_c;
  EXPECT_NEAR(a / b, 1.0, 1e-3);
}

TEST(GroupVelocity, SinglePointSweepsMatchPointEvaluation) {
  const op::GroupVelocityParams gv;
  const auto p = figure_params(8.0);
  const auto f = op::group_velocity_vs_field(p, gv, {8.0});
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].gv.v_over_c, op::group_velocity(p, gv, 8.0).v_over_c);
  const auto d = op::group_velocity_vs_drive(p, gv, {10.0});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_NEAR(d[0].gv.v_over_c, f[0].gv.v_over_c, 1e-12 * std::abs(f[0].gv.v_over_c));
}

TEST(GroupVelocity, RejectsBadParameters) {
  op::GroupVelocityParams gv;
  gv.lambda_p_cm = -1.0;
  EXPECT_THROW(op::group_velocity(figure_params(10.0), gv, 10.0), Error);
}
