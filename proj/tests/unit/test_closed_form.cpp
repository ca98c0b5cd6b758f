#include <gtest/gtest.h>

#include <random>

#include "nvapor/closed_form.hpp"
#include "nvapor/liouville.hpp"

using namespace nvapor;
namespace cf = nvapor::closed_form;

namespace {
const cplx I{0.0, 1.0};
}

TEST(Populations, ZeroDrive) {
  const auto rates = AtomRates::dimensionless(0.1, 0.8);
  const auto p = cf::populations(rates, DriveConfig::make(0.0, 0.0, 1.0, 2.0, 3.0, 0.1));
  EXPECT_DOUBLE_EQ(p.aa, 0.0);
  EXPECT_DOUBLE_EQ(p.bb, 0.8);
  EXPECT_DOUBLE_EQ(p.cc, 0.8);
  EXPECT_DOUBLE_EQ(p.dd, 0.0);
}

TEST(Populations, SumIsTwiceN0) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> ua(0, 1000), ud(-50, 50);
  const auto rates = AtomRates::dimensionless(0.05, 1.7);
  for (int i = 0; i < 200; ++i) {
    const auto p = cf::populations(rates, DriveConfig::make(std::sqrt(ua(rng)), 0.0, ud(rng), ud(rng), ud(rng), 0.05));
    EXPECT_NEAR((p.aa + p.bb + p.cc + p.dd) / 3.4, 1.0, 1e-10);
  }
}

TEST(CoherenceAb, ZeroDriveAtLineCentre) {
  const auto rates = AtomRates::dimensionless(0.1, 0.6);
  const cplx ap(2e-3, 1e-3);
  const cplx s = cf::coherence_ab(rates, DriveConfig::make(0.0, ap, 0.0, 0.0, 0.0, 0.1));
  EXPECT_NEAR(std::abs(s - I * ap * 0.6), 0.0, 1e-15);
}

TEST(CoherenceAb, HomogeneousInProbe) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> ud(-10, 10);
  const auto rates = AtomRates::dimensionless(0.2);
  for (int i = 0; i < 50; ++i) {
    const auto d = DriveConfig::make(cplx(ud(rng), ud(rng)), cplx(1.0, 0.0), ud(rng), ud(rng), ud(rng), 0.2);
    const cplx k(ud(rng), ud(rng));
    const cplx a = cf::coherence_ab(rates, d.with_alpha_p(k));
    const cplx b = k * cf::coherence_ab(rates, d);
    EXPECT_LE(std::abs(a - b), 1e-12 * (1 + std::abs(b)));
    const auto m = MagneticConfig::make(ud(rng));
    const auto da = cf::rest_atom_decomposition(rates, d.with_alpha_p(k), m);
    const auto db = cf::rest_atom_decomposition(rates, d, m);
    EXPECT_LE(std::abs(da.total - k * db.total), 1e-12 * (1 + std::abs(da.total)));
  }
}

TEST(CoherenceAb, SymmetricSpectrumAtZeroField) {
  const auto rates = AtomRates::dimensionless(0.1);
  for (double fp : {0.3, 1.0, 4.5, 12.0}) {
    const auto d = DriveConfig::resonant(10.0, 1.0, fp, 0.1);
    const cplx plus = cf::coherence_ab(rates, d);
    const cplx minus = cf::coherence_ab(rates, d.with_probe_detuning(-fp));
    EXPECT_NEAR(plus.imag(), minus.imag(), 1e-9);
    EXPECT_NEAR(plus.real(), -minus.real(), 1e-9);
    const cplx oracle = liouville::weak_probe_limit(rates, d.with_alpha_p(1e-4));
    EXPECT_LE(std::abs(oracle - plus), 1e-6 * std::abs(plus));
  }
}

TEST(CoherenceCaBd, ZeroDriveVanishes) {
  const auto rates = AtomRates::dimensionless(0.1);
  const auto d = DriveConfig::make(0.0, 1.0, 2.0, 1.0, -1.0, 0.1);
  EXPECT_EQ(cf::coherence_ca(rates, d), cplx(0.0, 0.0));
  EXPECT_EQ(cf::coherence_bd(rates, d), cplx(0.0, 0.0));
}

TEST(CoherenceCaBd, WeakDriveLimit) {
  const auto rates = AtomRates::dimensionless(0.1, 0.9);
  const double a = 1e-6;
  const cplx s = cf::coherence_ca(rates, DriveConfig::make(a, 0.0, 0.0, 0.0, 0.0, 0.1));
  EXPECT_NEAR(std::abs(s / a - (-I * 0.9)), 0.0, 1e-9);
}

TEST(Decomposition, ZeroDriveLeavesBareLine) {
  const auto rates = AtomRates::dimensionless(0.1);
  for (auto form : {cf::DecompositionForm::Printed, cf::DecompositionForm::Exact}) {
    const auto d = cf::rest_atom_decomposition(rates, DriveConfig::resonant(0.0, 1.0, 3.0, 0.1),
                                               MagneticConfig::make(2.0), form);
    EXPECT_EQ(std::abs(d.term_ac), 0.0);
    EXPECT_EQ(std::abs(d.term_bd), 0.0);
    EXPECT_NEAR(std::abs(d.term_ab - I / cplx(1.0, 1.0)), 0.0, 1e-14);
  }
}

TEST(Decomposition, ExactFormAddsUpToCoherence) {
  std::mt19937 rng(12);
  std::uniform_real_distribution<double> ud(-10, 10), ua(0, 20);
  const auto rates = AtomRates::dimensionless(0.1);
  for (int i = 0; i < 50; ++i) {
    const auto m = MagneticConfig::make(ud(rng));
    const auto d = DriveConfig::make(std::sqrt(ua(rng)), 1.0, ud(rng), ud(rng), 0.0, 0.1);
    const auto parts = cf::rest_atom_decomposition(rates, d, m, cf::DecompositionForm::Exact);
    const cplx full = cf::coherence_ab(rates, zeeman_frame(d, m));
    EXPECT_LE(std::abs(parts.total - full), 1e-12 * std::abs(full));
  }
}

TEST(Decomposition, PrintedFormCloseToExactAtSmallEps) {
  const auto rates = AtomRates::dimensionless(0.01);
  for (double fp : {-8.0, -3.0, 0.0, 2.0, 6.0}) {
    const auto d = DriveConfig::resonant(10.0, 1.0, fp, 0.01);
    const auto printed = cf::rest_atom_decomposition(rates, d, MagneticConfig{});
    const cplx exact = cf::coherence_ab(rates, d);
    EXPECT_LE(std::abs(printed.total - exact), 5 * 0.01 * std::max(1.0, std::abs(exact)));
  }
}

TEST(Contours, SaturatedMidpointCancels) {
  const auto c = cf::saturated_contours(400.0, 400.0, 5.0);
  EXPECT_NEAR(c.re, 0.0, 1e-15);
  EXPECT_NEAR(c.im, 0.0, 1e-15);
}

TEST(Contours, SaturatedAtUpperLine) {
  for (double a : {1.0, 5.0, 20.0}) {
    const auto c = cf::saturated_contours(10.0 + a, 10.0, a);
    EXPECT_NEAR(c.im, 1.0 - 1.0 / (1.0 + 16.0 * a * a), 1e-14);
  }
}

TEST(Contours, ZeroFieldPrintedValue) {
  const auto c = cf::zero_field_contours(0.0, std::sqrt(10.0));
  EXPECT_NEAR(c.im, 1.0 + 1.0 / 161.0, 1e-14);
  EXPECT_NEAR(c.re, 0.0, 1e-14);
  EXPECT_NEAR(c.im, 1.00621, 1e-5);
}

TEST(Contours, ZeroFieldThreeSymmetricLines) {
  const double a = std::sqrt(10.0);
  for (auto form : {cf::ContourForm::Printed, cf::ContourForm::Corrected}) {
    std::vector<double> x, y;
    for (int i = -600; i <= 600; ++i) {
      x.push_back(0.05 * i);
      y.push_back(cf::zero_field_contours(0.05 * i, a, form).im);
    }
    std::vector<double> peaks;
    for (std::size_t i = 1; i + 1 < y.size(); ++i)
      if (y[i] > y[i - 1] && y[i] > y[i + 1]) peaks.push_back(x[i]);
    ASSERT_EQ(peaks.size(), 3u);
    EXPECT_NEAR(peaks[0], -peaks[2], 1e-12);
    EXPECT_NEAR(peaks[1], 0.0, 1e-12);
  }
}

TEST(Contours, CorrectedSaturatedMatchesDecompositionAtPeaks) {
  const double e = 0.01, a2 = 25.0, h = 400.0;
  const auto rates = AtomRates::dimensionless(e);
  for (double fp : {h - 5.0, h + 5.0}) {
    const auto d = cf::rest_atom_decomposition(rates, DriveConfig::resonant(a2, 1.0, fp, e), MagneticConfig::make(h),
                                               cf::DecompositionForm::Exact);
    const double im = d.total.imag() / rates.n0();
    const auto c = cf::saturated_contours(fp, h, 5.0, cf::ContourForm::Corrected);
    EXPECT_NEAR(im / c.im, 1.0, 0.05);
  }
}
