#include <gtest/gtest.h>

#include <random>

#include "nvapor/model.hpp"

using namespace nvapor;

TEST(AtomRates, DerivedConstants) {
  const auto r = AtomRates::from_raw({2.0, 0.5, 0.25});
  EXPECT_DOUBLE_EQ(r.eps0(), 0.5 / 2.5);
  EXPECT_DOUBLE_EQ(r.n0(), 0.5);
  EXPECT_DOUBLE_EQ(r.unit(), 2.5);
  EXPECT_NEAR(r.spontaneous() + r.transit(), 1.0, 1e-15);
}

TEST(AtomRates, RejectsBadRates) {
  EXPECT_THROW(AtomRates::from_raw({0.0, 1.0, 0.0}), Error);
  EXPECT_THROW(AtomRates::from_raw({1.0, 0.0, 0.0}), Error);
  EXPECT_THROW(AtomRates::from_raw({1.0, 1.0, -1.0}), Error);
  try {
    AtomRates::from_raw({-1.0, 1.0, 0.0});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidRates);
  }
  EXPECT_THROW(AtomRates::dimensionless(1.0), Error);
}

TEST(Normalize, FirstOrderDivisorGivesUnitDetuning) {
  const RawRates raw{1.0, 1.0 / 9.0, 0.0};
  RawFields f;
  f.delta_p = 1.1;
  const auto [rates, drive] = normalize(raw, f, Normalization::FirstOrder);
  EXPECT_NEAR(rates.eps0(), 0.1, 1e-15);
  EXPECT_NEAR(drive.f_p(), 1.0, 1e-14);
}

TEST(Normalize, ExactDivisorIsGammaPlusGamma0) {
  RawFields f;
  f.delta_p = 1.1;
  const auto [rates, drive] = normalize({1.0, 1.0 / 9.0, 0.0}, f);
  EXPECT_NEAR(drive.f_p(), 1.1 / (1.0 + 1.0 / 9.0), 1e-14);
}

TEST(Normalize, ZeroFieldGivesZeroAmplitudes) {
  const auto [rates, drive] = normalize({1.0, 0.2, 0.1}, RawFields{});
  EXPECT_EQ(drive.alpha(), cplx(0.0, 0.0));
  EXPECT_EQ(drive.alpha0(), cplx(0.0, 0.0));
}

TEST(DriveConfig, Alpha0FromAlpha) {
  const auto d = DriveConfig::resonant(10.0, 0.0, 0.0, 0.1);
  EXPECT_NEAR(std::abs(d.alpha0()), 10.0, 1e-12);
  EXPECT_NEAR(d.alpha0_sq(), 100.0, 1e-11);
}

TEST(DriveConfig, DerivedDetuningIdentities) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-20, 20);
  for (int i = 0; i < 100; ++i) {
    const auto d = DriveConfig::make(cplx(u(rng), u(rng)), 0.0, u(rng), u(rng), u(rng), 0.3);
    EXPECT_DOUBLE_EQ(d.f(), d.f_p() - d.f_1() - d.f_2());
    EXPECT_NEAR(d.f(), d.f_p1() - d.f_2(), 1e-12);
    EXPECT_NEAR(d.f(), d.f_p2() - d.f_1(), 1e-12);
    EXPECT_NEAR(std::abs(d.alpha0() * std::sqrt(0.3) - d.alpha()), 0.0, 1e-12 * std::abs(d.alpha()));
  }
}

TEST(Normalize, RoundTrip) {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-5, 5), up(0.1, 3);
  for (int i = 0; i < 50; ++i) {
    const RawRates raw{up(rng), up(rng), up(rng)};
    const RawFields f{cplx(u(rng), u(rng)), cplx(u(rng), 0.0), u(rng), u(rng), u(rng)};
    const auto [rates, drive] = normalize(raw, f);
    const auto back = denormalize(rates, drive);
    const auto [rates2, drive2] = normalize(raw, back);
    EXPECT_NEAR(drive2.f_p(), drive.f_p(), 1e-12 * (1 + std::abs(drive.f_p())));
    EXPECT_NEAR(std::abs(drive2.alpha() - drive.alpha()), 0.0, 1e-12 * (1 + std::abs(drive.alpha())));
    EXPECT_NEAR(back.delta_2, f.delta_2, 1e-12 * (1 + std::abs(f.delta_2)));
  }
}

TEST(MagneticSubstitution, Examples) {
  const auto base = DriveConfig::resonant(10.0, 0.0, 10.0, 0.1);
  const auto a = apply_magnetic_substitution(base, MagneticConfig::make(10.0));
  EXPECT_DOUBLE_EQ(a.f_p1(), 0.0);
  EXPECT_DOUBLE_EQ(a.f_p2(), 10.0);
  EXPECT_DOUBLE_EQ(a.f(), 10.0);

  const auto b = apply_magnetic_substitution(base.with_probe_detuning(0.0), MagneticConfig::make(7.0));
  EXPECT_DOUBLE_EQ(b.f_p1(), -7.0);
  EXPECT_DOUBLE_EQ(b.f_p2(), 0.0);

  const auto detuned = DriveConfig::make(1.0, 0.0, 3.0, 2.0, -1.0, 0.1);
  const auto c = apply_magnetic_substitution(detuned, MagneticConfig::make(0.0));
  EXPECT_DOUBLE_EQ(c.f_p(), 3.0);
  EXPECT_DOUBLE_EQ(c.f_1(), 0.0);
  EXPECT_DOUBLE_EQ(c.f_2(), 0.0);
}

TEST(MagneticSubstitution, FEqualsBareProbeDetuning) {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(-20, 20);
  for (int i = 0; i < 50; ++i) {
    const double fp = u(rng), h = u(rng);
    const auto d = apply_magnetic_substitution(DriveConfig::resonant(1.0, 0.0, fp, 0.2), MagneticConfig::make(h));
    EXPECT_NEAR(d.f(), fp, 1e-12);
  }
  EXPECT_THROW(MagneticConfig::make(INFINITY), Error);
}
