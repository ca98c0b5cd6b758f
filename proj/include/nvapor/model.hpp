#pragma once

// Physical parameters of the driven N-configuration atom in dimensionless form.
//
// Levels: (a) and (d) are the upper pair, (b) and (c) the lower pair. The drive
// couples (a-c) and (d-b), the probe couples (a-b). Level (a) decays into (b)
// and (c) at rate gamma each, (d) decays into (b) at 2 gamma, every level leaves
// the beam at gamma0 and the two lower levels are refilled at rate mu.
//
// All detunings and Rabi amplitudes are stored divided by a single rate unit.
// With the default `Normalization::Exact` the unit is gamma + gamma0, for which
// the coherence damping rates become exactly 1, 2 - eps0 and eps0 and every
// weak-probe closed form in closed_form.hpp is exact. `Normalization::FirstOrder`
// divides by gamma (1 + eps0) instead, which agrees with gamma + gamma0 only to
// first order in eps0.

#include <cmath>
#include <complex>
#include <utility>

#include "nvapor/error.hpp"

namespace nvapor {

using cplx = std::complex<double>;

enum class Normalization { Exact, FirstOrder };

struct RawRates {
  double gamma = 1.0;
  double gamma0 = 0.0;
  double mu = 0.0;
};

struct RawFields {
  cplx omega{0.0, 0.0};
  cplx omega_p{0.0, 0.0};
  double delta_p = 0.0;
  double delta_1 = 0.0;
  double delta_2 = 0.0;
};

class AtomRates {
 public:
  static AtomRates from_raw(const RawRates& raw, Normalization norm = Normalization::Exact) {
    if (!(raw.gamma > 0.0) || !std::isfinite(raw.gamma))
      throw Error(ErrorCode::InvalidRates, "gamma must be positive and finite");
    if (!(raw.gamma0 > 0.0) || !std::isfinite(raw.gamma0))
      throw Error(ErrorCode::InvalidRates, "gamma0 must be positive and finite");
    if (!(raw.mu >= 0.0) || !std::isfinite(raw.mu))
      throw Error(ErrorCode::InvalidRates, "mu must be non-negative and finite");
    const double eps0 = raw.gamma0 / (raw.gamma + raw.gamma0);
    const double unit = norm == Normalization::Exact ? raw.gamma + raw.gamma0
                                                     : raw.gamma * (1.0 + eps0);
    return AtomRates(raw.gamma, raw.gamma0, raw.mu, unit, norm);
  }

  /// Rates expressed directly in units of gamma + gamma0.
  static AtomRates dimensionless(double eps0, double n0 = 1.0) {
    if (!(eps0 > 0.0 && eps0 < 1.0))
      throw Error(ErrorCode::InvalidRates, "eps0 must lie in (0, 1)");
    if (!(n0 >= 0.0) || !std::isfinite(n0))
      throw Error(ErrorCode::InvalidRates, "n0 must be non-negative and finite");
    return from_raw({1.0 - eps0, eps0, n0 * eps0});
  }

  double gamma() const { return gamma_; }
  double gamma0() const { return gamma0_; }
  double mu() const { return mu_; }
  double eps0() const { return eps0_; }
  double n0() const { return mu_ / gamma0_; }
  double unit() const { return unit_; }
  Normalization normalization() const { return norm_; }

  // Rates measured in `unit`.
  double spontaneous() const { return gamma_ / unit_; }
  double transit() const { return gamma0_ / unit_; }
  double pump() const { return mu_ / unit_; }

 private:
  AtomRates(double gamma, double gamma0, double mu, double unit, Normalization norm)
      : gamma_(gamma), gamma0_(gamma0), mu_(mu), eps0_(gamma0 / (gamma + gamma0)),
        unit_(unit), norm_(norm) {}

  double gamma_;
  double gamma0_;
  double mu_;
  double eps0_;
  double unit_;
  Normalization norm_;
};

/// Dimensionless drive and probe amplitudes plus the three one-photon detunings.
/// The two-photon combinations are recomputed from (f_p, f_1, f_2) on access.
class DriveConfig {
 public:
  static DriveConfig make(cplx alpha, cplx alpha_p, double f_p, double f_1, double f_2,
                          double eps0) {
    if (!(eps0 > 0.0 && eps0 < 1.0))
      throw Error(ErrorCode::InvalidArgument, "eps0 must lie in (0, 1)");
    if (!std::isfinite(f_p) || !std::isfinite(f_1) || !std::isfinite(f_2))
      throw Error(ErrorCode::InvalidArgument, "detunings must be finite");
    return DriveConfig(alpha, alpha_p, f_p, f_1, f_2, eps0);
  }

  /// Real drive amplitude given through |alpha|^2, the form used by every figure.
  static DriveConfig resonant(double alpha_sq, cplx alpha_p, double f_p, double eps0) {
    if (!(alpha_sq >= 0.0))
      throw Error(ErrorCode::InvalidArgument, "|alpha|^2 must be non-negative");
    return make(cplx(std::sqrt(alpha_sq), 0.0), alpha_p, f_p, 0.0, 0.0, eps0);
  }

  cplx alpha() const { return alpha_; }
  cplx alpha_p() const { return alpha_p_; }
  cplx alpha0() const { return alpha_ / std::sqrt(eps0_); }
  double alpha_sq() const { return std::norm(alpha_); }
  double alpha0_sq() const { return std::norm(alpha_) / eps0_; }
  double eps0() const { return eps0_; }

  double f_p() const { return f_p_; }
  double f_1() const { return f_1_; }
  double f_2() const { return f_2_; }
  double f_p1() const { return f_p_ - f_1_; }
  double f_p2() const { return f_p_ - f_2_; }
  double f() const { return f_p_ - f_1_ - f_2_; }
  double f_12() const { return f_1_ - f_2_; }

  DriveConfig with_detunings(double f_p, double f_1, double f_2) const {
    return make(alpha_, alpha_p_, f_p, f_1, f_2, eps0_);
  }
  DriveConfig with_probe_detuning(double f_p) const { return with_detunings(f_p, f_1_, f_2_); }
  DriveConfig with_alpha(cplx alpha) const {
    return DriveConfig(alpha, alpha_p_, f_p_, f_1_, f_2_, eps0_);
  }
  DriveConfig with_alpha_p(cplx alpha_p) const {
    return DriveConfig(alpha_, alpha_p, f_p_, f_1_, f_2_, eps0_);
  }

 private:
  DriveConfig(cplx alpha, cplx alpha_p, double f_p, double f_1, double f_2, double eps0)
      : alpha_(alpha), alpha_p_(alpha_p), f_p_(f_p), f_1_(f_1), f_2_(f_2), eps0_(eps0) {}

  cplx alpha_;
  cplx alpha_p_;
  double f_p_;
  double f_1_;
  double f_2_;
  double eps0_;
};

/// Zeeman shift h of level (b), in the same units as the detunings.
struct MagneticConfig {
  double h = 0.0;

  static MagneticConfig make(double h) {
    if (!std::isfinite(h)) throw Error(ErrorCode::InvalidArgument, "h must be finite");
    return MagneticConfig{h};
  }
};

inline std::pair<AtomRates, DriveConfig> normalize(const RawRates& raw_rates,
                                                   const RawFields& raw_fields,
                                                   Normalization norm = Normalization::Exact) {
  const AtomRates rates = AtomRates::from_raw(raw_rates, norm);
  const double u = rates.unit();
  DriveConfig drive = DriveConfig::make(raw_fields.omega / u, raw_fields.omega_p / u,
                                        raw_fields.delta_p / u, raw_fields.delta_1 / u,
                                        raw_fields.delta_2 / u, rates.eps0());
  return {rates, drive};
}

inline RawFields denormalize(const AtomRates& rates, const DriveConfig& drive) {
  const double u = rates.unit();
  return RawFields{drive.alpha() * u, drive.alpha_p() * u, drive.f_p() * u, drive.f_1() * u,
                   drive.f_2() * u};
}

/// Moves the probe detuning into the frame where only level (b) is displaced by
/// h while the drive stays on the zero-field (a-c) resonance: f_1 -> 0,
/// f_2 -> -h, f_p -> f_p - h. The incoming f_p is the bare probe detuning, so
/// the shifted (a-b) line centre sits at f_p = h.
inline DriveConfig apply_magnetic_substitution(const DriveConfig& drive, const MagneticConfig& m) {
  return drive.with_detunings(drive.f_p() - m.h, 0.0, -m.h);
}

/// Same frame change with a detuned drive: f_2 = f_1 - h and f_p -> f_p - h.
inline DriveConfig zeeman_frame(const DriveConfig& drive, const MagneticConfig& m) {
  return drive.with_detunings(drive.f_p() - m.h, drive.f_1(), drive.f_1() - m.h);
}

}  // namespace nvapor
