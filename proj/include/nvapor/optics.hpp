#pragma once

// Observables built on the coherences: probe spectra, the line-centre
// absorption at f_p = h, dispersion slope and group velocity.

#include <boost/math/tools/minima.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "nvapor/closed_form.hpp"
#include "nvapor/doppler.hpp"
#include "nvapor/error.hpp"
#include "nvapor/liouville.hpp"
#include "nvapor/model.hpp"
#include "nvapor/quadrature.hpp"

namespace nvapor::optics {

enum class Backend { RestAtom, DopplerClosed, DopplerQuadrature, Oracle };

inline const char* to_string(Backend b) {
  switch (b) {
    case Backend::RestAtom: return "rest-atom";
    case Backend::DopplerClosed: return "doppler-closed";
    case Backend::DopplerQuadrature: return "doppler-quadrature";
    case Backend::Oracle: return "oracle";
  }
  return "unknown";
}

inline Backend backend_from_string(const std::string& s) {
  for (Backend b : {Backend::RestAtom, Backend::DopplerClosed, Backend::DopplerQuadrature,
                    Backend::Oracle})
    if (s == to_string(b)) return b;
  throw Error(ErrorCode::Config, "unknown backend '" + s + "'");
}

/// Everything a backend needs besides the probe detuning. `drive.f_p()` is ignored.
struct SpectrumParams {
  AtomRates rates = AtomRates::dimensionless(0.1);
  DriveConfig drive = DriveConfig::resonant(10.0, cplx(1.0, 0.0), 0.0, 0.1);
  MagneticConfig field{};
  DopplerEnsemble ensemble{};
  doppler::ClosedFormOptions closed{};
  doppler::Integrand integrand = doppler::Integrand::ResidueModel;
  /// Probe amplitude for the oracle; the result is extrapolated to zero probe.
  double oracle_probe = 1e-3;
};

struct SpectrumSample {
  double f_p = 0.0;
  cplx value;

  double absorption() const { return value.imag(); }
  double dispersion() const { return value.real(); }
};

/// sigma_ab / lambda for the vapor backends and sigma_ab / (alpha_p n0) for
/// atoms at rest, at bare probe detuning f_p.
inline cplx evaluate(Backend backend, const SpectrumParams& p, double f_p) {
  const DriveConfig drive = p.drive.with_probe_detuning(f_p);
  switch (backend) {
    case Backend::RestAtom: {
      const auto frame = zeeman_frame(drive.with_alpha_p(cplx(1.0, 0.0)), p.field);
      return closed_form::coherence_ab(p.rates, frame) / p.rates.n0();
    }
    case Backend::Oracle: {
      const auto frame = zeeman_frame(drive.with_alpha_p(cplx(p.oracle_probe, 0.0)), p.field);
      return liouville::weak_probe_limit(p.rates, frame) / p.rates.n0();
    }
    case Backend::DopplerClosed:
      return doppler::sigma_ab_doppler_closed(p.rates, drive, p.field, p.ensemble, p.closed).value;
    case Backend::DopplerQuadrature:
      return doppler::sigma_ab_doppler_quadrature(p.rates, drive, p.field, p.ensemble, p.integrand)
          .value;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown backend");
}

/// `count` evenly spaced points from `start` to `stop` inclusive.
inline std::vector<double> linear_grid(double start, double stop, int count) {
  if (count < 1 || !std::isfinite(start) || !std::isfinite(stop))
    throw Error(ErrorCode::InvalidArgument, "grid needs a positive count and finite ends");
  if (count == 1) return {start};
  if (!(stop > start)) throw Error(ErrorCode::InvalidArgument, "grid must be increasing");
  std::vector<double> g(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) g[static_cast<std::size_t>(i)] = start + (stop - start) * i / (count - 1);
  return g;
}

inline std::vector<SpectrumSample> spectrum(Backend backend, const SpectrumParams& p,
                                            const std::vector<double>& grid) {
  if (grid.empty()) throw Error(ErrorCode::InvalidArgument, "empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw Error(ErrorCode::InvalidArgument, "grid must be strictly increasing");
  std::vector<SpectrumSample> out;
  out.reserve(grid.size());
  for (double fp : grid) {
    try {
      out.push_back({fp, evaluate(backend, p, fp)});
    } catch (const Error& e) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "at f_p=" << fp << ": " << e.what();
      throw Error(e.code(), msg.str());
    }
  }
  return out;
}

/// Absorption at the shifted line centre f_p = h.
inline double eit_eia_metric(const SpectrumParams& p, Backend backend = Backend::DopplerClosed) {
  return evaluate(backend, p, p.field.h).imag();
}

struct WindowMinimum {
  double f_p = 0.0;
  double absorption = 0.0;
};

/// Lowest absorption in [lo, hi]: coarse scan then Brent refinement.
inline WindowMinimum transparency_window_minimum(const SpectrumParams& p, double lo, double hi,
                                                 Backend backend = Backend::DopplerClosed,
                                                 int scan_points = 201) {
  const auto grid = linear_grid(lo, hi, scan_points);
  std::size_t best = 0;
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    vals[i] = evaluate(backend, p, grid[i]).imag();
    if (vals[i] < vals[best]) best = i;
  }
  const double a = grid[best == 0 ? 0 : best - 1];
  const double b = grid[std::min(best + 1, grid.size() - 1)];
  if (!(b > a)) return {grid[best], vals[best]};
  auto f = [&](double x) { return evaluate(backend, p, x).imag(); };
  const auto [x, v] = boost::math::tools::brent_find_minima(f, a, b, 40);
  return v < vals[best] ? WindowMinimum{x, v} : WindowMinimum{grid[best], vals[best]};
}

struct Slope {
  double value = 0.0;
  double half_step_value = 0.0;
  /// Set when the step and step/2 estimates differ by more than 1e-4 relative.
  bool accuracy_warning = false;
};

inline constexpr double kDefaultSlopeStep = 1e-3;

/// Central-difference d Re(value) / d f_p with a step-halving check.
inline Slope dispersion_slope(const SpectrumParams& p, double f_p, double step = kDefaultSlopeStep,
                              Backend backend = Backend::DopplerClosed) {
  if (!(step > 0.0)) throw Error(ErrorCode::InvalidArgument, "slope step must be positive");
  auto re = [&](double x) { return evaluate(backend, p, x).real(); };
  auto central = [&](double s) { return (re(f_p + s) - re(f_p - s)) / (2.0 * s); };
  Slope out;
  out.value = central(step);
  out.half_step_value = central(0.5 * step);
  const double scale = std::max(std::abs(out.value), 1e-12);
  out.accuracy_warning = std::abs(out.value - out.half_step_value) > 1e-4 * scale;
  return out;
}

/// How Re sigma_ab enters the group-velocity prefactor.
enum class CoherenceScale {
  /// The lambda-normalized value is converted back to sigma_ab / |alpha|,
  /// giving |alpha_p / alpha| n0 sqrt(pi) / x0 in place of 1 / |alpha|.
  Physical,
  /// The lambda-normalized value multiplies the prefactor with 1/|alpha| as is.
  Normalized,
};

struct GroupVelocityParams {
  double lambda_p_cm = 1e-4;
  double N = 1e12;
  double gamma_rad_over_gamma = 1.0;
  double omega_p_over_gamma = 1e8;
  /// |alpha_p / alpha|.
  double probe_ratio = 0.1;
  /// Lower-level population scale; the four populations sum to 2 n0.
  double n0 = 0.5;
  CoherenceScale scale = CoherenceScale::Physical;

  void validate() const {
    if (!(lambda_p_cm > 0.0 && N >= 0.0 && gamma_rad_over_gamma > 0.0 && omega_p_over_gamma > 0.0 &&
          probe_ratio > 0.0 && n0 > 0.0))
      throw Error(ErrorCode::InvalidArgument, "group-velocity parameters must be positive");
  }

  /// (3 / 16 pi^2) lambda_p^3 N gamma_rad / gamma / |alpha|.
  double printed_prefactor(double alpha_mag) const {
    if (!(alpha_mag > 0.0)) throw Error(ErrorCode::InvalidArgument, "|alpha| must be positive");
    return 3.0 / (16.0 * std::numbers::pi * std::numbers::pi) * lambda_p_cm * lambda_p_cm *
           lambda_p_cm * N * gamma_rad_over_gamma / alpha_mag;
  }

  /// Factor multiplying the lambda-normalized Re value.
  double prefactor(double alpha_mag, double x0) const {
    if (scale == CoherenceScale::Normalized) return printed_prefactor(alpha_mag);
    return printed_prefactor(alpha_mag) * alpha_mag * probe_ratio * n0 * std::sqrt(std::numbers::pi) / x0;
  }
};

struct GroupVelocity {
  double v_over_c = 1.0;
  double re = 0.0;
  double slope = 0.0;
  bool accuracy_warning = false;
};

/// v_gr / c = 1 / (1 + A (1 - (omega_p/gamma) d/df_p) Re sigma_ab) on the Doppler closed form.
inline GroupVelocity group_velocity(const SpectrumParams& p, const GroupVelocityParams& gv, double f_p,
                                    double step = kDefaultSlopeStep,
                                    Backend backend = Backend::DopplerClosed) {
  gv.validate();
  GroupVelocity out;
  out.re = evaluate(backend, p, f_p).real();
  const Slope s = dispersion_slope(p, f_p, step, backend);
  out.slope = s.value;
  out.accuracy_warning = s.accuracy_warning;
  const double A = gv.prefactor(std::sqrt(p.drive.alpha_sq()), p.ensemble.x0);
  const double bracket = 1.0 + A * (out.re - gv.omega_p_over_gamma * out.slope);
  if (std::abs(bracket) < 1e-14)
    throw Error(ErrorCode::DivergentVelocity, "1 + A (1 - w d/df) Re sigma vanishes");
  out.v_over_c = 1.0 / bracket;
  return out;
}

struct SweepPoint {
  double abscissa = 0.0;
  GroupVelocity gv;
};

/// Group velocity at f_p = h along a grid of h.
inline std::vector<SweepPoint> group_velocity_vs_field(const SpectrumParams& p,
                                                       const GroupVelocityParams& gv,
                                                       const std::vector<double>& h_grid,
                                                       Backend backend = Backend::DopplerClosed) {
  std::vector<SweepPoint> out;
  for (double h : h_grid) {
    SpectrumParams q = p;
    q.field = MagneticConfig::make(h);
    out.push_back({h, group_velocity(q, gv, h, kDefaultSlopeStep, backend)});
  }
  return out;
}

/// Group velocity at f_p = h along a grid of |alpha_0|.
inline std::vector<SweepPoint> group_velocity_vs_drive(const SpectrumParams& p,
                                                       const GroupVelocityParams& gv,
                                                       const std::vector<double>& alpha0_grid,
                                                       Backend backend = Backend::DopplerClosed) {
  std::vector<SweepPoint> out;
  const double e = p.rates.eps0();
  for (double a0 : alpha0_grid) {
    SpectrumParams q = p;
    q.drive = p.drive.with_alpha(cplx(a0 * std::sqrt(e), 0.0));
    out.push_back({a0, group_velocity(q, gv, p.field.h, kDefaultSlopeStep, backend)});
  }
  return out;
}

}  // namespace nvapor::optics
