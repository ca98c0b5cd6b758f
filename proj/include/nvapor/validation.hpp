#pragma once

// Cross-checks between the closed forms and their brute-force references,
// grouped into the suites run by `nvapor validate`.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nvapor/closed_form.hpp"
#include "nvapor/doppler.hpp"
#include "nvapor/liouville.hpp"
#include "nvapor/model.hpp"
#include "nvapor/optics.hpp"
#include "nvapor/quadrature.hpp"

namespace nvapor::validation {

struct Check {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

/// A printed expression that disagrees with its reference while the repaired
/// one agrees.
struct Discrepancy {
  std::string item;
  std::string resolution;
  double printed_error = 0.0;
  double corrected_error = 0.0;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  std::vector<Discrepancy> discrepancies;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  void add(std::string name, double err, double tol, std::string detail = {}) {
    checks.push_back({std::move(name), err, tol, err <= tol, std::move(detail)});
  }

  void merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    discrepancies.insert(discrepancies.end(), other.discrepancies.begin(), other.discrepancies.end());
  }
};

struct Options {
  int draws = 200;
  unsigned seed = 20240611u;
  /// Scales the A3 residue; 1 leaves the closed form intact.
  double a3_scale = 1.0;
};

// ---------------------------------------------------------------------------
// Rest-atom draws

struct Draw {
  double eps0;
  cplx alpha;
  double f_p, f_1, f_2;
};

/// eps0 in [0.01, 0.5], |alpha|^2 in [0, 30] with a random phase, detunings in [-20, 20].
inline std::vector<Draw> random_draws(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> ue(0.01, 0.5), ua(0.0, 30.0), uph(0.0, 2.0 * std::numbers::pi),
      ud(-20.0, 20.0);
  std::vector<Draw> out;
  for (int i = 0; i < n; ++i) {
    Draw d;
    d.eps0 = ue(rng);
    d.alpha = std::polar(std::sqrt(ua(rng)), uph(rng));
    d.f_p = ud(rng);
    d.f_1 = ud(rng);
    d.f_2 = ud(rng);
    out.push_back(d);
  }
  return out;
}

inline DriveConfig drive_of(const Draw& d, double alpha_p) {
  return DriveConfig::make(d.alpha, cplx(alpha_p, 0.0), d.f_p, d.f_1, d.f_2, d.eps0);
}

struct OracleStats {
  double residual = 0.0;
  double population_sum = 0.0;
  double hermiticity = 0.0;
};

/// Stationarity residual, trace 2 n0 and Hermiticity of the exact solve.
inline OracleStats oracle_integrity(const std::vector<Draw>& draws, double n0 = 1.0,
                                    double alpha_p = 0.1) {
  OracleStats s;
  for (const Draw& d : draws) {
    const auto rates = AtomRates::dimensionless(d.eps0, n0);
    const auto rho = liouville::solve_steady_state(rates, drive_of(d, alpha_p));
    s.residual = std::max(s.residual, rho.residual);
    s.population_sum = std::max(s.population_sum, std::abs(rho.population_sum() - 2.0 * n0) / (2.0 * n0));
    for (int e = 0; e < liouville::kDim; ++e) {
      const auto gap = rho.raw(liouville::conjugate_of(e)) - std::conj(rho.raw(e));
      s.hermiticity = std::max(s.hermiticity, static_cast<double>(std::abs(gap)));
    }
  }
  return s;
}

struct WeakProbeStats {
  double max_relative = 0.0;       // at alpha_p
  double max_relative_half = 0.0;  // at alpha_p / 2
  /// Sum of disagreements at alpha_p over the sum at alpha_p / 2.
  double convergence_ratio = 0.0;
};

inline WeakProbeStats weak_probe_agreement(const std::vector<Draw>& draws, double alpha_p = 1e-6) {
  WeakProbeStats s;
  double sum_full = 0.0, sum_half = 0.0;
  for (const Draw& d : draws) {
    const auto rates = AtomRates::dimensionless(d.eps0);
    auto gap = [&](double ap) {
      const auto drive = drive_of(d, ap);
      const cplx closed = closed_form::coherence_ab(rates, drive) / drive.alpha_p();
      const cplx exact = liouville::weak_probe_coherence(rates, drive);
      return std::abs(exact - closed) / std::abs(closed);
    };
    const double full = gap(alpha_p);
    const double half = gap(0.5 * alpha_p);
    s.max_relative = std::max(s.max_relative, full);
    s.max_relative_half = std::max(s.max_relative_half, half);
    sum_full += full;
    sum_half += half;
  }
  s.convergence_ratio = sum_half > 0.0 ? sum_full / sum_half : 0.0;
  return s;
}

/// Largest relative gap between the closed-form and oracle populations.
inline double population_agreement(const std::vector<Draw>& draws) {
  double worst = 0.0;
  for (const Draw& d : draws) {
    const auto rates = AtomRates::dimensionless(d.eps0);
    const auto drive = drive_of(d, 1e-6);
    const auto rho = liouville::solve_steady_state(rates, drive);
    const auto p = closed_form::populations(rates, drive);
    const double exact[4] = {rho.sigma_aa, rho.sigma_bb, rho.sigma_cc, rho.sigma_dd};
    const double closed[4] = {p.aa, p.bb, p.cc, p.dd};
    for (int i = 0; i < 4; ++i)
      worst = std::max(worst, std::abs(exact[i] - closed[i]) / std::max(std::abs(exact[i]), 1e-300));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Doppler draws

struct ResidueDraw {
  double eps0, alpha_sq, f_p, f_1, f_2, h;
};

inline std::vector<ResidueDraw> residue_draws(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> ue(0.05, 0.3), ua(1.0, 15.0), ud(-5.0, 5.0), uh(0.0, 15.0);
  std::vector<ResidueDraw> out;
  for (int i = 0; i < n; ++i) {
    ResidueDraw d{ue(rng), ua(rng), ud(rng), ud(rng), ud(rng), uh(rng)};
    out.push_back(d);
  }
  return out;
}

inline double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

struct TermErrors {
  double im_a1 = 0, a2 = 0, a3 = 0, a4 = 0, a5 = 0, ac = 0, bd = 0;

  double worst() const { return std::max({im_a1, a2, a3, a4, a5, ac, bd}); }
};

/// Each residue sum against quadrature of its own integrand over the line.
inline TermErrors termwise_errors(const std::vector<ResidueDraw>& draws, doppler::Transcription t,
                                  double a3_scale = 1.0) {
  TermErrors e;
  for (const auto& d : draws) {
    const auto drive = DriveConfig::make(cplx(std::sqrt(d.alpha_sq), 0.0), cplx(1.0, 0.0), d.f_p,
                                         d.f_1, d.f_2, d.eps0);
    const auto p = doppler::ResidueParams::from(drive, d.eps0);
    const auto r = doppler::pole_roots(drive, d.eps0);
    const auto terms = doppler::residue_terms(p, r, t);
    const auto I = doppler::integrands(p, r);
    const std::vector<double> cuts{-p.fp, -p.f1, -p.f2, r.x1.real(), r.x2.real()};
    auto q = [&](const auto& fn) { return integrate_real_line(fn, cuts); };
    e.im_a1 = std::max(e.im_a1, rel(terms.im_a1, q(I.im_a1)));
    e.a2 = std::max(e.a2, rel(terms.a2, q(I.a2)));
    e.a3 = std::max(e.a3, rel(terms.a3 * a3_scale, q(I.a3)));
    e.a4 = std::max(e.a4, rel(terms.a4, q(I.a4)));
    e.a5 = std::max(e.a5, rel(terms.a5, q(I.a5)));
    e.ac = std::max(e.ac, rel(terms.ac, q(I.ac)));
    e.bd = std::max(e.bd, rel(terms.bd, q(I.bd)));
  }
  return e;
}

/// Zeeman-form roots and residues against the general form after the
/// substitution f_1 = 0, f_2 = -h, f_p -> f_p - h.
inline double zeeman_reduction_error(const std::vector<ResidueDraw>& draws, doppler::Transcription t,
                                     doppler::RootForm form = doppler::RootForm::Quadratic) {
  double worst = 0.0;
  for (const auto& d : draws) {
    const auto bare = DriveConfig::resonant(d.alpha_sq, cplx(1.0, 0.0), d.f_p, d.eps0);
    const auto drive = apply_magnetic_substitution(bare, MagneticConfig::make(d.h));
    const auto ra = doppler::pole_roots(drive, d.eps0, form);
    const auto rb = doppler::pole_roots_zeeman(d.f_p, d.h, d.alpha_sq, d.eps0, form);
    worst = std::max({worst, rel(rb.x1, ra.x1), rel(rb.x2, ra.x2)});
    const auto ta = doppler::residue_terms(doppler::ResidueParams::from(drive, d.eps0), ra, t);
    const auto tb = doppler::residue_terms_zeeman(d.f_p, d.h, d.alpha_sq, d.eps0, rb, t);
    worst = std::max({worst, rel(tb.im_a1, ta.im_a1), rel(tb.a2, ta.a2), rel(tb.a3, ta.a3),
                      rel(tb.a4, ta.a4), rel(tb.a5, ta.a5), rel(tb.ac, ta.ac), rel(tb.bd, ta.bd)});
  }
  return worst;
}

/// Largest quadratic residual of the pole roots over the draws.
inline double root_residual(const std::vector<ResidueDraw>& draws, doppler::RootForm form) {
  double worst = 0.0;
  for (const auto& d : draws) {
    const auto drive = DriveConfig::make(cplx(std::sqrt(d.alpha_sq), 0.0), cplx(1.0, 0.0), d.f_p,
                                         d.f_1, d.f_2, d.eps0);
    const auto r = doppler::pole_roots(drive, d.eps0, form);
    worst = std::max({worst, doppler::root_residual(drive, d.eps0, r.x1),
                      doppler::root_residual(drive, d.eps0, r.x2)});
  }
  return worst;
}

struct SpectrumAgreement {
  /// max |closed - quadrature| / max |quadrature| over the grid.
  double peak_normalized = 0.0;
  /// max |closed - quadrature| / |quadrature| over the grid.
  double pointwise = 0.0;
  double worst_f_p = 0.0;
};

/// Closed form against quadrature of the integrands it integrates, figure
/// parameters (eps0 = 0.1, |alpha_0| = 10).
inline SpectrumAgreement closed_vs_quadrature(double h, double x0, const std::vector<double>& grid,
                                              double a3_scale = 1.0) {
  optics::SpectrumParams p;
  p.rates = AtomRates::dimensionless(0.1);
  p.drive = DriveConfig::resonant(10.0, cplx(1.0, 0.0), 0.0, 0.1);
  p.field = MagneticConfig::make(h);
  p.ensemble = DopplerEnsemble::make(x0);
  p.closed.a3_scale = a3_scale;
  const auto closed = optics::spectrum(optics::Backend::DopplerClosed, p, grid);
  const auto quad = optics::spectrum(optics::Backend::DopplerQuadrature, p, grid);
  SpectrumAgreement s;
  double peak = 0.0, worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double gap = std::abs(closed[i].value - quad[i].value);
    peak = std::max(peak, std::abs(quad[i].value));
    if (gap > worst) {
      worst = gap;
      s.worst_f_p = grid[i];
    }
    s.pointwise = std::max(s.pointwise, gap / std::abs(quad[i].value));
  }
  s.peak_normalized = worst / peak;
  return s;
}

// ---------------------------------------------------------------------------
// Strong-field limits

/// Local maxima of y on an evenly spaced grid, returned as abscissae.
inline std::vector<double> local_maxima(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> out;
  for (std::size_t i = 1; i + 1 < y.size(); ++i)
    if (y[i] > y[i - 1] && y[i] >= y[i + 1]) out.push_back(x[i]);
  return out;
}

struct PeakComparison {
  std::vector<double> peaks;        // exact local maxima
  std::vector<double> expected;     // predicted line centres
  double position_error = 0.0;      // worst |peak - expected|
  double grid_step = 0.0;
  double amplitude_error = 0.0;     // corrected contour vs decomposition at the peaks
  double printed_amplitude_error = 0.0;
};

/// Rest atoms, eps0 = 0.01, |alpha|^2 = 25, h = 400: the doublet at h -/+ |alpha|.
inline PeakComparison saturated_peaks(double eps0 = 0.01, double alpha_sq = 25.0, double h = 400.0,
                                      double step = 0.1) {
  const double a = std::sqrt(alpha_sq);
  optics::SpectrumParams p;
  p.rates = AtomRates::dimensionless(eps0);
  p.drive = DriveConfig::resonant(alpha_sq, cplx(1.0, 0.0), 0.0, eps0);
  p.field = MagneticConfig::make(h);
  const int count = static_cast<int>(std::lround(6.0 * a / step)) + 1;
  const auto grid = optics::linear_grid(h - 3.0 * a, h + 3.0 * a, count);
  const auto spec = optics::spectrum(optics::Backend::RestAtom, p, grid);
  std::vector<double> im;
  for (const auto& s : spec) im.push_back(s.absorption());

  PeakComparison c;
  c.grid_step = grid[1] - grid[0];
  c.peaks = local_maxima(grid, im);
  c.expected = {h - a, h + a};
  c.position_error = c.peaks.size() == 2
                         ? std::max(std::abs(c.peaks[0] - c.expected[0]), std::abs(c.peaks[1] - c.expected[1]))
                         : INFINITY;
  for (double fp : c.peaks) {
    const auto drive = p.drive.with_probe_detuning(fp);
    const double full = closed_form::rest_atom_decomposition(p.rates, drive, p.field).total.imag();
    const auto fixed = closed_form::saturated_contours(fp, h, a, closed_form::ContourForm::Corrected);
    const auto printed = closed_form::saturated_contours(fp, h, a, closed_form::ContourForm::Printed);
    c.amplitude_error = std::max(c.amplitude_error, std::abs(fixed.im - full) / std::abs(full));
    c.printed_amplitude_error = std::max(c.printed_amplitude_error, std::abs(printed.im - full) / std::abs(full));
  }
  return c;
}

/// Rest atoms at h = 0: three absorption maxima symmetric about f_p = 0.
inline PeakComparison zero_field_peaks(double eps0 = 0.1, double alpha_sq = 10.0) {
  optics::SpectrumParams p;
  p.rates = AtomRates::dimensionless(eps0);
  p.drive = DriveConfig::resonant(alpha_sq, cplx(1.0, 0.0), 0.0, eps0);
  const auto grid = optics::linear_grid(-30.0, 30.0, 601);
  const auto spec = optics::spectrum(optics::Backend::RestAtom, p, grid);
  std::vector<double> im;
  for (const auto& s : spec) im.push_back(s.absorption());
  PeakComparison c;
  c.grid_step = grid[1] - grid[0];
  c.peaks = local_maxima(grid, im);
  const double s = 2.0 * std::sqrt(alpha_sq);
  c.expected = {-s, 0.0, s};
  if (c.peaks.size() == 3) {
    c.position_error = std::max({std::abs(c.peaks[0] + c.peaks[2]), std::abs(c.peaks[1])});
  } else {
    c.position_error = INFINITY;
  }
  return c;
}

/// Strong-field decomposition against the exact grouping, rest atoms, over
/// random detunings at the given eps0.
inline double decomposition_error(double eps0, int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> ua(0.0, 20.0), ud(-10.0, 10.0);
  double worst = 0.0;
  const auto rates = AtomRates::dimensionless(eps0);
  for (int i = 0; i < n; ++i) {
    const auto drive = DriveConfig::make(cplx(std::sqrt(ua(rng)), 0.0), cplx(1.0, 0.0), ud(rng), ud(rng),
                                         0.0, eps0);
    const auto m = MagneticConfig::make(ud(rng));
    const auto a = closed_form::rest_atom_decomposition(rates, drive, m, closed_form::DecompositionForm::Printed);
    const auto b = closed_form::rest_atom_decomposition(rates, drive, m, closed_form::DecompositionForm::Exact);
    worst = std::max(worst, std::abs(a.total - b.total));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Suites

inline std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

inline Report run_oracle(const Options& o = {}) {
  Report r{"oracle", {}, {}};
  const auto draws = random_draws(o.draws, o.seed);
  const auto s = oracle_integrity(draws);
  r.add("oracle.stationarity_residual", s.residual, 1e-10);
  r.add("oracle.population_sum", s.population_sum, 1e-9);
  r.add("oracle.hermiticity", s.hermiticity, 1e-10);
  const auto w = weak_probe_agreement(draws);
  r.add("oracle.weak_probe_closed_form", w.max_relative, 1e-5);
  r.add("oracle.weak_probe_quadratic_convergence", std::abs(w.convergence_ratio - 4.0), 0.5,
        "ratio " + fmt(w.convergence_ratio));
  r.add("oracle.populations", population_agreement(draws), 1e-6);

  double split = 0.0;
  for (const auto& d : draws) {
    const auto rates = AtomRates::dimensionless(d.eps0);
    const auto drive = DriveConfig::make(d.alpha, cplx(1.0, 0.0), d.f_p, d.f_1, 0.0, d.eps0);
    const auto m = MagneticConfig::make(d.f_2);
    const auto dec = closed_form::rest_atom_decomposition(rates, drive, m, closed_form::DecompositionForm::Exact);
    split = std::max(split, rel(dec.total, closed_form::coherence_ab(rates, zeeman_frame(drive, m))));
  }
  r.add("oracle.decomposition_additivity", split, 1e-12);
  return r;
}

inline Report run_doppler(const Options& o = {}) {
  using doppler::Transcription;
  Report r{"doppler", {}, {}};
  const auto draws = residue_draws(std::max(8, o.draws / 10), o.seed + 1);

  const double exact_roots = root_residual(draws, doppler::RootForm::Quadratic);
  const double printed_roots = root_residual(draws, doppler::RootForm::Printed);
  r.add("doppler.root_residual", exact_roots, 1e-10);
  if (printed_roots > 1e-6)
    r.discrepancies.push_back({"closed root formula for x1, x2",
                               "roots taken from the quadratic itself; the printed formula drops a factor "
                               "that is 1 only to first order in eps0",
                               printed_roots, exact_roots});

  const auto fixed = termwise_errors(draws, Transcription::Corrected, o.a3_scale);
  const auto printed = termwise_errors(draws, Transcription::Printed);
  r.add("doppler.residue.ImA1", fixed.im_a1, 1e-8);
  r.add("doppler.residue.A2", fixed.a2, 1e-8);
  r.add("doppler.residue.A3", fixed.a3, 1e-8);
  r.add("doppler.residue.A4", fixed.a4, 1e-8);
  r.add("doppler.residue.A5", fixed.a5, 1e-8);
  r.add("doppler.residue.sigma_ac", fixed.ac, 1e-8);
  r.add("doppler.residue.sigma_bd", fixed.bd, 1e-8);
  auto note = [&](const char* item, double pe, double ce, const char* how) {
    if (pe > 1e-6 && ce <= 1e-8) r.discrepancies.push_back({item, how, pe, ce});
  };
  note("A4 residue", printed.a4, fixed.a4,
       "pole at x = i sqrt(1+2|alpha|^2) - f_2 and the cross factors carry +2|alpha|^2 terms; "
       "(f_1 + x_2) in the first term becomes (f_2 + x_1)");
  note("A5 residue", printed.a5, fixed.a5, "same repairs as A4");
  note("sigma_bd residue", printed.bd, fixed.bd,
       "same repairs as A4; the first-term factor (1 - i f_1 - i x_2) becomes (1 + i f_2 + i x_1)");

  r.add("doppler.zeeman_reduction.corrected", zeeman_reduction_error(draws, Transcription::Corrected), 1e-10);
  r.add("doppler.zeeman_reduction.printed", zeeman_reduction_error(draws, Transcription::Printed), 1e-10);
  r.add("doppler.zeeman_reduction.printed_roots",
        zeeman_reduction_error(draws, Transcription::Corrected, doppler::RootForm::Printed), 1e-10);

  const auto grid = optics::linear_grid(-25.0, 25.0, 201);
  for (double h : {0.0, 10.0}) {
    const auto s = closed_vs_quadrature(h, 100.0, grid, o.a3_scale);
    r.add("doppler.closed_vs_quadrature.h" + fmt(h), s.peak_normalized, 0.02,
          "pointwise " + fmt(s.pointwise) + " worst f_p " + fmt(s.worst_f_p));
  }

  optics::SpectrumParams p;
  p.rates = AtomRates::dimensionless(0.1);
  p.drive = DriveConfig::resonant(0.0, cplx(1.0, 0.0), 0.0, 0.1);
  p.ensemble = DopplerEnsemble::make(100.0);
  const double anchor = optics::eit_eia_metric(p);
  r.add("doppler.normalization_anchor", std::abs(anchor - 1.0), 0.01, "Im " + fmt(anchor));
  double voigt = 0.0;
  for (double d : {0.0, 30.0, 80.0, 150.0}) {
    const double im = optics::evaluate(optics::Backend::DopplerQuadrature, p, d).imag();
    voigt = std::max(voigt, std::abs(im - std::exp(-d * d / 1e4)));
  }
  r.add("doppler.zero_drive_gaussian", voigt, 3.0 / 100.0);
  return r;
}

inline Report run_limits(const Options& = {}) {
  Report r{"limits", {}, {}};
  const auto sat = saturated_peaks();
  r.add("limits.saturated.peak_positions", sat.position_error, sat.grid_step,
        "peaks " + (sat.peaks.size() == 2 ? fmt(sat.peaks[0]) + ", " + fmt(sat.peaks[1]) : "count " + std::to_string(sat.peaks.size())) +
            " expected " + fmt(sat.expected[0]) + ", " + fmt(sat.expected[1]));
  r.add("limits.saturated.amplitude", sat.amplitude_error, 0.05);
  if (sat.printed_amplitude_error > 0.05)
    r.discrepancies.push_back({"saturated-field contours",
                               "amplitude 2 from optical pumping into (b) and both absorption lines "
                               "enter with a plus sign",
                               sat.printed_amplitude_error, sat.amplitude_error});

  const auto zero = zero_field_peaks();
  r.add("limits.zero_field.three_symmetric_maxima", zero.position_error, zero.grid_step,
        "maxima " + std::to_string(zero.peaks.size()));

  // Satellites of the zero-field contour at -/+ 2|alpha| once |alpha| >> 1.
  const auto strong = zero_field_peaks(0.01, 100.0);
  double sat_err = INFINITY;
  if (strong.peaks.size() == 3)
    sat_err = std::max(std::abs(strong.peaks[0] + 20.0), std::abs(strong.peaks[2] - 20.0));
  r.add("limits.zero_field.satellite_positions", sat_err, 0.5,
        "expected -/+ 2|alpha| = -/+ 20");
  {
    const auto wide = optics::linear_grid(-60.0, 60.0, 1201);
    std::vector<double> im;
    for (double fp : wide)
      im.push_back(closed_form::zero_field_contours(fp, 10.0, closed_form::ContourForm::Printed).im);
    const auto pk = local_maxima(wide, im);
    const double printed_err =
        pk.size() == 3 ? std::max(std::abs(pk[0] + 20.0), std::abs(pk[2] - 20.0)) : INFINITY;
    if (printed_err > 0.5)
      r.discrepancies.push_back({"zero-field contour satellites",
                                 "satellites at -/+ 2|alpha| with overall scale 1/2", printed_err, sat_err});
  }

  const double e = 0.01;
  const double dec = decomposition_error(e, 200, 7u);
  r.add("limits.decomposition_first_order", dec, 5.0 * e, "eps0 " + fmt(e));
  return r;
}

inline Report run(const std::string& selector, const Options& o = {}) {
  if (selector == "oracle") return run_oracle(o);
  if (selector == "doppler") return run_doppler(o);
  if (selector == "limits") return run_limits(o);
  if (selector == "all") {
    Report r = run_oracle(o);
    r.merge(run_doppler(o));
    r.merge(run_limits(o));
    r.suite = "all";
    return r;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown validation suite '" + selector + "'");
}

}  // namespace nvapor::validation
