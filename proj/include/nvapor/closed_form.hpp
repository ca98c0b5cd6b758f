#pragma once

// Explicit weak-probe expressions for atoms at rest.

#include <cmath>
#include <complex>

#include "nvapor/error.hpp"
#include "nvapor/model.hpp"

namespace nvapor::closed_form {

inline constexpr cplx kI{0.0, 1.0};

struct Populations {
  double aa = 0, bb = 0, cc = 0, dd = 0;

  double sum() const { return aa + bb + cc + dd; }
  double n_ba() const { return bb - aa; }
  double n_ca() const { return cc - aa; }
  double n_db() const { return dd - bb; }
  double n_bd() const { return bb - dd; }
};

/// Drive-only stationary populations. They do not depend on the probe.
inline Populations populations(const AtomRates& rates, const DriveConfig& drive) {
  const double e = rates.eps0();
  const double n0 = rates.n0();
  const double a2 = drive.alpha_sq();
  const double a02 = a2 / e;
  const double w1 = (2.0 - e) * (1.0 + drive.f_1() * drive.f_1());
  const double w2 = (2.0 - e) * (1.0 + drive.f_2() * drive.f_2());
  const double den = w1 + 2.0 * a02 * (1.0 + e);
  const double upper = (w1 + 4.0 * a02) / den;

  Populations p;
  p.aa = n0 * 2.0 * a2 / den;
  p.bb = n0 * upper * (w2 + 2.0 * a2) / (w2 + 4.0 * a2);
  p.cc = n0 * (w1 + 2.0 * a2) / den;
  p.dd = n0 * upper * 2.0 * a2 / (w2 + 4.0 * a2);
  return p;
}

namespace detail {

struct AbParts {
  cplx prefactor;  // i alpha_p (1 + i f) / D
  cplx bracket_ab;
  cplx bracket_ac;
  cplx bracket_db;
};

inline AbParts coherence_ab_parts(const AtomRates& rates, const DriveConfig& drive) {
  const double e = rates.eps0();
  const double a2 = drive.alpha_sq();
  const Populations p = populations(rates, drive);
  const cplx one_f = 1.0 + kI * drive.f();
  const cplx lower = e + kI * drive.f_p1();
  const cplx upper = 2.0 - e + kI * drive.f_p2();
  const cplx D = one_f * (1.0 + kI * drive.f_p()) +
                 a2 * (2.0 + kI * (drive.f_p1() + drive.f_p2())) * (1.0 / lower + 1.0 / upper);
  if (std::abs(D) < 1e-14)
    throw Error(ErrorCode::Pole, "denominator of sigma_ab vanishes");

  AbParts parts;
  parts.prefactor = kI * drive.alpha_p() * one_f / D;
  parts.bracket_ab = p.n_ba() + p.n_ba() * a2 / one_f * (1.0 / upper + 1.0 / lower);
  parts.bracket_ac = -p.n_ca() / (1.0 - kI * drive.f_1()) * a2 / lower;
  parts.bracket_db = p.n_db() / (1.0 - kI * drive.f_2()) * a2 / upper;
  return parts;
}

}  // namespace detail

/// First order in the probe amplitude; exact for rates measured in gamma + gamma0.
inline cplx coherence_ab(const AtomRates& rates, const DriveConfig& drive) {
  const auto parts = detail::coherence_ab_parts(rates, drive);
  return parts.prefactor * (parts.bracket_ab + parts.bracket_ac + parts.bracket_db);
}

inline cplx coherence_ca(const AtomRates& rates, const DriveConfig& drive) {
  const Populations p = populations(rates, drive);
  return -p.n_ca() * kI * std::conj(drive.alpha()) / (1.0 - kI * drive.f_1());
}

inline cplx coherence_bd(const AtomRates& rates, const DriveConfig& drive) {
  const Populations p = populations(rates, drive);
  return -p.n_bd() * kI * std::conj(drive.alpha()) / (1.0 - kI * drive.f_2());
}

/// The three contributions to sigma_ab tied to n_ab, n_ac and n_bd.
struct CoherenceDecomposition {
  cplx term_ab;
  cplx term_ac;
  cplx term_bd;
  cplx total;

  static CoherenceDecomposition of(cplx ab, cplx ac, cplx bd) {
    return CoherenceDecomposition{ab, ac, bd, ab + ac + bd};
  }
};

enum class DecompositionForm {
  /// The strong-field rest-atom expressions with eps0 dropped beside 2 and in
  /// the population factors.
  Printed,
  /// Grouping of the exact weak-probe coherence by population difference.
  Exact,
};

/// Rest atoms with degenerate zero-field levels, drive detuning f_1 on both
/// drive transitions and only level (b) displaced by h, so f_2 = f_1 - h.
/// `drive.f_p()` is the bare probe detuning: the (a-b) line centre is f_p = h.
inline CoherenceDecomposition rest_atom_decomposition(
    const AtomRates& rates, const DriveConfig& drive, const MagneticConfig& m,
    DecompositionForm form = DecompositionForm::Printed) {
  if (form == DecompositionForm::Exact) {
    const auto parts = detail::coherence_ab_parts(rates, zeeman_frame(drive, m));
    return CoherenceDecomposition::of(parts.prefactor * parts.bracket_ab,
                                      parts.prefactor * parts.bracket_ac,
                                      parts.prefactor * parts.bracket_db);
  }

  const double e = rates.eps0();
  const double n0 = rates.n0();
  const double h = m.h;
  const double fp = drive.f_p();
  const double f1 = drive.f_1();
  const double a2 = drive.alpha_sq();
  const double a02 = drive.alpha0_sq();
  const double fp1 = fp - h - f1;
  const double q = (f1 - h) * (f1 - h);

  const cplx lower = e + kI * fp1;
  const cplx upper = 2.0 + kI * fp1 + kI * h;
  const cplx cross = 1.0 + kI * fp - 2.0 * kI * f1;
  const cplx D = cross * (1.0 + kI * fp - kI * h) +
                 a2 * (2.0 + 2.0 * kI * fp1 + kI * h) * (1.0 / lower + 1.0 / upper);
  if (std::abs(D) < 1e-14)
    throw Error(ErrorCode::Pole, "denominator of the rest-atom decomposition vanishes");

  const cplx pre = kI * drive.alpha_p() * n0 * cross / D;
  const double upper_pop = (1.0 + f1 * f1 + 2.0 * a02) / (1.0 + f1 * f1 + a02);

  const cplx ab = pre * upper_pop * (1.0 + q + a2) / (1.0 + q + 2.0 * a2) *
                  (1.0 + a2 / cross * (1.0 / lower + 1.0 / upper));
  const cplx ac = -pre * (1.0 + kI * f1) / (1.0 + f1 * f1 + a02) * a2 / lower;
  const cplx bd = -pre * upper_pop * (1.0 + kI * f1 - kI * h) / (1.0 + q + 2.0 * a2) * a2 / upper;
  return CoherenceDecomposition::of(ab, ac, bd);
}

/// Dispersive (re) and absorptive (im) parts of sigma_ab / (alpha_p n0).
struct Contour {
  double re = 0.0;
  double im = 0.0;
};

enum class ContourForm {
  /// Transcribed literally.
  Printed,
  /// Amplitudes, signs and line centres that the exact steady state approaches.
  Corrected,
};

namespace detail {
inline double lorentz(double x) { return 1.0 / (1.0 + x * x); }
}  // namespace detail

/// Strong drive, resonant drive tuning and h >> 1: the (a-b) line splits into
/// an Autler-Townes doublet at f_p = h -/+ |alpha| of half width 1/2.
/// The corrected form carries the optical-pumping amplitude n_ba -> 2 n0 and
/// adds the two absorption components.
inline Contour saturated_contours(double f_p, double h, double alpha_mag,
                                  ContourForm form = ContourForm::Printed) {
  const double lo = 2.0 * (f_p - h - alpha_mag);
  const double hi = 2.0 * (f_p - h + alpha_mag);
  const double re = lo * detail::lorentz(lo) + hi * detail::lorentz(hi);
  if (form == ContourForm::Printed)
    return {re, detail::lorentz(lo) - detail::lorentz(hi)};
  return {2.0 * re, 2.0 * (detail::lorentz(lo) + detail::lorentz(hi))};
}

/// Strong drive at h = 0: a central line plus two satellites. The exact
/// satellites sit at f_p = -/+ 2|alpha| with the overall scale n_ba -> n0 / 2.
inline Contour zero_field_contours(double f_p, double alpha_mag,
                                   ContourForm form = ContourForm::Printed) {
  const double s = 2.0 * alpha_mag;
  if (form == ContourForm::Printed) {
    const double lo = f_p - 2.0 * s;
    const double hi = f_p + 2.0 * s;
    return {f_p * detail::lorentz(f_p) + 0.5 * (f_p - s) * detail::lorentz(lo) +
                0.5 * (f_p + s) * detail::lorentz(hi),
            detail::lorentz(f_p) + 0.5 * detail::lorentz(lo) + 0.5 * detail::lorentz(hi)};
  }
  const double lo = f_p - s;
  const double hi = f_p + s;
  return {0.5 * (f_p * detail::lorentz(f_p) + 0.5 * lo * detail::lorentz(lo) +
                 0.5 * hi * detail::lorentz(hi)),
          0.5 * (detail::lorentz(f_p) + 0.5 * detail::lorentz(lo) + 0.5 * detail::lorentz(hi))};
}

}  // namespace nvapor::closed_form
