#pragma once

// Velocity-averaged probe coherence.
//
// An atom moving with dimensionless velocity x sees every detuning shifted by x.
// The Maxwell average of sigma_ab / lambda, lambda = alpha_p n0 sqrt(pi) / x0,
// is computed two ways: in closed form from the residues at the two poles x1, x2
// of the strong-field denominator (valid for x0 >> 1), and by direct quadrature.
//
// Two coordinate systems are used. The general ("A") form takes arbitrary drive
// detunings f_1, f_2. The Zeeman ("B") form fixes f_1 = 0, f_2 = -h and takes the
// bare probe detuning, so the shifted (a-b) line centre sits at f_p = h.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

#include "nvapor/closed_form.hpp"
#include "nvapor/error.hpp"
#include "nvapor/model.hpp"
#include "nvapor/quadrature.hpp"

namespace nvapor::doppler {

inline constexpr cplx kI{0.0, 1.0};

/// Velocity class x: f_p, f_1, f_2 all move by x, so f moves by -x and the
/// two-photon detunings f_p1, f_p2, f_12 stay put.
inline DriveConfig shift_velocity(const DriveConfig& drive, double x) {
  return drive.with_detunings(drive.f_p() + x, drive.f_1() + x, drive.f_2() + x);
}

/// Scalar combinations shared by the residue expressions, in the A form.
struct ResidueParams {
  double eps0 = 0.1;
  double a2 = 0.0;   // |alpha|^2
  double a02 = 0.0;  // |alpha_0|^2 = |alpha|^2 / eps0
  double fp = 0.0, f1 = 0.0, f2 = 0.0;
  double fp1 = 0.0, fp2 = 0.0, f = 0.0, f21 = 0.0;
  double beta = 1.0;  // sqrt(1 + |alpha_0|^2)
  double nu = 1.0;    // sqrt(1 + 2 |alpha|^2)
  cplx w;             // 2 + i f_p1 + i f_p2
  cplx S;             // 1/(eps0 + i f_p1) + 1/(2 + i f_p2)

  static ResidueParams from(const DriveConfig& drive, double eps0) {
    if (!(eps0 > 0.0 && eps0 < 1.0))
      throw Error(ErrorCode::InvalidArgument, "eps0 must lie in (0, 1)");
    ResidueParams p;
    p.eps0 = eps0;
    p.a2 = drive.alpha_sq();
    p.a02 = p.a2 / eps0;
    p.fp = drive.f_p();
    p.f1 = drive.f_1();
    p.f2 = drive.f_2();
    p.fp1 = drive.f_p1();
    p.fp2 = drive.f_p2();
    p.f = drive.f();
    p.f21 = p.f2 - p.f1;
    p.beta = std::sqrt(1.0 + p.a02);
    p.nu = std::sqrt(1.0 + 2.0 * p.a2);
    const cplx lower = eps0 + kI * p.fp1;
    if (std::abs(lower) < 1e-300)
      throw Error(ErrorCode::DegenerateDetuning, "eps0 + i f_p1 vanishes");
    p.w = 2.0 + kI * (p.fp1 + p.fp2);
    p.S = 1.0 / lower + 1.0 / (2.0 + kI * p.fp2);
    return p;
  }

  /// Zeeman-form parameters for bare probe detuning f_p and shift h.
  static ResidueParams zeeman(double f_p, double h, double alpha_sq, double eps0) {
    const auto drive = DriveConfig::make(cplx(std::sqrt(alpha_sq), 0.0), cplx(1.0, 0.0),
                                         f_p - h, 0.0, -h, eps0);
    return from(drive, eps0);
  }
};

enum class RootForm {
  /// Exact roots of the strong-field quadratic.
  Quadratic,
  /// The closed root formula with S replaced by 1/((eps0 + i f_p1)(2 + i f_p2)) w^-1,
  /// which satisfies the quadratic only to first order in eps0.
  Printed,
};

struct PoleRoots {
  cplx x1;  // upper half plane
  cplx x2;  // lower half plane
  /// True when the "+" branch of the principal root landed below the real axis
  /// and the labels were exchanged.
  bool swapped = false;
};

namespace detail {

inline PoleRoots order_roots(cplx plus, cplx minus) {
  if (plus.imag() >= minus.imag()) return {plus, minus, false};
  return {minus, plus, true};
}

inline cplx root_factor(const ResidueParams& p, RootForm form) {
  if (form == RootForm::Quadratic) return std::sqrt(1.0 + 4.0 * p.a2 * p.S / p.w);
  return std::sqrt(1.0 + 4.0 * p.a2 / ((p.eps0 + kI * p.fp1) * (2.0 + kI * p.fp2)));
}

/// The residue formulas assume the poles of R and Q differ from x1, x2.
inline void require_separate(cplx pole, const PoleRoots& r) {
  const double tol = 1e-10 * std::max(1.0, std::abs(pole));
  if (std::abs(pole - r.x1) < tol || std::abs(pole - r.x2) < tol)
    throw Error(ErrorCode::ConfluentPoles, "a pole of the population factors meets x1 or x2");
}

}  // namespace detail

/// Poles of 1 / [(1 + i f - i x)(1 + i f_p + i x) + |alpha|^2 w S] in the A form.
inline PoleRoots pole_roots(const DriveConfig& drive, double eps0,
                            RootForm form = RootForm::Quadratic) {
  const auto p = ResidueParams::from(drive, eps0);
  const cplx centre = -0.5 * (p.f1 + p.f2);
  const cplx half = 0.5 * kI * p.w * detail::root_factor(p, form);
  return detail::order_roots(centre + half, centre - half);
}

/// Same poles written directly in the Zeeman form (f_1 = 0, f_2 = -h).
inline PoleRoots pole_roots_zeeman(double f_p, double h, double alpha_sq, double eps0,
                                   RootForm form = RootForm::Quadratic) {
  if (!(eps0 > 0.0 && eps0 < 1.0))
    throw Error(ErrorCode::InvalidArgument, "eps0 must lie in (0, 1)");
  const cplx lower = eps0 + kI * f_p - kI * h;
  const cplx upper = 2.0 + kI * f_p;
  const cplx w = 2.0 + 2.0 * kI * f_p - kI * h;
  const cplx root = form == RootForm::Quadratic
                        ? std::sqrt(1.0 + 4.0 * alpha_sq * (1.0 / lower + 1.0 / upper) / w)
                        : std::sqrt(1.0 + 4.0 * alpha_sq / (lower * upper));
  const cplx half = 0.5 * kI * w * root;
  return detail::order_roots(0.5 * h + half, 0.5 * h - half);
}

/// |quadratic(x)| relative to its largest coefficient.
inline double root_residual(const DriveConfig& drive, double eps0, cplx x) {
  const auto p = ResidueParams::from(drive, eps0);
  const cplx value = (1.0 + kI * p.f - kI * x) * (1.0 + kI * p.fp + kI * x) + p.a2 * p.w * p.S;
  const cplx c0 = (1.0 + kI * p.f) * (1.0 + kI * p.fp) + p.a2 * p.w * p.S;
  const cplx c1 = kI * (1.0 + kI * p.f) - kI * (1.0 + kI * p.fp);
  const double scale = std::max({1.0, std::abs(c0), std::abs(c1)});
  return std::abs(value) / scale;
}

enum class Transcription {
  /// Residues of the integrands, with the misprinted factors of A4, A5 and
  /// sigma^bd repaired.
  Corrected,
  /// Literal transcription.
  Printed,
};

/// Residue sums without the Gaussian factor exp(-f_p^2 / x0^2). `im_a1` is the
/// real number multiplying i in A1.
struct ResidueTerms {
  double im_a1 = 0.0;
  cplx a2, a3, a4, a5, ac, bd;
};

/// General-form residues at the given poles.
inline ResidueTerms residue_terms(const ResidueParams& p, const PoleRoots& r,
                                  Transcription t = Transcription::Corrected) {
  const cplx x1 = r.x1, x2 = r.x2;
  const double a2 = p.a2, a02 = p.a02, b = p.beta, nu = p.nu, f1 = p.f1, f2 = p.f2;
  const double fp = p.fp, fp1 = p.fp1, fp2 = p.fp2, f = p.f, f21 = p.f21;
  const cplx ib = kI * b, in = kI * nu;
  auto R = [&](cplx x) { return (1.0 + (f1 + x) * (f1 + x) + 2.0 * a02) / (1.0 + (f1 + x) * (f1 + x) + a02); };
  auto Q = [&](cplx x) { return 1.0 / (1.0 + (f2 + x) * (f2 + x) + 2.0 * a2); };
  const cplx d12 = x1 - x2;
  if (std::abs(d12) < 1e-12 * std::max(1.0, std::abs(x1)))
    throw Error(ErrorCode::ConfluentPoles, "pole roots coincide");

  ResidueTerms out;
  if (a2 == 0.0) {
    out.im_a1 = 1.0;
    return out;
  }
  detail::require_separate(ib - f1, r);
  detail::require_separate(in - f2, r);
  const cplx g1 = fp1 * (fp1 - 2.0 * kI);
  out.im_a1 = ((g1 + 2.0 * a02) / (g1 + a02) + a02 / (b * (fp1 * (fp1 + 2.0 * ib) - a02))).real();

  const cplx Pb = a02 / (2.0 * ib * (ib - f1 - x1) * (ib - f1 - x2));
  out.a2 = a2 * p.w * p.S *
           (a02 / (b * (ib - fp1 + kI) * (ib + f1 + x1) * (ib + f1 + x2)) +
            R(x2) * 2.0 * kI / ((x2 + fp - kI) * (x2 - x1)));
  out.a3 = -2.0 * a2 * p.S * (R(x1) / d12 + Pb);
  out.ac = 2.0 * a2 / (p.eps0 + kI * fp1) *
           ((1.0 - b) * (fp2 - kI - ib) / (2.0 * b * (ib - f1 - x1) * (ib - f1 - x2)) +
            (x1 - f + kI) / d12 * (x1 + f1 - kI) / (1.0 + (f1 + x1) * (f1 + x1) + a02));

  if (t == Transcription::Printed) {
    const cplx Qb = 1.0 / (f21 * (f21 + 2.0 * ib) - a02);
    const cplx Pn = 1.0 / (2.0 * in * (in + f1 + x1) * (in + f1 + x2));
    const cplx Rn = (f21 * (f21 - 2.0 * in) + 2.0 * a02) / (f21 * (f21 - 2.0 * in) + a02);
    const cplx Qx2 = 1.0 / (1.0 + (f1 + x2) * (f1 + x2) + 2.0 * a2);
    out.a4 = 2.0 * a2 *
             (R(x1) * (1.0 + kI * f - kI * x1) / d12 * Qx2 + Pb * (1.0 + kI * fp2 + b) * Qb +
              Pn * (1.0 + kI * fp1 + nu) * Rn);
    out.a5 = 2.0 * a2 * a2 * p.S * (R(x1) / d12 * Qx2 + Pb * Qb + Pn * Rn);
    out.bd = 2.0 * a2 / (2.0 + kI * fp2) *
             (R(x1) * (1.0 + kI * f - kI * x1) / d12 * (1.0 - kI * f1 - kI * x2) * Qx2 +
              Pb * (1.0 + kI * fp2 + b) * (1.0 + kI * f21 - b) * Qb +
              Pn * (1.0 - nu) * (1.0 + kI * fp1 + nu) * Rn);
    return out;
  }

  const cplx Pn = 1.0 / (2.0 * in * (in - f2 - x1) * (in - f2 - x2));
  const cplx Qp = 1.0 / (f21 * (f21 + 2.0 * ib) - a02 + 2.0 * a2);
  const cplx Rq = (f21 * (f21 - 2.0 * in) + 2.0 * a02 - 2.0 * a2) /
                  (f21 * (f21 - 2.0 * in) + a02 - 2.0 * a2);
  const cplx lead = R(x1) * Q(x1) / d12;
  out.a4 = 2.0 * a2 *
           (lead * (1.0 + kI * f - kI * x1) + Pb * (1.0 + kI * fp2 + b) * Qp +
            Pn * (1.0 + kI * fp1 + nu) * Rq);
  out.a5 = 2.0 * a2 * a2 * p.S * (lead + Pb * Qp + Pn * Rq);
  out.bd = 2.0 * a2 / (2.0 + kI * fp2) *
           (lead * (1.0 + kI * f - kI * x1) * (1.0 + kI * f2 + kI * x1) +
            Pb * (1.0 + kI * fp2 + b) * (1.0 + kI * f21 - b) * Qp +
            Pn * (1.0 + kI * fp1 + nu) * (1.0 - nu) * Rq);
  return out;
}

/// Zeeman-form residues, written with the bare probe detuning f_p and shift h.
inline ResidueTerms residue_terms_zeeman(double f_p, double h, double alpha_sq, double eps0,
                                         const PoleRoots& r,
                                         Transcription t = Transcription::Corrected) {
  const auto p = ResidueParams::zeeman(f_p, h, alpha_sq, eps0);
  const cplx x1 = r.x1, x2 = r.x2;
  const double a2 = alpha_sq, a02 = p.a02, b = p.beta, nu = p.nu;
  const cplx ib = kI * b, in = kI * nu;
  const double d = f_p - h;
  auto R = [&](cplx x) { return (1.0 + x * x + 2.0 * a02) / (1.0 + x * x + a02); };
  const cplx d12 = x1 - x2;
  if (std::abs(d12) < 1e-12 * std::max(1.0, std::abs(x1)))
    throw Error(ErrorCode::ConfluentPoles, "pole roots coincide");
  const cplx S = 1.0 / (eps0 + kI * f_p - kI * h) + 1.0 / (2.0 + kI * f_p);

  ResidueTerms out;
  if (a2 == 0.0) {
    out.im_a1 = 1.0;
    return out;
  }
  detail::require_separate(ib, r);
  detail::require_separate(in + h, r);
  const cplx g1 = d * (d - 2.0 * kI);
  out.im_a1 = (a02 / (b * (d * (d + 2.0 * ib) - a02)) + (g1 + 2.0 * a02) / (g1 + a02)).real();

  const cplx Pb = a02 / (2.0 * ib * (ib - x1) * (ib - x2));
  out.a2 = a2 * (2.0 + 2.0 * kI * f_p - kI * h) * S *
           (a02 / (b * (ib - f_p + h + kI) * (ib + x1) * (ib + x2)) +
            R(x2) * 2.0 * kI / ((-x1 + f_p - kI) * (x2 - x1)));
  out.a3 = -2.0 * a2 * S * (R(x1) / d12 + Pb);
  out.ac = 2.0 * a2 / (eps0 + kI * f_p - kI * h) *
           ((1.0 - b) * (f_p - kI - ib) / (2.0 * b * (ib - x1) * (ib - x2)) +
            (x1 - f_p + kI) / d12 * (x1 - kI) / (1.0 + x1 * x1 + a02));

  if (t == Transcription::Printed) {
    const cplx Qb = 1.0 / (h * (-h + 2.0 * ib) + a02);
    const cplx Pn = 1.0 / (2.0 * in * (in + x1) * (in + x2));
    const cplx Rn = (h * (h + 2.0 * in) + 2.0 * a02) / (h * (h + 2.0 * in) + a02);
    const cplx Qx2 = 1.0 / (1.0 + x2 * x2 + 2.0 * a2);
    out.a4 = 2.0 * a2 *
             (R(x1) * (1.0 + kI * f_p - kI * x1) / d12 * Qx2 - Pb * (1.0 + kI * f_p + b) * Qb +
              Pn * (1.0 + kI * f_p - kI * h + nu) * Rn);
    const cplx Rn5 = (-h * (-h - 2.0 * in) + 2.0 * a02) / (-h * (-h - 2.0 * in) + a02);
    out.a5 = 2.0 * a2 * a2 * S * (R(x1) / d12 * Qx2 - Pb * Qb + Pn * Rn5);
    out.bd = 2.0 * a2 / (2.0 + kI * f_p) *
             (R(x1) * (1.0 + kI * f_p - kI * x1) / d12 * (1.0 - kI * x2) * Qx2 -
              Pb * (1.0 + kI * f_p + b) * (1.0 - kI * h - b) * Qb +
              Pn * (1.0 - nu) * (1.0 + kI * f_p - kI * h + nu) * Rn);
    return out;
  }

  auto Q = [&](cplx x) { return 1.0 / (1.0 + (x - h) * (x - h) + 2.0 * a2); };
  const cplx Pn = 1.0 / (2.0 * in * (in + h - x1) * (in + h - x2));
  const cplx Qm = 1.0 / (h * (-h + 2.0 * ib) + a02 - 2.0 * a2);
  const cplx Rq = (h * (h + 2.0 * in) + 2.0 * a02 - 2.0 * a2) / (h * (h + 2.0 * in) + a02 - 2.0 * a2);
  const cplx lead = R(x1) * Q(x1) / d12;
  out.a4 = 2.0 * a2 *
           (lead * (1.0 + kI * f_p - kI * x1) - Pb * (1.0 + kI * f_p + b) * Qm +
            Pn * (1.0 + kI * f_p - kI * h + nu) * Rq);
  out.a5 = 2.0 * a2 * a2 * S * (lead - Pb * Qm + Pn * Rq);
  out.bd = 2.0 * a2 / (2.0 + kI * f_p) *
           (lead * (1.0 + kI * f_p - kI * x1) * (1.0 - kI * h + kI * x1) -
            Pb * (1.0 + kI * f_p + b) * (1.0 - kI * h - b) * Qm +
            Pn * (1.0 - nu) * (1.0 + kI * f_p - kI * h + nu) * Rq);
  return out;
}

/// Velocity integrands whose residues are the terms above, without the
/// Gaussian. `im_a1` is real; `a1` is the full A1 integrand R / (x + f_p - i) / pi.
struct Integrands {
  std::function<cplx(double)> a1, im_a1, re_a1, a2, a3, a4, a5, ac, bd;

  cplx sum(double x) const { return a1(x) + a2(x) + a3(x) + a4(x) + a5(x) + ac(x) + bd(x); }
};

inline Integrands integrands(const ResidueParams& p, const PoleRoots& r) {
  using std::numbers::pi;
  auto R = [p](double x) {
    const double u = (p.f1 + x) * (p.f1 + x);
    return (1.0 + u + 2.0 * p.a02) / (1.0 + u + p.a02);
  };
  auto Q = [p](double x) { return 1.0 / (1.0 + (p.f2 + x) * (p.f2 + x) + 2.0 * p.a2); };
  auto D = [r](double x) { return (x - r.x1) * (x - r.x2); };
  Integrands I;
  I.a1 = [=](double x) { return R(x) / (x + p.fp - kI) / pi; };
  I.im_a1 = [=](double x) { return cplx(R(x) / ((x + p.fp) * (x + p.fp) + 1.0) / pi, 0.0); };
  I.re_a1 = [=](double x) {
    const double y = x + p.fp;
    return cplx(y / (y * y + 1.0) * R(x) / pi, 0.0);
  };
  I.a2 = [=](double x) { return -p.a2 * p.w * p.S / pi * R(x) / ((x + p.fp - kI) * D(x)); };
  I.a3 = [=](double x) { return kI * p.a2 * p.S / pi * R(x) / D(x); };
  I.a4 = [=](double x) { return -kI * p.a2 / pi * R(x) * (1.0 + kI * (p.f - x)) * Q(x) / D(x); };
  I.a5 = [=](double x) { return -kI * p.a2 * p.a2 * p.S / pi * R(x) * Q(x) / D(x); };
  I.ac = [=](double x) {
    const double u = (p.f1 + x) * (p.f1 + x);
    return -p.a2 / ((p.eps0 + kI * p.fp1) * pi) * (x - p.f + kI) * (1.0 + kI * (p.f1 + x)) /
           (D(x) * (1.0 + u + p.a02));
  };
  I.bd = [=](double x) {
    return -kI * p.a2 / ((2.0 + kI * p.fp2) * pi) * (1.0 - kI * x + kI * p.f) *
           (1.0 + kI * p.f2 + kI * x) * Q(x) * R(x) / D(x);
  };
  return I;
}

/// sigma_ab / lambda split into the three population channels. `a1`..`a5`
/// include the Gaussian factor and sum to `ab`.
struct NormalizedCoherence {
  cplx value;
  cplx ab, ac, bd;
  cplx a1, a2, a3, a4, a5;
  PoleRoots roots;
  bool quadrature_fallback = false;
  bool outside_doppler_limit = false;
};

enum class Integrand {
  /// Sum of the residue integrands, i.e. the model the closed form integrates.
  ResidueModel,
  /// The exact weak-probe coherence of each velocity class.
  ExactWeakProbe,
};

struct ClosedFormOptions {
  Transcription transcription = Transcription::Corrected;
  RootForm roots = RootForm::Quadratic;
  /// Multiplies A3; anything but 1 deliberately breaks the closed form.
  double a3_scale = 1.0;
};

namespace detail {

/// Integral of exp(-x^2/x0^2) g(x) over the line.
template <class F>
cplx gaussian_integral(F&& g, const DopplerEnsemble& ens, std::vector<double> features) {
  return std::sqrt(std::numbers::pi) * ens.x0 * average_quadrature(std::forward<F>(g), ens, features);
}

inline std::vector<double> features_of(const ResidueParams& p, const PoleRoots& r) {
  return {-p.fp, -p.f1, -p.f2, r.x1.real(), r.x2.real()};
}

inline NormalizedCoherence model_quadrature(const ResidueParams& p, const PoleRoots& r,
                                            const DopplerEnsemble& ens) {
  const Integrands I = integrands(p, r);
  const auto cuts = features_of(p, r);
  NormalizedCoherence out;
  out.roots = r;
  out.a1 = gaussian_integral(I.a1, ens, cuts);
  out.a2 = gaussian_integral(I.a2, ens, cuts);
  out.a3 = gaussian_integral(I.a3, ens, cuts);
  out.a4 = gaussian_integral(I.a4, ens, cuts);
  out.a5 = gaussian_integral(I.a5, ens, cuts);
  out.ab = out.a1 + out.a2 + out.a3 + out.a4 + out.a5;
  out.ac = gaussian_integral(I.ac, ens, cuts);
  out.bd = gaussian_integral(I.bd, ens, cuts);
  out.value = out.ab + out.ac + out.bd;
  out.outside_doppler_limit = !ens.doppler_limit();
  return out;
}

inline NormalizedCoherence assemble(const ResidueParams& p, const PoleRoots& r,
                                    const ResidueTerms& t, const DopplerEnsemble& ens,
                                    double a3_scale) {
  const double g = std::exp(-(p.fp * p.fp) / (ens.x0 * ens.x0));
  const Integrands I = integrands(p, r);
  const double re_a1 = gaussian_integral(I.re_a1, ens, {-p.fp, -p.f1}).real();
  NormalizedCoherence out;
  out.roots = r;
  out.a1 = cplx(re_a1, g * t.im_a1);
  out.a2 = g * t.a2;
  out.a3 = g * t.a3 * a3_scale;
  out.a4 = g * t.a4;
  out.a5 = g * t.a5;
  out.ab = out.a1 + out.a2 + out.a3 + out.a4 + out.a5;
  out.ac = g * t.ac;
  out.bd = g * t.bd;
  out.value = out.ab + out.ac + out.bd;
  out.outside_doppler_limit = !ens.doppler_limit();
  return out;
}

}  // namespace detail

/// Residue closed form for arbitrary drive detunings (A form). Coincident
/// poles are handed to quadrature of the same integrands.
inline NormalizedCoherence doppler_closed_general(const AtomRates& rates, const DriveConfig& drive,
                                                  const DopplerEnsemble& ens,
                                                  const ClosedFormOptions& opt = {}) {
  const auto p = ResidueParams::from(drive, rates.eps0());
  const PoleRoots r = pole_roots(drive, rates.eps0(), opt.roots);
  try {
    return detail::assemble(p, r, residue_terms(p, r, opt.transcription), ens, opt.a3_scale);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ConfluentPoles) throw;
  }
  auto out = detail::model_quadrature(p, r, ens);
  out.quadrature_fallback = true;
  return out;
}

/// Residue closed form on the resonant drive (f_1 = f_2 = 0 in `drive`) with
/// level (b) shifted by h. `drive.f_p()` is the bare probe detuning.
inline NormalizedCoherence sigma_ab_doppler_closed(const AtomRates& rates, const DriveConfig& drive,
                                                   const MagneticConfig& m,
                                                   const DopplerEnsemble& ens,
                                                   const ClosedFormOptions& opt = {}) {
  if (drive.f_1() != 0.0 || drive.f_2() != 0.0)
    throw Error(ErrorCode::InvalidArgument, "Zeeman closed form needs a resonant drive (f_1 = f_2 = 0)");
  const double e = rates.eps0();
  const double a2 = drive.alpha_sq();
  const auto p = ResidueParams::zeeman(drive.f_p(), m.h, a2, e);
  const PoleRoots r = pole_roots_zeeman(drive.f_p(), m.h, a2, e, opt.roots);
  try {
    const auto t = residue_terms_zeeman(drive.f_p(), m.h, a2, e, r, opt.transcription);
    return detail::assemble(p, r, t, ens, opt.a3_scale);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::ConfluentPoles) throw;
  }
  auto out = detail::model_quadrature(p, r, ens);
  out.quadrature_fallback = true;
  return out;
}

/// Direct Maxwell average in the same frame as sigma_ab_doppler_closed.
inline NormalizedCoherence sigma_ab_doppler_quadrature(const AtomRates& rates,
                                                       const DriveConfig& drive,
                                                       const MagneticConfig& m,
                                                       const DopplerEnsemble& ens,
                                                       Integrand which = Integrand::ResidueModel) {
  const double e = rates.eps0();
  // Reduces to apply_magnetic_substitution for a resonant drive.
  const DriveConfig frame = drive.with_detunings(drive.f_p() - m.h, drive.f_1(), drive.f_2() - m.h);
  const auto p = ResidueParams::from(frame, e);
  const PoleRoots r = pole_roots(frame, e);
  if (which == Integrand::ResidueModel) return detail::model_quadrature(p, r, ens);

  if (!(rates.n0() > 0.0))
    throw Error(ErrorCode::InvalidArgument, "exact average needs n0 > 0");
  const DriveConfig unit_probe = frame.with_alpha_p(cplx(1.0, 0.0));
  auto fn = [&](double x) {
    return closed_form::coherence_ab(rates, shift_velocity(unit_probe, x)) / rates.n0() /
           std::numbers::pi;
  };
  NormalizedCoherence out;
  out.roots = r;
  out.value = detail::gaussian_integral(fn, ens, detail::features_of(p, r));
  out.ab = out.value;
  out.outside_doppler_limit = !ens.doppler_limit();
  return out;
}

}  // namespace nvapor::doppler
