#pragma once

// Exact steady state of the four-level master equation, used as the reference
// for every closed-form expression. The ten element equations and the six
// conjugates of the coherence equations are assembled into one 16x16 complex
// system and solved by LU with partial pivoting, with no weak-probe expansion.

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "nvapor/error.hpp"
#include "nvapor/model.hpp"

namespace nvapor::liouville {

enum Element : int { aa, bb, cc, dd, ab, ca, ad, cb, bd, cd, ba, ac, da, bc, db, dc };

inline constexpr int kDim = 16;

/// Index of the Hermitian partner of an element (populations map to themselves).
constexpr int conjugate_of(int e) {
  constexpr std::array<int, kDim> partner{aa, bb, cc, dd, ba, ac, da, bc, db, dc,
                                          ab, ca, ad, cb, bd, cd};
  return partner[static_cast<std::size_t>(e)];
}

using Real = long double;
using Scalar = std::complex<Real>;
using Matrix = Eigen::Matrix<Scalar, kDim, kDim>;
using Vector = Eigen::Matrix<Scalar, kDim, 1>;

/// d(sigma)/dt = matrix * sigma + pump. Rows follow `Element` order.
struct LinearSystem {
  Matrix matrix = Matrix::Zero();
  Vector pump = Vector::Zero();

  Real coefficient_scale() const { return matrix.cwiseAbs().maxCoeff(); }

  /// Largest row residual of the stationarity condition at `x`.
  Real residual(const Vector& x) const { return (matrix * x + pump).cwiseAbs().maxCoeff(); }
};

inline LinearSystem build_steady_system(const AtomRates& rates, const DriveConfig& drive) {
  const Real g = rates.spontaneous();
  const Real g0 = rates.transit();
  const Real mu = rates.pump();
  const Scalar I(0, 1);
  const Scalar O(drive.alpha().real(), drive.alpha().imag());
  const Scalar Op(drive.alpha_p().real(), drive.alpha_p().imag());
  const Scalar Oc = std::conj(O);
  const Scalar Opc = std::conj(Op);
  const Real fp = drive.f_p(), f1 = drive.f_1(), f2 = drive.f_2();

  LinearSystem sys;
  auto& m = sys.matrix;

  m(aa, aa) = -(2 * g + g0);
  m(aa, ba) = I * Op;
  m(aa, ab) = -I * Opc;
  m(aa, ca) = I * O;
  m(aa, ac) = -I * Oc;

  m(bb, aa) = g;
  m(bb, bb) = -g0;
  m(bb, dd) = 2 * g;
  m(bb, ba) = -I * Op;
  m(bb, ab) = I * Opc;
  m(bb, db) = I * Oc;
  m(bb, bd) = -I * O;
  sys.pump(bb) = mu;

  m(cc, cc) = -g0;
  m(cc, aa) = g;
  m(cc, ac) = I * Oc;
  m(cc, ca) = -I * O;
  sys.pump(cc) = mu;

  m(dd, dd) = -(2 * g + g0);
  m(dd, bd) = I * O;
  m(dd, db) = -I * Oc;

  m(ab, ab) = -(g + g0 + I * fp);
  m(ab, bb) = I * Op;
  m(ab, aa) = -I * Op;
  m(ab, cb) = I * O;
  m(ab, ad) = -I * O;

  m(ca, ca) = -(g + g0 - I * f1);
  m(ca, cb) = -I * Opc;
  m(ca, cc) = -I * Oc;
  m(ca, aa) = I * Oc;

  m(ad, ad) = -(2 * g + g0 + I * fp - I * f2);
  m(ad, bd) = I * Op;
  m(ad, cd) = I * O;
  m(ad, ab) = -I * Oc;

  m(cb, cb) = -(g0 + I * fp - I * f1);
  m(cb, ca) = -I * Op;
  m(cb, ab) = I * Oc;
  m(cb, cd) = -I * O;

  m(bd, bd) = -(g + g0 - I * f2);
  m(bd, dd) = I * Oc;
  m(bd, bb) = -I * Oc;
  m(bd, ad) = I * Opc;

  m(cd, cd) = -(g + g0 + I * fp - I * f1 - I * f2);
  m(cd, ad) = I * Oc;
  m(cd, cb) = -I * Oc;

  for (int row = ab; row <= cd; ++row) {
    const int partner = conjugate_of(row);
    for (int col = 0; col < kDim; ++col)
      m(partner, conjugate_of(col)) = std::conj(m(row, col));
    sys.pump(partner) = std::conj(sys.pump(row));
  }
  return sys;
}

/// Populations and rotating-frame coherences of the stationary state. `raw`
/// keeps all sixteen solved entries, including the conjugate unknowns.
struct DensityMatrix {
  double sigma_aa = 0, sigma_bb = 0, sigma_cc = 0, sigma_dd = 0;
  cplx sigma_ab, sigma_ca, sigma_ad, sigma_cb, sigma_bd, sigma_cd;
  Vector raw = Vector::Zero();
  double residual = 0.0;
  double rcond = 0.0;

  double population_sum() const { return sigma_aa + sigma_bb + sigma_cc + sigma_dd; }

  /// n_ik = sigma_ii - sigma_kk with levels indexed a=0 .. d=3.
  double population_difference(int i, int k) const {
    const std::array<double, 4> p{sigma_aa, sigma_bb, sigma_cc, sigma_dd};
    return p.at(static_cast<std::size_t>(i)) - p.at(static_cast<std::size_t>(k));
  }

  /// Full 4x4 matrix in (a, b, c, d) order built from the solved entries.
  Eigen::Matrix4cd full() const {
    auto at = [&](int e) {
      return cplx(static_cast<double>(raw(e).real()), static_cast<double>(raw(e).imag()));
    };
    Eigen::Matrix4cd rho;
    rho << at(aa), at(ab), at(ac), at(ad),
           at(ba), at(bb), at(bc), at(bd),
           at(ca), at(cb), at(cc), at(cd),
           at(da), at(db), at(dc), at(dd);
    return rho;
  }
};

inline constexpr double kMinRcond = 1e-12;

inline DensityMatrix solve_steady_state(const AtomRates& rates, const DriveConfig& drive) {
  const LinearSystem sys = build_steady_system(rates, drive);
  const Eigen::PartialPivLU<Matrix> lu(sys.matrix);
  const double rcond = static_cast<double>(lu.rcond());
  if (!(rcond > kMinRcond))
    throw Error(ErrorCode::DegenerateParameters,
                "steady-state system is singular or ill-conditioned (rcond=" +
                    std::to_string(rcond) + ")");
  const Vector x = lu.solve(-sys.pump);

  auto to_c = [](const Scalar& s) {
    return cplx(static_cast<double>(s.real()), static_cast<double>(s.imag()));
  };
  DensityMatrix rho;
  rho.raw = x;
  rho.rcond = rcond;
  rho.residual = static_cast<double>(sys.residual(x));
  for (int p = aa; p <= dd; ++p) {
    if (std::abs(static_cast<double>(x(p).imag())) > 1e-10 * (1.0 + rates.n0()))
      throw Error(ErrorCode::DegenerateParameters, "population acquired an imaginary part");
  }
  rho.sigma_aa = static_cast<double>(x(aa).real());
  rho.sigma_bb = static_cast<double>(x(bb).real());
  rho.sigma_cc = static_cast<double>(x(cc).real());
  rho.sigma_dd = static_cast<double>(x(dd).real());
  rho.sigma_ab = to_c(x(ab));
  rho.sigma_ca = to_c(x(ca));
  rho.sigma_ad = to_c(x(ad));
  rho.sigma_cb = to_c(x(cb));
  rho.sigma_bd = to_c(x(bd));
  rho.sigma_cd = to_c(x(cd));
  return rho;
}

/// sigma_ab / alpha_p from an exact solve at the configured probe amplitude.
inline cplx weak_probe_coherence(const AtomRates& rates, const DriveConfig& drive) {
  if (!(std::abs(drive.alpha_p()) > 0.0))
    throw Error(ErrorCode::InvalidArgument, "weak-probe coherence needs a non-zero probe");
  return solve_steady_state(rates, drive).sigma_ab / drive.alpha_p();
}

/// Richardson extrapolation of sigma_ab / alpha_p to zero probe. The probe
/// correction is quadratic, so (4 s(alpha_p / 2) - s(alpha_p)) / 3 removes it.
inline cplx weak_probe_limit(const AtomRates& rates, const DriveConfig& drive) {
  const cplx full = weak_probe_coherence(rates, drive);
  const cplx half = weak_probe_coherence(rates, drive.with_alpha_p(drive.alpha_p() * 0.5));
  return (4.0 * half - full) / 3.0;
}

}  // namespace nvapor::liouville
