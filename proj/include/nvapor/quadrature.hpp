#pragma once

// Maxwell velocity averaging.
//
// The integrands are rational functions with features of width ~1 sitting on
// a Gaussian of width x0 ~ 100, so a fixed Gauss-Hermite rule would need
// millions of nodes to resolve them. The average is instead computed by
// adaptive Gauss-Kronrod on [-T x0, T x0], split at the caller's feature
// points, and confirmed by a second pass with the 31-point rule.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "nvapor/error.hpp"
#include "nvapor/model.hpp"

namespace nvapor {

struct QuadratureSettings {
  double tolerance = 1e-10;
  unsigned max_depth = 30;
  /// Integration range in units of x0; exp(-64) is far below double precision.
  double truncation = 8.0;
  /// Largest relative disagreement tolerated between the 15- and 31-point passes.
  double check_tolerance = 1e-6;
};

/// Maxwell width x0 = ku / gamma plus the quadrature controls.
struct DopplerEnsemble {
  double x0 = 100.0;
  QuadratureSettings quadrature{};

  static DopplerEnsemble make(double x0, QuadratureSettings q = {}) {
    if (!(x0 > 0.0) || !std::isfinite(x0))
      throw Error(ErrorCode::InvalidArgument, "Doppler width x0 must be positive");
    return DopplerEnsemble{x0, q};
  }

  /// Residue closed forms are only certified in this regime.
  bool doppler_limit() const { return x0 >= 10.0; }
};

inline double maxwell_weight(double x, double x0) {
  return std::exp(-(x * x) / (x0 * x0)) / (std::sqrt(std::numbers::pi) * x0);
}

namespace detail {

template <unsigned Points, class F>
cplx integrate_pieces(F& f, const std::vector<double>& cuts, const QuadratureSettings& q) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, Points>;
  cplx total{0.0, 0.0};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double err = 0.0;
    total += Rule::integrate(f, cuts[i], cuts[i + 1], q.max_depth, q.tolerance, &err);
  }
  return total;
}

inline std::vector<double> make_cuts(double lo, double hi, const std::vector<double>& features) {
  std::vector<double> cuts{lo, hi};
  for (double p : features) {
    if (std::isfinite(p) && p > lo && p < hi) cuts.push_back(p);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

}  // namespace detail

/// Integral of `f` over [lo, hi], split at `features` and cross-checked.
template <class F>
cplx integrate_checked(F&& f, double lo, double hi, const std::vector<double>& features,
                       const QuadratureSettings& q) {
  auto fn = [&](double x) -> cplx { return f(x); };
  const auto cuts = detail::make_cuts(lo, hi, features);
  const cplx coarse = detail::integrate_pieces<15>(fn, cuts, q);
  const cplx fine = detail::integrate_pieces<31>(fn, cuts, q);
  if (!std::isfinite(fine.real()) || !std::isfinite(fine.imag()))
    throw Error(ErrorCode::QuadratureFailure, "integrand produced a non-finite value");
  const double diff = std::abs(fine - coarse);
  if (diff > q.check_tolerance * std::max(std::abs(fine), 1e-300) && diff > 1e-14) {
    std::ostringstream msg;
    msg << "15- and 31-point passes disagree: " << coarse << " vs " << fine
        << " (relative " << diff / std::abs(fine) << ")";
    throw Error(ErrorCode::QuadratureFailure, msg.str());
  }
  return fine;
}

/// Maxwell average  integral W(x) f(x) dx  over the velocity class x.
template <class F>
cplx average_quadrature(F&& f, const DopplerEnsemble& ens, const std::vector<double>& features = {}) {
  const double x0 = ens.x0;
  const double span = ens.quadrature.truncation * x0;
  auto weighted = [&](double x) -> cplx { return maxwell_weight(x, x0) * cplx(f(x)); };
  std::vector<double> cuts = features;
  cuts.push_back(0.0);
  return integrate_checked(weighted, -span, span, cuts, ens.quadrature);
}

/// Unweighted integral over the real line for integrands decaying at least
/// like 1/x^2: checked pieces on [-L, L] plus mapped tails.
template <class F>
cplx integrate_real_line(F&& f, const std::vector<double>& features = {}, double tolerance = 1e-12) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
  auto fn = [&](double x) -> cplx { return f(x); };
  double reach = 100.0;
  for (double p : features)
    if (std::isfinite(p)) reach = std::max(reach, 10.0 * std::abs(p));
  QuadratureSettings q;
  q.tolerance = tolerance;
  std::vector<double> cuts = features;
  cuts.push_back(0.0);
  const cplx body = integrate_checked(fn, -reach, reach, cuts, q);
  double err = 0.0;
  const double inf = std::numeric_limits<double>::infinity();
  const cplx left = Rule::integrate(fn, -inf, -reach, 30, tolerance, &err);
  const cplx right = Rule::integrate(fn, reach, inf, 30, tolerance, &err);
  return body + left + right;
}

}  // namespace nvapor
