#include "specmom/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specmom/error.hpp"
#include "specmom/parallel.hpp"
#include "specmom/region.hpp"

namespace specmom {

EllipseSpec EllipseSpec::from_rho(double rho) {
  if (!(rho > 1.0) || !std::isfinite(rho)) throw Error(Errc::DomainError, "ellipse radius must exceed 1");
  const double r2 = rho * rho;
  return EllipseSpec(rho, (r2 - 1.0) / (r2 + 1.0));
}

EllipseSpec EllipseSpec::from_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error(Errc::DomainError, "co-vertex must lie in (0, 1)");
  return EllipseSpec(std::sqrt((1.0 + delta) / (1.0 - delta)), delta);
}

GrowthReport empirical_growth(const ProbVector& p, double eps, int n_max) {
  if (!(eps > 0.0)) throw Error(Errc::InvalidArgument, "eps must be positive");
  if (n_max < 10) throw Error(Errc::InvalidArgument, "n_max must be at least 10");
  const auto values = family_values_until_overflow(p, Complex(1.0 + eps, 0.0), n_max);
  GrowthReport report;
  report.eps = eps;
  report.truncated = static_cast<int>(values.size()) < n_max + 1;
  const double rate = 1.0 + std::sqrt(2.0 * eps) / p.sigma();
  double predicted = 1.0;
  for (std::size_t n = 0; n < values.size(); ++n) {
    const double value = std::abs(values[n]);
    report.rows.push_back({static_cast<int>(n), value, predicted, value / predicted});
    predicted *= rate;
  }
  return report;
}

double boundedness_scan(const ProbVector& p, int n_max, int boundary_samples) {
  if (n_max < 1) throw Error(Errc::InvalidArgument, "n_max must be at least 1");
  if (boundary_samples < 64) throw Error(Errc::InvalidArgument, "need at least 64 boundary samples");
  const auto curve = boundary(p, boundary_samples);
  std::vector<double> best(curve.samples.size(), 0.0);
  parallel_for(curve.samples.size(), [&](std::size_t i) {
    const auto values = family_values_until_overflow(p, curve.samples[i].z, n_max);
    double local = values.size() < static_cast<std::size_t>(n_max) + 1 ? HUGE_VAL : 0.0;
    for (const auto& v : values) local = std::max(local, std::abs(v));
    best[i] = local;
  });
  return *std::max_element(best.begin(), best.end());
}

double cusp_scan(const ProbVector& p, int n_max) {
  if (n_max < 1) throw Error(Errc::InvalidArgument, "n_max must be at least 1");
  double best = 0.0;
  for (const auto& c : cusps(p).positions) {
    for (const auto& v : eval_family(p, c, n_max).values) best = std::max(best, std::abs(v));
  }
  return best;
}

double ellipse_upper_bound(double delta, double eps, int n) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error(Errc::DomainError, "delta must lie in (0, 1)");
  if (!(eps > 0.0 && eps < 1.0)) throw Error(Errc::DomainError, "eps must lie in (0, 1)");
  if (n < 0) throw Error(Errc::DomainError, "n must be non-negative");
  return std::pow(1.0 + 1.5 * eps / delta, n);
}

Complex inverse_joukowski(Complex z) {
  const Complex root = std::sqrt(z * z - 1.0);
  const Complex a = z + root;
  const Complex b = z - root;
  const Complex big = std::abs(a) >= std::abs(b) ? a : b;
  if (std::abs(big) <= 1.0 + 1e-14) {
    throw Error(Errc::DomainError, "point lies on the segment [-1, 1]");
  }
  return big;
}

EllipseBounds ellipse_minmax_bounds(double rho, Complex gamma, int n) {
  if (!(rho > 1.0)) throw Error(Errc::DomainError, "rho must exceed 1");
  if (n < 0) throw Error(Errc::DomainError, "n must be non-negative");
  const Complex s = inverse_joukowski(gamma * (rho + 1.0 / rho) / 2.0);
  const double mag = std::abs(s);
  if (mag < rho) throw Error(Errc::GammaInside, "gamma is enclosed by the ellipse");
  const double upper = std::pow(mag / rho, n);
  // |s^n + s^-n| / (rho^n + rho^-n) factored through upper: the two bounds
  // differ by O(rho^-2n), which the direct quotient loses to rounding.
  const double lower = upper * (std::abs(1.0 + std::pow(s, -2 * n)) / (1.0 + std::pow(rho, -2.0 * n)));
  return {lower, upper};
}

double disk_bound(Complex gamma, double rho, int n) {
  if (!(rho > 0.0) || !(std::abs(gamma) >= rho)) {
    throw Error(Errc::DomainError, "need |gamma| >= rho > 0");
  }
  if (n < 0) throw Error(Errc::DomainError, "n must be non-negative");
  return std::pow(rho / std::abs(gamma), n);
}

}  // namespace specmom
