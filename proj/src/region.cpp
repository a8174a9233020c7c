#include "specmom/region.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "specmom/error.hpp"

namespace specmom {

std::string_view membership_name(Membership m) noexcept {
  switch (m) {
    case Membership::Interior: return "interior";
    case Membership::Boundary: return "boundary";
    case Membership::Exterior: return "exterior";
  }
  return "unknown";
}

Complex curve_point(const ProbVector& p, double t) {
  Complex z = 0.0;
  for (int j = 0; j <= p.order(); ++j) {
    if (p[j] != 0.0) z += p[j] * std::polar(1.0, (1.0 - j) * t);
  }
  return z;
}

Complex curve_derivative(const ProbVector& p, double t) {
  Complex dz = 0.0;
  for (int j = 0; j <= p.order(); ++j) {
    if (p[j] != 0.0) dz += p[j] * (1.0 - j) * Complex(0.0, 1.0) * std::polar(1.0, (1.0 - j) * t);
  }
  return dz;
}

BoundaryCurve boundary(const ProbVector& p, int samples) {
  if (samples < 16) throw Error(Errc::InvalidArgument, "boundary needs at least 16 samples");
  BoundaryCurve curve{p, {}};
  curve.samples.reserve(static_cast<std::size_t>(samples));
  const double step = 2.0 * std::numbers::pi / (samples - 1);
  for (int i = 0; i < samples; ++i) {
    const double t = i + 1 == samples ? 2.0 * std::numbers::pi : i * step;
    curve.samples.push_back({t, curve_point(p, t)});
  }
  return curve;
}

CuspSet cusps(const ProbVector& p) {
  CuspSet set;
  set.gcd_support = p.support();
  int g = 0;
  for (int j : set.gcd_support) g = std::gcd(g, j);
  set.count = g;
  for (int k = 0; k < g; ++k) {
    set.positions.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / g));
  }
  return set;
}

Membership contains(const ProbVector& p, Complex w, double tol) {
  const auto set = char_roots(p, w);
  double largest = 0.0;
  int outside = 0;
  for (const auto& r : set.roots) {
    const double mag = std::abs(r);
    largest = std::max(largest, mag);
    if (mag > 1.0 + tol) ++outside;
  }
  if (largest < 1.0 - tol) return Membership::Interior;
  if (largest > 1.0 + tol && outside == 1) return Membership::Exterior;
  return Membership::Boundary;
}

Membership scaled_contains(const ProbVector& p, double lambda_star, Complex w, double tol) {
  if (!(lambda_star > 0.0)) throw Error(Errc::InvalidArgument, "lambda_star must be positive");
  return contains(p, w / lambda_star, tol);
}

}  // namespace specmom
