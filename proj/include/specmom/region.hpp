#pragma once

#include <string_view>
#include <vector>

#include "specmom/polyfam.hpp"

namespace specmom {

struct CurveSample {
  double t;
  Complex z;
};

/// Boundary of the stability region, z(t) = sum_j p_j e^{i(1-j)t}, sampled on
/// a uniform grid over [0, 2pi] with both endpoints included.
struct BoundaryCurve {
  ProbVector prob;
  std::vector<CurveSample> samples;
};

struct CuspSet {
  int count = 0;
  std::vector<Complex> positions;
  std::vector<int> gcd_support;
};

enum class Membership { Interior, Boundary, Exterior };

std::string_view membership_name(Membership m) noexcept;

inline constexpr double kMembershipTolerance = 1e-8;

Complex curve_point(const ProbVector& p, double t);
Complex curve_derivative(const ProbVector& p, double t);

BoundaryCurve boundary(const ProbVector& p, int samples);

/// Cusps sit at the count-th roots of unity, count = gcd{j >= 2 : p_j > 0}.
CuspSet cusps(const ProbVector& p);

/// Classifies w by the largest root modulus of Q_w: all roots inside the unit
/// circle means interior, a single root outside means exterior. Regions with
/// empty interior (the Chebyshev segment) never report Interior.
Membership contains(const ProbVector& p, Complex w, double tol = kMembershipTolerance);

/// Membership of w in lambda_star times the region.
Membership scaled_contains(const ProbVector& p, double lambda_star, Complex w,
                           double tol = kMembershipTolerance);

}  // namespace specmom
