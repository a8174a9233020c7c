#pragma once

#include <vector>

#include "specmom/polyfam.hpp"

namespace specmom {

/// Ellipse with vertices +-1 and co-vertices +-i delta, equivalently the
/// image of |r| = rho under the Joukowski map rescaled to unit vertices.
class EllipseSpec {
 public:
  static EllipseSpec from_rho(double rho);
  static EllipseSpec from_delta(double delta);

  double rho() const noexcept { return rho_; }
  double delta() const noexcept { return delta_; }

 private:
  EllipseSpec(double rho, double delta) : rho_(rho), delta_(delta) {}
  double rho_;
  double delta_;
};

struct GrowthRow {
  int n;
  double value;
  double predicted;
  /// value / predicted
  double ratio;
};

struct GrowthReport {
  double eps = 0.0;
  std::vector<GrowthRow> rows;
  /// Set when the recurrence overflowed before n_max; rows stop there.
  bool truncated = false;
};

/// |P_n(1 + eps)| for n = 0..n_max next to (1 + sigma^{-1} sqrt(2 eps))^n.
GrowthReport empirical_growth(const ProbVector& p, double eps, int n_max);

/// max |P_n(z)| over sampled boundary points and n <= n_max.
double boundedness_scan(const ProbVector& p, int n_max, int boundary_samples);

/// max |P_n(cusp)| over all cusps and n <= n_max.
double cusp_scan(const ProbVector& p, int n_max);

/// (1 + 3 eps / (2 delta))^n: no polynomial of degree n bounded by 1 on the
/// ellipse with co-vertex delta can exceed this at 1 + eps.
double ellipse_upper_bound(double delta, double eps, int n);

struct EllipseBounds {
  double lower;
  double upper;
};

/// Inverse Joukowski map: the root of r^2 - 2 r z + 1 outside the unit disk.
/// Throws Errc::DomainError when both roots lie on the unit circle.
Complex inverse_joukowski(Complex z);

/// Sandwich on max |P(gamma)| over degree-n polynomials bounded by 1 on the
/// rescaled ellipse F_rho. gamma must not be enclosed by F_rho.
EllipseBounds ellipse_minmax_bounds(double rho, Complex gamma, int n);

/// |rho / gamma|^n, the min-max value on the disk of radius rho.
double disk_bound(Complex gamma, double rho, int n);

}  // namespace specmom
