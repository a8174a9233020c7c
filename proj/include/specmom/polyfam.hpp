#pragma once

#include <complex>
#include <vector>

#include "specmom/prob.hpp"

namespace specmom {

using Complex = std::complex<double>;

/// Magnitude beyond which a family value is reported as overflow.
inline constexpr double kOverflowLimit = 1e300;

/// P_0(z), ..., P_N(z) for one family at one point.
struct FamilyEval {
  ProbVector prob;
  Complex point;
  std::vector<Complex> values;
};

/// Evaluates the family by its defining recurrence
///   P_{k+1}(z) = (z / p_0) P_k(z) - sum_{j>=2} (p_j / p_0) P_{k+1-j}(z),
/// with P_k(z) = z^k for k < m. Throws Errc::Overflow once |P_k| > 1e300.
FamilyEval eval_family(const ProbVector& p, Complex z, int n);

/// Monic rescaling (lambda_star p_0)^k P_k(z / lambda_star), computed with the
/// momentum recurrence  P~_{k+1} = z P~_k - sum_j beta_{j-1} P~_{k+1-j}.
FamilyEval eval_monic(const ProbVector& p, double lambda_star, Complex z, int n);

/// Same recurrence as eval_family but stops silently at the last finite value
/// instead of throwing; the returned vector may be shorter than n + 1.
std::vector<Complex> family_values_until_overflow(const ProbVector& p, Complex z, int n);

/// Characteristic polynomial Q_z(r) of the recurrence, monic of degree m.
struct CharPoly {
  ProbVector prob;
  Complex point;
  /// coefficients[k] multiplies r^k; coefficients[m] == 1.
  std::vector<Complex> coefficients;

  int degree() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
  Complex operator()(Complex r) const;
  Complex derivative(Complex r) const;
};

CharPoly char_poly(const ProbVector& p, Complex z);

struct RootSet {
  std::vector<Complex> roots;
  /// max |Q_z(root)| over all roots.
  double residual = 0.0;
};

/// All m roots of Q_z: Durand-Kerner sweeps from a perturbed circle followed
/// by Newton polish, with clustered (multiple) roots refined on the
/// derivative. Throws Errc::NoConvergence if the scaled residual stays above
/// 1e-9.
RootSet char_roots(const ProbVector& p, Complex z);

/// Root of maximal modulus; ties go to the larger real part, then the larger
/// imaginary part.
Complex dominant_root(const ProbVector& p, Complex z);

/// psi(r) = sum_j p_j r^{1-j}, the exterior conformal map of the region.
Complex psi(const ProbVector& p, Complex r);

/// (1 + sigma^{-1} sqrt(2 eps))^n, the guaranteed growth rate at 1 + eps
/// without the family-dependent constant.
double growth_lower_bound(const ProbVector& p, double eps, int n);

}  // namespace specmom
