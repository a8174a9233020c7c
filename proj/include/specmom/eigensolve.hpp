#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "specmom/matio.hpp"
#include "specmom/prob.hpp"

namespace specmom {

/// Inputs shared by the three solvers. `prob` and `lambda_star` are ignored
/// by plain power iteration; `lambda_star` is required by the static method.
struct SolverConfig {
  ProbVector prob = ProbVector::validate(std::vector<double>{0.5, 0.0, 0.5});
  int max_iters = 100;
  std::optional<double> lambda_star;
  std::uint64_t seed = 0;
  bool record_trace = true;
  /// Stop once d_k <= tolerance; 0 runs all max_iters iterations.
  double tolerance = 0.0;
  /// Ground-truth eigenvector; enables relerr in the trace.
  std::optional<Vector> truth;
};

/// One row of the solver trace, indexed by the iteration k that produced
/// x_{k+1}. nu and d are always measured against A itself (warm-up steps on
/// p_0 A are rescaled) so that consecutive residuals are comparable.
struct IterationRecord {
  int k = 0;
  double h = 0.0;
  Complex nu;
  double d = 0.0;
  std::optional<double> rho;
  std::optional<double> r;
  std::vector<double> beta;
  std::optional<double> relerr;
};

struct IterationTrace {
  double h0 = 0.0;
  std::vector<IterationRecord> records;
};

struct SolveResult {
  Vector x;
  IterationTrace trace;
  int iterations = 0;
  bool converged = false;
  /// d_k hit exactly zero: x is an exact eigenvector and the ratio is undefined.
  bool stalled = false;
};

struct MomentumParams {
  /// beta[j-1] = beta_j = p_{j+1} p_0^j lambda^{j+1}, j = 1..m-1.
  std::vector<double> beta;
};

MomentumParams momentum_params(const ProbVector& p, double lambda_star);

/// Seeded standard-normal start vector, normalized to unit length.
Vector random_start(int n, std::uint64_t seed);

SolveResult power_iterate(const MatrixOperator& a, const Vector& v0, const SolverConfig& config);

/// Generalized momentum power method with fixed parameters built from
/// config.lambda_star. After N steps x_N is P_N(A / lambda_star) v0 normalized.
SolveResult static_momentum(const MatrixOperator& a, const Vector& v0, const SolverConfig& config);

/// Momentum method that re-estimates lambda_2 every step from the residual
/// ratio rho = d_k / d_{k-1} and the Rayleigh quotient.
SolveResult dynamic_momentum(const MatrixOperator& a, const Vector& v0, const SolverConfig& config);

/// rho(r) = exp(-sigma^{-1} sqrt(2 (1/r - 1))).
double rate_from_ratio(double sigma2, double r);
/// r(rho) = 1 / ((sigma^2 / 2) log(rho)^2 + 1), the inverse of rate_from_ratio.
double ratio_from_rate(double sigma2, double rho);
/// dr/drho in closed form.
double ratio_from_rate_derivative(double sigma2, double rho);
/// (-sigma^2 + sigma sqrt(sigma^2 + 4)) / 2: r(rho) contracts on [rho_1, 1]
/// for any rho_1 above this value.
double contraction_threshold(double sigma2);

/// ||w x - x_true|| / ||x_true|| with w = (x^* x_true) / (x^* x).
double relative_error(const Vector& x, const Vector& x_true);

}  // namespace specmom
