#include "specmom/eigensolve.hpp"

#include <cmath>
#include <deque>
#include <functional>
#include <random>
#include <string>

#include "specmom/error.hpp"

namespace specmom {

namespace {

constexpr double kCollapse = 1e-300;

double norm2(const Vector& x) {
  double s = 0.0;
  for (const auto& v : x) s += std::norm(v);
  return std::sqrt(s);
}

// <v, x> = x^* v
Complex inner(const Vector& v, const Vector& x) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += std::conj(x[i]) * v[i];
  return s;
}

double residual_norm(const Vector& v, Complex nu, const Vector& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += std::norm(v[i] - nu * x[i]);
  return std::sqrt(s);
}

void check_start(const MatrixOperator& a, const Vector& v0) {
  if (static_cast<int>(v0.size()) != a.dim()) {
    throw Error(Errc::DimensionMismatch, "start vector has " + std::to_string(v0.size()) +
                                             " entries, operator is " + std::to_string(a.dim()) + "-dimensional");
  }
}

// Normalizes u in place into x and returns its norm.
double normalize_into(Vector& u, int k) {
  const double h = norm2(u);
  if (!std::isfinite(h)) {
    throw Error(Errc::NonFiniteIterate, "iterate " + std::to_string(k + 1) + " is not finite");
  }
  if (h < kCollapse) throw Error(Errc::ZeroVector, "iterate " + std::to_string(k + 1) + " collapsed to zero");
  for (auto& v : u) v /= h;
  return h;
}

// Decides the momentum parameters for main-loop step k. Arguments: k, nu_k,
// d_k, and the record being filled (for rho / r diagnostics).
using BetaRule = std::function<std::vector<double>(int, Complex, double, IterationRecord&)>;

SolveResult momentum_loop(const MatrixOperator& a, const Vector& v0, const SolverConfig& config,
                          const BetaRule& rule, bool stop_on_stall) {
  check_start(a, v0);
  const ProbVector& p = config.prob;
  const int m = p.order();
  const int n_iters = config.max_iters;
  if (n_iters < m) {
    throw Error(Errc::InvalidArgument, "iteration count " + std::to_string(n_iters) + " is below the order " +
                                           std::to_string(m));
  }
  const double p0 = p.p0();

  SolveResult result;
  Vector x = v0;
  result.trace.h0 = normalize_into(x, -1);

  // history[j-1] = x_{k-j}; hist_h[j-1] = h_{k+1-j}.
  std::deque<Vector> history;
  std::deque<double> hist_h;
  Vector v;
  for (int k = 0; k < n_iters; ++k) {
    a.apply(x, v);
    IterationRecord rec;
    rec.k = k;
    rec.nu = inner(v, x);
    rec.d = residual_norm(v, rec.nu, x);

    if (config.tolerance > 0.0 && rec.d <= config.tolerance) {
      result.converged = true;
    } else if (stop_on_stall && rec.d == 0.0) {
      result.stalled = true;
    }
    if (result.converged || result.stalled) {
      if (config.truth) rec.relerr = relative_error(x, *config.truth);
      rec.h = norm2(v);
      if (config.record_trace) result.trace.records.push_back(std::move(rec));
      result.iterations = k;
      result.x = std::move(x);
      return result;
    }

    Vector u = v;
    if (k < m - 1) {
      for (auto& e : u) e *= p0;
    } else {
      rec.beta = rule(k, rec.nu, rec.d, rec);
      double big_h = 1.0;
      for (int j = 1; j <= m - 1; ++j) {
        big_h *= hist_h[j - 1];
        const double coeff = rec.beta[j - 1] / big_h;
        if (coeff == 0.0) continue;
        const Vector& old = history[j - 1];
        for (std::size_t i = 0; i < u.size(); ++i) u[i] -= coeff * old[i];
      }
    }
    rec.h = normalize_into(u, k);

    history.push_front(std::move(x));
    hist_h.push_front(rec.h);
    if (static_cast<int>(history.size()) > m) history.pop_back();
    if (static_cast<int>(hist_h.size()) > m) hist_h.pop_back();
    x = std::move(u);

    if (config.truth) rec.relerr = relative_error(x, *config.truth);
    if (config.record_trace) result.trace.records.push_back(std::move(rec));
  }
  result.iterations = n_iters;
  result.x = std::move(x);
  return result;
}

}  // namespace

MomentumParams momentum_params(const ProbVector& p, double lambda_star) {
  if (!(lambda_star > 0.0)) throw Error(Errc::InvalidArgument, "lambda_star must be positive");
  const int m = p.order();
  MomentumParams out;
  out.beta.resize(static_cast<std::size_t>(m) - 1);
  for (int j = 1; j <= m - 1; ++j) {
    out.beta[j - 1] = p[j + 1] * std::pow(p.p0(), j) * std::pow(lambda_star, j + 1);
  }
  return out;
}

Vector random_start(int n, std::uint64_t seed) {
  if (n <= 0) throw Error(Errc::InvalidArgument, "dimension must be positive");
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(static_cast<std::size_t>(n));
  for (auto& e : v) e = normal(engine);
  const double h = norm2(v);
  for (auto& e : v) e /= h;
  return v;
}

SolveResult power_iterate(const MatrixOperator& a, const Vector& v0, const SolverConfig& config) {
  check_start(a, v0);
  if (config.max_iters < 0) throw Error(Errc::InvalidArgument, "iteration count must be non-negative");
  SolveResult result;
  Vector x = v0;
  result.trace.h0 = normalize_into(x, -1);
  Vector v;
  for (int k = 0; k < config.max_iters; ++k) {
    a.apply(x, v);
    IterationRecord rec;
    rec.k = k;
    rec.nu = inner(v, x);
    rec.d = residual_norm(v, rec.nu, x);
    if (config.tolerance > 0.0 && rec.d <= config.tolerance) {
      result.converged = true;
      rec.h = norm2(v);
      if (config.truth) rec.relerr = relative_error(x, *config.truth);
      if (config.record_trace) result.trace.records.push_back(std::move(rec));
      result.iterations = k;
      result.x = std::move(x);
      return result;
    }
    rec.h = normalize_into(v, k);
    std::swap(x, v);
    if (config.truth) rec.relerr = relative_error(x, *config.truth);
    if (config.record_trace) result.trace.records.push_back(std::move(rec));
  }
  result.iterations = config.max_iters;
  result.x = std::move(x);
  return result;
}

SolveResult static_momentum(const MatrixOperator& a, const Vector& v0, const SolverConfig& config) {
  if (!config.lambda_star) throw Error(Errc::InvalidArgument, "static momentum needs lambda_star");
  const auto params = momentum_params(config.prob, *config.lambda_star);
  return momentum_loop(
      a, v0, config, [&](int, Complex, double, IterationRecord&) { return params.beta; }, false);
}

SolveResult dynamic_momentum(const MatrixOperator& a, const Vector& v0, const SolverConfig& config) {
  const ProbVector& p = config.prob;
  const int m = p.order();
  const double sigma2 = p.variance();
  const double rho_floor = contraction_threshold(sigma2) + 1e-6;
  double prev_d = -1.0;
  const BetaRule rule = [&](int k, Complex nu, double d, IterationRecord& rec) {
    std::vector<double> beta(static_cast<std::size_t>(m) - 1, 0.0);
    const double last = prev_d;
    prev_d = d;
    // The first ratio needs two residuals from the main loop.
    if (k < m || !(last > 0.0)) return beta;
    double rho = std::min(d / last, 1.0);
    rho = std::max(rho, rho_floor);
    const double r = ratio_from_rate(sigma2, rho);
    rec.rho = rho;
    rec.r = r;
    const double lambda = nu.real() * r;
    for (int j = 1; j <= m - 1; ++j) {
      beta[j - 1] = p[j + 1] * std::pow(p.p0(), j) * std::pow(lambda, j + 1);
    }
    return beta;
  };
  return momentum_loop(a, v0, config, rule, true);
}

double rate_from_ratio(double sigma2, double r) {
  if (!(r > 0.0 && r <= 1.0)) throw Error(Errc::InvalidArgument, "ratio must lie in (0, 1]");
  if (!(sigma2 > 0.0)) throw Error(Errc::InvalidArgument, "variance must be positive");
  return std::exp(-std::sqrt(2.0 * (1.0 / r - 1.0) / sigma2));
}

double ratio_from_rate(double sigma2, double rho) {
  if (!(rho > 0.0 && rho <= 1.0)) throw Error(Errc::InvalidArgument, "rate must lie in (0, 1]");
  if (!(sigma2 > 0.0)) throw Error(Errc::InvalidArgument, "variance must be positive");
  const double l = std::log(rho);
  return 1.0 / (0.5 * sigma2 * l * l + 1.0);
}

double ratio_from_rate_derivative(double sigma2, double rho) {
  if (!(rho > 0.0 && rho <= 1.0)) throw Error(Errc::InvalidArgument, "rate must lie in (0, 1]");
  const double l = std::log(rho);
  const double base = 0.5 * sigma2 * l * l + 1.0;
  return sigma2 * (-l) / (rho * base * base);
}

double contraction_threshold(double sigma2) {
  if (!(sigma2 > 0.0)) throw Error(Errc::InvalidArgument, "variance must be positive");
  const double sigma = std::sqrt(sigma2);
  return (-sigma2 + sigma * std::sqrt(sigma2 + 4.0)) / 2.0;
}

double relative_error(const Vector& x, const Vector& x_true) {
  if (x.size() != x_true.size()) throw Error(Errc::DimensionMismatch, "vectors differ in length");
  const double xx = std::norm(norm2(x));
  const double tt = norm2(x_true);
  if (!(xx > 0.0) || !(tt > 0.0)) throw Error(Errc::ZeroVector, "relative error of a zero vector");
  const Complex omega = inner(x_true, x) / xx;
  return residual_norm(x_true, omega, x) / tt;
}

}  // namespace specmom
