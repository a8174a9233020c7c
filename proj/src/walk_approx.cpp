#include "specmom/walk_approx.hpp"

#include <cmath>

#include "specmom/error.hpp"

namespace specmom {

namespace {

// Transition applied to a non-negative state; callers mirror it for k < 0.
template <class Emit>
void transitions_from(const ProbVector& p, int k, Emit&& emit) {
  const int m = p.order();
  if (k <= m - 2) {
    const double denom = 2.0 * k + 2.0;
    emit(k + 1, (2.0 * k + 1.0) / denom);
    emit(-(k + 1), 1.0 / denom);
  } else {
    for (int j = 0; j <= m; ++j) {
      if (p[j] > 0.0) emit(k + 1 - j, p[j]);
    }
  }
}

}  // namespace

WalkDistribution walk_step(const WalkDistribution& dist) {
  const int n = dist.steps + 1;
  WalkDistribution next{dist.prob, n, std::vector<double>(2 * static_cast<std::size_t>(n) + 1, 0.0)};
  for (int k = -dist.steps; k <= dist.steps; ++k) {
    const double w = dist.at(k);
    if (w == 0.0) continue;
    const int sign = k < 0 ? -1 : 1;
    transitions_from(dist.prob, sign * k, [&](int target, double prob) {
      next.mass[static_cast<std::size_t>(sign * target + n)] += w * prob;
    });
  }
  return next;
}

WalkDistribution walk_distribution(const ProbVector& p, int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "step count must be non-negative");
  WalkDistribution dist{p, 0, {1.0}};
  for (int i = 0; i < n; ++i) dist = walk_step(dist);
  return dist;
}

AlphaCoeffs alpha_coeffs(const ProbVector& p, int n) {
  const auto dist = walk_distribution(p, n);
  AlphaCoeffs out{n, std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0)};
  out.alpha[0] = dist.at(0);
  for (int k = 1; k <= n; ++k) out.alpha[k] = dist.at(k) + dist.at(-k);
  return out;
}

PowerApproximation approximate_power(const ProbVector& p, Complex z, int n, double t) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be at least 1");
  if (!(t > 0.0)) throw Error(Errc::InvalidArgument, "t must be positive");
  const auto alpha = alpha_coeffs(p, n).alpha;
  const double cutoff = std::floor(t * std::sqrt(static_cast<double>(n)));
  const int degree = cutoff >= n ? n : static_cast<int>(cutoff);
  const auto family = eval_family(p, z, degree);

  PowerApproximation out;
  out.degree = degree;
  for (int k = 0; k <= degree; ++k) out.approx += alpha[k] * family.values[k];
  for (int k = degree + 1; k <= n; ++k) out.tail_mass += alpha[k];
  return out;
}

double azuma_tail(int m, double t) {
  if (m < 2) throw Error(Errc::OrderTooSmall, "order must be >= 2");
  if (!(t > 0.0)) throw Error(Errc::InvalidArgument, "t must be positive");
  const double width = 2.0 * m - 1.0;
  return 2.0 * std::exp(-t * t / (2.0 * width * width));
}

}  // namespace specmom
