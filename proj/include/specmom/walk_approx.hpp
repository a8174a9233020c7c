#pragma once

#include <vector>

#include "specmom/polyfam.hpp"

namespace specmom {

/// Exact law of the martingale Y_n whose expectation E P_{Y_n}(z) equals z^n.
///
/// From a state k in {0, ..., m-2} the walk moves to k+1 with probability
/// (2k+1)/(2k+2) and to -(k+1) with probability 1/(2k+2); from k >= m-1 it
/// moves to k+1-j with probability p_j; negative states mirror positive ones.
struct WalkDistribution {
  ProbVector prob;
  int steps = 0;
  /// mass[k + steps] = P(Y_n = k) for k in [-steps, steps].
  std::vector<double> mass;

  double at(int k) const {
    return (k < -steps || k > steps) ? 0.0 : mass[static_cast<std::size_t>(k + steps)];
  }
};

struct AlphaCoeffs {
  int steps = 0;
  /// alpha[k] = P(|Y_n| = k), k = 0..n.
  std::vector<double> alpha;
};

struct PowerApproximation {
  Complex approx;
  int degree = 0;
  double tail_mass = 0.0;
};

WalkDistribution walk_distribution(const ProbVector& p, int n);

/// Advances a distribution by one step of the walk.
WalkDistribution walk_step(const WalkDistribution& dist);

AlphaCoeffs alpha_coeffs(const ProbVector& p, int n);

/// Degree floor(t sqrt(n)) truncation of sum_k alpha_k P_k(z) (capped at n).
PowerApproximation approximate_power(const ProbVector& p, Complex z, int n, double t);

/// 2 exp(-t^2 / (2 (2m-1)^2)): Azuma bound on P(|Y_n| >= t sqrt(n)).
double azuma_tail(int m, double t);

}  // namespace specmom
