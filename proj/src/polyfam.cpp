#include "specmom/polyfam.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "specmom/error.hpp"

namespace specmom {

namespace {

void check_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(Errc::InvalidArgument, std::string(what) + " is not finite");
  }
}

// Shared driver for the plain and monic recurrences. `lead` multiplies the
// newest value, `weights[j]` multiplies the value j steps back (j >= 2), and
// `initial(k)` seeds the first m entries.
template <class Initial>
std::vector<Complex> run_recurrence(int m, Complex lead, const std::vector<Complex>& weights,
                                    Initial initial, int n, bool throw_on_overflow) {
  std::vector<Complex> values;
  values.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Complex next;
    if (k < m) {
      next = initial(k);
    } else {
      next = lead * values[k - 1];
      for (int j = 2; j <= m; ++j) {
        if (weights[j] != 0.0) next -= weights[j] * values[k - j];
      }
    }
    if (!(std::abs(next) <= kOverflowLimit)) {
      if (throw_on_overflow) {
        throw Error(Errc::Overflow, "|P_" + std::to_string(k) + "| exceeds 1e300");
      }
      break;
    }
    values.push_back(next);
  }
  return values;
}

std::vector<Complex> family_impl(const ProbVector& p, Complex z, int n, bool throw_on_overflow) {
  check_finite(z, "evaluation point");
  if (n < 0) throw Error(Errc::InvalidArgument, "n must be non-negative");
  const int m = p.order();
  const double p0 = p.p0();
  std::vector<Complex> weights(static_cast<std::size_t>(m) + 1, 0.0);
  for (int j = 2; j <= m; ++j) weights[j] = p[j] / p0;
  return run_recurrence(
      m, z / p0, weights, [z](int k) { return std::pow(z, k); }, n, throw_on_overflow);
}

// Ascending-coefficient Horner evaluation of the d-th derivative.
Complex horner_derivative(const std::vector<Complex>& c, Complex r, int d) {
  const int deg = static_cast<int>(c.size()) - 1;
  Complex acc = 0.0;
  for (int k = deg; k >= d; --k) {
    double factor = 1.0;
    for (int i = 0; i < d; ++i) factor *= static_cast<double>(k - i);
    acc = acc * r + factor * c[k];
  }
  return acc;
}

double scaled_residual(const std::vector<Complex>& c, Complex r) {
  double scale = 0.0;
  double power = 1.0;
  const double mag = std::abs(r);
  for (const auto& ck : c) {
    scale += std::abs(ck) * power;
    power *= mag;
  }
  return std::abs(horner_derivative(c, r, 0)) / std::max(scale, 1e-300);
}

constexpr int kMaxSweeps = 500;
constexpr double kResidualTarget = 1e-9;

}  // namespace

FamilyEval eval_family(const ProbVector& p, Complex z, int n) {
  return FamilyEval{p, z, family_impl(p, z, n, true)};
}

std::vector<Complex> family_values_until_overflow(const ProbVector& p, Complex z, int n) {
  return family_impl(p, z, n, false);
}

FamilyEval eval_monic(const ProbVector& p, double lambda_star, Complex z, int n) {
  check_finite(z, "evaluation point");
  if (!(lambda_star > 0.0)) throw Error(Errc::InvalidArgument, "lambda_star must be positive");
  if (n < 0) throw Error(Errc::InvalidArgument, "n must be non-negative");
  const int m = p.order();
  const double p0 = p.p0();
  // weights[j] = beta_{j-1} = p_j p0^{j-1} lambda^j
  std::vector<Complex> weights(static_cast<std::size_t>(m) + 1, 0.0);
  for (int j = 2; j <= m; ++j) {
    weights[j] = p[j] * std::pow(p0, j - 1) * std::pow(lambda_star, j);
  }
  auto values = run_recurrence(
      m, z, weights, [z, p0](int k) { return std::pow(p0 * z, k); }, n, true);
  return FamilyEval{p, z, std::move(values)};
}

Complex CharPoly::operator()(Complex r) const { return horner_derivative(coefficients, r, 0); }

Complex CharPoly::derivative(Complex r) const { return horner_derivative(coefficients, r, 1); }

CharPoly char_poly(const ProbVector& p, Complex z) {
  const int m = p.order();
  const double p0 = p.p0();
  std::vector<Complex> c(static_cast<std::size_t>(m) + 1, 0.0);
  c[m] = 1.0;
  c[m - 1] = -z / p0;
  for (int j = 2; j <= m; ++j) c[m - j] = p[j] / p0;
  return CharPoly{p, z, std::move(c)};
}

RootSet char_roots(const ProbVector& p, Complex z) {
  check_finite(z, "evaluation point");
  const CharPoly q = char_poly(p, z);
  const auto& c = q.coefficients;
  const int m = q.degree();

  double radius = 0.0;
  for (int k = 0; k < m; ++k) {
    radius = std::max(radius, std::pow(std::abs(c[k]), 1.0 / (m - k)));
  }
  if (radius == 0.0) radius = 1.0;

  std::vector<Complex> roots(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / m + 0.4;
    roots[k] = radius * (1.0 + 0.05 * k / m) * std::polar(1.0, angle);
  }

  // Durand-Kerner (Weierstrass) sweeps.
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double max_step = 0.0;
    for (int i = 0; i < m; ++i) {
      Complex denom = 1.0;
      for (int j = 0; j < m; ++j) {
        if (j != i) denom *= roots[i] - roots[j];
      }
      if (denom == 0.0) denom = 1e-300;
      const Complex step = q(roots[i]) / denom;
      roots[i] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(roots[i])));
    }
    if (max_step < 1e-15) break;
  }

  // Newton polish, keeping a step only if it lowers |Q|.
  for (auto& r : roots) {
    for (int it = 0; it < 4; ++it) {
      const Complex d = q.derivative(r);
      if (d == 0.0) break;
      const Complex candidate = r - q(r) / d;
      if (std::abs(q(candidate)) < std::abs(q(r))) {
        r = candidate;
      } else {
        break;
      }
    }
  }

  // Clusters approximate a multiple root; refine them on the derivative of
  // matching order, which has a simple root there.
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> cluster{i};
    const double tol = 1e-6 * std::max(1.0, std::abs(roots[i]));
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (!used[j] && std::abs(roots[j] - roots[i]) < tol) cluster.push_back(j);
    }
    if (cluster.size() < 2) continue;
    for (auto idx : cluster) used[idx] = true;
    const int order = static_cast<int>(cluster.size()) - 1;
    Complex centre = 0.0;
    double worst = 0.0;
    for (auto idx : cluster) {
      centre += roots[idx];
      worst = std::max(worst, std::abs(q(roots[idx])));
    }
    centre /= static_cast<double>(cluster.size());
    for (int it = 0; it < 8; ++it) {
      const Complex d1 = horner_derivative(c, centre, order + 1);
      if (d1 == 0.0) break;
      const Complex step = horner_derivative(c, centre, order) / d1;
      centre -= step;
      if (std::abs(step) < 1e-17 * std::max(1.0, std::abs(centre))) break;
    }
    if (std::abs(q(centre)) <= std::max(worst, 4.0 * std::numeric_limits<double>::epsilon())) {
      for (auto idx : cluster) roots[idx] = centre;
    }
  }

  RootSet out;
  double worst_scaled = 0.0;
  for (const auto& r : roots) {
    out.residual = std::max(out.residual, std::abs(q(r)));
    worst_scaled = std::max(worst_scaled, scaled_residual(c, r));
  }
  if (!(worst_scaled <= kResidualTarget)) {
    throw Error(Errc::NoConvergence,
                "characteristic roots did not converge, best residual " + std::to_string(out.residual));
  }
  out.roots = std::move(roots);
  return out;
}

Complex dominant_root(const ProbVector& p, Complex z) {
  const auto set = char_roots(p, z);
  Complex best = set.roots.front();
  for (const auto& r : set.roots) {
    const double a = std::abs(r);
    const double b = std::abs(best);
    const double tie = 1e-12 * std::max(1.0, b);
    if (a > b + tie) {
      best = r;
    } else if (std::abs(a - b) <= tie) {
      if (r.real() > best.real() || (r.real() == best.real() && r.imag() > best.imag())) best = r;
    }
  }
  return best;
}

Complex psi(const ProbVector& p, Complex r) {
  if (r == 0.0) throw Error(Errc::ZeroArgument, "psi is undefined at r = 0");
  Complex sum = 0.0;
  const Complex inv = 1.0 / r;
  Complex power = r;  // r^{1-j} for j = 0
  for (int j = 0; j <= p.order(); ++j) {
    if (p[j] != 0.0) sum += p[j] * power;
    power *= inv;
  }
  return sum;
}

double growth_lower_bound(const ProbVector& p, double eps, int n) {
  if (!(eps > 0.0)) throw Error(Errc::InvalidArgument, "eps must be positive");
  return std::pow(1.0 + std::sqrt(2.0 * eps) / p.sigma(), n);
}

}  // namespace specmom
