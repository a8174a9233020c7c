#include "specmom/selfcheck.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "specmom/analysis.hpp"
#include "specmom/eigensolve.hpp"
#include "specmom/error.hpp"
#include "specmom/matio.hpp"
#include "specmom/polyfam.hpp"
#include "specmom/region.hpp"
#include "specmom/walk_approx.hpp"

namespace specmom {

namespace {

CheckResult check(std::string name, const std::function<std::string()>& body) {
  CheckResult r{std::move(name), false, {}};
  try {
    r.detail = body();
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  return r;
}

std::vector<ProbVector> sample_vectors() {
  return {hypocycloid(2), hypocycloid(3), hypocycloid(4), hypocycloid(5),
          parse_prob("7/12,0,1/4,1/6"), parse_prob("5/8,0,1/4,0,1/8")};
}

}  // namespace

std::vector<CheckResult> run_selfcheck() {
  std::vector<CheckResult> out;

  out.push_back(check("variance table", [] {
    const double expected[] = {2.0, 1.0, 2.0 / 3.0, 0.5, 4.0 / 3.0, 1.0};
    const auto ps = sample_vectors();
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (std::abs(2.0 / ps[i].variance() - expected[i]) > 1e-12) return std::string("row ") + std::to_string(i);
    }
    return std::string();
  }));

  out.push_back(check("P_n(1) = 1", [] {
    for (const auto& p : sample_vectors()) {
      for (const auto& v : eval_family(p, 1.0, 1000).values) {
        if (std::abs(v - 1.0) > 1e-9) return std::string("drift at z = 1");
      }
    }
    return std::string();
  }));

  out.push_back(check("cusp counts", [] {
    const int expected[] = {2, 3, 4, 5, 1, 2};
    const auto ps = sample_vectors();
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const auto cs = cusps(ps[i]);
      if (cs.count != expected[i]) return std::string("vector ") + std::to_string(i);
      for (const auto& c : cs.positions) {
        if (std::abs(dominant_root(ps[i], c)) > 1.0 + 1e-6) return std::string("cusp off the boundary");
      }
    }
    return std::string();
  }));

  out.push_back(check("walk reconstructs z^n", [] {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (const auto& p : sample_vectors()) {
      for (int n = 1; n <= 30; n += 7) {
        const auto alpha = alpha_coeffs(p, n).alpha;
        const double t = 2.0 * 3.141592653589793 * u(rng);
        const Complex z = 0.9 * u(rng) * curve_point(p, t);
        const auto fam = eval_family(p, z, n).values;
        Complex sum = 0.0;
        for (int k = 0; k <= n; ++k) sum += alpha[k] * fam[k];
        if (std::abs(sum - std::pow(z, n)) > 1e-9) return std::string("mismatch");
      }
    }
    return std::string();
  }));

  out.push_back(check("rate map round trip", [] {
    for (double s2 : {0.5, 1.0, 2.0, 4.0}) {
      for (int i = 1; i <= 100; ++i) {
        const double r = i / 100.0;
        if (std::abs(ratio_from_rate(s2, rate_from_ratio(s2, r)) - r) > 1e-12) return std::string("drift");
      }
    }
    return std::string();
  }));

  out.push_back(check("momentum iterate matches polynomial", [] {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g(0.0, 1.0);
    const int n = 6;
    DenseMatrix dm{n, std::vector<Complex>(n * n)};
    for (auto& v : dm.values) v = g(rng) / std::sqrt(static_cast<double>(n));
    const MatrixOperator a(dm);
    const auto p = hypocycloid(4);
    const double lambda = 0.8;
    SolverConfig cfg;
    cfg.prob = p;
    cfg.max_iters = 20;
    cfg.lambda_star = lambda;
    const Vector v0 = random_start(n, 3);
    const auto res = static_momentum(a, v0, cfg);
    // Direct recurrence on vectors: W_{k+1} = (A/lambda) W_k / p0 - sum p_j/p0 W_{k+1-j}.
    std::vector<Vector> w{v0};
    for (int k = 1; k <= cfg.max_iters; ++k) {
      Vector next = matvec(a, w.back());
      for (auto& e : next) e /= lambda;
      if (k >= p.order()) {
        for (auto& e : next) e /= p.p0();
        for (int j = 2; j <= p.order(); ++j) {
          for (int i = 0; i < n; ++i) next[i] -= p[j] / p.p0() * w[k - j][i];
        }
      }
      w.push_back(next);
    }
    const double err = relative_error(res.x, w.back());
    return err < 1e-8 ? std::string() : "relerr " + std::to_string(err);
  }));

  out.push_back(check("toy problem, 4-hypocycloid momentum", [] {
    SolverConfig cfg;
    cfg.prob = hypocycloid(4);
    cfg.max_iters = 600;
    cfg.lambda_star = 1.0;
    cfg.truth = Vector{1.0, 0.0, 0.0, 0.0};
    const auto res = static_momentum(toy_matrix(), random_start(4, 7), cfg);
    const double err = *res.trace.records.back().relerr;
    return err < 1e-10 ? std::string() : "relerr " + std::to_string(err);
  }));

  out.push_back(check("Matrix Market round trip", [] {
    const auto a = barbell(20, 0.2, 9);
    std::stringstream ss;
    write_matrix_market(ss, a);
    const auto back = parse_matrix_market(ss);
    return back.matrix == a ? std::string() : std::string("content changed");
  }));

  out.push_back(check("ellipse sandwich", [] {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
      const double rho = 1.0 + 3.0 * u(rng) + 1e-6;
      const double eps = 0.999 * u(rng) + 1e-6;
      const int n = 1 + static_cast<int>(49 * u(rng));
      const auto b = ellipse_minmax_bounds(rho, 1.0 + eps, n);
      const double cap = ellipse_upper_bound(EllipseSpec::from_rho(rho).delta(), eps, n);
      if (b.lower > b.upper * (1 + 1e-12) || b.upper > cap * (1 + 1e-12)) return std::string("violated");
    }
    return std::string();
  }));

  return out;
}

}  // namespace specmom
