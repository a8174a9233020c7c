#include "specmom/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>

#include "specmom/analysis.hpp"
#include "specmom/eigensolve.hpp"
#include "specmom/error.hpp"
#include "specmom/matio.hpp"
#include "specmom/polyfam.hpp"
#include "specmom/prob.hpp"
#include "specmom/region.hpp"
#include "specmom/selfcheck.hpp"
#include "specmom/walk_approx.hpp"

namespace specmom::cli {

namespace {

using nlohmann::json;

// Raised for flag values that violate a module precondition.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json manifest(const std::vector<std::string>& args, std::optional<std::uint64_t> seed) {
  json m;
  m["subcommand"] = args.empty() ? "" : args.front();
  m["args"] = args;
  m["seed"] = seed ? json(*seed) : json(nullptr);
  m["version"] = kVersion;
  m["timestamp"] = timestamp();
  return m;
}

// Column-oriented record sink that renders either CSV (manifest as a leading
// comment line) or a JSON document {"manifest", "records", "notes"}.
class Table {
 public:
  Table(std::vector<std::string> columns, bool as_json) : columns_(std::move(columns)), json_(as_json) {}

  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }
  void note(std::string text) { notes_.push_back(std::move(text)); }

  void write(std::ostream& out, const json& man) const {
    if (json_) {
      json doc;
      doc["manifest"] = man;
      doc["records"] = json::array();
      for (const auto& r : rows_) {
        json rec;
        for (std::size_t i = 0; i < columns_.size(); ++i) {
          const auto& cell = r[i];
          char* end = nullptr;
          const double v = std::strtod(cell.c_str(), &end);
          if (!cell.empty() && end == cell.c_str() + cell.size()) {
            rec[columns_[i]] = v;
          } else {
            rec[columns_[i]] = cell;
          }
        }
        doc["records"].push_back(std::move(rec));
      }
      doc["notes"] = notes_;
      out << doc.dump(2) << '\n';
      return;
    }
    out << "# manifest " << man.dump() << '\n';
    for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
    out << '\n';
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
      out << '\n';
    }
    for (const auto& n : notes_) out << "# " << n << '\n';
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::string> notes_;
  bool json_;
};

std::string format_cusp(int k, int count) {
  if (k == 0) return "1";
  // e^{2 pi i k / count} with the fraction 2k / count reduced.
  int top = 2 * k;
  int bottom = count;
  const int g = std::gcd(top, bottom);
  top /= g;
  bottom /= g;
  std::string s = "e^{";
  if (top != 1) s += std::to_string(top);
  s += "πi";
  if (bottom != 1) s += "/" + std::to_string(bottom);
  return s + "}";
}

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("cannot parse complex number '" + text + "'");
  }
}

Vector read_vector(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open '" + path + "'");
  Vector v;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '%' || line.front() == '#') continue;
    std::istringstream ls(line);
    double re = 0.0, im = 0.0;
    if (!(ls >> re)) continue;
    ls >> im;
    v.emplace_back(re, im);
  }
  return v;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

struct Options {
  std::string prob_text;
  int samples = 512;
  bool grid = false;
  int grid_size = 101;
  double extent = 1.25;
  double eps = 1e-5;
  int n_max = 1000;
  int n = 100;
  double t = 3.0;
  std::string z_text = "0.9";
  std::optional<double> delta;
  std::optional<double> rho;
  std::string matrix_path;
  bool toy = false;
  std::string barbell_spec;
  std::optional<double> lambda_star;
  int iters = 200;
  std::uint64_t seed = 0;
  std::string truth_path;
  std::string out_format = "csv";
  double tol = 0.0;
  int half = 1000;
  double edge_prob = 1.0 / 250.0;
  std::string output_path;
};

ProbVector prob_from(const Options& o) { return parse_prob(o.prob_text); }

int cmd_region(const Options& o, const json& man, std::ostream& out) {
  const auto p = prob_from(o);
  if (o.grid) {
    require(o.grid_size >= 2, "--grid-size must be at least 2");
    require(o.extent > 0.0, "--extent must be positive");
    Table table({"re", "im", "membership"}, o.out_format == "json");
    for (int i = 0; i < o.grid_size; ++i) {
      for (int j = 0; j < o.grid_size; ++j) {
        const double re = -o.extent + 2.0 * o.extent * j / (o.grid_size - 1);
        const double im = -o.extent + 2.0 * o.extent * i / (o.grid_size - 1);
        const auto mem = o.lambda_star ? scaled_contains(p, *o.lambda_star, {re, im}) : contains(p, {re, im});
        table.row({num(re), num(im), std::string(membership_name(mem))});
      }
    }
    table.write(out, man);
    return 0;
  }
  require(o.samples >= 16, "--samples must be at least 16");
  const auto curve = boundary(p, o.samples);
  Table table({"t", "re", "im"}, o.out_format == "json");
  for (const auto& s : curve.samples) table.row({num(s.t), num(s.z.real()), num(s.z.imag())});
  const auto cs = cusps(p);
  std::string summary = "cusps: " + std::to_string(cs.count) + " at ";
  for (int k = 0; k < cs.count; ++k) summary += (k ? ", " : "") + format_cusp(k, cs.count);
  table.note(summary);
  table.write(out, man);
  return 0;
}

int cmd_growth(const Options& o, const json& man, std::ostream& out) {
  const auto p = prob_from(o);
  require(o.eps > 0.0, "--eps must be positive");
  require(o.n_max >= 10, "--n-max must be at least 10");
  const auto report = empirical_growth(p, o.eps, o.n_max);
  Table table({"n", "P_n", "predicted_rate_n"}, o.out_format == "json");
  for (const auto& r : report.rows) table.row({std::to_string(r.n), num(r.value), num(r.predicted)});
  if (report.truncated) table.note("truncated: overflow after n = " + std::to_string(report.rows.size() - 1));
  table.write(out, man);
  return 0;
}

int cmd_approx(const Options& o, const json& man, std::ostream& out) {
  const auto p = prob_from(o);
  require(o.n >= 1, "--n must be at least 1");
  require(o.t > 0.0, "--t must be positive");
  const Complex z = parse_complex(o.z_text);
  const auto alpha = alpha_coeffs(p, o.n);
  const auto approx = approximate_power(p, z, o.n, o.t);
  const double error = std::abs(approx.approx - std::pow(z, o.n));
  Table table({"k", "alpha_k"}, o.out_format == "json");
  for (std::size_t k = 0; k < alpha.alpha.size(); ++k) table.row({std::to_string(k), num(alpha.alpha[k])});
  table.note("summary n=" + std::to_string(o.n) + " t=" + num(o.t) + " degree=" + std::to_string(approx.degree) +
             " abs_error=" + num(error) + " tail_mass=" + num(approx.tail_mass) +
             " azuma_bound=" + num(azuma_tail(p.order(), o.t)));
  table.write(out, man);
  return 0;
}

int cmd_bounds(const Options& o, const json& man, std::ostream& out) {
  const auto p = prob_from(o);
  require(o.eps > 0.0 && o.eps < 1.0, "--eps must lie in (0, 1)");
  require(o.n_max >= 10, "--n-max must be at least 10");
  require(!(o.delta && o.rho), "give at most one of --delta and --rho");
  std::optional<EllipseSpec> ellipse;
  if (o.delta) {
    require(*o.delta > 0.0 && *o.delta < 1.0, "--delta must lie in (0, 1)");
    ellipse = EllipseSpec::from_delta(*o.delta);
  } else if (o.rho) {
    require(*o.rho > 1.0, "--rho must exceed 1");
    ellipse = EllipseSpec::from_rho(*o.rho);
  } else {
    ellipse = EllipseSpec::from_delta(0.5);
  }
  const auto report = empirical_growth(p, o.eps, o.n_max);
  Table table({"n", "P_n", "growth_rate_n", "ellipse_upper", "ellipse_minmax_lower", "ellipse_minmax_upper"},
              o.out_format == "json");
  for (const auto& r : report.rows) {
    const auto mm = ellipse_minmax_bounds(ellipse->rho(), Complex(1.0 + o.eps, 0.0), r.n);
    table.row({std::to_string(r.n), num(r.value), num(r.predicted),
               num(ellipse_upper_bound(ellipse->delta(), o.eps, r.n)), num(mm.lower), num(mm.upper)});
  }
  table.note("ellipse delta=" + num(ellipse->delta()) + " rho=" + num(ellipse->rho()));
  if (report.truncated) table.note("truncated: overflow after n = " + std::to_string(report.rows.size() - 1));
  table.write(out, man);
  return 0;
}

struct Problem {
  MatrixOperator matrix;
  std::optional<Vector> truth;
};

Problem load_problem(const Options& o) {
  const int sources = (o.toy ? 1 : 0) + (o.matrix_path.empty() ? 0 : 1) + (o.barbell_spec.empty() ? 0 : 1);
  require(sources == 1, "give exactly one of --matrix, --toy, --barbell");
  std::optional<Vector> truth;
  std::optional<MatrixOperator> a;
  if (o.toy) {
    a = toy_matrix();
    truth = Vector{1.0, 0.0, 0.0, 0.0};
  } else if (!o.matrix_path.empty()) {
    auto file = read_matrix_market(o.matrix_path);
    for (const auto& w : file.warnings) std::cerr << "warning: " << w << '\n';
    a = MatrixOperator(std::move(file.matrix));
  } else {
    std::vector<std::string> parts;
    std::stringstream ss(o.barbell_spec);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    require(parts.size() == 3, "--barbell expects N,p,seed");
    int half = 0;
    double prob = 0.0;
    std::uint64_t seed = 0;
    try {
      half = std::stoi(parts[0]);
      const auto slash = parts[1].find('/');
      prob = slash == std::string::npos ? std::stod(parts[1])
                                        : std::stod(parts[1].substr(0, slash)) / std::stod(parts[1].substr(slash + 1));
      seed = std::stoull(parts[2]);
    } catch (const std::exception&) {
      throw UsageError("cannot parse --barbell '" + o.barbell_spec + "'");
    }
    require(half >= 2, "barbell N must be at least 2");
    require(prob >= 0.0 && prob <= 1.0, "barbell p must lie in [0, 1]");
    a = MatrixOperator(barbell(half, prob, seed));
  }
  if (!o.truth_path.empty()) truth = read_vector(o.truth_path);
  if (truth && static_cast<int>(truth->size()) != a->dim()) {
    throw Error(Errc::DimensionMismatch, "truth vector length does not match the matrix");
  }
  return {std::move(*a), std::move(truth)};
}

int cmd_solver(const std::string& which, const Options& o, const json& man, std::ostream& out) {
  require(o.iters >= 0, "--iters must be non-negative");
  require(o.tol >= 0.0, "--tol must be non-negative");
  SolverConfig config;
  if (which != "power") {
    require(!o.prob_text.empty(), "--prob is required");
    config.prob = prob_from(o);
    require(o.iters >= config.prob.order(), "--iters must be at least the order m");
  }
  if (which == "momentum") {
    require(o.lambda_star.has_value(), "--lambda-star is required for momentum");
    require(*o.lambda_star > 0.0, "--lambda-star must be positive");
  }
  config.max_iters = o.iters;
  config.lambda_star = o.lambda_star;
  config.seed = o.seed;
  config.tolerance = o.tol;
  auto problem = load_problem(o);
  config.truth = problem.truth;
  const Vector v0 = random_start(problem.matrix.dim(), o.seed);

  SolveResult result;
  if (which == "power") {
    result = power_iterate(problem.matrix, v0, config);
  } else if (which == "momentum") {
    result = static_momentum(problem.matrix, v0, config);
  } else {
    result = dynamic_momentum(problem.matrix, v0, config);
  }

  const auto opt = [](const std::optional<double>& v) { return v ? num(*v) : std::string(); };
  Table table({"k", "h_k", "nu_k", "d_k", "rho_k", "r_k", "relerr"}, o.out_format == "json");
  for (const auto& r : result.trace.records) {
    table.row({std::to_string(r.k), num(r.h), num(r.nu.real()), num(r.d), opt(r.rho), opt(r.r), opt(r.relerr)});
  }
  table.note("iterations=" + std::to_string(result.iterations) + " converged=" + (result.converged ? "1" : "0") +
             " stalled=" + (result.stalled ? "1" : "0"));
  table.write(out, man);
  return 0;
}

int cmd_barbell(const Options& o, std::ostream& out) {
  require(o.half >= 2, "--n must be at least 2");
  require(o.edge_prob >= 0.0 && o.edge_prob <= 1.0, "--p must lie in [0, 1]");
  const auto a = barbell(o.half, o.edge_prob, o.seed);
  if (o.output_path.empty()) {
    write_matrix_market(out, a);
  } else {
    std::ofstream file(o.output_path);
    if (!file) throw Error(Errc::InvalidArgument, "cannot write '" + o.output_path + "'");
    write_matrix_market(file, a);
  }
  return 0;
}

int cmd_selfcheck(std::ostream& out) {
  const auto results = run_selfcheck();
  bool ok = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) out << "  (" << r.detail << ")";
    out << '\n';
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random-walk polynomial families and momentum power iterations", "specmom"};
  app.require_subcommand(1);
  Options o;

  const auto add_prob = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--prob", o.prob_text, "probability vector, e.g. 7/12,0,1/4,1/6");
    if (required) opt->required();
  };
  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out_format, "output format")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* region = app.add_subcommand("region", "boundary curve, cusps and membership grid");
  add_prob(region, true);
  region->add_option("--samples", o.samples, "boundary samples");
  region->add_flag("--grid", o.grid, "classify a lattice instead of sampling the boundary");
  region->add_option("--grid-size", o.grid_size, "lattice points per axis");
  region->add_option("--extent", o.extent, "lattice half-width");
  region->add_option("--lambda-star", o.lambda_star, "scale the region by lambda_star (grid mode)");
  add_out(region);

  auto* growth = app.add_subcommand("poly-growth", "P_n(1+eps) against the predicted rate");
  add_prob(growth, true);
  growth->add_option("--eps", o.eps, "offset past 1");
  growth->add_option("--n-max", o.n_max, "largest degree");
  add_out(growth);

  auto* approx = app.add_subcommand("approx", "walk coefficients alpha_k and the truncated z^n");
  add_prob(approx, true);
  approx->add_option("--n", o.n, "power n");
  approx->add_option("--t", o.t, "truncation width t (degree floor(t sqrt n))");
  approx->add_option("--z", o.z_text, "evaluation point re[,im]");
  add_out(approx);

  auto* bounds = app.add_subcommand("bounds", "growth against ellipse bounds");
  add_prob(bounds, true);
  bounds->add_option("--eps", o.eps, "offset past 1, in (0, 1)");
  bounds->add_option("--n-max", o.n_max, "largest degree");
  bounds->add_option("--delta", o.delta, "ellipse co-vertex in (0, 1)");
  bounds->add_option("--rho", o.rho, "ellipse radius > 1");
  add_out(bounds);

  std::vector<std::pair<std::string, CLI::App*>> solvers;
  for (const char* name : {"power", "momentum", "dynamic"}) {
    auto* sub = app.add_subcommand(name, std::string(name) + " iteration trace");
    add_prob(sub, false);
    sub->add_option("--matrix", o.matrix_path, "Matrix Market file");
    sub->add_flag("--toy", o.toy, "4x4 toy problem");
    sub->add_option("--barbell", o.barbell_spec, "random barbell N,p,seed");
    sub->add_option("--lambda-star", o.lambda_star, "lambda_star for the static method");
    sub->add_option("--iters", o.iters, "iteration count N");
    sub->add_option("--seed", o.seed, "seed for the start vector");
    sub->add_option("--truth", o.truth_path, "ground-truth eigenvector file");
    sub->add_option("--tol", o.tol, "stop when d_k <= tol (0: run all iterations)");
    add_out(sub);
    solvers.emplace_back(name, sub);
  }

  auto* bar = app.add_subcommand("barbell", "write a random barbell adjacency matrix");
  bar->add_option("--n", o.half, "vertices per half");
  bar->add_option("--p", o.edge_prob, "edge probability within a half");
  bar->add_option("--seed", o.seed, "generator seed");
  bar->add_option("--output", o.output_path, "output .mtx path (default stdout)");

  auto* selfcheck = app.add_subcommand("selfcheck", "run the invariant suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const bool seeded = bar->parsed() || std::any_of(solvers.begin(), solvers.end(),
                                                     [](const auto& s) { return s.second->parsed(); });
    const json man = manifest(args, seeded ? std::optional<std::uint64_t>(o.seed) : std::nullopt);
    if (region->parsed()) return cmd_region(o, man, out);
    if (growth->parsed()) return cmd_growth(o, man, out);
    if (approx->parsed()) return cmd_approx(o, man, out);
    if (bounds->parsed()) return cmd_bounds(o, man, out);
    for (const auto& [name, sub] : solvers) {
      if (sub->parsed()) return cmd_solver(name, o, man, out);
    }
    if (bar->parsed()) return cmd_barbell(o, out);
    if (selfcheck->parsed()) return cmd_selfcheck(out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace specmom::cli
