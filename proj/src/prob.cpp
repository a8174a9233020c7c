#include "specmom/prob.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "specmom/error.hpp"

namespace specmom {

namespace {

double parse_number(std::string_view token) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  if (token.empty()) throw Error(Errc::InvalidArgument, "empty probability entry");

  const auto parse_double = [](std::string_view s) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw Error(Errc::InvalidArgument, "cannot parse '" + std::string(s) + "'");
    }
    return value;
  };

  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return parse_double(token);

  const auto num_text = token.substr(0, slash);
  const auto den_text = token.substr(slash + 1);
  std::int64_t num = 0;
  std::int64_t den = 0;
  auto r1 = std::from_chars(num_text.data(), num_text.data() + num_text.size(), num);
  auto r2 = std::from_chars(den_text.data(), den_text.data() + den_text.size(), den);
  if (r1.ec != std::errc{} || r1.ptr != num_text.data() + num_text.size() ||
      r2.ec != std::errc{} || r2.ptr != den_text.data() + den_text.size()) {
    throw Error(Errc::InvalidArgument, "cannot parse rational '" + std::string(token) + "'");
  }
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator in '" + std::string(token) + "'");
  const std::int64_t g = std::gcd(num, den);
  if (g != 0) {
    num /= g;
    den /= g;
  }
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

ProbVector ProbVector::validate(std::span<const double> raw) {
  if (raw.size() < 3) {
    throw Error(Errc::InvalidArgument, "probability vector needs at least 3 entries");
  }
  std::vector<double> p(raw.begin(), raw.end());
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (!std::isfinite(p[j])) {
      throw Error(Errc::InvalidArgument, "entry " + std::to_string(j) + " is not finite");
    }
    if (p[j] < 0.0) {
      throw Error(Errc::NegativeEntry, "p_" + std::to_string(j) + " < 0");
    }
  }
  while (p.size() > 1 && p.back() == 0.0) p.pop_back();

  double sum = 0.0;
  double mean = 0.0;
  double var = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double step = 1.0 - static_cast<double>(j);
    sum += p[j];
    mean += step * p[j];
    var += step * step * p[j];
  }
  if (std::abs(sum - 1.0) > kTolerance) {
    throw Error(Errc::SumNotOne, "entries sum to " + std::to_string(sum));
  }
  if (p.size() > 1 && p[1] != 0.0) {
    throw Error(Errc::P1NonZero, "p_1 must be exactly zero");
  }
  if (p[0] <= 0.0) throw Error(Errc::P0Zero, "p_0 must be positive");
  if (std::abs(mean) > kTolerance) {
    throw Error(Errc::MeanNotZero, "sum of (1-j) p_j is " + std::to_string(mean));
  }
  // Mean zero with p_0 > 0 forces some p_j > 0 with j >= 2, so m >= 2 here.
  if (p.size() < 3 || !(var > 0.0)) {
    throw Error(Errc::OrderTooSmall, "order must be at least 2");
  }
  return ProbVector(std::move(p), var);
}

double ProbVector::sigma() const noexcept { return std::sqrt(variance_); }

std::vector<int> ProbVector::support() const {
  std::vector<int> out;
  for (std::size_t j = 2; j < entries_.size(); ++j) {
    if (entries_[j] > 0.0) out.push_back(static_cast<int>(j));
  }
  return out;
}

ProbVector hypocycloid(int m) {
  if (m < 2) throw Error(Errc::OrderTooSmall, "hypocycloid order must be >= 2");
  std::vector<double> p(static_cast<std::size_t>(m) + 1, 0.0);
  p.front() = static_cast<double>(m - 1) / m;
  p.back() = 1.0 / m;
  return ProbVector::validate(p);
}

ProbVector mix(std::span<const double> weights, std::span<const ProbVector> parts) {
  if (weights.empty() || weights.size() != parts.size()) {
    throw Error(Errc::WeightsInvalid, "need one weight per part");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw Error(Errc::WeightsInvalid, "negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > ProbVector::kTolerance) {
    throw Error(Errc::WeightsInvalid, "weights sum to " + std::to_string(total));
  }
  std::size_t len = 0;
  for (const auto& part : parts) len = std::max(len, part.entries().size());
  std::vector<double> p(len, 0.0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto e = parts[i].entries();
    for (std::size_t j = 0; j < e.size(); ++j) p[j] += weights[i] * e[j];
  }
  return ProbVector::validate(p);
}

ProbVector parse_prob(std::string_view text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    values.push_back(parse_number(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ProbVector::validate(values);
}

}  // namespace specmom
