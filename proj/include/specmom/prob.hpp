#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace specmom {

/// A step distribution p = (p_0, ..., p_m) for the walk that generates a
/// polynomial family. p_j is the probability of moving by 1 - j, so the walk
/// is mean-zero, p_1 is pinned to zero and the trailing entry p_m is nonzero.
///
/// Instances are immutable once validated.
class ProbVector {
 public:
  static constexpr double kTolerance = 1e-12;

  /// Validates and canonicalizes (trailing zeros trimmed). Throws Error with
  /// the code of the first violated invariant.
  static ProbVector validate(std::span<const double> raw);

  std::span<const double> entries() const noexcept { return entries_; }
  /// p_j, or zero for j beyond the order.
  double operator[](std::size_t j) const noexcept {
    return j < entries_.size() ? entries_[j] : 0.0;
  }
  int order() const noexcept { return static_cast<int>(entries_.size()) - 1; }
  double p0() const noexcept { return entries_.front(); }
  double variance() const noexcept { return variance_; }
  double sigma() const noexcept;

  /// Indices j >= 2 with p_j > 0.
  std::vector<int> support() const;

  friend bool operator==(const ProbVector&, const ProbVector&) = default;

 private:
  ProbVector(std::vector<double> entries, double variance)
      : entries_(std::move(entries)), variance_(variance) {}

  std::vector<double> entries_;
  double variance_ = 0.0;
};

/// p_0 = (m-1)/m, p_m = 1/m.
ProbVector hypocycloid(int m);

/// Entrywise convex combination; parts are zero-padded to a common length.
ProbVector mix(std::span<const double> weights, std::span<const ProbVector> parts);

/// Parses "7/12,0,1/4,1/6" or "0.5,0,0.5". Rationals are reduced from exact
/// integers before conversion to double.
ProbVector parse_prob(std::string_view text);

}  // namespace specmom
