#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzydist/fuzzy_set.hpp"
#include "fuzzydist/metrics.hpp"

namespace fuzzydist {

enum class MetricKind { kEntropy, kWeightedEntropy, kMinkowski, kHausdorff, kS1, kBonissone };

std::string_view to_string(MetricKind kind) noexcept;
/// Parses the command-line spelling (entropy, weighted, minkowski, ...).
std::optional<MetricKind> parse_metric_kind(std::string_view name) noexcept;

/// A metric selector together with the parameters the selected metric needs.
class MetricSpec {
 public:
  static MetricSpec entropy();
  static MetricSpec weighted_entropy(WeightVector weights);
  static MetricSpec minkowski(double r);
  static MetricSpec hausdorff(std::size_t levels = kDefaultHausdorffLevels);
  static MetricSpec s1();
  static MetricSpec bonissone();

  MetricKind kind() const noexcept { return kind_; }
  double r() const noexcept { return r_; }
  std::size_t levels() const noexcept { return levels_; }
  const std::optional<WeightVector>& weights() const noexcept { return weights_; }

  double operator()(const FuzzySet& a, const FuzzySet& b) const;

 private:
  explicit MetricSpec(MetricKind kind) : kind_(kind) {}

  MetricKind kind_;
  double r_ = 2.0;
  std::size_t levels_ = kDefaultHausdorffLevels;
  std::optional<WeightVector> weights_;
};

/// Symmetric n x n matrix of pairwise distances with one label per row.
/// Invariants (checked on construction): square, bit-for-bit symmetric,
/// exactly zero diagonal, finite non-negative entries.
class DistanceMatrix {
 public:
  DistanceMatrix(std::vector<std::string> labels, std::vector<double> row_major);

  std::size_t size() const noexcept { return labels_.size(); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return values_[i * size() + j]; }
  std::span<const double> row(std::size_t i) const noexcept {
    return std::span<const double>(values_).subspan(i * size(), size());
  }

  /// Row i as an owned vector; k-means treats these as points in R^n.
  std::vector<std::vector<double>> rows() const;

 private:
  std::vector<std::string> labels_;
  std::vector<double> values_;
};

// Evaluates `metric` once per unordered pair and mirrors the result. With
// threads > 1 the pairs are split across worker threads; every entry is a
// pure function of its pair, so the output does not depend on the thread
// count. Errors from the metric are rethrown naming the offending pair.
DistanceMatrix build_distance_matrix(std::span<const LabeledSet> sets, const MetricSpec& metric,
                                     unsigned threads = 1);

}  // namespace fuzzydist
