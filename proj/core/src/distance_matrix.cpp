#include "fuzzydist/distance_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>

#include "fuzzydist/error.hpp"

namespace fuzzydist {

std::string_view to_string(MetricKind kind) noexcept {
  switch (kind) {
    case MetricKind::kEntropy: return "entropy";
    case MetricKind::kWeightedEntropy: return "weighted";
    case MetricKind::kMinkowski: return "minkowski";
    case MetricKind::kHausdorff: return "hausdorff";
    case MetricKind::kS1: return "s1";
    case MetricKind::kBonissone: return "bonissone";
  }
  return "unknown";
}

std::optional<MetricKind> parse_metric_kind(std::string_view name) noexcept {
  for (auto kind : {MetricKind::kEntropy, MetricKind::kWeightedEntropy, MetricKind::kMinkowski,
                    MetricKind::kHausdorff, MetricKind::kS1, MetricKind::kBonissone}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

MetricSpec MetricSpec::entropy() { return MetricSpec(MetricKind::kEntropy); }

MetricSpec MetricSpec::weighted_entropy(WeightVector weights) {
  MetricSpec spec(MetricKind::kWeightedEntropy);
  spec.weights_ = std::move(weights);
  return spec;
}

MetricSpec MetricSpec::minkowski(double r) {
  if (!(r >= 1.0) || !std::isfinite(r)) {
    fail(ErrorCode::kInvalidArgument, "minkowski exponent r must be a finite value >= 1");
  }
  MetricSpec spec(MetricKind::kMinkowski);
  spec.r_ = r;
  return spec;
}

MetricSpec MetricSpec::hausdorff(std::size_t levels) {
  if (levels == 0) fail(ErrorCode::kInvalidArgument, "hausdorff levels must be at least 1");
  MetricSpec spec(MetricKind::kHausdorff);
  spec.levels_ = levels;
  return spec;
}

MetricSpec MetricSpec::s1() { return MetricSpec(MetricKind::kS1); }

MetricSpec MetricSpec::bonissone() { return MetricSpec(MetricKind::kBonissone); }

double MetricSpec::operator()(const FuzzySet& a, const FuzzySet& b) const {
  switch (kind_) {
    case MetricKind::kEntropy: return entropy_distance(a, b);
    case MetricKind::kWeightedEntropy: return weighted_entropy_distance(a, b, *weights_);
    case MetricKind::kMinkowski: return minkowski_distance(a, b, r_);
    case MetricKind::kHausdorff: return hausdorff_fuzzy(a, b, levels_);
    case MetricKind::kS1: return s1_distance(a, b);
    case MetricKind::kBonissone: return bonissone_distance(a, b);
  }
  fail(ErrorCode::kInvalidArgument, "unknown metric");
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels, std::vector<double> row_major)
    : labels_(std::move(labels)), values_(std::move(row_major)) {
  const std::size_t n = labels_.size();
  if (values_.size() != n * n) {
    fail(ErrorCode::kLengthMismatch, "distance matrix values do not form an n x n matrix");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if ((*this)(i, i) != 0.0) {
      fail(ErrorCode::kInvalidArgument, "distance matrix diagonal entry " + std::to_string(i + 1) +
                                            " is not zero");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double v = (*this)(i, j);
      if (!std::isfinite(v) || v < 0.0) {
        fail(ErrorCode::kOutOfRange, "distance matrix entry is negative or non-finite");
      }
      if (v != (*this)(j, i)) {
        fail(ErrorCode::kInvalidArgument, "distance matrix is not symmetric");
      }
    }
  }
}

std::vector<std::vector<double>> DistanceMatrix::rows() const {
  std::vector<std::vector<double>> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    const auto r = row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

DistanceMatrix build_distance_matrix(std::span<const LabeledSet> sets, const MetricSpec& metric,
                                     unsigned threads) {
  const std::size_t n = sets.size();
  if (n < 2) fail(ErrorCode::kInvalidArgument, "a distance matrix needs at least two sets");
  for (std::size_t i = 1; i < n; ++i) require_same_domain(sets[0].set, sets[i].set);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }

  std::vector<double> values(n * n, 0.0);
  std::exception_ptr first_error;
  std::size_t first_error_pair = pairs.size();
  std::mutex error_mutex;

  auto evaluate = [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p) {
      const auto [i, j] = pairs[p];
      try {
        const double d = metric(sets[i].set, sets[j].set);
        values[i * n + j] = d;
        values[j * n + i] = d;
      } catch (const Error& e) {
        std::lock_guard lock(error_mutex);
        // Report the lowest-numbered failing pair regardless of scheduling.
        if (p < first_error_pair) {
          first_error_pair = p;
          first_error = std::make_exception_ptr(
              Error(e.code(), "metric " + std::string(to_string(metric.kind())) + " failed for (" +
                                  sets[i].label + ", " + sets[j].label + "): " + e.what()));
        }
        return;
      }
    }
  };

  const std::size_t workers =
      std::clamp<std::size_t>(threads == 0 ? 1 : threads, 1, std::max<std::size_t>(pairs.size(), 1));
  if (workers == 1) {
    evaluate(0, pairs.size());
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (pairs.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(pairs.size(), w * chunk);
      const std::size_t end = std::min(pairs.size(), begin + chunk);
      pool.emplace_back(evaluate, begin, end);
    }
  }
  if (first_error) std::rethrow_exception(first_error);

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& s : sets) labels.push_back(s.label);
  return DistanceMatrix(std::move(labels), std::move(values));
}

}  // namespace fuzzydist
