#include "fuzzydist/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iterator>
#include <limits>
#include <numeric>

#include "fuzzydist/error.hpp"

namespace fuzzydist {

namespace {

constexpr double kWeightSumTolerance = 1e-9;

double ascending_sum(std::vector<double>& terms) {
  std::ranges::sort(terms);
  double sum = 0.0;
  for (double t : terms) sum += t;
  return sum;
}

double sym_diff(double x, double y) noexcept { return std::max(x, y) - std::min(x, y); }

// Natural-log counterpart of binary_entropy used by the Bonissone features.
double entropy_nats(double m) noexcept {
  if (m == 0.0 || m == 1.0) return 0.0;
  return -m * std::log(m) - (1.0 - m) * std::log1p(-m);
}

}  // namespace

WeightVector::WeightVector(Domain domain, std::vector<double> weights)
    : domain_(std::move(domain)), weights_(std::move(weights)) {
  if (weights_.size() != domain_.size()) {
    fail(ErrorCode::kDomainMismatch,
         "weight vector has " + std::to_string(weights_.size()) +
             " entries but the domain has " + std::to_string(domain_.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const double w = weights_[i];
    if (!std::isfinite(w) || w < 0.0) {
      fail(ErrorCode::kInvalidWeights,
           "weight at element " + std::to_string(i + 1) + " is negative or non-finite");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    fail(ErrorCode::kInvalidWeights, "weights sum to " + std::to_string(sum) + ", expected 1");
  }
  uniform_ = std::ranges::adjacent_find(weights_, std::not_equal_to<>{}) == weights_.end();
}

WeightVector WeightVector::uniform(const Domain& domain) {
  return WeightVector(domain,
                      std::vector<double>(domain.size(), 1.0 / static_cast<double>(domain.size())));
}

BonissoneFeatures::BonissoneFeatures(double power_, double entropy_, double centroid_,
                                     double skewness_)
    : power(power_), entropy(entropy_), centroid(centroid_), skewness(skewness_) {
  if (power == 0.0) fail(ErrorCode::kZeroPower, "fuzzy set has zero power");
}

double entropy_distance(const FuzzySet& a, const FuzzySet& b) {
  require_same_domain(a, b);
  std::vector<double> terms(a.size());
  for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = binary_entropy(sym_diff(a[i], b[i]));
  return ascending_sum(terms) / static_cast<double>(terms.size());
}

double weighted_entropy_distance(const FuzzySet& a, const FuzzySet& b,
                                 const WeightVector& weights) {
  require_same_domain(a, b);
  if (!weights.domain().compatible_with(a.domain())) {
    fail(ErrorCode::kDomainMismatch, "weight vector does not match the fuzzy-set domain");
  }
  if (weights.is_uniform()) return entropy_distance(a, b);
  const auto w = weights.weights();
  std::vector<double> terms(a.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    terms[i] = w[i] * binary_entropy(sym_diff(a[i], b[i]));
  }
  return std::min(ascending_sum(terms), 1.0);
}

double minkowski_distance(const FuzzySet& a, const FuzzySet& b, double r) {
  if (!(r >= 1.0) || !std::isfinite(r)) {
    fail(ErrorCode::kInvalidArgument, "minkowski exponent r must be a finite value >= 1");
  }
  require_same_domain(a, b);
  double sum = 0.0;
  if (r == 1.0) {
    for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
    return sum;
  }
  if (r == 2.0) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double d = a[i] - b[i];
      sum += d * d;
    }
    return std::sqrt(sum);
  }
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::pow(std::abs(a[i] - b[i]), r);
  return std::pow(sum, 1.0 / r);
}

namespace {

// sup over v of the distance from v to the nearest element of sorted `u`.
double directed_hausdorff(std::span<const std::size_t> sorted_u, std::span<const std::size_t> v) {
  double worst = 0.0;
  for (std::size_t x : v) {
    const auto it = std::ranges::lower_bound(sorted_u, x);
    double best = std::numeric_limits<double>::infinity();
    if (it != sorted_u.end()) best = static_cast<double>(*it - x);
    if (it != sorted_u.begin()) best = std::min(best, static_cast<double>(x - *std::prev(it)));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

double hausdorff_crisp(std::span<const std::size_t> u, std::span<const std::size_t> v) {
  if (u.empty() || v.empty()) {
    fail(ErrorCode::kEmptySet, "hausdorff distance requires two non-empty sets");
  }
  std::vector<std::size_t> su(u.begin(), u.end());
  std::vector<std::size_t> sv(v.begin(), v.end());
  std::ranges::sort(su);
  std::ranges::sort(sv);
  return std::max(directed_hausdorff(su, sv), directed_hausdorff(sv, su));
}

double hausdorff_fuzzy(const FuzzySet& a, const FuzzySet& b, std::size_t levels) {
  require_same_domain(a, b);
  if (levels == 0) fail(ErrorCode::kInvalidArgument, "hausdorff levels must be at least 1");
  const double diameter = static_cast<double>(a.size() - 1);
  const double m = static_cast<double>(levels);
  double total = 0.0;
  for (std::size_t k = 1; k <= levels; ++k) {
    const double alpha = (static_cast<double>(k) - 0.5) / m;
    const IndexSet cut_a = alpha_cut(a, alpha);
    const IndexSet cut_b = alpha_cut(b, alpha);
    if (cut_a.empty() && cut_b.empty()) continue;
    if (cut_a.empty() || cut_b.empty()) {
      total += diameter;
    } else {
      total += hausdorff_crisp(cut_a, cut_b);
    }
  }
  return total / m;
}

double cardinality(const FuzzySet& a) noexcept {
  const auto m = a.membership();
  return std::accumulate(m.begin(), m.end(), 0.0);
}

double s1_distance(const FuzzySet& a, const FuzzySet& b) {
  require_same_domain(a, b);
  double meet = 0.0;
  double join = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    meet += std::min(a[i], b[i]);
    join += std::max(a[i], b[i]);
  }
  if (join == 0.0) return 0.0;
  return std::clamp(1.0 - meet / join, 0.0, 1.0);
}

BonissoneFeatures bonissone_features(const FuzzySet& a) {
  double power = 0.0;
  double entropy = 0.0;
  double moment = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double x = static_cast<double>(i + 1);
    power += a[i];
    entropy += entropy_nats(a[i]);
    moment += x * a[i];
  }
  if (power == 0.0) fail(ErrorCode::kZeroPower, "fuzzy set has zero power");
  const double centroid = moment / power;
  double skewness = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = static_cast<double>(i + 1) - centroid;
    skewness += d * d * d * a[i];
  }
  return BonissoneFeatures(power, entropy, centroid, skewness);
}

double bonissone_distance(const FuzzySet& a, const FuzzySet& b) {
  require_same_domain(a, b);
  const BonissoneFeatures fa = bonissone_features(a);
  const BonissoneFeatures fb = bonissone_features(b);
  const double diff[] = {fa.power - fb.power, fa.entropy - fb.entropy,
                         fa.centroid - fb.centroid, fa.skewness - fb.skewness};
  double sum = 0.0;
  for (double d : diff) sum += d * d;
  return std::sqrt(sum);
}

}  // namespace fuzzydist
