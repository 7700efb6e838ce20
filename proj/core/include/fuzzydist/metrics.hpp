#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fuzzydist/fuzzy_set.hpp"

namespace fuzzydist {

/// Probability weights over the elements of a domain: non-negative, finite,
/// summing to 1 within 1e-9.
class WeightVector {
 public:
  WeightVector(Domain domain, std::vector<double> weights);

  static WeightVector uniform(const Domain& domain);

  const Domain& domain() const noexcept { return domain_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  bool is_uniform() const noexcept { return uniform_; }

 private:
  Domain domain_;
  std::vector<double> weights_;
  bool uniform_ = false;
};

/// Four-number summary of a fuzzy set: power, entropy (nats), centroid and
/// skewness. Element positions are 1-based, so a set concentrated on the
/// first element has centroid 1.
struct BonissoneFeatures {
  double power = 0.0;
  double entropy = 0.0;
  double centroid = 0.0;
  double skewness = 0.0;

  /// Throws kZeroPower when power is zero.
  BonissoneFeatures(double power, double entropy, double centroid, double skewness);
};

// Mean binary entropy (bits) of the symmetric-difference memberships. The
// per-element terms are summed in ascending order, which makes the result
// independent of element order and bit-for-bit symmetric in (a, b).
double entropy_distance(const FuzzySet& a, const FuzzySet& b);

// Expected binary entropy of the symmetric difference under `weights`.
// Uniform weights dispatch to entropy_distance so the two agree exactly.
double weighted_entropy_distance(const FuzzySet& a, const FuzzySet& b,
                                 const WeightVector& weights);

/// (sum |a - b|^r)^(1/r) for real r >= 1.
double minkowski_distance(const FuzzySet& a, const FuzzySet& b, double r);

/// Hausdorff distance between two non-empty index sets under |u - v|.
double hausdorff_crisp(std::span<const std::size_t> u, std::span<const std::size_t> v);

inline constexpr std::size_t kDefaultHausdorffLevels = 100;

/// Midpoint-rule approximation of the integral over alpha of the Hausdorff
/// distance between alpha-cuts, with alpha_k = (k - 0.5) / levels.
///
/// Alpha-cuts may be empty. A level where both cuts are empty contributes 0;
/// a level where exactly one is empty contributes the domain diameter N - 1.
double hausdorff_fuzzy(const FuzzySet& a, const FuzzySet& b,
                       std::size_t levels = kDefaultHausdorffLevels);

double cardinality(const FuzzySet& a) noexcept;

/// 1 - |a ∩ b| / |a ∪ b|, defined as 0 when both sets are empty.
double s1_distance(const FuzzySet& a, const FuzzySet& b);

BonissoneFeatures bonissone_features(const FuzzySet& a);

/// Euclidean distance between the two feature vectors.
double bonissone_distance(const FuzzySet& a, const FuzzySet& b);

}  // namespace fuzzydist
