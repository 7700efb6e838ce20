#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fuzzydist/distance_matrix.hpp"

namespace fuzzydist {

inline constexpr std::size_t kDefaultClusterCount = 5;
inline constexpr std::size_t kDefaultMaxIterations = 300;

struct KMeansOptions {
  std::size_t k = kDefaultClusterCount;
  std::uint64_t seed = 0;
  std::size_t max_iter = kDefaultMaxIterations;
};

/// Result of Lloyd's iteration. Cluster indices are 0-based.
struct ClusterModel {
  std::size_t k = 0;
  std::vector<std::size_t> assignments;
  std::vector<std::vector<double>> centroids;
  /// Euclidean distance of each point to its assigned centroid.
  std::vector<double> point_distances;
  std::size_t iterations = 0;
  std::uint64_t seed = 0;
  bool converged = false;
  /// Sum of squared point-to-centroid distances after each centroid update.
  std::vector<double> objective_history;
};

/// k-means on arbitrary points of equal dimension.
///
/// Seeding is k-means++ (D^2 weighting) driven by Rng(seed); a D^2 draw that
/// lands on a boundary resolves to the lowest point index. Assignment ties
/// go to the lowest cluster index. An empty cluster is re-seeded with the
/// point farthest from its centroid, taken from a cluster with at least two
/// members. Iteration stops when assignments do not change or after
/// max_iter centroid updates. Sums run in point-index order, so the result
/// depends only on (points, options).
ClusterModel kmeans(std::span<const std::vector<double>> points, const KMeansOptions& options);

/// k-means on the rows of a distance matrix (each row is a point in R^n,
/// including its zero self-distance coordinate).
ClusterModel kmeans(const DistanceMatrix& matrix, const KMeansOptions& options);

struct ClusterMember {
  std::size_t index = 0;
  std::string name;
  double distance = 0.0;
};

struct ClusterSummary {
  std::size_t cluster = 0;
  /// Sorted by distance ascending, ties by point index.
  std::vector<ClusterMember> members;
  double mean_distance = 0.0;

  std::size_t size() const noexcept { return members.size(); }
};

struct ClusterReport {
  std::vector<ClusterSummary> clusters;
};

ClusterReport cluster_report(const ClusterModel& model, std::span<const std::string> labels);

}  // namespace fuzzydist
