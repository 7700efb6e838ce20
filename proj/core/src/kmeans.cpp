#include "fuzzydist/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fuzzydist/error.hpp"
#include "fuzzydist/random.hpp"

namespace fuzzydist {

namespace {

using Point = std::vector<double>;

double squared_distance(std::span<const double> a, std::span<const double> b) noexcept {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

std::vector<Point> seed_plus_plus(std::span<const Point> points, std::size_t k, Rng& rng) {
  const std::size_t n = points.size();
  std::vector<Point> centers;
  std::vector<bool> chosen(n, false);
  centers.reserve(k);

  auto first = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n));
  first = std::min(first, n - 1);
  centers.push_back(points[first]);
  chosen[first] = true;

  std::vector<double> d2(n);
  for (std::size_t i = 0; i < n; ++i) d2[i] = squared_distance(points[i], centers[0]);

  while (centers.size() < k) {
    double total = 0.0;
    for (double v : d2) total += v;

    std::size_t pick = n;
    if (total > 0.0) {
      const double target = uniform01(rng) * total;
      double cumulative = 0.0;
      std::size_t last_positive = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (d2[i] <= 0.0) continue;
        last_positive = i;
        cumulative += d2[i];
        if (cumulative > target) {
          pick = i;
          break;
        }
      }
      if (pick == n) pick = last_positive;
    } else {
      // Every point coincides with a center; take the lowest unused index.
      pick = static_cast<std::size_t>(std::ranges::find(chosen, false) - chosen.begin());
    }

    centers.push_back(points[pick]);
    chosen[pick] = true;
    for (std::size_t i = 0; i < n; ++i) {
      d2[i] = std::min(d2[i], squared_distance(points[i], centers.back()));
    }
  }
  return centers;
}

std::vector<std::size_t> assign_nearest(std::span<const Point> points,
                                        std::span<const Point> centroids) {
  std::vector<std::size_t> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_c = 0;
    for (std::size_t c = 0; c < centroids.size(); ++c) {
      const double d = squared_distance(points[i], centroids[c]);
      if (d < best) {
        best = d;
        best_c = c;
      }
    }
    out[i] = best_c;
  }
  return out;
}

// Moves the farthest point of a multi-member cluster into each empty cluster.
void repair_empty_clusters(std::span<const Point> points, std::vector<std::size_t>& assignments,
                           std::vector<Point>& centroids) {
  const std::size_t k = centroids.size();
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t c : assignments) ++counts[c];

  for (std::size_t empty = 0; empty < k; ++empty) {
    if (counts[empty] != 0) continue;
    std::size_t donor = points.size();
    double farthest = -1.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const std::size_t c = assignments[i];
      if (counts[c] < 2) continue;
      const double d = squared_distance(points[i], centroids[c]);
      if (d > farthest) {
        farthest = d;
        donor = i;
      }
    }
    if (donor == points.size()) break;  // k <= n makes this unreachable.
    --counts[assignments[donor]];
    assignments[donor] = empty;
    counts[empty] = 1;
    centroids[empty] = points[donor];
  }
}

std::vector<Point> cluster_means(std::span<const Point> points,
                                 std::span<const std::size_t> assignments,
                                 std::span<const Point> previous) {
  const std::size_t dim = points.front().size();
  std::vector<Point> sums(previous.size(), Point(dim, 0.0));
  std::vector<std::size_t> counts(previous.size(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto& s = sums[assignments[i]];
    for (std::size_t d = 0; d < dim; ++d) s[d] += points[i][d];
    ++counts[assignments[i]];
  }
  for (std::size_t c = 0; c < sums.size(); ++c) {
    if (counts[c] == 0) {
      sums[c] = previous[c];
      continue;
    }
    const double inv = static_cast<double>(counts[c]);
    for (double& v : sums[c]) v /= inv;
  }
  return sums;
}

double objective(std::span<const Point> points, std::span<const std::size_t> assignments,
                 std::span<const Point> centroids) noexcept {
  double sum = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    sum += squared_distance(points[i], centroids[assignments[i]]);
  }
  return sum;
}

}  // namespace

ClusterModel kmeans(std::span<const std::vector<double>> points, const KMeansOptions& options) {
  const std::size_t n = points.size();
  if (n == 0) fail(ErrorCode::kInvalidArgument, "k-means needs at least one point");
  if (options.k < 1 || options.k > n) {
    fail(ErrorCode::kInvalidArgument, "k must lie in [1, " + std::to_string(n) + "], got " +
                                          std::to_string(options.k));
  }
  if (options.max_iter < 1) fail(ErrorCode::kInvalidArgument, "max_iter must be at least 1");
  const std::size_t dim = points.front().size();
  for (const auto& p : points) {
    if (p.size() != dim) fail(ErrorCode::kLengthMismatch, "k-means points differ in dimension");
  }

  Rng rng(options.seed);
  std::vector<Point> centroids = seed_plus_plus(points, options.k, rng);
  std::vector<std::size_t> assignments = assign_nearest(points, centroids);

  ClusterModel model;
  model.k = options.k;
  model.seed = options.seed;

  for (std::size_t it = 1; it <= options.max_iter; ++it) {
    repair_empty_clusters(points, assignments, centroids);
    centroids = cluster_means(points, assignments, centroids);
    model.objective_history.push_back(objective(points, assignments, centroids));
    model.iterations = it;

    std::vector<std::size_t> next = assign_nearest(points, centroids);
    if (next == assignments) {
      model.converged = true;
      break;
    }
    assignments = std::move(next);
  }

  if (!model.converged) {
    // The last assignment step ran against the final centroids; refresh the
    // centroids so the model describes that assignment.
    repair_empty_clusters(points, assignments, centroids);
    centroids = cluster_means(points, assignments, centroids);
    model.objective_history.push_back(objective(points, assignments, centroids));
  }

  model.point_distances.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    model.point_distances[i] = std::sqrt(squared_distance(points[i], centroids[assignments[i]]));
  }
  model.assignments = std::move(assignments);
  model.centroids = std::move(centroids);
  return model;
}

ClusterModel kmeans(const DistanceMatrix& matrix, const KMeansOptions& options) {
  const auto rows = matrix.rows();
  return kmeans(std::span<const std::vector<double>>(rows), options);
}

ClusterReport cluster_report(const ClusterModel& model, std::span<const std::string> labels) {
  if (labels.size() != model.assignments.size()) {
    fail(ErrorCode::kLengthMismatch, "cluster report needs one label per point (" +
                                         std::to_string(model.assignments.size()) + "), got " +
                                         std::to_string(labels.size()));
  }
  ClusterReport report;
  report.clusters.resize(model.k);
  for (std::size_t c = 0; c < model.k; ++c) report.clusters[c].cluster = c;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    report.clusters[model.assignments[i]].members.push_back(
        ClusterMember{i, labels[i], model.point_distances[i]});
  }
  for (auto& summary : report.clusters) {
    std::ranges::sort(summary.members, [](const ClusterMember& a, const ClusterMember& b) {
      if (a.distance != b.distance) return a.distance < b.distance;
      return a.index < b.index;
    });
    double total = 0.0;
    for (const auto& m : summary.members) total += m.distance;
    summary.mean_distance =
        summary.members.empty() ? 0.0 : total / static_cast<double>(summary.members.size());
  }
  return report;
}

}  // namespace fuzzydist
