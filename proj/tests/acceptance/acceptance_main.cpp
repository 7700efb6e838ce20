// Acceptance checks: one PASS/FAIL line per numbered criterion, each with the
// measured quantity next to its threshold. Exit status is non-zero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "fuzzydist/dataset.hpp"
#include "fuzzydist/distance_matrix.hpp"
#include "fuzzydist/kmeans.hpp"
#include "fuzzydist/metrics.hpp"
#include "fuzzydist/properties.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace fuzzydist;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& check) {
  const auto start = Clock::now();
  Outcome result;
  try {
    result = check();
  } catch (const std::exception& e) {
    result = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::printf("%s [%d] %s: %s (%s)\n", result.passed ? "PASS" : "FAIL", id, title.c_str(),
              result.detail.c_str(), timing);
  std::fflush(stdout);
  if (!result.passed) ++failures;
}

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(args, out, err);
  if (status != 0) std::fprintf(stderr, "%s", err.str().c_str());
  return status;
}

Outcome criterion1() {
  const auto start = Clock::now();
  Rng rng(1);
  std::size_t nonneg = 0, symmetry = 0, identity = 0, triangle = 0;
  for (int t = 0; t < 10'000; ++t) {
    const auto a = random_fuzzy_set(20, rng);
    const auto b = random_fuzzy_set(20, rng);
    const auto c = random_fuzzy_set(20, rng);
    const double ab = entropy_distance(a, b);
    const double bc = entropy_distance(b, c);
    const double ac = entropy_distance(a, c);
    if (ab < 0.0 || bc < 0.0 || ac < 0.0) ++nonneg;
    if (ab != entropy_distance(b, a)) ++symmetry;
    if (entropy_distance(a, a) != 0.0) ++identity;
    if (!(ac <= ab + bc + 1e-9)) ++triangle;
  }
  const double secs = seconds_since(start);
  const std::size_t total = nonneg + symmetry + identity + triangle;
  return {total == 0 && secs < 5.0,
          "10000 triples, violations nonneg=" + std::to_string(nonneg) + " symmetry=" +
              std::to_string(symmetry) + " identity=" + std::to_string(identity) +
              " triangle=" + std::to_string(triangle) + ", budget 5s"};
}

Outcome criterion2() {
  const auto start = Clock::now();
  Rng rng(2);
  std::size_t violations = 0;
  double worst = -1.0;
  for (int t = 0; t < 100'000; ++t) {
    double x = uniform01(rng);
    double y = uniform01(rng);
    if (x + y > 1.0) {
      x = 1.0 - x;
      y = 1.0 - y;
    }
    const double p = std::min(x, y);
    const double q = std::max(x, y);
    const double margin = binary_entropy(std::min(p + q, 1.0)) - binary_entropy(p) - binary_entropy(q);
    worst = std::max(worst, margin);
    if (margin > 1e-12) ++violations;
  }
  const double secs = seconds_since(start);
  return {violations == 0 && secs < 1.0,
          "100000 (p,q), violations=" + std::to_string(violations) +
              ", max H(p+q)-H(p)-H(q)=" + fmt(worst) + ", budget 1s"};
}

Outcome criterion3() {
  Rng rng(3);
  std::size_t nonzero = 0;
  for (int t = 0; t < 1000; ++t) {
    std::vector<double> m(20);
    for (double& v : m) v = uniform01(rng) < 0.5 ? 0.0 : 1.0;
    const auto a = FuzzySet::over(std::move(m));
    if (entropy_distance(a, complement(a)) != 0.0) ++nonzero;
  }
  return {nonzero == 0, "1000 crisp sets, non-zero results=" + std::to_string(nonzero)};
}

Outcome criterion4() {
  Rng rng(4);
  std::size_t changed = 0;
  std::vector<std::size_t> perm(20);
  for (int t = 0; t < 1000; ++t) {
    const auto a = random_fuzzy_set(20, rng);
    const auto b = random_fuzzy_set(20, rng);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = perm.size(); i > 1; --i) {
      const auto j = std::min<std::size_t>(static_cast<std::size_t>(uniform01(rng) * i), i - 1);
      std::swap(perm[i - 1], perm[j]);
    }
    std::vector<double> pa(20);
    std::vector<double> pb(20);
    for (std::size_t i = 0; i < 20; ++i) {
      pa[i] = a[perm[i]];
      pb[i] = b[perm[i]];
    }
    if (entropy_distance(a, b) !=
        entropy_distance(FuzzySet::over(std::move(pa)), FuzzySet::over(std::move(pb)))) {
      ++changed;
    }
  }
  return {changed == 0, "1000 (A,B,pi), changed=" + std::to_string(changed)};
}

Outcome criterion5() {
  Rng rng(5);
  std::size_t differ = 0;
  for (int t = 0; t < 10'000; ++t) {
    const auto a = random_fuzzy_set(20, rng);
    const auto b = random_fuzzy_set(20, rng);
    const auto u = fuzzy_union(a, b);
    const auto v = fuzzy_intersection(a, b);
    double via_lattice = 0.0;
    double via_abs = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      via_lattice += binary_entropy(u[i] - v[i]);
      via_abs += binary_entropy(std::abs(a[i] - b[i]));
    }
    via_lattice /= static_cast<double>(a.size());
    via_abs /= static_cast<double>(a.size());
    if (via_lattice != via_abs) ++differ;
  }
  return {differ == 0, "10000 pairs, mismatches=" + std::to_string(differ)};
}

Outcome criterion6(const fs::path& work) {
  const auto dir = work / "c6";
  if (run_cli({"matrix", "fixture:table1", "--out", dir.string()}) != 0) {
    return {false, "cmd_matrix failed"};
  }
  const auto reference =
      testing_support::read_reference_matrix(testing_support::reference_matrix_path());
  const auto written = testing_support::read_reference_matrix((dir / "matrix.csv").string());
  if (written.labels != reference.labels || written.values.size() != 28) {
    return {false, "label or shape mismatch"};
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < 28; ++i) {
    for (std::size_t j = 0; j < 28; ++j) {
      worst = std::max(worst, std::abs(written.values[i][j] - reference.values[i][j]));
    }
  }
  return {worst <= 1e-12, "28x28 entries, max |diff|=" + fmt(worst, 3) + ", tolerance 1e-12"};
}

Outcome criterion7() {
  const auto start = Clock::now();
  const auto matrix = build_distance_matrix(to_fuzzy_sets(table1_fixture()), MetricSpec::entropy());
  const auto labels = matrix.labels();
  const auto hu = static_cast<std::size_t>(std::find(labels.begin(), labels.end(), "Hungary") -
                                           labels.begin());
  const auto ru = static_cast<std::size_t>(std::find(labels.begin(), labels.end(), "Russian Fed") -
                                           labels.begin());
  int together = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto model = kmeans(matrix, {.k = 5, .seed = seed});
    if (model.assignments[hu] == model.assignments[ru]) ++together;
  }
  const double secs = seconds_since(start);

  const auto reference =
      testing_support::read_reference_matrix(testing_support::reference_matrix_path());
  const auto& row = reference.values[hu];
  std::vector<double> off;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j != hu) off.push_back(row[j]);
  }
  std::sort(off.begin(), off.end());
  const double median = off.size() % 2 == 1
                            ? off[off.size() / 2]
                            : 0.5 * (off[off.size() / 2 - 1] + off[off.size() / 2]);
  const bool closer = row[ru] < median;
  return {together >= 95 && closer && secs < 10.0,
          "co-clustered in " + std::to_string(together) + "/100 seeds (need >=95); d(Hungary, Russian Fed)=" +
              fmt(row[ru]) + " vs Hungary row median " + fmt(median) +
              (closer ? " (below)" : " (NOT below)") + ", budget 10s"};
}

Outcome criterion8(const fs::path& work) {
  const auto matrix = build_distance_matrix(to_fuzzy_sets(table1_fixture()), MetricSpec::entropy());
  const auto model = kmeans(matrix, {.k = 5, .seed = 0});
  std::size_t increases = 0;
  for (std::size_t t = 1; t < model.objective_history.size(); ++t) {
    if (model.objective_history[t] > model.objective_history[t - 1]) ++increases;
  }
  const auto all = kmeans(matrix, {.k = matrix.size(), .seed = 0});
  const bool all_zero = std::all_of(all.point_distances.begin(), all.point_distances.end(),
                                    [](double d) { return d == 0.0; });
  const auto one = work / "c8_t1";
  const auto eight = work / "c8_t8";
  const bool ran = run_cli({"cluster", "fixture:table1", "--threads", "1", "--out", one.string()}) == 0 &&
                   run_cli({"cluster", "fixture:table1", "--threads", "8", "--out", eight.string()}) == 0;
  const std::string a = slurp(one / "clusters.json");
  const bool identical = ran && !a.empty() && a == slurp(eight / "clusters.json");
  return {increases == 0 && all_zero && identical,
          "objective increases=" + std::to_string(increases) + " over " +
              std::to_string(model.objective_history.size()) + " iterations; k=n all-zero=" +
              (all_zero ? "yes" : "no") + "; clusters.json threads 1 vs 8 identical=" +
              (identical ? "yes" : "no")};
}

Outcome criterion9() {
  std::vector<std::string> failed;
  std::ostringstream detail;

  Rng rng(9);
  std::size_t mink = 0;
  for (double r : {1.0, 2.0, 3.0}) {
    for (int t = 0; t < 10'000; ++t) {
      const auto a = random_fuzzy_set(20, rng);
      const auto b = random_fuzzy_set(20, rng);
      const auto c = random_fuzzy_set(20, rng);
      if (!(minkowski_distance(a, c, r) <= minkowski_distance(a, b, r) + minkowski_distance(b, c, r) + 1e-9)) {
        ++mink;
      }
    }
  }
  detail << "minkowski triangle violations=" << mink;
  if (mink != 0) failed.push_back("minkowski");

  Rng pl(99);
  std::size_t far = 0;
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto a = oracle::random_piecewise_linear(20, pl);
    const auto b = oracle::random_piecewise_linear(20, pl);
    const double gap = std::abs(hausdorff_fuzzy(a, b, 100) - oracle::hausdorff_fuzzy(a, b, 1000));
    worst = std::max(worst, gap);
    if (!(gap <= 0.02)) ++far;
  }
  detail << "; hausdorff M=100 vs 1000-grid: " << far << "/100 pairs beyond 0.02, max gap " << fmt(worst);
  if (far != 0) failed.push_back("hausdorff");

  std::size_t s1_bad = 0;
  for (int t = 0; t < 10'000; ++t) {
    const auto a = random_fuzzy_set(20, rng);
    const auto b = random_fuzzy_set(20, rng);
    const double d = s1_distance(a, b);
    if (!(d >= 0.0 && d <= 1.0) || s1_distance(a, a) != 0.0) ++s1_bad;
  }
  detail << "; s1 range/identity violations=" << s1_bad;
  if (s1_bad != 0) failed.push_back("s1");

  const auto f = bonissone_features(FuzzySet::over({0.5, 0.5, 0.5, 0.5}));
  const double feature_err = std::max({std::abs(f.power - 2.0), std::abs(f.entropy - 4.0 * std::log(2.0)),
                                       std::abs(f.centroid - 2.5), std::abs(f.skewness)});
  detail << "; bonissone([0.5x4]) max error=" << fmt(feature_err, 3);
  if (!(feature_err <= 1e-12)) failed.push_back("bonissone");

  if (!failed.empty()) {
    detail << "; failing parts:";
    for (const auto& part : failed) detail << ' ' << part;
  }
  return {failed.empty(), detail.str()};
}

}  // namespace

int main() {
  const fs::path work = fs::temp_directory_path() / "fuzzydist_acceptance";
  fs::remove_all(work);
  fs::create_directories(work);

  report(1, "entropy distance semi-metric axioms", criterion1);
  report(2, "pointwise entropy subadditivity", criterion2);
  report(3, "complement property on crisp sets", criterion3);
  report(4, "permutation invariance", criterion4);
  report(5, "max-min and |a-b| formulations agree", criterion5);
  report(6, "Table 1 matrix vs reference script", [&] { return criterion6(work); });
  report(7, "Hungary / Russian Fed co-clustering", criterion7);
  report(8, "k-means invariants", [&] { return criterion8(work); });
  report(9, "baseline metric sanity", criterion9);

  fs::remove_all(work);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
