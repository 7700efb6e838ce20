#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fuzzydist/dataset.hpp"
#include "fuzzydist/distance_matrix.hpp"
#include "fuzzydist/kmeans.hpp"

namespace fuzzydist::cli {

/// Process exit statuses.
enum ExitStatus : int {
  kOk = 0,
  kIoFailure = 1,
  kUserError = 2,
  kPropertyFailure = 3,
};

enum class OutputFormat { kCsv, kJson };

inline constexpr std::string_view kFixturePath = "fixture:table1";

struct RunConfig {
  std::string input = std::string(kFixturePath);
  MetricKind metric = MetricKind::kEntropy;
  std::optional<double> r;
  std::optional<std::size_t> levels;
  std::optional<std::filesystem::path> weights_path;
  std::size_t k = kDefaultClusterCount;
  std::uint64_t seed = 0;
  std::size_t max_iter = kDefaultMaxIterations;
  std::filesystem::path out_dir = ".";
  OutputFormat format = OutputFormat::kCsv;
  unsigned threads = 1;
  bool normalize = false;
  bool has_header = true;
};

/// Loads the input named by the config ("fixture:table1" or a CSV path) and
/// applies --normalize or the raw-as-membership check.
Dataset load_input(const RunConfig& config);

/// Reads a weights file: N non-negative reals, comma- or newline-separated.
WeightVector load_weights(const std::filesystem::path& path, const Domain& domain);

/// Checks that metric parameters are present exactly when required and
/// builds the metric. Throws Error(kInvalidArgument) otherwise.
MetricSpec make_metric(const RunConfig& config, const Domain& domain);

int cmd_dist(const RunConfig& config, const std::string& name_a, const std::string& name_b,
             std::ostream& out, std::ostream& err);
int cmd_matrix(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_cluster(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_profiles(const RunConfig& config, const std::vector<std::string>& names,
                 std::ostream& out, std::ostream& err);

struct SelftestConfig {
  std::size_t triples = 10'000;
  std::uint64_t seed = 0x5eed;
  /// Test hook: swap in a base-10 entropy distance with broken symmetry.
  bool inject_fault = false;
};

int cmd_selftest(const SelftestConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuzzydist::cli
