#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "fuzzydist/csv.hpp"
#include "fuzzydist/error.hpp"
#include "fuzzydist/metrics.hpp"
#include "fuzzydist/properties.hpp"

namespace fuzzydist::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kFileDigits = 12;

// Value rounded to the 12 significant digits used in every output file.
double file_value(double v) { return std::stod(csv::format_number(v, kFileDigits)); }

std::string file_number(double v) { return csv::format_number(v, kFileDigits); }

int report(const std::exception& e, int status, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  return status;
}

// Exit status for a failure while reading inputs.
int load_status(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kInvalidWeights:
    case ErrorCode::kDomainMismatch:
    case ErrorCode::kInvalidArgument:
      return kUserError;
    default:
      return kIoFailure;
  }
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) fail(ErrorCode::kIo, "cannot create directory '" + path.parent_path().string() + "'");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  out << contents;
  out.flush();
  if (!out) fail(ErrorCode::kIo, "failed writing '" + path.string() + "'");
}

struct Loaded {
  Dataset dataset;
  std::vector<LabeledSet> sets;
  MetricSpec metric;
};

// Shared front half of every data command. Returns a status on failure.
std::optional<Loaded> prepare(const RunConfig& config, std::ostream& err, int& status) {
  Dataset dataset;
  try {
    dataset = load_input(config);
  } catch (const Error& e) {
    status = load_status(e);
    report(e, status, err);
    return std::nullopt;
  }
  if (dataset.entity_count() == 0) {
    err << "error: input contains no entities\n";
    status = kIoFailure;
    return std::nullopt;
  }
  try {
    auto sets = to_fuzzy_sets(dataset);
    MetricSpec metric = make_metric(config, sets.front().set.domain());
    return Loaded{std::move(dataset), std::move(sets), std::move(metric)};
  } catch (const Error& e) {
    status = load_status(e);
    report(e, status, err);
    return std::nullopt;
  }
}

std::string matrix_csv(const DistanceMatrix& m) {
  std::ostringstream out;
  std::vector<std::string> fields{""};
  fields.insert(fields.end(), m.labels().begin(), m.labels().end());
  csv::write_record(out, fields);
  for (std::size_t i = 0; i < m.size(); ++i) {
    fields.assign(1, m.labels()[i]);
    for (double v : m.row(i)) fields.push_back(file_number(v));
    csv::write_record(out, fields);
  }
  return out.str();
}

Json metric_json(const MetricSpec& metric) {
  Json j;
  j["name"] = to_string(metric.kind());
  if (metric.kind() == MetricKind::kMinkowski) j["r"] = metric.r();
  if (metric.kind() == MetricKind::kHausdorff) j["levels"] = metric.levels();
  if (metric.kind() == MetricKind::kWeightedEntropy) {
    Json w = Json::array();
    for (double v : metric.weights()->weights()) w.push_back(file_value(v));
    j["weights"] = std::move(w);
  }
  return j;
}

std::string matrix_json(const DistanceMatrix& m, const MetricSpec& metric) {
  Json j;
  j["metric"] = metric_json(metric);
  j["labels"] = Json(std::vector<std::string>(m.labels().begin(), m.labels().end()));
  Json values = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (double v : m.row(i)) row.push_back(file_value(v));
    values.push_back(std::move(row));
  }
  j["values"] = std::move(values);
  return j.dump(2) + "\n";
}

std::string clusters_json(const ClusterModel& model, const ClusterReport& report,
                          const RunConfig& config, const MetricSpec& metric,
                          std::span<const std::string> labels) {
  Json j;
  j["metric"] = metric_json(metric);
  j["k"] = model.k;
  j["seed"] = model.seed;
  j["max_iter"] = config.max_iter;
  j["iterations"] = model.iterations;
  j["converged"] = model.converged;
  j["labels"] = Json(std::vector<std::string>(labels.begin(), labels.end()));
  j["assignments"] = model.assignments;
  Json centroids = Json::array();
  for (const auto& c : model.centroids) {
    Json row = Json::array();
    for (double v : c) row.push_back(file_value(v));
    centroids.push_back(std::move(row));
  }
  j["centroids"] = std::move(centroids);
  Json distances = Json::array();
  for (double v : model.point_distances) distances.push_back(file_value(v));
  j["point_distances"] = std::move(distances);
  Json objective = Json::array();
  for (double v : model.objective_history) objective.push_back(file_value(v));
  j["objective_history"] = std::move(objective);

  Json clusters = Json::array();
  for (const auto& summary : report.clusters) {
    Json c;
    c["cluster"] = summary.cluster;
    c["size"] = summary.size();
    c["mean_distance"] = file_value(summary.mean_distance);
    Json members = Json::array();
    for (const auto& m : summary.members) {
      members.push_back(Json{{"entity", m.name}, {"distance", file_value(m.distance)}});
    }
    c["members"] = std::move(members);
    clusters.push_back(std::move(c));
  }
  j["clusters"] = std::move(clusters);
  return j.dump(2) + "\n";
}

std::string scatter_csv(const ClusterReport& report) {
  std::ostringstream out;
  csv::write_record(out, {"cluster_index", "entity", "distance_to_centroid"});
  for (const auto& summary : report.clusters) {
    for (const auto& m : summary.members) {
      csv::write_record(out, {std::to_string(summary.cluster), m.name, file_number(m.distance)});
    }
  }
  return out.str();
}

// Base-10 entropy distance wrapped so that d(A, B) != d(B, A) whenever the
// first memberships differ. Only reachable through --inject-fault.
double faulty_entropy(const FuzzySet& a, const FuzzySet& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double p = std::abs(a[i] - b[i]);
    if (p > 0.0 && p < 1.0) sum += -p * std::log10(p) - (1.0 - p) * std::log10(1.0 - p);
  }
  const double d = sum / static_cast<double>(a.size());
  return a[0] > b[0] ? d * 1.5 : d;
}

}  // namespace

Dataset load_input(const RunConfig& config) {
  Dataset dataset = config.input == kFixturePath ? table1_fixture()
                                                 : load_csv_file(config.input, config.has_header);
  if (config.normalize) return normalize_minmax(std::move(dataset));
  if (dataset.normalized) return dataset;
  return use_raw_as_membership(std::move(dataset));
}

WeightVector load_weights(const std::filesystem::path& path, const Domain& domain) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open weights file '" + path.string() + "'");
  std::vector<double> weights;
  for (const auto& record : csv::read_records(in)) {
    for (const auto& field : record.fields) {
      double v = 0.0;
      if (!csv::parse_double(field, v)) {
        fail(ErrorCode::kNonNumeric, "weights file line " + std::to_string(record.line) + ": '" +
                                         field + "' is not a number");
      }
      weights.push_back(v);
    }
  }
  return WeightVector(domain, std::move(weights));
}

MetricSpec make_metric(const RunConfig& config, const Domain& domain) {
  const auto name = std::string(to_string(config.metric));
  if (config.r && config.metric != MetricKind::kMinkowski) {
    fail(ErrorCode::kInvalidArgument, "--r only applies to --metric minkowski");
  }
  if (config.levels && config.metric != MetricKind::kHausdorff) {
    fail(ErrorCode::kInvalidArgument, "--levels only applies to --metric hausdorff");
  }
  if (config.weights_path && config.metric != MetricKind::kWeightedEntropy) {
    fail(ErrorCode::kInvalidArgument, "--weights only applies to --metric weighted");
  }
  switch (config.metric) {
    case MetricKind::kEntropy: return MetricSpec::entropy();
    case MetricKind::kS1: return MetricSpec::s1();
    case MetricKind::kBonissone: return MetricSpec::bonissone();
    case MetricKind::kMinkowski:
      if (!config.r) fail(ErrorCode::kInvalidArgument, "--metric minkowski requires --r");
      return MetricSpec::minkowski(*config.r);
    case MetricKind::kHausdorff:
      return MetricSpec::hausdorff(config.levels.value_or(kDefaultHausdorffLevels));
    case MetricKind::kWeightedEntropy:
      if (!config.weights_path) fail(ErrorCode::kInvalidArgument, "--metric weighted requires --weights");
      return MetricSpec::weighted_entropy(load_weights(*config.weights_path, domain));
  }
  fail(ErrorCode::kInvalidArgument, "unknown metric " + name);
}

int cmd_dist(const RunConfig& config, const std::string& name_a, const std::string& name_b,
             std::ostream& out, std::ostream& err) {
  int status = kOk;
  auto loaded = prepare(config, err, status);
  if (!loaded) return status;
  const auto ia = loaded->dataset.find_entity(name_a);
  const auto ib = loaded->dataset.find_entity(name_b);
  for (const auto& [index, name] : {std::pair{ia, &name_a}, std::pair{ib, &name_b}}) {
    if (!index) {
      err << "error: unknown entity '" << *name << "'\n";
      return kUserError;
    }
  }
  try {
    const double d = loaded->metric(loaded->sets[*ia].set, loaded->sets[*ib].set);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", d);
    out << buf << '\n';
    return kOk;
  } catch (const Error& e) {
    return report(e, kUserError, err);
  }
}

int cmd_matrix(const RunConfig& config, std::ostream& out, std::ostream& err) {
  int status = kOk;
  auto loaded = prepare(config, err, status);
  if (!loaded) return status;
  std::optional<DistanceMatrix> matrix;
  try {
    matrix = build_distance_matrix(loaded->sets, loaded->metric, config.threads);
  } catch (const Error& e) {
    return report(e, kUserError, err);
  }
  try {
    const bool json = config.format == OutputFormat::kJson;
    const auto path = config.out_dir / (json ? "matrix.json" : "matrix.csv");
    write_file(path, json ? matrix_json(*matrix, loaded->metric) : matrix_csv(*matrix));
    out << "wrote " << path.string() << " (" << matrix->size() << "x" << matrix->size() << ")\n";
    return kOk;
  } catch (const Error& e) {
    return report(e, kIoFailure, err);
  }
}

int cmd_cluster(const RunConfig& config, std::ostream& out, std::ostream& err) {
  int status = kOk;
  auto loaded = prepare(config, err, status);
  if (!loaded) return status;
  const std::size_t n = loaded->sets.size();
  if (config.k < 1 || config.k > n) {
    err << "error: --k must lie in [1, " << n << "], got " << config.k << '\n';
    return kUserError;
  }
  if (config.max_iter < 1) {
    err << "error: --max-iter must be at least 1\n";
    return kUserError;
  }
  std::string model_json;
  std::string scatter;
  ClusterReport cluster_summary;
  try {
    if (n < 2) fail(ErrorCode::kInvalidArgument, "clustering needs at least two entities");
    const DistanceMatrix matrix = build_distance_matrix(loaded->sets, loaded->metric, config.threads);
    const ClusterModel model =
        kmeans(matrix, KMeansOptions{config.k, config.seed, config.max_iter});
    cluster_summary = cluster_report(model, matrix.labels());
    model_json = clusters_json(model, cluster_summary, config, loaded->metric, matrix.labels());
    scatter = scatter_csv(cluster_summary);
  } catch (const Error& e) {
    return report(e, kUserError, err);
  }
  try {
    write_file(config.out_dir / "clusters.json", model_json);
    write_file(config.out_dir / "cluster_scatter.csv", scatter);
  } catch (const Error& e) {
    return report(e, kIoFailure, err);
  }
  for (const auto& c : cluster_summary.clusters) {
    out << "cluster " << c.cluster << " (" << c.size() << "):";
    for (const auto& m : c.members) out << ' ' << m.name;
    out << '\n';
  }
  return kOk;
}

int cmd_profiles(const RunConfig& config, const std::vector<std::string>& names,
                 std::ostream& out, std::ostream& err) {
  int status = kOk;
  auto loaded = prepare(config, err, status);
  if (!loaded) return status;
  const Dataset& ds = loaded->dataset;
  std::vector<std::size_t> rows;
  if (names.empty()) {
    for (std::size_t i = 0; i < ds.entity_count(); ++i) rows.push_back(i);
  } else {
    for (const auto& name : names) {
      const auto index = ds.find_entity(name);
      if (!index) {
        err << "error: unknown entity '" << name << "'\n";
        return kUserError;
      }
      rows.push_back(*index);
    }
  }
  std::ostringstream body;
  csv::write_record(body, {"entity", "attribute", "membership"});
  for (std::size_t i : rows) {
    for (std::size_t j = 0; j < ds.attribute_count(); ++j) {
      csv::write_record(body, {ds.entity_labels[i], ds.attribute_labels[j],
                               file_number((*ds.normalized)[i][j])});
    }
  }
  try {
    const auto path = config.out_dir / "profiles.csv";
    write_file(path, body.str());
    out << "wrote " << path.string() << " (" << rows.size() << " entities)\n";
    return kOk;
  } catch (const Error& e) {
    return report(e, kIoFailure, err);
  }
}

int cmd_selftest(const SelftestConfig& config, std::ostream& out, std::ostream& err) {
  const SetMetric metric = config.inject_fault ? SetMetric(faulty_entropy) : SetMetric(entropy_distance);
  PropertyOptions options;
  options.triples = config.triples;
  options.seed = config.seed;
  const auto results = run_selftest(options, metric);
  const PropertyResult* first_failure = nullptr;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
    if (!r.passed && first_failure == nullptr) first_failure = &r;
  }
  if (first_failure != nullptr) {
    err << "counterexample for '" << first_failure->name << "': " << first_failure->counterexample
        << '\n';
    return kPropertyFailure;
  }
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy-set distances, distance matrices and k-means clustering", "fuzzydist"};
  app.require_subcommand(1);

  RunConfig config;
  std::string metric_name = "entropy";
  std::string format_name = "csv";
  double r = 0.0;
  std::size_t levels = 0;
  std::string weights;
  bool no_header = false;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", config.input, "CSV file or fixture:table1")->required();
    sub->add_flag("--normalize", config.normalize, "Apply per-column min-max scaling first");
    sub->add_flag("--no-header", no_header, "Input CSV has no header row");
  };
  auto add_metric = [&](CLI::App* sub) {
    sub->add_option("--metric", metric_name, "Distance to use")
        ->check(CLI::IsMember({"entropy", "weighted", "minkowski", "hausdorff", "s1", "bonissone"}));
    sub->add_option("--r", r, "Minkowski exponent (>= 1)");
    sub->add_option("--levels", levels, "Alpha levels for hausdorff (default 100)");
    sub->add_option("--weights", weights, "Weights CSV for --metric weighted");
  };
  auto add_parallel = [&](CLI::App* sub) {
    sub->add_option("--threads", config.threads, "Worker threads for the distance matrix")
        ->check(CLI::Range(1u, 1024u));
    sub->add_option("--out", config.out_dir, "Output directory");
  };

  std::string name_a;
  std::string name_b;
  auto* dist = app.add_subcommand("dist", "Print the distance between two entities");
  add_input(dist);
  dist->add_option("a", name_a, "First entity")->required();
  dist->add_option("b", name_b, "Second entity")->required();
  add_metric(dist);

  auto* matrix = app.add_subcommand("matrix", "Write the pairwise distance matrix");
  add_input(matrix);
  add_metric(matrix);
  add_parallel(matrix);
  matrix->add_option("--format", format_name, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* cluster = app.add_subcommand("cluster", "k-means on the rows of the distance matrix");
  add_input(cluster);
  add_metric(cluster);
  add_parallel(cluster);
  cluster->add_option("--k", config.k, "Number of clusters");
  cluster->add_option("--seed", config.seed, "PRNG seed (MT19937-64)");
  cluster->add_option("--max-iter", config.max_iter, "Iteration limit");

  std::vector<std::string> profile_names;
  auto* profiles = app.add_subcommand("profiles", "Write membership profiles for plotting");
  add_input(profiles);
  profiles->add_option("names", profile_names, "Entities (default: all)");
  profiles->add_option("--out", config.out_dir, "Output directory");

  SelftestConfig selftest_config;
  auto* selftest = app.add_subcommand("selftest", "Run the randomized metric-axiom checks");
  selftest->add_option("--triples", selftest_config.triples, "Random triples per metric")
      ->check(CLI::PositiveNumber);
  selftest->add_option("--seed", selftest_config.seed, "PRNG seed");
  selftest->add_flag("--inject-fault", selftest_config.inject_fault)->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUserError;
  }

  if (selftest->parsed()) return cmd_selftest(selftest_config, out, err);

  config.metric = *parse_metric_kind(metric_name);
  config.format = format_name == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
  config.has_header = !no_header;
  for (auto* sub : {dist, matrix, cluster}) {
    if (!sub->parsed()) continue;
    if (sub->count("--r") != 0) config.r = r;
    if (sub->count("--levels") != 0) config.levels = levels;
    if (sub->count("--weights") != 0) config.weights_path = weights;
  }

  if (dist->parsed()) return cmd_dist(config, name_a, name_b, out, err);
  if (matrix->parsed()) return cmd_matrix(config, out, err);
  if (cluster->parsed()) return cmd_cluster(config, out, err);
  return cmd_profiles(config, profile_names, out, err);
}

}  // namespace fuzzydist::cli
