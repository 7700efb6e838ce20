#include "fuzzydist/properties.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "fuzzydist/csv.hpp"
#include "fuzzydist/metrics.hpp"

namespace fuzzydist {

namespace {

std::string describe(const FuzzySet& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i != 0) out += ", ";
    out += csv::format_number(a[i], 17);
  }
  return out + "]";
}

std::string num(double v) { return csv::format_number(v, 17); }

PropertyResult named(std::string name) {
  PropertyResult result;
  result.name = std::move(name);
  return result;
}

void record_failure(PropertyResult& result, std::string message) {
  if (result.passed) {
    result.passed = false;
    result.counterexample = std::move(message);
  }
}

}  // namespace

FuzzySet random_fuzzy_set(std::size_t n, Rng& rng) {
  std::vector<double> m(n);
  for (double& v : m) v = uniform01(rng);
  return FuzzySet::over(std::move(m));
}

std::vector<PropertyResult> check_semimetric(std::string_view metric_name, const SetMetric& metric,
                                             const PropertyOptions& options,
                                             double triangle_slack) {
  const std::string prefix(metric_name);
  PropertyResult nonneg = named(prefix + ": non-negativity");
  PropertyResult symmetry = named(prefix + ": symmetry (bit-exact)");
  PropertyResult identity = named(prefix + ": d(A,A) = 0");
  PropertyResult triangle = named(prefix + ": triangle inequality");

  Rng rng(options.seed);
  for (std::size_t t = 0; t < options.triples; ++t) {
    const FuzzySet a = random_fuzzy_set(options.domain_size, rng);
    const FuzzySet b = random_fuzzy_set(options.domain_size, rng);
    const FuzzySet c = random_fuzzy_set(options.domain_size, rng);
    const double ab = metric(a, b);
    const double ba = metric(b, a);
    const double bc = metric(b, c);
    const double ac = metric(a, c);
    const double aa = metric(a, a);

    if (!(ab >= 0.0 && bc >= 0.0 && ac >= 0.0)) {
      record_failure(nonneg, "A=" + describe(a) + " B=" + describe(b) + " d(A,B)=" + num(ab));
    }
    if (ab != ba) {
      record_failure(symmetry, "A=" + describe(a) + " B=" + describe(b) + " d(A,B)=" + num(ab) +
                                   " d(B,A)=" + num(ba));
    }
    if (aa != 0.0) {
      record_failure(identity, "A=" + describe(a) + " d(A,A)=" + num(aa));
    }
    if (!(ac <= ab + bc + triangle_slack)) {
      record_failure(triangle, "A=" + describe(a) + " B=" + describe(b) + " C=" + describe(c) +
                                   " d(A,C)=" + num(ac) + " > d(A,B)+d(B,C)=" + num(ab + bc));
    }
  }
  std::vector<PropertyResult> out{nonneg, symmetry, identity, triangle};
  for (auto& r : out) r.cases = options.triples;
  return out;
}

PropertyResult check_entropy_subadditivity(std::size_t cases, std::uint64_t seed) {
  PropertyResult result = named("binary entropy: H(p+q) <= H(p) + H(q)");
  result.cases = cases;
  Rng rng(seed);
  for (std::size_t t = 0; t < cases; ++t) {
    // Uniform on {x + y <= 1} by reflecting the upper triangle, then ordered.
    double x = uniform01(rng);
    double y = uniform01(rng);
    if (x + y > 1.0) {
      x = 1.0 - x;
      y = 1.0 - y;
    }
    const double p = std::min(x, y);
    const double q = std::max(x, y);
    const double lhs = binary_entropy(std::min(p + q, 1.0));
    const double rhs = binary_entropy(p) + binary_entropy(q);
    if (!(lhs <= rhs + 1e-12)) {
      record_failure(result, "p=" + num(p) + " q=" + num(q) + " H(p+q)=" + num(lhs) +
                                 " H(p)+H(q)=" + num(rhs));
    }
  }
  return result;
}

PropertyResult check_complement_property(const SetMetric& metric, std::size_t cases,
                                         std::size_t n, std::uint64_t seed) {
  PropertyResult result = named("complement property: d(A, not A) = 0 for crisp A");
  result.cases = cases;
  Rng rng(seed);
  for (std::size_t t = 0; t < cases; ++t) {
    std::vector<double> m(n);
    for (double& v : m) v = static_cast<double>(rng() >> 63);
    const FuzzySet a = FuzzySet::over(std::move(m));
    const double d = metric(a, complement(a));
    if (d != 0.0) record_failure(result, "A=" + describe(a) + " d(A, not A)=" + num(d));
  }
  return result;
}

PropertyResult check_permutation_invariance(const SetMetric& metric, std::size_t cases,
                                            std::size_t n, std::uint64_t seed) {
  PropertyResult result = named("permutation invariance (bit-exact)");
  result.cases = cases;
  Rng rng(seed);
  std::vector<std::size_t> perm(n);
  for (std::size_t t = 0; t < cases; ++t) {
    const FuzzySet a = random_fuzzy_set(n, rng);
    const FuzzySet b = random_fuzzy_set(n, rng);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    // Fisher-Yates driven by the project PRNG for reproducibility.
    for (std::size_t i = n; i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(i));
      std::swap(perm[i - 1], perm[std::min(j, i - 1)]);
    }
    std::vector<double> pa(n);
    std::vector<double> pb(n);
    for (std::size_t i = 0; i < n; ++i) {
      pa[i] = a[perm[i]];
      pb[i] = b[perm[i]];
    }
    const double before = metric(a, b);
    const double after = metric(FuzzySet::over(std::move(pa)), FuzzySet::over(std::move(pb)));
    if (before != after) {
      record_failure(result, "A=" + describe(a) + " B=" + describe(b) + " d=" + num(before) +
                                 " permuted d=" + num(after));
    }
  }
  return result;
}

std::vector<PropertyResult> run_selftest(const PropertyOptions& options, const SetMetric& entropy) {
  std::vector<PropertyResult> results = check_semimetric("entropy", entropy, options);
  const std::size_t structural = std::max<std::size_t>(options.triples / 10, 1);
  results.push_back(check_entropy_subadditivity(options.triples * 10, options.seed + 1));
  results.push_back(
      check_complement_property(entropy, structural, options.domain_size, options.seed + 2));
  results.push_back(
      check_permutation_invariance(entropy, structural, options.domain_size, options.seed + 3));
  for (double r : {1.0, 2.0, 3.0}) {
    auto mink = check_semimetric(
        "minkowski r=" + csv::format_number(r, 3),
        [r](const FuzzySet& a, const FuzzySet& b) { return minkowski_distance(a, b, r); },
        PropertyOptions{options.triples, options.domain_size, options.seed + 10 + static_cast<std::uint64_t>(r)});
    results.insert(results.end(), mink.begin(), mink.end());
  }
  return results;
}

}  // namespace fuzzydist
