#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzydist/fuzzy_set.hpp"
#include "fuzzydist/random.hpp"

namespace fuzzydist {

// Randomized checks of the metric axioms, packaged so they can run from the
// command line as well as from tests.

using SetMetric = std::function<double(const FuzzySet&, const FuzzySet&)>;

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;  // first failing case, empty when passed
};

struct PropertyOptions {
  std::size_t triples = 10'000;
  std::size_t domain_size = 20;
  std::uint64_t seed = 0x5eed;
};

/// Fuzzy set with i.i.d. uniform memberships in [0, 1).
FuzzySet random_fuzzy_set(std::size_t n, Rng& rng);

/// Non-negativity, bit-exact symmetry, exact d(A, A) = 0, and the triangle
/// inequality with the given slack, over `options.triples` random triples.
std::vector<PropertyResult> check_semimetric(std::string_view metric_name, const SetMetric& metric,
                                             const PropertyOptions& options,
                                             double triangle_slack = 1e-9);

/// H(p + q) <= H(p) + H(q) + 1e-12 for random 0 <= p <= q with p + q <= 1.
PropertyResult check_entropy_subadditivity(std::size_t cases, std::uint64_t seed);

/// metric(A, complement(A)) == 0 exactly for random crisp A.
PropertyResult check_complement_property(const SetMetric& metric, std::size_t cases,
                                         std::size_t n, std::uint64_t seed);

/// metric(pi A, pi B) == metric(A, B) bit-for-bit for random permutations.
PropertyResult check_permutation_invariance(const SetMetric& metric, std::size_t cases,
                                            std::size_t n, std::uint64_t seed);

/// The full suite behind `fuzzydist selftest`: semi-metric axioms and the
/// structural properties for `entropy`, plus the metric axioms for the
/// Minkowski distance with r in {1, 2, 3}.
std::vector<PropertyResult> run_selftest(const PropertyOptions& options, const SetMetric& entropy);

}  // namespace fuzzydist
