#include "fuzzydist/fuzzy_set.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "fuzzydist/error.hpp"

namespace fuzzydist {

Domain::Domain(std::size_t size) : size_(size) {
  if (size == 0) fail(ErrorCode::kInvalidArgument, "domain size must be at least 1");
}

Domain::Domain(std::vector<std::string> labels) : size_(labels.size()) {
  if (size_ == 0) fail(ErrorCode::kInvalidArgument, "domain size must be at least 1");
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      fail(ErrorCode::kDuplicateName, "duplicate domain label '" + label + "'");
    }
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

std::span<const std::string> Domain::labels() const noexcept {
  if (!labels_) return {};
  return *labels_;
}

const std::string& Domain::label(std::size_t index) const {
  if (!labels_) fail(ErrorCode::kInvalidArgument, "domain has no labels");
  if (index >= size_) fail(ErrorCode::kOutOfRange, "domain index out of range");
  return (*labels_)[index];
}

bool Domain::compatible_with(const Domain& other) const noexcept {
  if (size_ != other.size_) return false;
  if (!labels_ || !other.labels_ || labels_ == other.labels_) return true;
  return *labels_ == *other.labels_;
}

FuzzySet::FuzzySet(Domain domain, std::vector<double> membership)
    : domain_(std::move(domain)), membership_(std::move(membership)) {
  if (membership_.size() != domain_.size()) {
    fail(ErrorCode::kLengthMismatch,
         "membership vector has " + std::to_string(membership_.size()) +
             " values but the domain has " + std::to_string(domain_.size()));
  }
  for (std::size_t i = 0; i < membership_.size(); ++i) {
    const double m = membership_[i];
    if (!std::isfinite(m) || m < 0.0 || m > 1.0) {
      fail(ErrorCode::kOutOfRange,
           "membership at element " + std::to_string(i + 1) + " is outside [0, 1]");
    }
  }
}

FuzzySet FuzzySet::over(std::vector<double> membership) {
  Domain domain(membership.size());
  return FuzzySet(std::move(domain), std::move(membership));
}

void require_same_domain(const FuzzySet& a, const FuzzySet& b) {
  if (!a.domain().compatible_with(b.domain())) {
    fail(ErrorCode::kDomainMismatch,
         "fuzzy sets live on different domains (sizes " + std::to_string(a.size()) + " and " +
             std::to_string(b.size()) + ")");
  }
}

namespace {

template <typename Op>
FuzzySet pointwise(const FuzzySet& a, const FuzzySet& b, Op op) {
  require_same_domain(a, b);
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a[i], b[i]);
  return FuzzySet(a.domain(), std::move(out));
}

}  // namespace

FuzzySet fuzzy_union(const FuzzySet& a, const FuzzySet& b) {
  return pointwise(a, b, [](double x, double y) { return std::max(x, y); });
}

FuzzySet fuzzy_intersection(const FuzzySet& a, const FuzzySet& b) {
  return pointwise(a, b, [](double x, double y) { return std::min(x, y); });
}

FuzzySet complement(const FuzzySet& a) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = 1.0 - a[i];
  return FuzzySet(a.domain(), std::move(out));
}

FuzzySet sym_diff_membership(const FuzzySet& a, const FuzzySet& b) {
  return pointwise(a, b, [](double x, double y) { return std::max(x, y) - std::min(x, y); });
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    fail(ErrorCode::kOutOfRange, "binary entropy argument must lie in [0, 1]");
  }
  if (p == 0.0 || p == 1.0) return 0.0;
  // Evaluate on the smaller of the two outcome probabilities so that
  // H(p) and H(1 - p) go through the same arithmetic.
  const double lo = std::min(p, 1.0 - p);
  const double hi = 1.0 - lo;
  const double h = -lo * std::log2(lo) - hi * std::log2(hi);
  return std::clamp(h, 0.0, 1.0);
}

bool is_crisp(const FuzzySet& a) noexcept {
  return std::ranges::all_of(a.membership(), [](double m) { return m == 0.0 || m == 1.0; });
}

IndexSet alpha_cut(const FuzzySet& a, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    fail(ErrorCode::kOutOfRange, "alpha must lie in (0, 1]");
  }
  IndexSet cut;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] >= alpha) cut.push_back(i);
  }
  return cut;
}

}  // namespace fuzzydist
