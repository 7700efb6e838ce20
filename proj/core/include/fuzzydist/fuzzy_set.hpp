#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace fuzzydist {

/// A finite domain {1, ..., N}, optionally with one distinct label per
/// element. Labels are shared between copies; a Domain is immutable.
class Domain {
 public:
  explicit Domain(std::size_t size);
  explicit Domain(std::vector<std::string> labels);

  std::size_t size() const noexcept { return size_; }
  bool has_labels() const noexcept { return labels_ != nullptr; }
  std::span<const std::string> labels() const noexcept;
  const std::string& label(std::size_t index) const;

  /// Two domains are compatible when they have the same size and, if both
  /// carry labels, the same labels in the same order.
  bool compatible_with(const Domain& other) const noexcept;

 private:
  std::size_t size_;
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// A fuzzy set over a finite Domain: one membership degree in [0, 1] per
/// element. Construction validates the invariants, so every FuzzySet in the
/// program is well formed.
class FuzzySet {
 public:
  FuzzySet(Domain domain, std::vector<double> membership);

  /// Fuzzy set over an unlabeled domain whose size is the vector length.
  static FuzzySet over(std::vector<double> membership);

  const Domain& domain() const noexcept { return domain_; }
  std::span<const double> membership() const noexcept { return membership_; }
  std::size_t size() const noexcept { return membership_.size(); }
  double operator[](std::size_t index) const noexcept { return membership_[index]; }

  friend bool operator==(const FuzzySet& a, const FuzzySet& b) noexcept {
    return a.membership_ == b.membership_;
  }

 private:
  Domain domain_;
  std::vector<double> membership_;
};

struct LabeledSet {
  std::string label;
  FuzzySet set;
};

/// Sorted 0-based element indices of a crisp subset of a domain.
using IndexSet = std::vector<std::size_t>;

// Throws kDomainMismatch unless the two sets live on compatible domains.
void require_same_domain(const FuzzySet& a, const FuzzySet& b);

FuzzySet fuzzy_union(const FuzzySet& a, const FuzzySet& b);
FuzzySet fuzzy_intersection(const FuzzySet& a, const FuzzySet& b);
FuzzySet complement(const FuzzySet& a);

/// Membership of the symmetric difference, max(a, b) - min(a, b) pointwise.
/// In IEEE arithmetic this is bit-identical to |a - b|.
FuzzySet sym_diff_membership(const FuzzySet& a, const FuzzySet& b);

/// Entropy in bits of a Bernoulli(p) variable, with 0 log 0 = 0.
/// Throws kOutOfRange for p outside [0, 1] or non-finite p.
double binary_entropy(double p);

bool is_crisp(const FuzzySet& a) noexcept;

/// Elements whose membership is at least alpha. Requires 0 < alpha <= 1.
IndexSet alpha_cut(const FuzzySet& a, double alpha);

}  // namespace fuzzydist
