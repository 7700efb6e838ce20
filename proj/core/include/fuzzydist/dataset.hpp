#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzydist/fuzzy_set.hpp"

namespace fuzzydist {

using Table = std::vector<std::vector<double>>;

/// Labeled attribute table: one row per entity, one column per attribute.
/// `normalized`, when present, holds the membership values in [0, 1] that
/// to_fuzzy_sets turns into fuzzy sets.
struct Dataset {
  std::vector<std::string> entity_labels;
  std::vector<std::string> attribute_labels;
  Table raw;
  std::optional<Table> normalized;

  std::size_t entity_count() const noexcept { return entity_labels.size(); }
  std::size_t attribute_count() const noexcept { return attribute_labels.size(); }

  /// Index of the entity with the given name, if any.
  std::optional<std::size_t> find_entity(std::string_view name) const noexcept;

  /// Throws on inconsistent dimensions, non-finite raw values, or normalized
  /// values outside [0, 1].
  void validate() const;
};

/// Reads a dataset: first column is the entity name, remaining columns are
/// decimal numbers. Without a header, attributes are named attr1..attrN.
Dataset load_csv(std::istream& in, bool has_header = true);
Dataset load_csv_file(const std::filesystem::path& path, bool has_header = true);

/// Writes the raw values with a header row, using 17 significant digits so
/// that load_csv reproduces every value exactly.
void write_csv(std::ostream& out, const Dataset& dataset);

/// Per-column min-max scaling into [0, 1]; constant columns map to 0.5.
Dataset normalize_minmax(Dataset dataset);

/// Uses the raw values directly as memberships. Throws kOutOfRange if any
/// value lies outside [0, 1].
Dataset use_raw_as_membership(Dataset dataset);

/// One fuzzy set per entity over the attribute domain. Throws
/// kNotNormalized when the dataset has no membership values.
std::vector<LabeledSet> to_fuzzy_sets(const Dataset& dataset);

/// Embedded copy of data/ess_round4_table1.csv.
std::string_view table1_csv() noexcept;

/// The 28-country survey table, already in membership form (raw values are
/// the printed memberships and `normalized` is set to the same values).
Dataset table1_fixture();

}  // namespace fuzzydist
