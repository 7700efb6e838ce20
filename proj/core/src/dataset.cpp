#include "fuzzydist/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "fuzzydist/csv.hpp"
#include "fuzzydist/error.hpp"

namespace fuzzydist {

std::optional<std::size_t> Dataset::find_entity(std::string_view name) const noexcept {
  const auto it = std::ranges::find(entity_labels, name);
  if (it == entity_labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - entity_labels.begin());
}

namespace {

void check_shape(const Table& table, std::size_t rows, std::size_t cols, std::string_view what) {
  if (table.size() != rows) {
    fail(ErrorCode::kLengthMismatch, std::string(what) + " has " + std::to_string(table.size()) +
                                         " rows, expected " + std::to_string(rows));
  }
  for (std::size_t i = 0; i < rows; ++i) {
    if (table[i].size() != cols) {
      fail(ErrorCode::kLengthMismatch, std::string(what) + " row " + std::to_string(i + 1) +
                                           " has " + std::to_string(table[i].size()) +
                                           " values, expected " + std::to_string(cols));
    }
  }
}

void check_unique(const std::vector<std::string>& names, std::string_view what) {
  std::unordered_set<std::string_view> seen;
  for (const auto& name : names) {
    if (!seen.insert(name).second) {
      fail(ErrorCode::kDuplicateName, "duplicate " + std::string(what) + " name '" + name + "'");
    }
  }
}

}  // namespace

void Dataset::validate() const {
  check_unique(entity_labels, "entity");
  check_unique(attribute_labels, "attribute");
  check_shape(raw, entity_count(), attribute_count(), "raw table");
  for (const auto& row : raw) {
    for (double v : row) {
      if (!std::isfinite(v)) fail(ErrorCode::kNonNumeric, "raw table contains a non-finite value");
    }
  }
  if (normalized) {
    check_shape(*normalized, entity_count(), attribute_count(), "normalized table");
    for (const auto& row : *normalized) {
      for (double v : row) {
        if (!(v >= 0.0 && v <= 1.0)) {
          fail(ErrorCode::kOutOfRange, "normalized value outside [0, 1]");
        }
      }
    }
  }
}

Dataset load_csv(std::istream& in, bool has_header) {
  const auto records = csv::read_records(in);
  if (records.empty()) fail(ErrorCode::kParse, "CSV input is empty");

  Dataset ds;
  std::size_t first_body = 0;
  std::size_t width = records.front().fields.size();
  if (width < 2) {
    fail(ErrorCode::kParse, "line " + std::to_string(records.front().line) +
                                ": expected an entity name followed by at least one value");
  }
  if (has_header) {
    const auto& header = records.front().fields;
    ds.attribute_labels.assign(header.begin() + 1, header.end());
    first_body = 1;
  } else {
    for (std::size_t j = 1; j < width; ++j) ds.attribute_labels.push_back("attr" + std::to_string(j));
  }

  std::unordered_set<std::string> names;
  for (std::size_t r = first_body; r < records.size(); ++r) {
    const auto& rec = records[r];
    const std::string where = "line " + std::to_string(rec.line);
    if (rec.fields.size() != width) {
      fail(ErrorCode::kRaggedRow, where + " ('" + rec.fields.front() + "') has " +
                                      std::to_string(rec.fields.size()) + " fields, expected " +
                                      std::to_string(width));
    }
    if (!names.insert(rec.fields.front()).second) {
      fail(ErrorCode::kDuplicateName, where + ": duplicate entity name '" + rec.fields.front() + "'");
    }
    std::vector<double> row(width - 1);
    for (std::size_t j = 1; j < width; ++j) {
      double v = 0.0;
      if (!csv::parse_double(rec.fields[j], v) || !std::isfinite(v)) {
        fail(ErrorCode::kNonNumeric, where + ", column " + std::to_string(j + 1) + ": '" +
                                         rec.fields[j] + "' is not a finite decimal number");
      }
      row[j - 1] = v;
    }
    ds.entity_labels.push_back(rec.fields.front());
    ds.raw.push_back(std::move(row));
  }
  ds.validate();
  return ds;
}

Dataset load_csv_file(const std::filesystem::path& path, bool has_header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  return load_csv(in, has_header);
}

void write_csv(std::ostream& out, const Dataset& dataset) {
  std::vector<std::string> fields;
  fields.push_back("entity");
  fields.insert(fields.end(), dataset.attribute_labels.begin(), dataset.attribute_labels.end());
  csv::write_record(out, fields);
  for (std::size_t i = 0; i < dataset.entity_count(); ++i) {
    fields.assign(1, dataset.entity_labels[i]);
    for (double v : dataset.raw[i]) fields.push_back(csv::format_number(v, 17));
    csv::write_record(out, fields);
  }
}

Dataset normalize_minmax(Dataset dataset) {
  const std::size_t rows = dataset.entity_count();
  const std::size_t cols = dataset.attribute_count();
  Table out(rows, std::vector<double>(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    double lo = dataset.raw.empty() ? 0.0 : dataset.raw[0][j];
    double hi = lo;
    for (const auto& row : dataset.raw) {
      lo = std::min(lo, row[j]);
      hi = std::max(hi, row[j]);
    }
    const double span = hi - lo;
    for (std::size_t i = 0; i < rows; ++i) {
      out[i][j] = span > 0.0 ? std::clamp((dataset.raw[i][j] - lo) / span, 0.0, 1.0) : 0.5;
    }
  }
  dataset.normalized = std::move(out);
  return dataset;
}

Dataset use_raw_as_membership(Dataset dataset) {
  for (std::size_t i = 0; i < dataset.entity_count(); ++i) {
    for (std::size_t j = 0; j < dataset.attribute_count(); ++j) {
      const double v = dataset.raw[i][j];
      if (!(v >= 0.0 && v <= 1.0)) {
        fail(ErrorCode::kOutOfRange,
             "value for '" + dataset.entity_labels[i] + "', attribute '" +
                 dataset.attribute_labels[j] + "' is outside [0, 1]; pass --normalize to rescale");
      }
    }
  }
  dataset.normalized = dataset.raw;
  return dataset;
}

std::vector<LabeledSet> to_fuzzy_sets(const Dataset& dataset) {
  if (!dataset.normalized) {
    fail(ErrorCode::kNotNormalized, "dataset has no membership values; normalize it first");
  }
  const Domain domain(dataset.attribute_labels);
  std::vector<LabeledSet> sets;
  sets.reserve(dataset.entity_count());
  for (std::size_t i = 0; i < dataset.entity_count(); ++i) {
    sets.push_back(LabeledSet{dataset.entity_labels[i], FuzzySet(domain, (*dataset.normalized)[i])});
  }
  return sets;
}

Dataset table1_fixture() {
  std::istringstream in{std::string(table1_csv())};
  return use_raw_as_membership(load_csv(in, true));
}

}  // namespace fuzzydist
