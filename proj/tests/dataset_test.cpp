#include "fuzzydist/dataset.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "fuzzydist/random.hpp"
#include "test_support.hpp"

namespace fuzzydist {
namespace {

using testing_support::code_of;
using testing_support::message_of;

Dataset parse(const std::string& text, bool has_header = true) {
  std::istringstream in(text);
  return load_csv(in, has_header);
}

TEST(LoadCsvTest, HeaderAndBody) {
  const auto ds = parse("entity,x,y\na,1,2\nb,3.5,-4e-1\n");
  EXPECT_EQ(ds.entity_labels, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(ds.attribute_labels, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(ds.raw, (Table{{1.0, 2.0}, {3.5, -0.4}}));
  EXPECT_FALSE(ds.normalized.has_value());
  EXPECT_EQ(ds.find_entity("b"), 1u);
  EXPECT_FALSE(ds.find_entity("c").has_value());
}

TEST(LoadCsvTest, WithoutHeaderGeneratesAttributeNames) {
  const auto ds = parse("a,0.1,0.2,0.3\n", false);
  EXPECT_EQ(ds.attribute_labels, (std::vector<std::string>{"attr1", "attr2", "attr3"}));
  EXPECT_EQ(ds.entity_count(), 1u);
}

TEST(LoadCsvTest, QuotedNamesCrlfAndBlankLines) {
  const auto ds = parse("entity,x\r\n\"Russian, Fed\",0.5\r\n\r\n\"say \"\"hi\"\"\", 0.25 \r\n");
  EXPECT_EQ(ds.entity_labels, (std::vector<std::string>{"Russian, Fed", "say \"hi\""}));
  EXPECT_EQ(ds.raw, (Table{{0.5}, {0.25}}));
}

TEST(LoadCsvTest, RaggedRowNamesTheRow) {
  const std::string text = "entity,x,y\na,1,2\nb,3\n";
  EXPECT_EQ(code_of([&] { parse(text); }), ErrorCode::kRaggedRow);
  const std::string msg = message_of([&] { parse(text); });
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
  EXPECT_NE(msg.find("'b'"), std::string::npos) << msg;
}

TEST(LoadCsvTest, NonNumericCellGivesLocation) {
  const std::string text = "entity,x,y\na,1,2\nb,3,abc\n";
  EXPECT_EQ(code_of([&] { parse(text); }), ErrorCode::kNonNumeric);
  const std::string msg = message_of([&] { parse(text); });
  EXPECT_NE(msg.find("line 3, column 3"), std::string::npos) << msg;
  EXPECT_EQ(code_of([] { parse("e,x\na,nan\n"); }), ErrorCode::kNonNumeric);
  EXPECT_EQ(code_of([] { parse("e,x\na,0,5\n"); }), ErrorCode::kRaggedRow);
  EXPECT_EQ(code_of([] { parse("e,x\na,\n"); }), ErrorCode::kNonNumeric);
}

TEST(LoadCsvTest, DuplicateNamesAndMalformedInput) {
  EXPECT_EQ(code_of([] { parse("e,x\na,1\na,2\n"); }), ErrorCode::kDuplicateName);
  EXPECT_EQ(code_of([] { parse("e,x,x\na,1,2\n"); }), ErrorCode::kDuplicateName);
  EXPECT_EQ(code_of([] { parse(""); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse("e,x\n\"a,1\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { load_csv_file("/nonexistent/file.csv"); }), ErrorCode::kIo);
}

TEST(Table1FixtureTest, ShapeAndPrintedValues) {
  const auto ds = table1_fixture();
  ASSERT_EQ(ds.entity_count(), 28u);
  ASSERT_EQ(ds.attribute_count(), 10u);
  EXPECT_EQ(ds.attribute_labels.front(), "country_GOV_a");
  EXPECT_EQ(ds.attribute_labels[4], "country_GOV_b");
  EXPECT_EQ(ds.attribute_labels.back(), "happy");
  const std::vector<std::pair<std::string, std::vector<double>>> printed{
      {"Belgium", {0.60, 0.55, 0.69, 0.60, 0.60, 0.72, 0.47, 0.48, 1.00, 0.30}},
      {"Denmark", {1.00, 0.83, 0.91, 0.92, 1.00, 1.00, 0.81, 0.67, 0.68, 1.00}},
      {"Hungary", {0.20, 0.51, 0.89, 0.42, 0.20, 0.28, 0.69, 0.02, 0.27, 0.06}},
      {"Russian Fed", {0.49, 0.79, 0.95, 0.29, 0.49, 0.29, 0.92, 0.19, 0.22, 0.08}},
      {"Ukraine", {0.00, 0.38, 0.94, 0.08, 0.00, 0.00, 0.00, 0.31, 0.00, 0.05}},
  };
  for (const auto& [name, row] : printed) {
    const auto idx = ds.find_entity(name);
    ASSERT_TRUE(idx.has_value()) << name;
    EXPECT_EQ(ds.raw[*idx], row) << name;
    EXPECT_EQ((*ds.normalized)[*idx], row) << name;
  }
}

TEST(Table1FixtureTest, EmbeddedCopyMatchesDataFile) {
  std::ifstream in(FUZZYDIST_TABLE1_CSV, std::ios::binary);
  ASSERT_TRUE(in);
  std::ostringstream contents;
  contents << in.rdbuf();
  EXPECT_EQ(contents.str(), std::string(table1_csv()));
  const auto from_file = use_raw_as_membership(load_csv_file(FUZZYDIST_TABLE1_CSV));
  EXPECT_EQ(from_file.raw, table1_fixture().raw);
}

TEST(Table1FixtureTest, TwoDecimalValuesOnly) {
  const auto ds = table1_fixture();
  for (const auto& row : ds.raw) {
    for (double v : row) {
      EXPECT_NEAR(v * 100.0, std::round(v * 100.0), 1e-9);
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }
}

TEST(NormalizeTest, Examples) {
  const auto ds = normalize_minmax(parse("e,x,c\na,1,4\nb,3,4\nc,5,4\n"));
  ASSERT_TRUE(ds.normalized.has_value());
  EXPECT_EQ(*ds.normalized, (Table{{0.0, 0.5}, {0.5, 0.5}, {1.0, 0.5}}));
  EXPECT_EQ(ds.raw, (Table{{1.0, 4.0}, {3.0, 4.0}, {5.0, 4.0}}));
}

TEST(NormalizeTest, Table1IsAFixedPoint) {
  const auto ds = table1_fixture();
  const auto again = normalize_minmax(ds);
  for (std::size_t i = 0; i < ds.entity_count(); ++i) {
    for (std::size_t j = 0; j < ds.attribute_count(); ++j) {
      EXPECT_NEAR((*again.normalized)[i][j], ds.raw[i][j], 1e-12);
    }
  }
}

TEST(NormalizeTest, IdempotentOnRandomData) {
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    Dataset ds;
    for (int j = 0; j < 4; ++j) ds.attribute_labels.push_back("c" + std::to_string(j));
    for (int i = 0; i < 9; ++i) {
      ds.entity_labels.push_back("e" + std::to_string(i));
      std::vector<double> row;
      for (int j = 0; j < 4; ++j) row.push_back((uniform01(rng) - 0.5) * 200.0);
      ds.raw.push_back(std::move(row));
    }
    const auto once = normalize_minmax(ds);
    Dataset second = once;
    second.raw = *once.normalized;
    const auto twice = normalize_minmax(second);
    for (std::size_t i = 0; i < 9; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        ASSERT_NEAR((*twice.normalized)[i][j], (*once.normalized)[i][j], 1e-12);
      }
    }
    for (std::size_t j = 0; j < 4; ++j) {
      double lo = 1.0;
      double hi = 0.0;
      for (const auto& row : *once.normalized) {
        lo = std::min(lo, row[j]);
        hi = std::max(hi, row[j]);
      }
      EXPECT_EQ(lo, 0.0);
      EXPECT_EQ(hi, 1.0);
    }
  }
}

TEST(WriteCsvTest, RoundTripIsIdentity) {
  Rng rng(77);
  for (int t = 0; t < 200; ++t) {
    Dataset ds;
    ds.attribute_labels = {"plain", "with,comma", "q\"uote"};
    for (int i = 0; i < 5; ++i) {
      ds.entity_labels.push_back(i % 2 == 0 ? "n" + std::to_string(i) : "\"odd, " + std::to_string(i));
      ds.raw.push_back({uniform01(rng), (uniform01(rng) - 0.5) * 1e6, std::ldexp(uniform01(rng), -40)});
    }
    std::stringstream buffer;
    write_csv(buffer, ds);
    const auto back = load_csv(buffer);
    ASSERT_EQ(back.entity_labels, ds.entity_labels);
    ASSERT_EQ(back.attribute_labels, ds.attribute_labels);
    ASSERT_EQ(back.raw, ds.raw);
  }
}

TEST(ToFuzzySetsTest, Table1) {
  const auto sets = to_fuzzy_sets(table1_fixture());
  ASSERT_EQ(sets.size(), 28u);
  for (const auto& s : sets) {
    EXPECT_EQ(s.set.size(), 10u);
    EXPECT_TRUE(s.set.domain().has_labels());
    EXPECT_EQ(s.set.domain().label(0), "country_GOV_a");
    EXPECT_EQ(s.set.domain().label(9), "happy");
  }
  EXPECT_EQ(sets[0].label, "Belgium");
}

TEST(ToFuzzySetsTest, SmallCases) {
  const auto single = to_fuzzy_sets(use_raw_as_membership(parse("e,x,y\nonly,0.5,0.5\n")));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].set[0], 0.5);
  EXPECT_EQ(code_of([] { to_fuzzy_sets(parse("e,x\na,0.5\n")); }), ErrorCode::kNotNormalized);
  EXPECT_EQ(code_of([] { use_raw_as_membership(parse("e,x\na,1.5\n")); }), ErrorCode::kOutOfRange);
}

}  // namespace
}  // namespace fuzzydist
