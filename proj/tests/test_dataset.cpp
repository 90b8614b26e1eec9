#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sdgbench/dataset.hpp"
#include "sdgbench/fixtures.hpp"
#include "sdgbench/kvfile.hpp"

using namespace sdgbench;

namespace {

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "sdgbench_dataset_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = (temp_dir() / name).string();
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

std::vector<ColumnSchema> age_income_schema() {
  return {{"age", ColumnKind::continuous, {}},
          {"income", ColumnKind::binary, {"<=50K", ">50K"}}};
}

Dataset small_dataset() {
  std::vector<ColumnSchema> schema{
      {"age", ColumnKind::continuous, {}},
      {"grade", ColumnKind::multiclass, {"a", "b", "c"}},
      {"income", ColumnKind::binary, {"<=50K", ">50K"}},
  };
  std::vector<double> cells{25, 0, 0, 40, 2, 1, 31, 1, 0};
  return Dataset(std::move(schema), "income", std::move(cells));
}

// Row multiset for split-conservation checks.
std::multimap<std::vector<double>, int> row_multiset(const Dataset& d) {
  std::multimap<std::vector<double>, int> rows;
  for (std::size_t r = 0; r < d.n_rows(); ++r) {
    auto row = d.row(r);
    rows.emplace(std::vector<double>(row.begin(), row.end()), 0);
  }
  return rows;
}

}  // namespace

TEST(SchemaTest, KindCategoryCountsEnforced) {
  EXPECT_THROW(validate_schema({{"x", ColumnKind::binary, {"only"}}}), Error);
  EXPECT_THROW(validate_schema({{"x", ColumnKind::binary, {"a", "b", "c"}}}), Error);
  EXPECT_THROW(validate_schema({{"x", ColumnKind::multiclass, {"a", "b"}}}), Error);
  EXPECT_THROW(validate_schema({{"x", ColumnKind::continuous, {"a"}}}), Error);
  EXPECT_NO_THROW(validate_schema({{"x", ColumnKind::binary, {"a", "b"}}}));
  EXPECT_NO_THROW(validate_schema({{"x", ColumnKind::multiclass, {"a", "b", "c"}}}));
}

TEST(SchemaTest, DuplicateNamesRejected) {
  EXPECT_THROW(validate_schema({{"x", ColumnKind::continuous, {}},
                                {"x", ColumnKind::continuous, {}}}),
               Error);
}

TEST(SchemaTest, DuplicateCategoriesRejected) {
  EXPECT_THROW(validate_schema({{"x", ColumnKind::binary, {"a", "a"}}}), Error);
}

TEST(DatasetTest, TargetMustBeCategorical) {
  std::vector<ColumnSchema> schema{{"age", ColumnKind::continuous, {}},
                                   {"y", ColumnKind::binary, {"n", "p"}}};
  EXPECT_THROW(Dataset(schema, "age", {25, 0}), Error);
  EXPECT_THROW(Dataset(schema, "missing", {25, 0}), Error);
  EXPECT_NO_THROW(Dataset(schema, "y", {25, 0}));
}

TEST(DatasetTest, CategoricalCellsMustIndexCategories) {
  std::vector<ColumnSchema> schema{{"y", ColumnKind::binary, {"n", "p"}}};
  EXPECT_THROW(Dataset(schema, "y", {2}), Error);
  EXPECT_THROW(Dataset(schema, "y", {-1}), Error);
  EXPECT_THROW(Dataset(schema, "y", {0.5}), Error);
  EXPECT_NO_THROW(Dataset(schema, "y", {1}));
}

TEST(DatasetTest, NonFiniteCellsRejected) {
  std::vector<ColumnSchema> schema{{"age", ColumnKind::continuous, {}},
                                   {"y", ColumnKind::binary, {"n", "p"}}};
  EXPECT_THROW(Dataset(schema, "y", {std::nan(""), 0}), Error);
  EXPECT_THROW(Dataset(schema, "y", {std::numeric_limits<double>::infinity(), 0}), Error);
}

TEST(DatasetTest, CellGridMustMatchSchemaWidth) {
  std::vector<ColumnSchema> schema{{"age", ColumnKind::continuous, {}},
                                   {"y", ColumnKind::binary, {"n", "p"}}};
  EXPECT_THROW(Dataset(schema, "y", {25, 0, 31}), Error);
}

TEST(LoadCsvTest, ParsesSmallFile) {
  auto path = write_temp("small.csv",
                         "age,income\n25,<=50K\n40,>50K\n31,<=50K\n");
  Dataset d = load_csv(path, age_income_schema(), "income");
  EXPECT_EQ(d.n_rows(), 3u);
  EXPECT_EQ(d.n_cols(), 2u);
  EXPECT_DOUBLE_EQ(d.cell(1, 0), 40.0);
  EXPECT_DOUBLE_EQ(d.cell(1, 1), 1.0);
  EXPECT_EQ(d.category(2, 1), "<=50K");
}

TEST(LoadCsvTest, BadContinuousCellNamesRowAndColumn) {
  auto path = write_temp("bad_cell.csv", "age,income\n25,<=50K\nabc,>50K\n");
  try {
    load_csv(path, age_income_schema(), "income");
    FAIL() << "expected parse error";
  } catch (const Error& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("age"), std::string::npos) << msg;
    EXPECT_NE(msg.find("2"), std::string::npos) << msg;
  }
}

TEST(LoadCsvTest, UnknownCategoryNamesRowAndColumn) {
  auto path = write_temp("bad_cat.csv", "age,income\n25,unknown\n");
  try {
    load_csv(path, age_income_schema(), "income");
    FAIL() << "expected parse error";
  } catch (const Error& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("income"), std::string::npos) << msg;
    EXPECT_NE(msg.find("unknown"), std::string::npos) << msg;
  }
}

TEST(LoadCsvTest, MissingFileRejected) {
  EXPECT_THROW(load_csv("/nonexistent/path.csv", age_income_schema(), "income"), Error);
}

TEST(LoadCsvTest, HeaderMustMatchSchema) {
  auto path = write_temp("hdr.csv", "age,salary\n25,<=50K\n");
  EXPECT_THROW(load_csv(path, age_income_schema(), "income"), Error);
}

TEST(LoadCsvTest, CensusStyleThirteenColumns) {
  // 8 continuous, 1 binary target, 4 multiclass.
  std::vector<ColumnSchema> schema;
  for (int i = 0; i < 8; ++i)
    schema.push_back({"num" + std::to_string(i), ColumnKind::continuous, {}});
  schema.push_back({"income>50K", ColumnKind::binary, {"no", "yes"}});
  for (int i = 0; i < 4; ++i)
    schema.push_back(
        {"cat" + std::to_string(i), ColumnKind::multiclass, {"u", "v", "w"}});
  std::string text;
  for (std::size_t c = 0; c < schema.size(); ++c)
    text += (c ? "," : "") + schema[c].name;
  text += "\n";
  for (int r = 0; r < 3; ++r) {
    for (int i = 0; i < 8; ++i) text += std::to_string(r + i) + ",";
    text += (r % 2 ? "yes" : "no");
    for (int i = 0; i < 4; ++i) text += std::string(",") + (r % 3 == 0 ? "u" : "w");
    text += "\n";
  }
  auto path = write_temp("census.csv", text);
  Dataset d = load_csv(path, schema, "income>50K");
  EXPECT_EQ(d.n_cols(), 13u);
  EXPECT_EQ(d.n_rows(), 3u);
  EXPECT_EQ(d.target_name(), "income>50K");
}

TEST(CsvRoundTripTest, WriteThenLoadIsIdentity) {
  for (std::uint64_t s : {1ull, 2ull, 3ull}) {
    Dataset d = make_blobs(120, RngSeed{s});
    auto path = write_temp("round" + std::to_string(s) + ".csv", to_csv_text(d));
    Dataset back = load_csv(path, d.schema(), d.target_name());
    EXPECT_TRUE(back == d);
  }
}

TEST(CsvRoundTripTest, LabelsWrittenVerbatim) {
  Dataset d = small_dataset();
  std::string text = to_csv_text(d);
  EXPECT_EQ(text,
            "age,grade,income\n25,a,<=50K\n40,c,>50K\n31,b,<=50K\n");
}

TEST(InferSchemaTest, ZeroOneColumnIsBinary) {
  auto path = write_temp("infer_bin.csv", "flag,y\n0,a\n1,b\n0,a\n1,b\n");
  auto schema = infer_schema(path);
  EXPECT_EQ(schema[0].kind, ColumnKind::binary);
  EXPECT_EQ(schema[0].categories, (std::vector<std::string>{"0", "1"}));
}

TEST(InferSchemaTest, ManyDistinctRealsAreContinuous) {
  std::string text = "v,y\n";
  for (int i = 0; i < 500; ++i)
    text += std::to_string(i) + ".5," + (i % 2 ? "a" : "b") + "\n";
  auto path = write_temp("infer_cont.csv", text);
  auto schema = infer_schema(path, 20);
  EXPECT_EQ(schema[0].kind, ColumnKind::continuous);
  EXPECT_TRUE(schema[0].categories.empty());
}

TEST(InferSchemaTest, ThreeLabelsAreMulticlass) {
  auto path = write_temp("infer_multi.csv", "g,y\nA,0\nB,1\nC,0\nA,1\n");
  auto schema = infer_schema(path, 20);
  EXPECT_EQ(schema[0].kind, ColumnKind::multiclass);
  EXPECT_EQ(schema[0].categories, (std::vector<std::string>{"A", "B", "C"}));
}

TEST(InferSchemaTest, SingleValueColumnRejected) {
  auto path = write_temp("infer_const.csv", "c,y\n7,a\n7,b\n");
  EXPECT_THROW(infer_schema(path), Error);
}

TEST(InferSchemaTest, RaggedRowsRejected) {
  auto path = write_temp("infer_ragged.csv", "a,b\n1,2\n3\n");
  EXPECT_THROW(infer_schema(path), Error);
}

TEST(InferSchemaTest, EmptyFileRejected) {
  auto path = write_temp("infer_empty.csv", "");
  EXPECT_THROW(infer_schema(path), Error);
}

TEST(SchemaFileTest, RoundTrip) {
  Dataset d = small_dataset();
  auto path = (temp_dir() / "schema.cfg").string();
  write_schema_file(d.schema(), d.target_name(), path);
  auto [schema, target] = load_schema_file(path);
  EXPECT_TRUE(schema == d.schema());
  EXPECT_EQ(target, "income");
}

TEST(SchemaFileTest, TargetRequiredExactlyOnce) {
  auto path = write_temp("no_target.cfg", "[column x]\nkind = binary\ncategories = a, b\n");
  EXPECT_THROW(load_schema_file(path), Error);
  auto path2 = write_temp(
      "two_targets.cfg",
      "[column x]\nkind = binary\ncategories = a, b\ntarget = true\n"
      "[column y]\nkind = binary\ncategories = c, d\ntarget = true\n");
  EXPECT_THROW(load_schema_file(path2), Error);
}

TEST(KvFileTest, ParsesSectionsAndComments) {
  KvFile f = parse_kv_text("# header comment\n[alpha]\nkey = value\nn = 3\n\n[beta]\nk = v\n",
                           "inline");
  ASSERT_EQ(f.sections.size(), 2u);
  EXPECT_EQ(f.sections[0].name, "alpha");
  EXPECT_EQ(*f.find("alpha")->find("key"), "value");
  EXPECT_EQ(f.find("alpha")->require("n"), "3");
  EXPECT_EQ(f.find("missing"), nullptr);
}

TEST(KvFileTest, DuplicateKeysRejectedWithLine) {
  try {
    parse_kv_text("[s]\nk = 1\nk = 2\n", "dup.cfg");
    FAIL() << "expected duplicate-key error";
  } catch (const Error& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("dup.cfg"), std::string::npos) << msg;
    EXPECT_NE(msg.find("3"), std::string::npos) << msg;
  }
}

TEST(KvFileTest, KeyOutsideSectionRejected) {
  EXPECT_THROW(parse_kv_text("k = 1\n", "x"), Error);
}

TEST(SplitTest, TenRowsFraction20GivesEightTwo) {
  Dataset d = make_blobs(10, RngSeed{5});
  auto [train_split, test_split] = train_test_split(d, 0.2, RngSeed{1});
  EXPECT_EQ(train_split.n_rows(), 8u);
  EXPECT_EQ(test_split.n_rows(), 2u);
  EXPECT_TRUE(train_split.schema() == d.schema());
  EXPECT_TRUE(test_split.schema() == d.schema());
}

TEST(SplitTest, SameSeedSamePartition) {
  Dataset d = make_blobs(100, RngSeed{5});
  auto [a_train, a_test] = train_test_split(d, 0.25, RngSeed{9});
  auto [b_train, b_test] = train_test_split(d, 0.25, RngSeed{9});
  EXPECT_TRUE(a_train == b_train);
  EXPECT_TRUE(a_test == b_test);
  auto [c_train, c_test] = train_test_split(d, 0.25, RngSeed{10});
  EXPECT_FALSE(a_test == c_test);  // different seed shuffles differently
}

TEST(SplitTest, RowMultisetConserved) {
  Dataset d = make_blobs(100, RngSeed{5});
  for (std::uint64_t s : {1ull, 7ull, 42ull}) {
    auto [train_split, test_split] = train_test_split(d, 0.3, RngSeed{s});
    auto combined = row_multiset(train_split);
    auto extra = row_multiset(test_split);
    combined.insert(extra.begin(), extra.end());
    EXPECT_TRUE(combined == row_multiset(d));
  }
}

TEST(SplitTest, EmptySplitRejected) {
  Dataset d = make_blobs(2, RngSeed{5});
  EXPECT_THROW(train_test_split(d, 0.1, RngSeed{1}), Error);   // round(0.2) = 0
  EXPECT_THROW(train_test_split(d, 0.95, RngSeed{1}), Error);  // round(1.9) = 2 = n
  EXPECT_THROW(train_test_split(d, 0.0, RngSeed{1}), Error);
  EXPECT_THROW(train_test_split(d, 1.0, RngSeed{1}), Error);
}

TEST(ColumnValuesTest, ReturnsRowOrder) {
  Dataset d = small_dataset();
  EXPECT_EQ(column_values(d, "age"), (std::vector<double>{25, 40, 31}));
  EXPECT_THROW(column_values(d, "zzz"), Error);
}

TEST(ColumnValuesTest, TrainLengthAfterSplit) {
  Dataset d = make_blobs(50, RngSeed{3});
  auto [train_split, test_split] = train_test_split(d, 0.2, RngSeed{2});
  EXPECT_EQ(column_values(train_split, "sensor_a").size(),
            d.n_rows() - test_split.n_rows());
}

TEST(FixtureTest, BlobsShape) {
  Dataset d = make_blobs(2000, RngSeed{7001});
  EXPECT_EQ(d.n_rows(), 2000u);
  EXPECT_EQ(d.n_cols(), 6u);  // 4 continuous + 1 binary feature + target
  int continuous = 0, binary = 0;
  for (std::size_t c = 0; c < d.n_cols(); ++c) {
    continuous += d.column_schema(c).kind == ColumnKind::continuous;
    binary += d.column_schema(c).kind == ColumnKind::binary;
  }
  EXPECT_EQ(continuous, 4);
  EXPECT_EQ(binary, 2);
  EXPECT_EQ(d.target_name(), "label");
}

TEST(FixtureTest, DeterministicAndSeedSensitive) {
  for (const auto& name : fixture_names()) {
    Dataset a = make_fixture(name, 200, RngSeed{7001});
    Dataset b = make_fixture(name, 200, RngSeed{7001});
    Dataset c = make_fixture(name, 200, RngSeed{7002});
    EXPECT_TRUE(a == b) << name;
    EXPECT_FALSE(a == c) << name;
  }
  EXPECT_THROW(make_fixture("unknown", 200, RngSeed{1}), Error);
}

TEST(FixtureTest, PlantedHasTwoInformativeAndSixBackground) {
  Dataset d = make_fixture("planted", 300, RngSeed{1});
  EXPECT_EQ(d.n_cols(), 9u);  // 2 signal + 6 background + target
  EXPECT_EQ(d.target_index(), d.n_cols() - 1);
}
