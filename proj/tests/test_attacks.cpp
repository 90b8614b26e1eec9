#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "sdgbench/attacks.hpp"
#include "sdgbench/fixtures.hpp"
#include "sdgbench/importance.hpp"
#include "sdgbench/metrics.hpp"

using namespace sdgbench;

namespace {

Dataset tiny_binary(const std::vector<double>& labels) {
  std::vector<ColumnSchema> schema{{"x", ColumnKind::continuous, {}},
                                   {"label", ColumnKind::binary, {"neg", "pos"}}};
  std::vector<double> cells;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    cells.push_back(static_cast<double>(i) * 1.5);
    cells.push_back(labels[i]);
  }
  return Dataset(std::move(schema), "label", std::move(cells));
}

// d continuous feature columns named f0..f{d-1} plus a binary target.
Dataset feature_grid(std::size_t features, std::size_t rows) {
  std::vector<ColumnSchema> schema;
  for (std::size_t c = 0; c < features; ++c)
    schema.push_back({"f" + std::to_string(c), ColumnKind::continuous, {}});
  schema.push_back({"label", ColumnKind::binary, {"neg", "pos"}});
  std::vector<double> cells;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < features; ++c)
      cells.push_back(static_cast<double>(r * features + c) + 0.25);
    cells.push_back(static_cast<double>(r % 2));
  }
  return Dataset(std::move(schema), "label", std::move(cells));
}

ImportanceRanking uniform_gap_ranking(std::size_t features) {
  // importances descending: proportional to features, features-1, ..., 1
  ImportanceRanking rank;
  double total = 0;
  for (std::size_t c = 0; c < features; ++c) total += static_cast<double>(c + 1);
  for (std::size_t c = 0; c < features; ++c)
    rank.entries.push_back({"f" + std::to_string(c),
                            static_cast<double>(features - c) / total});
  return rank;
}

Dataset permute_rows(const Dataset& d, const std::vector<std::size_t>& order) {
  return d.select_rows(order);
}

}  // namespace

TEST(AttackSpecTest, Validation) {
  AttackSpec spec;
  spec.kind = AttackKind::label_flip;
  spec.ratio = -0.1;
  EXPECT_THROW(spec.validate(), Error);
  spec.ratio = 1.1;
  EXPECT_THROW(spec.validate(), Error);
  spec.ratio = 0.5;
  EXPECT_NO_THROW(spec.validate());
  spec.budget = 0.3;
  EXPECT_THROW(spec.validate(), Error);  // ratio above configured budget
  spec.ratio = 0.3;
  EXPECT_NO_THROW(spec.validate());

  AttackSpec scale;
  scale.kind = AttackKind::scale_output;
  scale.scale = 0.0;
  EXPECT_THROW(scale.validate(), Error);
  scale.scale = std::numeric_limits<double>::infinity();
  EXPECT_THROW(scale.validate(), Error);

  AttackSpec noise;
  noise.kind = AttackKind::noise_inject;
  noise.sigma = -1.0;
  EXPECT_THROW(noise.validate(), Error);
}

TEST(AttackKindTest, NamesRoundTrip) {
  for (AttackKind k :
       {AttackKind::none, AttackKind::label_flip, AttackKind::feature_importance,
        AttackKind::incorrect_source, AttackKind::low_epochs,
        AttackKind::oversimplified_sdg, AttackKind::scale_output,
        AttackKind::noise_inject})
    EXPECT_EQ(attack_kind_from_string(std::string(to_string(k))), k);
  EXPECT_THROW(attack_kind_from_string("bogus"), Error);
}

TEST(AttackKindTest, StageTaxonomy) {
  EXPECT_EQ(stage_of(AttackKind::label_flip), PipelineStage::real_input);
  EXPECT_EQ(stage_of(AttackKind::feature_importance), PipelineStage::real_input);
  EXPECT_EQ(stage_of(AttackKind::incorrect_source), PipelineStage::real_input);
  EXPECT_EQ(stage_of(AttackKind::low_epochs), PipelineStage::generator_config);
  EXPECT_EQ(stage_of(AttackKind::oversimplified_sdg), PipelineStage::generator_config);
  EXPECT_EQ(stage_of(AttackKind::scale_output), PipelineStage::synthetic_output);
  EXPECT_EQ(stage_of(AttackKind::noise_inject), PipelineStage::synthetic_output);
}

TEST(LabelFlipTest, ZeroRatioIsIdentity) {
  Dataset d = tiny_binary({0, 1, 0, 1});
  EXPECT_TRUE(label_flip(d, 0.0, RngSeed{3}) == d);
}

TEST(LabelFlipTest, FullRatioInvertsBinary) {
  Dataset d = tiny_binary({0, 1, 0, 1});
  Dataset flipped = label_flip(d, 1.0, RngSeed{3});
  EXPECT_EQ(column_values(flipped, "label"), (std::vector<double>{1, 0, 1, 0}));
}

TEST(LabelFlipTest, ExactBudgetAndIndexAgreement) {
  Dataset d = make_blobs(1000, RngSeed{77});
  RngSeed seed{5};
  Dataset flipped = label_flip(d, 0.3, seed);
  auto before = column_values(d, "label");
  auto after = column_values(flipped, "label");
  std::set<std::size_t> changed;
  for (std::size_t i = 0; i < before.size(); ++i)
    if (before[i] != after[i]) changed.insert(i);
  EXPECT_EQ(changed.size(), 300u);  // floor(0.3 * 1000)
  FlipIndexSet chosen = select_flip_indices(1000, 0.3, seed);
  EXPECT_TRUE(std::equal(changed.begin(), changed.end(), chosen.indices.begin(),
                         chosen.indices.end()));
}

TEST(LabelFlipTest, NonTargetCellsUntouched) {
  Dataset d = make_blobs(500, RngSeed{78});
  Dataset flipped = label_flip(d, 0.4, RngSeed{6});
  for (std::size_t r = 0; r < d.n_rows(); ++r)
    for (std::size_t c = 0; c < d.n_cols(); ++c)
      if (c != d.target_index())
        EXPECT_EQ(d.cell(r, c), flipped.cell(r, c)) << r << "," << c;
}

TEST(LabelFlipTest, FlipCountMatchesFloorUnderFuzz) {
  rng::Stream s(rng::derive(RngSeed{31}, "flip-fuzz"));
  Dataset d = make_blobs(257, RngSeed{90});
  for (int i = 0; i < 40; ++i) {
    double r = s.next_double();
    Dataset flipped = label_flip(d, r, RngSeed{s.next_u64()});
    auto before = column_values(d, "label");
    auto after = column_values(flipped, "label");
    std::size_t diff = 0;
    for (std::size_t j = 0; j < before.size(); ++j) diff += before[j] != after[j];
    EXPECT_EQ(diff, static_cast<std::size_t>(std::floor(r * 257)));
  }
}

TEST(LabelFlipTest, MulticlassReassignsUniformlyAmongOthers) {
  std::vector<ColumnSchema> schema{{"y", ColumnKind::multiclass, {"a", "b", "c"}}};
  std::vector<double> cells(30000, 0.0);  // every label is class 0
  Dataset d(schema, "y", std::move(cells));
  Dataset flipped = label_flip(d, 1.0, RngSeed{17});
  auto y = column_values(flipped, "y");
  std::size_t to_b = 0, to_c = 0;
  for (double v : y) {
    ASSERT_NE(v, 0.0);  // never keeps the original class
    to_b += v == 1.0;
    to_c += v == 2.0;
  }
  EXPECT_EQ(to_b + to_c, y.size());
  EXPECT_NEAR(static_cast<double>(to_b) / y.size(), 0.5, 0.02);
}

TEST(SelectFlipIndicesTest, SizeAndRange) {
  FlipIndexSet s = select_flip_indices(4, 0.5, RngSeed{1});
  EXPECT_EQ(s.indices.size(), 2u);
  for (auto i : s.indices) EXPECT_LT(i, 4u);
  EXPECT_TRUE(std::is_sorted(s.indices.begin(), s.indices.end()));
}

TEST(SelectFlipIndicesTest, Deterministic) {
  auto a = select_flip_indices(100, 0.37, RngSeed{12});
  auto b = select_flip_indices(100, 0.37, RngSeed{12});
  EXPECT_EQ(a.indices, b.indices);
  auto c = select_flip_indices(100, 0.37, RngSeed{13});
  EXPECT_NE(a.indices, c.indices);
}

TEST(SelectFlipIndicesTest, UniformFrequencies) {
  // n=10, r=0.5 over 10 000 seeds: each index close to 5 000 draws.
  std::vector<int> hits(10, 0);
  for (std::uint64_t seed = 0; seed < 10000; ++seed)
    for (auto i : select_flip_indices(10, 0.5, RngSeed{seed}).indices) hits[i]++;
  for (int h : hits) EXPECT_NEAR(h, 5000, 200);
}

TEST(SelectFlipIndicesTest, NestedAcrossRatios) {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    auto small = select_flip_indices(500, 0.1, RngSeed{seed});
    auto large = select_flip_indices(500, 0.6, RngSeed{seed});
    EXPECT_TRUE(std::includes(large.indices.begin(), large.indices.end(),
                              small.indices.begin(), small.indices.end()));
  }
}

TEST(FeatureImportanceTest, FullRetentionIsIdentity) {
  Dataset d = feature_grid(4, 20);
  EXPECT_TRUE(feature_importance_attack(d, 1.0, uniform_gap_ranking(4)) == d);
}

TEST(FeatureImportanceTest, HalfRetentionKeepsTopTwo) {
  Dataset d = feature_grid(4, 20);
  Dataset cut = feature_importance_attack(d, 0.5, uniform_gap_ranking(4));
  // top ceil(0.5*4)=2 by importance: f0, f1 kept; f2, f3 zero-filled
  EXPECT_EQ(column_values(cut, "f0"), column_values(d, "f0"));
  EXPECT_EQ(column_values(cut, "f1"), column_values(d, "f1"));
  for (const char* name : {"f2", "f3"})
    for (double v : column_values(cut, name)) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(column_values(cut, "label"), column_values(d, "label"));
  EXPECT_TRUE(cut.schema() == d.schema());
}

TEST(FeatureImportanceTest, TenFeaturesAtTenthKeepOne) {
  Dataset d = feature_grid(10, 12);
  Dataset cut = feature_importance_attack(d, 0.1, uniform_gap_ranking(10));
  std::size_t intact = 0;
  for (std::size_t c = 0; c < 10; ++c) {
    auto name = "f" + std::to_string(c);
    if (column_values(cut, name) == column_values(d, name)) ++intact;
  }
  EXPECT_EQ(intact, 1u);  // ceil(0.1 * 10) = 1, the top-ranked feature
  EXPECT_EQ(column_values(cut, "f0"), column_values(d, "f0"));
}

TEST(FeatureImportanceTest, CeilArithmetic) {
  Dataset d = feature_grid(5, 8);
  Dataset cut = feature_importance_attack(d, 0.5, uniform_gap_ranking(5));
  std::size_t intact = 0;
  for (std::size_t c = 0; c < 5; ++c)
    intact += column_values(cut, "f" + std::to_string(c)) ==
              column_values(d, "f" + std::to_string(c));
  EXPECT_EQ(intact, 3u);  // ceil(2.5) = 3
}

TEST(FeatureImportanceTest, CategoricalSuppressionUsesModalCategory) {
  std::vector<ColumnSchema> schema{{"c", ColumnKind::multiclass, {"u", "v", "w"}},
                                   {"x", ColumnKind::continuous, {}},
                                   {"label", ColumnKind::binary, {"n", "p"}}};
  // "v" is modal in column c
  std::vector<double> cells{0, 1.0, 0, 1, 2.0, 1, 1, 3.0, 0, 1, 4.0, 1, 2, 5.0, 0};
  Dataset d(schema, "label", std::move(cells));
  ImportanceRanking rank;
  rank.entries = {{"x", 0.9}, {"c", 0.1}};
  Dataset cut = feature_importance_attack(d, 0.5, rank);  // keep ceil(1)=1: x
  for (double v : column_values(cut, "c")) EXPECT_EQ(v, 1.0);
  EXPECT_EQ(column_values(cut, "x"), column_values(d, "x"));
}

TEST(FeatureImportanceTest, ZeroRetentionRejected) {
  Dataset d = feature_grid(4, 10);
  EXPECT_THROW(feature_importance_attack(d, 0.0, uniform_gap_ranking(4)), Error);
}

TEST(FeatureImportanceTest, RankingMustMatchSchema) {
  Dataset d = feature_grid(4, 10);
  EXPECT_THROW(feature_importance_attack(d, 0.5, uniform_gap_ranking(3)), Error);
  ImportanceRanking with_target = uniform_gap_ranking(4);
  with_target.entries.push_back({"label", 0.0});
  EXPECT_THROW(feature_importance_attack(d, 0.5, with_target), Error);
}

TEST(FeatureImportanceTest, RetainedSetsNestedInRatio) {
  Dataset d = feature_grid(7, 15);
  auto rank = uniform_gap_ranking(7);
  std::vector<std::string> prev;
  for (double r : {0.15, 0.3, 0.58, 0.86, 1.0}) {
    Dataset cut = feature_importance_attack(d, r, rank);
    std::vector<std::string> kept;
    for (std::size_t c = 0; c < 7; ++c) {
      auto name = "f" + std::to_string(c);
      if (column_values(cut, name) == column_values(d, name)) kept.push_back(name);
    }
    EXPECT_TRUE(std::includes(kept.begin(), kept.end(), prev.begin(), prev.end()));
    prev = kept;
  }
  EXPECT_EQ(prev.size(), 7u);
}

TEST(IncorrectSourceTest, SchemaShapeAndBounds) {
  Dataset real = make_blobs(50, RngSeed{8});
  Dataset fake = incorrect_source(real.schema(), real.target_name(), 10000, RngSeed{4});
  EXPECT_TRUE(fake.schema() == real.schema());
  EXPECT_EQ(fake.n_rows(), 10000u);
  for (const char* name : {"sensor_a", "sensor_b", "level_a", "level_b"})
    for (double v : column_values(fake, name)) {
      EXPECT_GE(v, -10.8);
      EXPECT_LE(v, 10.8);
    }
}

TEST(IncorrectSourceTest, ContinuousMeanNearZero) {
  Dataset real = make_blobs(50, RngSeed{8});
  Dataset fake = incorrect_source(real.schema(), real.target_name(), 100000, RngSeed{4});
  auto v = column_values(fake, "level_a");
  double mean = 0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  EXPECT_NEAR(mean, 0.0, 0.15);
}

TEST(IncorrectSourceTest, UniformLabels) {
  Dataset real = make_blobs(50, RngSeed{8});
  Dataset fake = incorrect_source(real.schema(), real.target_name(), 10000, RngSeed{4});
  auto y = column_values(fake, "label");
  double ones = 0;
  for (double x : y) ones += x;
  EXPECT_NEAR(ones / y.size(), 0.5, 0.02);
}

TEST(IncorrectSourceTest, EmptySchemaRejected) {
  EXPECT_THROW(incorrect_source({}, "y", 5, RngSeed{1}), Error);
}

TEST(ScaleOutputTest, Arithmetic) {
  Dataset d = tiny_binary({0, 1});
  EXPECT_TRUE(scale_output(d, 1.0) == d);
  std::vector<ColumnSchema> schema{{"x", ColumnKind::continuous, {}},
                                   {"y", ColumnKind::binary, {"n", "p"}}};
  Dataset two(schema, "y", {1.0, 0, -2.0, 1});
  Dataset scaled = scale_output(two, 2.0);
  EXPECT_EQ(column_values(scaled, "x"), (std::vector<double>{2.0, -4.0}));
  EXPECT_EQ(column_values(scaled, "y"), column_values(two, "y"));
}

TEST(ScaleOutputTest, InverseComposition) {
  Dataset d = make_blobs(200, RngSeed{21});
  EXPECT_TRUE(scale_output(scale_output(d, 2.0), 0.5) == d);
}

TEST(ScaleOutputTest, RejectsDegenerateFactors) {
  Dataset d = tiny_binary({0, 1});
  EXPECT_THROW(scale_output(d, 0.0), Error);
  EXPECT_THROW(scale_output(d, std::numeric_limits<double>::quiet_NaN()), Error);
}

TEST(NoiseInjectTest, ZeroSigmaIsIdentity) {
  Dataset d = make_blobs(100, RngSeed{22});
  EXPECT_TRUE(noise_inject(d, 0.0, RngSeed{1}) == d);
}

TEST(NoiseInjectTest, SampleSdMatchesSigma) {
  std::vector<ColumnSchema> schema{{"x", ColumnKind::continuous, {}},
                                   {"y", ColumnKind::binary, {"n", "p"}}};
  std::vector<double> cells;
  for (int i = 0; i < 100000; ++i) {
    cells.push_back(0.0);
    cells.push_back(static_cast<double>(i % 2));
  }
  Dataset zeros(schema, "y", std::move(cells));
  Dataset noisy = noise_inject(zeros, 10.0, RngSeed{33});
  auto v = column_values(noisy, "x");
  double mean = 0;
  for (double x : v) mean += x;
  mean /= v.size();
  double var = 0;
  for (double x : v) var += (x - mean) * (x - mean);
  var /= v.size();
  EXPECT_NEAR(std::sqrt(var), 10.0, 0.15);
  EXPECT_EQ(column_values(noisy, "y"), column_values(zeros, "y"));
}

TEST(NoiseInjectTest, DeterministicAndSeedSensitive) {
  Dataset d = make_blobs(100, RngSeed{22});
  EXPECT_TRUE(noise_inject(d, 5.0, RngSeed{1}) == noise_inject(d, 5.0, RngSeed{1}));
  EXPECT_FALSE(noise_inject(d, 5.0, RngSeed{1}) == noise_inject(d, 5.0, RngSeed{2}));
  EXPECT_THROW(noise_inject(d, -0.5, RngSeed{1}), Error);
}

TEST(NoiseInjectTest, CommutesWithRowPermutation) {
  Dataset d = make_blobs(60, RngSeed{23});
  std::vector<std::size_t> order(d.n_rows());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
  Dataset attacked_then_permuted = permute_rows(noise_inject(d, 3.0, RngSeed{9}), order);
  Dataset permuted_then_attacked = noise_inject(permute_rows(d, order), 3.0, RngSeed{9});
  EXPECT_TRUE(attacked_then_permuted == permuted_then_attacked);
}

TEST(ScaleOutputTest, CommutesWithRowPermutation) {
  Dataset d = make_blobs(60, RngSeed{24});
  std::vector<std::size_t> order(d.n_rows());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = (i * 7) % order.size();
  std::sort(order.begin(), order.end());  // select_rows needs unique rows; reverse pairs
  order.clear();
  for (std::size_t i = d.n_rows(); i-- > 0;) order.push_back(i);
  EXPECT_TRUE(permute_rows(scale_output(d, 2.0), order) ==
              scale_output(permute_rows(d, order), 2.0));
}

TEST(ApplyAttackTest, NoneIsStrictNoOp) {
  Dataset d = make_blobs(50, RngSeed{25});
  AttackSpec spec;  // kind = none
  AttackedData out = apply_attack(spec, &d, nullptr);
  EXPECT_TRUE(out.data == d);
}

TEST(ApplyAttackTest, DispatchMatchesDirectCalls) {
  Dataset d = make_blobs(200, RngSeed{26});
  AttackSpec spec;
  spec.kind = AttackKind::label_flip;
  spec.ratio = 0.3;
  spec.seed = RngSeed{77};
  AttackedData out = apply_attack(spec, &d, nullptr);
  EXPECT_TRUE(out.data == label_flip(d, 0.3, RngSeed{77}));
  EXPECT_EQ(out.stage, PipelineStage::real_input);

  AttackSpec noise;
  noise.kind = AttackKind::noise_inject;
  noise.sigma = 2.0;
  noise.seed = RngSeed{78};
  AttackedData post = apply_attack(noise, nullptr, &d);
  EXPECT_TRUE(post.data == noise_inject(d, 2.0, RngSeed{78}));
  EXPECT_EQ(post.stage, PipelineStage::synthetic_output);
}

TEST(ApplyAttackTest, GeneratorConfigKindsRejected) {
  Dataset d = make_blobs(50, RngSeed{27});
  for (AttackKind kind : {AttackKind::low_epochs, AttackKind::oversimplified_sdg}) {
    AttackSpec spec;
    spec.kind = kind;
    try {
      apply_attack(spec, &d, &d);
      FAIL() << "expected rejection for " << to_string(kind);
    } catch (const Error& e) {
      EXPECT_NE(std::string(e.what()).find("config"), std::string::npos);
    }
  }
}

TEST(ApplyAttackTest, MissingInputsRejected) {
  Dataset d = make_blobs(50, RngSeed{28});
  AttackSpec flip;
  flip.kind = AttackKind::label_flip;
  flip.ratio = 0.1;
  EXPECT_THROW(apply_attack(flip, nullptr, &d), Error);  // upstream needs real
  AttackSpec noise;
  noise.kind = AttackKind::noise_inject;
  EXPECT_THROW(apply_attack(noise, &d, nullptr), Error);  // post-gen needs synth
  AttackSpec fia;
  fia.kind = AttackKind::feature_importance;
  fia.ratio = 0.5;
  EXPECT_THROW(apply_attack(fia, &d, nullptr, nullptr), Error);  // needs ranking
}

TEST(ImportanceRankingTest, ValidationRules) {
  ImportanceRanking rank;
  rank.entries = {{"a", 0.6}, {"b", 0.4}};
  EXPECT_NO_THROW(rank.validate());
  rank.entries = {{"a", 0.4}, {"b", 0.6}};  // not descending
  EXPECT_THROW(rank.validate(), Error);
  rank.entries = {{"a", 0.7}, {"b", -0.1}};  // negative weight
  EXPECT_THROW(rank.validate(), Error);
  rank.entries = {{"a", 0.6}, {"b", 0.2}};  // sums to 0.8
  EXPECT_THROW(rank.validate(), Error);
}
