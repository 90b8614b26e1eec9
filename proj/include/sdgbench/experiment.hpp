#pragma once

// Experiment orchestration: run a (generator family x seed) grid over a
// dataset, apply each configured attack at the pipeline stage it belongs to,
// measure fidelity + TSTR utility per cell, aggregate percent changes
// against the per-(dataset, family, seed) baseline, and emit the results as
// a run-record CSV, a report CSV and a markdown report.
//
// Failures are contained per cell: an error in one attack cell is recorded
// in the report's failure list and the sweep continues. A synthetic sample
// whose target collapses to one class still contributes fidelity metrics;
// its accuracies are recorded as NaN with status "degenerate".

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "sdgbench/attacks.hpp"
#include "sdgbench/classifiers.hpp"
#include "sdgbench/dataset.hpp"
#include "sdgbench/error.hpp"
#include "sdgbench/fixtures.hpp"
#include "sdgbench/generators.hpp"
#include "sdgbench/kvfile.hpp"
#include "sdgbench/metrics.hpp"
#include "sdgbench/rng.hpp"

namespace sdgbench {

struct ExperimentConfig {
  std::string name = "experiment";
  // dataset source: either a named fixture or a CSV + schema file pair
  std::string fixture;
  std::size_t fixture_rows = 2000;
  RngSeed fixture_seed{7001};
  std::string data_path;
  std::string schema_path;

  double test_fraction = 0.2;
  int metric_bins = 20;
  std::size_t synth_rows = 0;  // 0 = same as the train split

  std::vector<GeneratorFamily> families{GeneratorFamily::gmm};
  GeneratorConfig generator;  // per-run seed is derived, the field here is ignored

  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  std::vector<AttackSpec> attacks;  // fully expanded (one entry per ratio)

  ClassifierSuite suite;  // per-run seeds are derived
  std::string output_dir = "out";

  void validate() const {
    if (fixture.empty() == data_path.empty())
      throw Error("experiment config: exactly one of fixture or data csv must be set");
    if (!data_path.empty() && schema_path.empty())
      throw Error("experiment config: data csv requires a schema file");
    if (!(test_fraction > 0.0 && test_fraction < 1.0))
      throw Error("experiment config: test_fraction must be in (0, 1)");
    if (metric_bins < 2) throw Error("experiment config: metric bins must be >= 2");
    if (families.empty()) throw Error("experiment config: no generator families");
    if (seeds.empty()) throw Error("experiment config: no seeds");
    generator.validate();
    for (const auto& a : attacks) {
      if (a.kind == AttackKind::none)
        throw Error("experiment config: 'none' is implicit and cannot be listed");
      a.validate();
    }
  }
};

struct RunRecord {
  std::string dataset;
  GeneratorFamily family = GeneratorFamily::gmm;
  AttackKind attack = AttackKind::none;  // none = baseline row
  bool has_ratio = false;
  double ratio = 0.0;
  std::uint64_t seed = 0;
  std::string stage;   // "baseline", "real_input", "generator_config", "synthetic_output"
  std::string status;  // "ok" or "degenerate"
  double acc_logreg = std::numeric_limits<double>::quiet_NaN();
  double acc_forest = std::numeric_limits<double>::quiet_NaN();
  double acc_mlp = std::numeric_limits<double>::quiet_NaN();
  double wd_mean = 0.0;
  double ks_mean = 0.0;
  double kld_mean = 0.0;
};

inline constexpr std::array<std::string_view, 6> kReportMetrics = {
    "acc_logreg", "acc_forest", "acc_mlp", "wd_mean", "ks_mean", "kld_mean"};

struct ReportCell {
  AttackKind attack = AttackKind::none;
  bool has_ratio = false;
  double ratio = 0.0;
  // mean percent change per metric, in kReportMetrics order
  std::array<std::optional<double>, 6> change;
  std::array<std::size_t, 6> defined{};
  std::size_t pairs = 0;
};

struct CellFailure {
  std::string dataset;
  GeneratorFamily family = GeneratorFamily::gmm;
  AttackKind attack = AttackKind::none;
  bool has_ratio = false;
  double ratio = 0.0;
  std::uint64_t seed = 0;
  std::string message;
};

struct ExperimentReport {
  std::vector<ReportCell> cells;
  std::vector<CellFailure> failures;
  std::size_t baselines = 0;
};

struct ExperimentResult {
  std::vector<RunRecord> records;
  ExperimentReport report;
};

// Test hook: observes which data/config each pipeline stage actually sees.
struct RunObserver {
  virtual ~RunObserver() = default;
  virtual void on_fit_input(const AttackSpec&, const Dataset&) {}
  virtual void on_generator_config(const AttackSpec&, const GeneratorConfig&) {}
  virtual void on_synthetic(const AttackSpec&, const Dataset&) {}
};

namespace detail {

inline std::array<double, 6> record_metrics(const RunRecord& r) {
  return {r.acc_logreg, r.acc_forest, r.acc_mlp, r.wd_mean, r.ks_mean, r.kld_mean};
}

}  // namespace detail

// Pool attacked records against their (dataset, family, seed) baseline and
// average the per-metric percent changes per (attack, ratio) cell. A pair
// contributes to a metric only when both sides are finite and the baseline
// is nonzero; `defined` counts the contributors per metric.
inline ExperimentReport aggregate(const std::vector<RunRecord>& records) {
  ExperimentReport report;
  std::map<std::tuple<std::string, std::string, std::uint64_t>, const RunRecord*> baselines;
  for (const auto& r : records) {
    if (r.attack != AttackKind::none) continue;
    auto key = std::make_tuple(r.dataset, std::string(to_string(r.family)), r.seed);
    if (!baselines.emplace(key, &r).second)
      throw Error("aggregate: duplicate baseline for dataset=" + r.dataset + " generator=" +
                  std::string(to_string(r.family)) + " seed=" + std::to_string(r.seed));
    ++report.baselines;
  }
  struct Acc {
    std::array<double, 6> sum{};
    std::array<std::size_t, 6> defined{};
    std::size_t pairs = 0;
  };
  std::map<std::tuple<int, double>, Acc> cells;
  for (const auto& r : records) {
    if (r.attack == AttackKind::none) continue;
    auto key = std::make_tuple(r.dataset, std::string(to_string(r.family)), r.seed);
    auto it = baselines.find(key);
    if (it == baselines.end())
      throw Error("aggregate: attacked record without a baseline (dataset=" + r.dataset +
                  " generator=" + std::string(to_string(r.family)) +
                  " seed=" + std::to_string(r.seed) + ")");
    auto base_vals = detail::record_metrics(*it->second);
    auto att_vals = detail::record_metrics(r);
    auto& acc = cells[{static_cast<int>(r.attack), r.has_ratio ? r.ratio : -1.0}];
    ++acc.pairs;
    for (std::size_t m = 0; m < 6; ++m) {
      if (auto pc = try_percent_change(base_vals[m], att_vals[m])) {
        acc.sum[m] += *pc;
        ++acc.defined[m];
      }
    }
  }
  for (const auto& [key, acc] : cells) {
    ReportCell cell;
    cell.attack = static_cast<AttackKind>(std::get<0>(key));
    cell.has_ratio = std::get<1>(key) >= 0.0;
    cell.ratio = cell.has_ratio ? std::get<1>(key) : 0.0;
    cell.pairs = acc.pairs;
    for (std::size_t m = 0; m < 6; ++m) {
      cell.defined[m] = acc.defined[m];
      if (acc.defined[m] > 0)
        cell.change[m] = acc.sum[m] / static_cast<double>(acc.defined[m]);
    }
    report.cells.push_back(cell);
  }
  return report;
}

namespace detail {

inline std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return std::string(buf);
}

inline std::string cell_text(const std::optional<double>& v) {
  return v ? fixed2(*v) : std::string("N/A");
}

}  // namespace detail

enum class ReportFormat { markdown, csv };

inline std::string render_report_csv(const ExperimentReport& report) {
  std::string out = "attack,ratio,metric,percent_change,defined,pairs\n";
  for (const auto& cell : report.cells) {
    for (std::size_t m = 0; m < 6; ++m) {
      out += std::string(to_string(cell.attack)) + ",";
      out += cell.has_ratio ? detail::format_double(cell.ratio) : std::string();
      out += ",";
      out += std::string(kReportMetrics[m]) + ",";
      if (cell.change[m]) out += detail::format_double(*cell.change[m]);
      out += "," + std::to_string(cell.defined[m]) + "," + std::to_string(cell.pairs) + "\n";
    }
  }
  return out;
}

inline std::string render_report_markdown(const ExperimentReport& report) {
  std::string out = "# Quality-degradation report\n\n";
  out += "Mean percent change vs the per-(dataset, generator, seed) baseline, "
         "averaged over all runs of each attack cell.\n\n";
  out += "| Attack Type | Attack Ratio | LR | RF | MLP | WD | KS | KLD |\n";
  out += "| --- | --- | --- | --- | --- | --- | --- | --- |\n";
  auto row = [&](std::string_view attack, const std::string& ratio,
                 const std::array<std::optional<double>, 6>& vals) {
    out += "| " + std::string(attack) + " | " + ratio + " |";
    for (const auto& v : vals) out += " " + detail::cell_text(v) + " |";
    out += "\n";
  };
  for (std::size_t i = 0; i < report.cells.size();) {
    const AttackKind attack = report.cells[i].attack;
    std::size_t end = i;
    while (end < report.cells.size() && report.cells[end].attack == attack) ++end;
    bool ratio_block = report.cells[i].has_ratio;
    std::array<double, 6> sum{};
    std::array<std::size_t, 6> cnt{};
    for (std::size_t j = i; j < end; ++j) {
      const auto& cell = report.cells[j];
      row(to_string(attack),
          cell.has_ratio ? detail::format_double(cell.ratio) : std::string("-"), cell.change);
      for (std::size_t m = 0; m < 6; ++m)
        if (cell.change[m]) {
          sum[m] += *cell.change[m];
          ++cnt[m];
        }
    }
    if (ratio_block && end - i >= 1) {
      std::array<std::optional<double>, 6> avg;
      for (std::size_t m = 0; m < 6; ++m)
        if (cnt[m] > 0) avg[m] = sum[m] / static_cast<double>(cnt[m]);
      row(to_string(attack), "Avg", avg);
    }
    i = end;
  }
  // pair counts and partial cells, kept out of the table to preserve its shape
  out += "\nBaseline cells: " + std::to_string(report.baselines) + "\n";
  for (const auto& cell : report.cells) {
    bool partial = false;
    for (std::size_t m = 0; m < 6; ++m)
      if (cell.defined[m] != cell.pairs) partial = true;
    std::string label = std::string(to_string(cell.attack)) +
                        (cell.has_ratio ? " ratio " + detail::format_double(cell.ratio) : "");
    out += "- " + label + ": " + std::to_string(cell.pairs) + " pairs";
    if (partial) {
      out += " (defined:";
      for (std::size_t m = 0; m < 6; ++m)
        out += " " + std::string(kReportMetrics[m]) + "=" + std::to_string(cell.defined[m]);
      out += ")";
    }
    out += "\n";
  }
  if (!report.failures.empty()) {
    out += "\n## Failed cells\n\n";
    for (const auto& f : report.failures) {
      out += "- dataset=" + f.dataset + " generator=" + std::string(to_string(f.family)) +
             " attack=" + std::string(to_string(f.attack));
      if (f.has_ratio) out += " ratio=" + detail::format_double(f.ratio);
      out += " seed=" + std::to_string(f.seed) + ": " + f.message + "\n";
    }
  }
  return out;
}

inline void emit_report(const ExperimentReport& report, ReportFormat format,
                        const std::string& path) {
  if (report.cells.empty())
    throw Error("emit_report: report has no attack cells");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("emit_report: cannot write " + path);
  out << (format == ReportFormat::markdown ? render_report_markdown(report)
                                           : render_report_csv(report));
  if (!out) throw Error("emit_report: write failed for " + path);
}

inline std::string records_to_csv(const std::vector<RunRecord>& records) {
  std::string out =
      "dataset,generator,attack,ratio,seed,stage,status,acc_logreg,acc_forest,acc_mlp,"
      "wd_mean,ks_mean,kld_mean\n";
  for (const auto& r : records) {
    out += r.dataset + ",";
    out += std::string(to_string(r.family)) + ",";
    out += std::string(to_string(r.attack)) + ",";
    if (r.has_ratio) out += detail::format_double(r.ratio);
    out += "," + std::to_string(r.seed) + "," + r.stage + "," + r.status;
    for (double v : detail::record_metrics(r)) out += "," + detail::format_double(v);
    out += "\n";
  }
  return out;
}

namespace detail {

inline Dataset load_experiment_dataset(const ExperimentConfig& config) {
  if (!config.fixture.empty())
    return make_fixture(config.fixture, config.fixture_rows, config.fixture_seed);
  auto [schema, target] = load_schema_file(config.schema_path);
  return load_csv(config.data_path, schema, target);
}

struct CellContext {
  const ExperimentConfig& config;
  const Dataset& train;
  const Dataset& test;
  GeneratorConfig gen_config;
  ClassifierSuite suite;
  std::size_t synth_rows;
  RngSeed sample_seed;
};

inline RunRecord measure_cell(const CellContext& ctx, const Dataset& synth,
                              RunRecord record) {
  auto fidelity = fidelity_report(ctx.train, synth, ctx.config.metric_bins);
  record.wd_mean = fidelity.wd_mean;
  record.ks_mean = fidelity.ks_mean;
  record.kld_mean = fidelity.kld_mean;
  try {
    UtilityReport utility = tstr(synth, ctx.test, ctx.suite);
    record.acc_logreg = utility.acc_logreg;
    record.acc_forest = utility.acc_forest;
    record.acc_mlp = utility.acc_mlp;
    record.status = "ok";
  } catch (const DegenerateData&) {
    record.status = "degenerate";  // accuracies stay NaN, fidelity stands
  }
  return record;
}

}  // namespace detail

// Run the full grid. Cells never abort the sweep: per-cell errors land in
// report.failures. Sequential and deterministic given the config.
inline ExperimentResult run_experiment(const ExperimentConfig& config,
                                       RunObserver* observer = nullptr) {
  config.validate();
  Dataset full = detail::load_experiment_dataset(config);
  std::string dataset_name =
      !config.fixture.empty()
          ? config.fixture
          : std::filesystem::path(config.data_path).stem().string();

  ExperimentResult result;
  std::vector<CellFailure> failures;
  for (GeneratorFamily family : config.families) {
    for (std::uint64_t seed_value : config.seeds) {
      RngSeed seed{seed_value};
      auto [train_split, test_split] = train_test_split(full, config.test_fraction, seed);

      GeneratorConfig gen_config = config.generator;
      gen_config.family = family;
      gen_config.seed = RngSeed{rng::derive(seed, std::string("fit/") +
                                                      std::string(to_string(family)))};
      detail::CellContext ctx{
          config,
          train_split,
          test_split,
          gen_config,
          config.suite,
          config.synth_rows ? config.synth_rows : train_split.n_rows(),
          RngSeed{rng::derive(seed, "sample")},
      };
      ctx.suite.logreg.seed = RngSeed{rng::derive(seed, "suite/logreg")};
      ctx.suite.forest.seed = RngSeed{rng::derive(seed, "suite/forest")};
      ctx.suite.mlp.seed = RngSeed{rng::derive(seed, "suite/mlp")};

      RunRecord proto;
      proto.dataset = dataset_name;
      proto.family = family;
      proto.seed = seed_value;

      // baseline: clean train -> fit -> sample
      std::optional<Dataset> synth0;
      try {
        AttackSpec none_spec;  // kind = none
        if (observer) observer->on_fit_input(none_spec, train_split);
        if (observer) observer->on_generator_config(none_spec, gen_config);
        GeneratorModel model = fit(gen_config, train_split);
        synth0 = sample(model, ctx.synth_rows, ctx.sample_seed);
        if (observer) observer->on_synthetic(none_spec, *synth0);
        RunRecord baseline = proto;
        baseline.attack = AttackKind::none;
        baseline.stage = "baseline";
        result.records.push_back(detail::measure_cell(ctx, *synth0, baseline));
      } catch (const Error& e) {
        failures.push_back({proto.dataset, family, AttackKind::none, false, 0.0, seed_value,
                            e.what()});
        continue;  // no baseline, no attacked cells for this (family, seed)
      }

      // feature-importance ranking comes from a forest on the clean train split
      std::optional<ImportanceRanking> ranking;
      auto get_ranking = [&]() -> const ImportanceRanking& {
        if (!ranking) {
          ClassifierConfig rank_config = forest_defaults(
              RngSeed{rng::derive(seed, "ranking/forest")});
          ranking = feature_importances(train(rank_config, ctx.train));
        }
        return *ranking;
      };

      for (const AttackSpec& configured : config.attacks) {
        AttackSpec spec = configured;
        spec.seed = RngSeed{rng::derive(seed, "attack/" + std::string(to_string(spec.kind)))};
        RunRecord record = proto;
        record.attack = spec.kind;
        record.has_ratio = uses_ratio(spec.kind);
        record.ratio = record.has_ratio ? spec.ratio : 0.0;
        record.stage = std::string(to_string(stage_of(spec.kind)));
        try {
          Dataset synth = [&]() -> Dataset {
            switch (stage_of(spec.kind)) {
              case PipelineStage::real_input: {
                const ImportanceRanking* rank =
                    spec.kind == AttackKind::feature_importance ? &get_ranking() : nullptr;
                AttackedData attacked = apply_attack(spec, &ctx.train, nullptr, rank);
                if (observer) observer->on_fit_input(spec, attacked.data);
                if (observer) observer->on_generator_config(spec, ctx.gen_config);
                GeneratorModel model = fit(ctx.gen_config, attacked.data);
                return sample(model, ctx.synth_rows, ctx.sample_seed);
              }
              case PipelineStage::generator_config: {
                GeneratorConfig degraded = degraded_config(ctx.gen_config, spec);
                if (observer) observer->on_fit_input(spec, ctx.train);
                if (observer) observer->on_generator_config(spec, degraded);
                GeneratorModel model = fit(degraded, ctx.train);
                return sample(model, ctx.synth_rows, ctx.sample_seed);
              }
              case PipelineStage::synthetic_output:
                return apply_attack(spec, nullptr, &*synth0).data;
            }
            throw Error("run_experiment: unreachable stage");
          }();
          if (observer) observer->on_synthetic(spec, synth);
          result.records.push_back(detail::measure_cell(ctx, synth, record));
        } catch (const Error& e) {
          failures.push_back({record.dataset, family, spec.kind, record.has_ratio,
                              record.ratio, seed_value, e.what()});
        }
      }
    }
  }
  result.report = aggregate(result.records);
  result.report.failures = std::move(failures);
  return result;
}

// Run and write run_records.csv, report.csv and report.md into the output
// directory (SDGBENCH_OUTPUT_DIR overrides the configured path).
inline ExperimentResult run_and_emit(const ExperimentConfig& config,
                                     RunObserver* observer = nullptr) {
  ExperimentResult result = run_experiment(config, observer);
  std::string dir = config.output_dir;
  if (const char* env = std::getenv("SDGBENCH_OUTPUT_DIR"); env && *env) dir = env;
  std::filesystem::create_directories(dir);
  auto out_path = [&](std::string_view file) {
    return (std::filesystem::path(dir) / file).string();
  };
  {
    std::ofstream out(out_path("run_records.csv"), std::ios::binary);
    if (!out) throw Error("cannot write " + out_path("run_records.csv"));
    out << records_to_csv(result.records);
  }
  if (!result.report.cells.empty()) {
    emit_report(result.report, ReportFormat::csv, out_path("report.csv"));
    emit_report(result.report, ReportFormat::markdown, out_path("report.md"));
  }
  return result;
}

// ---- config file parsing ----

namespace detail {

inline ClassifierSuite suite_from_config(const KvSection* sec) {
  ClassifierSuite suite{logreg_defaults(), forest_defaults(), mlp_defaults()};
  if (!sec) return suite;
  if (const auto* v = sec->find("logreg_learning_rate"))
    suite.logreg.learning_rate = parse_double(*v, "logreg_learning_rate");
  if (const auto* v = sec->find("logreg_iterations"))
    suite.logreg.iterations = static_cast<int>(parse_int(*v, "logreg_iterations"));
  if (const auto* v = sec->find("mlp_learning_rate"))
    suite.mlp.learning_rate = parse_double(*v, "mlp_learning_rate");
  if (const auto* v = sec->find("mlp_iterations"))
    suite.mlp.iterations = static_cast<int>(parse_int(*v, "mlp_iterations"));
  if (const auto* v = sec->find("mlp_hidden_units"))
    suite.mlp.hidden_units = static_cast<int>(parse_int(*v, "mlp_hidden_units"));
  if (const auto* v = sec->find("forest_trees"))
    suite.forest.trees = static_cast<int>(parse_int(*v, "forest_trees"));
  if (const auto* v = sec->find("forest_max_depth"))
    suite.forest.max_depth = static_cast<int>(parse_int(*v, "forest_max_depth"));
  if (const auto* v = sec->find("l2")) {
    suite.logreg.l2 = suite.mlp.l2 = parse_double(*v, "l2");
  }
  return suite;
}

}  // namespace detail

inline ExperimentConfig parse_experiment_config(const KvFile& file,
                                                const std::string& origin) {
  ExperimentConfig config;
  if (const auto* exp = file.find("experiment")) {
    if (const auto* v = exp->find("name")) config.name = *v;
    if (const auto* v = exp->find("seeds")) {
      config.seeds.clear();
      for (const auto& s : detail::split_list(*v))
        config.seeds.push_back(detail::parse_u64(s, "seeds"));
    }
    if (const auto* v = exp->find("output_dir")) config.output_dir = *v;
  }
  const auto* ds = file.find("dataset");
  if (!ds) throw Error(origin + ": missing [dataset] section");
  if (const auto* v = ds->find("fixture")) config.fixture = *v;
  if (const auto* v = ds->find("rows"))
    config.fixture_rows = static_cast<std::size_t>(detail::parse_u64(*v, "rows"));
  if (const auto* v = ds->find("fixture_seed"))
    config.fixture_seed = RngSeed{detail::parse_u64(*v, "fixture_seed")};
  if (const auto* v = ds->find("data")) config.data_path = *v;
  if (const auto* v = ds->find("schema")) config.schema_path = *v;
  if (const auto* v = ds->find("test_fraction"))
    config.test_fraction = detail::parse_double(*v, "test_fraction");

  if (const auto* gen = file.find("generators")) {
    if (const auto* v = gen->find("families")) {
      config.families.clear();
      for (const auto& s : detail::split_list(*v))
        config.families.push_back(generator_family_from_string(s));
    }
    if (const auto* v = gen->find("components"))
      config.generator.components = static_cast<int>(detail::parse_int(*v, "components"));
    if (const auto* v = gen->find("max_epochs"))
      config.generator.max_epochs = static_cast<int>(detail::parse_int(*v, "max_epochs"));
    if (const auto* v = gen->find("tolerance"))
      config.generator.tolerance = detail::parse_double(*v, "tolerance");
    if (const auto* v = gen->find("bins"))
      config.generator.bins = static_cast<int>(detail::parse_int(*v, "bins"));
  }
  if (const auto* met = file.find("metrics")) {
    if (const auto* v = met->find("bins"))
      config.metric_bins = static_cast<int>(detail::parse_int(*v, "bins"));
  }
  config.suite = detail::suite_from_config(file.find("tstr"));
  if (const auto* t = file.find("tstr")) {
    if (const auto* v = t->find("synth_rows"))
      config.synth_rows = static_cast<std::size_t>(detail::parse_u64(*v, "synth_rows"));
  }

  const auto* att = file.find("attacks");
  if (att) {
    AttackSpec base;
    double budget = std::numeric_limits<double>::quiet_NaN();
    if (const auto* v = att->find("budget")) budget = detail::parse_double(*v, "budget");
    if (const auto* v = att->find("scale")) base.scale = detail::parse_double(*v, "scale");
    if (const auto* v = att->find("sigma")) base.sigma = detail::parse_double(*v, "sigma");
    if (const auto* v = att->find("epochs"))
      base.epochs = static_cast<int>(detail::parse_int(*v, "epochs"));
    if (const auto* v = att->find("components"))
      base.components = static_cast<int>(detail::parse_int(*v, "components"));
    std::vector<double> ratios{0.1, 0.3, 0.5};
    if (const auto* v = att->find("ratios")) {
      ratios.clear();
      for (const auto& s : detail::split_list(*v))
        ratios.push_back(detail::parse_double(s, "ratios"));
    }
    if (const auto* v = att->find("kinds")) {
      for (const auto& s : detail::split_list(*v)) {
        AttackSpec spec = base;
        spec.kind = attack_kind_from_string(s);
        if (spec.kind == AttackKind::none) continue;  // the baseline always runs
        spec.budget = budget;
        if (uses_ratio(spec.kind)) {
          for (double r : ratios) {
            spec.ratio = r;
            config.attacks.push_back(spec);
          }
        } else {
          config.attacks.push_back(spec);
        }
      }
    }
  }
  config.validate();
  // fail now if the config points at missing files
  if (!config.data_path.empty()) {
    if (!std::filesystem::exists(config.data_path))
      throw Error(origin + ": data file not found: " + config.data_path);
    if (!std::filesystem::exists(config.schema_path))
      throw Error(origin + ": schema file not found: " + config.schema_path);
  }
  return config;
}

inline ExperimentConfig load_experiment_config(const std::string& path) {
  return parse_experiment_config(parse_kv_file(path), path);
}

}  // namespace sdgbench
