// Command-line front end: apply attacks to CSV data, fit and sample
// generators, score synthetic data against real data, run experiment grids
// from config files, and emit the bundled fixtures.
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sdgbench/sdgbench.hpp"

namespace {

using namespace sdgbench;

// Load a CSV with either an explicit schema file or an inferred schema. With
// inference the target defaults to the last column.
Dataset load_input(const std::string& csv_path, const std::string& schema_path,
                   const std::string& target_flag) {
  if (!schema_path.empty()) {
    auto [schema, target] = load_schema_file(schema_path);
    return load_csv(csv_path, schema, target);
  }
  auto schema = infer_schema(csv_path);
  std::string target = target_flag.empty() ? schema.back().name : target_flag;
  return load_csv(csv_path, schema, target);
}

struct CommonDataOpts {
  std::string schema;
  std::string target;

  void attach(CLI::App* cmd) {
    cmd->add_option("--schema", schema,
                    "schema file; omit to infer kinds from the CSV");
    cmd->add_option("--target", target,
                    "target column when inferring (default: last column)");
  }
};

void print_fidelity(const FidelityReport& f) {
  std::printf("%-14s %-6s %s\n", "column", "metric", "value");
  for (const auto& e : f.entries)
    std::printf("%-14s %-6s %s\n", e.column.c_str(), e.metric.c_str(),
                detail::format_double(e.value).c_str());
  std::printf("\n");
  std::printf("wd_mean  %s\n", detail::format_double(f.wd_mean).c_str());
  std::printf("ks_mean  %s\n", detail::format_double(f.ks_mean).c_str());
  std::printf("kld_mean %s\n", detail::format_double(f.kld_mean).c_str());
}

int run_attack(const std::string& in_path, const std::string& out_path,
               const CommonDataOpts& data_opts, AttackSpec spec) {
  Dataset input = load_input(in_path, data_opts.schema, data_opts.target);
  if (stage_of(spec.kind) == PipelineStage::generator_config)
    throw Error(std::string(to_string(spec.kind)) +
                " degrades the generator configuration, not a dataset; use the "
                "run subcommand");
  Dataset attacked = [&]() {
    if (spec.kind == AttackKind::feature_importance) {
      ClassifierConfig rank_config =
          forest_defaults(RngSeed{rng::derive(spec.seed, "ranking/forest")});
      ImportanceRanking ranking = feature_importances(train(rank_config, input));
      return apply_attack(spec, &input, nullptr, &ranking).data;
    }
    if (stage_of(spec.kind) == PipelineStage::real_input)
      return apply_attack(spec, &input, nullptr).data;
    return apply_attack(spec, nullptr, &input).data;
  }();
  write_csv(attacked, out_path);
  std::printf("wrote %s (%zu rows)\n", out_path.c_str(), attacked.n_rows());
  return 0;
}

int run_generate(const std::string& in_path, const std::string& out_path,
                 const CommonDataOpts& data_opts, GeneratorConfig config,
                 std::size_t rows, std::uint64_t seed) {
  Dataset input = load_input(in_path, data_opts.schema, data_opts.target);
  config.seed = RngSeed{seed};
  GeneratorModel model = fit(config, input);
  std::size_t n = rows ? rows : input.n_rows();
  Dataset synth = sample(model, n, RngSeed{rng::derive(RngSeed{seed}, "sample")});
  write_csv(synth, out_path);
  std::printf("wrote %s (%zu rows, %s)\n", out_path.c_str(), n,
              std::string(to_string(config.family)).c_str());
  return 0;
}

int run_evaluate(const std::string& real_path, const std::string& synth_path,
                 const CommonDataOpts& data_opts, int bins, std::uint64_t seed,
                 bool skip_tstr) {
  std::vector<ColumnSchema> schema;
  std::string target;
  if (!data_opts.schema.empty()) {
    std::tie(schema, target) = load_schema_file(data_opts.schema);
  } else {
    schema = infer_schema(real_path);
    target = data_opts.target.empty() ? schema.back().name : data_opts.target;
  }
  Dataset real = load_csv(real_path, schema, target);
  Dataset synth = load_csv(synth_path, schema, target);
  FidelityReport fidelity = fidelity_report(real, synth, bins);
  print_fidelity(fidelity);
  if (!skip_tstr) {
    UtilityReport utility = tstr(synth, real, default_suite(RngSeed{seed}));
    std::printf("\n");
    std::printf("acc_logreg %s\n", detail::format_double(utility.acc_logreg).c_str());
    std::printf("acc_forest %s\n", detail::format_double(utility.acc_forest).c_str());
    std::printf("acc_mlp    %s\n", detail::format_double(utility.acc_mlp).c_str());
  }
  return 0;
}

int run_experiment_cmd(const std::string& config_path,
                       std::optional<std::uint64_t> seed,
                       const std::string& output_dir) {
  ExperimentConfig config = load_experiment_config(config_path);
  if (seed) config.seeds = {*seed};
  if (!output_dir.empty()) config.output_dir = output_dir;
  ExperimentResult result = run_and_emit(config);
  std::string dir = config.output_dir;
  if (const char* env = std::getenv("SDGBENCH_OUTPUT_DIR"); env && *env) dir = env;
  std::printf("%s: %zu records, %zu report cells, %zu failed cells -> %s\n",
              config.name.c_str(), result.records.size(),
              result.report.cells.size(), result.report.failures.size(),
              dir.c_str());
  for (const auto& f : result.report.failures)
    std::fprintf(stderr, "failed cell: %s/%s %s seed %llu: %s\n",
                 f.dataset.c_str(), std::string(to_string(f.family)).c_str(),
                 std::string(to_string(f.attack)).c_str(),
                 static_cast<unsigned long long>(f.seed), f.message.c_str());
  return 0;
}

int run_fixtures(const std::string& out_dir, std::size_t rows,
                 std::uint64_t seed, const std::string& only) {
  std::vector<std::string> names = fixture_names();
  if (!only.empty()) {
    if (std::find(names.begin(), names.end(), only) == names.end())
      throw Error("unknown fixture: " + only);
    names = {only};
  }
  std::filesystem::create_directories(out_dir);
  for (const std::string& name : names) {
    Dataset d = make_fixture(name, rows, RngSeed{seed});
    auto base = (std::filesystem::path(out_dir) / name).string();
    write_csv(d, base + ".csv");
    write_schema_file(d.schema(), d.target_name(), base + ".schema");
    std::printf("wrote %s.csv and %s.schema (%zu rows)\n", base.c_str(),
                base.c_str(), d.n_rows());
  }
  return 0;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"quality-degradation benchmark for tabular synthetic-data pipelines"};
  app.require_subcommand(1);

  // attack
  auto* attack_cmd = app.add_subcommand("attack", "apply one attack to a CSV");
  std::string attack_kind;
  AttackSpec attack_spec;
  std::uint64_t attack_seed = 0;
  std::string attack_in, attack_out;
  CommonDataOpts attack_data;
  attack_cmd->add_option("--kind", attack_kind, "attack kind")->required();
  attack_cmd->add_option("--ratio", attack_spec.ratio, "tamper ratio in [0,1]");
  attack_cmd->add_option("--scale", attack_spec.scale, "scale factor (scale_output)");
  attack_cmd->add_option("--sigma", attack_spec.sigma, "noise level (noise_inject)");
  attack_cmd->add_option("--seed", attack_seed, "attack seed");
  attack_data.attach(attack_cmd);
  attack_cmd->add_option("input", attack_in, "input CSV")->required();
  attack_cmd->add_option("output", attack_out, "output CSV")->required();

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "fit a generator and sample synthetic rows");
  std::string gen_family = "gmm";
  GeneratorConfig gen_config;
  std::size_t gen_rows = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_in, gen_out;
  CommonDataOpts gen_data;
  gen_cmd->add_option("--family", gen_family, "gmm, gaussian_copula or histogram");
  gen_cmd->add_option("--components", gen_config.components, "mixture components (gmm)");
  gen_cmd->add_option("--max-epochs", gen_config.max_epochs, "EM iteration cap (gmm)");
  gen_cmd->add_option("--tolerance", gen_config.tolerance, "EM stopping tolerance (gmm)");
  gen_cmd->add_option("--bins", gen_config.bins, "histogram bins");
  gen_cmd->add_option("--rows", gen_rows, "rows to sample (default: input size)");
  gen_cmd->add_option("--seed", gen_seed, "generator seed");
  gen_data.attach(gen_cmd);
  gen_cmd->add_option("input", gen_in, "training CSV")->required();
  gen_cmd->add_option("output", gen_out, "synthetic CSV to write")->required();

  // evaluate
  auto* eval_cmd = app.add_subcommand("evaluate", "score synthetic data against real data");
  std::string eval_real, eval_synth;
  CommonDataOpts eval_data;
  int eval_bins = 20;
  std::uint64_t eval_seed = 0;
  bool eval_no_tstr = false;
  eval_cmd->add_option("--bins", eval_bins, "histogram bins for divergence");
  eval_cmd->add_option("--seed", eval_seed, "classifier suite seed");
  eval_cmd->add_flag("--no-tstr", eval_no_tstr, "skip classifier training");
  eval_data.attach(eval_cmd);
  eval_cmd->add_option("real", eval_real, "real CSV")->required();
  eval_cmd->add_option("synthetic", eval_synth, "synthetic CSV")->required();

  // run
  auto* run_cmd = app.add_subcommand("run", "run an experiment grid from a config file");
  std::string run_config, run_output;
  std::optional<std::uint64_t> run_seed;
  run_cmd->add_option("--config", run_config, "experiment config file")->required();
  run_cmd->add_option("--seed", run_seed, "run a single seed instead of the configured list");
  run_cmd->add_option("--output-dir", run_output, "override the configured output directory");

  // fixtures
  auto* fix_cmd = app.add_subcommand("fixtures", "write the bundled datasets as CSV + schema");
  std::string fix_out = "fixtures";
  std::size_t fix_rows = 2000;
  std::uint64_t fix_seed = 7001;
  std::string fix_name;
  fix_cmd->add_option("--out", fix_out, "output directory");
  fix_cmd->add_option("--rows", fix_rows, "rows per dataset");
  fix_cmd->add_option("--seed", fix_seed, "fixture seed");
  fix_cmd->add_option("--name", fix_name, "emit a single fixture");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*attack_cmd) {
      attack_spec.kind = attack_kind_from_string(attack_kind);
      attack_spec.seed = RngSeed{attack_seed};
      attack_spec.validate();
      return run_attack(attack_in, attack_out, attack_data, attack_spec);
    }
    if (*gen_cmd) {
      gen_config.family = generator_family_from_string(gen_family);
      return run_generate(gen_in, gen_out, gen_data, gen_config, gen_rows, gen_seed);
    }
    if (*eval_cmd)
      return run_evaluate(eval_real, eval_synth, eval_data, eval_bins, eval_seed,
                          eval_no_tstr);
    if (*run_cmd) return run_experiment_cmd(run_config, run_seed, run_output);
    if (*fix_cmd) return run_fixtures(fix_out, fix_rows, fix_seed, fix_name);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

#ifndef SDGBENCH_CLI_NO_MAIN
int main(int argc, char** argv) { return cli_main(argc, argv); }
#endif
