// Runs a small in-memory experiment grid (two seeds, three attacks) and
// prints the aggregated Markdown report.
#include <cstdio>

#include "sdgbench/sdgbench.hpp"

using namespace sdgbench;

int main() {
  ExperimentConfig config;
  config.name = "mini_grid";
  config.fixture = "blobs";
  config.fixture_rows = 1000;
  config.seeds = {1, 2};
  config.generator.components = 8;

  AttackSpec flip;
  flip.kind = AttackKind::label_flip;
  for (double r : {0.1, 0.5}) {
    flip.ratio = r;
    config.attacks.push_back(flip);
  }
  AttackSpec noise;
  noise.kind = AttackKind::noise_inject;
  noise.sigma = 10.0;
  config.attacks.push_back(noise);

  ExperimentResult result = run_experiment(config);
  std::printf("%zu records, %zu failed cells\n\n", result.records.size(),
              result.report.failures.size());
  std::fputs(render_report_markdown(result.report).c_str(), stdout);
  return 0;
}
