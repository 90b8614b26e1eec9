#pragma once

// Bundled dataset fixtures. All are seeded draws, so a (name, n, seed)
// triple pins the exact byte content of the dataset.
//
//   blobs    two-class Gaussian blobs: two small-scale class-informative
//            sensor columns, two class-free wide columns centered far from
//            zero (so replacing or rescaling the source moves a lot of mass),
//            and one weakly class-correlated binary flag.
//   xor      the classic XOR pattern: linearly inseparable, separable by one
//            hidden layer.
//   planted  two class-informative columns planted among six class-free
//            background columns with distinct nonzero means; made for
//            feature-importance experiments.

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "sdgbench/dataset.hpp"
#include "sdgbench/error.hpp"
#include "sdgbench/rng.hpp"

namespace sdgbench {

inline Dataset make_blobs(std::size_t n, RngSeed seed) {
  if (n < 2) throw Error("make_blobs: n must be >= 2");
  std::vector<ColumnSchema> schema{
      {"sensor_a", ColumnKind::continuous, {}},
      {"sensor_b", ColumnKind::continuous, {}},
      {"level_a", ColumnKind::continuous, {}},
      {"level_b", ColumnKind::continuous, {}},
      {"flag", ColumnKind::binary, {"off", "on"}},
      {"label", ColumnKind::binary, {"neg", "pos"}},
  };
  rng::Stream s(rng::derive(seed, "fixture/blobs"));
  std::vector<double> cells;
  cells.reserve(n * schema.size());
  for (std::size_t r = 0; r < n; ++r) {
    const bool pos = s.bernoulli(0.5);
    cells.push_back(s.normal(pos ? 0.26 : -0.26, 0.28));
    cells.push_back(s.normal(pos ? -0.22 : 0.22, 0.30));
    cells.push_back(s.normal(18.5, 4.0));
    cells.push_back(s.normal(-18.5, 4.0));
    cells.push_back(s.bernoulli(pos ? 0.40 : 0.80) ? 1.0 : 0.0);
    cells.push_back(pos ? 1.0 : 0.0);
  }
  return Dataset(std::move(schema), "label", std::move(cells));
}

inline Dataset make_xor(std::size_t n, RngSeed seed) {
  if (n < 2) throw Error("make_xor: n must be >= 2");
  std::vector<ColumnSchema> schema{
      {"x_a", ColumnKind::continuous, {}},
      {"x_b", ColumnKind::continuous, {}},
      {"label", ColumnKind::binary, {"neg", "pos"}},
  };
  rng::Stream s(rng::derive(seed, "fixture/xor"));
  std::vector<double> cells;
  cells.reserve(n * schema.size());
  for (std::size_t r = 0; r < n; ++r) {
    const bool a = s.bernoulli(0.5), b = s.bernoulli(0.5);
    cells.push_back(s.normal(a ? 1.0 : -1.0, 0.3));
    cells.push_back(s.normal(b ? 1.0 : -1.0, 0.3));
    cells.push_back(a != b ? 1.0 : 0.0);
  }
  return Dataset(std::move(schema), "label", std::move(cells));
}

inline Dataset make_planted(std::size_t n, RngSeed seed) {
  if (n < 2) throw Error("make_planted: n must be >= 2");
  std::vector<ColumnSchema> schema{
      {"signal_a", ColumnKind::continuous, {}},
      {"signal_b", ColumnKind::continuous, {}},
      {"bg_1", ColumnKind::continuous, {}},
      {"bg_2", ColumnKind::continuous, {}},
      {"bg_3", ColumnKind::continuous, {}},
      {"bg_4", ColumnKind::continuous, {}},
      {"bg_5", ColumnKind::continuous, {}},
      {"bg_6", ColumnKind::continuous, {}},
      {"label", ColumnKind::binary, {"neg", "pos"}},
  };
  static const double bg_means[] = {2.0, -3.0, 4.0, -5.0, 6.0, -7.0};
  rng::Stream s(rng::derive(seed, "fixture/planted"));
  std::vector<double> cells;
  cells.reserve(n * schema.size());
  for (std::size_t r = 0; r < n; ++r) {
    const bool pos = s.bernoulli(0.5);
    cells.push_back(s.normal(pos ? 3.5 : 1.5, 0.6));
    cells.push_back(s.normal(pos ? -4.5 : -2.5, 0.6));
    for (double m : bg_means) cells.push_back(s.normal(m, 1.0));
    cells.push_back(pos ? 1.0 : 0.0);
  }
  return Dataset(std::move(schema), "label", std::move(cells));
}

inline Dataset make_fixture(std::string_view name, std::size_t n, RngSeed seed) {
  if (name == "blobs") return make_blobs(n, seed);
  if (name == "xor") return make_xor(n, seed);
  if (name == "planted") return make_planted(n, seed);
  throw Error("unknown fixture: '" + std::string(name) + "' (available: blobs, xor, planted)");
}

inline std::vector<std::string> fixture_names() { return {"blobs", "xor", "planted"}; }

}  // namespace sdgbench
