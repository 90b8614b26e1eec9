#pragma once

// Quality-degradation attacks on a synthetic-data pipeline, grouped by the
// stage they tamper with:
//   - upstream (real training data): label_flip, feature_importance,
//     incorrect_source
//   - in-processing (generator config): low_epochs, oversimplified_sdg
//     (applied via degraded_config in generators.hpp, not here)
//   - post-generation (synthetic output): scale_output, noise_inject
//
// Everything randomized is keyed off AttackSpec::seed. The tampered-row
// budget for ratio attacks is exactly floor(ratio * n).

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdgbench/dataset.hpp"
#include "sdgbench/error.hpp"
#include "sdgbench/importance.hpp"
#include "sdgbench/rng.hpp"

namespace sdgbench {

enum class AttackKind {
  none,
  label_flip,
  feature_importance,
  incorrect_source,
  low_epochs,
  oversimplified_sdg,
  scale_output,
  noise_inject,
};

inline std::string_view to_string(AttackKind k) {
  switch (k) {
    case AttackKind::none: return "none";
    case AttackKind::label_flip: return "label_flip";
    case AttackKind::feature_importance: return "feature_importance";
    case AttackKind::incorrect_source: return "incorrect_source";
    case AttackKind::low_epochs: return "low_epochs";
    case AttackKind::oversimplified_sdg: return "oversimplified_sdg";
    case AttackKind::scale_output: return "scale_output";
    case AttackKind::noise_inject: return "noise_inject";
  }
  return "?";
}

inline AttackKind attack_kind_from_string(std::string_view s) {
  for (AttackKind k :
       {AttackKind::none, AttackKind::label_flip, AttackKind::feature_importance,
        AttackKind::incorrect_source, AttackKind::low_epochs, AttackKind::oversimplified_sdg,
        AttackKind::scale_output, AttackKind::noise_inject})
    if (to_string(k) == s) return k;
  throw Error("unknown attack kind: '" + std::string(s) + "'");
}

enum class PipelineStage { real_input, generator_config, synthetic_output };

inline std::string_view to_string(PipelineStage s) {
  switch (s) {
    case PipelineStage::real_input: return "real_input";
    case PipelineStage::generator_config: return "generator_config";
    case PipelineStage::synthetic_output: return "synthetic_output";
  }
  return "?";
}

inline PipelineStage stage_of(AttackKind k) {
  switch (k) {
    case AttackKind::none:
    case AttackKind::label_flip:
    case AttackKind::feature_importance:
    case AttackKind::incorrect_source:
      return PipelineStage::real_input;
    case AttackKind::low_epochs:
    case AttackKind::oversimplified_sdg:
      return PipelineStage::generator_config;
    case AttackKind::scale_output:
    case AttackKind::noise_inject:
      return PipelineStage::synthetic_output;
  }
  return PipelineStage::real_input;
}

inline bool uses_ratio(AttackKind k) {
  return k == AttackKind::label_flip || k == AttackKind::feature_importance;
}

struct AttackSpec {
  AttackKind kind = AttackKind::none;
  double ratio = 0.0;      // tampering ratio for label_flip / feature_importance
  double scale = 2.0;      // multiplier for scale_output
  double sigma = 10.0;     // noise sd for noise_inject
  int epochs = 10;         // training budget for low_epochs
  int components = 10;     // mixture size for oversimplified_sdg
  RngSeed seed;
  // optional cap on the tampering ratio; NaN = unconfigured
  double budget = std::numeric_limits<double>::quiet_NaN();

  void validate() const {
    if (uses_ratio(kind)) {
      if (!(ratio >= 0.0 && ratio <= 1.0))
        throw Error("attack ratio must be in [0, 1]");
      if (!std::isnan(budget) && ratio > budget + 1e-12)
        throw Error("attack ratio exceeds the configured budget");
    }
    if (kind == AttackKind::scale_output && (!std::isfinite(scale) || scale == 0.0))
      throw Error("scale_output requires a finite non-zero scale");
    if (kind == AttackKind::noise_inject && !(sigma >= 0.0) )
      throw Error("noise_inject requires sigma >= 0");
    if (kind == AttackKind::low_epochs && epochs < 1)
      throw Error("low_epochs requires at least 1 epoch");
    if (kind == AttackKind::oversimplified_sdg && components < 1)
      throw Error("oversimplified_sdg requires at least 1 component");
  }
};

// Sorted row indices selected for tampering.
struct FlipIndexSet {
  std::vector<std::size_t> indices;
};

// Uniform draw of exactly floor(ratio * n) distinct rows, via a partial
// Fisher-Yates shuffle. The selected set for a smaller ratio under the same
// seed is a prefix of the same permutation, hence nested.
inline FlipIndexSet select_flip_indices(std::size_t n, double ratio, RngSeed seed) {
  if (!(ratio >= 0.0 && ratio <= 1.0)) throw Error("attack ratio must be in [0, 1]");
  auto k = static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n)));
  rng::Stream stream(rng::derive(seed, "select_flip_indices"));
  auto idx = rng::iota_indices(n);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + stream.index(n - i);
    std::swap(idx[i], idx[j]);
  }
  FlipIndexSet out;
  out.indices.assign(idx.begin(), idx.begin() + k);
  std::sort(out.indices.begin(), out.indices.end());
  return out;
}

// Label-flipping attack: reassigns the target label of the selected rows.
// Binary targets are inverted; multiclass targets draw uniformly from the
// other categories with a per-row stream, so the outcome per row does not
// depend on iteration order.
inline Dataset label_flip(const Dataset& d, double ratio, RngSeed seed) {
  const auto& target = d.column_schema(d.target_index());
  auto flips = select_flip_indices(d.n_rows(), ratio, seed);
  std::vector<double> cells = d.cells();
  const std::size_t tc = d.target_index();
  const std::size_t n_cats = target.categories.size();
  const std::uint64_t row_key = rng::derive(seed, "label_flip/reassign");
  for (std::size_t r : flips.indices) {
    auto old_cat = static_cast<std::uint64_t>(cells[r * d.n_cols() + tc]);
    std::uint64_t new_cat;
    if (n_cats == 2) {
      new_cat = 1 - old_cat;
    } else {
      rng::Stream row_stream(rng::combine(row_key, r));
      std::uint64_t pick = row_stream.below(n_cats - 1);
      new_cat = pick >= old_cat ? pick + 1 : pick;
    }
    cells[r * d.n_cols() + tc] = static_cast<double>(new_cat);
  }
  return d.with_cells(std::move(cells));
}

namespace detail {

inline std::size_t modal_category(const Dataset& d, std::size_t c) {
  std::vector<std::size_t> counts(d.column_schema(c).categories.size(), 0);
  for (std::size_t r = 0; r < d.n_rows(); ++r) ++counts[d.category(r, c)];
  std::size_t best = 0;
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] > counts[best]) best = i;  // tie keeps the lowest index
  return best;
}

}  // namespace detail

// Feature-importance attack: keeps only the ceil(ratio * n_features) most
// important feature columns and suppresses the rest, replacing continuous
// values with 0 and categorical values with the column's modal category
// (or dropping the columns entirely when drop_suppressed is set). The target
// column is never touched.
inline Dataset feature_importance_attack(const Dataset& d, double ratio,
                                         const ImportanceRanking& ranking,
                                         bool drop_suppressed = false) {
  if (!(ratio > 0.0 && ratio <= 1.0))
    throw Error("feature_importance_attack requires ratio in (0, 1]");
  ranking.validate_for(d);
  const std::size_t n_features = d.n_cols() - 1;
  auto keep = static_cast<std::size_t>(
      std::ceil(ratio * static_cast<double>(n_features)));
  keep = std::min(keep, n_features);
  std::vector<bool> retained(d.n_cols(), false);
  retained[d.target_index()] = true;
  for (std::size_t i = 0; i < keep; ++i) retained[d.find_column(ranking.entries[i].first)] = true;
  if (!drop_suppressed) {
    std::vector<double> fill(d.n_cols(), 0.0);
    for (std::size_t c = 0; c < d.n_cols(); ++c)
      if (!retained[c] && d.column_schema(c).categorical())
        fill[c] = static_cast<double>(detail::modal_category(d, c));
    std::vector<double> cells = d.cells();
    for (std::size_t r = 0; r < d.n_rows(); ++r)
      for (std::size_t c = 0; c < d.n_cols(); ++c)
        if (!retained[c]) cells[r * d.n_cols() + c] = fill[c];
    return d.with_cells(std::move(cells));
  }
  std::vector<ColumnSchema> schema;
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < d.n_cols(); ++c)
    if (retained[c]) {
      schema.push_back(d.column_schema(c));
      cols.push_back(c);
    }
  std::vector<double> cells;
  cells.reserve(d.n_rows() * cols.size());
  for (std::size_t r = 0; r < d.n_rows(); ++r)
    for (std::size_t c : cols) cells.push_back(d.cell(r, c));
  return Dataset(std::move(schema), d.target_name(), std::move(cells));
}

// Incorrect-source attack: replaces the training data wholesale with a
// schema-shaped sample from the wrong distribution - continuous cells are
// Uniform(-10, 10) plus N(0, 0.1^2) observation noise, categorical cells are
// uniform over the categories. Each cell draws from its own (seed, row,
// column) stream.
inline Dataset incorrect_source(const std::vector<ColumnSchema>& schema,
                                const std::string& target, std::size_t n, RngSeed seed) {
  validate_schema(schema);
  if (n == 0) throw Error("incorrect_source requires n >= 1");
  const std::uint64_t base = rng::derive(seed, "incorrect_source");
  std::vector<double> cells;
  cells.reserve(n * schema.size());
  for (std::size_t r = 0; r < n; ++r) {
    const std::uint64_t row_key = rng::combine(base, r);
    for (std::size_t c = 0; c < schema.size(); ++c) {
      rng::Stream cell_stream(rng::combine(row_key, c));
      if (schema[c].categorical())
        cells.push_back(
            static_cast<double>(cell_stream.below(schema[c].categories.size())));
      else
        cells.push_back(cell_stream.uniform(-10.0, 10.0) + 0.1 * cell_stream.normal());
    }
  }
  return Dataset(schema, target, std::move(cells));
}

// Post-generation distribution distortion: multiplies every continuous cell
// of the synthetic output by s. Categorical columns and the target are
// untouched.
inline Dataset scale_output(const Dataset& synth, double s) {
  if (!std::isfinite(s) || s == 0.0)
    throw Error("scale_output requires a finite non-zero scale");
  std::vector<double> cells = synth.cells();
  for (std::size_t c = 0; c < synth.n_cols(); ++c) {
    if (synth.column_schema(c).categorical()) continue;
    for (std::size_t r = 0; r < synth.n_rows(); ++r) cells[r * synth.n_cols() + c] *= s;
  }
  return synth.with_cells(std::move(cells));
}

namespace detail {

// content fingerprint of a row: noise must travel with the row under
// permutation, so it is keyed by cell bits rather than row position
inline std::uint64_t row_fingerprint(std::span<const double> row) {
  std::uint64_t h = 0x243f6a8885a308d3ull;
  for (double v : row) h = rng::combine(h, std::bit_cast<std::uint64_t>(v));
  return h;
}

}  // namespace detail

// Post-generation noise injection: adds N(0, sigma^2) to every continuous
// cell. The per-cell noise is keyed by (seed, fingerprint of the pre-attack
// row, column index), so permuting rows permutes the noise with them.
inline Dataset noise_inject(const Dataset& synth, double sigma, RngSeed seed) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma))
    throw Error("noise_inject requires finite sigma >= 0");
  if (sigma == 0.0) return synth;
  const std::uint64_t base = rng::derive(seed, "noise_inject");
  std::vector<double> cells = synth.cells();
  for (std::size_t r = 0; r < synth.n_rows(); ++r) {
    const std::uint64_t row_key = rng::combine(base, detail::row_fingerprint(synth.row(r)));
    for (std::size_t c = 0; c < synth.n_cols(); ++c) {
      if (synth.column_schema(c).categorical()) continue;
      rng::Stream cell_stream(rng::combine(row_key, c));
      cells[r * synth.n_cols() + c] += sigma * cell_stream.normal();
    }
  }
  return synth.with_cells(std::move(cells));
}

struct AttackedData {
  Dataset data;
  PipelineStage stage;
};

// Stage-dispatching entry point. Upstream kinds need `real`, post-generation
// kinds need `synth`; generator-config kinds have no data to transform here
// and must go through degraded_config instead.
inline AttackedData apply_attack(const AttackSpec& spec, const Dataset* real,
                                 const Dataset* synth,
                                 const ImportanceRanking* ranking = nullptr) {
  spec.validate();
  auto need = [](const Dataset* d, const char* what) -> const Dataset& {
    if (!d) throw Error(std::string("apply_attack: this attack requires ") + what);
    return *d;
  };
  switch (spec.kind) {
    case AttackKind::none:
      return {need(real, "the real dataset"), PipelineStage::real_input};
    case AttackKind::label_flip:
      return {label_flip(need(real, "the real dataset"), spec.ratio, spec.seed),
              PipelineStage::real_input};
    case AttackKind::feature_importance:
      if (!ranking) throw Error("apply_attack: feature_importance requires a ranking");
      return {feature_importance_attack(need(real, "the real dataset"), spec.ratio, *ranking),
              PipelineStage::real_input};
    case AttackKind::incorrect_source: {
      const Dataset& r = need(real, "the real dataset");
      return {incorrect_source(r.schema(), r.target_name(), r.n_rows(), spec.seed),
              PipelineStage::real_input};
    }
    case AttackKind::scale_output:
      return {scale_output(need(synth, "the synthetic dataset"), spec.scale),
              PipelineStage::synthetic_output};
    case AttackKind::noise_inject:
      return {noise_inject(need(synth, "the synthetic dataset"), spec.sigma, spec.seed),
              PipelineStage::synthetic_output};
    case AttackKind::low_epochs:
    case AttackKind::oversimplified_sdg:
      throw Error("apply_attack: generator-config attacks are applied via degraded_config");
  }
  throw Error("apply_attack: unknown attack kind");
}

}  // namespace sdgbench
