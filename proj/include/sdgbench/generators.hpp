#pragma once

// Native tabular synthetic-data generators. All three families share one
// interface: fit(config, data) -> model, sample(model, m, seed) -> dataset.
//
//   gmm             diagonal-covariance Gaussian mixture fit by EM over the
//                   continuous columns, k-means++ initialization. Categorical
//                   columns get per-component probability tables estimated
//                   from the final responsibilities, so feature/target
//                   structure survives into the synthetic sample.
//   gaussian_copula rank -> normal-scores transform, correlation matrix with
//                   eigenvalue repair, sampling through Cholesky + inverse
//                   empirical marginals. Categorical columns are independent
//                   smoothed frequency tables.
//   histogram       per-column equal-width histograms, fully independent
//                   columns. The weakest family by construction.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "sdgbench/attacks.hpp"
#include "sdgbench/dataset.hpp"
#include "sdgbench/error.hpp"
#include "sdgbench/numeric.hpp"
#include "sdgbench/rng.hpp"

namespace sdgbench {

enum class GeneratorFamily { gmm, gaussian_copula, histogram };

inline std::string_view to_string(GeneratorFamily f) {
  switch (f) {
    case GeneratorFamily::gmm: return "gmm";
    case GeneratorFamily::gaussian_copula: return "gaussian_copula";
    case GeneratorFamily::histogram: return "histogram";
  }
  return "?";
}

inline GeneratorFamily generator_family_from_string(std::string_view s) {
  if (s == "gmm") return GeneratorFamily::gmm;
  if (s == "gaussian_copula") return GeneratorFamily::gaussian_copula;
  if (s == "histogram") return GeneratorFamily::histogram;
  throw Error("unknown generator family: '" + std::string(s) + "'");
}

struct GeneratorConfig {
  GeneratorFamily family = GeneratorFamily::gmm;
  int components = 5;       // gmm mixture size
  int max_epochs = 100;     // gmm EM iteration cap
  double tolerance = 1e-6;  // gmm EM early-stop threshold on LL improvement
  int bins = 20;            // histogram bins
  RngSeed seed;

  void validate() const {
    if (components < 1) throw Error("generator config: components must be >= 1");
    if (max_epochs < 1) throw Error("generator config: max_epochs must be >= 1");
    if (!(tolerance >= 0.0)) throw Error("generator config: tolerance must be >= 0");
    if (bins < 2) throw Error("generator config: bins must be >= 2");
  }
};

struct GmmModel {
  std::vector<ColumnSchema> schema;
  std::string target;
  std::vector<std::size_t> cont_cols, cat_cols;
  std::size_t components = 0;
  std::vector<double> weights;  // K
  Matrix means, variances;      // K x |cont_cols|, variances floored
  // cat_tables[k][t][cat], t indexing cat_cols; add-one smoothed
  std::vector<std::vector<std::vector<double>>> cat_tables;
  // mean continuous log-likelihood after each EM step (index 0 = init)
  std::vector<double> fit_log;
};

struct CopulaModel {
  std::vector<ColumnSchema> schema;
  std::string target;
  std::vector<std::size_t> cont_cols, cat_cols;
  std::vector<std::vector<double>> marginals;  // sorted values per cont col
  Matrix correlation;  // repaired: symmetric, unit diagonal, PD
  Matrix chol;         // lower Cholesky factor of `correlation`
  std::vector<std::vector<double>> cat_tables;  // [t][cat], add-one smoothed
};

struct HistogramModel {
  std::vector<ColumnSchema> schema;
  std::string target;
  std::vector<std::size_t> cont_cols, cat_cols;
  std::vector<std::vector<double>> edges;  // per cont col, bins+1, strictly increasing
  std::vector<std::vector<double>> probs;  // per cont col, bins, sums to 1
  std::vector<std::vector<double>> cat_tables;
};

using GeneratorModel = std::variant<GmmModel, CopulaModel, HistogramModel>;

namespace detail {

inline void split_columns(const Dataset& d, std::vector<std::size_t>& cont,
                          std::vector<std::size_t>& cat) {
  for (std::size_t c = 0; c < d.n_cols(); ++c)
    (d.column_schema(c).categorical() ? cat : cont).push_back(c);
}

inline std::size_t draw_discrete(rng::Stream& s, const std::vector<double>& probs) {
  double u = s.next_double();
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return i;
  }
  return probs.size() - 1;
}

inline std::vector<double> smoothed_counts(const std::vector<double>& counts) {
  double total = 0.0;
  for (double c : counts) total += c;
  std::vector<double> p(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    p[i] = (counts[i] + 1.0) / (total + static_cast<double>(counts.size()));
  return p;
}

inline std::vector<std::vector<double>> global_cat_tables(
    const Dataset& d, const std::vector<std::size_t>& cat_cols) {
  std::vector<std::vector<double>> tables;
  for (std::size_t c : cat_cols) {
    std::vector<double> counts(d.column_schema(c).categories.size(), 0.0);
    for (std::size_t r = 0; r < d.n_rows(); ++r) counts[d.category(r, c)] += 1.0;
    tables.push_back(smoothed_counts(counts));
  }
  return tables;
}

// k-means++ seeding on per-column standardized values so initialization is
// insensitive to column scale
inline std::vector<std::size_t> kmeanspp_rows(const Matrix& x, std::size_t k,
                                              rng::Stream& stream) {
  const std::size_t n = x.rows, c = x.cols;
  std::vector<double> mean(c, 0.0), sd(c, 0.0);
  for (std::size_t j = 0; j < c; ++j) {
    for (std::size_t i = 0; i < n; ++i) mean[j] += x(i, j);
    mean[j] /= static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      double dd = x(i, j) - mean[j];
      sd[j] += dd * dd;
    }
    sd[j] = std::sqrt(sd[j] / static_cast<double>(n));
    if (sd[j] < 1e-12) sd[j] = 1.0;
  }
  auto dist2 = [&](std::size_t i, std::size_t ctr) {
    double s = 0.0;
    for (std::size_t j = 0; j < c; ++j) {
      double dd = (x(i, j) - x(ctr, j)) / sd[j];
      s += dd * dd;
    }
    return s;
  };
  std::vector<std::size_t> centers;
  centers.push_back(stream.index(n));
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  while (centers.size() < k) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      best[i] = std::min(best[i], dist2(i, centers.back()));
      total += best[i];
    }
    std::size_t pick;
    if (total <= 0.0) {
      pick = stream.index(n);
    } else {
      double u = stream.next_double() * total;
      double acc = 0.0;
      pick = n - 1;
      for (std::size_t i = 0; i < n; ++i) {
        acc += best[i];
        if (u < acc) {
          pick = i;
          break;
        }
      }
    }
    centers.push_back(pick);
  }
  return centers;
}

struct EStep {
  Matrix resp;  // n x K, rows sum to 1
  double mean_ll = 0.0;
};

inline EStep gmm_estep(const Matrix& x, const std::vector<double>& weights,
                       const Matrix& means, const Matrix& variances) {
  const std::size_t n = x.rows, c = x.cols, k = weights.size();
  EStep out;
  out.resp = Matrix(n, k);
  std::vector<double> logs(k);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m = 0; m < k; ++m) {
      double lp = std::log(std::max(weights[m], 1e-300));
      for (std::size_t j = 0; j < c; ++j) {
        double v = variances(m, j);
        double dd = x(i, j) - means(m, j);
        lp += -0.5 * std::log(2.0 * 3.14159265358979323846 * v) - dd * dd / (2.0 * v);
      }
      logs[m] = lp;
    }
    double lse = numeric::logsumexp(logs);
    total += lse;
    for (std::size_t m = 0; m < k; ++m) out.resp(i, m) = std::exp(logs[m] - lse);
  }
  out.mean_ll = total / static_cast<double>(n);
  return out;
}

}  // namespace detail

// Fit a diagonal-covariance GMM by EM. The fit log records the mean
// continuous log-likelihood at initialization and after each EM step; it is
// non-decreasing because the variance floor acts as a constrained M-step.
// Stops early when the improvement drops below config.tolerance.
inline GmmModel fit_gmm(const GeneratorConfig& config, const Dataset& d) {
  const std::size_t n = d.n_rows();
  const auto k = static_cast<std::size_t>(config.components);
  if (n < k)
    throw Error("gmm: need at least as many rows as components (" + std::to_string(n) +
                " < " + std::to_string(k) + ")");
  GmmModel model;
  model.schema = d.schema();
  model.target = d.target_name();
  detail::split_columns(d, model.cont_cols, model.cat_cols);
  const std::size_t c = model.cont_cols.size();

  if (c == 0) {
    // no continuous structure to mix over: single component
    model.components = 1;
    model.weights = {1.0};
    model.means = Matrix(1, 0);
    model.variances = Matrix(1, 0);
    auto tables = detail::global_cat_tables(d, model.cat_cols);
    model.cat_tables.push_back(std::move(tables));
    double ll = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t t = 0; t < model.cat_cols.size(); ++t)
        ll += std::log(model.cat_tables[0][t][d.category(r, model.cat_cols[t])]);
    model.fit_log = {ll / static_cast<double>(n)};
    return model;
  }

  Matrix x(n, c);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < c; ++j) x(i, j) = d.cell(i, model.cont_cols[j]);

  // per-column variance floors keep components from collapsing onto a point
  std::vector<double> col_var(c), floor_v(c);
  for (std::size_t j = 0; j < c; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += x(i, j);
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double dd = x(i, j) - mean;
      var += dd * dd;
    }
    col_var[j] = var / static_cast<double>(n);
    floor_v[j] = 1e-6 * (col_var[j] + 1e-12);
  }

  model.components = k;
  model.weights.assign(k, 1.0 / static_cast<double>(k));
  model.means = Matrix(k, c);
  model.variances = Matrix(k, c);
  rng::Stream init_stream(rng::derive(config.seed, "gmm/init"));
  auto centers = detail::kmeanspp_rows(x, k, init_stream);
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t j = 0; j < c; ++j) {
      model.means(m, j) = x(centers[m], j);
      model.variances(m, j) = std::max(col_var[j], floor_v[j]);
    }

  auto step = detail::gmm_estep(x, model.weights, model.means, model.variances);
  model.fit_log = {step.mean_ll};
  for (int epoch = 0; epoch < config.max_epochs; ++epoch) {
    // M-step
    for (std::size_t m = 0; m < k; ++m) {
      double nk = 0.0;
      for (std::size_t i = 0; i < n; ++i) nk += step.resp(i, m);
      if (nk < 1e-12) {
        model.weights[m] = nk / static_cast<double>(n);
        continue;  // empty component keeps its parameters
      }
      model.weights[m] = nk / static_cast<double>(n);
      for (std::size_t j = 0; j < c; ++j) {
        double mu = 0.0;
        for (std::size_t i = 0; i < n; ++i) mu += step.resp(i, m) * x(i, j);
        mu /= nk;
        double var = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          double dd = x(i, j) - mu;
          var += step.resp(i, m) * dd * dd;
        }
        var /= nk;
        model.means(m, j) = mu;
        model.variances(m, j) = std::max(var, floor_v[j]);
      }
    }
    double wsum = 0.0;
    for (double w : model.weights) wsum += w;
    if (std::abs(wsum - 1.0) > 1e-10) throw Error("gmm: mixture weights drifted from 1");
    step = detail::gmm_estep(x, model.weights, model.means, model.variances);
    model.fit_log.push_back(step.mean_ll);
    std::size_t s = model.fit_log.size();
    if (model.fit_log[s - 1] - model.fit_log[s - 2] < config.tolerance) break;
  }

  // per-component categorical tables from final responsibilities
  model.cat_tables.assign(k, {});
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t t = 0; t < model.cat_cols.size(); ++t) {
      std::vector<double> counts(d.column_schema(model.cat_cols[t]).categories.size(), 0.0);
      for (std::size_t i = 0; i < n; ++i)
        counts[d.category(i, model.cat_cols[t])] += step.resp(i, m);
      model.cat_tables[m].push_back(detail::smoothed_counts(counts));
    }
  }
  return model;
}

inline CopulaModel fit_copula(const GeneratorConfig&, const Dataset& d) {
  CopulaModel model;
  model.schema = d.schema();
  model.target = d.target_name();
  detail::split_columns(d, model.cont_cols, model.cat_cols);
  const std::size_t n = d.n_rows(), c = model.cont_cols.size();

  // normal scores via mid-ranks (ties get the average rank), u = (r+0.5)/n
  Matrix z(n, c);
  for (std::size_t j = 0; j < c; ++j) {
    auto col = d.column(model.cont_cols[j]);
    std::vector<std::size_t> order = rng::iota_indices(n);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return col[a] < col[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
      std::size_t jj = i;
      while (jj + 1 < n && col[order[jj + 1]] == col[order[i]]) ++jj;
      double mid = (static_cast<double>(i) + static_cast<double>(jj)) / 2.0;
      for (std::size_t t = i; t <= jj; ++t) ranks[order[t]] = mid;
      i = jj + 1;
    }
    for (std::size_t r = 0; r < n; ++r)
      z(r, j) = numeric::normal_quantile((ranks[r] + 0.5) / static_cast<double>(n));
    std::sort(col.begin(), col.end());
    model.marginals.push_back(std::move(col));
  }

  Matrix corr(c, c);
  std::vector<double> zmean(c, 0.0), zsd(c, 0.0);
  for (std::size_t j = 0; j < c; ++j) {
    for (std::size_t r = 0; r < n; ++r) zmean[j] += z(r, j);
    zmean[j] /= static_cast<double>(n);
    for (std::size_t r = 0; r < n; ++r) {
      double dd = z(r, j) - zmean[j];
      zsd[j] += dd * dd;
    }
    zsd[j] = std::sqrt(zsd[j]);
  }
  for (std::size_t a = 0; a < c; ++a) {
    corr(a, a) = 1.0;
    for (std::size_t b = a + 1; b < c; ++b) {
      double cov = 0.0;
      for (std::size_t r = 0; r < n; ++r) cov += (z(r, a) - zmean[a]) * (z(r, b) - zmean[b]);
      double denom = zsd[a] * zsd[b];
      double rho = denom > 1e-12 ? cov / denom : 0.0;
      corr(a, b) = corr(b, a) = std::clamp(rho, -1.0, 1.0);
    }
  }

  // repair to a positive-definite correlation matrix: clip eigenvalues at
  // 1e-8, reconstruct, then rescale back to a unit diagonal
  if (c > 0) {
    Matrix vecs;
    auto eig = numeric::jacobi_eigen(corr, vecs);
    bool needs_fix = false;
    for (double e : eig)
      if (e < 1e-8) needs_fix = true;
    if (needs_fix) {
      for (double& e : eig) e = std::max(e, 1e-8);
      Matrix fixed(c, c);
      for (std::size_t a = 0; a < c; ++a)
        for (std::size_t b = 0; b < c; ++b) {
          double s = 0.0;
          for (std::size_t t = 0; t < c; ++t) s += vecs(a, t) * eig[t] * vecs(b, t);
          fixed(a, b) = s;
        }
      for (std::size_t a = 0; a < c; ++a)
        for (std::size_t b = 0; b < c; ++b) {
          double da = std::sqrt(fixed(a, a)), db = std::sqrt(fixed(b, b));
          corr(a, b) = a == b ? 1.0 : fixed(a, b) / (da * db);
        }
      for (std::size_t a = 0; a < c; ++a)
        for (std::size_t b = a + 1; b < c; ++b)
          corr(a, b) = corr(b, a) = 0.5 * (corr(a, b) + corr(b, a));
    }
    try {
      model.chol = numeric::cholesky(corr);
    } catch (const Error&) {
      for (std::size_t a = 0; a < c; ++a) corr(a, a) += 1e-8;
      model.chol = numeric::cholesky(corr);
    }
  }
  model.correlation = corr;
  model.cat_tables = detail::global_cat_tables(d, model.cat_cols);
  return model;
}

inline HistogramModel fit_histogram(const GeneratorConfig& config, const Dataset& d) {
  HistogramModel model;
  model.schema = d.schema();
  model.target = d.target_name();
  detail::split_columns(d, model.cont_cols, model.cat_cols);
  const auto bins = static_cast<std::size_t>(config.bins);
  for (std::size_t c : model.cont_cols) {
    auto col = d.column(c);
    double lo = *std::min_element(col.begin(), col.end());
    double hi = *std::max_element(col.begin(), col.end());
    if (hi == lo) hi = lo + 1.0;  // degenerate column: one occupied bin
    std::vector<double> edges(bins + 1);
    for (std::size_t b = 0; b <= bins; ++b)
      edges[b] = lo + (hi - lo) * static_cast<double>(b) / static_cast<double>(bins);
    std::vector<double> counts(bins, 0.0);
    const double width = (hi - lo) / static_cast<double>(bins);
    for (double v : col) {
      auto b = static_cast<long long>((v - lo) / width);
      b = std::clamp(b, 0ll, static_cast<long long>(bins) - 1);
      counts[static_cast<std::size_t>(b)] += 1.0;
    }
    for (double& v : counts) v /= static_cast<double>(col.size());
    model.edges.push_back(std::move(edges));
    model.probs.push_back(std::move(counts));
  }
  model.cat_tables = detail::global_cat_tables(d, model.cat_cols);
  return model;
}

inline GeneratorModel fit(const GeneratorConfig& config, const Dataset& d) {
  config.validate();
  if (d.n_rows() == 0) throw Error("fit: dataset has no rows");
  switch (config.family) {
    case GeneratorFamily::gmm: return fit_gmm(config, d);
    case GeneratorFamily::gaussian_copula: return fit_copula(config, d);
    case GeneratorFamily::histogram: return fit_histogram(config, d);
  }
  throw Error("fit: unknown generator family");
}

namespace detail {

template <typename Model>
Dataset assemble_sample(const Model& model, std::size_t m,
                        const std::vector<std::vector<double>>& cont_cells,
                        const std::vector<std::vector<double>>& cat_cells) {
  std::vector<double> cells(m * model.schema.size(), 0.0);
  for (std::size_t j = 0; j < model.cont_cols.size(); ++j)
    for (std::size_t r = 0; r < m; ++r)
      cells[r * model.schema.size() + model.cont_cols[j]] = cont_cells[j][r];
  for (std::size_t t = 0; t < model.cat_cols.size(); ++t)
    for (std::size_t r = 0; r < m; ++r)
      cells[r * model.schema.size() + model.cat_cols[t]] = cat_cells[t][r];
  return Dataset(model.schema, model.target, std::move(cells));
}

}  // namespace detail

inline Dataset sample_gmm(const GmmModel& model, std::size_t m, RngSeed seed) {
  rng::Stream stream(rng::derive(seed, "sample/gmm"));
  const std::size_t c = model.cont_cols.size(), t_n = model.cat_cols.size();
  std::vector<std::vector<double>> cont(c, std::vector<double>(m));
  std::vector<std::vector<double>> cat(t_n, std::vector<double>(m));
  for (std::size_t r = 0; r < m; ++r) {
    std::size_t comp = detail::draw_discrete(stream, model.weights);
    for (std::size_t j = 0; j < c; ++j)
      cont[j][r] = stream.normal(model.means(comp, j), std::sqrt(model.variances(comp, j)));
    for (std::size_t t = 0; t < t_n; ++t)
      cat[t][r] = static_cast<double>(detail::draw_discrete(stream, model.cat_tables[comp][t]));
  }
  return detail::assemble_sample(model, m, cont, cat);
}

inline Dataset sample_copula(const CopulaModel& model, std::size_t m, RngSeed seed) {
  rng::Stream stream(rng::derive(seed, "sample/gaussian_copula"));
  const std::size_t c = model.cont_cols.size(), t_n = model.cat_cols.size();
  std::vector<std::vector<double>> cont(c, std::vector<double>(m));
  std::vector<std::vector<double>> cat(t_n, std::vector<double>(m));
  std::vector<double> g(c), z(c);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < c; ++j) g[j] = stream.normal();
    for (std::size_t j = 0; j < c; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k <= j; ++k) s += model.chol(j, k) * g[k];
      z[j] = s;
    }
    for (std::size_t j = 0; j < c; ++j) {
      double u = numeric::normal_cdf(z[j]);
      const auto& marg = model.marginals[j];
      double pos = u * static_cast<double>(marg.size() - 1);
      auto i0 = static_cast<std::size_t>(pos);
      if (i0 >= marg.size() - 1) i0 = marg.size() - 2;
      double frac = pos - static_cast<double>(i0);
      cont[j][r] = marg.size() == 1 ? marg[0] : marg[i0] + (marg[i0 + 1] - marg[i0]) * frac;
    }
    for (std::size_t t = 0; t < t_n; ++t)
      cat[t][r] = static_cast<double>(detail::draw_discrete(stream, model.cat_tables[t]));
  }
  return detail::assemble_sample(model, m, cont, cat);
}

inline Dataset sample_histogram(const HistogramModel& model, std::size_t m, RngSeed seed) {
  rng::Stream stream(rng::derive(seed, "sample/histogram"));
  const std::size_t c = model.cont_cols.size(), t_n = model.cat_cols.size();
  std::vector<std::vector<double>> cont(c, std::vector<double>(m));
  std::vector<std::vector<double>> cat(t_n, std::vector<double>(m));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < c; ++j) {
      std::size_t b = detail::draw_discrete(stream, model.probs[j]);
      cont[j][r] = stream.uniform(model.edges[j][b], model.edges[j][b + 1]);
    }
    for (std::size_t t = 0; t < t_n; ++t)
      cat[t][r] = static_cast<double>(detail::draw_discrete(stream, model.cat_tables[t]));
  }
  return detail::assemble_sample(model, m, cont, cat);
}

inline Dataset sample(const GeneratorModel& model, std::size_t m, RngSeed seed) {
  if (m == 0) throw Error("sample: m must be >= 1");
  return std::visit(
      [&](const auto& concrete) -> Dataset {
        using T = std::decay_t<decltype(concrete)>;
        if constexpr (std::is_same_v<T, GmmModel>)
          return sample_gmm(concrete, m, seed);
        else if constexpr (std::is_same_v<T, CopulaModel>)
          return sample_copula(concrete, m, seed);
        else
          return sample_histogram(concrete, m, seed);
      },
      model);
}

// Mean per-row log-likelihood of d under the mixture: the continuous density
// and the per-component categorical probabilities factor inside the same
// log-sum-exp. With one component this is the continuous log density plus
// the log-probability of the categorical cells.
inline double log_likelihood(const GmmModel& model, const Dataset& d) {
  if (model.schema != d.schema() || model.target != d.target_name())
    throw Error("log_likelihood: dataset schema does not match the model");
  const std::size_t n = d.n_rows();
  if (n == 0) throw Error("log_likelihood: dataset has no rows");
  const std::size_t k = model.weights.size();
  std::vector<double> logs(k);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m = 0; m < k; ++m) {
      double lp = std::log(std::max(model.weights[m], 1e-300));
      for (std::size_t j = 0; j < model.cont_cols.size(); ++j) {
        double v = model.variances(m, j);
        double dd = d.cell(i, model.cont_cols[j]) - model.means(m, j);
        lp += -0.5 * std::log(2.0 * 3.14159265358979323846 * v) - dd * dd / (2.0 * v);
      }
      for (std::size_t t = 0; t < model.cat_cols.size(); ++t)
        lp += std::log(model.cat_tables[m][t][d.category(i, model.cat_cols[t])]);
      logs[m] = lp;
    }
    total += numeric::logsumexp(logs);
  }
  return total / static_cast<double>(n);
}

// Map an in-processing attack onto the generator configuration it degrades.
inline GeneratorConfig degraded_config(GeneratorConfig base, const AttackSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case AttackKind::low_epochs:
      base.max_epochs = spec.epochs;
      return base;
    case AttackKind::oversimplified_sdg:
      base.family = GeneratorFamily::gmm;
      base.components = spec.components;
      return base;
    default:
      throw Error("degraded_config: not an in-processing attack");
  }
}

}  // namespace sdgbench
