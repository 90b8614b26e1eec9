#pragma once

// Distributional-fidelity metrics between a real and a synthetic sample:
// exact 1-D Wasserstein-1 distance, Kolmogorov-Smirnov statistic, and a
// histogram/count KL divergence with epsilon smoothing.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdgbench/dataset.hpp"
#include "sdgbench/error.hpp"

namespace sdgbench {

// Exact W1 between the empirical distributions of two samples, computed as
// the integral of |inverse-CDF difference| over the merged probability grid.
// Probability breakpoints are compared as exact integer fractions i/n vs j/m.
inline double wasserstein_1d(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw Error("wasserstein_1d: empty sample");
  std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const std::uint64_t n = sa.size(), m = sb.size();
  std::uint64_t cur = 0;  // probability mass consumed so far, in units of 1/(n*m)
  std::size_t i = 0, j = 0;
  double sum = 0.0;
  while (i < n && j < m) {
    std::uint64_t na = (i + 1) * m, nb = (j + 1) * n;
    std::uint64_t next = std::min(na, nb);
    sum += static_cast<double>(next - cur) * std::abs(sa[i] - sb[j]);
    if (na == next) ++i;
    if (nb == next) ++j;
    cur = next;
  }
  return sum / (static_cast<double>(n) * static_cast<double>(m));
}

// sup_x |F_a(x) - F_b(x)| over the empirical CDFs, by a merged sorted scan.
inline double ks_statistic(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw Error("ks_statistic: empty sample");
  std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const double n = static_cast<double>(sa.size()), m = static_cast<double>(sb.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < sa.size() || j < sb.size()) {
    double x;
    if (j >= sb.size() || (i < sa.size() && sa[i] <= sb[j]))
      x = sa[i];
    else
      x = sb[j];
    while (i < sa.size() && sa[i] == x) ++i;
    while (j < sb.size() && sb[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n - static_cast<double>(j) / m));
  }
  return d;
}

namespace detail {

inline std::vector<double> smoothed(const std::vector<double>& counts, double total) {
  const double eps = 1e-10;
  std::vector<double> p(counts.size());
  double z = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    p[i] = counts[i] / total + eps;
    z += p[i];
  }
  for (double& v : p) v /= z;
  return p;
}

inline double kl_of(const std::vector<double>& p, const std::vector<double>& q) {
  double kl = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) kl += p[i] * std::log(p[i] / q[i]);
  return kl;
}

}  // namespace detail

// KL(real || synth) in nats. Continuous columns are discretized into
// `bins` equal-width bins spanning the union of both samples; categorical
// columns use category counts over `categories` buckets. Both histograms get
// epsilon smoothing (1e-10) and renormalization, so empty synth bins are
// penalized but finite.
inline double kl_divergence(std::span<const double> real, std::span<const double> synth,
                            ColumnKind kind, int bins = 20, std::size_t categories = 0) {
  if (real.empty() || synth.empty()) throw Error("kl_divergence: empty sample");
  if (kind == ColumnKind::continuous) {
    if (bins < 2) throw Error("kl_divergence: bins must be at least 2");
    double lo = real[0], hi = real[0];
    for (double v : real) lo = std::min(lo, v), hi = std::max(hi, v);
    for (double v : synth) lo = std::min(lo, v), hi = std::max(hi, v);
    if (lo == hi) return 0.0;  // all mass in one bin on both sides
    const double width = (hi - lo) / bins;
    auto histogram = [&](std::span<const double> s) {
      std::vector<double> h(static_cast<std::size_t>(bins), 0.0);
      for (double v : s) {
        auto b = static_cast<long long>((v - lo) / width);
        b = std::clamp(b, 0ll, static_cast<long long>(bins - 1));
        h[static_cast<std::size_t>(b)] += 1.0;
      }
      return h;
    };
    auto p = detail::smoothed(histogram(real), static_cast<double>(real.size()));
    auto q = detail::smoothed(histogram(synth), static_cast<double>(synth.size()));
    return detail::kl_of(p, q);
  }
  std::size_t k = categories;
  if (k == 0) {
    double mx = 0.0;
    for (double v : real) mx = std::max(mx, v);
    for (double v : synth) mx = std::max(mx, v);
    k = static_cast<std::size_t>(mx) + 1;
  }
  auto counts = [&](std::span<const double> s) {
    std::vector<double> h(k, 0.0);
    for (double v : s) {
      auto idx = static_cast<std::size_t>(v);
      if (v != std::floor(v) || idx >= k)
        throw Error("kl_divergence: categorical value out of range");
      h[idx] += 1.0;
    }
    return h;
  };
  auto p = detail::smoothed(counts(real), static_cast<double>(real.size()));
  auto q = detail::smoothed(counts(synth), static_cast<double>(synth.size()));
  return detail::kl_of(p, q);
}

struct FidelityEntry {
  std::string column;
  std::string metric;  // "wd", "ks" or "kld"
  double value = 0.0;
};

// Per-column metric values plus unweighted per-column means. WD and KS are
// computed for continuous columns; KLD for every column.
struct FidelityReport {
  std::vector<FidelityEntry> entries;
  double wd_mean = 0.0;
  double ks_mean = 0.0;
  double kld_mean = 0.0;
};

inline FidelityReport fidelity_report(const Dataset& real, const Dataset& synth,
                                      int bins = 20) {
  if (real.schema() != synth.schema() || real.target_name() != synth.target_name())
    throw Error("fidelity_report: real and synthetic schemas differ");
  FidelityReport rep;
  double wd_sum = 0, ks_sum = 0, kld_sum = 0;
  std::size_t n_cont = 0;
  for (std::size_t c = 0; c < real.n_cols(); ++c) {
    const auto& col = real.column_schema(c);
    auto rv = real.column(c);
    auto sv = synth.column(c);
    if (!col.categorical()) {
      double wd = wasserstein_1d(rv, sv);
      double ks = ks_statistic(rv, sv);
      rep.entries.push_back({col.name, "wd", wd});
      rep.entries.push_back({col.name, "ks", ks});
      wd_sum += wd;
      ks_sum += ks;
      ++n_cont;
    }
    double kld = kl_divergence(rv, sv, col.kind, bins, col.categories.size());
    rep.entries.push_back({col.name, "kld", kld});
    kld_sum += kld;
  }
  rep.wd_mean = n_cont ? wd_sum / static_cast<double>(n_cont) : 0.0;
  rep.ks_mean = n_cont ? ks_sum / static_cast<double>(n_cont) : 0.0;
  rep.kld_mean = kld_sum / static_cast<double>(real.n_cols());
  return rep;
}

// 100 * (attacked - baseline) / baseline. A baseline within 1e-12 of zero has
// no meaningful relative change; the throwing overload raises Error, the
// `try` variant reports nullopt so aggregation can count it as undefined.
inline std::optional<double> try_percent_change(double baseline, double attacked) {
  if (std::abs(baseline) <= 1e-12) return std::nullopt;
  if (!std::isfinite(baseline) || !std::isfinite(attacked)) return std::nullopt;
  return 100.0 * (attacked - baseline) / baseline;
}

inline double percent_change(double baseline, double attacked) {
  auto v = try_percent_change(baseline, attacked);
  if (!v) throw Error("percent_change: baseline is zero (within 1e-12) or non-finite");
  return *v;
}

}  // namespace sdgbench
