#pragma once

// Downstream-utility classifiers, written against encoded feature matrices:
// multinomial logistic regression and a one-hidden-layer tanh MLP trained by
// full-batch gradient descent (with a descent guard that halves the learning
// rate whenever a step would increase the loss), and a random forest of CART
// trees with Gini splits. The TSTR protocol trains each of them on synthetic
// data and reports accuracy on a held-out real test set.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sdgbench/dataset.hpp"
#include "sdgbench/error.hpp"
#include "sdgbench/importance.hpp"
#include "sdgbench/numeric.hpp"
#include "sdgbench/rng.hpp"

namespace sdgbench {

// Feature encoding fitted on a training set: continuous columns are
// standardized with the *training* mean/sd, categorical columns are one-hot.
// The target column is label-encoded separately.
struct FeatureEncoding {
  struct Column {
    std::size_t source = 0;  // column index in the source schema
    bool is_continuous = true;
    std::size_t offset = 0;  // first encoded slot
    std::size_t width = 1;
    double mean = 0.0;
    double sd = 1.0;  // 0 marks a constant column, encoded as 0
  };
  std::vector<Column> columns;
  std::size_t width = 0;
  std::vector<ColumnSchema> schema;  // full source schema
  std::string target;
  std::vector<std::string> classes;  // target categories
};

struct EncodedData {
  Matrix x;                    // n x width
  std::vector<std::size_t> y;  // target category indices
};

inline FeatureEncoding fit_encoding(const Dataset& d) {
  FeatureEncoding enc;
  enc.schema = d.schema();
  enc.target = d.target_name();
  enc.classes = d.column_schema(d.target_index()).categories;
  for (std::size_t c = 0; c < d.n_cols(); ++c) {
    if (c == d.target_index()) continue;
    const auto& col = d.column_schema(c);
    FeatureEncoding::Column e;
    e.source = c;
    e.offset = enc.width;
    if (col.categorical()) {
      e.is_continuous = false;
      e.width = col.categories.size();
    } else {
      e.is_continuous = true;
      e.width = 1;
      double mean = 0.0;
      for (std::size_t r = 0; r < d.n_rows(); ++r) mean += d.cell(r, c);
      mean /= static_cast<double>(d.n_rows());
      double var = 0.0;
      for (std::size_t r = 0; r < d.n_rows(); ++r) {
        double dd = d.cell(r, c) - mean;
        var += dd * dd;
      }
      var /= static_cast<double>(d.n_rows());
      e.mean = mean;
      e.sd = var < 1e-24 ? 0.0 : std::sqrt(var);
    }
    enc.width += e.width;
    enc.columns.push_back(e);
  }
  return enc;
}

inline EncodedData apply_encoding(const FeatureEncoding& enc, const Dataset& d) {
  if (d.schema() != enc.schema || d.target_name() != enc.target)
    throw Error("apply_encoding: dataset schema does not match the encoding");
  EncodedData out;
  out.x = Matrix(d.n_rows(), enc.width);
  out.y.resize(d.n_rows());
  for (std::size_t r = 0; r < d.n_rows(); ++r) {
    for (const auto& e : enc.columns) {
      if (e.is_continuous) {
        double v = d.cell(r, e.source);
        out.x(r, e.offset) = e.sd > 0.0 ? (v - e.mean) / e.sd : 0.0;
      } else {
        out.x(r, e.offset + d.category(r, e.source)) = 1.0;
      }
    }
    out.y[r] = d.category(r, d.target_index());
  }
  return out;
}

enum class ClassifierKind { logreg, random_forest, mlp };

inline std::string_view to_string(ClassifierKind k) {
  switch (k) {
    case ClassifierKind::logreg: return "logreg";
    case ClassifierKind::random_forest: return "random_forest";
    case ClassifierKind::mlp: return "mlp";
  }
  return "?";
}

struct ClassifierConfig {
  ClassifierKind kind = ClassifierKind::logreg;
  double learning_rate = 0.1;  // logreg / mlp
  int iterations = 500;        // full-batch gradient steps
  double l2 = 1e-4;            // weight decay (biases excluded)
  int hidden_units = 32;       // mlp
  int trees = 100;             // forest size
  int max_depth = 0;           // forest depth cap; 0 = unlimited
  RngSeed seed;

  void validate() const {
    if (kind != ClassifierKind::random_forest) {
      if (!(learning_rate > 0.0)) throw Error("classifier config: learning_rate must be > 0");
      if (iterations < 1) throw Error("classifier config: iterations must be >= 1");
      if (!(l2 >= 0.0)) throw Error("classifier config: l2 must be >= 0");
    }
    if (kind == ClassifierKind::mlp && hidden_units < 1)
      throw Error("classifier config: hidden_units must be >= 1");
    if (kind == ClassifierKind::random_forest) {
      if (trees < 1) throw Error("classifier config: trees must be >= 1");
      if (max_depth < 0) throw Error("classifier config: max_depth must be >= 0");
    }
  }
};

inline ClassifierConfig logreg_defaults(RngSeed seed = {}) {
  ClassifierConfig c;
  c.kind = ClassifierKind::logreg;
  c.learning_rate = 0.1;
  c.iterations = 500;
  c.l2 = 1e-4;
  c.seed = seed;
  return c;
}

inline ClassifierConfig mlp_defaults(RngSeed seed = {}) {
  ClassifierConfig c;
  c.kind = ClassifierKind::mlp;
  c.learning_rate = 0.05;
  c.iterations = 800;
  c.l2 = 1e-4;
  c.hidden_units = 32;
  c.seed = seed;
  return c;
}

inline ClassifierConfig forest_defaults(RngSeed seed = {}) {
  ClassifierConfig c;
  c.kind = ClassifierKind::random_forest;
  c.trees = 100;
  c.max_depth = 12;
  c.seed = seed;
  return c;
}

// ---- gradient-trained models (flat parameter vectors) ----

struct LinearShape {
  std::size_t classes = 0, features = 0;
  std::size_t size() const { return classes * features + classes; }
  std::size_t w(std::size_t c, std::size_t f) const { return c * features + f; }
  std::size_t b(std::size_t c) const { return classes * features + c; }
};

struct MlpShape {
  std::size_t features = 0, hidden = 0, classes = 0;
  std::size_t size() const { return hidden * features + hidden + classes * hidden + classes; }
  std::size_t w1(std::size_t h, std::size_t f) const { return h * features + f; }
  std::size_t b1(std::size_t h) const { return hidden * features + h; }
  std::size_t w2(std::size_t c, std::size_t h) const {
    return hidden * features + hidden + c * hidden + h;
  }
  std::size_t b2(std::size_t c) const {
    return hidden * features + hidden + classes * hidden + c;
  }
};

namespace detail {

// softmax cross-entropy from raw scores; fills probs in place
inline double softmax_ce(std::vector<double>& scores, std::size_t label) {
  double mx = scores[0];
  for (double s : scores) mx = std::max(mx, s);
  double z = 0.0;
  for (double s : scores) z += std::exp(s - mx);
  double log_z = mx + std::log(z);
  double loss = log_z - scores[label];
  for (double& s : scores) s = std::exp(s - log_z);
  return loss;
}

}  // namespace detail

// Mean cross-entropy loss of multinomial logistic regression plus L2 weight
// penalty; writes the analytic gradient into *grad when non-null.
inline double logreg_loss_grad(const Matrix& x, const std::vector<std::size_t>& y,
                               const LinearShape& shape, const std::vector<double>& p,
                               double l2, std::vector<double>* grad) {
  const std::size_t n = x.rows, f = shape.features, k = shape.classes;
  if (grad) grad->assign(shape.size(), 0.0);
  double loss = 0.0;
  std::vector<double> scores(k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < k; ++c) {
      double s = p[shape.b(c)];
      for (std::size_t j = 0; j < f; ++j) s += p[shape.w(c, j)] * x(i, j);
      scores[c] = s;
    }
    loss += detail::softmax_ce(scores, y[i]);
    if (grad) {
      for (std::size_t c = 0; c < k; ++c) {
        double g = (scores[c] - (c == y[i] ? 1.0 : 0.0)) / static_cast<double>(n);
        (*grad)[shape.b(c)] += g;
        for (std::size_t j = 0; j < f; ++j) (*grad)[shape.w(c, j)] += g * x(i, j);
      }
    }
  }
  loss /= static_cast<double>(n);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t j = 0; j < f; ++j) {
      loss += 0.5 * l2 * p[shape.w(c, j)] * p[shape.w(c, j)];
      if (grad) (*grad)[shape.w(c, j)] += l2 * p[shape.w(c, j)];
    }
  return loss;
}

// Same contract for the one-hidden-layer tanh MLP.
inline double mlp_loss_grad(const Matrix& x, const std::vector<std::size_t>& y,
                            const MlpShape& shape, const std::vector<double>& p, double l2,
                            std::vector<double>* grad) {
  const std::size_t n = x.rows, f = shape.features, h = shape.hidden, k = shape.classes;
  if (grad) grad->assign(shape.size(), 0.0);
  double loss = 0.0;
  std::vector<double> act(h), scores(k), dscore(k), dact(h);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < h; ++a) {
      double s = p[shape.b1(a)];
      for (std::size_t j = 0; j < f; ++j) s += p[shape.w1(a, j)] * x(i, j);
      act[a] = std::tanh(s);
    }
    for (std::size_t c = 0; c < k; ++c) {
      double s = p[shape.b2(c)];
      for (std::size_t a = 0; a < h; ++a) s += p[shape.w2(c, a)] * act[a];
      scores[c] = s;
    }
    loss += detail::softmax_ce(scores, y[i]);
    if (grad) {
      for (std::size_t c = 0; c < k; ++c)
        dscore[c] = (scores[c] - (c == y[i] ? 1.0 : 0.0)) / static_cast<double>(n);
      for (std::size_t a = 0; a < h; ++a) {
        double s = 0.0;
        for (std::size_t c = 0; c < k; ++c) s += dscore[c] * p[shape.w2(c, a)];
        dact[a] = s * (1.0 - act[a] * act[a]);
      }
      for (std::size_t c = 0; c < k; ++c) {
        (*grad)[shape.b2(c)] += dscore[c];
        for (std::size_t a = 0; a < h; ++a) (*grad)[shape.w2(c, a)] += dscore[c] * act[a];
      }
      for (std::size_t a = 0; a < h; ++a) {
        (*grad)[shape.b1(a)] += dact[a];
        for (std::size_t j = 0; j < f; ++j) (*grad)[shape.w1(a, j)] += dact[a] * x(i, j);
      }
    }
  }
  loss /= static_cast<double>(n);
  auto reg = [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      loss += 0.5 * l2 * p[t] * p[t];
      if (grad) (*grad)[t] += l2 * p[t];
    }
  };
  reg(0, h * f);                          // w1
  reg(h * f + h, h * f + h + k * h);      // w2
  return loss;
}

namespace detail {

// Full-batch gradient descent with a monotone-loss guard: a step that would
// increase the loss (beyond 1e-12) halves the learning rate and retries, so
// the recorded loss sequence never ascends.
template <typename LossGradFn>
std::vector<double> descend(std::vector<double> params, LossGradFn&& loss_grad, double lr,
                            int iterations) {
  std::vector<double> grad, candidate;
  double loss = loss_grad(params, &grad);
  for (int it = 0; it < iterations; ++it) {
    while (true) {
      candidate = params;
      for (std::size_t t = 0; t < candidate.size(); ++t) candidate[t] -= lr * grad[t];
      double cand_loss = loss_grad(candidate, nullptr);
      if (cand_loss <= loss + 1e-12) {
        params = std::move(candidate);
        loss = cand_loss;
        break;
      }
      lr *= 0.5;
      if (lr < 1e-16) return params;  // no admissible step remains
    }
    if (it + 1 < iterations) loss = loss_grad(params, &grad);
  }
  return params;
}

}  // namespace detail

// ---- random forest ----

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1, right = -1;
  int label = -1;
};

struct DecisionTree {
  std::vector<TreeNode> nodes;  // node 0 is the root

  std::size_t predict(const Matrix& x, std::size_t row) const {
    int at = 0;
    while (nodes[at].feature >= 0)
      at = x(row, static_cast<std::size_t>(nodes[at].feature)) <= nodes[at].threshold
               ? nodes[at].left
               : nodes[at].right;
    return static_cast<std::size_t>(nodes[at].label);
  }
};

namespace detail {

inline double gini(const std::vector<double>& counts, double total) {
  if (total <= 0.0) return 0.0;
  double g = 1.0;
  for (double c : counts) {
    double p = c / total;
    g -= p * p;
  }
  return g;
}

struct TreeBuilder {
  const Matrix& x;
  const std::vector<std::size_t>& y;
  std::size_t classes;
  std::size_t mtry;
  int max_depth;  // 0 = unlimited
  rng::Stream& stream;
  double n_total;
  std::vector<double>& importance;  // per encoded feature
  DecisionTree tree;

  int leaf(const std::vector<double>& counts) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < counts.size(); ++c)
      if (counts[c] > counts[best]) best = c;
    TreeNode node;
    node.label = static_cast<int>(best);
    tree.nodes.push_back(node);
    return static_cast<int>(tree.nodes.size() - 1);
  }

  int build(std::vector<std::size_t>& rows, int depth) {
    std::vector<double> counts(classes, 0.0);
    for (std::size_t r : rows) counts[y[r]] += 1.0;
    const double n_node = static_cast<double>(rows.size());
    const double g_node = gini(counts, n_node);
    if (g_node <= 0.0 || rows.size() < 2 || (max_depth > 0 && depth >= max_depth))
      return leaf(counts);

    // sample mtry distinct candidate features, scanned in ascending order
    std::vector<std::size_t> features = rng::iota_indices(x.cols);
    for (std::size_t i = 0; i < mtry; ++i) {
      std::size_t j = i + stream.index(x.cols - i);
      std::swap(features[i], features[j]);
    }
    features.resize(mtry);
    std::sort(features.begin(), features.end());

    double best_score = g_node - 1e-12;
    std::size_t best_feature = 0;
    double best_threshold = 0.0;
    bool found = false;
    std::vector<std::pair<double, std::size_t>> vals;
    std::vector<double> left_counts(classes);
    for (std::size_t f : features) {
      vals.clear();
      for (std::size_t r : rows) vals.emplace_back(x(r, f), y[r]);
      std::sort(vals.begin(), vals.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      std::fill(left_counts.begin(), left_counts.end(), 0.0);
      for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
        left_counts[vals[i].second] += 1.0;
        if (vals[i].first == vals[i + 1].first) continue;
        const double nl = static_cast<double>(i + 1), nr = n_node - nl;
        double gl = 1.0, gr = 1.0;
        for (std::size_t c = 0; c < classes; ++c) {
          double pl = left_counts[c] / nl;
          double pr = (counts[c] - left_counts[c]) / nr;
          gl -= pl * pl;
          gr -= pr * pr;
        }
        double score = (nl * gl + nr * gr) / n_node;
        if (score < best_score) {  // strict: ties keep the first (lowest f, thr)
          best_score = score;
          best_feature = f;
          best_threshold = vals[i].first + 0.5 * (vals[i + 1].first - vals[i].first);
          found = true;
        }
      }
    }
    if (!found) return leaf(counts);

    importance[best_feature] += (n_node / n_total) * (g_node - best_score);
    std::vector<std::size_t> left_rows, right_rows;
    for (std::size_t r : rows)
      (x(r, best_feature) <= best_threshold ? left_rows : right_rows).push_back(r);
    rows.clear();
    rows.shrink_to_fit();
    TreeNode node;
    node.feature = static_cast<int>(best_feature);
    node.threshold = best_threshold;
    tree.nodes.push_back(node);
    int at = static_cast<int>(tree.nodes.size() - 1);
    int l = build(left_rows, depth + 1);
    int r = build(right_rows, depth + 1);
    tree.nodes[at].left = l;
    tree.nodes[at].right = r;
    return at;
  }
};

}  // namespace detail

struct TrainedClassifier {
  ClassifierConfig config;
  FeatureEncoding encoding;
  // logreg / mlp flat parameters
  std::vector<double> params;
  // forest
  std::vector<DecisionTree> trees;
  std::vector<double> gini_importance;  // per encoded feature, summed over trees
};

inline TrainedClassifier train(const ClassifierConfig& config, const Dataset& d) {
  config.validate();
  TrainedClassifier model;
  model.config = config;
  model.encoding = fit_encoding(d);
  EncodedData enc = apply_encoding(model.encoding, d);
  {
    std::vector<bool> seen(model.encoding.classes.size(), false);
    std::size_t distinct = 0;
    for (std::size_t label : enc.y)
      if (!seen[label]) {
        seen[label] = true;
        ++distinct;
      }
    if (distinct < 2)
      throw DegenerateData("training target has a single observed class");
  }
  const std::size_t f = model.encoding.width;
  const std::size_t k = model.encoding.classes.size();
  switch (config.kind) {
    case ClassifierKind::logreg: {
      LinearShape shape{k, f};
      std::vector<double> p(shape.size(), 0.0);
      model.params = detail::descend(
          std::move(p),
          [&](const std::vector<double>& q, std::vector<double>* g) {
            return logreg_loss_grad(enc.x, enc.y, shape, q, config.l2, g);
          },
          config.learning_rate, config.iterations);
      break;
    }
    case ClassifierKind::mlp: {
      MlpShape shape{f, static_cast<std::size_t>(config.hidden_units), k};
      std::vector<double> p(shape.size(), 0.0);
      rng::Stream init(rng::derive(config.seed, "mlp/init"));
      const double s1 = 1.0 / std::sqrt(static_cast<double>(std::max<std::size_t>(f, 1)));
      const double s2 =
          1.0 / std::sqrt(static_cast<double>(std::max<std::size_t>(shape.hidden, 1)));
      for (std::size_t a = 0; a < shape.hidden; ++a)
        for (std::size_t j = 0; j < f; ++j) p[shape.w1(a, j)] = s1 * init.normal();
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t a = 0; a < shape.hidden; ++a) p[shape.w2(c, a)] = s2 * init.normal();
      model.params = detail::descend(
          std::move(p),
          [&](const std::vector<double>& q, std::vector<double>* g) {
            return mlp_loss_grad(enc.x, enc.y, shape, q, config.l2, g);
          },
          config.learning_rate, config.iterations);
      break;
    }
    case ClassifierKind::random_forest: {
      model.gini_importance.assign(f, 0.0);
      const std::size_t n = enc.x.rows;
      const auto mtry = static_cast<std::size_t>(
          std::max(1.0, std::floor(std::sqrt(static_cast<double>(f)))));
      const std::uint64_t forest_key = rng::derive(config.seed, "forest");
      for (int t = 0; t < config.trees; ++t) {
        rng::Stream tree_stream(rng::combine(forest_key, static_cast<std::uint64_t>(t)));
        std::vector<std::size_t> rows;
        rows.reserve(n);
        if (config.trees == 1) {
          // single tree: deterministic CART on the full training set
          rows = rng::iota_indices(n);
        } else {
          for (std::size_t i = 0; i < n; ++i) rows.push_back(tree_stream.index(n));
        }
        detail::TreeBuilder builder{enc.x,
                                    enc.y,
                                    k,
                                    mtry,
                                    config.max_depth,
                                    tree_stream,
                                    static_cast<double>(rows.size()),
                                    model.gini_importance,
                                    {}};
        builder.build(rows, 0);
        model.trees.push_back(std::move(builder.tree));
      }
      break;
    }
  }
  return model;
}

inline std::vector<std::size_t> predict(const TrainedClassifier& model, const Dataset& d) {
  EncodedData enc = apply_encoding(model.encoding, d);
  const std::size_t n = enc.x.rows;
  const std::size_t k = model.encoding.classes.size();
  std::vector<std::size_t> out(n);
  auto argmax = [&](const std::vector<double>& scores) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < scores.size(); ++c)
      if (scores[c] > scores[best]) best = c;  // ties keep the lowest class index
    return best;
  };
  switch (model.config.kind) {
    case ClassifierKind::logreg: {
      LinearShape shape{k, model.encoding.width};
      std::vector<double> scores(k);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < k; ++c) {
          double s = model.params[shape.b(c)];
          for (std::size_t j = 0; j < shape.features; ++j)
            s += model.params[shape.w(c, j)] * enc.x(i, j);
          scores[c] = s;
        }
        out[i] = argmax(scores);
      }
      break;
    }
    case ClassifierKind::mlp: {
      MlpShape shape{model.encoding.width,
                     static_cast<std::size_t>(model.config.hidden_units), k};
      std::vector<double> act(shape.hidden), scores(k);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < shape.hidden; ++a) {
          double s = model.params[shape.b1(a)];
          for (std::size_t j = 0; j < shape.features; ++j)
            s += model.params[shape.w1(a, j)] * enc.x(i, j);
          act[a] = std::tanh(s);
        }
        for (std::size_t c = 0; c < k; ++c) {
          double s = model.params[shape.b2(c)];
          for (std::size_t a = 0; a < shape.hidden; ++a)
            s += model.params[shape.w2(c, a)] * act[a];
          scores[c] = s;
        }
        out[i] = argmax(scores);
      }
      break;
    }
    case ClassifierKind::random_forest: {
      std::vector<double> votes(k);
      for (std::size_t i = 0; i < n; ++i) {
        std::fill(votes.begin(), votes.end(), 0.0);
        for (const auto& tree : model.trees) votes[tree.predict(enc.x, i)] += 1.0;
        out[i] = argmax(votes);
      }
      break;
    }
  }
  return out;
}

inline double accuracy(const std::vector<std::size_t>& predicted,
                       const std::vector<std::size_t>& actual) {
  if (predicted.empty() || predicted.size() != actual.size())
    throw Error("accuracy: label vectors must be non-empty and the same length");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i)
    if (predicted[i] == actual[i]) ++hits;
  return static_cast<double>(hits) / static_cast<double>(predicted.size());
}

inline std::vector<std::size_t> target_labels(const Dataset& d) {
  std::vector<std::size_t> y(d.n_rows());
  for (std::size_t r = 0; r < d.n_rows(); ++r) y[r] = d.category(r, d.target_index());
  return y;
}

// Gini importances of a trained forest, summed from encoded slots back onto
// their source columns and normalized to 1. Forests with no splits anywhere
// fall back to uniform weights. Ties keep source-schema column order.
inline ImportanceRanking feature_importances(const TrainedClassifier& model) {
  if (model.config.kind != ClassifierKind::random_forest)
    throw Error("feature_importances: only defined for random_forest models");
  ImportanceRanking ranking;
  std::vector<std::pair<std::string, double>> per_column;
  double total = 0.0;
  for (const auto& col : model.encoding.columns) {
    double w = 0.0;
    for (std::size_t t = 0; t < col.width; ++t)
      w += model.gini_importance[col.offset + t];
    per_column.emplace_back(model.encoding.schema[col.source].name, w);
    total += w;
  }
  if (total <= 0.0) {
    for (auto& [name, w] : per_column) w = 1.0 / static_cast<double>(per_column.size());
  } else {
    for (auto& [name, w] : per_column) w /= total;
  }
  std::stable_sort(per_column.begin(), per_column.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  ranking.entries = std::move(per_column);
  return ranking;
}

struct ClassifierSuite {
  ClassifierConfig logreg;
  ClassifierConfig forest;
  ClassifierConfig mlp;
};

inline ClassifierSuite default_suite(RngSeed seed = {}) {
  ClassifierSuite s;
  s.logreg = logreg_defaults(RngSeed{rng::derive(seed, "suite/logreg")});
  s.forest = forest_defaults(RngSeed{rng::derive(seed, "suite/forest")});
  s.mlp = mlp_defaults(RngSeed{rng::derive(seed, "suite/mlp")});
  return s;
}

struct UtilityReport {
  double acc_logreg = 0.0;
  double acc_forest = 0.0;
  double acc_mlp = 0.0;
};

// Train-on-synthetic, test-on-real: fits the whole suite on synth_train
// (encoding statistics included) and scores accuracy on real_test.
inline UtilityReport tstr(const Dataset& synth_train, const Dataset& real_test,
                          const ClassifierSuite& suite) {
  if (synth_train.schema() != real_test.schema() ||
      synth_train.target_name() != real_test.target_name())
    throw Error("tstr: train and test schemas differ");
  auto truth = target_labels(real_test);
  UtilityReport rep;
  rep.acc_logreg = accuracy(predict(train(suite.logreg, synth_train), real_test), truth);
  rep.acc_forest = accuracy(predict(train(suite.forest, synth_train), real_test), truth);
  rep.acc_mlp = accuracy(predict(train(suite.mlp, synth_train), real_test), truth);
  return rep;
}

}  // namespace sdgbench
