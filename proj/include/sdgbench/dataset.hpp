#pragma once

// Immutable in-memory table with a typed schema. Cells are doubles in
// row-major order; categorical cells store the category index as an exact
// small integer. The target column is always categorical, so every dataset
// is directly usable for classification.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdgbench/error.hpp"
#include "sdgbench/kvfile.hpp"
#include "sdgbench/rng.hpp"

namespace sdgbench {

enum class ColumnKind { continuous, binary, multiclass };

inline std::string_view to_string(ColumnKind k) {
  switch (k) {
    case ColumnKind::continuous: return "continuous";
    case ColumnKind::binary: return "binary";
    case ColumnKind::multiclass: return "multiclass";
  }
  return "?";
}

inline ColumnKind column_kind_from_string(std::string_view s) {
  if (s == "continuous") return ColumnKind::continuous;
  if (s == "binary") return ColumnKind::binary;
  if (s == "multiclass") return ColumnKind::multiclass;
  throw Error("unknown column kind: '" + std::string(s) + "'");
}

struct ColumnSchema {
  std::string name;
  ColumnKind kind = ColumnKind::continuous;
  std::vector<std::string> categories;  // empty iff continuous

  bool categorical() const { return kind != ColumnKind::continuous; }

  std::size_t category_index(std::string_view label) const {
    for (std::size_t i = 0; i < categories.size(); ++i)
      if (categories[i] == label) return i;
    throw Error("column '" + name + "': unknown category '" + std::string(label) + "'");
  }

  bool operator==(const ColumnSchema&) const = default;
};

inline void validate_schema(const std::vector<ColumnSchema>& schema) {
  if (schema.empty()) throw Error("schema has no columns");
  std::set<std::string> names;
  for (const auto& col : schema) {
    if (col.name.empty()) throw Error("schema has a column with an empty name");
    if (!names.insert(col.name).second)
      throw Error("schema has duplicate column name '" + col.name + "'");
    switch (col.kind) {
      case ColumnKind::continuous:
        if (!col.categories.empty())
          throw Error("continuous column '" + col.name + "' must not list categories");
        break;
      case ColumnKind::binary:
        if (col.categories.size() != 2)
          throw Error("binary column '" + col.name + "' must have exactly 2 categories");
        break;
      case ColumnKind::multiclass:
        if (col.categories.size() < 3)
          throw Error("multiclass column '" + col.name + "' must have at least 3 categories");
        break;
    }
    std::set<std::string> cats(col.categories.begin(), col.categories.end());
    if (cats.size() != col.categories.size())
      throw Error("column '" + col.name + "' has duplicate categories");
  }
}

class Dataset {
 public:
  Dataset(std::vector<ColumnSchema> schema, std::string target, std::vector<double> cells)
      : schema_(std::move(schema)), target_(std::move(target)), cells_(std::move(cells)) {
    validate_schema(schema_);
    target_index_ = find_column(target_);
    if (!schema_[target_index_].categorical())
      throw Error("target column '" + target_ + "' must be binary or multiclass");
    if (schema_.empty() || cells_.size() % schema_.size() != 0)
      throw Error("cell grid size is not a multiple of the column count");
    n_rows_ = cells_.size() / schema_.size();
    check_cells();
  }

  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_cols() const { return schema_.size(); }

  const std::vector<ColumnSchema>& schema() const { return schema_; }
  const ColumnSchema& column_schema(std::size_t c) const { return schema_.at(c); }
  const std::string& target_name() const { return target_; }
  std::size_t target_index() const { return target_index_; }

  std::size_t find_column(std::string_view name) const {
    for (std::size_t i = 0; i < schema_.size(); ++i)
      if (schema_[i].name == name) return i;
    throw Error("no column named '" + std::string(name) + "'");
  }

  double cell(std::size_t r, std::size_t c) const { return cells_[r * n_cols() + c]; }

  // category index of a categorical cell
  std::size_t category(std::size_t r, std::size_t c) const {
    if (!schema_[c].categorical())
      throw Error("column '" + schema_[c].name + "' is not categorical");
    return static_cast<std::size_t>(cell(r, c));
  }

  std::span<const double> row(std::size_t r) const {
    return {cells_.data() + r * n_cols(), n_cols()};
  }

  std::vector<double> column(std::size_t c) const {
    std::vector<double> out(n_rows_);
    for (std::size_t r = 0; r < n_rows_; ++r) out[r] = cell(r, c);
    return out;
  }

  const std::vector<double>& cells() const { return cells_; }

  // same schema and target, different cell grid
  Dataset with_cells(std::vector<double> cells) const {
    return Dataset(schema_, target_, std::move(cells));
  }

  Dataset select_rows(const std::vector<std::size_t>& rows) const {
    std::vector<double> out;
    out.reserve(rows.size() * n_cols());
    for (std::size_t r : rows) {
      if (r >= n_rows_) throw Error("row index out of range");
      auto rr = row(r);
      out.insert(out.end(), rr.begin(), rr.end());
    }
    return with_cells(std::move(out));
  }

  bool operator==(const Dataset&) const = default;

 private:
  void check_cells() const {
    for (std::size_t c = 0; c < schema_.size(); ++c) {
      const auto& col = schema_[c];
      for (std::size_t r = 0; r < n_rows_; ++r) {
        double v = cell(r, c);
        if (!std::isfinite(v))
          throw Error("column '" + col.name + "', row " + std::to_string(r + 1) +
                      ": non-finite value");
        if (col.categorical()) {
          if (v != std::floor(v) || v < 0.0 ||
              v >= static_cast<double>(col.categories.size()))
            throw Error("column '" + col.name + "', row " + std::to_string(r + 1) +
                        ": value is not a valid category index");
        }
      }
    }
  }

  std::vector<ColumnSchema> schema_;
  std::string target_;
  std::size_t target_index_ = 0;
  std::size_t n_rows_ = 0;
  std::vector<double> cells_;
};

namespace detail {

// shortest representation that round-trips exactly
inline std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, p);
}

inline double parse_cell(std::string_view text, std::size_t row, const std::string& col) {
  double v = 0;
  auto t = trim(text);
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || p != t.data() + t.size() || t.empty())
    throw Error("row " + std::to_string(row) + ", column '" + col +
                "': cannot parse '" + std::string(t) + "' as a number");
  return v;
}

inline std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    auto comma = line.find(',', pos);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(pos));
      break;
    }
    out.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

inline std::vector<std::string> read_lines(const std::string& path) {
  std::string text = read_text_file(path);
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    std::string_view line(text.data() + pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = nl + 1;
    if (trim(line).empty()) continue;  // ignore blank lines
    lines.emplace_back(line);
    if (nl >= text.size()) break;
  }
  return lines;
}

}  // namespace detail

// CSV with a header row, comma-separated, no quoting. Categorical cells hold
// the category label verbatim; whitespace around cells is ignored.
inline Dataset load_csv(const std::string& path, const std::vector<ColumnSchema>& schema,
                        const std::string& target) {
  validate_schema(schema);
  auto lines = detail::read_lines(path);
  if (lines.empty()) throw Error(path + ": file is empty");
  auto header = detail::split_csv_line(lines[0]);
  if (header.size() != schema.size())
    throw Error(path + ": header has " + std::to_string(header.size()) +
                " columns, schema has " + std::to_string(schema.size()));
  for (std::size_t c = 0; c < schema.size(); ++c) {
    if (detail::trim(header[c]) != schema[c].name)
      throw Error(path + ": header column " + std::to_string(c + 1) + " is '" +
                  std::string(detail::trim(header[c])) + "', schema expects '" +
                  schema[c].name + "'");
  }
  if (lines.size() < 2) throw Error(path + ": no data rows");
  std::vector<double> cells;
  cells.reserve((lines.size() - 1) * schema.size());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = detail::split_csv_line(lines[i]);
    if (fields.size() != schema.size())
      throw Error(path + ": row " + std::to_string(i) + " has " +
                  std::to_string(fields.size()) + " fields, expected " +
                  std::to_string(schema.size()));
    for (std::size_t c = 0; c < schema.size(); ++c) {
      const auto& col = schema[c];
      if (col.categorical()) {
        auto label = detail::trim(fields[c]);
        try {
          cells.push_back(static_cast<double>(col.category_index(label)));
        } catch (const Error&) {
          throw Error(path + ": row " + std::to_string(i) + ", column '" + col.name +
                      "': unknown category '" + std::string(label) + "'");
        }
      } else {
        cells.push_back(detail::parse_cell(fields[c], i, col.name));
      }
    }
  }
  return Dataset(schema, target, std::move(cells));
}

inline std::string to_csv_text(const Dataset& d) {
  std::string out;
  for (std::size_t c = 0; c < d.n_cols(); ++c) {
    if (c) out += ',';
    out += d.column_schema(c).name;
  }
  out += '\n';
  for (std::size_t r = 0; r < d.n_rows(); ++r) {
    for (std::size_t c = 0; c < d.n_cols(); ++c) {
      if (c) out += ',';
      const auto& col = d.column_schema(c);
      if (col.categorical())
        out += col.categories[d.category(r, c)];
      else
        out += detail::format_double(d.cell(r, c));
    }
    out += '\n';
  }
  return out;
}

inline void write_csv(const Dataset& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << to_csv_text(d);
  if (!out) throw Error("write failed: " + path);
}

// Infer column kinds from raw text: a column where every cell parses as a
// number and with more than max_categories distinct values is continuous;
// otherwise it is categorical (binary at 2 distinct values, multiclass
// above). Categories are sorted lexicographically. A column with a single
// distinct value is rejected.
inline std::vector<ColumnSchema> infer_schema(const std::string& path,
                                              std::size_t max_categories = 20) {
  auto lines = detail::read_lines(path);
  if (lines.empty()) throw Error(path + ": file is empty");
  auto header = detail::split_csv_line(lines[0]);
  if (lines.size() < 2) throw Error(path + ": no data rows");
  std::size_t width = header.size();
  std::vector<std::set<std::string>> distinct(width);
  std::vector<bool> numeric(width, true);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = detail::split_csv_line(lines[i]);
    if (fields.size() != width)
      throw Error(path + ": row " + std::to_string(i) + " has " +
                  std::to_string(fields.size()) + " fields, expected " +
                  std::to_string(width));
    for (std::size_t c = 0; c < width; ++c) {
      auto t = detail::trim(fields[c]);
      if (t.empty()) throw Error(path + ": row " + std::to_string(i) + " has an empty cell");
      distinct[c].insert(std::string(t));
      double v;
      auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc{} || p != t.data() + t.size()) numeric[c] = false;
    }
  }
  std::vector<ColumnSchema> schema(width);
  for (std::size_t c = 0; c < width; ++c) {
    schema[c].name = std::string(detail::trim(header[c]));
    std::size_t k = distinct[c].size();
    if (k < 2)
      throw Error(path + ": column '" + schema[c].name +
                  "' has a single distinct value; cannot infer a kind");
    if (numeric[c] && k > max_categories) {
      schema[c].kind = ColumnKind::continuous;
    } else {
      if (!numeric[c] && k > max_categories)
        throw Error(path + ": column '" + schema[c].name + "' has " + std::to_string(k) +
                    " distinct labels, more than max_categories=" +
                    std::to_string(max_categories));
      schema[c].kind = (k == 2) ? ColumnKind::binary : ColumnKind::multiclass;
      schema[c].categories.assign(distinct[c].begin(), distinct[c].end());
    }
  }
  validate_schema(schema);
  return schema;
}

// Schema files use the sectioned key-value format:
//   [column age]
//   kind = continuous
//   [column income]
//   kind = binary
//   categories = <=50K, >50K
//   target = true
inline std::pair<std::vector<ColumnSchema>, std::string> load_schema_file(
    const std::string& path) {
  KvFile file = parse_kv_file(path);
  std::vector<ColumnSchema> schema;
  std::string target;
  for (const auto& sec : file.sections) {
    if (sec.name.rfind("column ", 0) != 0)
      throw Error(path + ": unexpected section [" + sec.name + "]");
    ColumnSchema col;
    col.name = std::string(detail::trim(std::string_view(sec.name).substr(7)));
    col.kind = column_kind_from_string(detail::trim(sec.require("kind")));
    if (const auto* cats = sec.find("categories")) col.categories = detail::split_list(*cats);
    if (const auto* t = sec.find("target"); t && detail::parse_bool(*t, "target")) {
      if (!target.empty())
        throw Error(path + ": more than one column marked as target");
      target = col.name;
    }
    schema.push_back(std::move(col));
  }
  if (target.empty()) throw Error(path + ": no column marked 'target = true'");
  validate_schema(schema);
  return {std::move(schema), std::move(target)};
}

inline void write_schema_file(const std::vector<ColumnSchema>& schema,
                              const std::string& target, const std::string& path) {
  validate_schema(schema);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  for (const auto& col : schema) {
    out << "[column " << col.name << "]\n";
    out << "kind = " << to_string(col.kind) << "\n";
    if (!col.categories.empty()) {
      out << "categories = ";
      for (std::size_t i = 0; i < col.categories.size(); ++i) {
        if (i) out << ", ";
        out << col.categories[i];
      }
      out << "\n";
    }
    if (col.name == target) out << "target = true\n";
    out << "\n";
  }
  if (!out) throw Error("write failed: " + path);
}

// Seeded shuffle split. The test set receives round(fraction * n) rows; both
// splits preserve the original relative row order.
inline std::pair<Dataset, Dataset> train_test_split(const Dataset& d, double test_fraction,
                                                    RngSeed seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0))
    throw Error("test_fraction must be in (0, 1)");
  std::size_t n = d.n_rows();
  auto t = static_cast<std::size_t>(std::llround(test_fraction * static_cast<double>(n)));
  if (t == 0 || t >= n)
    throw Error("split would leave an empty train or test set (n=" + std::to_string(n) + ")");
  auto idx = rng::iota_indices(n);
  rng::Stream stream(rng::derive(seed, "train_test_split"));
  rng::shuffle(idx, stream);
  std::vector<std::size_t> test_idx(idx.begin(), idx.begin() + t);
  std::vector<std::size_t> train_idx(idx.begin() + t, idx.end());
  std::sort(test_idx.begin(), test_idx.end());
  std::sort(train_idx.begin(), train_idx.end());
  return {d.select_rows(train_idx), d.select_rows(test_idx)};
}

inline std::vector<double> column_values(const Dataset& d, std::string_view name) {
  return d.column(d.find_column(name));
}

}  // namespace sdgbench
