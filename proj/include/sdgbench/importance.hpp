#pragma once

// Feature-importance ranking shared by the attack and classifier modules.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "sdgbench/dataset.hpp"
#include "sdgbench/error.hpp"

namespace sdgbench {

// Non-target feature columns ordered by descending importance weight.
// Weights are non-negative and sum to 1.
struct ImportanceRanking {
  std::vector<std::pair<std::string, double>> entries;

  void validate() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].second < 0.0)
        throw Error("importance ranking: negative weight for '" + entries[i].first + "'");
      if (i && entries[i].second > entries[i - 1].second + 1e-12)
        throw Error("importance ranking: weights are not in descending order");
      sum += entries[i].second;
    }
    if (entries.empty() || std::abs(sum - 1.0) > 1e-8)
      throw Error("importance ranking: weights must sum to 1");
  }

  // must cover every non-target column of d exactly once
  void validate_for(const Dataset& d) const {
    validate();
    if (entries.size() != d.n_cols() - 1)
      throw Error("importance ranking does not cover every non-target column");
    for (const auto& [name, w] : entries) {
      std::size_t c = d.find_column(name);  // throws if absent
      if (c == d.target_index())
        throw Error("importance ranking must not include the target column");
    }
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (std::size_t j = i + 1; j < entries.size(); ++j)
        if (entries[i].first == entries[j].first)
          throw Error("importance ranking lists '" + entries[i].first + "' twice");
  }
};

}  // namespace sdgbench
