#pragma once

#include <Eigen/Core>
#include <queue>
#include <vector>

#include "bmc/rng.hpp"

namespace bmc {

/// Walker alias table for O(1) draws from a fixed discrete distribution.
class AliasTable {
 public:
  explicit AliasTable(const Eigen::VectorXd& weights) {
    const auto k = static_cast<std::size_t>(weights.size());
    prob_.assign(k, 0.0);
    alias_.assign(k, 0);
    const double total = weights.sum();

    std::queue<std::size_t> small, large;
    for (std::size_t i = 0; i < k; ++i) {
      prob_[i] = weights[static_cast<Eigen::Index>(i)] * static_cast<double>(k) / total;
      alias_[i] = i;
      if (prob_[i] < 1.0) {
        small.push(i);
      } else {
        large.push(i);
      }
    }
    while (!small.empty() && !large.empty()) {
      const std::size_t s = small.front(), l = large.front();
      small.pop();
      large.pop();
      alias_[s] = l;
      prob_[l] -= 1.0 - prob_[s];
      if (prob_[l] < 1.0) {
        small.push(l);
      } else {
        large.push(l);
      }
    }
    // Leftovers are 1 up to rounding.
    while (!large.empty()) {
      prob_[large.front()] = 1.0;
      large.pop();
    }
    while (!small.empty()) {
      prob_[small.front()] = 1.0;
      small.pop();
    }
  }

  std::size_t draw(Xoshiro256& rng) const {
    const std::size_t i = static_cast<std::size_t>(rng.bounded(prob_.size()));
    return rng.uniform01() < prob_[i] ? i : alias_[i];
  }

  std::size_t size() const { return prob_.size(); }

 private:
  std::vector<double> prob_;
  std::vector<std::size_t> alias_;
};

}  // namespace bmc
