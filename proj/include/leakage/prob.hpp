// Copyright 2026 The leakage-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEAKAGE_PROB_HPP
#define LEAKAGE_PROB_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "leakage/common.hpp"

namespace leakage {

/// A probability distribution over a finite secret alphabet.
///
/// Entries must be nonnegative and sum to 1 within tol(). Zero entries are
/// allowed; the smallest strictly positive entry caps every per-outcome
/// leakage at log(1/min_positive).
class Prior {
 public:
  explicit Prior(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
      throw NotAProbabilityVector("prior must have at least one entry");
    }
    double sum = 0;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      if (!(probs_[i] >= 0)) {
        throw NotAProbabilityVector("prior entry " + std::to_string(i) +
                                    " is negative or NaN");
      }
      sum += probs_[i];
    }
    if (std::abs(sum - 1.0) > tol()) {
      throw NotAProbabilityVector("prior sums to " + std::to_string(sum) +
                                  ", expected 1");
    }
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      if (probs_[i] > 0) support_.push_back(i);
    }
    // sum ~ 1 guarantees at least one positive entry
  }

  static Prior uniform(std::size_t n) {
    return Prior(std::vector<double>(n, 1.0 / static_cast<double>(n)));
  }

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t x) const { return probs_[x]; }
  const std::vector<double>& probs() const { return probs_; }

  /// Indices x with P_X(x) > 0.
  const std::vector<std::size_t>& support() const { return support_; }

  bool full_support() const { return support_.size() == probs_.size(); }

  double min_positive() const {
    double m = kInf;
    for (std::size_t x : support_) m = std::min(m, probs_[x]);
    return m;
  }

 private:
  std::vector<double> probs_;
  std::vector<std::size_t> support_;
};

/// A row-stochastic conditional distribution P_{Y|X}: rows are inputs x,
/// columns are outputs y. Also used for post-processing kernels P_{Z|Y}.
class Channel {
 public:
  explicit Channel(std::vector<std::vector<double>> rows)
      : rows_(std::move(rows)) {
    if (rows_.empty() || rows_[0].empty()) {
      throw NotAProbabilityVector("channel must be non-empty");
    }
    const std::size_t ny = rows_[0].size();
    for (std::size_t x = 0; x < rows_.size(); ++x) {
      if (rows_[x].size() != ny) {
        throw DimensionMismatch("channel row " + std::to_string(x) +
                                " has length " +
                                std::to_string(rows_[x].size()) +
                                ", expected " + std::to_string(ny));
      }
      double sum = 0;
      for (std::size_t y = 0; y < ny; ++y) {
        if (!(rows_[x][y] >= 0)) {
          throw NotAProbabilityVector("channel entry (" + std::to_string(x) +
                                      "," + std::to_string(y) +
                                      ") is negative or NaN");
        }
        sum += rows_[x][y];
      }
      if (std::abs(sum - 1.0) > tol()) {
        throw NotAProbabilityVector("channel row " + std::to_string(x) +
                                    " sums to " + std::to_string(sum) +
                                    ", expected 1");
      }
    }
  }

  static Channel identity(std::size_t n) {
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1.0;
    return Channel(std::move(rows));
  }

  std::size_t num_inputs() const { return rows_.size(); }
  std::size_t num_outputs() const { return rows_[0].size(); }
  double at(std::size_t x, std::size_t y) const { return rows_[x][y]; }
  const std::vector<double>& row(std::size_t x) const { return rows_[x]; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }

 private:
  std::vector<std::vector<double>> rows_;
};

/// A validated (prior, channel) pair with the output marginal P_Y cached.
///
/// Outcomes with P_Y(y) = 0 are excluded from the support; leakage queries
/// are only defined on supported outcomes. The number of excluded outcomes
/// is kept for reporting.
class Joint {
 public:
  Joint(Prior prior, Channel channel, std::vector<std::string> y_labels = {})
      : prior_(std::move(prior)),
        channel_(std::move(channel)),
        y_labels_(std::move(y_labels)) {
    if (prior_.size() != channel_.num_inputs()) {
      throw DimensionMismatch(
          "prior has " + std::to_string(prior_.size()) + " entries, channel " +
          std::to_string(channel_.num_inputs()) + " rows");
    }
    const std::size_t ny = channel_.num_outputs();
    marginal_.assign(ny, 0.0);
    for (std::size_t x : prior_.support()) {
      for (std::size_t y = 0; y < ny; ++y) {
        marginal_[y] += prior_[x] * channel_.at(x, y);
      }
    }
    for (std::size_t y = 0; y < ny; ++y) {
      if (marginal_[y] > 0) support_.push_back(y);
    }
    if (y_labels_.empty()) {
      for (std::size_t y = 0; y < ny; ++y) {
        y_labels_.push_back(std::to_string(y + 1));
      }
    } else if (y_labels_.size() != ny) {
      throw DimensionMismatch("got " + std::to_string(y_labels_.size()) +
                              " outcome labels for " + std::to_string(ny) +
                              " outcomes");
    }
  }

  const Prior& prior() const { return prior_; }
  const Channel& channel() const { return channel_; }
  const std::vector<double>& marginal() const { return marginal_; }
  const std::vector<std::size_t>& support() const { return support_; }
  const std::vector<std::string>& y_labels() const { return y_labels_; }

  std::size_t num_secrets() const { return prior_.size(); }
  std::size_t num_outcomes() const { return channel_.num_outputs(); }
  std::size_t dropped_outcomes() const {
    return num_outcomes() - support_.size();
  }

  bool is_supported(std::size_t y) const {
    return y < marginal_.size() && marginal_[y] > 0;
  }

  void require_supported(std::size_t y) const {
    if (!is_supported(y)) {
      throw OutcomeOutsideSupport("outcome " + std::to_string(y) +
                                  " has zero marginal probability");
    }
  }

 private:
  Prior prior_;
  Channel channel_;
  std::vector<double> marginal_;
  std::vector<std::size_t> support_;
  std::vector<std::string> y_labels_;
};

inline Joint make_joint(Prior prior, Channel channel,
                        std::vector<std::string> y_labels = {}) {
  return Joint(std::move(prior), std::move(channel), std::move(y_labels));
}

/// Marginalizes a post-processing kernel: P_{Z|X} = post ∘ P_{Y|X}.
/// The prior is unchanged.
inline Joint compose(const Joint& joint, const Channel& post,
                     std::vector<std::string> z_labels = {}) {
  if (post.num_inputs() != joint.num_outcomes()) {
    throw DimensionMismatch("post-processing has " +
                            std::to_string(post.num_inputs()) +
                            " rows, expected " +
                            std::to_string(joint.num_outcomes()));
  }
  const std::size_t nx = joint.num_secrets();
  const std::size_t ny = joint.num_outcomes();
  const std::size_t nz = post.num_outputs();
  std::vector<std::vector<double>> rows(nx, std::vector<double>(nz, 0.0));
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      const double p = joint.channel().at(x, y);
      if (p == 0) continue;
      for (std::size_t z = 0; z < nz; ++z) {
        rows[x][z] += p * post.at(y, z);
      }
    }
  }
  return Joint(joint.prior(), Channel(std::move(rows)), std::move(z_labels));
}

/// Posterior distribution of the secret given outcome y (Bayes).
inline Prior posterior(const Joint& joint, std::size_t y) {
  joint.require_supported(y);
  std::vector<double> p(joint.num_secrets());
  for (std::size_t x = 0; x < joint.num_secrets(); ++x) {
    p[x] = joint.prior()[x] * joint.channel().at(x, y) / joint.marginal()[y];
  }
  return Prior(std::move(p));
}

/// Per-outcome leakage: log of the largest posterior-to-prior ratio,
/// equivalently the largest channel-to-marginal ratio over supported secrets.
inline double pml(const Joint& joint, std::size_t y) {
  joint.require_supported(y);
  double best = 0;
  for (std::size_t x : joint.prior().support()) {
    best = std::max(best, joint.channel().at(x, y) / joint.marginal()[y]);
  }
  return std::log(best);
}

/// The smallest eps such that every supported outcome leaks at most eps.
inline double pml_max(const Joint& joint) {
  double best = 0;
  for (std::size_t y : joint.support()) best = std::max(best, pml(joint, y));
  return best;
}

/// Log-ratios i(x;y) = log(P_{Y|X=x}(y)/P_Y(y)) for supported y.
/// Entries with P_{Y|X=x}(y) = 0 are -inf (they lose every max and
/// exponentiate to 0); columns outside the support hold no value.
class InfoDensityTable {
 public:
  explicit InfoDensityTable(const Joint& joint)
      : num_outputs_(joint.num_outcomes()),
        supported_(joint.num_outcomes(), false),
        values_(joint.num_secrets(),
                std::vector<double>(joint.num_outcomes(),
                                    std::numeric_limits<double>::quiet_NaN())) {
    for (std::size_t y : joint.support()) {
      supported_[y] = true;
      for (std::size_t x = 0; x < joint.num_secrets(); ++x) {
        const double c = joint.channel().at(x, y);
        values_[x][y] = c > 0 ? std::log(c / joint.marginal()[y]) : kNegInf;
      }
    }
  }

  double at(std::size_t x, std::size_t y) const {
    if (y >= num_outputs_ || !supported_[y]) {
      throw OutcomeOutsideSupport("no information density for outcome " +
                                  std::to_string(y));
    }
    return values_[x][y];
  }

  const std::vector<std::vector<double>>& values() const { return values_; }

 private:
  std::size_t num_outputs_;
  std::vector<bool> supported_;
  std::vector<std::vector<double>> values_;
};

inline InfoDensityTable info_density(const Joint& joint) {
  return InfoDensityTable(joint);
}

namespace detail {

// Proportionality test for columns a, b restricted to prior-supported rows,
// via cross-ratios (no divisions).
inline bool columns_similar(const Joint& joint, std::size_t ya,
                            std::size_t yb) {
  const auto& sup = joint.prior().support();
  for (std::size_t i = 0; i < sup.size(); ++i) {
    for (std::size_t j = i + 1; j < sup.size(); ++j) {
      const double cross =
          joint.channel().at(sup[i], ya) * joint.channel().at(sup[j], yb) -
          joint.channel().at(sup[j], ya) * joint.channel().at(sup[i], yb);
      if (std::abs(cross) > kSimTol) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Merges all pairwise-similar outcomes (proportional columns over the
/// prior's support) by summing their columns. The distribution of the
/// leakage random variable is unchanged. Labels of merged outcomes are
/// concatenated with '+'.
inline Joint reduce(const Joint& joint) {
  const std::size_t ny = joint.num_outcomes();
  std::vector<std::size_t> group_of(ny);
  std::vector<std::size_t> representative;  // first member of each group
  for (std::size_t y = 0; y < ny; ++y) {
    bool placed = false;
    for (std::size_t g = 0; g < representative.size(); ++g) {
      if (detail::columns_similar(joint, representative[g], y)) {
        group_of[y] = g;
        placed = true;
        break;
      }
    }
    if (!placed) {
      group_of[y] = representative.size();
      representative.push_back(y);
    }
  }

  const std::size_t ng = representative.size();
  std::vector<std::vector<double>> rows(joint.num_secrets(),
                                        std::vector<double>(ng, 0.0));
  std::vector<std::string> labels(ng);
  for (std::size_t y = 0; y < ny; ++y) {
    const std::size_t g = group_of[y];
    for (std::size_t x = 0; x < joint.num_secrets(); ++x) {
      rows[x][g] += joint.channel().at(x, y);
    }
    if (!labels[g].empty()) labels[g] += "+";
    labels[g] += joint.y_labels()[y];
  }
  return Joint(joint.prior(), Channel(std::move(rows)), std::move(labels));
}

}  // namespace leakage

#endif  // LEAKAGE_PROB_HPP
