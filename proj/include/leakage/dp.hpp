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

#ifndef LEAKAGE_DP_HPP
#define LEAKAGE_DP_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "leakage/common.hpp"
#include "leakage/prob.hpp"

namespace leakage {

/// Pairwise privacy-loss values L_{x,x'}(y) = log(P(y|x)/P(y|x')) for
/// outcomes y that some input can emit. +inf/-inf mark one-sided zeros;
/// all-zero columns carry no value.
class DpLossTable {
 public:
  explicit DpLossTable(const Channel& channel)
      : nx_(channel.num_inputs()), ny_(channel.num_outputs()) {
    emittable_.assign(ny_, false);
    for (std::size_t y = 0; y < ny_; ++y) {
      for (std::size_t x = 0; x < nx_; ++x) {
        if (channel.at(x, y) > 0) {
          emittable_[y] = true;
          break;
        }
      }
    }
    values_.assign(nx_ * nx_, std::vector<double>(ny_, 0.0));
    for (std::size_t x = 0; x < nx_; ++x) {
      for (std::size_t xp = 0; xp < nx_; ++xp) {
        auto& row = values_[x * nx_ + xp];
        for (std::size_t y = 0; y < ny_; ++y) {
          const double num = channel.at(x, y);
          const double den = channel.at(xp, y);
          if (num > 0 && den > 0) {
            row[y] = std::log(num / den);
          } else if (num > 0) {
            row[y] = kInf;
          } else if (den > 0) {
            row[y] = kNegInf;
          }  // both zero: stays 0, but the outcome is skipped via emittable_
        }
      }
    }
  }

  std::size_t num_inputs() const { return nx_; }
  std::size_t num_outputs() const { return ny_; }
  bool emittable(std::size_t y) const { return emittable_[y]; }

  double loss(std::size_t x, std::size_t xp, std::size_t y) const {
    if (!emittable_[y]) {
      throw OutcomeOutsideSupport("outcome " + std::to_string(y) +
                                  " is emitted by no input");
    }
    return values_[x * nx_ + xp][y];
  }

 private:
  std::size_t nx_, ny_;
  std::vector<bool> emittable_;
  std::vector<std::vector<double>> values_;
};

/// The smallest eps such that every privacy-loss value is at most eps;
/// +inf when one input can emit an outcome another cannot.
inline double pure_dp_level(const Channel& channel) {
  double best = 0;
  for (std::size_t y = 0; y < channel.num_outputs(); ++y) {
    double cmax = 0, cmin = kInf;
    for (std::size_t x = 0; x < channel.num_inputs(); ++x) {
      cmax = std::max(cmax, channel.at(x, y));
      cmin = std::min(cmin, channel.at(x, y));
    }
    if (cmax == 0) continue;
    if (cmin == 0) return kInf;
    best = std::max(best, std::log(cmax / cmin));
  }
  return best;
}

/// Smallest additive slack delta making the channel (eps, delta)-DP:
/// max over ordered input pairs of the clipped expectation
/// sum_y max(0, P(y|x) - e^eps P(y|x')).
inline double privacy_profile(const Channel& channel, double eps) {
  if (!(eps >= 0)) throw InvalidParams("eps must be >= 0");
  const double scale = std::exp(eps);
  double best = 0;
  for (std::size_t x = 0; x < channel.num_inputs(); ++x) {
    for (std::size_t xp = 0; xp < channel.num_inputs(); ++xp) {
      double s = 0;
      for (std::size_t y = 0; y < channel.num_outputs(); ++y) {
        s += std::max(0.0, channel.at(x, y) - scale * channel.at(xp, y));
      }
      best = std::max(best, s);
    }
  }
  return best;
}

/// Worst-case probability that the privacy loss strictly exceeds eps.
/// Always at least privacy_profile(channel, eps).
inline double dp_failure_probability(const Channel& channel, double eps) {
  if (!(eps >= 0)) throw InvalidParams("eps must be >= 0");
  double best = 0;
  for (std::size_t x = 0; x < channel.num_inputs(); ++x) {
    for (std::size_t xp = 0; xp < channel.num_inputs(); ++xp) {
      double s = 0;
      for (std::size_t y = 0; y < channel.num_outputs(); ++y) {
        const double num = channel.at(x, y);
        if (num == 0) continue;
        const double den = channel.at(xp, y);
        const bool exceeds =
            den == 0 || std::log(num / den) > eps + tol();
        if (exceeds) s += num;
      }
      best = std::max(best, s);
    }
  }
  return best;
}

/// Tail bound implied by (eps, delta)-DP at threshold k*eps:
/// delta / (1 - e^{-(k-1) eps}), clamped to 1.
inline double adp_tail_bound(double eps, double delta, int k) {
  if (!(eps > 0)) throw InvalidParams("eps must be > 0");
  if (!(delta > 0) || !(delta < 1)) {
    throw DeltaOutOfRange("delta must lie in (0,1)");
  }
  if (k < 2) throw InvalidParams("k must be an integer >= 2");
  const double bound = delta / (1.0 - std::exp(-(k - 1) * eps));
  return std::min(1.0, bound);
}

/// Expected penalty of outcomes whose leakage exceeds eps, weighted by how
/// far it exceeds: sum over these outcomes of P_Y(y) (1 - e^{eps - l(y)}).
inline double psi1(const Joint& joint, double eps) {
  if (!(eps >= 0)) throw InvalidParams("eps must be >= 0");
  double s = 0;
  for (std::size_t y : joint.support()) {
    const double l = pml(joint, y);
    if (l > eps + tol()) {
      s += joint.marginal()[y] * (1.0 - std::exp(eps - l));
    }
  }
  return s;
}

/// Information-density analogue of the privacy profile:
/// max over supported x of sum_{y : i(x;y) > eps} (P(y|x) - e^eps P_Y(y)).
/// Equals the event-maximization form max_x max_E (P(E|x) - e^eps P_Y(E)).
inline double psi2(const Joint& joint, double eps) {
  if (!(eps >= 0)) throw InvalidParams("eps must be >= 0");
  const double scale = std::exp(eps);
  double best = 0;
  for (std::size_t x : joint.prior().support()) {
    double s = 0;
    for (std::size_t y : joint.support()) {
      const double c = joint.channel().at(x, y);
      const double m = joint.marginal()[y];
      if (c > 0 && std::log(c / m) > eps + tol()) {
        s += c - scale * m;
      }
    }
    best = std::max(best, s);
  }
  return best;
}

}  // namespace leakage

#endif  // LEAKAGE_DP_HPP
