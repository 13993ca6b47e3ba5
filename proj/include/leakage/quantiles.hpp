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

#ifndef LEAKAGE_QUANTILES_HPP
#define LEAKAGE_QUANTILES_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "leakage/common.hpp"
#include "leakage/prob.hpp"

namespace leakage {

struct LeakageAtom {
  double value;  // nats
  double mass;   // probability
};

/// The sorted support of the per-outcome leakage random variable, with
/// probability masses. Atoms are deduplicated within tol() and masses sum
/// to 1; this backs all CDF and quantile queries.
class LeakageDistribution {
 public:
  explicit LeakageDistribution(std::vector<LeakageAtom> atoms) {
    if (atoms.empty()) {
      throw InvalidParams("leakage distribution must have at least one atom");
    }
    std::stable_sort(atoms.begin(), atoms.end(),
                     [](const LeakageAtom& a, const LeakageAtom& b) {
                       return a.value < b.value;
                     });
    double total = 0;
    for (const LeakageAtom& a : atoms) {
      if (!(a.mass > 0)) {
        throw InvalidParams("atom masses must be strictly positive");
      }
      total += a.mass;
      if (!atoms_.empty() && a.value - atoms_.back().value <= tol()) {
        atoms_.back().mass += a.mass;
      } else {
        atoms_.push_back(a);
      }
    }
    if (std::abs(total - 1.0) > tol()) {
      throw NotAProbabilityVector("atom masses sum to " +
                                  std::to_string(total) + ", expected 1");
    }
  }

  const std::vector<LeakageAtom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  double min_value() const { return atoms_.front().value; }
  double max_value() const { return atoms_.back().value; }

  /// C(t) = P{leakage <= t}, with values within tol() of t counted as <= t.
  double cdf(double t) const {
    double c = 0;
    for (const LeakageAtom& a : atoms_) {
      if (a.value <= t + tol()) c += a.mass;
    }
    return c;
  }

 private:
  std::vector<LeakageAtom> atoms_;
};

/// Aggregates P_Y-mass by leakage value over the supported outcomes.
inline LeakageDistribution leakage_distribution(const Joint& joint) {
  std::vector<LeakageAtom> atoms;
  for (std::size_t y : joint.support()) {
    atoms.push_back({pml(joint, y), joint.marginal()[y]});
  }
  return LeakageDistribution(std::move(atoms));
}

/// P{leakage > eps}. Strict: atoms within tol() of eps count as equal to
/// eps and do not fail.
inline double failure_probability(const LeakageDistribution& ld, double eps) {
  if (!(eps >= 0)) throw InvalidParams("eps must be >= 0");
  double p = 0;
  for (const LeakageAtom& a : ld.atoms()) {
    if (a.value > eps + tol()) p += a.mass;
  }
  return p;
}

namespace detail {
inline void require_delta_open_unit(double delta) {
  if (!(delta > 0) || !(delta < 1)) {
    throw DeltaOutOfRange("delta must lie in (0,1), got " +
                          std::to_string(delta));
  }
}
}  // namespace detail

/// Left-continuous quantile at level 1-delta: the smallest atom value whose
/// cumulative mass reaches 1-delta.
inline double left_quantile(const LeakageDistribution& ld, double delta) {
  detail::require_delta_open_unit(delta);
  double cum = 0;
  for (const LeakageAtom& a : ld.atoms()) {
    cum += a.mass;
    if (cum >= 1.0 - delta - tol()) return a.value;
  }
  return ld.max_value();
}

/// Right-continuous quantile at level 1-delta: the largest atom value whose
/// tail mass (atoms >= it) is at least delta.
inline double right_quantile(const LeakageDistribution& ld, double delta) {
  detail::require_delta_open_unit(delta);
  double tail = 0;
  const auto& atoms = ld.atoms();
  for (std::size_t i = atoms.size(); i-- > 0;) {
    tail += atoms[i].mass;
    if (tail >= delta - tol()) return atoms[i].value;
  }
  return ld.min_value();
}

/// min over atom sets A with P(A) >= 1-delta of max value in A. The optimal
/// set is a prefix in leakage order, so no subset enumeration is needed.
inline double left_quantile_variational(const LeakageDistribution& ld,
                                        double delta) {
  detail::require_delta_open_unit(delta);
  const auto& atoms = ld.atoms();
  double best = kInf;
  double cum = 0;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    cum += atoms[k].mass;
    if (cum >= 1.0 - delta - tol()) {
      best = std::min(best, atoms[k].value);
      break;  // longer prefixes only raise the max
    }
  }
  return best == kInf ? ld.max_value() : best;
}

/// max over atom sets A with P(A) >= delta of min value in A; suffixes in
/// leakage order are optimal.
inline double right_quantile_variational(const LeakageDistribution& ld,
                                         double delta) {
  detail::require_delta_open_unit(delta);
  const auto& atoms = ld.atoms();
  double best = kNegInf;
  double mass = 0;
  for (std::size_t i = atoms.size(); i-- > 0;) {
    mass += atoms[i].mass;
    if (mass >= delta - tol()) {
      best = std::max(best, atoms[i].value);
      break;
    }
  }
  return best == kNegInf ? ld.min_value() : best;
}

}  // namespace leakage

#endif  // LEAKAGE_QUANTILES_HPP
