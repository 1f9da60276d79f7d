// Copyright 2026 The telroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "telroute/channel.hpp"
#include "telroute/network.hpp"
#include "telroute/routing.hpp"

namespace telroute {

/// Closed-form swapping-concentration outcome for two pure links with
/// negativities n1 and n2.
struct SwapFormulaResult {
  double n_prime = 0.0;
  double p_success = 0.0;
  double gamma = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  /// n_prime <= 1. The formula is reported as-is even when this is false.
  bool physical = false;
};

/// delta_k = asin(n_k)/2, gamma = 2 - cos(d1 - d2) - cos(d1 + d2),
/// N' = 2 n1 n2 / gamma, p = (1 - sqrt(1 - n1) sqrt(1 - n2))/2.
/// Throws DomainError outside [0,1] and DegenerateError when gamma = 0.
SwapFormulaResult swap_formula(double n1, double n2);

/// Four orthonormal two-qubit vectors, components indexed 2*c1 + c2.
class MeasurementBasis {
 public:
  using Vector = std::array<cplx, 4>;

  /// Throws ValidationError unless the vectors are orthonormal within 1e-12.
  explicit MeasurementBasis(std::array<Vector, 4> vectors);

  /// Phi+, Phi-, Psi+, Psi-.
  static MeasurementBasis bell();
  static MeasurementBasis computational();

  const Vector& operator[](std::size_t k) const { return vectors_[k]; }

 private:
  std::array<Vector, 4> vectors_;
};

struct SwapBranch {
  int outcome_index = 0;
  double probability = 0.0;
  /// State of the outer pair (A, B), uncorrected. Empty when the branch
  /// probability is below kNullBranchProbability.
  std::optional<DensityMatrix> post_state;
};

inline constexpr double kNullBranchProbability = 1e-15;

/// Measures (C1, C2) of (A,C1) x (C2,B) in `basis`, one branch per vector.
std::array<SwapBranch, 4> simulate_swap(const PureSchmidtChannel& ch1,
                                        const PureSchmidtChannel& ch2,
                                        const MeasurementBasis& basis);

struct PreparationPlan {
  std::string swap_node;
  std::pair<std::string, std::string> consumed_links;
  std::pair<std::string, std::string> created_endpoint_pair;
};

/// Validates that both links touch swap_node and have distinct far ends.
PreparationPlan make_plan(const Network& net, const std::string& swap_node,
                          const std::string& link1, const std::string& link2);

struct PreparationAnalysis {
  RouteResult base;
  SwapFormulaResult formula;
  RouteResult success;
  RouteResult failure;
  double expected_fidelity = 0.0;
};

/// Success adds a pure link of negativity N' between the created endpoints
/// and drops the consumed links; failure only drops them. Each branch is
/// routed with exact_route.
PreparationAnalysis analyze_preparation(const Network& net, const std::string& src,
                                        const std::string& dst,
                                        const PreparationPlan& plan);

double preparation_expected_fidelity(const Network& net, const std::string& src,
                                     const std::string& dst,
                                     const PreparationPlan& plan);

/// All valid plans at `swap_node` whose links avoid the base optimal route.
std::vector<PreparationPlan> candidate_plans(const Network& net,
                                             const std::string& src,
                                             const std::string& dst,
                                             const std::string& swap_node);

}  // namespace telroute
