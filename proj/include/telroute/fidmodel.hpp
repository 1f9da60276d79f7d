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

#include <optional>
#include <span>

#include "telroute/channel.hpp"

namespace telroute {

/// Per-link weights of the two-weight objective. mu is the ZZ correlation
/// a11 - a22 - a33 + a44, nu the XX correlation a14 + a23 + a32 + a41.
struct LinkWeights {
  double mu = 1.0;
  double nu = 1.0;
  /// -ln N, present only when the link supports the additive mapping and
  /// N > 0.
  std::optional<double> log_neg_weight;
};

struct PathObjective {
  double mu_product = 1.0;
  double nu_product = 1.0;
  double fidelity = 1.0;
};

/// Constant offset of the two-weight distance before the 1/4 normalization.
inline constexpr double kTwoWeightOffset = 2.0;

/// Populations a22, a33 below this count as zero for the additive mapping.
inline constexpr double kAdditiveTolerance = 1e-12;

struct WernerParams {
  double p_w = 1.0;
  double theta = kQuarterPi;
};

/// (3 + prod N_i) / 4.
double pure_path_fidelity(std::span<const double> negativities);

LinkWeights link_weights(const ChannelState& ch);

/// True when the channel lives on span{|00>, |11>} with a real non-negative
/// coherence, so that nu equals the negativity.
bool supports_additive_mapping(const ChannelState& ch);

/// (2 + prod mu + prod nu) / 4.
PathObjective xstate_path_fidelity(std::span<const LinkWeights> weights);

/// (2 + prod p_w + prod p_w sin(2 theta)) / 4.
double werner_path_fidelity(std::span<const WernerParams> params);

/// -ln n for n in (0, 1].
double additive_weight(double n);

}  // namespace telroute
