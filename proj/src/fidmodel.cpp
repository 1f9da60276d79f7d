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

#include "telroute/fidmodel.hpp"

#include <cmath>

#include "telroute/errors.hpp"

namespace telroute {

double pure_path_fidelity(std::span<const double> negativities) {
  if (negativities.empty()) throw EmptyPathError();
  double product = 1.0;
  for (double n : negativities) {
    if (!(n >= 0.0 && n <= 1.0)) {
      throw DomainError("negativity must lie in [0, 1]");
    }
    product *= n;
  }
  return (3.0 + product) / 4.0;
}

bool supports_additive_mapping(const ChannelState& ch) {
  if (std::holds_alternative<PureSchmidtChannel>(ch)) return true;
  const XState x = to_xstate(ch);
  return std::abs(x.a22) <= kAdditiveTolerance &&
         std::abs(x.a33) <= kAdditiveTolerance &&
         std::abs(x.a14.imag()) <= kAdditiveTolerance &&
         x.a14.real() >= -kAdditiveTolerance;
}

LinkWeights link_weights(const ChannelState& ch) {
  const XState x = to_xstate(ch);
  LinkWeights w;
  w.mu = x.a11 - x.a22 - x.a33 + x.a44;
  w.nu = 2.0 * x.a14.real() + 2.0 * x.a23.real();
  if (supports_additive_mapping(ch)) {
    const double n = negativity(ch);
    if (n > 0.0) w.log_neg_weight = additive_weight(std::min(n, 1.0));
  }
  return w;
}

PathObjective xstate_path_fidelity(std::span<const LinkWeights> weights) {
  if (weights.empty()) throw EmptyPathError();
  PathObjective obj;
  for (const auto& w : weights) {
    obj.mu_product *= w.mu;
    obj.nu_product *= w.nu;
  }
  obj.fidelity = (kTwoWeightOffset + obj.mu_product + obj.nu_product) / 4.0;
  return obj;
}

double werner_path_fidelity(std::span<const WernerParams> params) {
  if (params.empty()) throw EmptyPathError();
  double p_product = 1.0;
  double coherent_product = 1.0;
  for (const auto& p : params) {
    make_werner_gen(p.p_w, p.theta);  // range check
    p_product *= p.p_w;
    coherent_product *= p.p_w * std::sin(2.0 * p.theta);
  }
  return (2.0 + p_product + coherent_product) / 4.0;
}

double additive_weight(double n) {
  if (!(n > 0.0)) {
    throw DomainError("additive weight undefined for N <= 0 (unusable link)");
  }
  if (n > 1.0) throw DomainError("negativity above 1");
  return -std::log(n);
}

}  // namespace telroute
