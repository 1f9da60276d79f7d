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

#include <span>
#include <vector>

#include "telroute/channel.hpp"

namespace telroute {

/// cos(phi)|0> + sin(phi)|1>.
struct AzimuthalState {
  double phi = 0.0;

  std::vector<cplx> ket() const;
  DensityMatrix density() const;
};

struct FidelityEstimate {
  enum class Method { kExactQuadrature, kFormula };

  double value = 0.0;
  int sample_count = 0;
  Method method = Method::kExactQuadrature;
};

/// Default quadrature size for the azimuthal average. The fidelity is a
/// trigonometric polynomial of degree <= 4 in phi, so any K >= 5 equispaced
/// nodes integrate it exactly.
inline constexpr int kAzimuthalNodes = 8;

/// One hop of the standard protocol: Bell measurement on (input, first
/// channel qubit) with corrections I, Z, X, XZ for outcomes
/// Phi+, Phi-, Psi+, Psi-, all four outcomes summed.
DensityMatrix teleport_once(const DensityMatrix& input, const ChannelState& channel);

/// Left fold of teleport_once. Throws EmptyPathError on an empty list.
DensityMatrix teleport_chain(const DensityMatrix& input,
                             std::span<const ChannelState> channels);

FidelityEstimate average_azimuthal_fidelity(
    std::span<const ChannelState> channels, int nodes = kAzimuthalNodes);

/// <psi| rho |psi> for a pure single-qubit ket.
double state_fidelity(const std::vector<cplx>& ket, const DensityMatrix& rho);

}  // namespace telroute
