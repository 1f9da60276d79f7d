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

#include "telroute/telesim.hpp"

#include <array>
#include <cmath>

#include "telroute/errors.hpp"

namespace telroute {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Bell vectors over (input qubit, first channel qubit), index 2*q0 + q1.
const std::array<std::array<cplx, 4>, 4> kBellVectors = {{
    {kInvSqrt2, 0.0, 0.0, kInvSqrt2},   // Phi+
    {kInvSqrt2, 0.0, 0.0, -kInvSqrt2},  // Phi-
    {0.0, kInvSqrt2, kInvSqrt2, 0.0},   // Psi+
    {0.0, kInvSqrt2, -kInvSqrt2, 0.0},  // Psi-
}};

const std::array<CMatrix, 4>& corrections() {
  static const std::array<CMatrix, 4> kCorrections = {
      CMatrix::identity(2),
      CMatrix(2, {1.0, 0.0, 0.0, -1.0}),   // Z
      CMatrix(2, {0.0, 1.0, 1.0, 0.0}),    // X
      CMatrix(2, {0.0, -1.0, 1.0, 0.0}),   // XZ
  };
  return kCorrections;
}

DensityMatrix teleport_with_matrix(const CMatrix& input, const CMatrix& channel) {
  // Joint register ordered (input, channel qubit 1, channel qubit 2).
  const CMatrix joint = kron(input, channel);
  CMatrix out(2);
  for (std::size_t m = 0; m < 4; ++m) {
    const auto& v = kBellVectors[m];
    // (<m| x I) joint (|m> x I): project and trace out the measured pair.
    CMatrix branch(2);
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t bp = 0; bp < 2; ++bp) {
        cplx acc = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
          if (v[i] == cplx{}) continue;
          for (std::size_t j = 0; j < 4; ++j) {
            if (v[j] == cplx{}) continue;
            acc += std::conj(v[i]) * v[j] * joint(2 * i + b, 2 * j + bp);
          }
        }
        branch(b, bp) = acc;
      }
    }
    const CMatrix& u = corrections()[m];
    out += u * branch * u.adjoint();
  }
  return DensityMatrix(std::move(out));
}

}  // namespace

std::vector<cplx> AzimuthalState::ket() const {
  return {std::cos(phi), std::sin(phi)};
}

DensityMatrix AzimuthalState::density() const {
  return DensityMatrix::from_ket(ket());
}

DensityMatrix teleport_once(const DensityMatrix& input, const ChannelState& channel) {
  if (input.dim() != 2) throw DomainError("teleport input must be one qubit");
  validate_density_matrix(input);
  return teleport_with_matrix(input.matrix(), to_density_matrix(channel).matrix());
}

DensityMatrix teleport_chain(const DensityMatrix& input,
                             std::span<const ChannelState> channels) {
  if (channels.empty()) throw EmptyPathError();
  if (input.dim() != 2) throw DomainError("teleport input must be one qubit");
  validate_density_matrix(input);
  std::vector<CMatrix> mats;
  mats.reserve(channels.size());
  for (const auto& ch : channels) mats.push_back(to_density_matrix(ch).matrix());
  CMatrix state = input.matrix();
  for (const auto& ch : mats) state = teleport_with_matrix(state, ch).matrix();
  return DensityMatrix(std::move(state));
}

double state_fidelity(const std::vector<cplx>& ket, const DensityMatrix& rho) {
  cplx acc = 0.0;
  for (std::size_t r = 0; r < ket.size(); ++r) {
    for (std::size_t c = 0; c < ket.size(); ++c) {
      acc += std::conj(ket[r]) * rho(r, c) * ket[c];
    }
  }
  return acc.real();
}

FidelityEstimate average_azimuthal_fidelity(std::span<const ChannelState> channels,
                                            int nodes) {
  if (channels.empty()) throw EmptyPathError();
  if (nodes < 5) throw DomainError("azimuthal quadrature needs at least 5 nodes");
  std::vector<CMatrix> mats;
  mats.reserve(channels.size());
  for (const auto& ch : channels) mats.push_back(to_density_matrix(ch).matrix());

  double sum = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const AzimuthalState psi{2.0 * kPi * k / nodes};
    CMatrix state = psi.density().matrix();
    for (const auto& ch : mats) state = teleport_with_matrix(state, ch).matrix();
    sum += state_fidelity(psi.ket(), DensityMatrix(std::move(state)));
  }
  return FidelityEstimate{sum / nodes, nodes,
                          FidelityEstimate::Method::kExactQuadrature};
}

}  // namespace telroute
