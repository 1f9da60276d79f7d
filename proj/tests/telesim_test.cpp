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

#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "telroute/errors.hpp"
#include "telroute/fidmodel.hpp"
#include "telroute/generate.hpp"

namespace telroute {
namespace {

// Independent state-vector oracle for a pure input and a pure Schmidt
// channel: run the three-qubit circuit (CNOT, H, measure, correct) branch by
// branch and accumulate the overlap with the input.
double statevector_fidelity(double phi, double theta) {
  const double a = std::cos(phi), b = std::sin(phi);
  const double c = std::cos(theta), s = std::sin(theta);
  // Amplitudes indexed q0 q1 q2 (input, channel 1, channel 2).
  std::array<double, 8> psi{};
  psi[0b000] = a * c;
  psi[0b011] = a * s;
  psi[0b100] = b * c;
  psi[0b111] = b * s;
  // CNOT q0 -> q1.
  std::array<double, 8> t{};
  for (int i = 0; i < 8; ++i) t[(i & 0b100) ? (i ^ 0b010) : i] = psi[i];
  // Hadamard on q0.
  std::array<double, 8> u{};
  const double h = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < 8; ++i) {
    const int lo = i & 0b011;
    if (i & 0b100) {
      u[lo] += h * t[i];
      u[lo | 0b100] -= h * t[i];
    } else {
      u[lo] += h * t[i];
      u[lo | 0b100] += h * t[i];
    }
  }
  double fidelity = 0.0;
  for (int m0 = 0; m0 < 2; ++m0) {
    for (int m1 = 0; m1 < 2; ++m1) {
      double b0 = u[(m0 << 2) | (m1 << 1) | 0];
      double b1 = u[(m0 << 2) | (m1 << 1) | 1];
      if (m1) std::swap(b0, b1);  // X^{m1}
      if (m0) b1 = -b1;           // Z^{m0}
      const double overlap = a * b0 + b * b1;
      fidelity += overlap * overlap;  // unnormalized branch weight included
    }
  }
  return fidelity;
}

TEST(TeleportOnce, BellChannelIsIdentity) {
  for (double phi : {0.0, 0.4, 1.3, 2.9}) {
    const AzimuthalState psi{phi};
    const DensityMatrix out = teleport_once(psi.density(), make_bell_channel());
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        EXPECT_NEAR(std::abs(out(r, c) - psi.density()(r, c)), 0.0, 1e-15);
      }
    }
  }
  // Complex input too.
  const DensityMatrix in = DensityMatrix::from_ket({std::sqrt(0.3), cplx(0, std::sqrt(0.7))});
  const DensityMatrix out = teleport_once(in, make_bell_channel());
  EXPECT_NEAR(std::abs(out(0, 1) - in(0, 1)), 0.0, 1e-15);
}

TEST(TeleportOnce, MaximallyMixedChannel) {
  const DensityMatrix out = teleport_once(AzimuthalState{0.0}.density(), make_werner_gen(0.0, 0.2));
  EXPECT_NEAR(out(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(out(1, 1).real(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(out(0, 1)), 0.0, 1e-15);
}

TEST(TeleportOnce, PlusStateThroughPiOverEight) {
  const AzimuthalState plus{kQuarterPi};
  const DensityMatrix out = teleport_once(plus.density(), make_pure_channel(kPi / 8));
  const double f = state_fidelity(plus.ket(), out);
  EXPECT_NEAR(f, (1.0 + std::sin(kQuarterPi)) / 2.0, 1e-14);
  EXPECT_NEAR(f, statevector_fidelity(kQuarterPi, kPi / 8), 1e-14);
  EXPECT_NEAR(f, 0.85355339059327, 1e-12);
}

TEST(TeleportOnce, AgreesWithStatevectorOracle) {
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const double phi = rng.uniform(0, 2 * kPi);
    const double theta = rng.uniform(0, kQuarterPi);
    const AzimuthalState psi{phi};
    const double f = state_fidelity(psi.ket(), teleport_once(psi.density(), make_pure_channel(theta)));
    EXPECT_NEAR(f, statevector_fidelity(phi, theta), 1e-13);
  }
}

TEST(TeleportOnce, OutputIsValidDensityMatrix) {
  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const ChannelState ch = sample_xstate(rng);
    const DensityMatrix in = AzimuthalState{rng.uniform(0, 2 * kPi)}.density();
    EXPECT_NO_THROW(validate_density_matrix(teleport_once(in, ch)));
  }
}

TEST(TeleportChain, EmptyIsError) {
  const std::vector<ChannelState> none;
  EXPECT_THROW(teleport_chain(AzimuthalState{}.density(), none), EmptyPathError);
  EXPECT_THROW(average_azimuthal_fidelity(none), EmptyPathError);
}

TEST(TeleportChain, BellBellIsIdentity) {
  const std::vector<ChannelState> chain{make_bell_channel(), make_bell_channel()};
  const DensityMatrix in = AzimuthalState{0.7}.density();
  const DensityMatrix out = teleport_chain(in, chain);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      EXPECT_NEAR(std::abs(out(r, c) - in(r, c)), 0.0, 1e-15);
    }
  }
}

TEST(TeleportChain, PurePairMatchesProductLaw) {
  for (double t1 : {0.1, 0.4, 0.7}) {
    for (double t2 : {0.05, 0.3, kQuarterPi}) {
      const std::vector<ChannelState> chain{make_pure_channel(t1), make_pure_channel(t2)};
      EXPECT_NEAR(average_azimuthal_fidelity(chain).value,
                  (3 + std::sin(2 * t1) * std::sin(2 * t2)) / 4, 1e-12);
    }
  }
}

TEST(AverageFidelity, SingleLinkLaws) {
  const std::vector<ChannelState> bell{make_bell_channel()};
  const FidelityEstimate e = average_azimuthal_fidelity(bell);
  EXPECT_NEAR(e.value, 1.0, 1e-15);
  EXPECT_EQ(e.sample_count, 8);
  EXPECT_EQ(e.method, FidelityEstimate::Method::kExactQuadrature);

  for (int i = 0; i <= 20; ++i) {
    const double theta = kQuarterPi * i / 20;
    const std::vector<ChannelState> one{make_pure_channel(theta)};
    EXPECT_NEAR(average_azimuthal_fidelity(one).value, (3 + std::sin(2 * theta)) / 4, 1e-10);
  }
  const std::vector<ChannelState> werner{make_werner_gen(0.9, kQuarterPi)};
  EXPECT_NEAR(average_azimuthal_fidelity(werner).value, 0.95, 1e-12);
}

TEST(AverageFidelity, QuadratureSizeIndependent) {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    std::vector<ChannelState> chain;
    const int len = 1 + static_cast<int>(rng.below(3));
    for (int k = 0; k < len; ++k) chain.push_back(sample_xstate(rng));
    EXPECT_NEAR(average_azimuthal_fidelity(chain, 8).value,
                average_azimuthal_fidelity(chain, 16).value, 1e-13);
  }
}

TEST(AverageFidelity, OrderIrrelevant) {
  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    const std::vector<ChannelState> ab{sample_xstate(rng), sample_xstate(rng)};
    const std::vector<ChannelState> ba{ab[1], ab[0]};
    EXPECT_NEAR(average_azimuthal_fidelity(ab).value, average_azimuthal_fidelity(ba).value,
                1e-12);
  }
}

TEST(AverageFidelity, MonotoneInTheta) {
  double last = 0.0;
  for (int i = 0; i <= 50; ++i) {
    const std::vector<ChannelState> one{make_pure_channel(kQuarterPi * i / 50)};
    const double f = average_azimuthal_fidelity(one).value;
    EXPECT_GE(f, last - 1e-15);
    last = f;
  }
}

TEST(AverageFidelity, Deterministic) {
  Rng rng(15);
  const std::vector<ChannelState> chain{sample_xstate(rng), sample_xstate(rng)};
  EXPECT_EQ(average_azimuthal_fidelity(chain).value, average_azimuthal_fidelity(chain).value);
}

}  // namespace
}  // namespace telroute
