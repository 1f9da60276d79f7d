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

#include <cstdint>
#include <random>
#include <string>

#include "telroute/channel.hpp"
#include "telroute/network.hpp"

namespace telroute {

/// mt19937_64 with a portable double conversion, so seeded draws are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; derives independent child seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

enum class ChannelFamily { kPure, kWerner, kX };

ChannelFamily parse_family(const std::string& name);
std::string family_name(ChannelFamily family);

/// Valid X-state: populations uniform on the simplex, each coherence a
/// uniformly scaled fraction of its block bound with a uniform phase.
XState sample_xstate(Rng& rng);

ChannelState sample_channel(Rng& rng, ChannelFamily family);

inline constexpr int kConnectRetries = 1000;

/// Nodes "n0".."n<k-1>"; each unordered pair is linked with probability
/// `link_density`. Resamples until connected.
Network random_network(std::uint64_t seed, int node_count, double link_density,
                       ChannelFamily family);

}  // namespace telroute
