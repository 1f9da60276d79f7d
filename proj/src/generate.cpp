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

#include "telroute/generate.hpp"

#include <cmath>

#include "telroute/errors.hpp"

namespace telroute {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ChannelFamily parse_family(const std::string& name) {
  if (name == "pure") return ChannelFamily::kPure;
  if (name == "werner") return ChannelFamily::kWerner;
  if (name == "x") return ChannelFamily::kX;
  throw DomainError("unknown channel family '" + name + "' (pure|werner|x)");
}

std::string family_name(ChannelFamily family) {
  switch (family) {
    case ChannelFamily::kPure: return "pure";
    case ChannelFamily::kWerner: return "werner";
    case ChannelFamily::kX: return "x";
  }
  return "?";
}

namespace {

XState sample_populations(Rng& rng) {
  // Normalized exponentials are uniform on the simplex.
  double e[4];
  double total = 0.0;
  for (double& v : e) {
    v = -std::log(1.0 - rng.uniform());
    total += v;
  }
  XState x;
  x.a11 = e[0] / total;
  x.a22 = e[1] / total;
  x.a33 = e[2] / total;
  x.a44 = 1.0 - x.a11 - x.a22 - x.a33;
  if (x.a44 < 0.0) x.a44 = 0.0;
  return x;
}

}  // namespace

XState sample_xstate(Rng& rng) {
  XState x = sample_populations(rng);
  const double r14 = rng.uniform() * std::sqrt(x.a11 * x.a44);
  const double r23 = rng.uniform() * std::sqrt(x.a22 * x.a33);
  x.a14 = std::polar(r14, rng.uniform(0.0, 2.0 * kPi));
  x.a23 = std::polar(r23, rng.uniform(0.0, 2.0 * kPi));
  return x;
}

ChannelState sample_channel(Rng& rng, ChannelFamily family) {
  switch (family) {
    case ChannelFamily::kPure:
      return PureSchmidtChannel{rng.uniform() * kQuarterPi};
    case ChannelFamily::kWerner: {
      const double p = rng.uniform();
      return WernerGenChannel{p, rng.uniform() * kQuarterPi};
    }
    case ChannelFamily::kX:
      return sample_xstate(rng);
  }
  throw DomainError("unknown channel family");
}

Network random_network(std::uint64_t seed, int node_count, double link_density,
                       ChannelFamily family) {
  if (node_count < 2) throw DomainError("random_network needs at least 2 nodes");
  if (!(link_density > 0.0 && link_density <= 1.0)) {
    throw DomainError("link density must lie in (0, 1]");
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < kConnectRetries; ++attempt) {
    Network net;
    for (int i = 0; i < node_count; ++i) net.add_node("n" + std::to_string(i));
    int next_id = 0;
    for (int i = 0; i < node_count; ++i) {
      for (int j = i + 1; j < node_count; ++j) {
        if (rng.uniform() >= link_density) continue;
        net.add_link("l" + std::to_string(next_id++), "n" + std::to_string(i),
                     "n" + std::to_string(j), sample_channel(rng, family));
      }
    }
    if (net.connected()) return net;
  }
  throw GenerationError("no connected network after " +
                        std::to_string(kConnectRetries) + " draws");
}

}  // namespace telroute
