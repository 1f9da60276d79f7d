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
#include <optional>
#include <string>
#include <vector>

#include "telroute/generate.hpp"
#include "telroute/network.hpp"
#include "telroute/routing.hpp"

namespace telroute {

/// Certified counterexample to optimal substructure: the best src->ext path
/// passes through `mid`, yet its prefix up to `mid` is strictly worse than
/// the best src->mid path.
struct ViolationWitness {
  Network network;
  std::string source;
  std::string mid;
  std::string ext;
  Path best_to_mid;
  Path best_to_ext;
  PathObjective best_to_mid_objective;
  PathObjective best_to_ext_objective;
  PathObjective prefix_objective;

  /// best_to_ext truncated at mid.
  Path prefix() const;
};

inline constexpr std::size_t kDefaultEnumerationCap = 12;
/// Required gap between the optimal and the prefix fidelity.
inline constexpr double kViolationMargin = 1e-9;

/// Exhaustive (unpruned) check from `src`. One witness per (mid, ext) pair,
/// ordered by ext then mid. Throws CapExceededError above `node_cap` nodes.
std::vector<ViolationWitness> check_optimal_substructure(
    const Network& net, const std::string& src,
    std::size_t node_cap = kDefaultEnumerationCap);

/// Recomputes every objective from the raw channels and re-runs the
/// exhaustive optimality check; true iff the witness still certifies a
/// strict violation.
bool revalidate_witness(const ViolationWitness& w);

struct ViolationSearch {
  ChannelFamily family = ChannelFamily::kX;
  int min_nodes = 4;
  int max_nodes = 6;
  double link_density = 0.5;
};

/// Attempt i draws a network from mix_seed(seed, i) and checks every source
/// node in id order. Returns the first witness; lowest attempt index wins.
std::optional<ViolationWitness> find_violation(std::uint64_t seed, int attempts,
                                               const ViolationSearch& search = {});

}  // namespace telroute
