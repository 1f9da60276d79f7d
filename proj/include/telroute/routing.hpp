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

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "telroute/fidmodel.hpp"
#include "telroute/network.hpp"

namespace telroute {

struct RouteResult {
  enum class Method { kDijkstra, kExact };

  Path path;
  PathObjective objective;
  Method method = Method::kExact;
};

enum class RouteMethod { kAuto, kDijkstra, kExact };

std::string method_name(RouteResult::Method method);
RouteMethod parse_route_method(const std::string& name);

/// Fidelities closer than this are ties, resolved by hop count and then by
/// the lexicographic node (then link id) sequence.
inline constexpr double kFidelityTieTolerance = 1e-12;

/// Strict "a is preferred over b" under the routing order.
bool route_precedes(const Network& net, const Path& a, double fidelity_a,
                    const Path& b, double fidelity_b);

/// First link that lacks the additive mapping, if any.
std::optional<std::string> first_non_additive_link(const Network& net);

/// Minimizes sum(-ln N) over links with N > 0. Throws NotAdditiveError if
/// any link lacks the additive mapping, NoPathError if dst is unreachable.
RouteResult dijkstra_route(const Network& net, const std::string& src,
                           const std::string& dst);

/// Maximizes (2 + prod mu + prod nu)/4 over simple paths by depth-first
/// branch and bound. A partial path is cut once (2 + |Pmu| + |Pnu|)/4
/// falls strictly below the incumbent, which is safe because every
/// remaining factor has magnitude <= 1.
RouteResult exact_route(const Network& net, const std::string& src,
                        const std::string& dst);

/// kAuto picks Dijkstra iff every link supports the additive mapping.
RouteResult route(const Network& net, const std::string& src,
                  const std::string& dst, RouteMethod method = RouteMethod::kAuto);

struct EnumeratedPath {
  Path path;
  PathObjective objective;
};

/// Every simple src->dst path, in depth-first order, with no pruning.
std::vector<EnumeratedPath> enumerate_simple_paths(const Network& net,
                                                   const std::string& src,
                                                   const std::string& dst);

namespace detail {

/// Index view of a network: adjacency sorted by (neighbor id, link id).
struct Adjacency {
  struct Edge {
    std::size_t to;
    std::size_t link;
  };
  explicit Adjacency(const Network& net);
  std::vector<std::vector<Edge>> edges;
};

/// Callback for every simple path leaving src (including the single-node
/// prefix, which is skipped). Returning false stops descending from that
/// path.
using PathVisitor =
    std::function<bool(const std::vector<std::size_t>& nodes,
                       const std::vector<std::size_t>& links, double mu_product,
                       double nu_product)>;

void for_each_simple_path(const Network& net, const Adjacency& adj,
                          std::size_t src, const PathVisitor& visit);

Path to_path(const Network& net, const std::vector<std::size_t>& nodes,
             const std::vector<std::size_t>& links);

/// -1 if a precedes b, 1 if b precedes a, 0 if identical in every key.
int compare_routes(const Network& net, double fa, const std::vector<std::size_t>& na,
                   const std::vector<std::size_t>& la, double fb,
                   const std::vector<std::size_t>& nb,
                   const std::vector<std::size_t>& lb);

}  // namespace detail
}  // namespace telroute
