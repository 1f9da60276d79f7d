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

#include "telroute/bellman.hpp"

#include <algorithm>
#include <limits>

#include "telroute/errors.hpp"

namespace telroute {

namespace {

struct Optimum {
  bool found = false;
  double fidelity = -std::numeric_limits<double>::infinity();  // running max
  double best_fidelity = 0.0;
  std::vector<std::size_t> best_nodes;
  std::vector<std::size_t> best_links;
  // Every path within the tie band of the running maximum.
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> optimal;
  std::vector<double> optimal_fid;
};

PathObjective objective_of(const Network& net, const std::vector<std::size_t>& links,
                           std::size_t count) {
  std::vector<LinkWeights> w;
  for (std::size_t i = 0; i < count; ++i) w.push_back(net.links()[links[i]].weights);
  return xstate_path_fidelity(w);
}

}  // namespace

Path ViolationWitness::prefix() const {
  Path p;
  for (std::size_t i = 0; i < best_to_ext.nodes.size(); ++i) {
    p.nodes.push_back(best_to_ext.nodes[i]);
    if (best_to_ext.nodes[i] == mid) break;
    p.links.push_back(best_to_ext.links[i]);
  }
  return p;
}

std::vector<ViolationWitness> check_optimal_substructure(const Network& net,
                                                         const std::string& src,
                                                         std::size_t node_cap) {
  if (net.nodes().size() > node_cap) {
    throw CapExceededError("network has " + std::to_string(net.nodes().size()) +
                           " nodes; exhaustive check capped at " +
                           std::to_string(node_cap));
  }
  const std::size_t s = net.node_index(src);
  const detail::Adjacency adj(net);
  std::vector<Optimum> opt(net.nodes().size());

  detail::for_each_simple_path(
      net, adj, s,
      [&](const std::vector<std::size_t>& nodes,
          const std::vector<std::size_t>& links, double mu, double nu) {
        const double fid = (kTwoWeightOffset + mu + nu) / 4.0;
        Optimum& o = opt[nodes.back()];
        if (!o.found || fid > o.fidelity + kFidelityTieTolerance) {
          o.optimal.clear();
          o.optimal_fid.clear();
        }
        if (!o.found || fid >= o.fidelity - kFidelityTieTolerance) {
          o.optimal.emplace_back(nodes, links);
          o.optimal_fid.push_back(fid);
        }
        if (!o.found || detail::compare_routes(net, fid, nodes, links, o.best_fidelity,
                                               o.best_nodes, o.best_links) < 0) {
          o.found = true;
          o.best_fidelity = fid;
          o.best_nodes = nodes;
          o.best_links = links;
        }
        o.fidelity = std::max(o.fidelity, fid);
        return true;
      });

  std::vector<ViolationWitness> out;
  for (std::size_t ext = 0; ext < opt.size(); ++ext) {
    const Optimum& o = opt[ext];
    if (!o.found) continue;
    std::vector<bool> reported(net.nodes().size(), false);
    for (std::size_t k = 0; k < o.optimal.size(); ++k) {
      if (o.optimal_fid[k] < o.fidelity - kFidelityTieTolerance) continue;
      const auto& [nodes, links] = o.optimal[k];
      for (std::size_t pos = 1; pos + 1 < nodes.size(); ++pos) {
        const std::size_t mid = nodes[pos];
        if (reported[mid]) continue;
        const PathObjective prefix = objective_of(net, links, pos);
        const Optimum& m = opt[mid];
        if (prefix.fidelity >= m.fidelity - kViolationMargin) continue;
        reported[mid] = true;
        ViolationWitness w{net,
                           src,
                           net.nodes()[mid],
                           net.nodes()[ext],
                           detail::to_path(net, m.best_nodes, m.best_links),
                           detail::to_path(net, nodes, links),
                           objective_of(net, m.best_links, m.best_links.size()),
                           objective_of(net, links, links.size()),
                           prefix};
        out.push_back(std::move(w));
      }
    }
  }
  // Ordered by ext, then by mid.
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    const auto ea = net.node_index(a.ext), eb = net.node_index(b.ext);
    if (ea != eb) return ea < eb;
    return net.node_index(a.mid) < net.node_index(b.mid);
  });
  return out;
}

bool revalidate_witness(const ViolationWitness& w) {
  const Network& net = w.network;
  for (const auto& l : net.links()) {
    if (!check_density_matrix(to_density_matrix(to_xstate(l.channel))).ok()) {
      return false;
    }
  }
  auto fidelity_from_channels = [&](const Path& p) {
    std::vector<LinkWeights> ws;
    for (const auto& ch : path_channels(net, p)) ws.push_back(link_weights(ch));
    return xstate_path_fidelity(ws).fidelity;
  };
  const Path prefix = w.prefix();
  if (prefix.nodes.back() != w.mid || prefix == w.best_to_mid) return false;

  double best_mid = -1.0;
  for (const auto& e : enumerate_simple_paths(net, w.source, w.mid)) {
    best_mid = std::max(best_mid, fidelity_from_channels(e.path));
  }
  double best_ext = -1.0;
  for (const auto& e : enumerate_simple_paths(net, w.source, w.ext)) {
    best_ext = std::max(best_ext, fidelity_from_channels(e.path));
  }
  const double f_mid = fidelity_from_channels(w.best_to_mid);
  const double f_ext = fidelity_from_channels(w.best_to_ext);
  const double f_prefix = fidelity_from_channels(prefix);
  return f_mid >= best_mid - kFidelityTieTolerance &&
         f_ext >= best_ext - kFidelityTieTolerance &&
         f_prefix < f_mid - kViolationMargin;
}

std::optional<ViolationWitness> find_violation(std::uint64_t seed, int attempts,
                                               const ViolationSearch& search) {
  if (attempts < 1) throw DomainError("find_violation needs attempts >= 1");
  if (search.min_nodes < 2 || search.max_nodes < search.min_nodes) {
    throw DomainError("invalid node-count range for violation search");
  }
  const auto span = static_cast<std::uint64_t>(search.max_nodes - search.min_nodes + 1);
  for (int i = 0; i < attempts; ++i) {
    const std::uint64_t attempt_seed = mix_seed(seed, static_cast<std::uint64_t>(i));
    Rng pick(attempt_seed);
    const int n = search.min_nodes + static_cast<int>(pick.below(span));
    const Network net =
        random_network(mix_seed(attempt_seed, 0), n, search.link_density, search.family);
    for (const auto& src : net.nodes()) {
      auto witnesses = check_optimal_substructure(net, src);
      if (!witnesses.empty()) return std::move(witnesses.front());
    }
  }
  return std::nullopt;
}

}  // namespace telroute
