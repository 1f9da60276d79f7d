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

#include "telroute/routing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "telroute/errors.hpp"

namespace telroute {

namespace detail {

Adjacency::Adjacency(const Network& net) : edges(net.nodes().size()) {
  const auto& links = net.links();
  for (std::size_t i = 0; i < links.size(); ++i) {
    const std::size_t a = net.node_index(links[i].a);
    const std::size_t b = net.node_index(links[i].b);
    edges[a].push_back({b, i});
    edges[b].push_back({a, i});
  }
  for (auto& list : edges) {
    std::sort(list.begin(), list.end(), [&](const Edge& x, const Edge& y) {
      if (x.to != y.to) return x.to < y.to;
      return links[x.link].id < links[y.link].id;
    });
  }
}

namespace {

struct Walker {
  const Network& net;
  const Adjacency& adj;
  const PathVisitor& visit;
  std::vector<bool> on_path;
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> links;

  void descend(std::size_t here, double mu, double nu) {
    for (const auto& e : adj.edges[here]) {
      if (on_path[e.to]) continue;
      const LinkWeights& w = net.links()[e.link].weights;
      const double next_mu = mu * w.mu;
      const double next_nu = nu * w.nu;
      nodes.push_back(e.to);
      links.push_back(e.link);
      on_path[e.to] = true;
      if (visit(nodes, links, next_mu, next_nu)) descend(e.to, next_mu, next_nu);
      on_path[e.to] = false;
      nodes.pop_back();
      links.pop_back();
    }
  }
};

}  // namespace

void for_each_simple_path(const Network& net, const Adjacency& adj,
                          std::size_t src, const PathVisitor& visit) {
  Walker w{net, adj, visit, std::vector<bool>(net.nodes().size(), false), {src}, {}};
  w.on_path[src] = true;
  w.descend(src, 1.0, 1.0);
}

Path to_path(const Network& net, const std::vector<std::size_t>& nodes,
             const std::vector<std::size_t>& links) {
  Path p;
  p.nodes.reserve(nodes.size());
  for (std::size_t n : nodes) p.nodes.push_back(net.nodes()[n]);
  p.links.reserve(links.size());
  for (std::size_t l : links) p.links.push_back(net.links()[l].id);
  return p;
}

int compare_routes(const Network& net, double fa, const std::vector<std::size_t>& na,
                   const std::vector<std::size_t>& la, double fb,
                   const std::vector<std::size_t>& nb,
                   const std::vector<std::size_t>& lb) {
  if (fa > fb + kFidelityTieTolerance) return -1;
  if (fb > fa + kFidelityTieTolerance) return 1;
  if (la.size() != lb.size()) return la.size() < lb.size() ? -1 : 1;
  // Node indices follow the sorted node ids.
  if (na != nb) return na < nb ? -1 : 1;
  for (std::size_t i = 0; i < la.size(); ++i) {
    const auto& ia = net.links()[la[i]].id;
    const auto& ib = net.links()[lb[i]].id;
    if (ia != ib) return ia < ib ? -1 : 1;
  }
  return 0;
}

}  // namespace detail

namespace {

std::vector<std::size_t> node_indices(const Network& net, const Path& p) {
  std::vector<std::size_t> out;
  for (const auto& n : p.nodes) out.push_back(net.node_index(n));
  return out;
}

std::vector<std::size_t> link_positions(const Network& net, const Path& p) {
  std::vector<std::size_t> out;
  for (const auto& l : p.links) out.push_back(net.link_position(l));
  return out;
}

void check_endpoints(const Network& net, const std::string& src,
                     const std::string& dst) {
  if (!net.has_node(src)) throw DomainError("unknown source node '" + src + "'");
  if (!net.has_node(dst)) throw DomainError("unknown destination node '" + dst + "'");
  if (src == dst) throw DomainError("source and destination coincide");
}

NoPathError no_path(const std::string& src, const std::string& dst) {
  return NoPathError("no path from " + src + " to " + dst);
}

}  // namespace

std::string method_name(RouteResult::Method method) {
  return method == RouteResult::Method::kDijkstra ? "dijkstra" : "exact";
}

RouteMethod parse_route_method(const std::string& name) {
  if (name == "auto") return RouteMethod::kAuto;
  if (name == "dijkstra") return RouteMethod::kDijkstra;
  if (name == "exact") return RouteMethod::kExact;
  throw DomainError("unknown route method '" + name + "' (auto|dijkstra|exact)");
}

bool route_precedes(const Network& net, const Path& a, double fidelity_a,
                    const Path& b, double fidelity_b) {
  return detail::compare_routes(net, fidelity_a, node_indices(net, a),
                                link_positions(net, a), fidelity_b,
                                node_indices(net, b), link_positions(net, b)) < 0;
}

std::optional<std::string> first_non_additive_link(const Network& net) {
  for (const auto& l : net.links()) {
    if (!l.additive) return l.id;
  }
  return std::nullopt;
}

RouteResult dijkstra_route(const Network& net, const std::string& src,
                           const std::string& dst) {
  check_endpoints(net, src, dst);
  if (auto bad = first_non_additive_link(net)) throw NotAdditiveError(*bad);

  struct Label {
    bool reached = false;
    bool settled = false;
    double weight = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> nodes;
    std::vector<std::size_t> links;
  };
  // Weight first (with tie tolerance), then hops, then node and link ids.
  auto precedes = [&](const Label& x, const Label& y) {
    if (std::abs(x.weight - y.weight) > kFidelityTieTolerance) {
      return x.weight < y.weight;
    }
    return detail::compare_routes(net, 0.0, x.nodes, x.links, 0.0, y.nodes,
                                  y.links) < 0;
  };

  const detail::Adjacency adj(net);
  const std::size_t s = net.node_index(src);
  const std::size_t t = net.node_index(dst);
  std::vector<Label> labels(net.nodes().size());
  labels[s].reached = true;
  labels[s].weight = 0.0;
  labels[s].nodes = {s};

  while (true) {
    std::size_t u = labels.size();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!labels[i].reached || labels[i].settled) continue;
      if (u == labels.size() || precedes(labels[i], labels[u])) u = i;
    }
    if (u == labels.size()) break;
    labels[u].settled = true;
    if (u == t) break;
    for (const auto& e : adj.edges[u]) {
      if (labels[e.to].settled) continue;
      const Link& link = net.links()[e.link];
      if (!link.weights.log_neg_weight) continue;  // N = 0: unusable
      Label cand;
      cand.reached = true;
      cand.weight = labels[u].weight + *link.weights.log_neg_weight;
      cand.nodes = labels[u].nodes;
      cand.nodes.push_back(e.to);
      cand.links = labels[u].links;
      cand.links.push_back(e.link);
      if (!labels[e.to].reached || precedes(cand, labels[e.to])) {
        labels[e.to] = std::move(cand);
      }
    }
  }
  if (!labels[t].settled) throw no_path(src, dst);

  RouteResult result;
  result.path = detail::to_path(net, labels[t].nodes, labels[t].links);
  result.objective = path_objective(net, result.path);
  result.method = RouteResult::Method::kDijkstra;
  return result;
}

RouteResult exact_route(const Network& net, const std::string& src,
                        const std::string& dst) {
  check_endpoints(net, src, dst);
  const detail::Adjacency adj(net);
  const std::size_t t = net.node_index(dst);

  bool found = false;
  double best_fid = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> best_nodes;
  std::vector<std::size_t> best_links;

  detail::for_each_simple_path(
      net, adj, net.node_index(src),
      [&](const std::vector<std::size_t>& nodes,
          const std::vector<std::size_t>& links, double mu, double nu) {
        const double bound = (kTwoWeightOffset + std::abs(mu) + std::abs(nu)) / 4.0;
        if (found && bound < best_fid - kFidelityTieTolerance) return false;
        if (nodes.back() != t) return true;
        const double fid = (kTwoWeightOffset + mu + nu) / 4.0;
        if (!found || detail::compare_routes(net, fid, nodes, links, best_fid,
                                             best_nodes, best_links) < 0) {
          found = true;
          best_fid = fid;
          best_nodes = nodes;
          best_links = links;
        }
        return false;  // simple paths ending at dst do not continue
      });
  if (!found) throw no_path(src, dst);

  RouteResult result;
  result.path = detail::to_path(net, best_nodes, best_links);
  result.objective = path_objective(net, result.path);
  result.method = RouteResult::Method::kExact;
  return result;
}

RouteResult route(const Network& net, const std::string& src,
                  const std::string& dst, RouteMethod method) {
  switch (method) {
    case RouteMethod::kDijkstra: return dijkstra_route(net, src, dst);
    case RouteMethod::kExact: return exact_route(net, src, dst);
    case RouteMethod::kAuto:
      return first_non_additive_link(net) ? exact_route(net, src, dst)
                                          : dijkstra_route(net, src, dst);
  }
  throw DomainError("unknown route method");
}

std::vector<EnumeratedPath> enumerate_simple_paths(const Network& net,
                                                   const std::string& src,
                                                   const std::string& dst) {
  check_endpoints(net, src, dst);
  const detail::Adjacency adj(net);
  const std::size_t t = net.node_index(dst);
  std::vector<EnumeratedPath> out;
  detail::for_each_simple_path(
      net, adj, net.node_index(src),
      [&](const std::vector<std::size_t>& nodes,
          const std::vector<std::size_t>& links, double mu, double nu) {
        if (nodes.back() != t) return true;
        out.push_back({detail::to_path(net, nodes, links),
                       {mu, nu, (kTwoWeightOffset + mu + nu) / 4.0}});
        return false;
      });
  return out;
}

}  // namespace telroute
