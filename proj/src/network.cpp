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

#include "telroute/network.hpp"

#include <algorithm>
#include <set>

#include "telroute/errors.hpp"

namespace telroute {

void Network::add_node(const std::string& id) {
  if (id.empty()) throw ValidationError(ValidationError::Property::kStructure, 0, "empty node id");
  if (has_node(id)) return;
  auto pos = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  nodes_.insert(pos, id);
  index_.clear();
  for (std::size_t i = 0; i < nodes_.size(); ++i) index_[nodes_[i]] = i;
}

const Link& Network::add_link(std::string id, const std::string& a,
                              const std::string& b, ChannelState channel) {
  using P = ValidationError::Property;
  if (has_link(id)) throw ValidationError(P::kStructure, 0, "duplicate link id '" + id + "'");
  if (!has_node(a) || !has_node(b)) {
    throw ValidationError(P::kStructure, 0,
                          "link '" + id + "' references an unknown node");
  }
  if (a == b) throw ValidationError(P::kStructure, 0, "link '" + id + "' is a self-loop");
  to_density_matrix(channel);  // throws on unphysical channels
  Link link{std::move(id), a, b, channel, link_weights(channel),
            supports_additive_mapping(channel)};
  link_index_[link.id] = links_.size();
  links_.push_back(std::move(link));
  return links_.back();
}

const Link& Network::link(const std::string& id) const {
  return links_[link_position(id)];
}

std::size_t Network::node_index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw DomainError("unknown node '" + id + "'");
  return it->second;
}

std::size_t Network::link_position(const std::string& id) const {
  auto it = link_index_.find(id);
  if (it == link_index_.end()) throw DomainError("unknown link '" + id + "'");
  return it->second;
}

std::vector<std::size_t> Network::incident(const std::string& node) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < links_.size(); ++i) {
    if (links_[i].touches(node)) out.push_back(i);
  }
  return out;
}

Network Network::without_links(const std::vector<std::string>& ids) const {
  const std::set<std::string> drop(ids.begin(), ids.end());
  Network out;
  for (const auto& n : nodes_) out.add_node(n);
  for (const auto& l : links_) {
    if (drop.count(l.id)) continue;
    out.link_index_[l.id] = out.links_.size();
    out.links_.push_back(l);
  }
  return out;
}

bool Network::connected() const {
  if (nodes_.empty()) return true;
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (const auto& l : links_) {
      if (!l.touches(nodes_[u])) continue;
      const std::size_t v = node_index(l.other(nodes_[u]));
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == nodes_.size();
}

std::string Path::str() const {
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += '-';
    out += nodes[i];
  }
  return out;
}

Path make_path(const Network& net, const std::string& start,
               const std::vector<std::string>& link_ids) {
  if (!net.has_node(start)) throw DomainError("unknown node '" + start + "'");
  Path path;
  path.nodes.push_back(start);
  std::set<std::string> visited{start};
  for (const auto& id : link_ids) {
    const Link& l = net.link(id);
    const std::string& here = path.nodes.back();
    if (!l.touches(here)) {
      throw DomainError("link '" + id + "' does not continue the path at " + here);
    }
    const std::string& next = l.other(here);
    if (!visited.insert(next).second) {
      throw DomainError("path revisits node '" + next + "'");
    }
    path.links.push_back(id);
    path.nodes.push_back(next);
  }
  return path;
}

std::vector<ChannelState> path_channels(const Network& net, const Path& path) {
  std::vector<ChannelState> out;
  out.reserve(path.links.size());
  for (const auto& id : path.links) out.push_back(net.link(id).channel);
  return out;
}

std::vector<LinkWeights> path_weights(const Network& net, const Path& path) {
  std::vector<LinkWeights> out;
  out.reserve(path.links.size());
  for (const auto& id : path.links) out.push_back(net.link(id).weights);
  return out;
}

PathObjective path_objective(const Network& net, const Path& path) {
  return xstate_path_fidelity(path_weights(net, path));
}

}  // namespace telroute
