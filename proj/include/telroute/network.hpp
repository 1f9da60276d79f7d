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
#include <map>
#include <string>
#include <vector>

#include "telroute/channel.hpp"
#include "telroute/fidmodel.hpp"

namespace telroute {

struct Link {
  std::string id;
  std::string a;
  std::string b;
  ChannelState channel;
  LinkWeights weights;  // cached at insertion
  bool additive = false;  // supports_additive_mapping(channel)

  const std::string& other(const std::string& node) const {
    return node == a ? b : a;
  }
  bool touches(const std::string& node) const { return node == a || node == b; }
};

/// Undirected multigraph of entangled links. Every inserted channel is
/// validated; ids are unique and self-loops are rejected.
class Network {
 public:
  void add_node(const std::string& id);
  const Link& add_link(std::string id, const std::string& a, const std::string& b,
                       ChannelState channel);

  bool has_node(const std::string& id) const { return index_.count(id) != 0; }
  bool has_link(const std::string& id) const { return link_index_.count(id) != 0; }

  /// Node ids in ascending order.
  const std::vector<std::string>& nodes() const noexcept { return nodes_; }
  /// Links in insertion order.
  const std::vector<Link>& links() const noexcept { return links_; }

  const Link& link(const std::string& id) const;
  std::size_t node_index(const std::string& id) const;
  std::size_t link_position(const std::string& id) const;

  /// Positions into links() of the links incident to `node`.
  std::vector<std::size_t> incident(const std::string& node) const;

  Network without_links(const std::vector<std::string>& ids) const;

  bool connected() const;

 private:
  std::vector<std::string> nodes_;
  std::map<std::string, std::size_t> index_;
  std::vector<Link> links_;
  std::map<std::string, std::size_t> link_index_;
};

/// A simple path: links in traversal order plus the node sequence they
/// imply (nodes.size() == links.size() + 1).
struct Path {
  std::vector<std::string> links;
  std::vector<std::string> nodes;

  std::size_t hops() const noexcept { return links.size(); }
  bool empty() const noexcept { return links.empty(); }
  std::string str() const;

  friend bool operator==(const Path&, const Path&) = default;
};

/// Builds a Path from a start node and link ids; throws DomainError when the
/// links do not chain or a node repeats.
Path make_path(const Network& net, const std::string& start,
               const std::vector<std::string>& link_ids);

std::vector<ChannelState> path_channels(const Network& net, const Path& path);
std::vector<LinkWeights> path_weights(const Network& net, const Path& path);
PathObjective path_objective(const Network& net, const Path& path);

}  // namespace telroute
