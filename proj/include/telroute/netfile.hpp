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

#include <string>
#include <vector>

#include "json.hpp"
#include "telroute/channel.hpp"
#include "telroute/network.hpp"

namespace telroute {

inline constexpr int kNetworkFormatVersion = 1;

/// Raw contents of a network file. Parsing checks shape and types only;
/// physicality is checked by to_network (or reported by cmd_validate).
struct NetworkFile {
  struct LinkSpec {
    std::string id;
    std::string from;
    std::string to;
    ChannelState channel;
  };

  int format_version = kNetworkFormatVersion;
  std::vector<std::string> nodes;
  std::vector<LinkSpec> links;
};

/// Channel literals:
///   {"type":"pure","theta":x}
///   {"type":"bell"}
///   {"type":"werner","p_w":p,"theta":x}
///   {"type":"x","a11":..,"a22":..,"a33":..,"a44":..,
///    "a14_re":..,"a14_im":..,"a23_re":..,"a23_im":..}   (*_im optional)
/// Unknown keys are ParseErrors; `context` prefixes error locations.
ChannelState parse_channel(const nlohmann::json& j, const std::string& context = "channel");
nlohmann::json channel_to_json(const ChannelState& ch);

NetworkFile parse_network_file(const nlohmann::json& j);
/// Reports JSON syntax errors with line and column.
NetworkFile parse_network_text(const std::string& text);
NetworkFile read_network_file(const std::string& path);

nlohmann::json to_json(const NetworkFile& file);

/// Throws ValidationError on structural or physical defects.
Network to_network(const NetworkFile& file);
NetworkFile to_network_file(const Network& net);

std::string read_text_file(const std::string& path);

}  // namespace telroute
