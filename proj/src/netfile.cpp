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

#include "telroute/netfile.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "telroute/errors.hpp"

namespace telroute {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& context) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw ParseError(context, "unknown key '" + key + "'");
  }
}

const json& require(const json& j, const std::string& key, const std::string& context) {
  if (!j.contains(key)) throw ParseError(context, "missing key '" + key + "'");
  return j.at(key);
}

double number(const json& j, const std::string& key, const std::string& context) {
  const json& v = require(j, key, context);
  if (!v.is_number()) throw ParseError(context + "." + key, "expected a number");
  return v.get<double>();
}

double optional_number(const json& j, const std::string& key, const std::string& context) {
  return j.contains(key) ? number(j, key, context) : 0.0;
}

std::string string_field(const json& j, const std::string& key, const std::string& context) {
  const json& v = require(j, key, context);
  if (!v.is_string()) throw ParseError(context + "." + key, "expected a string");
  return v.get<std::string>();
}

}  // namespace

ChannelState parse_channel(const json& j, const std::string& context) {
  if (!j.is_object()) throw ParseError(context, "channel must be an object");
  const std::string type = string_field(j, "type", context);
  if (type == "bell") {
    reject_unknown_keys(j, {"type"}, context);
    return make_bell_channel();
  }
  if (type == "pure") {
    reject_unknown_keys(j, {"type", "theta"}, context);
    return PureSchmidtChannel{number(j, "theta", context)};
  }
  if (type == "werner") {
    reject_unknown_keys(j, {"type", "p_w", "theta"}, context);
    return WernerGenChannel{number(j, "p_w", context), number(j, "theta", context)};
  }
  if (type == "x") {
    reject_unknown_keys(j,
                        {"type", "a11", "a22", "a33", "a44", "a14_re", "a14_im",
                         "a23_re", "a23_im"},
                        context);
    XState x;
    x.a11 = number(j, "a11", context);
    x.a22 = number(j, "a22", context);
    x.a33 = number(j, "a33", context);
    x.a44 = number(j, "a44", context);
    x.a14 = {number(j, "a14_re", context), optional_number(j, "a14_im", context)};
    x.a23 = {number(j, "a23_re", context), optional_number(j, "a23_im", context)};
    return x;
  }
  throw ParseError(context + ".type", "unknown channel type '" + type +
                                          "' (pure|bell|werner|x)");
}

json channel_to_json(const ChannelState& ch) {
  struct Visitor {
    json operator()(const PureSchmidtChannel& p) const {
      return {{"type", "pure"}, {"theta", p.theta}};
    }
    json operator()(const WernerGenChannel& w) const {
      return {{"type", "werner"}, {"p_w", w.p_w}, {"theta", w.theta}};
    }
    json operator()(const XState& x) const {
      return {{"type", "x"},
              {"a11", x.a11},
              {"a22", x.a22},
              {"a33", x.a33},
              {"a44", x.a44},
              {"a14_re", x.a14.real()},
              {"a14_im", x.a14.imag()},
              {"a23_re", x.a23.real()},
              {"a23_im", x.a23.imag()}};
    }
  };
  return std::visit(Visitor{}, ch);
}

NetworkFile parse_network_file(const json& j) {
  if (!j.is_object()) throw ParseError("", "network file must be a JSON object");
  reject_unknown_keys(j, {"format_version", "nodes", "links"}, "network");
  const json& version = require(j, "format_version", "network");
  if (!version.is_number_integer()) {
    throw ParseError("format_version", "expected an integer");
  }
  NetworkFile file;
  file.format_version = version.get<int>();
  if (file.format_version != kNetworkFormatVersion) {
    throw ParseError("format_version", "unsupported version " +
                                           std::to_string(file.format_version));
  }
  const json& nodes = require(j, "nodes", "network");
  if (!nodes.is_array()) throw ParseError("nodes", "expected an array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i].is_string()) {
      throw ParseError("nodes[" + std::to_string(i) + "]", "expected a string");
    }
    file.nodes.push_back(nodes[i].get<std::string>());
  }
  const json& links = require(j, "links", "network");
  if (!links.is_array()) throw ParseError("links", "expected an array");
  for (std::size_t i = 0; i < links.size(); ++i) {
    const std::string ctx = "links[" + std::to_string(i) + "]";
    const json& l = links[i];
    if (!l.is_object()) throw ParseError(ctx, "expected an object");
    reject_unknown_keys(l, {"id", "from", "to", "channel"}, ctx);
    file.links.push_back({string_field(l, "id", ctx), string_field(l, "from", ctx),
                          string_field(l, "to", ctx),
                          parse_channel(require(l, "channel", ctx), ctx + ".channel")});
  }
  return file;
}

NetworkFile parse_network_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column),
                     "invalid JSON");
  }
  return parse_network_file(j);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

NetworkFile read_network_file(const std::string& path) {
  return parse_network_text(read_text_file(path));
}

json to_json(const NetworkFile& file) {
  json links = json::array();
  for (const auto& l : file.links) {
    links.push_back(
        {{"id", l.id}, {"from", l.from}, {"to", l.to}, {"channel", channel_to_json(l.channel)}});
  }
  return {{"format_version", file.format_version}, {"nodes", file.nodes}, {"links", links}};
}

Network to_network(const NetworkFile& file) {
  Network net;
  for (const auto& n : file.nodes) {
    if (net.has_node(n)) {
      throw ValidationError(ValidationError::Property::kStructure, 0,
                            "duplicate node '" + n + "'");
    }
    net.add_node(n);
  }
  for (const auto& l : file.links) {
    try {
      net.add_link(l.id, l.from, l.to, l.channel);
    } catch (const ValidationError& e) {
      throw ValidationError(e.property(), e.magnitude(),
                            "link '" + l.id + "': " + e.what());
    } catch (const DomainError& e) {
      throw ValidationError(ValidationError::Property::kStructure, 0,
                            "link '" + l.id + "': " + e.what());
    }
  }
  return net;
}

NetworkFile to_network_file(const Network& net) {
  NetworkFile file;
  file.nodes = net.nodes();
  for (const auto& l : net.links()) file.links.push_back({l.id, l.a, l.b, l.channel});
  return file;
}

}  // namespace telroute
