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

// Command-line front end: validate, route, verify, find-violation,
// swap-prepare. Exit codes: 0 ok, 1 domain error, 2 parse/validation error,
// 3 verification discrepancy.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "telroute/commands.hpp"
#include "telroute/errors.hpp"

namespace {

using namespace telroute;

std::pair<int, int> parse_node_range(const std::string& spec) {
  const auto dash = spec.find('-');
  try {
    if (dash == std::string::npos) {
      const int n = std::stoi(spec);
      return {n, n};
    }
    return {std::stoi(spec.substr(0, dash)), std::stoi(spec.substr(dash + 1))};
  } catch (const std::exception&) {
    throw DomainError("--nodes expects N or MIN-MAX, got '" + spec + "'");
  }
}

std::optional<std::pair<std::string, std::string>> parse_links(const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  const auto comma = spec.find(',');
  if (comma == std::string::npos) throw DomainError("--links expects ID1,ID2");
  return std::make_pair(spec.substr(0, comma), spec.substr(comma + 1));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Teleportation routing over entangled networks"};
  app.require_subcommand(1);

  std::string network, src, dst, method = "auto", family = "x", nodes = "4-6";
  std::string out_path, format = "json", swap_node, links;
  std::uint64_t seed = 42;
  int attempts = 1000;
  double density = 0.5;

  auto add_network = [&](CLI::App* cmd) {
    cmd->add_option("--network", network, "Network JSON file")->required();
  };
  auto add_endpoints = [&](CLI::App* cmd) {
    cmd->add_option("--src", src, "Source node")->required();
    cmd->add_option("--dst", dst, "Destination node")->required();
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "Write output here instead of stdout");
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* validate = app.add_subcommand("validate", "Check every link's channel");
  add_network(validate);
  add_output(validate);

  auto* route = app.add_subcommand("route", "Find the highest-fidelity route");
  add_network(route);
  add_endpoints(route);
  route->add_option("--method", method, "auto|dijkstra|exact")
      ->check(CLI::IsMember({"auto", "dijkstra", "exact"}));
  add_output(route);

  auto* verify = app.add_subcommand("verify", "Compare formulas with the teleportation oracle");
  add_network(verify);
  add_endpoints(verify);
  add_output(verify);

  auto* violation = app.add_subcommand("find-violation", "Search for an optimal-substructure counterexample");
  violation->add_option("--seed", seed, "Search seed");
  violation->add_option("--attempts", attempts, "Random networks to try");
  violation->add_option("--family", family, "pure|werner|x")
      ->check(CLI::IsMember({"pure", "werner", "x"}));
  violation->add_option("--nodes", nodes, "Node count N or range MIN-MAX");
  violation->add_option("--density", density, "Link probability per node pair");
  add_output(violation);

  auto* swap = app.add_subcommand("swap-prepare", "Expected fidelity with a swapping preparation stage");
  add_network(swap);
  add_endpoints(swap);
  swap->add_option("--swap-node", swap_node, "Node performing the Bell measurement")->required();
  swap->add_option("--links", links, "Consumed link ids ID1,ID2 (default: best pair)");
  add_output(swap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  CommandResult result;
  try {
    if (*validate) {
      result = cmd_validate(network);
    } else if (*route) {
      result = cmd_route(network, src, dst, parse_route_method(method));
    } else if (*verify) {
      result = cmd_verify(network, src, dst);
    } else if (*violation) {
      const auto [lo, hi] = parse_node_range(nodes);
      ViolationSearch search{parse_family(family), lo, hi, density};
      result = cmd_find_violation(seed, attempts, search);
    } else {
      result = cmd_swap_prepare(network, src, dst, swap_node, parse_links(links));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }

  const std::string text =
      format == "csv" ? result.csv : to_json(result.record).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return kExitInvalid;
    }
    out << text;
  }
  return result.exit_code;
}
