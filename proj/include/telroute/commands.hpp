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
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "json.hpp"
#include "telroute/bellman.hpp"
#include "telroute/routing.hpp"
#include "telroute/swapprep.hpp"

namespace telroute {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitDomain = 1,
  kExitInvalid = 2,
  kExitDiscrepancy = 3,
};

/// Structured result of one command invocation.
struct OutputRecord {
  std::string command;
  std::map<std::string, std::string> arguments;
  std::string input_digest;  // SHA-256 hex of the input file (or arguments)
  nlohmann::json payload;
  double elapsed_ms = 0.0;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

nlohmann::json to_json(const OutputRecord& record);
OutputRecord output_record_from_json(const nlohmann::json& j);

struct CommandResult {
  OutputRecord record;
  int exit_code = kExitOk;
  /// Tabular rendering (header line plus rows).
  std::string csv;
};

/// Rounds to the 12 significant digits used in every emitted number.
double emit_number(double v);

std::string sha256_hex(const std::string& bytes);

/// Exit status for an exception escaping a command.
int exit_code_for(const std::exception& e);

/// Discrepancies above this between formula and oracle fail `verify`.
inline constexpr double kVerifyTolerance = 1e-9;

CommandResult cmd_validate(const std::string& network_path);
CommandResult cmd_route(const std::string& network_path, const std::string& src,
                        const std::string& dst, RouteMethod method = RouteMethod::kAuto);
CommandResult cmd_verify(const std::string& network_path, const std::string& src,
                         const std::string& dst);
CommandResult cmd_find_violation(std::uint64_t seed, int attempts,
                                 const ViolationSearch& search);
/// Without `links`, every candidate plan at swap_node is evaluated and the
/// one with the highest expected fidelity is reported.
CommandResult cmd_swap_prepare(
    const std::string& network_path, const std::string& src, const std::string& dst,
    const std::string& swap_node,
    const std::optional<std::pair<std::string, std::string>>& links = std::nullopt);

nlohmann::json witness_to_json(const ViolationWitness& w);

}  // namespace telroute
