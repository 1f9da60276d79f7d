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

#include "telroute/commands.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "telroute/errors.hpp"
#include "telroute/fidmodel.hpp"
#include "telroute/netfile.hpp"
#include "telroute/telesim.hpp"

namespace telroute {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double since_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json path_json(const Path& p) { return {{"nodes", p.nodes}, {"links", p.links}}; }

json objective_json(const PathObjective& o) {
  return {{"fidelity", emit_number(o.fidelity)},
          {"mu_product", emit_number(o.mu_product)},
          {"nu_product", emit_number(o.nu_product)}};
}

json route_json(const RouteResult& r) {
  json j = objective_json(r.objective);
  j["method"] = method_name(r.method);
  j["path"] = path_json(r.path);
  return j;
}

double oracle_fidelity(const Network& net, const Path& p) {
  const auto channels = path_channels(net, p);
  return average_azimuthal_fidelity(channels).value;
}

struct LoadedNetwork {
  std::string digest;
  Network network;
};

LoadedNetwork load(const std::string& path) {
  const std::string text = read_text_file(path);
  return {sha256_hex(text), to_network(parse_network_text(text))};
}

}  // namespace

double emit_number(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* kHex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const ValidationError*>(&e)) {
    return kExitInvalid;
  }
  return kExitDomain;
}

json to_json(const OutputRecord& record) {
  return {{"command", record.command},
          {"arguments", record.arguments},
          {"input_digest", record.input_digest},
          {"payload", record.payload},
          {"elapsed_ms", record.elapsed_ms}};
}

OutputRecord output_record_from_json(const json& j) {
  OutputRecord r;
  r.command = j.at("command").get<std::string>();
  r.arguments = j.at("arguments").get<std::map<std::string, std::string>>();
  r.input_digest = j.at("input_digest").get<std::string>();
  r.payload = j.at("payload");
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

CommandResult cmd_validate(const std::string& network_path) {
  const auto start = Clock::now();
  const std::string text = read_text_file(network_path);
  const NetworkFile file = parse_network_text(text);

  bool all_valid = true;
  json structure = json::array();
  std::set<std::string> nodes;
  for (const auto& n : file.nodes) {
    if (!nodes.insert(n).second) structure.push_back("duplicate node '" + n + "'");
  }
  std::set<std::string> ids;
  json links = json::array();
  std::ostringstream csv;
  csv << "link,valid,hermitian,unit_trace,positive,negativity,error\n";
  for (const auto& l : file.links) {
    if (!ids.insert(l.id).second) structure.push_back("duplicate link id '" + l.id + "'");
    if (!nodes.count(l.from) || !nodes.count(l.to)) {
      structure.push_back("link '" + l.id + "' references an unknown node");
    }
    if (l.from == l.to) structure.push_back("link '" + l.id + "' is a self-loop");

    json entry = {{"id", l.id}};
    try {
      const DensityMatrix m = to_density_matrix(to_xstate(l.channel));
      const DensityCheck check = check_density_matrix(m);
      entry["hermitian"] = check.hermitian();
      entry["unit_trace"] = check.unit_trace();
      entry["positive"] = check.positive();
      entry["min_eigenvalue"] = emit_number(check.min_eigenvalue);
      to_density_matrix(l.channel);  // also enforces parameter ranges
      entry["valid"] = true;
      entry["negativity"] = emit_number(negativity(l.channel));
    } catch (const Error& e) {
      entry["valid"] = false;
      entry["error"] = e.what();
    }
    all_valid = all_valid && entry["valid"].get<bool>();
    auto flag = [&](const char* key) {
      return entry.contains(key) ? (entry[key].get<bool>() ? "true" : "false") : "";
    };
    csv << l.id << ',' << (entry["valid"].get<bool>() ? "true" : "false") << ','
        << flag("hermitian") << ',' << flag("unit_trace") << ',' << flag("positive") << ','
        << (entry.contains("negativity") ? csv_number(entry["negativity"].get<double>())
                                         : std::string{})
        << ',' << (entry.contains("error") ? '"' + entry["error"].get<std::string>() + '"'
                                           : std::string{})
        << '\n';
    links.push_back(std::move(entry));
  }
  all_valid = all_valid && structure.empty();

  CommandResult result;
  result.record.command = "validate";
  result.record.arguments = {{"network", network_path}};
  result.record.input_digest = sha256_hex(text);
  result.record.payload = {{"valid", all_valid}, {"links", links}, {"structure_errors", structure}};
  result.record.elapsed_ms = since_ms(start);
  result.exit_code = all_valid ? kExitOk : kExitInvalid;
  result.csv = csv.str();
  return result;
}

CommandResult cmd_route(const std::string& network_path, const std::string& src,
                        const std::string& dst, RouteMethod method) {
  const auto start = Clock::now();
  const LoadedNetwork in = load(network_path);
  const RouteResult r = route(in.network, src, dst, method);

  json per_link = json::array();
  for (const auto& id : r.path.links) {
    const Link& l = in.network.link(id);
    if (r.method == RouteResult::Method::kDijkstra) {
      per_link.push_back({{"id", id},
                          {"negativity", emit_number(negativity(l.channel))},
                          {"weight", emit_number(*l.weights.log_neg_weight)}});
    } else {
      per_link.push_back(
          {{"id", id}, {"mu", emit_number(l.weights.mu)}, {"nu", emit_number(l.weights.nu)}});
    }
  }
  const char* requested = method == RouteMethod::kAuto       ? "auto"
                          : method == RouteMethod::kDijkstra ? "dijkstra"
                                                             : "exact";
  CommandResult result;
  result.record.command = "route";
  result.record.arguments = {
      {"network", network_path}, {"src", src}, {"dst", dst}, {"method", requested}};
  result.record.input_digest = in.digest;
  result.record.payload = route_json(r);
  result.record.payload["links"] = per_link;
  result.record.elapsed_ms = since_ms(start);
  result.csv = "parameter,analytic_fidelity,oracle_fidelity\n" + r.path.str() + ',' +
               csv_number(r.objective.fidelity) + ',' +
               csv_number(oracle_fidelity(in.network, r.path)) + '\n';
  return result;
}

CommandResult cmd_verify(const std::string& network_path, const std::string& src,
                         const std::string& dst) {
  const auto start = Clock::now();
  const LoadedNetwork in = load(network_path);
  if (in.network.nodes().size() > kDefaultEnumerationCap) {
    throw CapExceededError("verify enumerates every simple path; network exceeds " +
                           std::to_string(kDefaultEnumerationCap) + " nodes");
  }
  const RouteResult chosen = route(in.network, src, dst);
  const auto paths = enumerate_simple_paths(in.network, src, dst);

  json rows = json::array();
  std::ostringstream csv;
  csv << "parameter,analytic_fidelity,oracle_fidelity\n";
  double worst = 0.0;
  for (const auto& e : paths) {
    const double oracle = oracle_fidelity(in.network, e.path);
    const double gap = std::abs(oracle - e.objective.fidelity);
    worst = std::max(worst, gap);
    rows.push_back({{"path", path_json(e.path)},
                    {"chosen", e.path == chosen.path},
                    {"analytic", emit_number(e.objective.fidelity)},
                    {"oracle", emit_number(oracle)},
                    {"discrepancy", emit_number(gap)}});
    csv << e.path.str() << ',' << csv_number(e.objective.fidelity) << ','
        << csv_number(oracle) << '\n';
  }
  const bool ok = worst <= kVerifyTolerance;

  CommandResult result;
  result.record.command = "verify";
  result.record.arguments = {{"network", network_path}, {"src", src}, {"dst", dst}};
  result.record.input_digest = in.digest;
  result.record.payload = {{"route", route_json(chosen)},
                           {"paths", rows},
                           {"max_discrepancy", emit_number(worst)},
                           {"tolerance", kVerifyTolerance},
                           {"ok", ok}};
  result.record.elapsed_ms = since_ms(start);
  result.exit_code = ok ? kExitOk : kExitDiscrepancy;
  result.csv = csv.str();
  return result;
}

json witness_to_json(const ViolationWitness& w) {
  auto entry = [](const Path& p, const PathObjective& o) {
    json j = objective_json(o);
    j["path"] = path_json(p);
    return j;
  };
  return {{"source", w.source},
          {"mid", w.mid},
          {"ext", w.ext},
          {"best_to_mid", entry(w.best_to_mid, w.best_to_mid_objective)},
          {"best_to_ext", entry(w.best_to_ext, w.best_to_ext_objective)},
          {"prefix", entry(w.prefix(), w.prefix_objective)},
          {"network", to_json(to_network_file(w.network))}};
}

CommandResult cmd_find_violation(std::uint64_t seed, int attempts,
                                 const ViolationSearch& search) {
  const auto start = Clock::now();
  const auto witness = find_violation(seed, attempts, search);

  CommandResult result;
  result.record.command = "find-violation";
  result.record.arguments = {
      {"seed", std::to_string(seed)},
      {"attempts", std::to_string(attempts)},
      {"family", family_name(search.family)},
      {"nodes", std::to_string(search.min_nodes) + "-" + std::to_string(search.max_nodes)}};
  std::string canonical;
  for (const auto& [k, v] : result.record.arguments) canonical += k + "=" + v + ";";
  result.record.input_digest = sha256_hex(canonical);
  result.record.payload = {{"found", witness.has_value()}};
  std::ostringstream csv;
  csv << "parameter,analytic_fidelity,oracle_fidelity\n";
  if (witness) {
    result.record.payload["witness"] = witness_to_json(*witness);
    const Network& net = witness->network;
    const std::pair<std::string, std::pair<Path, PathObjective>> rows[] = {
        {"best_to_mid", {witness->best_to_mid, witness->best_to_mid_objective}},
        {"best_to_ext", {witness->best_to_ext, witness->best_to_ext_objective}},
        {"prefix", {witness->prefix(), witness->prefix_objective}}};
    for (const auto& [name, row] : rows) {
      csv << name << ':' << row.first.str() << ',' << csv_number(row.second.fidelity) << ','
          << csv_number(oracle_fidelity(net, row.first)) << '\n';
    }
  }
  result.record.elapsed_ms = since_ms(start);
  result.csv = csv.str();
  return result;
}

CommandResult cmd_swap_prepare(
    const std::string& network_path, const std::string& src, const std::string& dst,
    const std::string& swap_node,
    const std::optional<std::pair<std::string, std::string>>& links) {
  const auto start = Clock::now();
  const LoadedNetwork in = load(network_path);
  const Network& net = in.network;

  std::optional<PreparationAnalysis> best;
  PreparationPlan best_plan;
  if (links) {
    best_plan = make_plan(net, swap_node, links->first, links->second);
    best = analyze_preparation(net, src, dst, best_plan);
  } else {
    const auto plans = candidate_plans(net, src, dst, swap_node);
    if (plans.empty()) {
      throw PlanConflictError("node '" + swap_node +
                              "' has no pair of off-route pure links to swap");
    }
    std::optional<UnphysicalSwapError> last_unphysical;
    for (const auto& plan : plans) {
      try {
        auto analysis = analyze_preparation(net, src, dst, plan);
        if (!best || analysis.expected_fidelity > best->expected_fidelity + 1e-12) {
          best = std::move(analysis);
          best_plan = plan;
        }
      } catch (const UnphysicalSwapError& e) {
        last_unphysical = e;
      }
    }
    if (!best) throw *last_unphysical;
  }

  const PreparationAnalysis& a = *best;
  CommandResult result;
  result.record.command = "swap-prepare";
  result.record.arguments = {
      {"network", network_path}, {"src", src}, {"dst", dst}, {"swap_node", swap_node}};
  if (links) result.record.arguments["links"] = links->first + "," + links->second;
  result.record.input_digest = in.digest;
  result.record.payload = {
      {"base", route_json(a.base)},
      {"plan",
       {{"swap_node", best_plan.swap_node},
        {"consumed_links", {best_plan.consumed_links.first, best_plan.consumed_links.second}},
        {"created_endpoints",
         {best_plan.created_endpoint_pair.first, best_plan.created_endpoint_pair.second}}}},
      {"formula",
       {{"n_prime", emit_number(a.formula.n_prime)},
        {"p_success", emit_number(a.formula.p_success)},
        {"gamma", emit_number(a.formula.gamma)},
        {"delta1", emit_number(a.formula.delta1)},
        {"delta2", emit_number(a.formula.delta2)},
        {"physical", a.formula.physical}}},
      {"success", route_json(a.success)},
      {"failure", route_json(a.failure)},
      {"expected_fidelity", emit_number(a.expected_fidelity)},
      {"gain", emit_number(a.expected_fidelity - a.base.objective.fidelity)}};
  result.record.elapsed_ms = since_ms(start);
  std::ostringstream csv;
  csv << "parameter,analytic_fidelity,oracle_fidelity\n"
      << "base:" << a.base.path.str() << ',' << csv_number(a.base.objective.fidelity) << ','
      << csv_number(oracle_fidelity(net, a.base.path)) << '\n'
      << "failure:" << a.failure.path.str() << ','
      << csv_number(a.failure.objective.fidelity) << ",\n"
      << "success:" << a.success.path.str() << ','
      << csv_number(a.success.objective.fidelity) << ",\n"
      << "expected," << csv_number(a.expected_fidelity) << ",\n";
  result.csv = csv.str();
  return result;
}

}  // namespace telroute
