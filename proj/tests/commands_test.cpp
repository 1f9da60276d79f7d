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

#include <gtest/gtest.h>

#include "telroute/errors.hpp"
#include "telroute/netfile.hpp"

namespace telroute {
namespace {

using nlohmann::json;

const std::string kFixtures = TELROUTE_FIXTURE_DIR;

TEST(EmitNumber, TwelveSignificantDigits) {
  EXPECT_DOUBLE_EQ(emit_number(0.123456789012345), 0.123456789012);
  EXPECT_DOUBLE_EQ(emit_number(0.93), 0.93);
  EXPECT_DOUBLE_EQ(emit_number(1.0), 1.0);
}

TEST(Sha256, KnownVector) {
  EXPECT_EQ(sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(CmdValidate, TriangleAllValid) {
  const CommandResult r = cmd_validate(kFixtures + "/triangle_pure.json");
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(r.record.payload["valid"].get<bool>());
  const auto& links = r.record.payload["links"];
  ASSERT_EQ(links.size(), 3u);
  EXPECT_NEAR(links[0]["negativity"].get<double>(), 0.5, 1e-12);
  EXPECT_NEAR(links[1]["negativity"].get<double>(), 0.9, 1e-12);
  EXPECT_NEAR(links[2]["negativity"].get<double>(), 0.8, 1e-12);
  EXPECT_EQ(r.record.input_digest.size(), 64u);
}

TEST(CmdValidate, NamesPsdFailure) {
  const CommandResult r = cmd_validate(kFixtures + "/bad_psd.json");
  EXPECT_EQ(r.exit_code, kExitInvalid);
  const auto& link = r.record.payload["links"][0];
  EXPECT_EQ(link["id"], "AB");
  EXPECT_FALSE(link["valid"].get<bool>());
  EXPECT_FALSE(link["positive"].get<bool>());
  EXPECT_NE(link["error"].get<std::string>().find("|a14|^2 > a11*a44"), std::string::npos);
}

TEST(CmdValidate, MalformedTypeIsParseError) {
  try {
    cmd_validate(kFixtures + "/bad_type.json");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(exit_code_for(e), kExitInvalid);
    EXPECT_NE(std::string(e.what()).find("ghz"), std::string::npos);
  }
}

TEST(CmdRoute, PureTriangleUsesDijkstra) {
  const CommandResult r = cmd_route(kFixtures + "/triangle_pure.json", "A", "B");
  EXPECT_EQ(r.record.payload["method"], "dijkstra");
  EXPECT_EQ(r.record.payload["path"]["nodes"], json({"A", "C", "B"}));
  EXPECT_NEAR(r.record.payload["fidelity"].get<double>(), 0.93, 1e-12);
  EXPECT_TRUE(r.record.payload["links"][0].contains("negativity"));
}

TEST(CmdRoute, WitnessUsesExact) {
  const CommandResult r = cmd_route(kFixtures + "/witness.json", "A", "B");
  EXPECT_EQ(r.record.payload["method"], "exact");
  EXPECT_EQ(r.record.payload["path"]["links"], json({"AB"}));
  EXPECT_NEAR(r.record.payload["fidelity"].get<double>(), 0.75, 1e-12);
  EXPECT_NEAR(r.record.payload["links"][0]["mu"].get<double>(), 0.9, 1e-12);
}

TEST(CmdRoute, ForcedDijkstraOnWitness) {
  try {
    cmd_route(kFixtures + "/witness.json", "A", "B", RouteMethod::kDijkstra);
    FAIL();
  } catch (const NotAdditiveError& e) {
    EXPECT_EQ(e.link_id(), "AB");
    EXPECT_EQ(exit_code_for(e), kExitDomain);
  }
}

TEST(CmdVerify, TriangleAndWitness) {
  const CommandResult tri = cmd_verify(kFixtures + "/triangle_pure.json", "A", "B");
  EXPECT_EQ(tri.exit_code, kExitOk);
  EXPECT_EQ(tri.record.payload["paths"].size(), 2u);
  EXPECT_LT(tri.record.payload["max_discrepancy"].get<double>(), 1e-10);

  const CommandResult wit = cmd_verify(kFixtures + "/witness.json", "A", "D");
  EXPECT_EQ(wit.exit_code, kExitOk);
  EXPECT_EQ(wit.record.payload["paths"].size(), 2u);
  EXPECT_LT(wit.record.payload["max_discrepancy"].get<double>(), 1e-10);
  EXPECT_EQ(wit.csv.substr(0, wit.csv.find('\n')), "parameter,analytic_fidelity,oracle_fidelity");
}

TEST(CmdVerify, RefusesInvalidChannel) {
  EXPECT_THROW(cmd_verify(kFixtures + "/bad_psd.json", "A", "B"), ValidationError);
}

TEST(CmdFindViolation, XFamily) {
  const CommandResult r = cmd_find_violation(42, 1000, ViolationSearch{});
  ASSERT_TRUE(r.record.payload["found"].get<bool>());
  const json& w = r.record.payload["witness"];
  EXPECT_LT(w["prefix"]["fidelity"].get<double>(), w["best_to_mid"]["fidelity"].get<double>());
  // The embedded network reproduces the witness.
  const Network net = to_network(parse_network_file(w["network"]));
  const auto again = check_optimal_substructure(net, w["source"].get<std::string>());
  EXPECT_FALSE(again.empty());
}

TEST(CmdFindViolation, PureFamilyReportsNone) {
  ViolationSearch search;
  search.family = ChannelFamily::kPure;
  const CommandResult r = cmd_find_violation(1, 50, search);
  EXPECT_FALSE(r.record.payload["found"].get<bool>());
  EXPECT_EQ(r.exit_code, kExitOk);
}

TEST(CmdSwapPrepare, Examples) {
  const CommandResult keep = cmd_swap_prepare(kFixtures + "/swap_triangle_keep.json", "A", "B", "C");
  EXPECT_NEAR(keep.record.payload["expected_fidelity"].get<double>(), 0.975, 1e-12);
  EXPECT_TRUE(keep.record.payload["formula"]["physical"].get<bool>());

  const CommandResult gain = cmd_swap_prepare(kFixtures + "/swap_triangle_gain.json", "A", "B", "C");
  EXPECT_NEAR(gain.record.payload["expected_fidelity"].get<double>(), 0.896824455049, 1e-12);
  EXPECT_NEAR(gain.record.payload["base"]["fidelity"].get<double>(), 0.875, 1e-12);

  EXPECT_THROW(cmd_swap_prepare(kFixtures + "/triangle_pure.json", "A", "B", "C",
                                std::make_pair(std::string("AC"), std::string("CB"))),
               PlanConflictError);
}

TEST(OutputRecord, RoundTripsThroughJson) {
  const CommandResult results[] = {
      cmd_route(kFixtures + "/witness.json", "A", "D"),
      cmd_verify(kFixtures + "/werner_chain.json", "A", "C"),
      cmd_swap_prepare(kFixtures + "/swap_triangle_gain.json", "A", "B", "C")};
  for (const auto& r : results) {
    const std::string text = to_json(r.record).dump();
    const OutputRecord back = output_record_from_json(json::parse(text));
    EXPECT_EQ(back, r.record);
    EXPECT_EQ(to_json(back).dump(), text);
  }
}

TEST(Commands, DeterministicPayloads) {
  const auto a = cmd_find_violation(7, 300, ViolationSearch{});
  const auto b = cmd_find_violation(7, 300, ViolationSearch{});
  EXPECT_EQ(a.record.payload, b.record.payload);
  EXPECT_EQ(a.record.input_digest, b.record.input_digest);
  EXPECT_EQ(cmd_verify(kFixtures + "/witness.json", "A", "D").record.payload,
            cmd_verify(kFixtures + "/witness.json", "A", "D").record.payload);
}

}  // namespace
}  // namespace telroute
