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

#include <gtest/gtest.h>

#include "telroute/errors.hpp"
#include "telroute/generate.hpp"
#include "test_networks.hpp"

namespace telroute {
namespace {

TEST(Network, RejectsStructuralDefects) {
  Network net;
  net.add_node("A");
  net.add_node("B");
  net.add_link("x", "A", "B", make_bell_channel());
  EXPECT_THROW(net.add_link("x", "A", "B", make_bell_channel()), ValidationError);
  EXPECT_THROW(net.add_link("y", "A", "A", make_bell_channel()), ValidationError);
  EXPECT_THROW(net.add_link("z", "A", "Q", make_bell_channel()), ValidationError);
  EXPECT_THROW(net.add_link("w", "A", "B", XState{0.5, 0, 0, 0.5, 0.6, 0}), ValidationError);
}

TEST(Network, ParallelLinksAllowed) {
  Network net;
  net.add_node("A");
  net.add_node("B");
  net.add_link("p", "A", "B", make_bell_channel());
  net.add_link("q", "A", "B", make_pure_channel(0.2));
  EXPECT_EQ(net.links().size(), 2u);
  EXPECT_EQ(net.incident("A").size(), 2u);
}

TEST(Network, NodesSortedAndWithoutLinks) {
  Network net = testing::triangle(0.5, 0.9, 0.8);
  EXPECT_EQ(net.nodes(), (std::vector<std::string>{"A", "B", "C"}));
  const Network less = net.without_links({"AC"});
  EXPECT_FALSE(less.has_link("AC"));
  EXPECT_TRUE(less.has_link("CB"));
  EXPECT_EQ(less.link("CB").a, "C");
  EXPECT_TRUE(less.connected());
  EXPECT_FALSE(less.without_links({"CB"}).connected());
}

TEST(Path, MakeAndValidate) {
  const Network net = testing::triangle(0.5, 0.9, 0.8);
  const Path p = make_path(net, "A", {"AC", "CB"});
  EXPECT_EQ(p.nodes, (std::vector<std::string>{"A", "C", "B"}));
  EXPECT_EQ(p.str(), "A-C-B");
  EXPECT_THROW(make_path(net, "A", {"CB"}), DomainError);
  EXPECT_THROW(make_path(net, "A", {"AC", "CB", "AB"}), DomainError);  // revisits A
  EXPECT_NEAR(path_objective(net, p).fidelity, (3 + 0.72) / 4, 1e-12);
}

TEST(RandomNetwork, TwoNodes) {
  const Network net = random_network(1, 2, 1.0, ChannelFamily::kPure);
  EXPECT_EQ(net.nodes().size(), 2u);
  EXPECT_EQ(net.links().size(), 1u);
}

TEST(RandomNetwork, DeterministicPerSeed) {
  const Network a = random_network(99, 7, 0.4, ChannelFamily::kX);
  const Network b = random_network(99, 7, 0.4, ChannelFamily::kX);
  ASSERT_EQ(a.links().size(), b.links().size());
  for (std::size_t i = 0; i < a.links().size(); ++i) {
    EXPECT_EQ(a.links()[i].id, b.links()[i].id);
    EXPECT_EQ(a.links()[i].a, b.links()[i].a);
    EXPECT_EQ(a.links()[i].weights.mu, b.links()[i].weights.mu);
    EXPECT_EQ(a.links()[i].weights.nu, b.links()[i].weights.nu);
  }
}

TEST(RandomNetwork, XFamilyConnectedAndPhysical) {
  const Network net = random_network(7, 8, 0.4, ChannelFamily::kX);
  EXPECT_EQ(net.nodes().size(), 8u);
  EXPECT_TRUE(net.connected());
  for (const auto& l : net.links()) {
    EXPECT_TRUE(std::holds_alternative<XState>(l.channel));
    EXPECT_NO_THROW(validate_density_matrix(to_density_matrix(l.channel)));
  }
}

TEST(RandomNetwork, Preconditions) {
  EXPECT_THROW(random_network(1, 1, 0.5, ChannelFamily::kPure), DomainError);
  EXPECT_THROW(random_network(1, 4, 0.0, ChannelFamily::kPure), DomainError);
  EXPECT_THROW(random_network(1, 4, 1.5, ChannelFamily::kPure), DomainError);
  EXPECT_THROW(parse_family("ghz"), DomainError);
}

TEST(RandomNetwork, SparseDrawsExhaustRetries) {
  // 30 nodes at density 1e-3 essentially never connect.
  EXPECT_THROW(random_network(3, 30, 1e-3, ChannelFamily::kPure), GenerationError);
}

}  // namespace
}  // namespace telroute
