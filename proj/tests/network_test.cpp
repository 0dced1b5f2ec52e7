// Copyright 2026 The posgraph Authors
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

#include <gtest/gtest.h>

#include "posgraph/compile.hpp"
#include "posgraph/error.hpp"
#include "posgraph/network.hpp"
#include "posgraph/oracle.hpp"
#include "support.hpp"

namespace posgraph {
namespace {

using testing::vars;
using testing::w;

Network weather_network() {
  return compile_network(testing::sigma_ex(), Ordering(vars({"se", "wi", "su"})));
}

TEST(Cpt, LayoutAndInstantiations) {
  const Cpt cpt(Var("v"), vars({"p", "q"}),
                {w("1"), w("1/2"), w("1/3"), w("1"), w("1"), w("1"), w("1"), w("1/5")});
  EXPECT_EQ(cpt.instantiation_count(), 4u);
  EXPECT_EQ(cpt.at(0, false), w("1/2"));
  EXPECT_EQ(cpt.at(1, true), w("1/3"));
  EXPECT_EQ(cpt.at(3, false), w("1/5"));
  EXPECT_EQ(cpt.instantiation(1), (std::vector<Literal>{pos("p"), neg("q")}));
  EXPECT_THROW(Cpt(Var("v"), vars({"p"}), {w("1")}), DomainError);
  EXPECT_THROW(Cpt(Var("v"), vars({"v"}), std::vector<Weight>(4, w("1"))), DomainError);
}

TEST(Network, RejectsCyclesAndUnknownParents) {
  const Cpt a(Var("a"), vars({"b"}), std::vector<Weight>(4, w("1")));
  const Cpt b(Var("b"), vars({"a"}), std::vector<Weight>(4, w("1")));
  EXPECT_THROW(Network(vars({"a", "b"}), {a, b}), DomainError);
  EXPECT_THROW(Network(vars({"a"}), {a}), DomainError);
  EXPECT_THROW(Network(vars({"a", "a"}), {Cpt::vacuous(Var("a"))}), DomainError);
  EXPECT_NO_THROW(Network(vars({"a", "b"}), {a, Cpt::vacuous(Var("b"))}));
}

TEST(ChainRule, WeatherWorlds) {
  const Network n = weather_network();
  const auto u = std::make_shared<const Universe>(vars({"su", "wi", "se"}));
  // !su wi !se: 2/3 * 1/2 * 1 (se false given wi, !su).
  EXPECT_EQ(chain_rule_eval(n, Interpretation(u, testing::weather_world(6))), w("1/3"));
  EXPECT_EQ(chain_rule_eval(n, Interpretation(u, testing::weather_world(3))), Weight::one());
}

TEST(ChainRule, VacuousNetworkIsOneEverywhere) {
  const Network n = Network::vacuous(vars({"a", "b", "c"}));
  const Distribution d = network_distribution(n);
  for (const auto& v : d.values()) EXPECT_EQ(v, Weight::one());
}

TEST(NetworkDistribution, WeatherValues) {
  const Distribution d = network_distribution(weather_network());
  const auto pi = testing::weather_pi();
  for (int k = 0; k < 8; ++k) EXPECT_EQ(testing::at_world(d, testing::weather_world(k)), pi[k]);
}

TEST(NetworkDistribution, SingleRoot) {
  const Network n(vars({"a"}), {Cpt(Var("a"), {}, {w("1"), w("2/3")})});
  EXPECT_EQ(network_distribution(n).values(), (std::vector<Weight>{w("2/3"), w("1")}));
}

TEST(CheckNormalization, CompiledWeatherIsClean) {
  EXPECT_TRUE(check_normalization(weather_network()).empty());
}

TEST(CheckNormalization, ReportsSubnormalColumn) {
  const Network n(vars({"a"}), {Cpt(Var("a"), {}, {w("1/2"), w("2/3")})});
  const auto report = check_normalization(n);
  ASSERT_EQ(report.size(), 1u);
  EXPECT_EQ(report[0].var, Var("a"));
  EXPECT_EQ(report[0].column_max, w("2/3"));
}

// A normalized acyclic network induces a normalized distribution, and the
// chain-rule product does not depend on the order of its factors.
TEST(NetworkProperty, RandomNormalizedNetworks) {
  testing::Gen gen(606);
  for (int round = 0; round < 200; ++round) {
    const auto vs = gen.universe(1 + gen.below(5));
    std::vector<Cpt> nodes;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      std::vector<Var> parents;
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (gen.coin()) parents.push_back(vs[j]);
      std::vector<Weight> cells;
      for (std::size_t k = 0; k < (std::size_t{1} << parents.size()); ++k) {
        const bool one_first = gen.coin();
        cells.push_back(one_first ? Weight::one() : gen.weight());
        cells.push_back(one_first ? gen.weight() : Weight::one());
      }
      nodes.emplace_back(vs[i], parents, cells);
    }
    const Network n(vs, nodes);
    ASSERT_TRUE(check_normalization(n).empty());
    const Distribution d = network_distribution(n);
    EXPECT_TRUE(d.normalized());

    const auto reordered = gen.shuffled(vs);
    std::vector<Cpt> shuffled_nodes;
    for (const auto& v : reordered) shuffled_nodes.push_back(n.node(v));
    EXPECT_TRUE(oracle::distributions_equal(network_distribution(Network(reordered, shuffled_nodes)), d));
  }
}

}  // namespace
}  // namespace posgraph
