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
#include "posgraph/normalize.hpp"
#include "posgraph/oracle.hpp"
#include "posgraph/semantics.hpp"
#include "support.hpp"

namespace posgraph {
namespace {

using testing::sigma_ex;
using testing::vars;
using testing::w;

ClausalBase weather_marginal() {
  return ClausalBase(vars({"su", "wi"}),
                     {{Clause{pos("su")}, w("1/3")}, {Clause{pos("su"), neg("wi")}, w("2/3")}});
}

// Cell of `cpt` for v = polarity under the given parent literals.
Weight cell(const Cpt& cpt, std::vector<Literal> assignment, bool polarity) {
  for (std::uint64_t i = 0; i < cpt.instantiation_count(); ++i) {
    auto inst = cpt.instantiation(i);
    std::sort(inst.begin(), inst.end());
    std::sort(assignment.begin(), assignment.end());
    if (inst == assignment) return cpt.at(i, polarity);
  }
  ADD_FAILURE() << "no such instantiation";
  return Weight::zero();
}

TEST(Ordering, ValidatesPermutation) {
  const Ordering o(vars({"se", "wi", "su"}));
  EXPECT_EQ(o.position(Var("su")), 2u);
  EXPECT_THROW(o.position(Var("zz")), DomainError);
  EXPECT_NO_THROW(o.check_covers(vars({"su", "wi", "se"})));
  EXPECT_THROW(o.check_covers(vars({"su", "wi"})), DomainError);
  EXPECT_THROW(o.check_covers(vars({"su", "wi", "se", "zz"})), DomainError);
  EXPECT_THROW(Ordering(vars({"a", "a"})), DomainError);
}

TEST(ImmediateParents, Cases) {
  EXPECT_EQ(immediate_parents(sigma_ex(), Var("se")), vars({"su", "wi"}));
  EXPECT_EQ(immediate_parents(weather_marginal(), Var("wi")), vars({"su"}));
  EXPECT_TRUE(immediate_parents(weather_marginal(), Var("zz")).empty());
}

TEST(HiddenParentClosure, DefeatedCertaintyAddsAThirdVariable) {
  EXPECT_EQ(hidden_parent_closure(testing::three_atoms(), Var("a1"), vars({"a2"})),
            vars({"a2", "a3"}));
}

TEST(HiddenParentClosure, WeatherSeaGainsNothing) {
  EXPECT_EQ(hidden_parent_closure(sigma_ex(), Var("se"), vars({"su", "wi"})), vars({"su", "wi"}));
}

TEST(HiddenParentClosure, IsolatedVariable) {
  EXPECT_TRUE(hidden_parent_closure(weather_marginal(), Var("zz"), {}).empty());
}

TEST(HiddenParentClosure, UnitPriorsInteractUnderProduct) {
  // pi(!v !y) = 1/2 but Pi(!v) * Pi(!y) = 1/3: y must condition v.
  const ClausalBase b(vars({"v", "y"}), {{Clause{pos("v")}, w("1/2")}, {Clause{pos("y")}, w("1/3")}});
  EXPECT_EQ(hidden_parent_closure(b, Var("v"), {}), vars({"y"}));
}

TEST(ConditionalPossibilityLiteral, Cases) {
  const std::vector<Literal> wi_su{pos("wi"), pos("su")};
  EXPECT_EQ(conditional_possibility(sigma_ex(), neg("se"), wi_su), w("2/3"));
  const std::vector<Literal> not_a2{neg("a2")};
  EXPECT_EQ(conditional_possibility(testing::three_atoms(), neg("a1"), not_a2), w("3/5"));
  const std::vector<Literal> not_a2_a3{neg("a2"), neg("a3")};
  EXPECT_EQ(conditional_possibility(testing::three_atoms(), neg("a1"), not_a2_a3), Weight::one());
}

TEST(CptFor, SeaGivenWindAndSummer) {
  const Cpt cpt = cpt_for(sigma_ex(), Var("se"), vars({"wi", "su"}));
  ASSERT_EQ(cpt.instantiation_count(), 4u);
  for (const bool wi : {false, true}) {
    for (const bool su : {false, true}) {
      const std::vector<Literal> x{Literal{Var("wi"), wi}, Literal{Var("su"), su}};
      EXPECT_EQ(cell(cpt, x, true), (!wi && su) ? w("2/3") : Weight::one());
      EXPECT_EQ(cell(cpt, x, false), (wi && su) ? w("2/3") : Weight::one());
    }
  }
}

TEST(CptFor, WindGivenSummer) {
  const Cpt cpt = cpt_for(weather_marginal(), Var("wi"), vars({"su"}));
  EXPECT_EQ(cell(cpt, {neg("su")}, true), w("1/2"));
  EXPECT_EQ(cell(cpt, {pos("su")}, true), Weight::one());
  EXPECT_EQ(cell(cpt, {neg("su")}, false), Weight::one());
  EXPECT_EQ(cell(cpt, {pos("su")}, false), Weight::one());
}

TEST(CptFor, SummerPrior) {
  const ClausalBase last(vars({"su"}), {{Clause{pos("su")}, w("1/3")}});
  const Cpt cpt = cpt_for(last, Var("su"), {});
  EXPECT_EQ(cpt.at(0, true), Weight::one());
  EXPECT_EQ(cpt.at(0, false), w("2/3"));
}

TEST(CptFor, InconsistentBaseIsRejected) {
  const ClausalBase b({{Clause{pos("x")}, w("1/2")}, {Clause{neg("x")}, w("1/2")}});
  EXPECT_THROW(cpt_for(b, Var("x"), {}), InconsistentBaseError);
}

TEST(CompileNetwork, WeatherUnderSeaWindSummer) {
  const Compilation c = compile(sigma_ex(), Ordering(vars({"se", "wi", "su"})));
  const Network& n = c.network;
  EXPECT_EQ(n.node(Var("se")).parents(), vars({"wi", "su"}));
  EXPECT_EQ(n.node(Var("wi")).parents(), vars({"su"}));
  EXPECT_TRUE(n.node(Var("su")).parents().empty());
  EXPECT_EQ(n.node(Var("su")).at(0, false), w("2/3"));
  EXPECT_EQ(cell(n.node(Var("wi")), {neg("su")}, true), w("1/2"));
  EXPECT_EQ(cell(n.node(Var("se")), {neg("wi"), pos("su")}, true), w("2/3"));
  EXPECT_EQ(cell(n.node(Var("se")), {pos("wi"), pos("su")}, false), w("2/3"));
  ASSERT_EQ(c.stages.size(), 3u);
  EXPECT_EQ(c.stages[0].immediate_parents, vars({"su", "wi"}));
  EXPECT_TRUE(oracle::distributions_equal(oracle::enumerate_distribution(c.stages[1].base),
                                          oracle::enumerate_distribution(weather_marginal())));
  EXPECT_TRUE(check_normalization(n).empty());
  EXPECT_TRUE(oracle::distributions_equal(network_distribution(n),
                                          oracle::enumerate_distribution(sigma_ex())));
}

TEST(CompileNetwork, EmptyBaseGivesVacuousNetwork) {
  const Network n = compile_network(ClausalBase(vars({"x", "y"}), {}), Ordering(vars({"y", "x"})));
  EXPECT_EQ(n, Network::vacuous(vars({"y", "x"})));
}

TEST(CompileNetwork, InconsistentBaseReportsDegree) {
  const ClausalBase b({{Clause{pos("x")}, w("1")}, {Clause{neg("x")}, w("1")}});
  try {
    compile_network(b, Ordering(vars({"x"})));
    FAIL() << "expected InconsistentBaseError";
  } catch (const InconsistentBaseError& e) {
    EXPECT_EQ(e.degree(), "1");
    EXPECT_NE(std::string(e.what()).find("Inc = 1"), std::string::npos);
  }
}

TEST(CompileNetwork, OrderingMustCoverTheBase) {
  EXPECT_THROW(compile_network(sigma_ex(), Ordering(vars({"se", "wi"}))), DomainError);
}

TEST(CompileNetwork, GeneralFormulaBase) {
  const WeightedBase b({{Formula::conjunction({Formula::literal(pos("a")),
                                               Formula::disjunction({Formula::literal(neg("b")),
                                                                     Formula::literal(pos("c"))})}),
                         w("1/2")},
                        {Formula::literal(pos("b")), w("1/3")}});
  const Network n = compile_network(b, Ordering(vars({"c", "b", "a"})));
  EXPECT_TRUE(oracle::distributions_equal(network_distribution(n), oracle::enumerate_distribution(b)));
}

TEST(CompileNetwork, TwoPriorsRoundTrip) {
  // The product chain rule needs the exact prior ratios here.
  const ClausalBase b(vars({"v", "y"}), {{Clause{pos("v")}, w("1/2")}, {Clause{pos("y")}, w("1/3")}});
  for (const auto& order : testing::permutations(b.variables())) {
    const Network n = compile_network(b, Ordering(order));
    EXPECT_TRUE(oracle::distributions_equal(network_distribution(n), oracle::enumerate_distribution(b)));
  }
}

// Every ordering of small random bases: exact round trip, normalized
// tables, and parents drawn only from later positions.
TEST(CompileProperty, RoundTripUnderEveryOrdering) {
  testing::Gen gen(505);
  const auto pool = oracle::default_weight_pool();
  for (int round = 0; round < 60; ++round) {
    const ClausalBase b = oracle::random_base(gen.next(), 1 + gen.below(4), gen.below(8), pool);
    const Distribution pi = oracle::enumerate_distribution(b);
    for (const auto& order : testing::permutations(b.variables())) {
      const Ordering o(order);
      const Network n = compile_network(b, o);
      ASSERT_TRUE(oracle::distributions_equal(network_distribution(n), pi));
      EXPECT_TRUE(check_normalization(n).empty());
      for (const auto& cpt : n.nodes())
        for (const auto& p : cpt.parents()) EXPECT_GT(o.position(p), o.position(cpt.var()));
    }
  }
}

}  // namespace
}  // namespace posgraph
