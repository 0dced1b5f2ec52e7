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

#include <memory>

#include "posgraph/error.hpp"
#include "posgraph/model.hpp"
#include "support.hpp"

namespace posgraph {
namespace {

using testing::vars;
using testing::w;

std::shared_ptr<const Universe> weather() {
  return std::make_shared<const Universe>(vars({"su", "wi", "se"}));
}

TEST(Var, ValidatesNames) {
  EXPECT_NO_THROW(Var("a1"));
  EXPECT_NO_THROW(Var("x_2"));
  EXPECT_THROW(Var(""), DomainError);
  EXPECT_THROW(Var("1a"), DomainError);
  EXPECT_THROW(Var("_a"), DomainError);
  EXPECT_THROW(Var("a-b"), DomainError);
  EXPECT_NE(Var("A"), Var("a"));
}

TEST(Literal, NegateFlipsPolarityOnly) {
  EXPECT_EQ(negate(pos("se")), neg("se"));
  EXPECT_EQ(negate(neg("se")), pos("se"));
  EXPECT_EQ(negate(negate(pos("wi"))), pos("wi"));
  EXPECT_EQ(to_string(neg("se")), "!se");
}

TEST(Clause, SetSemantics) {
  const Clause c{pos("b"), neg("a"), pos("b")};
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c, (Clause{neg("a"), pos("b")}));
  EXPECT_TRUE(c.contains(neg("a")));
  EXPECT_FALSE(c.contains(pos("a")));
  EXPECT_TRUE(c.mentions(Var("a")));
  EXPECT_EQ(to_string(c), "!a | b");
  EXPECT_EQ(to_string(Clause{}), "false");
}

TEST(Clause, TautologyAndSubset) {
  EXPECT_TRUE((Clause{neg("x"), neg("y"), pos("x")}).is_tautology());
  EXPECT_FALSE((Clause{neg("x"), neg("y")}).is_tautology());
  EXPECT_FALSE(Clause{}.is_tautology());
  EXPECT_TRUE((Clause{pos("a")}).subset_of(Clause{pos("a"), pos("x")}));
  EXPECT_FALSE((Clause{pos("a"), pos("x")}).subset_of(Clause{pos("a")}));
  EXPECT_EQ((Clause{pos("a"), neg("b")}).without(neg("b")), Clause{pos("a")});
  EXPECT_EQ((Clause{pos("a")}).disjoin(Clause{neg("b"), pos("a")}), (Clause{pos("a"), neg("b")}));
}

TEST(Satisfies, WeatherWorlds) {
  const Clause su_or_not_wi{pos("su"), neg("wi")};
  const Interpretation w0(weather(), testing::weather_world(0));
  EXPECT_TRUE(satisfies(w0, su_or_not_wi));
  EXPECT_TRUE(satisfies(w0, Formula::of(su_or_not_wi)));
  const Interpretation w6(weather(), testing::weather_world(6));
  EXPECT_FALSE(satisfies(w6, su_or_not_wi));
  for (std::uint64_t i = 0; i < 8; ++i) {
    const Interpretation any(weather(), i);
    EXPECT_TRUE(satisfies(any, Clause{pos("su"), neg("su")}));
    EXPECT_FALSE(satisfies(any, Clause{}));
  }
}

TEST(Satisfies, VariableOutsideUniverseIsDomainError) {
  const Interpretation w0(weather(), 0);
  EXPECT_THROW(satisfies(w0, pos("zz")), DomainError);
  EXPECT_THROW(satisfies(w0, Formula::literal(neg("zz"))), DomainError);
}

TEST(Interpretation, IndexAndLiteralsAgree) {
  const auto u = weather();
  for (std::uint64_t i = 0; i < 8; ++i) {
    const Interpretation a(u, i);
    const auto lits = a.literals();
    const Interpretation b(u, lits);
    EXPECT_EQ(b.index(), i);
    EXPECT_EQ(a.value(Var("su")), (i & 1) != 0);
  }
}

TEST(Interpretation, PartialOrRepeatedLiteralsRejected) {
  const auto u = weather();
  const std::vector<Literal> partial{pos("su"), neg("wi")};
  EXPECT_THROW(Interpretation(u, partial), DomainError);
  const std::vector<Literal> twice{pos("su"), neg("su"), pos("wi"), pos("se")};
  EXPECT_THROW(Interpretation(u, twice), DomainError);
  const std::vector<Literal> foreign{pos("su"), pos("wi"), pos("se"), pos("zz")};
  EXPECT_THROW(Interpretation(u, foreign), DomainError);
}

TEST(Formula, VarsInFirstOccurrenceOrder) {
  const Formula f = Formula::conjunction(
      {Formula::literal(neg("b")),
       Formula::disjunction({Formula::literal(pos("a")), Formula::literal(pos("b"))}),
       Formula::negation(Formula::literal(pos("c")))});
  EXPECT_EQ(f.vars(), vars({"b", "a", "c"}));
  EXPECT_EQ(to_string(f), "!b & (a | b) & !c");
  EXPECT_TRUE(Formula::constant(true).vars().empty());
}

TEST(Formula, DegenerateConnectivesCollapse) {
  EXPECT_EQ(Formula::conjunction({}).kind(), Formula::Kind::kConstant);
  EXPECT_TRUE(Formula::conjunction({}).constant_value());
  EXPECT_FALSE(Formula::disjunction({}).constant_value());
  EXPECT_EQ(Formula::conjunction({Formula::literal(pos("a"))}).kind(), Formula::Kind::kLiteral);
  EXPECT_EQ(to_string(Formula::of(Clause{})), "false");
}

TEST(WeightedBase, DropsZeroWeightsAndInfersUniverse) {
  const WeightedBase b({{Formula::literal(pos("b")), w("1/2")},
                        {Formula::literal(pos("a")), Weight::zero()},
                        {Formula::literal(neg("c")), w("1")}});
  EXPECT_EQ(b.size(), 2u);
  EXPECT_EQ(b.variables(), vars({"b", "c"}));
}

TEST(WeightedBase, DeclaredUniverseMustCoverEntries) {
  EXPECT_THROW(WeightedBase(vars({"a"}), {{Formula::literal(pos("b")), w("1/2")}}),
               DomainError);
  EXPECT_THROW(ClausalBase(vars({"a", "a"}), {}), DomainError);
  const ClausalBase ok(vars({"a", "b"}), {{Clause{pos("b")}, w("1/2")}});
  EXPECT_EQ(ok.variables(), vars({"a", "b"}));
}

TEST(ClausalBase, WithUnitsAppendsHardUnits) {
  const ClausalBase b = testing::sigma_ex();
  const std::vector<Literal> ctx{neg("se"), pos("zz")};
  const ClausalBase c = b.with_units(ctx);
  EXPECT_EQ(c.size(), b.size() + 2);
  EXPECT_EQ(c.entries().back(), (WeightedClause{Clause{pos("zz")}, Weight::one()}));
  EXPECT_EQ(c.variables().back(), Var("zz"));
}

TEST(Distribution, SizeAndNormalization) {
  EXPECT_THROW(Distribution(vars({"a"}), {Weight::one()}), DomainError);
  const Distribution d(vars({"a"}), {w("1/2"), w("2/3")});
  EXPECT_FALSE(d.normalized());
  EXPECT_EQ(d.max_value(), w("2/3"));
  const Distribution e(vars({"a"}), {w("1/2"), Weight::one()});
  EXPECT_TRUE(e.normalized());
}

// satisfies(w, c) holds iff some literal of c holds; tautology iff valid.
TEST(ClauseProperty, SemanticsMatchesLiterals) {
  testing::Gen gen(7);
  for (int round = 0; round < 300; ++round) {
    const auto vs = gen.universe(1 + gen.below(5));
    const auto u = std::make_shared<const Universe>(vs);
    const Clause c = gen.clause(vs, 4);
    bool valid = true;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << vs.size()); ++i) {
      const Interpretation world(u, i);
      bool any = false;
      for (const auto& l : c) any = any || satisfies(world, l);
      EXPECT_EQ(satisfies(world, c), any);
      valid = valid && any;
    }
    EXPECT_EQ(c.is_tautology(), valid) << to_string(c);
  }
}

}  // namespace
}  // namespace posgraph
