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

// Product-based possibilistic networks: a DAG of binary variables whose
// nodes carry conditional possibility tables. The joint distribution is the
// product of the table entries selected by a world (chain rule).

#pragma once

#include <cstdint>
#include <vector>

#include "posgraph/model.hpp"

namespace posgraph {

/// Conditional possibility table of one node. Parent instantiation i sets
/// parents[j] to bit j of i; cell (i, polarity) holds Pi(var = polarity | i).
class Cpt {
 public:
  /// `cells` is laid out as [2 * i + (polarity ? 0 : 1)].
  Cpt(Var var, std::vector<Var> parents, std::vector<Weight> cells);
  /// All cells 1.
  static Cpt vacuous(Var var, std::vector<Var> parents = {});

  const Var& var() const { return var_; }
  const std::vector<Var>& parents() const { return parents_; }
  std::uint64_t instantiation_count() const { return std::uint64_t{1} << parents_.size(); }

  const Weight& at(std::uint64_t instantiation, bool polarity) const;
  std::vector<Literal> instantiation(std::uint64_t index) const;

  friend bool operator==(const Cpt&, const Cpt&) = default;

 private:
  Var var_;
  std::vector<Var> parents_;
  std::vector<Weight> cells_;
};

/// Nodes are stored in `ordering` order. Construction checks that the
/// ordering lists each node once, that parents are nodes, and that the
/// parent relation is acyclic (DomainError otherwise).
class Network {
 public:
  Network(std::vector<Var> ordering, std::vector<Cpt> nodes);
  /// Edgeless network with all-ones priors.
  static Network vacuous(std::vector<Var> variables);

  const std::vector<Var>& ordering() const { return ordering_; }
  const std::vector<Cpt>& nodes() const { return nodes_; }
  const Cpt& node(const Var& v) const;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  std::vector<Var> ordering_;
  std::vector<Cpt> nodes_;
};

/// Product over nodes of the entry selected by `w`.
Weight chain_rule_eval(const Network& n, const Interpretation& w);

/// Chain rule over every world; the universe is the network ordering.
Distribution network_distribution(const Network& n);

struct NormalizationViolation {
  Var var;
  std::vector<Literal> assignment;  // parent instantiation
  Weight column_max;
};

/// Every (node, parent instantiation) whose two cells do not reach 1.
std::vector<NormalizationViolation> check_normalization(const Network& n);

}  // namespace posgraph
