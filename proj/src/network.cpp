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

#include "posgraph/network.hpp"

#include <map>
#include <set>

#include "posgraph/error.hpp"

namespace posgraph {

Cpt::Cpt(Var var, std::vector<Var> parents, std::vector<Weight> cells)
    : var_(std::move(var)), parents_(std::move(parents)), cells_(std::move(cells)) {
  std::set<Var> seen;
  for (const auto& p : parents_) {
    if (p == var_) throw DomainError("node '" + var_.name() + "' is its own parent");
    if (!seen.insert(p).second) {
      throw DomainError("duplicate parent '" + p.name() + "' of '" + var_.name() + "'");
    }
  }
  if (parents_.size() >= 32) throw ResourceError("too many parents for a table");
  if (cells_.size() != 2 * instantiation_count()) {
    throw DomainError("table of '" + var_.name() + "' must have " +
                      std::to_string(2 * instantiation_count()) + " cells");
  }
}

Cpt Cpt::vacuous(Var var, std::vector<Var> parents) {
  const std::size_t cells = std::size_t{2} << parents.size();
  return Cpt(std::move(var), std::move(parents),
             std::vector<Weight>(cells, Weight::one()));
}

const Weight& Cpt::at(std::uint64_t instantiation, bool polarity) const {
  return cells_.at(2 * instantiation + (polarity ? 0 : 1));
}

std::vector<Literal> Cpt::instantiation(std::uint64_t index) const {
  std::vector<Literal> out;
  out.reserve(parents_.size());
  for (std::size_t j = 0; j < parents_.size(); ++j) {
    out.push_back(Literal{parents_[j], ((index >> j) & 1U) != 0});
  }
  return out;
}

Network::Network(std::vector<Var> ordering, std::vector<Cpt> nodes)
    : ordering_(std::move(ordering)) {
  std::map<Var, Cpt> by_var;
  for (auto& n : nodes) {
    const Var v = n.var();
    if (!by_var.emplace(v, std::move(n)).second) {
      throw DomainError("node '" + v.name() + "' defined twice");
    }
  }
  std::set<Var> ordered;
  for (const auto& v : ordering_) {
    if (!ordered.insert(v).second) {
      throw DomainError("ordering lists '" + v.name() + "' twice");
    }
    if (!by_var.count(v)) throw DomainError("ordering names unknown node '" + v.name() + "'");
  }
  if (ordered.size() != by_var.size()) {
    throw DomainError("ordering does not cover every node");
  }
  for (const auto& [v, cpt] : by_var) {
    for (const auto& p : cpt.parents()) {
      if (!by_var.count(p)) {
        throw DomainError("parent '" + p.name() + "' of '" + v.name() + "' is not a node");
      }
    }
  }

  // Kahn's algorithm over parent -> child edges.
  std::map<Var, std::size_t> pending;
  std::map<Var, std::vector<Var>> children;
  for (const auto& [v, cpt] : by_var) {
    pending[v] = cpt.parents().size();
    for (const auto& p : cpt.parents()) children[p].push_back(v);
  }
  std::vector<Var> ready;
  for (const auto& [v, count] : pending) {
    if (count == 0) ready.push_back(v);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    const Var v = ready.back();
    ready.pop_back();
    ++visited;
    for (const auto& c : children[v]) {
      if (--pending[c] == 0) ready.push_back(c);
    }
  }
  if (visited != by_var.size()) throw DomainError("network has a directed cycle");

  nodes_.reserve(ordering_.size());
  for (const auto& v : ordering_) nodes_.push_back(std::move(by_var.at(v)));
}

Network Network::vacuous(std::vector<Var> variables) {
  std::vector<Cpt> nodes;
  for (const auto& v : variables) nodes.push_back(Cpt::vacuous(v));
  return Network(std::move(variables), std::move(nodes));
}

const Cpt& Network::node(const Var& v) const {
  for (const auto& n : nodes_) {
    if (n.var() == v) return n;
  }
  throw DomainError("no node '" + v.name() + "'");
}

Weight chain_rule_eval(const Network& n, const Interpretation& w) {
  Weight product = Weight::one();
  for (const auto& cpt : n.nodes()) {
    std::uint64_t inst = 0;
    for (std::size_t j = 0; j < cpt.parents().size(); ++j) {
      if (w.value(cpt.parents()[j])) inst |= std::uint64_t{1} << j;
    }
    product = product * cpt.at(inst, w.value(cpt.var()));
  }
  return product;
}

Distribution network_distribution(const Network& n) {
  const Universe& universe = n.ordering();
  if (universe.size() > Distribution::kMaxVariables) {
    throw ResourceError("network too large to tabulate");
  }
  // Bit positions of each node and its parents in the world index.
  struct Selector {
    const Cpt* cpt;
    std::size_t self;
    std::vector<std::size_t> parents;
  };
  std::vector<Selector> selectors;
  for (const auto& cpt : n.nodes()) {
    Selector s{&cpt, *position_of(universe, cpt.var()), {}};
    for (const auto& p : cpt.parents()) s.parents.push_back(*position_of(universe, p));
    selectors.push_back(std::move(s));
  }

  const std::size_t worlds = std::size_t{1} << universe.size();
  std::vector<Weight> values;
  values.reserve(worlds);
  for (std::uint64_t w = 0; w < worlds; ++w) {
    Weight product = Weight::one();
    for (const auto& s : selectors) {
      std::uint64_t inst = 0;
      for (std::size_t j = 0; j < s.parents.size(); ++j) {
        inst |= ((w >> s.parents[j]) & 1U) << j;
      }
      product = product * s.cpt->at(inst, ((w >> s.self) & 1U) != 0);
      if (product.is_zero()) break;
    }
    values.push_back(std::move(product));
  }
  return Distribution(universe, std::move(values));
}

std::vector<NormalizationViolation> check_normalization(const Network& n) {
  std::vector<NormalizationViolation> out;
  for (const auto& cpt : n.nodes()) {
    for (std::uint64_t i = 0; i < cpt.instantiation_count(); ++i) {
      const Weight top = max(cpt.at(i, true), cpt.at(i, false));
      if (!top.is_one()) out.push_back({cpt.var(), cpt.instantiation(i), top});
    }
  }
  return out;
}

}  // namespace posgraph
