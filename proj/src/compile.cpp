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

#include "posgraph/compile.hpp"

#include <algorithm>
#include <set>

#include "posgraph/error.hpp"
#include "posgraph/marginalize.hpp"
#include "posgraph/normalize.hpp"
#include "posgraph/semantics.hpp"

namespace posgraph {

Ordering::Ordering(std::vector<Var> sequence) : sequence_(std::move(sequence)) {
  std::set<Var> seen;
  for (const auto& v : sequence_) {
    if (!seen.insert(v).second) {
      throw DomainError("ordering lists '" + v.name() + "' twice");
    }
  }
}

std::size_t Ordering::position(const Var& v) const {
  const auto p = position_of(sequence_, v);
  if (!p) throw DomainError("'" + v.name() + "' is not in the ordering");
  return *p;
}

void Ordering::check_covers(std::span<const Var> variables) const {
  const std::set<Var> expected(variables.begin(), variables.end());
  const std::set<Var> actual(sequence_.begin(), sequence_.end());
  for (const auto& v : expected) {
    if (!actual.count(v)) throw DomainError("ordering is missing '" + v.name() + "'");
  }
  for (const auto& v : actual) {
    if (!expected.count(v)) {
      throw DomainError("ordering names unknown variable '" + v.name() + "'");
    }
  }
}

std::vector<Var> immediate_parents(const ClausalBase& b, const Var& v) {
  std::set<Var> out;
  for (const auto& e : b.entries()) {
    if (!e.clause.mentions(v)) continue;
    for (const auto& x : e.clause.vars()) {
      if (x != v) out.insert(x);
    }
  }
  return {out.begin(), out.end()};
}

namespace {

// Steps 2.b-2.c: the base seen under instantiation x of `parents`.
ClausalBase reduce_by(const ClausalBase& b, const std::set<Var>& parents,
                      std::span<const Literal> x) {
  std::vector<WeightedClause> out;
  for (const auto& e : b.entries()) {
    const bool satisfied = std::any_of(x.begin(), x.end(), [&](const Literal& l) {
      return e.clause.contains(l);
    });
    if (satisfied) continue;
    std::vector<Literal> rest;
    for (const auto& l : e.clause) {
      if (!parents.count(l.var)) rest.push_back(l);
    }
    out.push_back({Clause(std::move(rest)), e.weight});
  }
  return ClausalBase(b.variables(), std::move(out));
}

std::vector<Literal> instantiation_of(const std::vector<Var>& vars, std::uint64_t index) {
  std::vector<Literal> out;
  out.reserve(vars.size());
  for (std::size_t j = 0; j < vars.size(); ++j) {
    out.push_back(Literal{vars[j], ((index >> j) & 1U) != 0});
  }
  return out;
}

}  // namespace

std::vector<Var> hidden_parent_closure(const ClausalBase& b, const Var& v,
                                       std::vector<Var> seed) {
  std::set<Var> parents(seed.begin(), seed.end());
  parents.erase(v);

  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Var> current(parents.begin(), parents.end());
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << current.size()) && !grew; ++i) {
      const auto x = instantiation_of(current, i);
      const ClausalBase reduced = reduce_by(b, parents, x);
      const ClausalBase given = reduced.with_units(x);
      const Weight positive = certainty_degree(given, Literal{v, true});
      const Weight negative = certainty_degree(given, Literal{v, false});
      if (positive.is_zero() && negative.is_zero()) continue;

      // A positive certainty exceeds this level; any residual clause above
      // it can be falsified by a completion and shift the conditional.
      const Weight level = inconsistency_degree(given);
      for (const auto& e : reduced.entries()) {
        if (e.clause.empty() || e.clause.mentions(v) || e.weight <= level) continue;
        for (const auto& u : e.clause.vars()) grew |= parents.insert(u).second;
      }
    }
  }
  return {parents.begin(), parents.end()};
}

Weight conditional_possibility(const ClausalBase& b, const Literal& l,
                               std::span<const Literal> ctx) {
  return conditional_possibility(b, Formula::literal(l), Formula::of(ctx));
}

Cpt cpt_for(const ClausalBase& b, const Var& v, std::vector<Var> parents) {
  const Weight inc = inconsistency_degree(b);
  if (!inc.is_zero()) throw InconsistentBaseError(inc.str());

  const std::uint64_t count = std::uint64_t{1} << parents.size();
  std::vector<Weight> cells;
  cells.reserve(2 * count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto x = instantiation_of(parents, i);
    const ClausalBase given = b.with_units(x);
    const Weight h = inconsistency_degree(given).complement();
    for (const bool polarity : {true, false}) {
      if (h.is_zero()) {
        cells.push_back(Weight::one());
        continue;
      }
      const std::vector<Literal> target{Literal{v, polarity}};
      const Weight joint = inconsistency_degree(given.with_units(target)).complement();
      cells.push_back(joint / h);
    }
  }
  return Cpt(v, std::move(parents), std::move(cells));
}

Compilation compile(const ClausalBase& b, const Ordering& order) {
  order.check_covers(b.variables());
  ClausalBase stage = canonicalize(b);
  if (const Weight inc = inconsistency_degree(stage); !inc.is_zero()) {
    throw InconsistentBaseError(inc.str());
  }

  std::vector<CompileStage> stages;
  std::vector<Cpt> nodes;
  for (const auto& v : order.sequence()) {
    auto immediate = immediate_parents(stage, v);
    auto parents = hidden_parent_closure(stage, v, immediate);
    std::sort(parents.begin(), parents.end(), [&](const Var& x, const Var& y) {
      return order.position(x) < order.position(y);
    });
    nodes.push_back(cpt_for(stage, v, parents));
    ClausalBase next = marginal_base(stage, v);
    stages.push_back({v, std::move(stage), std::move(immediate), std::move(parents), next});
    stage = std::move(next);
  }
  return {Network(order.sequence(), std::move(nodes)), std::move(stages)};
}

Network compile_network(const ClausalBase& b, const Ordering& order) {
  return compile(b, order).network;
}

Network compile_network(const WeightedBase& b, const Ordering& order) {
  return compile(to_clausal(b), order).network;
}

}  // namespace posgraph
