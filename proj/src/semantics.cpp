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

#include "posgraph/semantics.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "posgraph/error.hpp"
#include "posgraph/normalize.hpp"
#include "sat.hpp"

namespace posgraph {

namespace {

std::size_t checked_world_count(const Universe& universe) {
  if (universe.size() > Distribution::kMaxVariables) {
    throw ResourceError("cannot tabulate a distribution over " +
                        std::to_string(universe.size()) + " variables");
  }
  return std::size_t{1} << universe.size();
}

// Distinct weights, highest first.
std::vector<Weight> levels_descending(const ClausalBase& b) {
  std::vector<Weight> levels;
  for (const auto& e : b.entries()) levels.push_back(e.weight);
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

ClausalBase with_formula(const ClausalBase& b, const Formula& f) {
  std::vector<WeightedClause> extra;
  for (auto& c : clauses_of(f)) extra.push_back({std::move(c), Weight::one()});
  return b.with(extra);
}

void require_consistent(const ClausalBase& b) {
  const Weight inc = inconsistency_degree(b);
  if (!inc.is_zero()) throw InconsistentBaseError(inc.str());
}

}  // namespace

Distribution distribution_of_base(const ClausalBase& b) {
  const Universe& universe = b.variables();
  const std::size_t worlds = checked_world_count(universe);

  struct Mask {
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
    Weight weight;
  };
  std::vector<Mask> masks;
  masks.reserve(b.size());
  for (const auto& e : b.entries()) {
    Mask m{0, 0, e.weight};
    for (const auto& l : e.clause) {
      const auto bit = std::uint64_t{1} << *position_of(universe, l.var);
      (l.positive ? m.pos : m.neg) |= bit;
    }
    masks.push_back(std::move(m));
  }

  std::vector<Weight> values;
  values.reserve(worlds);
  for (std::uint64_t w = 0; w < worlds; ++w) {
    const Weight* worst = nullptr;
    for (const auto& m : masks) {
      const bool sat = (w & m.pos) != 0 || (~w & m.neg) != 0;
      if (!sat && (worst == nullptr || *worst < m.weight)) worst = &m.weight;
    }
    values.push_back(worst ? worst->complement() : Weight::one());
  }
  return Distribution(universe, std::move(values));
}

Distribution distribution_of_base(const WeightedBase& b) {
  const std::size_t worlds = checked_world_count(b.variables());
  auto universe = std::make_shared<const Universe>(b.variables());
  std::vector<Weight> values;
  values.reserve(worlds);
  for (std::uint64_t index = 0; index < worlds; ++index) {
    const Interpretation w(universe, index);
    Weight worst;
    bool falsified = false;
    for (const auto& e : b.entries()) {
      if (!satisfies(w, e.formula)) {
        worst = falsified ? max(worst, e.weight) : e.weight;
        falsified = true;
      }
    }
    values.push_back(falsified ? worst.complement() : Weight::one());
  }
  return Distribution(b.variables(), std::move(values));
}

Weight possibility_of_world(const WeightedBase& b, const Interpretation& w) {
  for (const auto& v : b.variables()) w.value(v);  // totality check
  std::optional<Weight> worst;
  for (const auto& e : b.entries()) {
    if (!satisfies(w, e.formula)) worst = worst ? max(*worst, e.weight) : e.weight;
  }
  return worst ? worst->complement() : Weight::one();
}

bool is_satisfiable(std::span<const Clause> clauses) {
  std::vector<const Clause*> ptrs;
  ptrs.reserve(clauses.size());
  for (const auto& c : clauses) ptrs.push_back(&c);
  return detail::satisfiable(ptrs);
}

std::vector<Clause> alpha_cut(const ClausalBase& b, const CutSpec& cut) {
  std::vector<Clause> out;
  for (const auto& e : b.entries()) {
    if (cut.passes(e.weight)) out.push_back(e.clause);
  }
  return out;
}

Weight inconsistency_degree(const ClausalBase& b) {
  // The cut only grows as the threshold falls, so keep extending it.
  const auto levels = levels_descending(b);
  std::vector<const Clause*> cut;
  for (const auto& level : levels) {
    for (const auto& e : b.entries()) {
      if (e.weight == level) cut.push_back(&e.clause);
    }
    if (!detail::satisfiable(cut)) return level;
  }
  return Weight::zero();
}

Weight inconsistency_degree(const WeightedBase& b) {
  return inconsistency_degree(to_clausal(b));
}

Weight possibility(const ClausalBase& b, const Formula& f) {
  require_consistent(b);
  return inconsistency_degree(with_formula(b, f)).complement();
}

Weight possibility_by_models(const ClausalBase& b, const Formula& f) {
  std::vector<Var> universe = b.variables();
  for (const auto& v : f.vars()) {
    if (!position_of(universe, v)) universe.push_back(v);
  }
  const Distribution d =
      distribution_of_base(ClausalBase(std::move(universe), b.entries()));
  Weight best;
  for (std::uint64_t i = 0; i < d.size(); ++i) {
    if (d.at(i) > best && satisfies(d.interpretation(i), f)) best = d.at(i);
  }
  return best;
}

Weight necessity(const ClausalBase& b, const Formula& f) {
  return possibility(b, Formula::negation(f)).complement();
}

Weight certainty_degree(const ClausalBase& b, const Literal& l) {
  const Weight base_inc = inconsistency_degree(b);
  const std::vector<Literal> refutation{negate(l)};
  const Weight inc = inconsistency_degree(b.with_units(refutation));
  return inc > base_inc ? inc : Weight::zero();
}

Weight conditional_possibility(const ClausalBase& b, const Formula& target,
                               const Formula& context) {
  require_consistent(b);
  const ClausalBase given = with_formula(b, context);
  const Weight h = inconsistency_degree(given).complement();
  if (h.is_zero()) return Weight::one();
  const Weight h_joint = inconsistency_degree(with_formula(given, target)).complement();
  return h_joint / h;
}

ClausalBase base_of_distribution(const Distribution& d) {
  if (!d.normalized()) {
    throw DomainError("distribution is not normalized (max " +
                      d.max_value().str() + ")");
  }
  std::map<Weight, std::vector<Formula>, std::greater<>> models_by_level;
  for (std::uint64_t i = 0; i < d.size(); ++i) {
    if (d.at(i).is_one()) continue;
    const auto minterm = d.interpretation(i).literals();
    models_by_level[d.at(i)].push_back(Formula::of(minterm));
  }
  std::vector<WeightedFormula> entries;
  for (auto& [level, models] : models_by_level) {
    entries.push_back({Formula::negation(Formula::disjunction(std::move(models))),
                       level.complement()});
  }
  return to_clausal(WeightedBase(d.universe(), std::move(entries)));
}

}  // namespace posgraph
