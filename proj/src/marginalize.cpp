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

#include "posgraph/marginalize.hpp"

#include <algorithm>

#include "posgraph/normalize.hpp"
#include "posgraph/semantics.hpp"

namespace posgraph {

namespace {

std::vector<Var> without_var(const std::vector<Var>& vars, const Var& v) {
  std::vector<Var> out;
  out.reserve(vars.size());
  for (const auto& x : vars) {
    if (x != v) out.push_back(x);
  }
  return out;
}

}  // namespace

ClausalBase instantiate(const ClausalBase& b, const Literal& l) {
  const Literal complement = negate(l);
  std::vector<WeightedClause> out;
  out.reserve(b.size());
  for (const auto& e : b.entries()) {
    if (e.clause.contains(l)) continue;
    if (e.clause.contains(complement)) {
      out.push_back({e.clause.without(complement), e.weight});
    } else {
      out.push_back(e);
    }
  }
  return ClausalBase(without_var(b.variables(), l.var), std::move(out));
}

ClausalBase marginal_base(const ClausalBase& b, const Var& v) {
  const ClausalBase pos_side = instantiate(b, Literal{v, true});
  const ClausalBase neg_side = instantiate(b, Literal{v, false});

  std::vector<WeightedClause> cross;
  cross.reserve(pos_side.size() * neg_side.size());
  for (const auto& x : pos_side.entries()) {
    for (const auto& y : neg_side.entries()) {
      Clause c = x.clause.disjoin(y.clause);
      if (c.is_tautology()) continue;
      cross.push_back({std::move(c), min(x.weight, y.weight)});
    }
  }
  return canonicalize(ClausalBase(without_var(b.variables(), v), std::move(cross)));
}

Decomposition decompose_check(const ClausalBase& b, const Var& v) {
  std::vector<Var> universe = b.variables();
  if (!position_of(universe, v)) universe.push_back(v);
  const Distribution pi = distribution_of_base(ClausalBase(universe, b.entries()));
  const std::size_t bit = *position_of(universe, v);

  std::vector<Weight> positive(pi.size());
  std::vector<Weight> negative(pi.size());
  for (std::uint64_t i = 0; i < pi.size(); ++i) {
    ((i >> bit) & 1U ? positive : negative)[i] = pi.at(i);
  }
  return {Distribution(universe, std::move(positive)),
          Distribution(universe, std::move(negative))};
}

}  // namespace posgraph
