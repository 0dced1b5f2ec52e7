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

// Possibility-theory engine over weighted bases: the best-out distribution,
// alpha-cuts, inconsistency degree, possibility/necessity measures,
// certainty degrees, and the distribution-to-base converse.

#pragma once

#include <span>
#include <vector>

#include "posgraph/model.hpp"

namespace posgraph {

/// Selects weights >= threshold, or > threshold when `strict`.
struct CutSpec {
  Weight threshold;
  bool strict = false;

  bool passes(const Weight& w) const {
    return strict ? w > threshold : w >= threshold;
  }
};

/// pi(w) = 1 if w satisfies every entry, else 1 - max weight it falsifies.
Distribution distribution_of_base(const ClausalBase& b);
Distribution distribution_of_base(const WeightedBase& b);

/// pi_b at a single world; the world must assign every base variable.
Weight possibility_of_world(const WeightedBase& b, const Interpretation& w);

bool is_satisfiable(std::span<const Clause> clauses);

std::vector<Clause> alpha_cut(const ClausalBase& b, const CutSpec& cut);

/// Highest weight whose non-strict cut is unsatisfiable; 0 if consistent.
/// One satisfiability check per distinct weight, in descending order.
Weight inconsistency_degree(const ClausalBase& b);
Weight inconsistency_degree(const WeightedBase& b);

/// Pi(f) = 1 - Inc(b + (f, 1)). Throws InconsistentBaseError when
/// Inc(b) > 0. Unsatisfiable f gives 0.
Weight possibility(const ClausalBase& b, const Formula& f);
/// Pi(f) as the max of pi_b over the models of f (semantic route).
Weight possibility_by_models(const ClausalBase& b, const Formula& f);

/// N(f) = 1 - Pi(!f); same preconditions as possibility().
Weight necessity(const ClausalBase& b, const Formula& f);

/// Degree to which `l` follows from b: Inc(b + (!l, 1)) when it exceeds
/// Inc(b), else 0. Defined for inconsistent b as well.
Weight certainty_degree(const ClausalBase& b, const Literal& l);

/// Product-based conditioning Pi(target | context), computed syntactically:
/// h = 1 - Inc(b + context), h' = 1 - Inc(b + context + target), result
/// h'/h, or 1 when h = 0. Throws InconsistentBaseError when Inc(b) > 0.
Weight conditional_possibility(const ClausalBase& b, const Formula& target,
                               const Formula& context);

/// Base whose distribution is `d`: for each level beta < 1, the negated
/// disjunction of that level's models at weight 1 - beta, in clausal form.
/// Throws DomainError unless d is normalized.
ClausalBase base_of_distribution(const Distribution& d);

}  // namespace posgraph
