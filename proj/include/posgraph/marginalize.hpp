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

// Syntactic variable elimination: the base of a restricted distribution
// and the max-marginal ("forgetting") base.

#pragma once

#include "posgraph/model.hpp"

namespace posgraph {

/// Conditions b on `l` without renormalizing and forgets l's variable:
/// clauses containing l are dropped, !l is deleted from the others (weights
/// kept). Its distribution over the remaining variables is w -> Pi_b(l & w).
/// Empty clauses may result and are kept.
ClausalBase instantiate(const ClausalBase& b, const Literal& l);

/// Base of the max-marginal of pi_b over `v`: pairwise disjunctions of
/// instantiate(b, v) x instantiate(b, !v) at min weight, canonicalized.
ClausalBase marginal_base(const ClausalBase& b, const Var& v);

/// pi_b restricted to the models of v (positive) and of !v (negative),
/// zero elsewhere. Their pointwise max is pi_b.
struct Decomposition {
  Distribution positive;
  Distribution negative;
};
Decomposition decompose_check(const ClausalBase& b, const Var& v);

}  // namespace posgraph
