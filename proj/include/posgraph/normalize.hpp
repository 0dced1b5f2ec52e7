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

// Canonicalization passes over weighted bases. Every pass preserves the
// base's possibility distribution exactly.

#pragma once

#include <span>
#include <vector>

#include "posgraph/model.hpp"

namespace posgraph {

/// CNF of `f` by distributive expansion: no auxiliary variables, so the
/// result can grow exponentially in the nesting of | over &. Clauses are
/// deduplicated; tautologies are kept.
std::vector<Clause> clauses_of(const Formula& f);

/// Replaces each (f, a) by (c, a) for every clause c of f's CNF.
ClausalBase to_clausal(const WeightedBase& b);

ClausalBase remove_tautologies(const ClausalBase& b);

/// Collapses repeated clauses to one entry carrying the maximum weight.
ClausalBase merge_duplicates(const ClausalBase& b);

/// premises |- c, decided as unsatisfiability of premises + !c.
bool entails(std::span<const Clause> premises, const Clause& c);

/// Non-strict: (b - {e}) cut at >= weight entails e's clause.
/// Strict: b cut at > weight entails it. Throws DomainError if e is not
/// an entry of b.
bool is_subsumed(const ClausalBase& b, const WeightedClause& e, bool strict);

/// Merges duplicates (max weight), then drops subsumed entries in
/// ascending weight order (ties by clause order). The result is sorted by
/// descending weight, then clause.
ClausalBase remove_subsumed(const ClausalBase& b);

/// remove_tautologies + remove_subsumed.
ClausalBase canonicalize(const ClausalBase& b);

}  // namespace posgraph
