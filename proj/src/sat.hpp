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

#pragma once

#include <span>

#include "posgraph/model.hpp"

namespace posgraph::detail {

/// Complete DPLL search with unit propagation. True iff some assignment
/// satisfies every clause and every assumption literal.
bool satisfiable(std::span<const Clause* const> clauses,
                 std::span<const Literal> assumptions = {});

}  // namespace posgraph::detail
