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

// Text formats: the weighted-base grammar, the network JSON document and
// DOT export.
//
// Base grammar, one entry per line:
//
//   # comment
//   vars su wi se            (optional; fixes the universe and its order)
//   2/3: su | !wi
//   .4: a2 | (a1 & !a3)
//
// Weights are `p/q`, integers or decimals, parsed exactly, in (0, 1].
// Formulas use ! & | and parentheses, with ! binding tightest and |
// loosest; `true` and `false` are constants.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "posgraph/model.hpp"
#include "posgraph/network.hpp"

namespace posgraph {

/// Throws SyntaxError (with line/column) or DomainError for bad weights.
WeightedBase parse_base(std::string_view text);
Formula parse_formula(std::string_view text);
/// Comma-separated literals such as "se,!wi,su".
std::vector<Literal> parse_literals(std::string_view text);
/// Comma-separated variable names such as "se,wi,su".
std::vector<Var> parse_var_list(std::string_view text);

/// `vars` line followed by `p/q: formula` lines.
std::string serialize_base(const WeightedBase& b);
std::string serialize_base(const ClausalBase& b);

/// JSON with sorted keys: {"nodes": [{"cpt": [{"assignment", "polarity",
/// "weight"}...], "parents", "var"}...], "ordering": [...]}.
std::string serialize_network(const Network& n);

struct ParsedNetwork {
  Network network;
  std::vector<NormalizationViolation> warnings;
};

/// Throws SchemaError on malformed documents, cycles or incomplete tables.
/// Normalization violations are reported, not rejected.
ParsedNetwork parse_network(std::string_view text);

/// `digraph` with parent -> child edges.
std::string export_dot(const Network& n);

}  // namespace posgraph
