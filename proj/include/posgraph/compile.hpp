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

// The base -> network compiler. Variables are eliminated in a fixed
// ordering; at each stage the current base yields the node's parent set and
// conditional table, and is then replaced by its max-marginal base.

#pragma once

#include <span>
#include <vector>

#include "posgraph/model.hpp"
#include "posgraph/network.hpp"

namespace posgraph {

/// A permutation of a base's variables; sequence()[0] is eliminated first.
class Ordering {
 public:
  explicit Ordering(std::vector<Var> sequence);

  const std::vector<Var>& sequence() const { return sequence_; }
  /// Position of v; DomainError if absent.
  std::size_t position(const Var& v) const;
  /// Throws DomainError unless this is a permutation of `variables`.
  void check_covers(std::span<const Var> variables) const;

 private:
  std::vector<Var> sequence_;
};

/// Variables other than v sharing a clause with v, sorted by name.
std::vector<Var> immediate_parents(const ClausalBase& b, const Var& v);

/// Grows `seed` with variables whose instantiation can change the
/// conditional possibility of v. For each instantiation x of the current
/// set: drop clauses satisfied by x, strip literals falsified by x, and if
/// v or !v has positive certainty in that reduced base plus x, every
/// remaining clause not mentioning v whose weight exceeds the reduced base's
/// inconsistency degree contributes its variables. Restarts after each
/// growth; the result is sorted by name.
std::vector<Var> hidden_parent_closure(const ClausalBase& b, const Var& v,
                                       std::vector<Var> seed);

/// Pi(l | ctx) by product-based conditioning (1 when Pi(ctx) = 0).
/// Throws InconsistentBaseError when Inc(b) > 0.
Weight conditional_possibility(const ClausalBase& b, const Literal& l,
                               std::span<const Literal> ctx);

/// Table of v given `parents` (kept in the given order).
Cpt cpt_for(const ClausalBase& b, const Var& v, std::vector<Var> parents);

struct CompileStage {
  Var var;
  ClausalBase base;  // the stage base the node was read from
  std::vector<Var> immediate_parents;
  std::vector<Var> parents;  // sorted by ordering position
  ClausalBase marginal;  // base handed to the next stage
};

struct Compilation {
  Network network;
  std::vector<CompileStage> stages;
};

/// Full compilation with per-stage trace. The input is canonicalized
/// first; an inconsistent input throws InconsistentBaseError.
Compilation compile(const ClausalBase& b, const Ordering& order);

Network compile_network(const ClausalBase& b, const Ordering& order);
Network compile_network(const WeightedBase& b, const Ordering& order);

}  // namespace posgraph
