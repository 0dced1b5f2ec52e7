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

#include "sat.hpp"

#include <string_view>
#include <unordered_map>
#include <vector>

namespace posgraph::detail {

namespace {

// Literal code: 2 * var + (negative ? 1 : 0).
class Dpll {
 public:
  Dpll(std::vector<std::vector<int>> clauses, int num_vars)
      : clauses_(std::move(clauses)), value_(num_vars, kUnassigned) {}

  bool solve() {
    if (!propagate()) return false;
    const int var = pick_branch_var();
    if (var < 0) return true;
    for (const signed char polarity : {kTrue, kFalse}) {
      const auto mark = trail_.size();
      assign(var, polarity);
      if (solve()) return true;
      undo(mark);
    }
    return false;
  }

  bool assume(int code) {
    const int var = code >> 1;
    const signed char want = (code & 1) ? kFalse : kTrue;
    if (value_[var] == kUnassigned) {
      assign(var, want);
      return true;
    }
    return value_[var] == want;
  }

 private:
  static constexpr signed char kUnassigned = -1;
  static constexpr signed char kFalse = 0;
  static constexpr signed char kTrue = 1;

  signed char literal_value(int code) const {
    const signed char v = value_[code >> 1];
    if (v == kUnassigned) return kUnassigned;
    return (code & 1) ? static_cast<signed char>(1 - v) : v;
  }

  void assign(int var, signed char v) {
    value_[var] = v;
    trail_.push_back(var);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = kUnassigned;
      trail_.pop_back();
    }
  }

  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& clause : clauses_) {
        int open = 0;
        int last_open = -1;
        bool sat = false;
        for (int code : clause) {
          const signed char v = literal_value(code);
          if (v == kTrue) {
            sat = true;
            break;
          }
          if (v == kUnassigned) {
            ++open;
            last_open = code;
          }
        }
        if (sat) continue;
        if (open == 0) return false;
        if (open == 1) {
          assign(last_open >> 1, (last_open & 1) ? kFalse : kTrue);
          changed = true;
        }
      }
    }
    return true;
  }

  // First unassigned variable of the shortest open clause.
  int pick_branch_var() const {
    int best = -1;
    std::size_t best_open = 0;
    for (const auto& clause : clauses_) {
      std::size_t open = 0;
      int candidate = -1;
      bool sat = false;
      for (int code : clause) {
        const signed char v = literal_value(code);
        if (v == kTrue) {
          sat = true;
          break;
        }
        if (v == kUnassigned) {
          ++open;
          if (candidate < 0) candidate = code >> 1;
        }
      }
      if (sat || open == 0) continue;
      if (best < 0 || open < best_open) {
        best = candidate;
        best_open = open;
      }
    }
    return best;
  }

  std::vector<std::vector<int>> clauses_;
  std::vector<signed char> value_;
  std::vector<int> trail_;
};

}  // namespace

bool satisfiable(std::span<const Clause* const> clauses,
                 std::span<const Literal> assumptions) {
  std::unordered_map<std::string_view, int> index;
  const auto code_of = [&](const Literal& l) {
    const auto [it, inserted] =
        index.try_emplace(l.var.name(), static_cast<int>(index.size()));
    return 2 * it->second + (l.positive ? 0 : 1);
  };

  std::vector<std::vector<int>> coded;
  coded.reserve(clauses.size());
  for (const Clause* c : clauses) {
    if (c->empty()) return false;
    if (c->is_tautology()) continue;
    std::vector<int> lits;
    lits.reserve(c->size());
    for (const auto& l : *c) lits.push_back(code_of(l));
    coded.push_back(std::move(lits));
  }
  std::vector<int> assumed;
  assumed.reserve(assumptions.size());
  for (const auto& l : assumptions) assumed.push_back(code_of(l));

  Dpll solver(std::move(coded), static_cast<int>(index.size()));
  for (int code : assumed) {
    if (!solver.assume(code)) return false;
  }
  return solver.solve();
}

}  // namespace posgraph::detail
