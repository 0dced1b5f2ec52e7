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

#include "posgraph/normalize.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "posgraph/error.hpp"
#include "sat.hpp"

namespace posgraph {

namespace {

using Cnf = std::vector<Clause>;

Cnf dedup(Cnf cnf) {
  std::sort(cnf.begin(), cnf.end());
  cnf.erase(std::unique(cnf.begin(), cnf.end()), cnf.end());
  return cnf;
}

// CNF of f (positive) or of !f (negative), pushing negation inward.
Cnf cnf_of(const Formula& f, bool positive) {
  switch (f.kind()) {
    case Formula::Kind::kConstant:
      return f.constant_value() == positive ? Cnf{} : Cnf{Clause{}};
    case Formula::Kind::kLiteral: {
      const auto& l = f.literal_value();
      return Cnf{Clause{positive ? l : negate(l)}};
    }
    case Formula::Kind::kNot:
      return cnf_of(f.operands()[0], !positive);
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      const bool conjunctive = (f.kind() == Formula::Kind::kAnd) == positive;
      if (conjunctive) {
        Cnf out;
        for (const auto& g : f.operands()) {
          auto part = cnf_of(g, positive);
          out.insert(out.end(), part.begin(), part.end());
        }
        return dedup(std::move(out));
      }
      Cnf acc{Clause{}};
      for (const auto& g : f.operands()) {
        const auto part = cnf_of(g, positive);
        Cnf next;
        next.reserve(acc.size() * part.size());
        for (const auto& c : acc) {
          for (const auto& d : part) next.push_back(c.disjoin(d));
        }
        acc = dedup(std::move(next));
      }
      return acc;
    }
  }
  return {};
}

std::vector<const Clause*> pointers(std::span<const Clause> clauses) {
  std::vector<const Clause*> out;
  out.reserve(clauses.size());
  for (const auto& c : clauses) out.push_back(&c);
  return out;
}

bool entails_ptr(std::span<const Clause* const> premises, const Clause& c) {
  std::vector<Literal> negated;
  negated.reserve(c.size());
  for (const auto& l : c) negated.push_back(negate(l));
  return !detail::satisfiable(premises, negated);
}

}  // namespace

std::vector<Clause> clauses_of(const Formula& f) { return cnf_of(f, true); }

ClausalBase to_clausal(const WeightedBase& b) {
  std::vector<WeightedClause> out;
  for (const auto& e : b.entries()) {
    for (auto& c : clauses_of(e.formula)) out.push_back({std::move(c), e.weight});
  }
  return ClausalBase(b.variables(), std::move(out));
}

ClausalBase remove_tautologies(const ClausalBase& b) {
  std::vector<WeightedClause> out;
  for (const auto& e : b.entries()) {
    if (!e.clause.is_tautology()) out.push_back(e);
  }
  return ClausalBase(b.variables(), std::move(out));
}

ClausalBase merge_duplicates(const ClausalBase& b) {
  std::vector<WeightedClause> out;
  for (const auto& e : b.entries()) {
    auto it = std::find_if(out.begin(), out.end(), [&](const WeightedClause& x) {
      return x.clause == e.clause;
    });
    if (it == out.end()) {
      out.push_back(e);
    } else {
      it->weight = max(it->weight, e.weight);
    }
  }
  return ClausalBase(b.variables(), std::move(out));
}

bool entails(std::span<const Clause> premises, const Clause& c) {
  const auto ptrs = pointers(premises);
  return entails_ptr(ptrs, c);
}

bool is_subsumed(const ClausalBase& b, const WeightedClause& e, bool strict) {
  const auto& entries = b.entries();
  const auto self = std::find(entries.begin(), entries.end(), e);
  if (self == entries.end()) {
    throw DomainError("entry (" + to_string(e.clause) + ", " + e.weight.str() +
                      ") is not in the base");
  }
  std::vector<const Clause*> premises;
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    if (strict ? it->weight > e.weight
               : (it != self && it->weight >= e.weight)) {
      premises.push_back(&it->clause);
    }
  }
  return entails_ptr(premises, e.clause);
}

ClausalBase remove_subsumed(const ClausalBase& b) {
  const ClausalBase merged = merge_duplicates(b);
  const auto& entries = merged.entries();

  std::vector<std::size_t> order(entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (entries[i].weight != entries[j].weight) {
      return entries[i].weight < entries[j].weight;
    }
    return entries[i].clause < entries[j].clause;
  });

  // Removing an entry never makes a kept one subsumed, so one pass reaches
  // the fixpoint.
  std::vector<bool> alive(entries.size(), true);
  std::vector<const Clause*> premises;
  for (const std::size_t i : order) {
    const auto& e = entries[i];
    premises.clear();
    bool syntactic = false;
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (j == i || !alive[j] || entries[j].weight < e.weight) continue;
      if (entries[j].clause.subset_of(e.clause)) {
        syntactic = true;
        break;
      }
      premises.push_back(&entries[j].clause);
    }
    if (syntactic || entails_ptr(premises, e.clause)) alive[i] = false;
  }

  std::vector<WeightedClause> out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (alive[i]) out.push_back(entries[i]);
  }
  std::sort(out.begin(), out.end(),
            [](const WeightedClause& x, const WeightedClause& y) {
              if (x.weight != y.weight) return x.weight > y.weight;
              return x.clause < y.clause;
            });
  return ClausalBase(b.variables(), std::move(out));
}

ClausalBase canonicalize(const ClausalBase& b) {
  return remove_subsumed(remove_tautologies(b));
}

}  // namespace posgraph
