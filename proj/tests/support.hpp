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

// Fixtures and hand-rolled generators shared by the test binaries.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "posgraph/model.hpp"
#include "posgraph/oracle.hpp"
#include "posgraph/weight.hpp"

namespace posgraph::testing {

inline Weight w(const char* text) { return Weight::parse(text); }

inline std::vector<Var> vars(std::initializer_list<const char*> names) {
  std::vector<Var> out;
  for (const char* n : names) out.emplace_back(n);
  return out;
}

// The running weather example: su(mmer), wi(nd), se(a).
inline ClausalBase sigma_ex() {
  return ClausalBase(vars({"su", "wi", "se"}),
                     {{Clause{pos("su"), neg("wi")}, w("2/3")},
                      {Clause{neg("wi"), pos("se")}, w("1/3")},
                      {Clause{pos("wi"), neg("se")}, w("1/3")},
                      {Clause{pos("su"), pos("se")}, w("1/3")}});
}

// {(a2 | a1, .4), (a3, .7)}.
inline ClausalBase three_atoms() {
  return ClausalBase(vars({"a1", "a2", "a3"}),
                     {{Clause{pos("a2"), pos("a1")}, w("2/5")},
                      {Clause{pos("a3")}, w("7/10")}});
}

// World k of the weather example: su is true for k < 4, wi is bit 1,
// se is bit 0.
inline std::vector<Literal> weather_world(int k) {
  return {Literal{Var("su"), k < 4}, Literal{Var("wi"), (k & 2) != 0},
          Literal{Var("se"), (k & 1) != 0}};
}

// pi of the weather example for worlds 0..7.
inline std::vector<Weight> weather_pi() {
  return {w("1"), w("2/3"), w("2/3"), w("1"), w("2/3"), w("2/3"), w("1/3"), w("1/3")};
}

inline Weight at_world(const Distribution& d, std::span<const Literal> world) {
  return d.at(Interpretation(d.shared_universe(), world));
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  bool coin() { return below(2) == 1; }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

  std::vector<Var> universe(std::size_t n) {
    std::vector<Var> out;
    for (std::size_t i = 1; i <= n; ++i) out.emplace_back("x" + std::to_string(i));
    return out;
  }

  std::vector<Var> shuffled(std::vector<Var> vs) {
    std::shuffle(vs.begin(), vs.end(), rng_);
    return vs;
  }

  Literal literal(const std::vector<Var>& vs) { return Literal{pick(vs), coin()}; }

  // Any clause over vs, possibly a tautology or with repeated literals.
  Clause clause(const std::vector<Var>& vs, std::size_t max_len = 3) {
    std::vector<Literal> lits;
    const std::size_t len = 1 + below(max_len);
    for (std::size_t i = 0; i < len; ++i) lits.push_back(literal(vs));
    return Clause(std::move(lits));
  }

  Formula formula(const std::vector<Var>& vs, int depth) {
    if (depth <= 0 || below(4) == 0) {
      if (below(12) == 0) return Formula::constant(coin());
      return Formula::literal(literal(vs));
    }
    switch (below(3)) {
      case 0:
        return Formula::negation(formula(vs, depth - 1));
      case 1: {
        std::vector<Formula> ops;
        for (std::size_t i = 0, n = 2 + below(2); i < n; ++i) ops.push_back(formula(vs, depth - 1));
        return Formula::conjunction(std::move(ops));
      }
      default: {
        std::vector<Formula> ops;
        for (std::size_t i = 0, n = 2 + below(2); i < n; ++i) ops.push_back(formula(vs, depth - 1));
        return Formula::disjunction(std::move(ops));
      }
    }
  }

  Weight weight() { return pick(pool_); }

  // A general-formula base; may be inconsistent.
  WeightedBase formula_base(std::size_t n_vars, std::size_t n_entries, int depth = 3) {
    const auto vs = universe(n_vars);
    std::vector<WeightedFormula> entries;
    for (std::size_t i = 0; i < n_entries; ++i) entries.push_back({formula(vs, depth), weight()});
    return WeightedBase(vs, std::move(entries));
  }

  // A clausal base with tautologies and duplicate clauses mixed in; may be
  // inconsistent.
  ClausalBase noisy_clausal_base(std::size_t n_vars, std::size_t n_entries) {
    const auto vs = universe(n_vars);
    std::vector<WeightedClause> entries;
    for (std::size_t i = 0; i < n_entries; ++i) {
      if (!entries.empty() && below(6) == 0) {
        entries.push_back({pick(entries).clause, weight()});
      } else if (below(8) == 0) {
        const Literal l = literal(vs);
        entries.push_back({Clause{l, negate(l), literal(vs)}, weight()});
      } else {
        entries.push_back({clause(vs), weight()});
      }
    }
    return ClausalBase(vs, std::move(entries));
  }

  std::uint64_t next() { return rng_(); }

 private:
  std::mt19937_64 rng_;
  std::vector<Weight> pool_ = oracle::default_weight_pool();
};

// Every permutation of vs, in lexicographic order of positions.
inline std::vector<std::vector<Var>> permutations(const std::vector<Var>& vs) {
  std::vector<std::size_t> idx(vs.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<std::vector<Var>> out;
  do {
    std::vector<Var> p;
    for (std::size_t i : idx) p.push_back(vs[i]);
    out.push_back(std::move(p));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace posgraph::testing
