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

#include "posgraph/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "posgraph/error.hpp"

namespace posgraph::oracle {

namespace {

using Assignment = std::vector<bool>;
using Positions = std::map<std::string, std::size_t>;

bool holds(const Formula& f, const Positions& at, const Assignment& world) {
  switch (f.kind()) {
    case Formula::Kind::kConstant:
      return f.constant_value();
    case Formula::Kind::kLiteral: {
      const auto& l = f.literal_value();
      return world[at.at(l.var.name())] == l.positive;
    }
    case Formula::Kind::kNot:
      return !holds(f.operands()[0], at, world);
    case Formula::Kind::kAnd:
      return std::all_of(f.operands().begin(), f.operands().end(),
                         [&](const Formula& g) { return holds(g, at, world); });
    case Formula::Kind::kOr:
      return std::any_of(f.operands().begin(), f.operands().end(),
                         [&](const Formula& g) { return holds(g, at, world); });
  }
  return false;
}

// Maps each world index of `from` to the index of the same world in `to`.
std::vector<std::uint64_t> reindex(const Universe& from, const Universe& to) {
  if (from.size() != to.size() ||
      std::set<Var>(from.begin(), from.end()) != std::set<Var>(to.begin(), to.end())) {
    throw DomainError("distributions are over different variables");
  }
  std::vector<std::size_t> target_bit(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    target_bit[i] = static_cast<std::size_t>(
        std::find(to.begin(), to.end(), from[i]) - to.begin());
  }
  std::vector<std::uint64_t> map(std::size_t{1} << from.size());
  for (std::uint64_t w = 0; w < map.size(); ++w) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < from.size(); ++i) {
      if ((w >> i) & 1U) v |= std::uint64_t{1} << target_bit[i];
    }
    map[w] = v;
  }
  return map;
}

}  // namespace

Distribution enumerate_distribution(const WeightedBase& b, std::size_t cap) {
  const Universe& universe = b.variables();
  if (universe.size() > cap) {
    throw ResourceError("enumeration over " + std::to_string(universe.size()) +
                        " variables exceeds the cap of " + std::to_string(cap));
  }
  Positions at;
  for (std::size_t i = 0; i < universe.size(); ++i) at[universe[i].name()] = i;

  const std::uint64_t worlds = std::uint64_t{1} << universe.size();
  std::vector<Weight> values;
  values.reserve(worlds);
  Assignment world(universe.size());
  for (std::uint64_t w = 0; w < worlds; ++w) {
    for (std::size_t i = 0; i < universe.size(); ++i) world[i] = (w >> i) & 1U;
    // 1 - max falsified weight, written as a min of complements.
    mpq_class value = 1;
    for (const auto& e : b.entries()) {
      if (!holds(e.formula, at, world)) {
        const mpq_class c = 1 - e.weight.value();
        if (c < value) value = c;
      }
    }
    values.emplace_back(value);
  }
  return Distribution(universe, std::move(values));
}

Distribution enumerate_distribution(const ClausalBase& b, std::size_t cap) {
  return enumerate_distribution(b.to_formula_base(), cap);
}

bool distributions_equal(const Distribution& a, const Distribution& b) {
  const auto map = reindex(a.universe(), b.universe());
  for (std::uint64_t w = 0; w < map.size(); ++w) {
    if (a.at(w) != b.at(map[w])) return false;
  }
  return true;
}

VerificationReport verify_compilation(const WeightedBase& b, const Network& n) {
  const Distribution expected = enumerate_distribution(b);
  std::vector<Var> net_vars = n.ordering();
  if (net_vars.size() > kDefaultEnumerationCap) {
    throw ResourceError("network exceeds the enumeration cap");
  }
  const Distribution actual = network_distribution(n);
  const auto map = reindex(expected.universe(), actual.universe());

  VerificationReport report;
  for (std::uint64_t w = 0; w < map.size(); ++w) {
    if (expected.at(w) != actual.at(map[w])) {
      report.passed = false;
      report.mismatches.push_back(
          {expected.interpretation(w).literals(), expected.at(w), actual.at(map[w])});
    }
  }
  return report;
}

ClausalBase random_base(std::uint64_t seed, std::size_t n_vars,
                        std::size_t n_clauses, std::span<const Weight> weight_pool,
                        RandomBaseOptions options) {
  if (n_vars == 0) throw DomainError("random_base needs at least one variable");
  if (weight_pool.empty()) throw DomainError("random_base needs a weight pool");

  std::vector<Var> vars;
  for (std::size_t i = 1; i <= n_vars; ++i) vars.emplace_back("x" + std::to_string(i));

  // Raw engine output with modulo keeps the stream identical across
  // standard libraries (distributions are implementation-defined).
  std::mt19937_64 rng(seed);
  const auto draw = [&](std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
  };

  for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
    std::vector<WeightedClause> entries;
    for (std::size_t k = 0; k < n_clauses; ++k) {
      const std::size_t length = 1 + draw(std::min<std::size_t>(3, n_vars));
      std::vector<std::size_t> picked(n_vars);
      for (std::size_t i = 0; i < n_vars; ++i) picked[i] = i;
      for (std::size_t i = 0; i < length; ++i) {
        std::swap(picked[i], picked[i + draw(n_vars - i)]);
      }
      std::vector<Literal> lits;
      for (std::size_t i = 0; i < length; ++i) {
        lits.push_back(Literal{vars[picked[i]], draw(2) == 0});
      }
      entries.push_back({Clause(std::move(lits)), weight_pool[draw(weight_pool.size())]});
    }
    ClausalBase base(vars, std::move(entries));
    if (!options.require_consistent ||
        enumerate_distribution(base).max_value().is_one()) {
      return base;
    }
  }
  throw ResourceError("no consistent random base within the retry budget");
}

std::vector<Weight> default_weight_pool() {
  return {Weight(1, 5), Weight(1, 3), Weight(2, 5), Weight(1, 2),
          Weight(2, 3), Weight(7, 10), Weight::one()};
}

}  // namespace posgraph::oracle
