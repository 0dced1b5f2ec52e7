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

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "posgraph/error.hpp"
#include "posgraph/model.hpp"

namespace posgraph {

bool is_valid_var_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Var::Var(std::string name) : name_(std::move(name)) {
  if (!is_valid_var_name(name_)) {
    throw DomainError("invalid variable name '" + name_ + "'");
  }
}

std::string to_string(const Literal& l) {
  return l.positive ? l.var.name() : "!" + l.var.name();
}

// Clause

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()),
                  literals_.end());
}

Clause::Clause(std::initializer_list<Literal> literals)
    : Clause(std::vector<Literal>(literals)) {}

bool Clause::contains(const Literal& l) const {
  return std::binary_search(literals_.begin(), literals_.end(), l);
}

bool Clause::mentions(const Var& v) const {
  return contains(Literal{v, true}) || contains(Literal{v, false});
}

bool Clause::is_tautology() const {
  // Sorted by variable, so complementary literals are adjacent.
  for (std::size_t i = 1; i < literals_.size(); ++i) {
    if (literals_[i].var == literals_[i - 1].var) return true;
  }
  return false;
}

bool Clause::subset_of(const Clause& other) const {
  return std::includes(other.literals_.begin(), other.literals_.end(),
                       literals_.begin(), literals_.end());
}

std::vector<Var> Clause::vars() const {
  std::vector<Var> out;
  for (const auto& l : literals_) {
    if (out.empty() || out.back() != l.var) out.push_back(l.var);
  }
  return out;
}

Clause Clause::without(const Literal& l) const {
  Clause c;
  c.literals_.reserve(literals_.size());
  for (const auto& x : literals_) {
    if (x != l) c.literals_.push_back(x);
  }
  return c;
}

Clause Clause::disjoin(const Clause& other) const {
  Clause c;
  c.literals_.reserve(literals_.size() + other.literals_.size());
  std::set_union(literals_.begin(), literals_.end(), other.literals_.begin(),
                 other.literals_.end(), std::back_inserter(c.literals_));
  return c;
}

std::strong_ordering operator<=>(const Clause& a, const Clause& b) {
  if (auto c = a.literals_.size() <=> b.literals_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.literals_.begin(), a.literals_.end(), b.literals_.begin(),
      b.literals_.end());
}

std::string to_string(const Clause& c) {
  if (c.empty()) return "false";
  std::string s;
  for (const auto& l : c) {
    if (!s.empty()) s += " | ";
    s += to_string(l);
  }
  return s;
}

// Bases

namespace {

void check_unique(const std::vector<Var>& vars) {
  std::set<Var> seen;
  for (const auto& v : vars) {
    if (!seen.insert(v).second) {
      throw DomainError("variable '" + v.name() + "' declared twice");
    }
  }
}

void append_new(std::vector<Var>& universe, std::set<Var>& seen,
                const std::vector<Var>& vars) {
  for (const auto& v : vars) {
    if (seen.insert(v).second) universe.push_back(v);
  }
}

template <typename Entry>
void check_covered(const std::vector<Var>& universe,
                   const std::vector<Entry>& entries, auto vars_of) {
  std::set<Var> known(universe.begin(), universe.end());
  for (const auto& e : entries) {
    for (const auto& v : vars_of(e)) {
      if (!known.count(v)) {
        throw DomainError("variable '" + v.name() +
                          "' is not in the declared universe");
      }
    }
  }
}

template <typename Entry>
void drop_vacuous(std::vector<Entry>& entries) {
  std::erase_if(entries, [](const Entry& e) { return e.weight.is_zero(); });
}

}  // namespace

WeightedBase::WeightedBase(std::vector<WeightedFormula> entries)
    : entries_(std::move(entries)) {
  drop_vacuous(entries_);
  std::set<Var> seen;
  for (const auto& e : entries_) append_new(variables_, seen, e.formula.vars());
}

WeightedBase::WeightedBase(std::vector<Var> variables,
                           std::vector<WeightedFormula> entries)
    : variables_(std::move(variables)), entries_(std::move(entries)) {
  check_unique(variables_);
  drop_vacuous(entries_);
  check_covered(variables_, entries_,
                [](const WeightedFormula& e) { return e.formula.vars(); });
}

ClausalBase::ClausalBase(std::vector<WeightedClause> entries)
    : entries_(std::move(entries)) {
  drop_vacuous(entries_);
  std::set<Var> seen;
  for (const auto& e : entries_) append_new(variables_, seen, e.clause.vars());
}

ClausalBase::ClausalBase(std::vector<Var> variables,
                         std::vector<WeightedClause> entries)
    : variables_(std::move(variables)), entries_(std::move(entries)) {
  check_unique(variables_);
  drop_vacuous(entries_);
  check_covered(variables_, entries_,
                [](const WeightedClause& e) { return e.clause.vars(); });
}

ClausalBase ClausalBase::with(std::span<const WeightedClause> extra) const {
  ClausalBase out = *this;
  std::set<Var> seen(out.variables_.begin(), out.variables_.end());
  for (const auto& e : extra) {
    if (e.weight.is_zero()) continue;
    append_new(out.variables_, seen, e.clause.vars());
    out.entries_.push_back(e);
  }
  return out;
}

ClausalBase ClausalBase::with_units(std::span<const Literal> context) const {
  std::vector<WeightedClause> units;
  units.reserve(context.size());
  for (const auto& l : context) units.push_back({Clause{l}, Weight::one()});
  return with(units);
}

WeightedBase ClausalBase::to_formula_base() const {
  std::vector<WeightedFormula> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back({Formula::of(e.clause), e.weight});
  return WeightedBase(variables_, std::move(out));
}

// Interpretation

std::optional<std::size_t> position_of(const Universe& universe, const Var& v) {
  const auto it = std::find(universe.begin(), universe.end(), v);
  if (it == universe.end()) return std::nullopt;
  return static_cast<std::size_t>(it - universe.begin());
}

Interpretation::Interpretation(std::shared_ptr<const Universe> universe,
                               std::uint64_t index)
    : universe_(std::move(universe)), values_(universe_->size()) {
  if (universe_->size() < 64 && (index >> universe_->size()) != 0) {
    throw DomainError("interpretation index out of range");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i] = i < 64 && ((index >> i) & 1U);
  }
}

Interpretation::Interpretation(std::shared_ptr<const Universe> universe,
                               std::span<const Literal> literals)
    : universe_(std::move(universe)), values_(universe_->size()) {
  std::vector<bool> assigned(values_.size(), false);
  for (const auto& l : literals) {
    const auto p = position_of(*universe_, l.var);
    if (!p) {
      throw DomainError("variable '" + l.var.name() + "' is not in the universe");
    }
    if (assigned[*p]) {
      throw DomainError("variable '" + l.var.name() + "' assigned twice");
    }
    assigned[*p] = true;
    values_[*p] = l.positive;
  }
  for (std::size_t i = 0; i < assigned.size(); ++i) {
    if (!assigned[i]) {
      throw DomainError("world does not assign '" + (*universe_)[i].name() + "'");
    }
  }
}

bool Interpretation::value(const Var& v) const {
  const auto p = position_of(*universe_, v);
  if (!p) throw DomainError("variable '" + v.name() + "' is not in the universe");
  return values_[*p];
}

std::uint64_t Interpretation::index() const {
  if (values_.size() > 64) throw DomainError("universe too large to index");
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i]) index |= std::uint64_t{1} << i;
  }
  return index;
}

std::vector<Literal> Interpretation::literals() const {
  std::vector<Literal> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    out.push_back(Literal{(*universe_)[i], values_[i]});
  }
  return out;
}

bool satisfies(const Interpretation& w, const Literal& l) {
  return w.value(l.var) == l.positive;
}

bool satisfies(const Interpretation& w, const Clause& c) {
  return std::any_of(c.begin(), c.end(),
                     [&](const Literal& l) { return satisfies(w, l); });
}

bool satisfies(const Interpretation& w, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kConstant:
      return f.constant_value();
    case Formula::Kind::kLiteral:
      return satisfies(w, f.literal_value());
    case Formula::Kind::kNot:
      return !satisfies(w, f.operands()[0]);
    case Formula::Kind::kAnd:
      for (const auto& g : f.operands()) {
        if (!satisfies(w, g)) return false;
      }
      return true;
    case Formula::Kind::kOr:
      for (const auto& g : f.operands()) {
        if (satisfies(w, g)) return true;
      }
      return false;
  }
  return false;
}

// Distribution

Distribution::Distribution(Universe universe, std::vector<Weight> values)
    : universe_(std::make_shared<const Universe>(std::move(universe))),
      values_(std::move(values)) {
  check_unique(*universe_);
  if (universe_->size() > kMaxVariables) {
    throw ResourceError("distribution over " + std::to_string(universe_->size()) +
                        " variables exceeds the supported maximum");
  }
  if (values_.size() != (std::size_t{1} << universe_->size())) {
    throw DomainError("distribution must define every interpretation");
  }
}

const Weight& Distribution::at(const Interpretation& w) const {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < universe_->size(); ++i) {
    if (w.value((*universe_)[i])) index |= std::uint64_t{1} << i;
  }
  if (w.universe().size() != universe_->size()) {
    throw DomainError("world and distribution have different universes");
  }
  return values_[index];
}

Interpretation Distribution::interpretation(std::uint64_t index) const {
  return Interpretation(universe_, index);
}

bool Distribution::normalized() const { return max_value().is_one(); }

Weight Distribution::max_value() const {
  Weight best;
  for (const auto& v : values_) best = max(best, v);
  return best;
}

}  // namespace posgraph
