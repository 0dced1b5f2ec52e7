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

// Core vocabulary: variables, literals, clauses, formulas, weighted bases,
// interpretations and possibility distributions. All types are immutable
// values once constructed.

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posgraph/weight.hpp"

namespace posgraph {

/// A binary propositional variable. Names match [A-Za-z][A-Za-z0-9_]*.
class Var {
 public:
  explicit Var(std::string name);

  const std::string& name() const { return name_; }

  friend bool operator==(const Var&, const Var&) = default;
  friend std::strong_ordering operator<=>(const Var&, const Var&) = default;

 private:
  std::string name_;
};

bool is_valid_var_name(std::string_view name);

struct Literal {
  Var var;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
  // x sorts before !x, variables by name.
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.var <=> b.var; c != 0) return c;
    return b.positive <=> a.positive;
  }
};

inline Literal negate(const Literal& l) { return Literal{l.var, !l.positive}; }
inline Literal pos(std::string name) { return Literal{Var(std::move(name)), true}; }
inline Literal neg(std::string name) { return Literal{Var(std::move(name)), false}; }

std::string to_string(const Literal& l);

/// A disjunction of literals with set semantics. The empty clause is
/// unsatisfiable.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<Literal> literals);

  std::span<const Literal> literals() const { return literals_; }
  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }

  bool contains(const Literal& l) const;
  bool mentions(const Var& v) const;
  bool is_tautology() const;
  /// True if every literal of this clause occurs in `other`.
  bool subset_of(const Clause& other) const;
  std::vector<Var> vars() const;

  Clause without(const Literal& l) const;
  Clause disjoin(const Clause& other) const;

  friend bool operator==(const Clause&, const Clause&) = default;
  // Shorter clauses first, then lexicographic on literals.
  friend std::strong_ordering operator<=>(const Clause& a, const Clause& b);

 private:
  std::vector<Literal> literals_;
};

std::string to_string(const Clause& c);

/// Propositional formula over Var with negation, conjunction, disjunction
/// and boolean constants. Shares structure on copy.
class Formula {
 public:
  enum class Kind { kConstant, kLiteral, kNot, kAnd, kOr };

  static Formula constant(bool value);
  static Formula literal(Literal l);
  static Formula negation(Formula operand);
  static Formula conjunction(std::vector<Formula> operands);
  static Formula disjunction(std::vector<Formula> operands);
  static Formula of(const Clause& c);  // disjunction; empty clause is false
  /// Conjunction of literal units (a context or minterm).
  static Formula of(std::span<const Literal> conjuncts);

  Formula();  // constant true

  Kind kind() const;
  bool constant_value() const;  // kConstant only
  const Literal& literal_value() const;  // kLiteral only
  std::span<const Formula> operands() const;  // kNot (one), kAnd, kOr

  /// Variables in order of first occurrence.
  std::vector<Var> vars() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Renders in the base-file grammar with minimal parentheses.
std::string to_string(const Formula& f);

struct WeightedFormula {
  Formula formula;
  Weight weight;
};

struct WeightedClause {
  Clause clause;
  Weight weight;

  friend bool operator==(const WeightedClause&, const WeightedClause&) = default;
};

/// A possibilistic base over general formulas. Entries with weight 0 are
/// dropped; the variable universe is ordered and covers every entry.
class WeightedBase {
 public:
  WeightedBase() = default;
  /// Universe inferred from entries in first-appearance order.
  explicit WeightedBase(std::vector<WeightedFormula> entries);
  WeightedBase(std::vector<Var> variables, std::vector<WeightedFormula> entries);

  const std::vector<Var>& variables() const { return variables_; }
  const std::vector<WeightedFormula>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Var> variables_;
  std::vector<WeightedFormula> entries_;
};

/// A possibilistic base in clausal form; the working representation of
/// every syntactic pass.
class ClausalBase {
 public:
  ClausalBase() = default;
  explicit ClausalBase(std::vector<WeightedClause> entries);
  ClausalBase(std::vector<Var> variables, std::vector<WeightedClause> entries);

  const std::vector<Var>& variables() const { return variables_; }
  const std::vector<WeightedClause>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// This base plus `extra`; new variables are appended to the universe.
  ClausalBase with(std::span<const WeightedClause> extra) const;
  /// This base plus every literal of `context` as a weight-1 unit clause.
  ClausalBase with_units(std::span<const Literal> context) const;

  WeightedBase to_formula_base() const;

  friend bool operator==(const ClausalBase&, const ClausalBase&) = default;

 private:
  std::vector<Var> variables_;
  std::vector<WeightedClause> entries_;
};

using Universe = std::vector<Var>;

/// A total truth assignment over an ordered universe.
class Interpretation {
 public:
  /// Bit i of `index` is the value of universe[i].
  Interpretation(std::shared_ptr<const Universe> universe, std::uint64_t index);
  /// Every universe variable must appear exactly once in `literals`.
  Interpretation(std::shared_ptr<const Universe> universe,
                 std::span<const Literal> literals);

  const Universe& universe() const { return *universe_; }
  bool value(const Var& v) const;  // DomainError if v is outside the universe
  std::uint64_t index() const;
  std::vector<Literal> literals() const;

 private:
  std::shared_ptr<const Universe> universe_;
  std::vector<bool> values_;
};

std::optional<std::size_t> position_of(const Universe& universe, const Var& v);

bool satisfies(const Interpretation& w, const Literal& l);
bool satisfies(const Interpretation& w, const Clause& c);
bool satisfies(const Interpretation& w, const Formula& f);

/// A possibility distribution: one Weight per interpretation of the
/// universe, indexed as in Interpretation(universe, index).
class Distribution {
 public:
  static constexpr std::size_t kMaxVariables = 30;

  Distribution(Universe universe, std::vector<Weight> values);

  const Universe& universe() const { return *universe_; }
  std::shared_ptr<const Universe> shared_universe() const { return universe_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Weight>& values() const { return values_; }

  const Weight& at(std::uint64_t index) const { return values_.at(index); }
  /// Looks the world up by variable name, so its universe may be ordered
  /// differently as long as it has the same variables.
  const Weight& at(const Interpretation& w) const;
  Interpretation interpretation(std::uint64_t index) const;

  bool normalized() const;
  Weight max_value() const;

 private:
  std::shared_ptr<const Universe> universe_;
  std::vector<Weight> values_;
};

}  // namespace posgraph
