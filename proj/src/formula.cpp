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

#include <set>
#include <utility>

#include "posgraph/error.hpp"
#include "posgraph/model.hpp"

namespace posgraph {

struct Formula::Node {
  Kind kind = Kind::kConstant;
  bool value = true;
  std::optional<Literal> literal;
  std::vector<Formula> operands;
};

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula::Formula() : Formula(constant(true)) {}

Formula Formula::constant(bool value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kConstant;
  n->value = value;
  return Formula(std::move(n));
}

Formula Formula::literal(Literal l) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kLiteral;
  n->literal = std::move(l);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula operand) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kNot;
  n->operands.push_back(std::move(operand));
  return Formula(std::move(n));
}

Formula Formula::conjunction(std::vector<Formula> operands) {
  if (operands.empty()) return constant(true);
  if (operands.size() == 1) return std::move(operands.front());
  auto n = std::make_shared<Node>();
  n->kind = Kind::kAnd;
  n->operands = std::move(operands);
  return Formula(std::move(n));
}

Formula Formula::disjunction(std::vector<Formula> operands) {
  if (operands.empty()) return constant(false);
  if (operands.size() == 1) return std::move(operands.front());
  auto n = std::make_shared<Node>();
  n->kind = Kind::kOr;
  n->operands = std::move(operands);
  return Formula(std::move(n));
}

Formula Formula::of(const Clause& c) {
  std::vector<Formula> ops;
  for (const auto& l : c) ops.push_back(literal(l));
  return disjunction(std::move(ops));
}

Formula Formula::of(std::span<const Literal> conjuncts) {
  std::vector<Formula> ops;
  for (const auto& l : conjuncts) ops.push_back(literal(l));
  return conjunction(std::move(ops));
}

Formula::Kind Formula::kind() const { return node_->kind; }

bool Formula::constant_value() const {
  if (node_->kind != Kind::kConstant) throw DomainError("not a constant");
  return node_->value;
}

const Literal& Formula::literal_value() const {
  if (node_->kind != Kind::kLiteral) throw DomainError("not a literal");
  return *node_->literal;
}

std::span<const Formula> Formula::operands() const { return node_->operands; }

std::vector<Var> Formula::vars() const {
  std::vector<Var> out;
  std::set<Var> seen;
  std::vector<const Formula*> stack{this};
  // Depth-first, left to right.
  while (!stack.empty()) {
    const Formula* f = stack.back();
    stack.pop_back();
    if (f->kind() == Kind::kLiteral) {
      if (seen.insert(f->literal_value().var).second) {
        out.push_back(f->literal_value().var);
      }
      continue;
    }
    const auto ops = f->operands();
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) stack.push_back(&*it);
  }
  return out;
}

namespace {

// 0: or, 1: and, 2: unary/atom.
int precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kOr:
      return 0;
    case Formula::Kind::kAnd:
      return 1;
    default:
      return 2;
  }
}

std::string render(const Formula& f, int context) {
  std::string s;
  switch (f.kind()) {
    case Formula::Kind::kConstant:
      return f.constant_value() ? "true" : "false";
    case Formula::Kind::kLiteral:
      return to_string(f.literal_value());
    case Formula::Kind::kNot:
      return "!" + render(f.operands()[0], 2);
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      const int p = precedence(f);
      const char* sep = f.kind() == Formula::Kind::kAnd ? " & " : " | ";
      for (const auto& g : f.operands()) {
        if (!s.empty()) s += sep;
        // Nested same-kind operands render flat; & inside | needs no parens.
        s += render(g, p == 0 ? 0 : 1);
      }
      return p < context ? "(" + s + ")" : s;
    }
  }
  return s;
}

}  // namespace

std::string to_string(const Formula& f) { return render(f, 0); }

}  // namespace posgraph
