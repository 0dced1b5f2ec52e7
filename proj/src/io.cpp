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

#include "posgraph/io.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "posgraph/error.hpp"

namespace posgraph {

namespace {

using json = nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Recursive-descent formula parser; columns are reported relative to the
// enclosing line via `column_offset`.
class FormulaParser {
 public:
  FormulaParser(std::string_view text, std::size_t line, std::size_t column_offset)
      : text_(text), line_(line), offset_(column_offset) {}

  Formula parse() {
    Formula f = disjunction();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(message, line_, offset_ + pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Formula disjunction() {
    std::vector<Formula> ops{conjunction()};
    while (accept('|')) ops.push_back(conjunction());
    return Formula::disjunction(std::move(ops));
  }

  Formula conjunction() {
    std::vector<Formula> ops{unary()};
    while (accept('&')) ops.push_back(unary());
    return Formula::conjunction(std::move(ops));
  }

  Formula unary() {
    if (accept('!')) {
      Formula inner = unary();
      if (inner.kind() == Formula::Kind::kLiteral) {
        return Formula::literal(negate(inner.literal_value()));
      }
      return Formula::negation(std::move(inner));
    }
    if (accept('(')) {
      Formula inner = disjunction();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    skip_space();
    if (pos_ >= text_.size()) fail("expected a formula");
    if (!std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (name == "true") return Formula::constant(true);
    if (name == "false") return Formula::constant(false);
    return Formula::literal(Literal{Var(name), true});
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(trim(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text, 1, 0).parse(); }

std::vector<Literal> parse_literals(std::string_view text) {
  std::vector<Literal> out;
  for (auto item : split_commas(text)) {
    bool positive = true;
    if (!item.empty() && item.front() == '!') {
      positive = false;
      item = trim(item.substr(1));
    }
    if (!is_valid_var_name(item)) {
      throw SyntaxError("expected a literal, got '" + std::string(item) + "'", 1, 1);
    }
    out.push_back(Literal{Var(std::string(item)), positive});
  }
  return out;
}

std::vector<Var> parse_var_list(std::string_view text) {
  std::vector<Var> out;
  for (auto item : split_commas(text)) {
    if (!is_valid_var_name(item)) {
      throw SyntaxError("expected a variable name, got '" + std::string(item) + "'", 1, 1);
    }
    out.emplace_back(std::string(item));
  }
  return out;
}

WeightedBase parse_base(std::string_view text) {
  std::optional<std::vector<Var>> declared;
  std::vector<WeightedFormula> entries;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto newline = text.find('\n', start);
    std::string_view line = text.substr(start, newline - start);
    start = newline == std::string_view::npos ? text.size() + 1 : newline + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;

    const std::string_view body = trim(line);
    const std::size_t indent = static_cast<std::size_t>(body.data() - line.data());
    if (body.substr(0, 4) == "vars" &&
        (body.size() == 4 || std::isspace(static_cast<unsigned char>(body[4])))) {
      if (declared) throw SyntaxError("duplicate 'vars' line", line_no, indent + 1);
      if (!entries.empty()) {
        throw SyntaxError("'vars' must precede the first entry", line_no, indent + 1);
      }
      std::vector<Var> vars;
      std::istringstream names{std::string(body.substr(4))};
      for (std::string name; names >> name;) {
        if (!is_valid_var_name(name)) {
          throw SyntaxError("invalid variable name '" + name + "'", line_no, indent + 1);
        }
        vars.emplace_back(name);
      }
      if (std::set<Var>(vars.begin(), vars.end()).size() != vars.size()) {
        throw SyntaxError("'vars' lists a variable twice", line_no, indent + 1);
      }
      declared = std::move(vars);
      continue;
    }

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw SyntaxError("expected 'WEIGHT: FORMULA'", line_no, indent + 1);
    }
    const std::string_view weight_text = trim(line.substr(0, colon));
    Weight weight;
    try {
      weight = Weight::parse(weight_text);
    } catch (const DomainError&) {
      // Weight::parse also rejects well-formed values above 1.
      const bool well_formed =
          !weight_text.empty() &&
          weight_text.find_first_not_of("0123456789./") == std::string_view::npos;
      if (well_formed) {
        throw DomainError("line " + std::to_string(line_no) + ": weight " +
                          std::string(weight_text) + " is outside (0, 1]");
      }
      throw SyntaxError("malformed weight '" + std::string(weight_text) + "'", line_no,
                        indent + 1);
    }
    if (weight.is_zero()) {
      throw DomainError("line " + std::to_string(line_no) + ": weight " +
                        std::string(weight_text) + " is outside (0, 1]");
    }
    Formula f = FormulaParser(line.substr(colon + 1), line_no, colon + 1).parse();
    if (declared) {
      for (const auto& v : f.vars()) {
        if (!position_of(*declared, v)) {
          throw SyntaxError("variable '" + v.name() + "' is not declared in 'vars'",
                            line_no, colon + 2);
        }
      }
    }
    entries.push_back({std::move(f), std::move(weight)});
  }

  if (declared) return WeightedBase(std::move(*declared), std::move(entries));
  return WeightedBase(std::move(entries));
}

std::string serialize_base(const WeightedBase& b) {
  std::string out;
  if (!b.variables().empty()) {
    out += "vars";
    for (const auto& v : b.variables()) out += " " + v.name();
    out += "\n";
  }
  for (const auto& e : b.entries()) {
    out += e.weight.fraction() + ": " + to_string(e.formula) + "\n";
  }
  return out;
}

std::string serialize_base(const ClausalBase& b) {
  return serialize_base(b.to_formula_base());
}

std::string serialize_network(const Network& n) {
  json nodes = json::array();
  for (const auto& cpt : n.nodes()) {
    json cells = json::array();
    for (std::uint64_t i = 0; i < cpt.instantiation_count(); ++i) {
      json assignment = json::object();
      for (const auto& l : cpt.instantiation(i)) assignment[l.var.name()] = l.positive;
      for (const bool polarity : {true, false}) {
        cells.push_back({{"assignment", assignment},
                         {"polarity", polarity},
                         {"weight", cpt.at(i, polarity).fraction()}});
      }
    }
    json parents = json::array();
    for (const auto& p : cpt.parents()) parents.push_back(p.name());
    nodes.push_back({{"cpt", std::move(cells)},
                     {"parents", std::move(parents)},
                     {"var", cpt.var().name()}});
  }
  json ordering = json::array();
  for (const auto& v : n.ordering()) ordering.push_back(v.name());
  json doc = {{"nodes", std::move(nodes)}, {"ordering", std::move(ordering)}};
  return doc.dump(2) + "\n";
}

namespace {

void expect_keys(const json& object, std::initializer_list<const char*> keys,
                 const std::string& where) {
  if (!object.is_object()) throw SchemaError(where + " must be an object");
  for (const char* key : keys) {
    if (!object.contains(key)) throw SchemaError(where + " lacks \"" + key + "\"");
  }
  if (object.size() != keys.size()) {
    throw SchemaError(where + " has unexpected fields");
  }
}

Var var_from(const json& value, const std::string& where) {
  if (!value.is_string() || !is_valid_var_name(value.get<std::string>())) {
    throw SchemaError(where + " must be a variable name");
  }
  return Var(value.get<std::string>());
}

Cpt cpt_from(const json& node) {
  expect_keys(node, {"cpt", "parents", "var"}, "node");
  const Var var = var_from(node["var"], "node var");
  const std::string where = "node '" + var.name() + "'";
  if (!node["parents"].is_array()) throw SchemaError(where + ": parents must be an array");
  std::vector<Var> parents;
  for (const auto& p : node["parents"]) parents.push_back(var_from(p, where + " parent"));
  if (parents.size() >= 32) throw SchemaError(where + ": too many parents");
  if (!node["cpt"].is_array()) throw SchemaError(where + ": cpt must be an array");

  const std::size_t count = std::size_t{2} << parents.size();
  std::vector<std::optional<Weight>> cells(count);
  for (const auto& cell : node["cpt"]) {
    expect_keys(cell, {"assignment", "polarity", "weight"}, where + " cell");
    const auto& assignment = cell["assignment"];
    if (!assignment.is_object() || assignment.size() != parents.size()) {
      throw SchemaError(where + ": assignment must give every parent");
    }
    std::uint64_t inst = 0;
    for (std::size_t j = 0; j < parents.size(); ++j) {
      const auto it = assignment.find(parents[j].name());
      if (it == assignment.end() || !it->is_boolean()) {
        throw SchemaError(where + ": assignment lacks parent '" + parents[j].name() + "'");
      }
      if (it->get<bool>()) inst |= std::uint64_t{1} << j;
    }
    if (!cell["polarity"].is_boolean()) throw SchemaError(where + ": polarity must be boolean");
    if (!cell["weight"].is_string()) throw SchemaError(where + ": weight must be a string");
    const bool polarity = cell["polarity"].get<bool>();
    Weight w;
    try {
      w = Weight::parse(cell["weight"].get<std::string>());
    } catch (const DomainError& e) {
      throw SchemaError(where + ": " + e.what());
    }
    auto& slot = cells[2 * inst + (polarity ? 0 : 1)];
    if (slot) throw SchemaError(where + ": duplicate cell");
    slot = std::move(w);
  }
  std::vector<Weight> filled;
  filled.reserve(count);
  for (auto& c : cells) {
    if (!c) throw SchemaError(where + ": incomplete CPT");
    filled.push_back(std::move(*c));
  }
  try {
    return Cpt(var, std::move(parents), std::move(filled));
  } catch (const DomainError& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

}  // namespace

ParsedNetwork parse_network(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  expect_keys(doc, {"nodes", "ordering"}, "document");
  if (!doc["ordering"].is_array()) throw SchemaError("ordering must be an array");
  if (!doc["nodes"].is_array()) throw SchemaError("nodes must be an array");

  std::vector<Var> ordering;
  for (const auto& v : doc["ordering"]) ordering.push_back(var_from(v, "ordering entry"));
  std::vector<Cpt> nodes;
  for (const auto& node : doc["nodes"]) nodes.push_back(cpt_from(node));

  try {
    Network network(std::move(ordering), std::move(nodes));
    auto warnings = check_normalization(network);
    return {std::move(network), std::move(warnings)};
  } catch (const DomainError& e) {
    throw SchemaError(e.what());
  }
}

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string node_label(const Cpt& cpt) {
  const std::string& v = cpt.var().name();
  if (cpt.parents().empty()) {
    return v + "\\nPi(" + v + ")=" + cpt.at(0, true).str() + " Pi(!" + v +
           ")=" + cpt.at(0, false).str();
  }
  Weight lowest = Weight::one();
  for (std::uint64_t i = 0; i < cpt.instantiation_count(); ++i) {
    lowest = min(lowest, min(cpt.at(i, true), cpt.at(i, false)));
  }
  std::string given;
  for (const auto& p : cpt.parents()) given += (given.empty() ? "" : ",") + p.name();
  return v + "\\nPi(" + v + " | " + given + "): " +
         std::to_string(2 * cpt.instantiation_count()) + " cells, min " + lowest.str();
}

}  // namespace

std::string export_dot(const Network& n) {
  std::string out = "digraph posgraph {\n";
  for (const auto& cpt : n.nodes()) {
    out += "  " + quoted(cpt.var().name()) + " [label=" + quoted(node_label(cpt)) + "];\n";
  }
  for (const auto& cpt : n.nodes()) {
    for (const auto& p : cpt.parents()) {
      out += "  " + quoted(p.name()) + " -> " + quoted(cpt.var().name()) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace posgraph
