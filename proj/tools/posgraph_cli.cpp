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

// posgraph: compile possibilistic bases into product-based possibilistic
// networks, query them, and verify compiled networks against their bases.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or syntax error,
// 3 inconsistent base.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "posgraph/posgraph.h"

namespace {

struct BaseDeleter {
  void operator()(pg_base* b) const { pg_base_free(b); }
};
struct NetworkDeleter {
  void operator()(pg_network* n) const { pg_network_free(n); }
};
struct StringDeleter {
  void operator()(char* s) const { pg_string_free(s); }
};
using BasePtr = std::unique_ptr<pg_base, BaseDeleter>;
using NetworkPtr = std::unique_ptr<pg_network, NetworkDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Carries a pg_status out of a command as its exit code.
struct Failure {
  int code;
};

int exit_code(pg_status s) {
  switch (s) {
    case PG_OK:
    case PG_MISMATCH:
    case PG_ERR_SYNTAX:
    case PG_ERR_INCONSISTENT:
      return static_cast<int>(s);
    case PG_ERR_SCHEMA:
    case PG_ERR_INVALID_ARGUMENT:
      return 2;
    default:
      return 4;
  }
}

void check(pg_status s, const std::string& what) {
  if (s == PG_OK) return;
  std::cerr << "posgraph: " << what << ": " << pg_last_error() << "\n";
  throw Failure{exit_code(s)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "posgraph: cannot read " << path << "\n";
    throw Failure{2};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "posgraph: cannot write " << path << "\n";
    throw Failure{2};
  }
}

BasePtr load_base(const std::string& path) {
  const std::string text = read_file(path);
  pg_base* raw = nullptr;
  check(pg_base_parse(text.c_str(), &raw), path);
  return BasePtr(raw);
}

std::string take(char* s) { return std::string(StringPtr(s).get()); }

void print_rational(const std::string& value, bool decimal) {
  std::cout << value;
  if (decimal) {
    char* d = nullptr;
    check(pg_rational_decimal(value.c_str(), 6, &d), "decimal");
    std::cout << " (" << take(d) << ")";
  }
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compile possibilistic logic bases into product-based possibilistic networks"};
  app.require_subcommand(1);

  std::string base_path;
  std::string order;
  std::string out_path;
  std::string dot_path;
  bool decimal = false;

  auto* compile = app.add_subcommand("compile", "Compile a base into a network (JSON)");
  compile->add_option("base", base_path, "Base file")->required();
  compile->add_option("--order", order, "Elimination order, comma-separated (default: declaration order)");
  compile->add_option("-o,--out", out_path, "Network output file (default: stdout)");
  compile->add_option("--dot", dot_path, "Also write a DOT rendering to this file");

  std::string mode;
  std::string formula;
  std::string context;
  auto* query = app.add_subcommand("query", "Possibility, necessity or conditional possibility");
  query->add_option("base", base_path, "Base file")->required();
  query->add_option("mode", mode, "pi | nec | cond")
      ->required()
      ->check(CLI::IsMember({"pi", "nec", "cond"}));
  query->add_option("formula", formula, "Formula")->required();
  query->add_option("context", context, "Conditioning formula (cond mode)");
  query->add_flag("--decimal", decimal, "Append a 6-digit decimal approximation");

  std::string world;
  auto* eval = app.add_subcommand("eval", "Possibility degree of one world");
  eval->add_option("base", base_path, "Base file")->required();
  eval->add_option("world", world, "Total assignment, e.g. se,!wi,su")->required();
  eval->add_flag("--decimal", decimal, "Append a 6-digit decimal approximation");

  std::string var;
  auto* marginalize = app.add_subcommand("marginalize", "Forget a variable; print the marginal base");
  marginalize->add_option("base", base_path, "Base file")->required();
  marginalize->add_option("var", var, "Variable to forget")->required();

  auto* parents = app.add_subcommand("parents", "Parent set of a variable under an ordering");
  parents->add_option("base", base_path, "Base file")->required();
  parents->add_option("var", var, "Variable")->required();
  parents->add_option("--order", order, "Elimination order, comma-separated (default: declaration order)");

  std::string network_path;
  auto* verify = app.add_subcommand("verify", "Check a network against a base, world by world");
  verify->add_option("base", base_path, "Base file")->required();
  verify->add_option("network", network_path, "Network JSON file")->required();

  std::uint64_t seed = 0;
  unsigned n_vars = 4;
  unsigned n_clauses = 6;
  auto* gen = app.add_subcommand("gen", "Write a random consistent base");
  gen->add_option("--seed", seed, "Generator seed")->required();
  gen->add_option("--vars", n_vars, "Number of variables")->check(CLI::Range(1U, 20U));
  gen->add_option("--clauses", n_clauses, "Number of clauses");
  gen->add_option("-o,--out", out_path, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*compile) {
      const BasePtr base = load_base(base_path);
      pg_network* raw = nullptr;
      char* summary = nullptr;
      check(pg_compile(base.get(), order.c_str(), &raw, &summary), "compile");
      const NetworkPtr network(raw);
      std::cerr << take(summary);
      char* json = nullptr;
      check(pg_network_serialize(network.get(), &json), "serialize");
      const std::string doc = take(json);
      if (out_path.empty()) {
        std::cout << doc;
      } else {
        write_file(out_path, doc);
      }
      if (!dot_path.empty()) {
        char* dot = nullptr;
        check(pg_network_dot(network.get(), &dot), "dot");
        write_file(dot_path, take(dot));
      }
    } else if (*query) {
      const BasePtr base = load_base(base_path);
      char* result = nullptr;
      if (mode == "pi") {
        check(pg_query_possibility(base.get(), formula.c_str(), &result), "query");
      } else if (mode == "nec") {
        check(pg_query_necessity(base.get(), formula.c_str(), &result), "query");
      } else {
        check(pg_query_conditional(base.get(), formula.c_str(), context.c_str(), &result),
              "query");
      }
      print_rational(take(result), decimal);
    } else if (*eval) {
      const BasePtr base = load_base(base_path);
      char* result = nullptr;
      check(pg_eval_world(base.get(), world.c_str(), &result), "eval");
      print_rational(take(result), decimal);
    } else if (*marginalize) {
      const BasePtr base = load_base(base_path);
      pg_base* raw = nullptr;
      check(pg_marginalize(base.get(), var.c_str(), &raw), "marginalize");
      const BasePtr marginal(raw);
      char* text = nullptr;
      check(pg_base_serialize(marginal.get(), &text), "serialize");
      std::cout << take(text);
    } else if (*parents) {
      const BasePtr base = load_base(base_path);
      char* result = nullptr;
      check(pg_parents(base.get(), var.c_str(), order.c_str(), &result), "parents");
      std::cout << take(result) << "\n";
    } else if (*verify) {
      const BasePtr base = load_base(base_path);
      const std::string doc = read_file(network_path);
      pg_network* raw = nullptr;
      char* warnings = nullptr;
      check(pg_network_parse(doc.c_str(), &raw, &warnings), network_path);
      const NetworkPtr network(raw);
      std::cerr << take(warnings);
      char* report = nullptr;
      const pg_status s = pg_verify(base.get(), network.get(), 10, &report);
      if (s != PG_OK && s != PG_MISMATCH) check(s, "verify");
      std::cout << take(report);
      return exit_code(s);
    } else if (*gen) {
      char* text = nullptr;
      check(pg_generate(seed, n_vars, n_clauses, &text), "gen");
      const std::string base = take(text);
      if (out_path.empty()) {
        std::cout << base;
      } else {
        write_file(out_path, base);
      }
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return 0;
}
