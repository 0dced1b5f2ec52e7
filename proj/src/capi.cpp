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

#include "posgraph/posgraph.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "posgraph/compile.hpp"
#include "posgraph/error.hpp"
#include "posgraph/io.hpp"
#include "posgraph/marginalize.hpp"
#include "posgraph/normalize.hpp"
#include "posgraph/oracle.hpp"
#include "posgraph/semantics.hpp"

struct pg_base {
  posgraph::WeightedBase base;
  posgraph::ClausalBase clausal;
};

struct pg_network {
  posgraph::Network network;
};

namespace {

using namespace posgraph;

thread_local std::string last_error;

pg_status fail(pg_status status, const char* message) {
  last_error = message;
  return status;
}

template <typename F>
pg_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const SyntaxError& e) {
    return fail(PG_ERR_SYNTAX, e.what());
  } catch (const InconsistentBaseError& e) {
    return fail(PG_ERR_INCONSISTENT, e.what());
  } catch (const SchemaError& e) {
    return fail(PG_ERR_SCHEMA, e.what());
  } catch (const ResourceError& e) {
    return fail(PG_ERR_RESOURCE, e.what());
  } catch (const DomainError& e) {
    return fail(PG_ERR_SYNTAX, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PG_ERR_INTERNAL, e.what());
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool missing(const void* p) { return p == nullptr; }

pg_status null_argument() { return fail(PG_ERR_INVALID_ARGUMENT, "null argument"); }

pg_base* make_base(WeightedBase base) {
  auto* b = new pg_base{std::move(base), {}};
  b->clausal = to_clausal(b->base);
  return b;
}

Ordering ordering_for(const pg_base& base, const char* order) {
  if (order == nullptr || *order == '\0') return Ordering(base.base.variables());
  return Ordering(parse_var_list(order));
}

std::string join(const std::vector<Var>& vars, const char* sep) {
  std::string out;
  for (const auto& v : vars) out += (out.empty() ? "" : sep) + v.name();
  return out;
}

}  // namespace

extern "C" {

const char* pg_last_error(void) { return last_error.c_str(); }

const char* pg_status_name(pg_status status) {
  switch (status) {
    case PG_OK: return "ok";
    case PG_MISMATCH: return "mismatch";
    case PG_ERR_SYNTAX: return "syntax error";
    case PG_ERR_INCONSISTENT: return "inconsistent base";
    case PG_ERR_SCHEMA: return "schema error";
    case PG_ERR_RESOURCE: return "resource limit";
    case PG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PG_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

void pg_string_free(char* s) { std::free(s); }

pg_status pg_base_parse(const char* text, pg_base** out) {
  if (missing(text) || missing(out)) return null_argument();
  return guarded([&] {
    *out = make_base(parse_base(text));
    return PG_OK;
  });
}

void pg_base_free(pg_base* base) { delete base; }

pg_status pg_base_serialize(const pg_base* base, char** out) {
  if (missing(base) || missing(out)) return null_argument();
  return guarded([&] {
    *out = copy_out(serialize_base(base->base));
    return PG_OK;
  });
}

pg_status pg_base_variables(const pg_base* base, char** out) {
  if (missing(base) || missing(out)) return null_argument();
  return guarded([&] {
    *out = copy_out(join(base->base.variables(), " "));
    return PG_OK;
  });
}

pg_status pg_base_inconsistency(const pg_base* base, char** out) {
  if (missing(base) || missing(out)) return null_argument();
  return guarded([&] {
    *out = copy_out(inconsistency_degree(base->clausal).str());
    return PG_OK;
  });
}

pg_status pg_eval_world(const pg_base* base, const char* world, char** out) {
  if (missing(base) || missing(world) || missing(out)) return null_argument();
  return guarded([&] {
    const auto literals = parse_literals(world);
    const Interpretation w(std::make_shared<const Universe>(base->base.variables()),
                           literals);
    *out = copy_out(possibility_of_world(base->base, w).str());
    return PG_OK;
  });
}

pg_status pg_query_possibility(const pg_base* base, const char* formula, char** out) {
  if (missing(base) || missing(formula) || missing(out)) return null_argument();
  return guarded([&] {
    *out = copy_out(possibility(base->clausal, parse_formula(formula)).str());
    return PG_OK;
  });
}

pg_status pg_query_necessity(const pg_base* base, const char* formula, char** out) {
  if (missing(base) || missing(formula) || missing(out)) return null_argument();
  return guarded([&] {
    *out = copy_out(necessity(base->clausal, parse_formula(formula)).str());
    return PG_OK;
  });
}

pg_status pg_query_conditional(const pg_base* base, const char* formula,
                               const char* context, char** out) {
  if (missing(base) || missing(formula) || missing(out)) return null_argument();
  return guarded([&] {
    const Formula given = (context == nullptr || *context == '\0')
                              ? Formula::constant(true)
                              : parse_formula(context);
    *out = copy_out(
        conditional_possibility(base->clausal, parse_formula(formula), given).str());
    return PG_OK;
  });
}

pg_status pg_rational_decimal(const char* rational, int digits, char** out) {
  if (missing(rational) || missing(out)) return null_argument();
  if (digits < 0 || digits > 50) return fail(PG_ERR_INVALID_ARGUMENT, "digits out of range");
  return guarded([&] {
    *out = copy_out(Weight::parse(rational).decimal(digits));
    return PG_OK;
  });
}

pg_status pg_marginalize(const pg_base* base, const char* var, pg_base** out) {
  if (missing(base) || missing(var) || missing(out)) return null_argument();
  return guarded([&] {
    const Var v{std::string(var)};
    if (!position_of(base->base.variables(), v)) {
      throw DomainError("unknown variable '" + v.name() + "'");
    }
    const Weight inc = inconsistency_degree(base->clausal);
    if (!inc.is_zero()) throw InconsistentBaseError(inc.str());
    const ClausalBase marginal = marginal_base(canonicalize(base->clausal), v);
    *out = new pg_base{marginal.to_formula_base(), marginal};
    return PG_OK;
  });
}

pg_status pg_parents(const pg_base* base, const char* var, const char* order, char** out) {
  if (missing(base) || missing(var) || missing(out)) return null_argument();
  return guarded([&] {
    const Var v{std::string(var)};
    const Compilation c = compile(base->clausal, ordering_for(*base, order));
    for (const auto& stage : c.stages) {
      if (stage.var == v) {
        *out = copy_out(join(stage.parents, " "));
        return PG_OK;
      }
    }
    throw DomainError("unknown variable '" + v.name() + "'");
  });
}

pg_status pg_compile(const pg_base* base, const char* order, pg_network** out,
                     char** summary) {
  if (missing(base) || missing(out)) return null_argument();
  return guarded([&] {
    const Compilation c = compile(base->clausal, ordering_for(*base, order));
    if (summary != nullptr) {
      std::string text;
      for (std::size_t i = 0; i < c.stages.size(); ++i) {
        const auto& s = c.stages[i];
        text += "stage " + std::to_string(i + 1) + ": " + s.var.name() + " parents={" +
                join(s.parents, ",") + "} immediate={" + join(s.immediate_parents, ",") +
                "} cpt_cells=" + std::to_string(std::size_t{2} << s.parents.size()) +
                " base_size=" + std::to_string(s.base.size()) +
                " marginal_size=" + std::to_string(s.marginal.size()) + "\n";
      }
      *summary = copy_out(text);
    }
    *out = new pg_network{c.network};
    return PG_OK;
  });
}

pg_status pg_network_parse(const char* json, pg_network** out, char** warnings) {
  if (missing(json) || missing(out)) return null_argument();
  return guarded([&] {
    ParsedNetwork parsed = parse_network(json);
    if (warnings != nullptr) {
      std::string text;
      for (const auto& w : parsed.warnings) {
        std::string assignment;
        for (const auto& l : w.assignment) {
          assignment += (assignment.empty() ? "" : ",") + to_string(l);
        }
        text += "node " + w.var.name() + " [" + assignment +
                "]: column max " + w.column_max.str() + " != 1\n";
      }
      *warnings = copy_out(text);
    }
    *out = new pg_network{std::move(parsed.network)};
    return PG_OK;
  });
}

void pg_network_free(pg_network* network) { delete network; }

pg_status pg_network_serialize(const pg_network* network, char** out) {
  if (missing(network) || missing(out)) return null_argument();
  return guarded([&] {
    *out = copy_out(serialize_network(network->network));
    return PG_OK;
  });
}

pg_status pg_network_dot(const pg_network* network, char** out) {
  if (missing(network) || missing(out)) return null_argument();
  return guarded([&] {
    *out = copy_out(export_dot(network->network));
    return PG_OK;
  });
}

pg_status pg_verify(const pg_base* base, const pg_network* network,
                    size_t max_mismatches, char** report) {
  if (missing(base) || missing(network)) return null_argument();
  return guarded([&] {
    const auto result = oracle::verify_compilation(base->base, network->network);
    if (report != nullptr) {
      std::string text;
      for (std::size_t i = 0; i < result.mismatches.size() && i < max_mismatches; ++i) {
        const auto& m = result.mismatches[i];
        std::string world;
        for (const auto& l : m.world) world += (world.empty() ? "" : ",") + to_string(l);
        text += "mismatch " + world + ": base " + m.base_value.str() + ", network " +
                m.network_value.str() + "\n";
      }
      text += result.passed ? "distributions match\n"
                            : std::to_string(result.mismatches.size()) + " mismatches\n";
      *report = copy_out(text);
    }
    return result.passed ? PG_OK : PG_MISMATCH;
  });
}

pg_status pg_generate(uint64_t seed, unsigned n_vars, unsigned n_clauses, char** out) {
  if (missing(out)) return null_argument();
  if (n_vars == 0) return fail(PG_ERR_INVALID_ARGUMENT, "need at least one variable");
  return guarded([&] {
    const auto pool = oracle::default_weight_pool();
    *out = copy_out(serialize_base(oracle::random_base(seed, n_vars, n_clauses, pool)));
    return PG_OK;
  });
}

}  // extern "C"
