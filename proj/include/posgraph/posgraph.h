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

/* C interface to the posgraph library: parse weighted possibilistic bases,
 * query them, compile them into product-based possibilistic networks and
 * verify the result.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call returns a pg_status; on failure pg_last_error() describes the
 * problem (thread-local, valid until the next call on the same thread).
 * Strings returned through char** are heap-allocated and released with
 * pg_string_free. Rationals are returned as "p/q" (or "0", "1"). */

#ifndef POSGRAPH_POSGRAPH_H
#define POSGRAPH_POSGRAPH_H

#include <stddef.h>
#include <stdint.h>

#if defined(PG_BUILDING_LIBRARY)
#define PG_API __attribute__((visibility("default")))
#else
#define PG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pg_base pg_base;
typedef struct pg_network pg_network;

/* Values 0-3 double as the CLI exit codes. */
typedef enum pg_status {
  PG_OK = 0,
  PG_MISMATCH = 1,          /* verification found differing worlds */
  PG_ERR_SYNTAX = 2,        /* malformed text, unknown variable, bad usage */
  PG_ERR_INCONSISTENT = 3,  /* base has Inc > 0 where consistency is required */
  PG_ERR_SCHEMA = 4,        /* network document violates the schema */
  PG_ERR_RESOURCE = 5,      /* enumeration cap or retry budget exceeded */
  PG_ERR_INVALID_ARGUMENT = 6,
  PG_ERR_INTERNAL = 7
} pg_status;

PG_API const char* pg_last_error(void);
PG_API const char* pg_status_name(pg_status status);
PG_API void pg_string_free(char* s);

/* Bases */
PG_API pg_status pg_base_parse(const char* text, pg_base** out);
PG_API void pg_base_free(pg_base* base);
/* Serialized in the input grammar (clausal form when the handle holds a
 * derived base). */
PG_API pg_status pg_base_serialize(const pg_base* base, char** out);
/* Space-separated variable names in universe order. */
PG_API pg_status pg_base_variables(const pg_base* base, char** out);
PG_API pg_status pg_base_inconsistency(const pg_base* base, char** out);

/* pi(world); world is a comma-separated total assignment like "se,!wi,su". */
PG_API pg_status pg_eval_world(const pg_base* base, const char* world, char** out);
/* Possibility and necessity of a formula (base must be consistent). */
PG_API pg_status pg_query_possibility(const pg_base* base, const char* formula, char** out);
PG_API pg_status pg_query_necessity(const pg_base* base, const char* formula, char** out);
/* Pi(formula | context) with product-based conditioning. */
PG_API pg_status pg_query_conditional(const pg_base* base, const char* formula,
                                      const char* context, char** out);
/* Decimal rendering of a "p/q" rational with `digits` fractional digits. */
PG_API pg_status pg_rational_decimal(const char* rational, int digits, char** out);

/* Max-marginal base with `var` forgotten. */
PG_API pg_status pg_marginalize(const pg_base* base, const char* var, pg_base** out);
/* Parent set of `var` at its stage under `order` (comma-separated; NULL or
 * "" means declaration order). Space-separated, by ordering position. */
PG_API pg_status pg_parents(const pg_base* base, const char* var, const char* order,
                            char** out);

/* Networks */
/* `summary` (may be NULL) receives one line per stage. */
PG_API pg_status pg_compile(const pg_base* base, const char* order, pg_network** out,
                            char** summary);
/* `warnings` (may be NULL) receives normalization violations, one per line. */
PG_API pg_status pg_network_parse(const char* json, pg_network** out, char** warnings);
PG_API void pg_network_free(pg_network* network);
PG_API pg_status pg_network_serialize(const pg_network* network, char** out);
PG_API pg_status pg_network_dot(const pg_network* network, char** out);

/* PG_OK when the network's chain-rule distribution equals the base's, else
 * PG_MISMATCH; `report` lists up to `max_mismatches` differing worlds and a
 * final count line. */
PG_API pg_status pg_verify(const pg_base* base, const pg_network* network,
                           size_t max_mismatches, char** report);

/* Random consistent clausal base over x1..xN in the input grammar. */
PG_API pg_status pg_generate(uint64_t seed, unsigned n_vars, unsigned n_clauses,
                             char** out);

#ifdef __cplusplus
}
#endif

#endif /* POSGRAPH_POSGRAPH_H */
