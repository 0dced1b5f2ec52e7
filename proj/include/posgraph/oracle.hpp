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

// Brute-force reference semantics for verification and differential
// testing. Nothing here reuses the evaluation code of the semantics module.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "posgraph/model.hpp"
#include "posgraph/network.hpp"

namespace posgraph::oracle {

inline constexpr std::size_t kDefaultEnumerationCap = 20;

/// Exact pi_b by evaluating every formula on every world. Throws
/// ResourceError when the universe exceeds `cap` variables.
Distribution enumerate_distribution(const WeightedBase& b,
                                    std::size_t cap = kDefaultEnumerationCap);
Distribution enumerate_distribution(const ClausalBase& b,
                                    std::size_t cap = kDefaultEnumerationCap);

/// Exact pointwise equality. The universes must hold the same variables
/// (order may differ); otherwise DomainError.
bool distributions_equal(const Distribution& a, const Distribution& b);

struct Mismatch {
  std::vector<Literal> world;
  Weight base_value;
  Weight network_value;
};

struct VerificationReport {
  bool passed = true;
  std::vector<Mismatch> mismatches;  // in base-universe world order
};

VerificationReport verify_compilation(const WeightedBase& b, const Network& n);

struct RandomBaseOptions {
  bool require_consistent = true;
  int max_retries = 1000;
};

/// Deterministic pseudorandom clausal base over x1..xN: clause length 1-3
/// on distinct variables, weights drawn from `weight_pool`. With
/// require_consistent, redraws until Inc = 0 (ResourceError when the retry
/// budget runs out).
ClausalBase random_base(std::uint64_t seed, std::size_t n_vars,
                        std::size_t n_clauses, std::span<const Weight> weight_pool,
                        RandomBaseOptions options = {});

/// {1/5, 1/3, 2/5, 1/2, 2/3, 7/10, 1}
std::vector<Weight> default_weight_pool();

}  // namespace posgraph::oracle
