/*
 * Copyright 2026 the bsopt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BSOPT_ORACLE_HPP
#define BSOPT_ORACLE_HPP

#include <cstdint>

#include "bsopt/link_model.hpp"
#include "bsopt/power_model.hpp"

namespace bsopt {

struct BruteForceOptions {
  std::int64_t budget = 10'000'000;  ///< maximum grid points n * m
};

/// Exhaustive discrete optimizer over (n_a, m_a) in [1, n] x [k+1, m] under
/// the power budget (plus the shutdown point for zero traffic). Ties broken
/// by smaller m_a, then smaller n_a. Throws budget_error when n * m exceeds
/// the budget (subsample the grid or raise the budget).
Allocation brute_force(const Scenario& s, const ConsumptionParams& cp,
                       const BruteForceOptions& opts = {});

}  // namespace bsopt

#endif  // BSOPT_ORACLE_HPP
