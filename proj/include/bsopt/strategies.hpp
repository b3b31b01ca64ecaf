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

#ifndef BSOPT_STRATEGIES_HPP
#define BSOPT_STRATEGIES_HPP

#include "bsopt/link_model.hpp"
#include "bsopt/power_model.hpp"

namespace bsopt {

// Single-domain benchmark allocations. Each throws infeasible_error when the
// scenario is infeasible and returns the shutdown allocation for zero
// traffic. p_a is recomputed at the integer point (the ceiling operations in
// N_a,min / M_a,min leave slack, so pinning p_max would overshoot the rates).

/// Fewest active slots, all antennas.
Allocation rush_to_sleep(const Scenario& s, const ConsumptionParams& cp);

/// All slots, fewest active antennas.
Allocation rush_to_mute(const Scenario& s, const ConsumptionParams& cp);

/// Everything active at minimum transmit power.
Allocation awake_but_whisper(const Scenario& s, const ConsumptionParams& cp);

}  // namespace bsopt

#endif  // BSOPT_STRATEGIES_HPP
