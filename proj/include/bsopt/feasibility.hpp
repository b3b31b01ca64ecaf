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

#ifndef BSOPT_FEASIBILITY_HPP
#define BSOPT_FEASIBILITY_HPP

#include <span>
#include <string>

#include "bsopt/link_model.hpp"

namespace bsopt {

/// Continuous optimization coordinates: x = N/N_a (slot compression),
/// y = M_a (active antennas, relaxed to the reals).
struct DomainPoint {
  double x = 1.0;
  double y = 1.0;
};

/// Feasibility domain D and the six surrounding regions, partitioning the
/// half-plane y > K by the three constraints x >= 1, y <= M, y >= y_min(x).
enum class Region { D, R1, R2, R3, R4, R5, R6 };

std::string to_string(Region r);

/// Curved lower boundary of D: the y satisfying the power constraint with
/// equality at compression x. Strictly increasing in x when any rate is
/// positive; returns +inf past the overflow threshold.
double y_min(double x, const Scenario& s);

/// Minimum active antennas M_a,min = ceil(y_min(1)) with a 1e-9 relative
/// tolerance on the ceiling. Throws infeasible_error when the result
/// exceeds m.
int min_active_antennas(const Scenario& s);

/// Minimum active slots: smallest n_a in [1, n] meeting the power budget at
/// m_a = m; 0 for zero traffic. Throws infeasible_error when none exists.
int min_active_slots(const Scenario& s);

/// The rate scaling kappa at which serving rates kappa * base_rates needs
/// all slots and antennas at exactly p_max. base_rates must sum to 1;
/// monotone-unique root found by bisection (absolute tolerance 1e-10).
double max_rate_scaling(const Scenario& s, std::span<const double> base_rates);

/// Sufficient condition for convexity of D: rho_k = p_max*beta_k/sigma_k^2
/// >= 2/K for every user.
bool snr_condition_holds(const Scenario& s);

/// Region classification of a continuous point with y > k.
Region classify_region(DomainPoint p, const Scenario& s);

/// Largest x with y_min(x) <= m (the rush-to-sleep corner abscissa).
/// Requires a feasible scenario with traffic.
double max_compression(const Scenario& s);

}  // namespace bsopt

#endif  // BSOPT_FEASIBILITY_HPP
