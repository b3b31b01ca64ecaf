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

#ifndef BSOPT_SOLVER_HPP
#define BSOPT_SOLVER_HPP

#include <array>
#include <string>
#include <vector>

#include "bsopt/feasibility.hpp"
#include "bsopt/link_model.hpp"
#include "bsopt/power_model.hpp"

namespace bsopt {

enum class FinalizeMode { round, ceil_floor };

std::string to_string(FinalizeMode m);
FinalizeMode finalize_mode_from_string(const std::string& s);

struct LineSearchParams {
  double shrink = 0.5;
  double sufficient_decrease = 1e-4;
};

struct SolverConfig {
  double newton_tolerance = 1e-8;  ///< gradient-norm stopping threshold
  int max_iterations = 200;
  FinalizeMode finalize_mode = FinalizeMode::round;
  LineSearchParams line_search;

  void validate() const;
};

struct CostDerivatives {
  double value = 0.0;
  std::array<double, 2> gradient{};
  std::array<std::array<double, 2>, 2> hessian{};
};

enum class OneDimProblem { fix_x1, fix_yM, on_curve };

enum class SolveStatus { ok, infeasible, no_convergence };

struct NewtonResult {
  DomainPoint point;
  int iterations = 0;
  bool converged = false;
  std::vector<double> f_history;  ///< f at each accepted iterate, start included
};

struct SolverReport {
  double x_bar = 0.0;
  double y_bar = 0.0;
  std::vector<Region> region_path;
  int iterations_2d = 0;
  int iterations_1d = 0;
  int candidates_compared = 0;  ///< boundary candidates examined (2 in R2/R3/R6)
  double cost_continuous = 0.0; ///< f(x_bar, y_bar) + p_sleep [W]
  Allocation allocation;
  bool domain_convex_flag = false;
  SolveStatus status = SolveStatus::ok;
};

/// Reduced two-variable cost f(x, y) (consumed power above p_sleep at the
/// continuous point). Throws std::domain_error at the y <= k pole (with
/// traffic) and for x below 1e-9.
double cost(DomainPoint p, const Scenario& s, const ConsumptionParams& cp);

/// f with closed-form gradient and Hessian; shared subexpressions of
/// phi(x), phi'(x), phi''(x) are computed once.
CostDerivatives cost_derivatives(DomainPoint p, const Scenario& s,
                                 const ConsumptionParams& cp);

/// Damped Newton (Armijo backtracking) on f from the heuristic start point;
/// indefinite Hessians are shifted positive-definite before solving.
NewtonResult newton_unconstrained_2d(const Scenario& s, const ConsumptionParams& cp,
                                     const SolverConfig& cfg);

/// Safeguarded Newton on the scalar derivative of the stated 1-D restriction
/// of f; on_curve composes f with y_min(x) analytically. The returned point
/// is the unconstrained minimizer (clamping is the caller's step).
NewtonResult newton_1d(OneDimProblem which, const Scenario& s,
                       const ConsumptionParams& cp, const SolverConfig& cfg);

/// Unconstrained solve, region dispatch on R1..R6, discrete finalization.
/// Infeasible scenarios yield status = infeasible (never a silent clamp);
/// zero traffic short-circuits to the shutdown allocation.
SolverReport solve(const Scenario& s, const ConsumptionParams& cp,
                   const SolverConfig& cfg = {});

/// Discrete finalization of the continuous optimum. round: nearest integers
/// then feasibility repair toward the ceilings; ceil_floor: best feasible of
/// the four bounding integer combinations.
Allocation finalize_discrete(double x_bar, double y_bar, const Scenario& s,
                             const ConsumptionParams& cp, FinalizeMode mode);

std::string report_to_json(const SolverReport& r);

}  // namespace bsopt

#endif  // BSOPT_SOLVER_HPP
