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

#ifndef BSOPT_HARNESS_HPP
#define BSOPT_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bsopt/scenario.hpp"
#include "bsopt/solver.hpp"

namespace bsopt {

enum class StrategyTag {
  optimized,
  optimized_ceil_floor,
  rush_to_sleep,
  rush_to_mute,
  awake_but_whisper,
  oracle,
};

std::string to_string(StrategyTag t);

/// Which evaluations to run besides the round-finalized optimized solution.
struct StrategySet {
  bool rush_to_sleep = true;
  bool rush_to_mute = true;
  bool awake_but_whisper = true;
  bool ceil_floor = false;
  bool oracle = false;
};

struct SweepRow {
  double load = 0.0;
  StrategyTag strategy = StrategyTag::optimized;
  int n_a = 0;
  int m_a = 0;
  double p_a = 0.0;
  double p_cons = 0.0;
  bool feasible = false;
  int iterations = 0;  ///< solver iterations (0 for closed-form strategies)
};

struct SweepResult {
  std::vector<SweepRow> rows;  ///< loads ascending, fixed strategy order
};

struct CdfSeries {
  StrategyTag strategy = StrategyTag::optimized;
  std::vector<double> p_cons_sorted;  ///< ascending; ordinate i/n_trials
  std::vector<int> n_a;               ///< per-trial n_a, trial order
};

struct CdfResult {
  std::string preset;
  std::string td_savings;
  double load = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<CdfSeries> series;
};

/// 50 evenly spaced loads in (0, 1] (the Fig.-3 style default grid).
std::vector<double> default_load_grid(int points = 50);

/// One fixed draw (betas, base rates) reused across all loads; optimized plus
/// the requested strategies evaluated per load.
SweepResult sweep_load(const ScenarioConfig& cfg, const ConsumptionParams& cp,
                       std::span<const double> loads, const StrategySet& strategies,
                       const SolverConfig& solver_cfg = {});

/// Independent scenario substreams (one per trial index); per-trial
/// evaluation of each strategy. Embarrassingly parallel over trials with an
/// ordered gather, so output is seed-determined regardless of thread count.
CdfResult monte_carlo_cdf(const ScenarioConfig& cfg, const ConsumptionParams& cp,
                          double load, int trials, const StrategySet& strategies,
                          const SolverConfig& solver_cfg = {}, int threads = 0);

/// CSV with a fixed header, 17-significant-digit floats, LF line endings.
void emit_csv(const SweepResult& result, std::ostream& out);
void emit_csv(const CdfResult& result, std::ostream& out);
void emit_csv(const SweepResult& result, const std::string& path);
void emit_csv(const CdfResult& result, const std::string& path);

}  // namespace bsopt

#endif  // BSOPT_HARNESS_HPP
