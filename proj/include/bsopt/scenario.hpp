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

#ifndef BSOPT_SCENARIO_HPP
#define BSOPT_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bsopt/link_model.hpp"
#include "bsopt/power_model.hpp"

namespace bsopt {

/// Reproducible stream splitting: one independent mt19937_64 substream per
/// scenario index, seeded through std::seed_seq{seed_lo, seed_hi, index_lo,
/// index_hi}. Both the engine and seed_seq are fully specified by the
/// standard, so draws are identical across platforms. Uniform doubles come
/// from the top 53 bits, never from std::uniform_real_distribution (which is
/// implementation-defined).
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits of the next draw.
double uniform01(std::mt19937_64& gen);

struct SnrDistribution {
  enum class Family { uniform_db };
  Family family = Family::uniform_db;
  double lo_db = 0.0;
  double hi_db = 30.0;
};

/// Everything needed to draw evaluation scenarios. With a preset, the system
/// dimensions, bandwidth, p_max and reference total transmit power default
/// from the configuration tables; explicit fields override.
struct ScenarioConfig {
  std::optional<Preset> preset;
  int m = 0;
  int n = 100;
  int k = 0;
  double p_max = 0.0;
  double bandwidth_hz = 0.0;
  double noise_temperature_k = 290.0;
  double noise_figure_db = 9.0;
  double total_tx_power_ref_w = 0.0;  ///< P_T used in the beta derivation
  SnrDistribution snr;
  double load = 0.0;  ///< kappa / kappa_max, in [0, 1]
  std::uint64_t seed = 0;

  void validate() const;
};

/// A sampled draw: the scenario at the configured load plus the quantities
/// needed to rescale it to other loads (fixed betas and baseline rates).
struct ScenarioDraw {
  Scenario scenario;
  std::vector<double> base_rates;  ///< R_{k,0}, sum to 1
  double kappa_max = 0.0;
};

/// Thermal noise power T * k_B * B * 10^{F/10}.
double noise_power(double bandwidth_hz, double temperature_k, double noise_figure_db);

/// Large-scale fading from a linear SNR sample: sigma^2 * snr / (P_T * (m-1)).
double beta_from_snr(double snr_linear, double noise, double p_t_ref, int m);

/// Reference total transmit power used for the beta derivation (per preset).
double preset_total_tx_power_ref(Preset preset);

/// Fills config defaults from the preset tables; no-op for explicit configs.
ScenarioConfig resolve_config(const ScenarioConfig& cfg);

/// Draws K SNRs and baseline rates from substream(cfg.seed, index), computes
/// kappa_max and sets rates = load * kappa_max * base_rates. Deterministic
/// in (cfg, index).
ScenarioDraw sample_scenario_draw(const ScenarioConfig& cfg, std::uint64_t index);
Scenario sample_scenario(const ScenarioConfig& cfg, std::uint64_t index);

/// Rescales a draw to a different load (reusing betas and base rates).
Scenario scenario_at_load(const ScenarioDraw& draw, double load);

ScenarioConfig config_from_json(const std::string& text);
ScenarioConfig load_config(const std::string& path);

}  // namespace bsopt

#endif  // BSOPT_SCENARIO_HPP
