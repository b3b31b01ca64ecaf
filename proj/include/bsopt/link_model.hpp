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

#ifndef BSOPT_LINK_MODEL_HPP
#define BSOPT_LINK_MODEL_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bsopt {

/// Downlink scenario under zero-forcing precoding over i.i.d. Rayleigh fading.
/// Rates are normalized: bits per OFDM symbol per subcarrier, frame-averaged.
struct Scenario {
  int m = 0;           ///< antennas M
  int n = 0;           ///< time slots per frame N
  int k = 0;           ///< users K
  double p_max = 0.0;  ///< per-antenna transmit power cap [W]
  std::vector<double> betas;         ///< large-scale fading coefficients, > 0
  std::vector<double> noise_powers;  ///< noise powers sigma_k^2 [W], > 0
  std::vector<double> rates;         ///< target rates R_k >= 0

  void validate() const;  // throws std::domain_error
  bool zero_traffic() const;
};

/// A candidate operating point with its consumed power and feasibility flag.
struct Allocation {
  int n_a = 0;
  int m_a = 0;
  double p_a = 0.0;
  double p_cons = 0.0;
  bool feasible = false;
};

/// Relative slack applied to every P_a <= P_max comparison so that
/// boundary-tight points (e.g. kappa = kappa_max) survive float rounding.
inline constexpr double kPowerSlack = 1e-9;

/// p_k solving the rate constraint: noise * (2^{rate/slot_ratio} - 1).
double per_user_power(double rate, double slot_ratio, double noise);

/// Average per-antenna transmit power at (n_a, m_a); requires m_a > k.
/// Returns +inf when an exponent overflows (monotone-safe sentinel).
double per_antenna_power(const Scenario& s, int n_a, int m_a);

/// per_antenna_power with all resources active; the scenario is feasible
/// iff this does not exceed p_max.
double min_per_antenna_power(const Scenario& s);

/// Frame-averaged delivered rate (n_a/n) * log2(1 + p_k/noise); exact
/// inverse of per_user_power.
double delivered_rate(double p_k, double noise, int n_a, int n);

/// m_a * per_antenna_power.
double total_transmit_power(const Scenario& s, int n_a, int m_a);

/// Shared feasibility predicate: per-antenna power within the cap (with
/// kPowerSlack), m_a > k, n_a >= 1. Zero traffic accepts (0, 0) as well.
bool fits_power_budget(const Scenario& s, int n_a, int m_a);

/// Whole-scenario feasibility gate: all resources active meet the cap.
bool scenario_feasible(const Scenario& s);

/// Flat JSON document {m, n, k, p_max, betas[], noise_powers[], rates[]}.
Scenario scenario_from_json(const std::string& text);
std::string scenario_to_json(const Scenario& s);
Scenario load_scenario(const std::string& path);  // throws std::runtime_error on IO

}  // namespace bsopt

#endif  // BSOPT_LINK_MODEL_HPP
