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

#ifndef BSOPT_POWER_MODEL_HPP
#define BSOPT_POWER_MODEL_HPP

#include <string>

namespace bsopt {

/// Power-amplifier consumption model: a static part weighted by xi plus a
/// dynamic part that grows as p^alpha, both normalized by the maximum PA
/// efficiency.
struct PaParams {
  double p_max = 0.0;       ///< maximum PA output power [W]
  double alpha = 0.75;      ///< consumption exponent, in [0.5, 1]
  double xi = 0.0;          ///< static-consumption weight, in [0, 1]
  double eta_pa_max = 1.0;  ///< maximum PA efficiency, in (0, 1]

  void validate() const;  // throws std::domain_error
};

/// Hardware sub-component inputs (PA, analog front-end, digital baseband,
/// supply/cooling) from which the compact four-parameter model is derived.
/// Frame-structure ratios and mode reduction factors are dimensionless;
/// p_trx, p_misc, p_link_ref, p_phy_ref are direct inputs in watts.
struct ComponentParams {
  PaParams pa;
  double tau_dl = 1.0;   ///< downlink / frame time ratio, in (0, 1]
  double tau_ul = 0.0;   ///< uplink / frame time ratio; tau_dl + tau_ul <= 1
  double tau_sig = 0.1;  ///< reference-signal / downlink time ratio, in (0, 1)
  double zeta_sig = 0.1; ///< reference-signal power ratio, in (0, 1)
  double delta_pa_dtx = 1.0;
  double delta_pa_idle = 1.0;
  double delta_pa_sleep = 1.0;
  double delta_trx_idle = 1.0;
  double delta_trx_sleep = 1.0;
  double delta_phy_idle = 1.0;
  double p_trx = 0.0;      ///< [W]
  double p_misc = 0.0;     ///< [W]
  double p_link_ref = 0.0; ///< [W]
  double p_phy_ref = 0.0;  ///< [W]
  double eta_sc_pa = 1.0;  ///< combined supply x cooling efficiency, (0, 1]
  double eta_sc_afe = 1.0;
  double eta_sc_dbb = 1.0;
  int m_total = 1;         ///< number of antennas M

  void validate() const;
};

/// Compact consumed-power model: P_cons(N_a, M_a, P_a) =
///   (N_a/N) * M_a * (P0/M + gamma * P_a^alpha) + (M_a/M) * P1 + P_sleep.
struct ConsumptionParams {
  double gamma = 0.0;    ///< PA dynamic coefficient [W / W^alpha]
  double p0 = 0.0;       ///< [W]
  double p1 = 0.0;       ///< [W]
  double p_sleep = 0.0;  ///< [W]
  double alpha = 0.75;   ///< in [0.5, 1]

  void validate() const;
};

/// Instantaneous PA consumption at output power p, 0 <= p <= p_max.
double pa_consumption(double p, const PaParams& pa);

/// Maps hardware sub-component parameters to the compact four-parameter form.
ConsumptionParams derive_consumption_params(const ComponentParams& c);

/// Frame-averaged consumed power at an operating point. m_a = 0 is admitted
/// only jointly with n_a = 0 (zero-traffic shutdown, returns p_sleep).
double consumed_power(const ConsumptionParams& cp, int n_a, int n, int m_a, int m,
                      double p_a);

/// Base-station configurations with model parameters measured on deployed
/// hardware, in two variants: time-domain hardware power savings disabled
/// (delta_pa_dtx = delta_trx_idle = 1) or enabled (0.25 / 0.5).
enum class Preset { k4t4r, k8t8r, k64t64r };
enum class TdSavings { off, on };

struct PresetConfig {
  ConsumptionParams cp;
  int m = 0;
  int k = 0;
  double f_c_hz = 0.0;
  double bandwidth_hz = 0.0;
  double p_max = 0.0;  ///< per-antenna cap [W]
};

PresetConfig preset_config(Preset preset, TdSavings td);

std::string to_string(Preset preset);
std::string to_string(TdSavings td);
Preset preset_from_string(const std::string& name);      // throws std::invalid_argument
TdSavings td_savings_from_string(const std::string& s);  // throws std::invalid_argument

}  // namespace bsopt

#endif  // BSOPT_POWER_MODEL_HPP
