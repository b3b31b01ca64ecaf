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

#include "bsopt/power_model.hpp"

#include <cmath>
#include <stdexcept>

namespace bsopt {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::domain_error(what);
}

void require_unit_interval(double v, const char* what) {
  require(v >= 0.0 && v <= 1.0, what);
}

}  // namespace

void PaParams::validate() const {
  require(p_max > 0.0, "PaParams: p_max must be positive");
  require(alpha >= 0.5 && alpha <= 1.0, "PaParams: alpha outside [0.5, 1]");
  require_unit_interval(xi, "PaParams: xi outside [0, 1]");
  require(eta_pa_max > 0.0 && eta_pa_max <= 1.0, "PaParams: eta_pa_max outside (0, 1]");
}

void ComponentParams::validate() const {
  pa.validate();
  require(tau_dl > 0.0 && tau_dl <= 1.0, "ComponentParams: tau_dl outside (0, 1]");
  require(tau_ul >= 0.0, "ComponentParams: tau_ul negative");
  require(tau_dl + tau_ul <= 1.0 + 1e-12, "ComponentParams: tau_dl + tau_ul > 1");
  require(tau_sig > 0.0 && tau_sig < 1.0, "ComponentParams: tau_sig outside (0, 1)");
  require(zeta_sig > 0.0 && zeta_sig < 1.0, "ComponentParams: zeta_sig outside (0, 1)");
  require_unit_interval(delta_pa_dtx, "ComponentParams: delta_pa_dtx outside [0, 1]");
  require_unit_interval(delta_pa_idle, "ComponentParams: delta_pa_idle outside [0, 1]");
  require_unit_interval(delta_pa_sleep, "ComponentParams: delta_pa_sleep outside [0, 1]");
  require_unit_interval(delta_trx_idle, "ComponentParams: delta_trx_idle outside [0, 1]");
  require_unit_interval(delta_trx_sleep, "ComponentParams: delta_trx_sleep outside [0, 1]");
  require_unit_interval(delta_phy_idle, "ComponentParams: delta_phy_idle outside [0, 1]");
  require(p_trx >= 0.0 && p_misc >= 0.0 && p_link_ref >= 0.0 && p_phy_ref >= 0.0,
          "ComponentParams: component powers must be nonnegative");
  require(eta_sc_pa > 0.0 && eta_sc_pa <= 1.0, "ComponentParams: eta_sc_pa outside (0, 1]");
  require(eta_sc_afe > 0.0 && eta_sc_afe <= 1.0, "ComponentParams: eta_sc_afe outside (0, 1]");
  require(eta_sc_dbb > 0.0 && eta_sc_dbb <= 1.0, "ComponentParams: eta_sc_dbb outside (0, 1]");
  require(m_total >= 1, "ComponentParams: m_total must be >= 1");
}

void ConsumptionParams::validate() const {
  require(gamma >= 0.0 && p0 >= 0.0 && p1 >= 0.0 && p_sleep >= 0.0,
          "ConsumptionParams: parameters must be nonnegative");
  require(alpha >= 0.5 && alpha <= 1.0, "ConsumptionParams: alpha outside [0.5, 1]");
}

double pa_consumption(double p, const PaParams& pa) {
  pa.validate();
  if (p < 0.0 || p > pa.p_max) throw std::domain_error("pa_consumption: p outside [0, p_max]");
  const double stat = pa.xi * std::pow(pa.p_max, pa.alpha) / pa.eta_pa_max;
  const double dyn =
      (1.0 - pa.xi) * std::pow(pa.p_max, 1.0 - pa.alpha) * std::pow(p, pa.alpha) / pa.eta_pa_max;
  return stat + dyn;
}

ConsumptionParams derive_consumption_params(const ComponentParams& c) {
  c.validate();
  const PaParams& pa = c.pa;
  const double m = static_cast<double>(c.m_total);
  const double pa_zero = pa.xi * std::pow(pa.p_max, pa.alpha) / pa.eta_pa_max;

  ConsumptionParams out;
  out.alpha = pa.alpha;
  out.gamma = c.tau_dl * (1.0 - c.tau_sig) * (1.0 - pa.xi) *
              std::pow(pa.p_max, 1.0 - pa.alpha) / (c.eta_sc_pa * pa.eta_pa_max);
  out.p0 = m * c.tau_dl * (1.0 - c.tau_sig) * pa_zero * (1.0 - c.delta_pa_dtx) / c.eta_sc_pa;

  // Per-active-antenna contributions that do not depend on the running point.
  const double pa_1 = c.tau_dl * c.tau_sig * pa_consumption(c.zeta_sig * pa.p_max, pa) +
                      c.tau_dl * (1.0 - c.tau_sig) * pa_zero * c.delta_pa_dtx +
                      (1.0 - c.tau_dl) * pa_zero * c.delta_pa_idle -
                      pa_zero * c.delta_pa_sleep;
  const double afe_1 = c.p_trx * ((c.tau_dl + c.tau_ul) +
                                  (2.0 - c.tau_dl - c.tau_ul) * c.delta_trx_idle -
                                  2.0 * c.delta_trx_sleep);
  out.p1 = m * (pa_1 / c.eta_sc_pa + afe_1 / c.eta_sc_afe);

  const double afe_sleep = c.p_misc + 2.0 * m * c.p_trx * c.delta_trx_sleep;
  const double dbb = c.p_link_ref +
                     c.p_phy_ref * ((c.tau_dl + c.tau_ul) +
                                    (2.0 - c.tau_dl - c.tau_ul) * c.delta_phy_idle);
  out.p_sleep = m * c.delta_pa_sleep * pa_zero / c.eta_sc_pa + afe_sleep / c.eta_sc_afe +
                dbb / c.eta_sc_dbb;
  return out;
}

double consumed_power(const ConsumptionParams& cp, int n_a, int n, int m_a, int m,
                      double p_a) {
  cp.validate();
  if (n < 1 || m < 1) throw std::domain_error("consumed_power: n and m must be >= 1");
  if (n_a < 0 || n_a > n) throw std::domain_error("consumed_power: n_a outside [0, n]");
  if (m_a < 0 || m_a > m) throw std::domain_error("consumed_power: m_a outside [0, m]");
  if (p_a < 0.0) throw std::domain_error("consumed_power: p_a negative");
  if (m_a == 0 && n_a > 0)
    throw std::domain_error("consumed_power: m_a = 0 requires n_a = 0 (shutdown)");
  if (n_a == 0 && m_a == 0) return cp.p_sleep;

  const double slot_ratio = static_cast<double>(n_a) / n;
  const double ant_ratio = static_cast<double>(m_a) / m;
  return slot_ratio * m_a * (cp.p0 / m + cp.gamma * std::pow(p_a, cp.alpha)) +
         ant_ratio * cp.p1 + cp.p_sleep;
}

PresetConfig preset_config(Preset preset, TdSavings td) {
  const bool on = td == TdSavings::on;
  PresetConfig pc;
  switch (preset) {
    case Preset::k4t4r:
      pc.m = 4;
      pc.k = 2;
      pc.f_c_hz = 1.8e9;
      pc.bandwidth_hz = 20e6;
      pc.p_max = 40.0;
      pc.cp = {5.33, on ? 34.69 : 0.0, on ? 114.71 : 149.40, 233.55, 0.75};
      break;
    case Preset::k8t8r:
      pc.m = 8;
      pc.k = 4;
      pc.f_c_hz = 3.5e9;
      pc.bandwidth_hz = 100e6;
      pc.p_max = 40.0;
      pc.cp = {5.38, on ? 69.98 : 0.0, on ? 103.26 : 229.47, 363.78, 0.75};
      break;
    case Preset::k64t64r:
      pc.m = 64;
      pc.k = 8;
      pc.f_c_hz = 3.5e9;
      pc.bandwidth_hz = 100e6;
      pc.p_max = 3.125;
      pc.cp = {3.50, on ? 53.92 : 0.0, on ? 161.95 : 341.57, 550.23, 0.75};
      break;
  }
  return pc;
}

std::string to_string(Preset preset) {
  switch (preset) {
    case Preset::k4t4r: return "4t4r";
    case Preset::k8t8r: return "8t8r";
    case Preset::k64t64r: return "64t64r";
  }
  return "?";
}

std::string to_string(TdSavings td) { return td == TdSavings::on ? "on" : "off"; }

Preset preset_from_string(const std::string& name) {
  if (name == "4t4r") return Preset::k4t4r;
  if (name == "8t8r") return Preset::k8t8r;
  if (name == "64t64r") return Preset::k64t64r;
  throw std::invalid_argument("unknown preset: " + name);
}

TdSavings td_savings_from_string(const std::string& s) {
  if (s == "off") return TdSavings::off;
  if (s == "on") return TdSavings::on;
  throw std::invalid_argument("unknown td-savings value: " + s);
}

}  // namespace bsopt
