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

#include "bsopt/link_model.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bsopt {

void Scenario::validate() const {
  if (k < 1) throw std::domain_error("Scenario: k must be >= 1");
  if (m < k) throw std::domain_error("Scenario: m must be >= k");
  if (n < 1) throw std::domain_error("Scenario: n must be >= 1");
  if (!(p_max > 0.0)) throw std::domain_error("Scenario: p_max must be positive");
  const auto sz = static_cast<std::size_t>(k);
  if (betas.size() != sz || noise_powers.size() != sz || rates.size() != sz)
    throw std::domain_error("Scenario: per-user arrays must have k entries");
  for (double b : betas)
    if (!(b > 0.0) || !std::isfinite(b)) throw std::domain_error("Scenario: betas must be > 0");
  for (double s2 : noise_powers)
    if (!(s2 > 0.0) || !std::isfinite(s2))
      throw std::domain_error("Scenario: noise_powers must be > 0");
  for (double r : rates)
    if (!(r >= 0.0) || !std::isfinite(r))
      throw std::domain_error("Scenario: rates must be finite and nonnegative");
}

bool Scenario::zero_traffic() const {
  for (double r : rates)
    if (r > 0.0) return false;
  return true;
}

double per_user_power(double rate, double slot_ratio, double noise) {
  if (rate < 0.0) throw std::domain_error("per_user_power: negative rate");
  if (rate == 0.0) return 0.0;
  if (!(slot_ratio > 0.0))
    throw std::domain_error("per_user_power: zero slot ratio with positive rate");
  return noise * (std::exp2(rate / slot_ratio) - 1.0);
}

double per_antenna_power(const Scenario& s, int n_a, int m_a) {
  if (n_a < 1 || n_a > s.n) throw std::domain_error("per_antenna_power: n_a outside [1, n]");
  if (m_a <= s.k) throw std::domain_error("per_antenna_power: m_a <= k (array-gain pole)");
  if (m_a > s.m) throw std::domain_error("per_antenna_power: m_a > m");
  const double x = static_cast<double>(s.n) / n_a;
  double sum = 0.0;
  for (int i = 0; i < s.k; ++i) {
    const std::size_t u = static_cast<std::size_t>(i);
    // exp2 overflow yields +inf, which propagates as an infeasible power.
    sum += s.noise_powers[u] / s.betas[u] * (std::exp2(s.rates[u] * x) - 1.0);
  }
  return sum / (static_cast<double>(m_a) * (m_a - s.k));
}

double min_per_antenna_power(const Scenario& s) {
  if (s.m <= s.k) throw std::domain_error("min_per_antenna_power: requires m > k");
  return per_antenna_power(s, s.n, s.m);
}

double delivered_rate(double p_k, double noise, int n_a, int n) {
  if (n_a > n) throw std::domain_error("delivered_rate: n_a > n");
  return (static_cast<double>(n_a) / n) * std::log2(1.0 + p_k / noise);
}

double total_transmit_power(const Scenario& s, int n_a, int m_a) {
  return m_a * per_antenna_power(s, n_a, m_a);
}

bool fits_power_budget(const Scenario& s, int n_a, int m_a) {
  if (n_a == 0 && m_a == 0) return s.zero_traffic();
  if (n_a < 1 || n_a > s.n || m_a <= s.k || m_a > s.m) return false;
  return per_antenna_power(s, n_a, m_a) <= s.p_max * (1.0 + kPowerSlack);
}

bool scenario_feasible(const Scenario& s) {
  if (s.zero_traffic()) return true;
  if (s.m <= s.k) return false;
  return fits_power_budget(s, s.n, s.m);
}

Scenario scenario_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Scenario s;
  s.m = j.at("m").get<int>();
  s.n = j.at("n").get<int>();
  s.k = j.at("k").get<int>();
  s.p_max = j.at("p_max").get<double>();
  s.betas = j.at("betas").get<std::vector<double>>();
  s.noise_powers = j.at("noise_powers").get<std::vector<double>>();
  s.rates = j.at("rates").get<std::vector<double>>();
  s.validate();
  return s;
}

std::string scenario_to_json(const Scenario& s) {
  nlohmann::json j;
  j["m"] = s.m;
  j["n"] = s.n;
  j["k"] = s.k;
  j["p_max"] = s.p_max;
  j["betas"] = s.betas;
  j["noise_powers"] = s.noise_powers;
  j["rates"] = s.rates;
  return j.dump(2);
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return scenario_from_json(buf.str());
}

}  // namespace bsopt
