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

#include "bsopt/feasibility.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bsopt/errors.hpp"

namespace bsopt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kExpGuard = 1020.0;  // exp2 overflows past ~1024

// ceil with a relative tolerance so boundary-tight values (y_min(1) = m +-
// 1e-10 at kappa = kappa_max) land on the integer instead of one above.
int ceil_tol(double v) {
  return static_cast<int>(std::ceil(v - 1e-9 * std::max(1.0, std::abs(v))));
}

// Sum of rho_k^{-1} (2^{R_k x} - 1); +inf once an exponent would overflow.
double boundary_sum(double x, const Scenario& s) {
  double sum = 0.0;
  for (int i = 0; i < s.k; ++i) {
    const std::size_t u = static_cast<std::size_t>(i);
    const double t = s.rates[u] * x;
    if (t > kExpGuard) return kInf;
    const double inv_rho = s.noise_powers[u] / (s.p_max * s.betas[u]);
    sum += inv_rho * (std::exp2(t) - 1.0);
  }
  return sum;
}

}  // namespace

std::string to_string(Region r) {
  switch (r) {
    case Region::D: return "D";
    case Region::R1: return "R1";
    case Region::R2: return "R2";
    case Region::R3: return "R3";
    case Region::R4: return "R4";
    case Region::R5: return "R5";
    case Region::R6: return "R6";
  }
  return "?";
}

double y_min(double x, const Scenario& s) {
  const double sum = boundary_sum(x, s);
  if (sum == kInf) return kInf;
  const double kk = static_cast<double>(s.k);
  return 0.5 * kk + std::sqrt(0.25 * kk * kk + sum);
}

int min_active_antennas(const Scenario& s) {
  if (s.zero_traffic()) return s.k;
  int m_a = ceil_tol(y_min(1.0, s));
  // the pole at m_a = k needs one extra antenna whenever traffic exists
  m_a = std::max(m_a, s.k + 1);
  if (m_a > s.m) throw infeasible_error("min_active_antennas: y_min(1) exceeds m");
  return m_a;
}

int min_active_slots(const Scenario& s) {
  if (s.zero_traffic()) return 0;
  if (!scenario_feasible(s)) throw infeasible_error("min_active_slots: infeasible scenario");
  // Bisection over the integers on the monotone power predicate at m_a = m;
  // equivalent to the continuous root of y_min(n/n_a) = m followed by a
  // ceiling, but exact at integer boundaries.
  int lo = 1, hi = s.n;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (fits_power_budget(s, mid, s.m))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

double max_rate_scaling(const Scenario& s, std::span<const double> base_rates) {
  if (base_rates.size() != static_cast<std::size_t>(s.k))
    throw std::domain_error("max_rate_scaling: base_rates must have k entries");
  double sum = 0.0;
  for (double r : base_rates) {
    if (!(r >= 0.0)) throw std::domain_error("max_rate_scaling: negative base rate");
    sum += r;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::domain_error("max_rate_scaling: base_rates must sum to 1");
  if (s.m <= s.k) return 0.0;

  Scenario probe = s;
  const auto ymin_at = [&](double kappa) {
    for (int i = 0; i < s.k; ++i)
      probe.rates[static_cast<std::size_t>(i)] = kappa * base_rates[static_cast<std::size_t>(i)];
    return y_min(1.0, probe);
  };

  const double target = static_cast<double>(s.m);
  double hi = 1.0;
  while (ymin_at(hi) < target) {
    hi *= 2.0;
    if (hi > 1e12) break;
  }
  double lo = 0.0;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (ymin_at(mid) <= target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

bool snr_condition_holds(const Scenario& s) {
  const double threshold = 2.0 / s.k;
  for (int i = 0; i < s.k; ++i) {
    const std::size_t u = static_cast<std::size_t>(i);
    if (s.p_max * s.betas[u] / s.noise_powers[u] < threshold) return false;
  }
  return true;
}

Region classify_region(DomainPoint p, const Scenario& s) {
  const bool x_ok = p.x >= 1.0;
  const bool y_ok = p.y <= static_cast<double>(s.m);
  const bool pow_ok = p.y >= y_min(p.x, s);
  if (x_ok && y_ok && pow_ok) return Region::D;
  if (!x_ok && y_ok && pow_ok) return Region::R1;
  if (!x_ok && !y_ok && pow_ok) return Region::R2;
  if (!x_ok && y_ok && !pow_ok) return Region::R3;
  if (x_ok && !y_ok && pow_ok) return Region::R4;
  if (x_ok && y_ok && !pow_ok) return Region::R5;
  if (x_ok) return Region::R6;
  // x < 1, y > M, y < y_min(x) is empty for feasible scenarios
  // (y_min(x) <= y_min(1) <= M there); dispatch like R2.
  return Region::R2;
}

double max_compression(const Scenario& s) {
  if (s.zero_traffic()) throw std::domain_error("max_compression: zero traffic");
  if (!scenario_feasible(s)) throw infeasible_error("max_compression: infeasible scenario");
  const double target = static_cast<double>(s.m);
  if (y_min(1.0, s) >= target) return 1.0;
  double lo = 1.0, hi = 2.0;
  while (y_min(hi, s) < target) {
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (y_min(mid, s) <= target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace bsopt
