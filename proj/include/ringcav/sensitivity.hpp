// Copyright 2026 The ringcav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RINGCAV_SENSITIVITY_HPP
#define RINGCAV_SENSITIVITY_HPP

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "ringcav/cavity_config.hpp"
#include "ringcav/error.hpp"
#include "ringcav/golden_section.hpp"
#include "ringcav/response.hpp"

namespace ringcav {

/// |df/dphi| below this makes sensitivity_at throw StationaryPoint.
inline constexpr double kStationaryThreshold = 1e-15;
/// |df/dphi| below this is masked out of working-point scans and plots.
inline constexpr double kPoleMask = 1e-12;

namespace detail {

// d f_k / d phi at total phase phi. With s = (-1)^(1+n), D = |A_n|^2 and
// N = 1 + rho^(n-2) + 2 s rho^(n/2-1) cos phi:
//   f_1' = rho (N' D - N D') / D^2,  f_k' = -(1-rho)^2 rho^(n-k) D' / D^2,
// where D' = -2 s rho^(n/2) sin phi and N' = -2 s rho^(n/2-1) sin phi.
inline double dfdphi(int n, double rho, double phi, int k) {
  check_port(n, k);
  const double s = ring_sign(n);
  const double d = ring_denominator_norm(n, rho, phi);
  if (d < kSingularThreshold * kSingularThreshold) throw SingularCavity("|A_n|^2 vanishes");
  const double sin_phi = std::sin(phi);
  const double d_prime = -2.0 * s * std::pow(rho, 0.5 * n) * sin_phi;
  if (k == 1) {
    const double q = std::pow(rho, 0.5 * n - 1.0);
    const double num = interference_factor(s, q, phi);
    const double num_prime = -2.0 * s * q * sin_phi;
    return rho * (num_prime * d - num * d_prime) / (d * d);
  }
  return -(1.0 - rho) * (1.0 - rho) * std::pow(rho, n - k) * d_prime / (d * d);
}

// sqrt(f_k) / |f_k'| with unit input amplitude; +inf where |f_k'| < mask.
inline double unit_sensitivity(int n, double rho, double phi, int k, double mask) {
  const double slope = std::abs(dfdphi(n, rho, phi, k));
  if (slope < mask) return std::numeric_limits<double>::infinity();
  return std::sqrt(response_closed(n, rho, phi).f[static_cast<std::size_t>(k - 1)]) / slope;
}

}  // namespace detail

/// Analytic derivative of f_k (1-based port) with respect to the total phase.
inline double dfdphi(const CavityConfig& config, int k) {
  return detail::dfdphi(config.n(), config.rho(), config.total_phase(), k);
}

/// Shot-noise-limited detectable phase fluctuation at port k when the
/// working point is the config's total phase:
///   delta phi_k = sqrt(f_k) / (|alpha| |d f_k / d phi|).
inline double sensitivity_at(const CavityConfig& config, int k, double alpha_abs) {
  detail::check_port(config.n(), k);
  if (!(alpha_abs > 0.0)) throw InvalidConfig("input amplitude must be positive");
  const double slope = std::abs(dfdphi(config, k));
  if (slope < kStationaryThreshold) {
    throw StationaryPoint("response of port " + std::to_string(k) +
                          " is stationary at phi = " + std::to_string(config.total_phase()));
  }
  const double fk = response_closed(config).at(k);
  return std::sqrt(fk) / (alpha_abs * slope);
}

struct WorkingPoint {
  double phi_star;
  double delta_phi;  // at unit input amplitude
};

inline constexpr int kWorkingPointGrid = 8192;

/// Working point minimising delta phi_k over (0, 2 pi): a dense scan with
/// stationary points masked, then golden-section refinement around the best
/// sample. delta phi is symmetric under phi -> 2 pi - phi; the representative
/// in (0, pi] is returned.
inline WorkingPoint optimize_working_point(int n, double rho, int k) {
  detail::check_ring(n, rho);
  detail::check_port(n, k);
  if (rho <= 0.0 || rho >= 1.0) throw InvalidConfig("working point search needs 0 < rho < 1");

  auto objective = [&](double phi) { return detail::unit_sensitivity(n, rho, phi, k, kPoleMask); };
  const double step = 2.0 * std::numbers::pi / kWorkingPointGrid;
  int best = -1;
  double best_value = std::numeric_limits<double>::infinity();
  for (int i = 1; i < kWorkingPointGrid; ++i) {
    const double v = objective(i * step);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  if (best < 0) throw ConvergenceFailure("every scanned working point is stationary");

  const ScalarMinimum refined =
      golden_section_minimize(objective, (best - 1) * step, (best + 1) * step, 1e-10);
  if (!refined.converged || !std::isfinite(refined.value)) {
    throw ConvergenceFailure("golden-section refinement did not converge");
  }
  WorkingPoint wp{refined.x, refined.value};
  if (best_value < wp.delta_phi) wp = {best * step, best_value};
  if (wp.phi_star > std::numbers::pi) wp.phi_star = 2.0 * std::numbers::pi - wp.phi_star;
  return wp;
}

/// Aggregate sensitivity delta phi_1 / sqrt(n) at unit input amplitude.
/// Meaningful in the high-reflectivity regime, where the per-port values
/// of the transmitted ports coincide.
inline double overall_sensitivity(int n, double rho, double phi) {
  return sensitivity_at(CavityConfig::uniform(n, rho, phi), 1, 1.0) / std::sqrt(static_cast<double>(n));
}

struct SensitivityReport {
  int n = 0;
  double rho = 0.0;
  double working_point = 0.0;
  std::vector<double> per_port;  // delta phi_k * |alpha|
  double overall = 0.0;          // per_port[0] / sqrt(n)
  double alpha_abs = 1.0;
};

/// Sensitivities of every port at the working point `phi`.
inline SensitivityReport sensitivity_report_at(int n, double rho, double phi, double alpha_abs) {
  const CavityConfig config = CavityConfig::uniform(n, rho, phi);
  SensitivityReport report{n, rho, phi, {}, 0.0, alpha_abs};
  for (int k = 1; k <= n; ++k) report.per_port.push_back(alpha_abs * sensitivity_at(config, k, alpha_abs));
  report.overall = report.per_port.front() / std::sqrt(static_cast<double>(n));
  return report;
}

/// Sensitivities at the working point that is optimal for port 1.
inline SensitivityReport sensitivity_report(int n, double rho, double alpha_abs) {
  return sensitivity_report_at(n, rho, optimize_working_point(n, rho, 1).phi_star, alpha_abs);
}

}  // namespace ringcav

#endif  // RINGCAV_SENSITIVITY_HPP
