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

#ifndef RINGCAV_CLOSED_FORM_HPP
#define RINGCAV_CLOSED_FORM_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "ringcav/cavity_config.hpp"
#include "ringcav/error.hpp"
#include "ringcav/scattering_matrix.hpp"

namespace ringcav {

namespace detail {

// First row M_1j for the given phase vector (0-based storage).
inline std::vector<ComplexAmplitude> closed_form_first_row(int n, double rho,
                                                           const std::vector<double>& phases,
                                                           ComplexAmplitude a_n) {
  const double tau = 1.0 - rho;
  const double s = ring_sign(n);
  double total = 0.0;
  for (double p : phases) total += p;

  std::vector<ComplexAmplitude> row(static_cast<std::size_t>(n));
  row[0] = std::sqrt(rho) * (1.0 + s * std::pow(rho, 0.5 * n - 1.0) * std::polar(1.0, total)) / a_n;

  // theta_1j = phi_1 + sum_{k>j} phi_k; accumulate the tail from the back.
  double tail = 0.0;
  for (int j = n; j >= 2; --j) {
    const double theta = phases[0] + tail;
    const double sign = (n + j) % 2 == 0 ? 1.0 : -1.0;
    row[static_cast<std::size_t>(j - 1)] =
        sign * tau * std::pow(rho, 0.5 * (n - j)) * std::polar(1.0, theta) / a_n;
    tail += phases[static_cast<std::size_t>(j - 1)];
  }
  return row;
}

}  // namespace detail

/// Closed-form input-output matrix of the ring.
///
/// Row 1 is
///   M_11 = sqrt(rho) [1 + (-1)^(1+n) rho^(n/2-1) e^{i phi}] / A_n,
///   M_1j = (-1)^(n+j) tau rho^((n-j)/2) e^{i theta_1j} / A_n,  j >= 2,
/// with theta_1j = phi_1 + sum_{k=j+1}^n phi_k. Row k follows by relabelling
/// ports and arms cyclically so that port k plays the role of port 1:
///   M_kj(phi_1..phi_n) = M_1j'(phi'_1..phi'_n),
///   j' = ((j - k) mod n) + 1,  phi'_m = phi_{((m + k - 2) mod n) + 1}.
///
/// Throws SingularCavity when |A_n| < kSingularThreshold.
inline ScatteringMatrix closed_form_matrix(const CavityConfig& config) {
  const int n = config.n();
  const ComplexAmplitude a_n = ring_denominator(n, config.rho(), config.total_phase());
  if (std::abs(a_n) < kSingularThreshold) {
    throw SingularCavity("ring denominator |A_n| = " + std::to_string(std::abs(a_n)) +
                         " vanishes: cavity is resonant with perfect mirrors");
  }

  ScatteringMatrix m(n);
  std::vector<double> shifted(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    for (int mm = 1; mm <= n; ++mm) {
      shifted[static_cast<std::size_t>(mm - 1)] = config.phase(((mm + k - 2) % n) + 1);
    }
    const auto row = detail::closed_form_first_row(n, config.rho(), shifted, a_n);
    for (int j = 1; j <= n; ++j) {
      const int jp = (((j - k) % n) + n) % n + 1;
      m(k, j) = row[static_cast<std::size_t>(jp - 1)];
    }
  }
  return m;
}

}  // namespace ringcav

#endif  // RINGCAV_CLOSED_FORM_HPP
