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

#ifndef RINGCAV_TESTS_FIXTURES_HPP
#define RINGCAV_TESTS_FIXTURES_HPP

#include <cmath>
#include <complex>
#include <vector>

namespace ringcav::fixtures {

using cd = std::complex<double>;

/// Three-port relations written out term by term; row-major 3x3.
inline std::vector<cd> three_port(double rho, const std::vector<double>& p) {
  const cd i{0.0, 1.0};
  const double tau = 1.0 - rho;
  const double sr = std::sqrt(rho);
  const double phi = p[0] + p[1] + p[2];
  const cd a3 = 1.0 + std::pow(rho, 1.5) * std::exp(i * phi);
  const cd diag = sr * (1.0 + sr * std::exp(i * phi)) / a3;
  return {diag,
          -tau * sr * std::exp(i * (p[0] + p[2])) / a3,
          tau * std::exp(i * p[0]) / a3,
          tau * std::exp(i * p[1]) / a3,
          diag,
          -tau * sr * std::exp(i * (p[0] + p[1])) / a3,
          -tau * sr * std::exp(i * (p[1] + p[2])) / a3,
          tau * std::exp(i * p[2]) / a3,
          diag};
}

/// First row of the four-port relations, with e^{phi_14} read as e^{i phi_14}.
inline std::vector<cd> four_port_row(double rho, const std::vector<double>& p) {
  const cd i{0.0, 1.0};
  const double tau = 1.0 - rho;
  const double sr = std::sqrt(rho);
  const double phi = p[0] + p[1] + p[2] + p[3];
  const cd a4 = 1.0 - rho * rho * std::exp(i * phi);
  return {sr * (1.0 - rho * std::exp(i * phi)) / a4, tau * rho * std::exp(i * (p[0] + p[2] + p[3])) / a4,
          -tau * sr * std::exp(i * (p[0] + p[3])) / a4, tau * std::exp(i * p[0]) / a4};
}

/// Cavity response f_1..f_n in extended precision, straight from the cosine
/// form. Used as the finite-difference oracle for the analytic derivative.
inline std::vector<long double> response_reference(int n, long double rho, long double phi) {
  const long double s = n % 2 == 0 ? -1.0L : 1.0L;
  const long double d = 1.0L + std::pow(rho, static_cast<long double>(n)) +
                        2.0L * s * std::pow(rho, 0.5L * n) * std::cos(phi);
  std::vector<long double> f(static_cast<std::size_t>(n));
  f[0] = rho * (1.0L + std::pow(rho, static_cast<long double>(n - 2)) +
                2.0L * s * std::cos(phi) * std::pow(rho, 0.5L * n - 1.0L)) / d;
  for (int k = 2; k <= n; ++k) {
    f[static_cast<std::size_t>(k - 1)] = (1.0L - rho) * (1.0L - rho) * std::pow(rho, static_cast<long double>(n - k)) / d;
  }
  return f;
}

/// Central difference of response_reference with step h.
inline double reference_derivative(int n, double rho, double phi, int k, double h = 1e-6) {
  const auto up = response_reference(n, rho, static_cast<long double>(phi) + h);
  const auto down = response_reference(n, rho, static_cast<long double>(phi) - h);
  const auto i = static_cast<std::size_t>(k - 1);
  return static_cast<double>((up[i] - down[i]) / (2.0L * h));
}

}  // namespace ringcav::fixtures

#endif  // RINGCAV_TESTS_FIXTURES_HPP
