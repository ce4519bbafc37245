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

#ifndef RINGCAV_RESPONSE_HPP
#define RINGCAV_RESPONSE_HPP

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "ringcav/cascade.hpp"
#include "ringcav/cavity_config.hpp"
#include "ringcav/error.hpp"

namespace ringcav {

/// Fractions of the power entering port 1 that leave through each output
/// port, f_1..f_n (stored 0-based in `f`).
///
/// Output ports follow the response numbering: port k >= 2 is reached from
/// port 1 after n - k internal reflections, so f_n is the direct
/// transmission. In scattering-matrix numbering that is output port
/// `matrix_port_for_response(n, k)`.
struct ResponseProfile {
  int n = 0;
  double rho = 0.0;
  double total_phase = 0.0;
  std::vector<double> f;
  double a_squared = 0.0;

  /// f_k, 1-based.
  double at(int k) const { return f.at(static_cast<std::size_t>(k - 1)); }
  double sum() const { return std::accumulate(f.begin(), f.end(), 0.0); }
};

/// Scattering-matrix output port carrying response port k: k -> n + 2 - k for
/// k >= 2, and 1 -> 1.
inline constexpr int matrix_port_for_response(int n, int k) { return ((n + 1 - k) % n) + 1; }

namespace detail {

inline void check_port(int n, int k) {
  if (k < 1 || k > n) {
    throw InvalidConfig("port " + std::to_string(k) + " out of range 1.." + std::to_string(n));
  }
}

inline void check_ring(int n, double rho) {
  if (n < 2) throw InvalidConfig("port count must be at least 2, got " + std::to_string(n));
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw InvalidConfig("reflectivity must lie in [0, 1], got " + std::to_string(rho));
  }
}

// Closed-form responses as a function of the total phase only.
inline ResponseProfile response_closed(int n, double rho, double phi) {
  const double d = ring_denominator_norm(n, rho, phi);
  if (d < kSingularThreshold * kSingularThreshold) {
    throw SingularCavity("|A_n|^2 = " + std::to_string(d) + " vanishes");
  }
  ResponseProfile out{n, rho, phi, std::vector<double>(static_cast<std::size_t>(n)), d};
  out.f[0] = rho * interference_factor(ring_sign(n), std::pow(rho, 0.5 * n - 1.0), phi) / d;
  const double tt = (1.0 - rho) * (1.0 - rho);
  for (int k = 2; k <= n; ++k) out.f[static_cast<std::size_t>(k - 1)] = tt * std::pow(rho, n - k) / d;
  return out;
}

}  // namespace detail

/// Closed-form cavity response:
///   f_1 = rho [1 + rho^(n-2) + 2 (-1)^(1+n) rho^(n/2-1) cos phi] / |A_n|^2,
///   f_k = (1 - rho)^2 rho^(n-k) / |A_n|^2,   2 <= k <= n,
/// with |A_n|^2 = 1 + rho^n + 2 (-1)^(1+n) rho^(n/2) cos phi.
inline ResponseProfile response_closed(const CavityConfig& config) {
  return detail::response_closed(config.n(), config.rho(), config.total_phase());
}

/// Response read off the cascade matrix for unit input on port 1.
inline ResponseProfile response_from_matrix(const CavityConfig& config) {
  const int n = config.n();
  const ScatteringMatrix m = cascade_matrix(config);
  ResponseProfile out{n, config.rho(), config.total_phase(),
                      std::vector<double>(static_cast<std::size_t>(n)),
                      std::norm(ring_denominator(n, config.rho(), config.total_phase()))};
  for (int k = 1; k <= n; ++k) {
    out.f[static_cast<std::size_t>(k - 1)] = std::norm(m(matrix_port_for_response(n, k), 1));
  }
  return out;
}

/// Response at resonance (phi = 0 for even n, pi for odd n):
///   f_1 = rho [(1 - rho^(n/2-1)) / (1 - rho^(n/2))]^2,
///   f_k = rho^(n-k) [(1 - rho) / (1 - rho^(n/2))]^2.
inline ResponseProfile response_at_resonance(int n, double rho) {
  detail::check_ring(n, rho);
  if (rho >= 1.0) throw InvalidConfig("resonant response is undefined at rho = 1");
  const double half = std::pow(rho, 0.5 * n);
  ResponseProfile out{n, rho, resonance_phase(n), std::vector<double>(static_cast<std::size_t>(n)),
                      (1.0 - half) * (1.0 - half)};
  const double r1 = (1.0 - std::pow(rho, 0.5 * n - 1.0)) / (1.0 - half);
  out.f[0] = rho * r1 * r1;
  const double rk = (1.0 - rho) / (1.0 - half);
  for (int k = 2; k <= n; ++k) out.f[static_cast<std::size_t>(k - 1)] = std::pow(rho, n - k) * rk * rk;
  return out;
}

/// Resonant response for rho -> 1: f_1 = (1 - 2/n)^2, f_k = 4/n^2.
inline ResponseProfile high_reflectivity_limit(int n) {
  detail::check_ring(n, 1.0);
  const double nn = n;
  ResponseProfile out{n, 1.0, resonance_phase(n), std::vector<double>(static_cast<std::size_t>(n), 4.0 / (nn * nn)),
                      0.0};
  out.f[0] = (1.0 - 2.0 / nn) * (1.0 - 2.0 / nn);
  return out;
}

/// Resonance half-width estimate (1 - rho^(n/2)) / (2 rho^(n/4)); tends to
/// (n/4)(1 - rho) as rho -> 1.
inline double half_width(int n, double rho) {
  detail::check_ring(n, rho);
  if (rho <= 0.0 || rho >= 1.0) throw InvalidConfig("half-width needs 0 < rho < 1");
  return (1.0 - std::pow(rho, 0.5 * n)) / (2.0 * std::pow(rho, 0.25 * n));
}

/// Phase offset from resonance at which f_1 reaches the midpoint between its
/// resonant minimum and its anti-resonant maximum, found by bisection.
inline double measured_half_width(int n, double rho) {
  detail::check_ring(n, rho);
  if (rho <= 0.0 || rho >= 1.0) throw InvalidConfig("half-width needs 0 < rho < 1");

  const double res = resonance_phase(n);
  auto f1 = [&](double offset) { return detail::response_closed(n, rho, res + offset).f[0]; };
  const double mid = 0.5 * (f1(0.0) + f1(std::numbers::pi));

  // f_1 depends on cos(phi) only, so it is monotone in the offset on [0, pi].
  double lo = 0.0;
  double hi = std::numbers::pi;
  if (!(f1(lo) < mid && f1(hi) > mid)) {
    throw ConvergenceFailure("midpoint level is not bracketed by the resonance and anti-resonance");
  }
  for (int iter = 0; iter < 200 && hi - lo > 1e-15 * hi; ++iter) {
    const double x = 0.5 * (lo + hi);
    (f1(x) < mid ? lo : hi) = x;
  }
  if (hi - lo > 1e-12 * hi) throw ConvergenceFailure("bisection did not converge");
  return 0.5 * (lo + hi);
}

}  // namespace ringcav

#endif  // RINGCAV_RESPONSE_HPP
