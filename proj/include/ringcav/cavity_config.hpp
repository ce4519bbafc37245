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

#ifndef RINGCAV_CAVITY_CONFIG_HPP
#define RINGCAV_CAVITY_CONFIG_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ringcav/error.hpp"

namespace ringcav {

/// A field amplitude (dimensionless).
using ComplexAmplitude = std::complex<double>;

/// Argument of `z` in (-pi, pi].
inline double principal_arg(ComplexAmplitude z) {
  const double a = std::arg(z);
  return a <= -std::numbers::pi ? std::numbers::pi : a;
}

/// Threshold on |A_n| below which the cavity is treated as singular.
inline constexpr double kSingularThreshold = 1e-9;

/// Ring of `n` identical lossless beam splitters with power reflectivity
/// `rho` and one internal phase shift per arm. Ports and phases are indexed
/// from 1 in the public interface.
class CavityConfig {
 public:
  CavityConfig(int n, double rho, std::vector<double> phases)
      : n_(n), rho_(rho), phases_(std::move(phases)) {
    if (n_ < 2) {
      throw InvalidConfig("port count must be at least 2, got " + std::to_string(n_));
    }
    if (!(rho_ >= 0.0 && rho_ <= 1.0)) {
      throw InvalidConfig("reflectivity must lie in [0, 1], got " + std::to_string(rho_));
    }
    if (phases_.size() != static_cast<std::size_t>(n_)) {
      throw InvalidConfig("expected " + std::to_string(n_) + " phases, got " +
                          std::to_string(phases_.size()));
    }
    for (double p : phases_) {
      if (!std::isfinite(p)) throw InvalidConfig("phases must be finite");
    }
  }

  /// Splits `total_phase` evenly over the n arms.
  static CavityConfig uniform(int n, double rho, double total_phase) {
    if (n < 2) {
      throw InvalidConfig("port count must be at least 2, got " + std::to_string(n));
    }
    return CavityConfig(n, rho, std::vector<double>(static_cast<std::size_t>(n), total_phase / n));
  }

  int n() const { return n_; }
  double rho() const { return rho_; }
  double tau() const { return 1.0 - rho_; }
  const std::vector<double>& phases() const { return phases_; }

  /// Phase of arm `k`, 1-based.
  double phase(int k) const { return phases_.at(static_cast<std::size_t>(k - 1)); }

  double total_phase() const { return std::accumulate(phases_.begin(), phases_.end(), 0.0); }

 private:
  int n_;
  double rho_;
  std::vector<double> phases_;
};

/// (-1)^(1+n): +1 for odd n, -1 for even n.
inline constexpr double ring_sign(int n) { return n % 2 == 0 ? -1.0 : 1.0; }

/// A_n = 1 + (-1)^(1+n) rho^(n/2) e^{i phi}.
inline ComplexAmplitude ring_denominator(int n, double rho, double total_phase) {
  return 1.0 + ring_sign(n) * std::pow(rho, 0.5 * n) * std::polar(1.0, total_phase);
}

/// |1 + s x e^{i phi}|^2 = 1 + x^2 + 2 s x cos(phi) for s = +-1 and x >= 0,
/// written as (1 - x)^2 + 4 x sin^2(phi/2) (s = -1) or
/// (1 - x)^2 + 4 x cos^2(phi/2) (s = +1). Both are sums of non-negative
/// terms, so the zero at resonance keeps full relative accuracy.
inline double interference_factor(double s, double x, double phi) {
  const double h = s < 0.0 ? std::sin(0.5 * phi) : std::cos(0.5 * phi);
  return (1.0 - x) * (1.0 - x) + 4.0 * x * h * h;
}

/// |A_n|^2.
inline double ring_denominator_norm(int n, double rho, double total_phase) {
  return interference_factor(ring_sign(n), std::pow(rho, 0.5 * n), total_phase);
}

/// Total phase at which the back-reflection f_1 is minimal: 0 for even n,
/// pi for odd n.
inline constexpr double resonance_phase(int n) { return n % 2 == 0 ? 0.0 : std::numbers::pi; }

}  // namespace ringcav

#endif  // RINGCAV_CAVITY_CONFIG_HPP
