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

#ifndef RINGCAV_CASCADE_HPP
#define RINGCAV_CASCADE_HPP

#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "ringcav/cavity_config.hpp"
#include "ringcav/error.hpp"
#include "ringcav/scattering_matrix.hpp"

namespace ringcav {

/// Builds the input-output matrix directly from the beam-splitter relations
///
///   b_k        =  sqrt(tau) d_k + sqrt(rho) a_k
///   c_{k (+) 1} = -sqrt(rho) d_k + sqrt(tau) a_k,     d_k = e^{i phi_k} c_k,
///
/// without using the closed form. The internal amplitudes c satisfy the
/// cyclic system  c_{k+1} + sqrt(rho) e^{i phi_k} c_k = sqrt(tau) a_k, which is
/// solved once per input port j (a = e_j) to produce column j.
///
/// Throws SingularSystem when the system is numerically singular, which only
/// happens for rho = 1 on resonance.
inline ScatteringMatrix cascade_matrix(const CavityConfig& config) {
  const int n = config.n();
  const double sr = std::sqrt(config.rho());
  const double st = std::sqrt(config.tau());

  Eigen::MatrixXcd system = Eigen::MatrixXcd::Identity(n, n);
  Eigen::VectorXcd arm(n);
  for (int k = 0; k < n; ++k) {
    arm(k) = std::polar(1.0, config.phases()[static_cast<std::size_t>(k)]);
    system((k + 1) % n, k) += sr * arm(k);
  }

  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(system);
  const double rcond = lu.rcond();
  if (!(rcond >= kSingularThreshold)) {
    throw SingularSystem("cascade system is singular (rcond = " + std::to_string(rcond) + ")");
  }

  // The source term sqrt(tau) a_k drives c_{k+1}.
  const Eigen::MatrixXcd rhs = [&] {
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < n; ++k) r((k + 1) % n, k) = st;
    return r;
  }();
  const Eigen::MatrixXcd internal = lu.solve(rhs);  // column j: c for a = e_j

  ScatteringMatrix m(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      ComplexAmplitude b = st * arm(k) * internal(k, j);
      if (k == j) b += sr;
      m(k + 1, j + 1) = b;
    }
  }
  return m;
}

}  // namespace ringcav

#endif  // RINGCAV_CASCADE_HPP
