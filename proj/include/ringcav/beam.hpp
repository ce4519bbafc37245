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

#ifndef RINGCAV_BEAM_HPP
#define RINGCAV_BEAM_HPP

#include <complex>
#include <vector>

#include "ringcav/cavity_config.hpp"
#include "ringcav/closed_form.hpp"
#include "ringcav/response.hpp"

namespace ringcav {

/// Output of the ring when port 1 is fed with a coherent state |alpha> and
/// the other ports are in vacuum. Ports use the response numbering, so
/// |beta_k|^2 = |alpha|^2 f_k.
struct CoherentOutput {
  ComplexAmplitude alpha_in;
  std::vector<ComplexAmplitude> betas;
  std::vector<double> thetas;
  std::vector<double> mean_currents;
  // Coherent light is Poissonian: the variance equals the mean.
  std::vector<double> variances;
};

inline CoherentOutput propagate_coherent(const CavityConfig& config, ComplexAmplitude alpha) {
  const int n = config.n();
  const ScatteringMatrix m = closed_form_matrix(config);

  CoherentOutput out;
  out.alpha_in = alpha;
  for (int k = 1; k <= n; ++k) {
    const ComplexAmplitude gain = m(matrix_port_for_response(n, k), 1);
    const ComplexAmplitude beta = gain * alpha;
    out.betas.push_back(beta);
    out.thetas.push_back(principal_arg(gain));
    out.mean_currents.push_back(std::norm(beta));
    out.variances.push_back(std::norm(beta));
  }
  return out;
}

}  // namespace ringcav

#endif  // RINGCAV_BEAM_HPP
