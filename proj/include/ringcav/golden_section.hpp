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

#ifndef RINGCAV_GOLDEN_SECTION_HPP
#define RINGCAV_GOLDEN_SECTION_HPP

#include <cmath>
#include <concepts>

namespace ringcav {

struct ScalarMinimum {
  double x;
  double value;
  bool converged;
};

/// Golden-section search for the minimum of a unimodal `f` on [a, b]. Stops
/// once the bracket is narrower than `tolerance`. Endpoints are never
/// evaluated.
template <std::invocable<double> F>
ScalarMinimum golden_section_minimize(F&& f, double a, double b, double tolerance,
                                      int max_iterations = 500) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iterations && std::abs(b - a) > tolerance; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const bool converged = std::abs(b - a) <= tolerance;
  return fc < fd ? ScalarMinimum{c, fc, converged} : ScalarMinimum{d, fd, converged};
}

}  // namespace ringcav

#endif  // RINGCAV_GOLDEN_SECTION_HPP
