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

#ifndef RINGCAV_SCATTERING_MATRIX_HPP
#define RINGCAV_SCATTERING_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ringcav/cavity_config.hpp"

namespace ringcav {

/// Dense n x n complex matrix M with b_k = sum_j M_kj a_j. Entries are
/// addressed with 1-based (row, column) = (output port, input port).
class ScatteringMatrix {
 public:
  explicit ScatteringMatrix(int n)
      : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    if (n < 1) throw InvalidConfig("matrix dimension must be positive");
  }

  static ScatteringMatrix identity(int n) {
    ScatteringMatrix m(n);
    for (int k = 1; k <= n; ++k) m(k, k) = 1.0;
    return m;
  }

  int n() const { return n_; }

  ComplexAmplitude& operator()(int k, int j) { return entries_[index(k, j)]; }
  ComplexAmplitude operator()(int k, int j) const { return entries_[index(k, j)]; }

  /// Row-major storage.
  std::span<const ComplexAmplitude> entries() const { return entries_; }

  /// Column j: the output amplitudes for unit input on port j.
  std::vector<ComplexAmplitude> column(int j) const {
    std::vector<ComplexAmplitude> col;
    col.reserve(static_cast<std::size_t>(n_));
    for (int k = 1; k <= n_; ++k) col.push_back((*this)(k, j));
    return col;
  }

 private:
  std::size_t index(int k, int j) const {
    if (k < 1 || k > n_ || j < 1 || j > n_) {
      throw InvalidConfig("matrix index (" + std::to_string(k) + ", " + std::to_string(j) +
                          ") out of range for n = " + std::to_string(n_));
    }
    return static_cast<std::size_t>(k - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j - 1);
  }

  int n_;
  std::vector<ComplexAmplitude> entries_;
};

/// max_{k,j} |(M^dagger M - I)_kj|.
inline double verify_unitarity(const ScatteringMatrix& m) {
  const int n = m.n();
  double worst = 0.0;
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j <= n; ++j) {
      ComplexAmplitude acc = 0.0;
      for (int r = 1; r <= n; ++r) acc += std::conj(m(r, k)) * m(r, j);
      if (k == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

/// Largest entrywise modulus of a - b.
inline double max_deviation(const ScatteringMatrix& a, const ScatteringMatrix& b) {
  if (a.n() != b.n()) throw InvalidConfig("matrix dimensions differ");
  double worst = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
  return worst;
}

}  // namespace ringcav

#endif  // RINGCAV_SCATTERING_MATRIX_HPP
