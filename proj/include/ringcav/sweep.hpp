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

#ifndef RINGCAV_SWEEP_HPP
#define RINGCAV_SWEEP_HPP

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "ringcav/cavity_config.hpp"
#include "ringcav/error.hpp"
#include "ringcav/response.hpp"
#include "ringcav/sensitivity.hpp"
#include "ringcav/table.hpp"

namespace ringcav {

enum class SweepVariable { rho, phi };
enum class SweepQuantity { response, sensitivity };

/// Single-variable sweep. When sweeping rho the phases come from `phases`
/// or, if absent, from an even split of `total_phase`; when sweeping phi the
/// total phase is split evenly and `rho` is held fixed.
struct SweepSpec {
  SweepVariable variable = SweepVariable::rho;
  SweepQuantity quantity = SweepQuantity::response;
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;
  int n = 2;
  double rho = 0.0;
  std::optional<std::vector<double>> phases;
  double total_phase = 0.0;
  double alpha_abs = 1.0;

  void validate() const {
    if (steps < 2) throw InvalidConfig("sweep needs at least 2 steps");
    if (!(start < stop)) throw InvalidConfig("sweep start must be below stop");
    if (n < 2) throw InvalidConfig("port count must be at least 2");
    if (variable == SweepVariable::rho) {
      if (start < 0.0 || stop >= 1.0) throw InvalidConfig("swept rho must stay within [0, 1)");
    } else {
      if (start < 0.0 || stop > 2.0 * std::numbers::pi) throw InvalidConfig("swept phi must stay within [0, 2 pi]");
      if (phases) throw InvalidConfig("a phi sweep takes no per-mirror phases");
    }
    if (!(alpha_abs > 0.0)) throw InvalidConfig("input amplitude must be positive");
  }

  CavityConfig config_at(double value) const {
    if (variable == SweepVariable::phi) return CavityConfig::uniform(n, rho, value);
    if (phases) return CavityConfig(n, value, *phases);
    return CavityConfig::uniform(n, value, total_phase);
  }
};

/// Columns: the swept variable, then f1..fn for a response sweep, or
/// delta_phi_1..delta_phi_n and overall for a sensitivity sweep. Stationary
/// points leave the sensitivity cells empty.
inline Table run_sweep(const SweepSpec& spec) {
  spec.validate();
  Table table;
  table.header.push_back(spec.variable == SweepVariable::rho ? "rho" : "phi");
  const std::string prefix = spec.quantity == SweepQuantity::response ? "f" : "delta_phi_";
  for (int k = 1; k <= spec.n; ++k) table.header.push_back(prefix + std::to_string(k));
  if (spec.quantity == SweepQuantity::sensitivity) table.header.push_back("overall");

  for (int i = 0; i < spec.steps; ++i) {
    const double value = spec.start + (spec.stop - spec.start) * i / (spec.steps - 1);
    const CavityConfig config = spec.config_at(value);
    std::vector<std::optional<double>> row{value};
    if (spec.quantity == SweepQuantity::response) {
      for (double f : response_closed(config).f) row.push_back(f);
    } else {
      for (int k = 1; k <= spec.n; ++k) {
        std::optional<double> cell;
        if (std::abs(dfdphi(config, k)) >= kPoleMask) cell = sensitivity_at(config, k, spec.alpha_abs);
        row.push_back(cell);
      }
      std::optional<double> overall;
      if (row[1]) overall = *row[1] / std::sqrt(static_cast<double>(spec.n));
      row.push_back(overall);
    }
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace ringcav

#endif  // RINGCAV_SWEEP_HPP
