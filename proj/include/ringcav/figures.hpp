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

#ifndef RINGCAV_FIGURES_HPP
#define RINGCAV_FIGURES_HPP

#include <algorithm>
#include <functional>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ringcav/cavity_config.hpp"
#include "ringcav/response.hpp"
#include "ringcav/sensitivity.hpp"
#include "ringcav/table.hpp"

namespace ringcav {

/// A property the generated dataset is expected to satisfy.
struct InBandCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline bool strictly_increasing(const std::vector<double>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>{}) == v.end();
}

struct FigureData {
  Table table;
  std::vector<InBandCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const InBandCheck& c) { return c.passed; });
  }
};

/// Total phases of the four-port reflectivity curves.
inline std::vector<double> four_port_phases() {
  constexpr double pi = std::numbers::pi;
  return {0.0, pi / 20, pi / 10, pi / 5, pi / 2, pi};
}

/// f_k of a four-port ring against rho in [0, 0.999] for several total
/// phases. Checks the sum rule and the curve ordering: f_1 grows with phi
/// toward pi at every rho, f_2..f_4 shrink.
inline FigureData fig3_dataset(int rho_points = 1000) {
  if (rho_points < 2) throw InvalidConfig("need at least two reflectivity samples");
  constexpr int n = 4;
  const auto phases = four_port_phases();
  FigureData out;
  out.table.header = {"rho", "phi", "f1", "f2", "f3", "f4"};

  std::vector<std::vector<ResponseProfile>> grid(phases.size());
  for (std::size_t p = 0; p < phases.size(); ++p) {
    for (int i = 0; i < rho_points; ++i) {
      const double rho = 0.999 * i / (rho_points - 1);
      grid[p].push_back(response_closed(CavityConfig::uniform(n, rho, phases[p])));
    }
  }

  double worst_sum = 0.0;
  bool f1_order = true;
  bool fk_order = true;
  for (std::size_t p = 0; p < phases.size(); ++p) {
    for (int i = 0; i < rho_points; ++i) {
      const ResponseProfile& r = grid[p][static_cast<std::size_t>(i)];
      out.table.add_row({r.rho, phases[p], r.f[0], r.f[1], r.f[2], r.f[3]});
      worst_sum = std::max(worst_sum, std::abs(r.sum() - 1.0));
      if (p == 0) continue;
      const ResponseProfile& prev = grid[p - 1][static_cast<std::size_t>(i)];
      const double slack = 1e-15;
      if (r.f[0] < prev.f[0] - slack) f1_order = false;
      for (int k = 1; k < n; ++k) {
        if (r.f[static_cast<std::size_t>(k)] > prev.f[static_cast<std::size_t>(k)] + slack) fk_order = false;
      }
    }
  }

  std::ostringstream sum_detail;
  sum_detail << "max |sum f - 1| = " << worst_sum;
  out.checks.push_back({"sum rule within 1e-12", worst_sum <= 1e-12, sum_detail.str()});
  out.checks.push_back({"f1 curves ordered bottom to top in phi", f1_order, ""});
  out.checks.push_back({"f2..f4 curves ordered top to bottom in phi", fk_order, ""});
  return out;
}

/// f_1 and f_n against the total phase in [0, 2 pi] for n = 2..5 at
/// rho = 0.99. Checks that the resonance dip of f_1 sits at 0 (even n) or
/// pi (odd n) and that the measured half-width grows with n.
inline FigureData fig4_dataset(int phi_points = 2001, double rho = 0.99) {
  if (phi_points < 3) throw InvalidConfig("need at least three phase samples");
  FigureData out;
  out.table.header = {"n", "phi", "f1", "fn"};

  bool dips_ok = true;
  std::vector<double> widths;
  std::ostringstream width_detail;
  for (int n = 2; n <= 5; ++n) {
    double min_f1 = 2.0;
    double min_phi = 0.0;
    for (int i = 0; i < phi_points; ++i) {
      const double phi = 2.0 * std::numbers::pi * i / (phi_points - 1);
      const ResponseProfile r = response_closed(CavityConfig::uniform(n, rho, phi));
      out.table.add_row({static_cast<double>(n), phi, r.f.front(), r.f.back()});
      if (r.f.front() < min_f1) {
        min_f1 = r.f.front();
        min_phi = phi;
      }
    }
    const double expected = resonance_phase(n);
    if (std::abs(min_phi - expected) > 1e-12 && std::abs(min_phi - 2.0 * std::numbers::pi) > 1e-12) {
      dips_ok = false;
    }
    widths.push_back(measured_half_width(n, rho));
    width_detail << (n > 2 ? "; " : "") << "n=" << n << " measured " << widths.back() << " formula "
                 << half_width(n, rho);
  }

  out.checks.push_back({"f1 dips at phi = 0 (n even) / pi (n odd)", dips_ok, ""});
  out.checks.push_back({"measured half-width increases with n",
                        strictly_increasing(widths),
                        width_detail.str()});
  return out;
}

/// Rescaled overall sensitivity y(phi) = delta phi_1 / sqrt(n) at unit input
/// for n = 2..5 and rho = 0.99, sampled at the centres of `phi_points` equal
/// cells of [0, 2 pi] so the stationary points 0, pi, 2 pi are never hit.
/// Samples where |d f_1 / d phi| < 1e-12 are left empty. Checks the
/// n-ordering of the optima, the phi -> 2 pi - phi symmetry, and the masking.
inline FigureData fig5_dataset(int phi_points = 4000, double rho = 0.99) {
  if (phi_points < 2) throw InvalidConfig("need at least two phase samples");
  FigureData out;
  out.table.header = {"phi", "y2", "y3", "y4", "y5"};

  std::vector<std::vector<std::optional<double>>> columns(4);
  bool mask_ok = true;
  for (int i = 0; i < phi_points; ++i) {
    const double phi = 2.0 * std::numbers::pi * (i + 0.5) / phi_points;
    std::vector<std::optional<double>> row{phi};
    for (int n = 2; n <= 5; ++n) {
      const double slope = std::abs(detail::dfdphi(n, rho, phi, 1));
      std::optional<double> y;
      if (slope >= kPoleMask) y = overall_sensitivity(n, rho, phi);
      if (y.has_value() != (slope >= kPoleMask) || (y && !std::isfinite(*y))) mask_ok = false;
      columns[static_cast<std::size_t>(n - 2)].push_back(y);
      row.push_back(y);
    }
    out.table.add_row(std::move(row));
  }

  bool symmetric = true;
  for (const auto& col : columns) {
    for (std::size_t i = 0; i < col.size(); ++i) {
      const auto& a = col[i];
      const auto& b = col[col.size() - 1 - i];
      if (a.has_value() != b.has_value()) {
        symmetric = false;
      } else if (a && std::abs(*a - *b) > 1e-6 * std::abs(*a)) {
        symmetric = false;
      }
    }
  }

  std::vector<double> optima;
  std::ostringstream opt_detail;
  for (int n = 2; n <= 5; ++n) {
    const WorkingPoint wp = optimize_working_point(n, rho, 1);
    optima.push_back(wp.delta_phi / std::sqrt(static_cast<double>(n)));
    opt_detail << (n > 2 ? "; " : "") << "n=" << n << " phi*=" << wp.phi_star << " y*=" << optima.back();
  }

  out.checks.push_back({"optima ordered bottom to top n = 2..5",
                        strictly_increasing(optima),
                        opt_detail.str()});
  out.checks.push_back({"curves symmetric about phi = pi", symmetric, ""});
  out.checks.push_back({"poles masked exactly where |df1/dphi| < 1e-12", mask_ok, ""});
  return out;
}

}  // namespace ringcav

#endif  // RINGCAV_FIGURES_HPP
