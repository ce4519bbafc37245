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

// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
// criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "ringcav/ringcav.hpp"

using namespace ringcav;

namespace {

constexpr double kPi = std::numbers::pi;

int failures = 0;

void report(const std::string& id, const std::string& what, bool passed, const std::string& detail) {
  std::cout << (passed ? "PASS " : "FAIL ") << id << "  " << what << "  [" << detail << "]\n";
  if (!passed) ++failures;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<double> random_phases(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> dist(-2.0 * kPi, 2.0 * kPi);
  std::vector<double> p(static_cast<std::size_t>(n));
  for (auto& x : p) x = dist(rng);
  return p;
}

void criterion_1() {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> ports(2, 8);
  std::uniform_real_distribution<double> refl(0.0, 0.99);
  double worst_dev = 0.0;
  double worst_unit = 0.0;
  const int cases = 250;
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < cases; ++i) {
    const int n = ports(rng);
    const CavityConfig config(n, refl(rng), random_phases(rng, n));
    const auto closed = closed_form_matrix(config);
    const auto cascade = cascade_matrix(config);
    worst_dev = std::max(worst_dev, max_deviation(closed, cascade));
    worst_unit = std::max({worst_unit, verify_unitarity(closed), verify_unitarity(cascade)});
  }
  const double elapsed = seconds_since(start);
  report("1", "closed form == cascade within 1e-12, unitary within 1e-12, < 1 s",
         worst_dev < 1e-12 && worst_unit < 1e-12 && elapsed < 1.0,
         std::to_string(cases) + " configs, max dev " + fmt(worst_dev) + ", max unitarity " + fmt(worst_unit) +
             ", " + fmt(elapsed) + " s");
}

void criterion_2() {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> refl(0.0, 0.99);
  double worst3 = 0.0;
  double worst4 = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const double rho = refl(rng);
    const auto p3 = random_phases(rng, 3);
    const auto m3 = closed_form_matrix(CavityConfig(3, rho, p3));
    const auto f3 = fixtures::three_port(rho, p3);
    for (int k = 1; k <= 3; ++k) {
      for (int j = 1; j <= 3; ++j) {
        worst3 = std::max(worst3, std::abs(m3(k, j) - f3[static_cast<std::size_t>(3 * (k - 1) + j - 1)]));
      }
    }
    const auto p4 = random_phases(rng, 4);
    const auto m4 = closed_form_matrix(CavityConfig(4, rho, p4));
    const auto f4 = fixtures::four_port_row(rho, p4);
    for (int j = 1; j <= 4; ++j) worst4 = std::max(worst4, std::abs(m4(1, j) - f4[static_cast<std::size_t>(j - 1)]));
  }
  report("2", "printed three-port matrix and four-port row reproduced within 1e-12",
         worst3 < 1e-12 && worst4 < 1e-12, "n=3 max " + fmt(worst3) + ", n=4 max " + fmt(worst4));
}

void criterion_3() {
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n) {
    for (int i = 0; i < 100; ++i) {
      for (int j = 0; j < 400; ++j) {
        const auto config = CavityConfig::uniform(n, 0.01 * i, j * 2.0 * kPi / 400.0);
        worst = std::max(worst, std::abs(response_closed(config).sum() - 1.0));
        worst = std::max(worst, std::abs(response_from_matrix(config).sum() - 1.0));
      }
    }
  }
  report("3", "sum rule within 1e-12 on 100x400 (rho, phi) grid, n = 2..6", worst < 1e-12,
         "max |sum - 1| " + fmt(worst));
}

void criterion_4() {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> shift(-3.0, 3.0);
  double worst = 0.0;
  int redistributions = 0;
  for (int n = 2; n <= 8; ++n) {
    for (double rho : {0.1, 0.5, 0.9, 0.99}) {
      const auto base = random_phases(rng, n);
      const auto reference = response_closed(CavityConfig(n, rho, base));
      for (int r = 0; r < 50; ++r) {
        auto moved = base;
        for (int m = 0; m + 1 < n; ++m) {
          const double d = shift(rng);
          moved[static_cast<std::size_t>(m)] += d;
          moved[static_cast<std::size_t>(n - 1)] -= d;
        }
        const auto f = response_from_matrix(CavityConfig(n, rho, moved));
        for (int k = 1; k <= n; ++k) worst = std::max(worst, std::abs(f.at(k) - reference.at(k)));
        ++redistributions;
      }
    }
  }
  report("4", "redistributing phases at fixed total changes no f_k by more than 1e-12", worst < 1e-12,
         std::to_string(redistributions) + " redistributions, max change " + fmt(worst));
}

void criterion_5() {
  double two_port = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double rho = 0.999 * i / 999.0;
    for (const auto& r : {response_closed(CavityConfig::uniform(2, rho, 0.0)), response_at_resonance(2, rho)}) {
      two_port = std::max({two_port, std::abs(r.at(1)), std::abs(r.at(2) - 1.0)});
    }
  }
  report("5a", "n=2 at resonance gives f = (0, 1) within 1e-12 for all rho < 1", two_port < 1e-12,
         "max error " + fmt(two_port));

  double four_port = 0.0;
  for (double f : response_closed(CavityConfig::uniform(4, 1.0 - 1e-8, 0.0)).f) {
    four_port = std::max(four_port, std::abs(f - 0.25));
  }
  report("5b", "n=4 at rho = 1 - 1e-8, phi = 0 gives f_k = 0.25 +- 1e-6", four_port < 1e-6,
         "max error " + fmt(four_port));

  double limit = 0.0;
  for (int n = 2; n <= 10; ++n) {
    const auto expected = high_reflectivity_limit(n);
    const auto closed = response_closed(CavityConfig::uniform(n, 1.0 - 1e-8, resonance_phase(n)));
    const auto resonant = response_at_resonance(n, 1.0 - 1e-8);
    for (int k = 1; k <= n; ++k) {
      const double want = k == 1 ? std::pow(1.0 - 2.0 / n, 2) : 4.0 / (n * n);
      limit = std::max({limit, std::abs(expected.at(k) - want), std::abs(closed.at(k) - want),
                        std::abs(resonant.at(k) - want)});
    }
  }
  report("5c", "rho -> 1 resonance: f_1 = (1 - 2/n)^2, f_k = 4/n^2 within 1e-6, n = 2..10", limit < 1e-6,
         "max error " + fmt(limit));
}

void criterion_6() {
  double worst = 0.0;
  for (int n = 2; n <= 5; ++n) {
    for (double rho : {0.9, 0.99, 0.999}) {
      worst = std::max(worst, std::abs(measured_half_width(n, rho) / half_width(n, rho) - 1.0));
    }
  }
  report("6a", "measured half-width matches the half-width formula within 5%", worst < 0.05,
         "max relative error " + fmt(worst));

  double asymptote = 0.0;
  for (int n = 2; n <= 5; ++n) {
    asymptote = std::max(asymptote, std::abs(measured_half_width(n, 0.999) / (0.25 * n * 0.001) - 1.0));
  }
  report("6b", "measured half-width matches (n/4)(1 - rho) within 2% at rho = 0.999", asymptote < 0.02,
         "max relative error " + fmt(asymptote));
}

void criterion_7() {
  // Central differences (step 1e-6) of an extended-precision evaluation of f.
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n) {
    for (int i = 0; i < 20; ++i) {
      const double rho = 0.05 + 0.94 * i / 19.0;
      for (int j = 0; j < 40; ++j) {
        const double phi = (j + 0.5) * 2.0 * kPi / 40.0;
        for (int k = 1; k <= n; ++k) {
          const double analytic = dfdphi(CavityConfig::uniform(n, rho, phi), k);
          const double numeric = fixtures::reference_derivative(n, rho, phi, k, 1e-6);
          worst = std::max(worst, std::abs(analytic - numeric) / std::abs(analytic));
        }
      }
    }
  }
  report("7", "analytic df/dphi matches central differences within 1e-6 relative (5x20x40 grid)", worst < 1e-6,
         "max relative error " + fmt(worst));
}

void criterion_8() {
  const double rho = 0.99;
  bool placed = true;
  std::ostringstream where;
  std::vector<double> optima;
  for (int n = 2; n <= 5; ++n) {
    const auto wp = optimize_working_point(n, rho, 1);
    const double offset = std::abs(wp.phi_star - resonance_phase(n));
    placed = placed && offset > 0.0 && offset < half_width(n, rho);
    where << (n > 2 ? "; " : "") << "n=" << n << " |phi*-res|=" << fmt(offset) << " hw=" << fmt(half_width(n, rho));
    optima.push_back(wp.delta_phi / std::sqrt(static_cast<double>(n)));
  }
  report("8a", "phi* strictly off resonance and within the half-width at rho = 0.99", placed, where.str());

  std::ostringstream order;
  for (std::size_t i = 0; i < optima.size(); ++i) order << (i ? " < " : "") << fmt(optima[i]);
  report("8b", "minimum overall sensitivity strictly increases over n = 2..5 at rho = 0.99",
         strictly_increasing(optima), order.str());

  auto spread = [](int n, double r) {
    const double first = optimize_working_point(n, r, 1).delta_phi;
    double s = 0.0;
    for (int k = 2; k <= n; ++k) s = std::max(s, std::abs(optimize_working_point(n, r, k).delta_phi - first) / first);
    return s;
  };
  double worst99 = 0.0;
  bool shrinking = true;
  std::ostringstream spreads;
  for (int n = 2; n <= 5; ++n) {
    const double s99 = spread(n, 0.99);
    const double s999 = spread(n, 0.999);
    worst99 = std::max(worst99, s99);
    shrinking = shrinking && s999 < s99;
    spreads << (n > 2 ? "; " : "") << "n=" << n << " " << fmt(s99) << " -> " << fmt(s999);
  }
  report("8c", "per-port optimal sensitivity spread max_k |dphi_k - dphi_1|/dphi_1 < 10% at rho = 0.99",
         worst99 < 0.10, spreads.str());
  report("8d", "per-port spread shrinks from rho = 0.99 to rho = 0.999", shrinking, spreads.str());

  struct Anchor {
    int n;
    double overall;
  };
  double drift = 0.0;
  for (const Anchor& a : {Anchor{2, 0.0035533452725935097}, Anchor{3, 0.0079622387819459882},
                          Anchor{4, 0.013196513721135514}, Anchor{5, 0.019163651933074987}}) {
    drift = std::max(drift, std::abs(optima[static_cast<std::size_t>(a.n - 2)] / a.overall - 1.0));
  }
  report("8e", "regression anchors for the optimal overall sensitivity within 1e-9 relative", drift < 1e-9,
         "max drift " + fmt(drift));
}

void criterion_9() {
  const auto dir = std::filesystem::temp_directory_path() / "ringcav_acceptance";
  std::filesystem::create_directories(dir);
  bool ok = true;
  std::ostringstream detail;
  const auto start = std::chrono::steady_clock::now();
  for (const std::string fig : {"fig3", "fig4", "fig5"}) {
    const std::string cmd = std::string(RINGCAV_CLI_PATH) + " " + fig + " --out " + (dir / (fig + ".csv")).string() +
                            " 2>" + (dir / (fig + ".log")).string();
    const int raw = std::system(cmd.c_str());
    const int status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    ok = ok && status == 0 && std::filesystem::file_size(dir / (fig + ".csv")) > 0;
    detail << fig << " exit " << status << "; ";
  }
  const double elapsed = seconds_since(start);
  detail << fmt(elapsed) << " s total";
  report("9", "fig3/fig4/fig5 complete in < 10 s and pass their in-band checks", ok && elapsed < 10.0,
         detail.str());
  std::filesystem::remove_all(dir);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion line(s) failed")
            << '\n';
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
