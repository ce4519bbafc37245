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

// Command-line front end: matrices, responses, sensitivities, sweeps and
// figure datasets as CSV.
//
// Exit status: 0 success, 1 domain error (singular cavity, stationary point,
// failed in-band check), 2 usage error.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ringcav/ringcav.hpp"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  int n = 2;
  double rho = 0.0;
  std::vector<double> phases;
  std::optional<double> total_phase;
  double alpha = 1.0;
  std::string out;
};

void add_ring_options(CLI::App* cmd, CommonOptions& opts, bool require) {
  auto* n = cmd->add_option("--n", opts.n, "Number of ports (>= 2)")->check(CLI::Range(2, 100000));
  auto* rho = cmd->add_option("--rho", opts.rho, "Mirror reflectivity in [0, 1]")->check(CLI::Range(0.0, 1.0));
  if (require) {
    n->required();
    rho->required();
  }
  auto* phases = cmd->add_option("--phases", opts.phases, "Per-mirror phase shifts phi_1..phi_n (radians)")
                     ->delimiter(',');
  auto* total = cmd->add_option("--total-phase", opts.total_phase,
                                "Total internal phase, split evenly over the n arms (radians)");
  phases->excludes(total);
  total->excludes(phases);
}

void add_out_option(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--out", opts.out, "Output CSV path (default: standard output)");
}

ringcav::CavityConfig make_config(const CommonOptions& opts) {
  if (!opts.phases.empty()) return ringcav::CavityConfig(opts.n, opts.rho, opts.phases);
  return ringcav::CavityConfig::uniform(opts.n, opts.rho, opts.total_phase.value_or(0.0));
}

void emit(const std::string& path, const ringcav::Table& table) {
  if (path.empty()) {
    ringcav::write_csv(std::cout, table);
    return;
  }
  std::ofstream file(path);
  if (!file) throw ringcav::Error("cannot open " + path + " for writing");
  ringcav::write_csv(file, table);
  if (!file) throw ringcav::Error("failed writing " + path);
}

int report_checks(const ringcav::FigureData& data) {
  for (const auto& check : data.checks) {
    std::cerr << (check.passed ? "PASS " : "FAIL ") << check.name;
    if (!check.detail.empty()) std::cerr << " [" << check.detail << "]";
    std::cerr << '\n';
  }
  return data.all_passed() ? 0 : kExitDomain;
}

int cmd_matrix(const CommonOptions& opts) {
  const auto config = make_config(opts);
  const auto closed = ringcav::closed_form_matrix(config);
  const auto cascade = ringcav::cascade_matrix(config);
  ringcav::Table table;
  table.header = {"k", "j", "closed_re", "closed_im", "cascade_re", "cascade_im"};
  for (int k = 1; k <= config.n(); ++k) {
    for (int j = 1; j <= config.n(); ++j) {
      table.add_row({static_cast<double>(k), static_cast<double>(j), closed(k, j).real(), closed(k, j).imag(),
                     cascade(k, j).real(), cascade(k, j).imag()});
    }
  }
  emit(opts.out, table);
  std::cerr << "max_deviation=" << ringcav::format_number(ringcav::max_deviation(closed, cascade))
            << " unitarity_closed=" << ringcav::format_number(ringcav::verify_unitarity(closed))
            << " unitarity_cascade=" << ringcav::format_number(ringcav::verify_unitarity(cascade)) << '\n';
  return 0;
}

int cmd_response(const CommonOptions& opts) {
  const auto config = make_config(opts);
  const auto closed = ringcav::response_closed(config);
  const auto from_matrix = ringcav::response_from_matrix(config);
  const auto beam = ringcav::propagate_coherent(config, opts.alpha);
  ringcav::Table table;
  table.header = {"port", "f_closed", "f_matrix", "beta_re", "beta_im", "theta", "mean_current", "variance"};
  for (int k = 1; k <= config.n(); ++k) {
    const auto i = static_cast<std::size_t>(k - 1);
    table.add_row({static_cast<double>(k), closed.f[i], from_matrix.f[i], beam.betas[i].real(),
                   beam.betas[i].imag(), beam.thetas[i], beam.mean_currents[i], beam.variances[i]});
  }
  emit(opts.out, table);
  std::cerr << "a_squared=" << ringcav::format_number(closed.a_squared)
            << " sum=" << ringcav::format_number(closed.sum()) << '\n';
  return 0;
}

int cmd_sensitivity(const CommonOptions& opts) {
  if (!(opts.rho > 0.0 && opts.rho < 1.0)) throw ringcav::InvalidConfig("sensitivity needs 0 < rho < 1");
  double phi = 0.0;
  if (!opts.phases.empty() || opts.total_phase) {
    phi = make_config(opts).total_phase();
  } else {
    phi = ringcav::optimize_working_point(opts.n, opts.rho, 1).phi_star;
  }
  const auto report = ringcav::sensitivity_report_at(opts.n, opts.rho, phi, opts.alpha);
  ringcav::Table table;
  table.header = {"port", "working_point", "delta_phi", "delta_phi_rescaled", "port_phi_star",
                  "port_min_delta_phi_rescaled"};
  for (int k = 1; k <= opts.n; ++k) {
    const double rescaled = report.per_port[static_cast<std::size_t>(k - 1)];
    const auto own = ringcav::optimize_working_point(opts.n, opts.rho, k);
    table.add_row({static_cast<double>(k), phi, rescaled / opts.alpha, rescaled, own.phi_star, own.delta_phi});
  }
  emit(opts.out, table);
  std::cerr << "working_point=" << ringcav::format_number(phi)
            << " overall_rescaled=" << ringcav::format_number(report.overall) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Input-output relations, responses and phase sensitivity of n-port ring cavities"};
  app.require_subcommand(1);

  CommonOptions opts;

  auto* matrix = app.add_subcommand("matrix", "Scattering matrix from the closed form and the beam-splitter cascade");
  add_ring_options(matrix, opts, true);
  add_out_option(matrix, opts);

  auto* response = app.add_subcommand("response", "Cavity response and coherent output for input on port 1");
  add_ring_options(response, opts, true);
  response->add_option("--alpha", opts.alpha, "Input coherent amplitude (real, default 1)");
  add_out_option(response, opts);

  auto* sensitivity = app.add_subcommand(
      "sensitivity", "Per-port and overall phase sensitivity; optimises the working point unless a phase is given");
  add_ring_options(sensitivity, opts, true);
  sensitivity->add_option("--alpha", opts.alpha, "Input amplitude |alpha| (default 1)")
      ->check(CLI::PositiveNumber);
  add_out_option(sensitivity, opts);

  auto* fig3 = app.add_subcommand("fig3", "Four-port responses against rho in [0, 0.999] for six total phases");
  add_out_option(fig3, opts);
  auto* fig4 = app.add_subcommand("fig4", "f_1 and f_n against phi for n = 2..5 at rho = 0.99");
  add_out_option(fig4, opts);
  auto* fig5 = app.add_subcommand("fig5", "Rescaled overall sensitivity against phi for n = 2..5 at rho = 0.99");
  add_out_option(fig5, opts);

  ringcav::SweepSpec spec;
  std::string variable = "rho";
  std::string quantity = "response";
  auto* sweep = app.add_subcommand(
      "sweep", "Single-variable sweep of responses or sensitivities (rho is confined to [0, 0.999] by convention, "
               "and must stay below 1)");
  add_ring_options(sweep, opts, false);
  sweep->add_option("--variable", variable, "Swept variable")->check(CLI::IsMember({"rho", "phi"}));
  sweep->add_option("--quantity", quantity, "Computed quantity")->check(CLI::IsMember({"response", "sensitivity"}));
  sweep->add_option("--start", spec.start, "First value")->required();
  sweep->add_option("--stop", spec.stop, "Last value")->required();
  sweep->add_option("--steps", spec.steps, "Number of samples (>= 2)")->required()->check(CLI::Range(2, 10000000));
  sweep->add_option("--alpha", opts.alpha, "Input amplitude |alpha| (default 1)")->check(CLI::PositiveNumber);
  add_out_option(sweep, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*matrix) return cmd_matrix(opts);
    if (*response) return cmd_response(opts);
    if (*sensitivity) return cmd_sensitivity(opts);
    if (*fig3) {
      const auto data = ringcav::fig3_dataset();
      emit(opts.out, data.table);
      return report_checks(data);
    }
    if (*fig4) {
      const auto data = ringcav::fig4_dataset();
      emit(opts.out, data.table);
      return report_checks(data);
    }
    if (*fig5) {
      const auto data = ringcav::fig5_dataset();
      emit(opts.out, data.table);
      return report_checks(data);
    }
    if (*sweep) {
      spec.variable = variable == "phi" ? ringcav::SweepVariable::phi : ringcav::SweepVariable::rho;
      spec.quantity = quantity == "sensitivity" ? ringcav::SweepQuantity::sensitivity : ringcav::SweepQuantity::response;
      spec.n = opts.n;
      spec.rho = opts.rho;
      if (!opts.phases.empty()) spec.phases = opts.phases;
      spec.total_phase = opts.total_phase.value_or(0.0);
      spec.alpha_abs = opts.alpha;
      emit(opts.out, ringcav::run_sweep(spec));
      return 0;
    }
  } catch (const ringcav::InvalidConfig& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ringcav::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}
