#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cli/scenario.hpp"
#include "twofilm/fvm.hpp"

namespace twofilm::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kAdmissibilityAbort = 3,
  kSolverFailure = 4,
  kIoError = 5,
  kCheckFailures = 6,
};

struct RunReport {
  double wall_seconds = 0.0;
  int steps = 0;
  Vec4 totals{};  ///< Σ U_i dx per component at t_end
  double max_relative_mass_drift = 0.0;
  std::vector<std::string> warnings;
};

struct RunOutput {
  std::vector<double> x;
  CellField field;
  RunReport report;
};

RunOutput run_scenario(const Scenario& sc);

/// Exact Riemann solution at t = scheme.t_end sampled at the cell centres.
/// Throws ConfigError for non-Riemann scenarios.
std::vector<State> exact_solution(const Scenario& sc, std::vector<double>* x = nullptr);

struct ConvergenceRow {
  Scheme scheme = Scheme::Godunov;
  int cells = 0;
  double dx = 0.0;
  Vec4 error{};
  bool has_order = false;  ///< false on the first row of each scheme
  Vec4 order{};
};

/// L1 errors against the exact fan for every entry of convergence_cells and
/// both schemes; order = log(e_prev/e)/log(dx_prev/dx).
std::vector<ConvergenceRow> convergence_table(const Scenario& sc);

/// Header `scheme,cells,dx,err_f,...,order_q`; empty order fields on the first row per scheme.
void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows);

struct CheckSummary {
  int checks = 0;
  int failures = 0;
  std::vector<std::string> messages;  ///< one per failure
};

/// Invariant suite on random states: eigen residuals, invariant roundtrip,
/// entropy compatibility, Hessian positivity, Godunov = upwind, RH residuals
/// of generated shocks.
CheckSummary run_check_suite(int samples, std::uint64_t seed);

void write_report(std::ostream& os, const RunReport& r);

}  // namespace twofilm::cli
