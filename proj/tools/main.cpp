#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/csv.hpp"
#include "cli/scenario.hpp"
#include "twofilm/errors.hpp"

using namespace twofilm;
using namespace twofilm::cli;

namespace {

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  success\n"
    "  2  configuration or command-line error\n"
    "  3  admissibility abort (a cell lost positivity)\n"
    "  4  solver failure (no root, wave ordering, inversion)\n"
    "  5  I/O error\n"
    "  6  check: at least one invariant check failed\n";

struct Overrides {
  std::string config;
  std::optional<std::string> out;
  std::optional<std::string> scheme;
  std::optional<int> cells;
  std::optional<double> t_end;
  std::optional<double> cfl;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "key = value scenario file")->required();
  cmd->add_option("--out", o.out, "output CSV path (default: config 'out', else stdout)");
  cmd->add_option("--scheme", o.scheme, "godunov | lxf");
  cmd->add_option("--cells", o.cells, "number of cells");
  cmd->add_option("--t-end", o.t_end, "final time");
  cmd->add_option("--cfl", o.cfl, "CFL number in (0, 1]");
}

Scenario load(const Overrides& o) {
  Scenario sc = load_config(o.config);
  if (o.out) sc.out = *o.out;
  if (o.scheme) sc.scheme.scheme = parse_scheme(*o.scheme);
  if (o.cells) {
    if (*o.cells < 2) throw ConfigError("--cells must be at least 2", 0);
    sc.cells = *o.cells;
  }
  if (o.t_end) {
    if (!(*o.t_end >= 0.0)) throw ConfigError("--t-end must be nonnegative", 0);
    sc.scheme.t_end = *o.t_end;
  }
  if (o.cfl) {
    if (!(*o.cfl > 0.0 && *o.cfl <= 1.0)) throw ConfigError("--cfl must lie in (0, 1]", 0);
    sc.scheme.cfl = *o.cfl;
  }
  return sc;
}

template <class Writer>
void write_output(const std::string& path, Writer&& w) {
  if (path.empty() || path == "-") {
    w(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  w(out);
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const AdmissibilityAbort& e) {
    std::cerr << "admissibility abort: " << e.what() << "\n";
    return kAdmissibilityAbort;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIoError;
  } catch (const twofilm::Error& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kSolverFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-layer thin-film solver: exact Riemann fans and finite-volume runs"};
  app.footer(kExitCodes);
  app.require_subcommand(1);

  Overrides run_o, exact_o, conv_o;
  auto* run_cmd = app.add_subcommand("run", "finite-volume run to t_end, CSV of cell averages");
  add_common(run_cmd, run_o);
  auto* exact_cmd = app.add_subcommand("exact", "exact Riemann solution at t_end on the cell centres");
  add_common(exact_cmd, exact_o);
  auto* conv_cmd = app.add_subcommand("convergence", "L1 error table for both schemes");
  add_common(conv_cmd, conv_o);

  int samples = 1000;
  std::uint64_t seed = 1;
  auto* check_cmd = app.add_subcommand("check", "invariant suite on random states");
  check_cmd->add_option("--samples", samples, "number of random states")->check(CLI::PositiveNumber);
  check_cmd->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  if (*run_cmd) {
    return guarded([&] {
      const Scenario sc = load(run_o);
      const RunOutput out = run_scenario(sc);
      write_output(sc.out, [&](std::ostream& os) { write_csv(os, out.x, out.field.cells); });
      write_report(std::cerr, out.report);
      return int{kOk};
    });
  }
  if (*exact_cmd) {
    return guarded([&] {
      const Scenario sc = load(exact_o);
      std::vector<double> x;
      const auto u = exact_solution(sc, &x);
      write_output(sc.out, [&](std::ostream& os) { write_csv(os, x, u); });
      for (const auto& w : sc.warnings) std::cerr << "warning: " << w << "\n";
      return int{kOk};
    });
  }
  if (*conv_cmd) {
    return guarded([&] {
      const Scenario sc = load(conv_o);
      const auto rows = convergence_table(sc);
      write_output(sc.out, [&](std::ostream& os) { write_convergence_csv(os, rows); });
      return int{kOk};
    });
  }
  return guarded([&] {
    const CheckSummary s = run_check_suite(samples, seed);
    for (const auto& m : s.messages) std::cerr << "FAIL " << m << "\n";
    std::cout << s.checks - s.failures << "/" << s.checks << " checks passed\n";
    return s.failures == 0 ? int{kOk} : int{kCheckFailures};
  });
}
