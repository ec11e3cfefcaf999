#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twofilm/fvm.hpp"
#include "twofilm/state.hpp"

namespace twofilm::cli {

/// Bad configuration. line() is 1-based, 0 when the problem is not tied to a
/// single line (e.g. missing keys).
class ConfigError : public std::runtime_error {
public:
  ConfigError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_;
};

enum class ScenarioKind { Riemann, Gaussian, Custom };

std::string_view to_string(ScenarioKind k) noexcept;

/// f = f0, b = b0 + b_amp·e, g = g0, q = q0 + q_amp·e with
/// e = exp(-((x - center)/width)²).
struct Bump {
  double f0 = 1.0;
  double b0 = 1.0;
  double g0 = 1.0;
  double q0 = 0.0;
  double b_amp = 1.0;
  double q_amp = 1.0;
  double center = 5.0;
  double width = 1.0;

  State operator()(double x) const;
};

struct Scenario {
  ScenarioKind kind = ScenarioKind::Riemann;
  State left{};
  State right{};
  Bump bump{};
  double x_min = -2.0;
  double x_max = 12.0;
  int cells = 320;
  SchemeConfig scheme{};
  std::vector<int> convergence_cells{160, 320, 640, 1280};
  std::string out;
  std::vector<std::string> warnings;

  InitialCondition initial_condition() const;
  Grid1D grid() const { return {x_min, x_max, cells}; }
};

/// Flat `key = value` document; `#` starts a comment. Keys:
///   scenario          riemann | gaussian | custom (default riemann)
///   f_left ... q_right  Riemann states (required for riemann)
///   bump_f0, bump_b0, bump_g0, bump_q0, bump_b_amp, bump_q_amp,
///   bump_center, bump_width   (required for custom, rejected otherwise)
///   cells, cfl, scheme (godunov | lxf), t_end, out, x_min, x_max,
///   convergence_cells (comma separated)
/// Throws ConfigError carrying the line number.
Scenario parse_config(std::string_view text);

/// Reads and parses a file; unreadable files throw ConfigError.
Scenario load_config(const std::string& path);

Scheme parse_scheme(std::string_view name);

}  // namespace twofilm::cli
