#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "twofilm/state.hpp"

namespace twofilm::cli {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Header `x,f,b,g,q`, one row per point, %.17g, LF line endings.
void write_csv(std::ostream& os, const std::vector<double>& x, const std::vector<State>& u);

/// Writes to `path`; throws IoError naming the path on failure.
void emit_csv(const std::string& path, const std::vector<double>& x, const std::vector<State>& u);

/// %.17g, shortest text that round-trips a double.
std::string format_double(double v);

}  // namespace twofilm::cli
