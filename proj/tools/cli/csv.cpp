#include "cli/csv.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace twofilm::cli {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<double>& x, const std::vector<State>& u) {
  if (x.size() != u.size()) throw std::invalid_argument("write_csv: x and u differ in length");
  os << "x,f,b,g,q\n";
  for (std::size_t i = 0; i < x.size(); ++i) {
    os << format_double(x[i]);
    for (int c = 0; c < 4; ++c) os << ',' << format_double(u[i][c]);
    os << '\n';
  }
}

void emit_csv(const std::string& path, const std::vector<double>& x, const std::vector<State>& u) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_csv(out, x, u);
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace twofilm::cli
