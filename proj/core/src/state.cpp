#include "twofilm/state.hpp"

#include <cmath>
#include <cstdio>

#include "twofilm/errors.hpp"

namespace twofilm {

bool is_admissible(const State& u, Admissibility level, double margin) noexcept {
  const bool positive = u.f > 0.0 && u.b > 0.0 && u.g > 0.0 && u.q > 0.0 &&
                        std::isfinite(u.f) && std::isfinite(u.b) && std::isfinite(u.g) &&
                        std::isfinite(u.q);
  if (!positive) return false;
  if (level == Admissibility::Positive) return true;
  return u.gq() - u.fb() > margin;
}

void require_positive(const State& u, std::string_view what) {
  if (!is_admissible(u, Admissibility::Positive)) {
    throw DomainError(std::string(what) + ": state " + to_string(u) +
                      " is not positive (f, b, g, q must all be > 0)");
  }
}

std::string to_string(const State& u) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "(%.10g, %.10g, %.10g, %.10g)", u.f, u.b, u.g, u.q);
  return buf;
}

}  // namespace twofilm
