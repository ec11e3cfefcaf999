#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "twofilm/errors.hpp"

namespace twofilm::detail {

inline constexpr int kMaxBisectIterations = 200;

/// Root of `fn` on [lo, hi] by bisection, to relative width `rel_tol`.
/// Requires a sign change (or an exact zero) at the ends; otherwise throws
/// NoRootError carrying both residuals.
template <class Fn>
double bisect_root(Fn&& fn, double lo, double hi, double rel_tol, const std::string& what) {
  if (lo > hi) std::swap(lo, hi);
  const double f_lo = fn(lo);
  const double f_hi = fn(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (!std::isfinite(f_lo) || !std::isfinite(f_hi) || (f_lo > 0.0) == (f_hi > 0.0)) {
    throw NoRootError(what + ": no sign change on [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "], F = (" + std::to_string(f_lo) + ", " +
                          std::to_string(f_hi) + ")",
                      lo, hi, f_lo, f_hi);
  }
  auto close_enough = [rel_tol](double a, double b) {
    return std::abs(b - a) <= rel_tol * std::max(std::abs(a), std::abs(b));
  };
  std::uintmax_t iterations = kMaxBisectIterations;
  const auto bracket = boost::math::tools::bisect(fn, lo, hi, close_enough, iterations);
  return 0.5 * (bracket.first + bracket.second);
}

}  // namespace twofilm::detail
