#include "twofilm/system.hpp"

#include <cmath>
#include <string>

#include "bisect.hpp"
#include "twofilm/errors.hpp"

namespace twofilm {

namespace {

void check_field(int k) {
  if (k < 1 || k > 4) {
    throw ArgumentError("characteristic field index must be in 1..4, got " + std::to_string(k));
  }
}

}  // namespace

FluxVector flux(const State& u) {
  require_positive(u, "flux");
  const double fb = u.fb();
  return {0.5 * u.f * u.f * u.b, 0.5 * u.f * u.b * u.b, 0.5 * u.g * u.g * u.q + fb * u.g,
          0.5 * u.g * u.q * u.q + fb * u.q};
}

Mat4 jacobian(const State& u) {
  require_positive(u, "jacobian");
  const auto [f, b, g, q] = u;
  const double fb = f * b;
  const double gq = g * q;
  return {{
      {fb, 0.5 * f * f, 0.0, 0.0},
      {0.5 * b * b, fb, 0.0, 0.0},
      {g * b, f * g, fb + gq, 0.5 * g * g},
      {b * q, f * q, 0.5 * q * q, fb + gq},
  }};
}

Vec4 wave_speeds(const State& u) {
  const double fb = u.fb();
  const double gq = u.gq();
  return {0.5 * fb, 1.5 * fb, fb + 0.5 * gq, fb + 1.5 * gq};
}

double wave_speed(const State& u, int k) {
  check_field(k);
  return wave_speeds(u)[k - 1];
}

EigenDecomposition eigen(const State& u) {
  require_positive(u, "eigen");
  const auto [f, b, g, q] = u;
  const double c = u.fb() - 3.0 * u.gq();
  EigenDecomposition e;
  e.lambdas = wave_speeds(u);
  e.rights[0] = {-f / b, 1.0, 0.0, 0.0};
  e.rights[1] = {c / (4.0 * q * b), c / (4.0 * q * f), g / q, 1.0};
  e.rights[2] = {0.0, 0.0, -g / q, 1.0};
  e.rights[3] = {0.0, 0.0, g / q, 1.0};
  return e;
}

Vec4 scaled_eigenvector(const State& u, int k) {
  check_field(k);
  require_positive(u, "scaled_eigenvector");
  const auto [f, b, g, q] = u;
  const double fb = u.fb();
  switch (k) {
    case 1:
      return {-f, b, 0.0, 0.0};
    case 2: {
      const double c = 4.0 * fb / (fb - 3.0 * u.gq());
      return {f, b, c * g, c * q};
    }
    case 3:
      return {0.0, 0.0, -g, q};
    default:
      return {0.0, 0.0, g, q};
  }
}

double char_field_indicator(const State& u, int k) {
  check_field(k);
  require_positive(u, "char_field_indicator");
  switch (k) {
    case 2:
      return 3.0 * u.fb();
    case 4:
      return 3.0 * u.gq();
    default:
      return 0.0;
  }
}

InvariantCoords to_invariants(const State& s) {
  require_positive(s, "to_invariants");
  const double fb = s.fb();
  const double gq = s.gq();
  return {s.b / s.f, fb, s.q / s.g, (fb + gq) / std::pow(gq, 0.25)};
}

GqBranch branch_of(const State& s) noexcept {
  return 3.0 * s.gq() >= s.fb() ? GqBranch::Upper : GqBranch::Lower;
}

double solve_gq(double u, double eta, GqBranch branch) {
  if (!(u > 0.0) || !(eta > 0.0)) {
    throw InversionError("solve_gq: u and eta must be positive");
  }
  // In s = v^{1/4}: h(s) = s^4 - eta*s + u has its minimum at the fold
  // s* = (eta/4)^{1/3}, which separates the two branches.
  const double s_fold = std::cbrt(0.25 * eta);
  const double v_fold = s_fold * s_fold * s_fold * s_fold;
  auto residual = [u, eta](double v) { return u + v - eta * std::pow(v, 0.25); };
  const double r_fold = residual(v_fold);
  if (r_fold > 0.0) {
    throw InversionError("solve_gq: no v with u + v = eta v^(1/4) (u = " + std::to_string(u) +
                         ", eta = " + std::to_string(eta) + ")");
  }
  if (r_fold == 0.0) return v_fold;
  if (branch == GqBranch::Upper) {
    // residual(eta^{4/3}) = u > 0
    const double v_hi = std::pow(eta, 4.0 / 3.0);
    return detail::bisect_root(residual, v_fold, v_hi, 1e-14, "solve_gq");
  }
  return detail::bisect_root(residual, 0.0, v_fold, 1e-14, "solve_gq");
}

State from_invariants(const InvariantCoords& w) {
  if (!(w.xi > 0.0) || !(w.u > 0.0) || !(w.tau > 0.0) || !(w.eta > 0.0)) {
    throw InversionError("from_invariants: all invariant coordinates must be positive");
  }
  const double v = solve_gq(w.u, w.eta, GqBranch::Upper);
  return {std::sqrt(w.u / w.xi), std::sqrt(w.u * w.xi), std::sqrt(v / w.tau),
          std::sqrt(v * w.tau)};
}

}  // namespace twofilm
