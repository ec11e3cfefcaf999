#include "twofilm/wavecurves.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bisect.hpp"
#include "twofilm/errors.hpp"
#include "twofilm/system.hpp"

namespace twofilm {

std::string_view to_string(WaveFamily family) noexcept {
  switch (family) {
    case WaveFamily::Contact1: return "J1";
    case WaveFamily::Shock2: return "S2";
    case WaveFamily::Raref2: return "R2";
    case WaveFamily::Contact3: return "J3";
    case WaveFamily::Shock4: return "S4";
    case WaveFamily::Raref4: return "R4";
  }
  return "?";
}

bool is_discontinuity(WaveFamily family) noexcept {
  return family != WaveFamily::Raref2 && family != WaveFamily::Raref4;
}

Vec4 rh_residual(const State& left, const State& right, double speed) {
  const FluxVector fl = flux(left);
  const FluxVector fr = flux(right);
  const Vec4 ul = left.as_array();
  const Vec4 ur = right.as_array();
  Vec4 res{};
  for (int i = 0; i < 4; ++i) res[i] = speed * (ur[i] - ul[i]) - (fr[i] - fl[i]);
  return res;
}

double rh_relative_residual(const State& left, const State& right, double speed) {
  const Vec4 res = rh_residual(left, right, speed);
  double scale = 1.0;
  double worst = 0.0;
  for (const State* s : {&left, &right}) {
    const FluxVector fs = flux(*s);
    for (int i = 0; i < 4; ++i) {
      scale = std::max({scale, std::abs(speed * (*s)[i]), std::abs(fs[i])});
    }
  }
  for (double r : res) worst = std::max(worst, std::abs(r));
  return worst / scale;
}

WaveJump contact1(const State& left, double f_right) {
  require_positive(left, "contact1");
  if (!(f_right > 0.0)) throw ArgumentError("contact1: f_r must be positive");
  const double fb = left.fb();
  const State right{f_right, fb / f_right, left.g, left.q};
  const double sigma = 0.5 * fb;
  return {left, right, WaveFamily::Contact1, sigma, sigma};
}

WaveJump contact3(const State& left, double g_right) {
  require_positive(left, "contact3");
  if (!(g_right > 0.0)) throw ArgumentError("contact3: g_r must be positive");
  const double gq = left.gq();
  const State right{left.f, left.b, g_right, gq / g_right};
  const double sigma = left.fb() + 0.5 * gq;
  return {left, right, WaveFamily::Contact3, sigma, sigma};
}

WaveJump raref2(const State& left, double fb_target) {
  require_positive(left, "raref2");
  const double fb_l = left.fb();
  if (!(fb_target >= fb_l)) {
    throw BranchError("raref2: fb_target " + std::to_string(fb_target) +
                      " is below the left value " + std::to_string(fb_l));
  }
  const double ratio = left.f / left.b;
  const double eta = to_invariants(left).eta;
  const double v = fb_target == fb_l ? left.gq() : solve_gq(fb_target, eta, branch_of(left));
  const double g_over_q = left.g / left.q;
  const State right{std::sqrt(fb_target * ratio), std::sqrt(fb_target / ratio),
                    std::sqrt(v * g_over_q), std::sqrt(v / g_over_q)};
  return {left, right, WaveFamily::Raref2, 1.5 * fb_l, 1.5 * fb_target};
}

WaveJump shock2(const State& left, double fb_target) {
  require_positive(left, "shock2");
  const double fb_l = left.fb();
  if (!(fb_target < fb_l) || !(fb_target > 0.0)) {
    throw BranchError("shock2: fb_target " + std::to_string(fb_target) +
                      " must lie in (0, " + std::to_string(fb_l) + ")");
  }
  const auto [fl, bl, gl, ql] = left;
  const double f = std::sqrt(fb_target * fl / bl);
  const double b = std::sqrt(fb_target * bl / fl);
  const double sigma = bl * (fl * fl + fl * f + f * f) / (2.0 * fl);
  const double m = ql / gl;

  // g-row of the jump conditions with q = m g substituted; h(g_l) = (fb - fb_l) g_l < 0.
  auto h = [&](double g) {
    return 0.5 * m * (g * g * g - gl * gl * gl) + fb_target * g - fb_l * gl - sigma * (g - gl);
  };

  // The root continuous with g_l at zero strength lies above g_l when
  // h'(g_l) > 0 there, i.e. 3 g_l q_l > f_l b_l.
  double lo = gl;
  double hi = gl;
  if (3.0 * left.gq() > fb_l) {
    for (int i = 0; i < 200 && !(h(hi) > 0.0); ++i) hi *= 2.0;
  } else {
    for (int i = 0; i < 200 && !(h(lo) > 0.0); ++i) lo *= 0.5;
  }
  const double g = detail::bisect_root(h, lo, hi, 1e-12, "shock2");
  const State right{f, b, g, m * g};
  return {left, right, WaveFamily::Shock2, sigma, sigma};
}

WaveJump temple4(const State& left, double gq_target) {
  require_positive(left, "temple4");
  if (!(gq_target > 0.0)) throw ArgumentError("temple4: gq_target must be positive");
  const auto [fl, bl, gl, ql] = left;
  const double fb = left.fb();
  const double gr = std::sqrt(gq_target * gl / ql);
  const State right{fl, bl, gr, gr * ql / gl};
  if (gq_target < left.gq()) {
    const double sigma = fb + ql * (gl * gl + gl * gr + gr * gr) / (2.0 * gl);
    return {left, right, WaveFamily::Shock4, sigma, sigma};
  }
  return {left, right, WaveFamily::Raref4, fb + 1.5 * left.gq(), fb + 1.5 * gq_target};
}

bool lax_admissible(const WaveJump& jump) {
  const Vec4 ll = wave_speeds(jump.left);
  const Vec4 lr = wave_speeds(jump.right);
  const double s = jump.speed();
  switch (jump.family) {
    case WaveFamily::Shock2:
      return lr[1] < s && s < ll[1] && ll[0] < s;
    case WaveFamily::Shock4:
      return lr[3] < s && s < ll[3] && ll[2] < s;
    default:
      throw ArgumentError("lax_admissible: family " + std::string(to_string(jump.family)) +
                          " is not a shock");
  }
}

}  // namespace twofilm
