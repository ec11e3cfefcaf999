#include "twofilm/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bisect.hpp"
#include "twofilm/errors.hpp"
#include "twofilm/system.hpp"

namespace twofilm {

namespace {

constexpr double kRootTolerance = 1e-12;
constexpr double kFanTolerance = 1e-13;
constexpr int kMaxExpansions = 60;

bool same_sign(double a, double b) { return (a > 0.0) == (b > 0.0) && a != 0.0 && b != 0.0; }

State raref2_interior(const RiemannFan& fan, double xi) {
  const State& l = fan.left_star;
  const State& m = fan.mid_star;
  const double u = 2.0 * xi / 3.0;
  const double ratio = l.f / l.b;
  const double eta = to_invariants(l).eta;
  auto residual = [u, eta](double v) { return u + v - eta * std::pow(v, 0.25); };

  // gq is monotone through the fan, so the end states bracket it.
  const double v_a = l.gq();
  const double v_b = m.gq();
  double v;
  const double r_a = residual(v_a);
  const double r_b = residual(v_b);
  if (v_a == v_b) {
    v = v_a;
  } else if (same_sign(r_a, r_b)) {
    v = std::abs(r_a) < std::abs(r_b) ? v_a : v_b;
  } else {
    v = detail::bisect_root(residual, v_a, v_b, kFanTolerance, "raref2 fan");
  }
  const double g_over_q = l.g / l.q;
  return {std::sqrt(u * ratio), std::sqrt(u / ratio), std::sqrt(v * g_over_q),
          std::sqrt(v / g_over_q)};
}

State raref4_interior(const RiemannFan& fan, double xi) {
  const State& l = fan.right_star;
  const double gq = 2.0 * (xi - l.fb()) / 3.0;
  const double g_over_q = l.g / l.q;
  return {l.f, l.b, std::sqrt(gq * g_over_q), std::sqrt(gq / g_over_q)};
}

}  // namespace

std::string_view to_string(FanCase c) noexcept {
  switch (c) {
    case FanCase::Case1a: return "Case1a";
    case FanCase::Case1b: return "Case1b";
    case FanCase::Case2a: return "Case2a";
    case FanCase::Case2b: return "Case2b";
  }
  return "?";
}

RiemannCase classify(const State& left, const State& right) {
  return right.fb() >= left.fb() ? RiemannCase::Case1 : RiemannCase::Case2;
}

double f1_residual(const State& left, const State& right, double g) {
  return g * g * left.q - std::sqrt(g * left.g) * (left.fb() + left.gq()) + right.fb() * left.g;
}

double f2_residual(const State& left, const State& right, double g) {
  const double a = left.fb();
  const double c = right.fb();
  const double s = std::sqrt(a * c);
  const double gl = left.g;
  return left.q * g * g * g + g * gl * (c - a - s) - gl * gl * (left.gq() + a - c - s);
}

RootProblem solve_g_mid(const State& left, const State& right, RiemannCase which,
                        std::vector<Warning>* warnings) {
  const double gl = left.g;
  RootProblem rp;

  if (which == RiemannCase::Case2) {
    rp.kind = RootKind::F2;
    auto fn = [&](double g) { return f2_residual(left, right, g); };
    rp.lo = gl;
    rp.hi = 2.0 * gl;
    for (int i = 0; i < kMaxExpansions && !(fn(rp.hi) > 0.0); ++i) {
      rp.lo = rp.hi;
      rp.hi *= 2.0;
    }
    rp.root = detail::bisect_root(fn, rp.lo, rp.hi, kRootTolerance, "F2");
    return rp;
  }

  rp.kind = RootKind::F1;
  // F1(g_L) = g_L (f_R b_R - f_L b_L) vanishes exactly on a tie.
  if (right.fb() == left.fb()) {
    rp.lo = rp.hi = rp.root = gl;
    return rp;
  }
  if (!(right.fb() < left.gq()) && warnings) {
    warnings->push_back({Warning::Code::BracketSideCondition,
                         "F1 bracket side condition f_R b_R < g_L q_L fails (" +
                             std::to_string(right.fb()) + " >= " + std::to_string(left.gq()) +
                             ")"});
  }
  auto fn = [&](double g) { return f1_residual(left, right, g); };
  const double g_min = std::pow(std::sqrt(gl) * (left.fb() + left.gq()) / (4.0 * left.q), 2.0 / 3.0);
  rp.lo = std::min(g_min, gl);
  rp.hi = std::max(g_min, gl);
  if (!same_sign(fn(rp.lo), fn(rp.hi))) {
    rp.root = detail::bisect_root(fn, rp.lo, rp.hi, kRootTolerance, "F1");
    return rp;
  }

  // Widen towards 0 and infinity, looking for a sign change in the new pieces.
  double lo = rp.lo;
  double hi = rp.hi;
  for (int i = 0; i < kMaxExpansions; ++i) {
    const double lo_next = 0.5 * lo;
    const double hi_next = 2.0 * hi;
    if (!same_sign(fn(lo_next), fn(lo))) {
      rp.lo = lo_next;
      rp.hi = lo;
      rp.expanded = true;
      break;
    }
    if (!same_sign(fn(hi), fn(hi_next))) {
      rp.lo = hi;
      rp.hi = hi_next;
      rp.expanded = true;
      break;
    }
    lo = lo_next;
    hi = hi_next;
  }
  if (!rp.expanded) {
    // Along the 2-rarefaction fb = eta v^{1/4} - v peaks at the fold v = fb/3.
    const double eta = to_invariants(left).eta;
    const double fb_max = 3.0 * std::pow(eta / 4.0, 4.0 / 3.0);
    throw NoRootError("F1: no sign change on [g_min, g_L] or its expansions; f_R b_R = " +
                          std::to_string(right.fb()) +
                          " exceeds the largest fb reachable by the 2-rarefaction, " +
                          std::to_string(fb_max),
                      rp.lo, rp.hi, fn(rp.lo), fn(rp.hi));
  }
  if (warnings) {
    warnings->push_back({Warning::Code::BracketExpanded,
                         "F1 root bracket expanded to [" + std::to_string(rp.lo) + ", " +
                             std::to_string(rp.hi) + "]"});
  }
  rp.root = detail::bisect_root(fn, rp.lo, rp.hi, kRootTolerance, "F1");
  return rp;
}

IntermediateStates intermediate_states(const State& left, const State& right, double g_mid) {
  if (!(g_mid > 0.0)) throw DomainError("intermediate_states: g_M* must be positive");
  const auto [fl, bl, gl, ql] = left;
  const auto [fr, br, gr, qr] = right;
  const double a = left.fb();
  IntermediateStates s;
  s.left_star = {std::sqrt(a * fr / br), std::sqrt(a * br / fr), gl, ql};
  s.mid_star = {fr, br, g_mid, g_mid * ql / gl};
  s.right_star = {fr, br, g_mid * std::sqrt(ql * gr / (gl * qr)),
                  g_mid * std::sqrt(ql * qr / (gl * gr))};
  return s;
}

WaveFamily classify_wave4(const State& left, const State& right, double g_mid) {
  const double threshold = std::sqrt(left.g * right.g * right.q / left.q);
  return g_mid > threshold ? WaveFamily::Shock4 : WaveFamily::Raref4;
}

RiemannFan solve(const State& left, const State& right, SolveOptions options) {
  require_positive(left, "riemann::solve (left)");
  require_positive(right, "riemann::solve (right)");

  RiemannFan fan;
  fan.left = left;
  fan.right = right;
  for (const auto& [s, side] : {std::pair{&left, "left"}, std::pair{&right, "right"}}) {
    if (!is_admissible(*s, Admissibility::Strict)) {
      fan.warnings.push_back({Warning::Code::NotStrictlyHyperbolic,
                              std::string(side) + " state " + to_string(*s) +
                                  " violates fb < gq"});
    }
  }

  const RiemannCase rc = classify(left, right);
  const RootProblem rp = solve_g_mid(left, right, rc, &fan.warnings);
  fan.g_mid = rp.root;
  const auto states = intermediate_states(left, right, rp.root);
  fan.left_star = states.left_star;
  fan.mid_star = states.mid_star;
  fan.right_star = states.right_star;

  const double a = left.fb();
  const double c = right.fb();
  fan.waves[0] = {WaveFamily::Contact1, 0.5 * a, 0.5 * a};
  if (rc == RiemannCase::Case1) {
    fan.waves[1] = {WaveFamily::Raref2, 1.5 * a, 1.5 * c};
  } else {
    const State& l = fan.left_star;
    const double f = fan.mid_star.f;
    const double sigma = l.b * (l.f * l.f + l.f * f + f * f) / (2.0 * l.f);
    fan.waves[1] = {WaveFamily::Shock2, sigma, sigma};
  }
  const double sigma3 = c + 0.5 * fan.mid_star.gq();
  fan.waves[2] = {WaveFamily::Contact3, sigma3, sigma3};

  const WaveFamily w4 = classify_wave4(left, right, rp.root);
  if (w4 == WaveFamily::Shock4) {
    const State& l = fan.right_star;
    const double sigma = c + l.q * (l.g * l.g + l.g * right.g + right.g * right.g) / (2.0 * l.g);
    fan.waves[3] = {WaveFamily::Shock4, sigma, sigma};
  } else {
    fan.waves[3] = {WaveFamily::Raref4, c + 1.5 * fan.right_star.gq(), c + 1.5 * right.gq()};
  }

  if (rc == RiemannCase::Case1) {
    fan.tag = w4 == WaveFamily::Shock4 ? FanCase::Case1a : FanCase::Case1b;
  } else {
    fan.tag = w4 == WaveFamily::Shock4 ? FanCase::Case2a : FanCase::Case2b;
  }

  for (int k = 0; k + 1 < 4; ++k) {
    const double before = fan.waves[k].tail;
    const double after = fan.waves[k + 1].head;
    if (after < before - 1e-12 * std::max(1.0, std::abs(before))) {
      const std::string msg = "wave " + std::to_string(k + 1) + " (" +
                              std::string(to_string(fan.waves[k].family)) + ", up to " +
                              std::to_string(before) + ") is faster than wave " +
                              std::to_string(k + 2) + " (" +
                              std::string(to_string(fan.waves[k + 1].family)) + ", from " +
                              std::to_string(after) + ")";
      if (options.ordering == SolveOptions::Ordering::Enforce) {
        throw OrderingError("riemann::solve: " + msg, k + 1, k + 2);
      }
      fan.ordered = false;
      fan.warnings.push_back({Warning::Code::SpeedOrdering, msg});
    }
  }
  return fan;
}

State sample(const RiemannFan& fan, double xi) {
  const auto& w = fan.waves;
  if (!fan.ordered) {
    double slowest = w[0].head;
    double fastest = w[0].tail;
    for (const auto& wave : w) {
      slowest = std::min(slowest, wave.head);
      fastest = std::max(fastest, wave.tail);
    }
    if (xi < slowest) return fan.left;
    if (xi >= fastest) return fan.right;
    throw OrderingError("sample: fan with non-monotone speeds is undefined inside the wave region",
                        0, 0);
  }
  if (xi < w[0].head) return fan.left;
  if (xi < w[1].head) return fan.left_star;
  if (w[1].family == WaveFamily::Raref2 && xi < w[1].tail) return raref2_interior(fan, xi);
  if (xi < w[2].head) return fan.mid_star;
  if (xi < w[3].head) return fan.right_star;
  if (w[3].family == WaveFamily::Raref4 && xi < w[3].tail) return raref4_interior(fan, xi);
  return fan.right;
}

State sample_at(const RiemannFan& fan, double x, double t) {
  if (t <= 0.0) return x < 0.0 ? fan.left : fan.right;
  return sample(fan, x / t);
}

std::pair<double, double> sample_lower_layer(const RiemannFan& fan, double xi) {
  const auto& w = fan.waves;
  if (xi < w[0].head) return {fan.left.f, fan.left.b};
  if (xi < w[1].head) return {fan.left_star.f, fan.left_star.b};
  if (w[1].family == WaveFamily::Raref2 && xi < w[1].tail) {
    const double u = 2.0 * xi / 3.0;
    const double ratio = fan.left_star.f / fan.left_star.b;
    return {std::sqrt(u * ratio), std::sqrt(u / ratio)};
  }
  return {fan.right.f, fan.right.b};
}

}  // namespace twofilm
