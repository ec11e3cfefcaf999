#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "twofilm/entropy.hpp"
#include "twofilm/errors.hpp"
#include "twofilm/riemann.hpp"
#include "twofilm/system.hpp"

using namespace twofilm;
using doctest::Approx;
using oracle::kTwoLayerLeft;
using oracle::kTwoLayerRight;

namespace {

constexpr SolveOptions kReport{SolveOptions::Ordering::Report};

// Largest fb reachable along the 2-rarefaction through the left state:
// u = eta v^{1/4} - v is maximal at v = (eta/4)^{4/3}.
double raref2_fb_max(const State& l) {
  const double eta = (l.fb() + l.gq()) / std::pow(l.gq(), 0.25);
  const double v = std::pow(eta / 4, 4.0 / 3);
  return eta * std::pow(v, 0.25) - v;
}

void check_state(const State& a, const State& b, double tol) {
  for (int i = 0; i < 4; ++i) CHECK(a[i] == Approx(b[i]).epsilon(tol));
}

// Random Riemann data; Report mode so that pairs whose fans are unordered
// still come back for inspection.
struct RandomFans {
  oracle::StateSampler sampler;
  explicit RandomFans(std::uint64_t seed) : sampler(seed) {}
  // Case 1 data is drawn inside f_R b_R < g_L q_L, where an F1 root exists.
  RiemannFan next() {
    for (;;) {
      const State l = sampler.strict();
      const State r = sampler.strict();
      if (r.fb() >= l.fb() && r.fb() >= raref2_fb_max(l)) continue;
      return solve(l, r, kReport);
    }
  }
};

}  // namespace

TEST_CASE("classification") {
  CHECK(classify(kTwoLayerLeft, kTwoLayerRight) == RiemannCase::Case1);
  CHECK(classify(kTwoLayerRight, kTwoLayerLeft) == RiemannCase::Case2);
  CHECK(classify(kTwoLayerLeft, kTwoLayerLeft) == RiemannCase::Case1);
}

TEST_CASE("F1 root for the two-layer experiment") {
  CHECK(f1_residual(kTwoLayerLeft, kTwoLayerRight, 2.2) == Approx(2.6928).epsilon(1e-4));
  const double g_min = std::pow(std::sqrt(2.2) * 6.616 / 10.0, 2.0 / 3.0);
  CHECK(g_min == Approx(0.98750179).epsilon(1e-8));
  CHECK(f1_residual(kTwoLayerLeft, kTwoLayerRight, g_min) == Approx(-2.16570).epsilon(1e-5));
  // F1 by its expanded coefficients
  auto f1 = [](double g) { return 2.5 * g * g - 6.616 * std::sqrt(2.2 * g) + 5.148; };
  for (double g : {0.5, 1.0, 1.7, 2.2, 3.0}) CHECK(f1_residual(kTwoLayerLeft, kTwoLayerRight, g) == Approx(f1(g)));

  std::vector<Warning> warnings;
  const RootProblem rp = solve_g_mid(kTwoLayerLeft, kTwoLayerRight, RiemannCase::Case1, &warnings);
  CHECK(rp.kind == RootKind::F1);
  CHECK_FALSE(rp.expanded);
  CHECK(warnings.empty());
  const double g_ref = oracle::bisect(f1, g_min, 2.2);
  CHECK(rp.root == Approx(g_ref).epsilon(1e-11));
  CHECK(rp.root == Approx(1.7844552411).epsilon(1e-9));
  CHECK(std::abs(f1_residual(kTwoLayerLeft, kTwoLayerRight, rp.root)) <= 1e-11);
}

TEST_CASE("F2 root for swapped data") {
  const State l = kTwoLayerRight;
  const State r = kTwoLayerLeft;
  CHECK(f2_residual(l, r, l.g) < 0);
  const RootProblem rp = solve_g_mid(l, r, RiemannCase::Case2);
  CHECK(rp.kind == RootKind::F2);
  CHECK(rp.root > l.g);
  const double g = rp.root;
  const double scale = l.q * g * g * g + g * l.g * r.fb() + l.g * l.g * (l.gq() + l.fb());
  CHECK(std::abs(f2_residual(l, r, g)) <= 1e-12 * scale);
  // independent bisection on the cubic written out by hand
  const double a = l.fb(), c = r.fb(), s = std::sqrt(a * c);
  auto f2 = [&](double g) {
    return l.q * g * g * g + g * l.g * (c - a - s) - l.g * l.g * (l.g * l.q + a - c - s);
  };
  CHECK(rp.root == Approx(oracle::bisect(f2, l.g, 10 * l.g)).epsilon(1e-11));
}

TEST_CASE("F1 outside the side condition") {
  // F1 is convex with minimum at g_min; once F1(g_min) > 0 there is no root
  const State l{1, 1, 1, 1.2};
  const State r{1.5, 1.5, 1, 1};
  std::vector<Warning> warnings;
  CHECK_THROWS_AS(solve_g_mid(l, r, RiemannCase::Case1, &warnings), NoRootError);
  CHECK(warnings.size() == 1);
  CHECK(warnings[0].code == Warning::Code::BracketSideCondition);
  try {
    solve_g_mid(l, r, RiemannCase::Case1);
  } catch (const NoRootError& e) {
    CHECK(e.f_lo() > 0);
    CHECK(e.f_hi() > 0);
  }
}

TEST_CASE("F1 solvability is decided by the 2-rarefaction fold") {
  oracle::StateSampler sampler(317);
  int solved = 0;
  int unsolved = 0;
  int side_ok_unsolved = 0;
  for (int n = 0; n < 4000; ++n) {
    const State l = sampler.strict();
    const State r = sampler.strict();
    if (r.fb() < l.fb()) continue;
    const double margin = r.fb() / raref2_fb_max(l) - 1;
    if (std::abs(margin) < 1e-6) continue;
    if (margin < 0) {
      const RootProblem rp = solve_g_mid(l, r, RiemannCase::Case1);
      CHECK(rp.root > 0);
      CHECK_FALSE(rp.expanded);
      ++solved;
    } else {
      CHECK_THROWS_AS(solve_g_mid(l, r, RiemannCase::Case1), NoRootError);
      ++unsolved;
      if (r.fb() < l.gq()) ++side_ok_unsolved;
    }
  }
  CHECK(solved > 100);
  CHECK(unsolved > 100);
  // f_R b_R < g_L q_L does not by itself give a root
  CHECK(side_ok_unsolved > 10);
}

TEST_CASE("identical data") {
  const State u{1.1, 0.9, 1.3, 1.7};
  CHECK(solve_g_mid(u, u, RiemannCase::Case1).root == u.g);
  const RiemannFan fan = solve(u, u);
  check_state(fan.left_star, u, 1e-14);
  check_state(fan.mid_star, u, 1e-14);
  check_state(fan.right_star, u, 1e-14);
  CHECK(fan.waves[3].family == WaveFamily::Raref4);
  for (double xi : {-1.0, 0.0, 0.5, 1.0, 2.0, 3.0, 5.0, 10.0}) check_state(sample(fan, xi), u, 1e-12);
}

TEST_CASE("intermediate states for the two-layer experiment") {
  const auto ref = oracle::Case1Reference::compute(kTwoLayerLeft, kTwoLayerRight);
  const auto s = intermediate_states(kTwoLayerLeft, kTwoLayerRight, ref.g_mid);
  check_state(s.left_star, ref.left_star, 1e-13);
  check_state(s.mid_star, ref.mid_star, 1e-13);
  check_state(s.right_star, ref.right_star, 1e-13);
  // rounded printed values
  CHECK(s.left_star.f == Approx(1.0359).epsilon(1e-4));
  CHECK(s.left_star.b == Approx(1.0773).epsilon(1e-4));
  CHECK(s.mid_star.q == Approx(2.0279).epsilon(1e-4));
  CHECK(s.right_star.g == Approx(2.6145).epsilon(1e-4));
  CHECK(s.right_star.q == Approx(1.3841).epsilon(1e-4));

  CHECK(s.left_star.fb() == Approx(kTwoLayerLeft.fb()).epsilon(1e-14));
  CHECK(s.mid_star.gq() == Approx(s.right_star.gq()).epsilon(1e-14));
  CHECK(s.right_star.g / s.right_star.q == Approx(kTwoLayerRight.g / kTwoLayerRight.q).epsilon(1e-14));
}

TEST_CASE("wave-4 selection") {
  const double threshold = std::sqrt(2.2 * 1.7 * 0.9 / 2.5);
  CHECK(threshold == Approx(1.1603447763).epsilon(1e-9));
  CHECK(classify_wave4(kTwoLayerLeft, kTwoLayerRight, 1.7844552411) == WaveFamily::Shock4);
  CHECK(classify_wave4(kTwoLayerLeft, kTwoLayerRight, threshold) == WaveFamily::Raref4);
  CHECK(classify_wave4(kTwoLayerLeft, kTwoLayerRight, 1.0) == WaveFamily::Raref4);
}

TEST_CASE("full fan for the two-layer experiment") {
  const auto ref = oracle::Case1Reference::compute(kTwoLayerLeft, kTwoLayerRight);
  const RiemannFan fan = solve(kTwoLayerLeft, kTwoLayerRight);
  CHECK(fan.tag == FanCase::Case1a);
  CHECK(fan.ordered);
  CHECK(fan.waves[0].family == WaveFamily::Contact1);
  CHECK(fan.waves[1].family == WaveFamily::Raref2);
  CHECK(fan.waves[2].family == WaveFamily::Contact3);
  CHECK(fan.waves[3].family == WaveFamily::Shock4);
  CHECK(fan.waves[0].head == Approx(0.558).epsilon(1e-12));
  CHECK(fan.waves[1].head == Approx(1.674).epsilon(1e-12));
  CHECK(fan.waves[1].tail == Approx(3.51).epsilon(1e-12));
  CHECK(fan.waves[2].head == Approx(ref.sigma3).epsilon(1e-10));
  CHECK(fan.waves[3].head == Approx(ref.sigma4).epsilon(1e-10));
  CHECK(fan.waves[2].head == Approx(4.1492502884).epsilon(1e-9));
  CHECK(fan.waves[3].head == Approx(6.0907180825).epsilon(1e-9));

  // U_R violates fb < gq and is reported, not rejected
  bool flagged = false;
  for (const auto& w : fan.warnings) flagged = flagged || w.code == Warning::Code::NotStrictlyHyperbolic;
  CHECK(flagged);
}

TEST_CASE("sampling") {
  const RiemannFan fan = solve(kTwoLayerLeft, kTwoLayerRight);
  CHECK(sample(fan, 0.0) == kTwoLayerLeft);
  CHECK(sample(fan, -3.0) == kTwoLayerLeft);
  CHECK(sample(fan, 1e6) == kTwoLayerRight);

  const State in = sample(fan, 2.5);
  CHECK(in.fb() == Approx(5.0 / 3).epsilon(1e-13));
  CHECK(in.f / in.b == Approx(1.5 / 1.56).epsilon(1e-13));
  CHECK(to_invariants(in).eta == Approx(to_invariants(fan.left_star).eta).epsilon(1e-10));
  CHECK(in.g / in.q == Approx(2.2 / 2.5).epsilon(1e-13));

  CHECK(sample_at(fan, -0.1, 0.0) == kTwoLayerLeft);
  CHECK(sample_at(fan, 0.1, 0.0) == kTwoLayerRight);
  check_state(sample_at(fan, 5.0, 2.0), sample(fan, 2.5), 1e-15);
}

TEST_CASE("sampling consistency at every wave") {
  RandomFans gen(301);
  int ordered = 0;
  for (int n = 0; n < 500; ++n) {
    const RiemannFan fan = gen.next();
    if (!fan.ordered) continue;
    ++ordered;
    const State sides[5] = {fan.left, fan.left_star, fan.mid_star, fan.right_star, fan.right};
    for (int k = 0; k < 4; ++k) {
      const double eps = 1e-9 * std::max(1.0, fan.waves[k].tail);
      if (k == 0 || fan.waves[k - 1].tail < fan.waves[k].head - 2 * eps)
        check_state(sample(fan, fan.waves[k].head - eps), sides[k], 1e-8);
      if (k == 3 || fan.waves[k].tail + 2 * eps < fan.waves[k + 1].head)
        check_state(sample(fan, fan.waves[k].tail + eps), sides[k + 1], 1e-8);
    }
  }
  CHECK(ordered > 100);
}

TEST_CASE("weak-solution property of random fans") {
  RandomFans gen(303);
  for (int n = 0; n < 500; ++n) {
    const RiemannFan fan = gen.next();
    const State sides[5] = {fan.left, fan.left_star, fan.mid_star, fan.right_star, fan.right};
    for (int k = 0; k < 4; ++k) {
      const Wave& w = fan.waves[k];
      CHECK(w.head > 0);
      if (!is_discontinuity(w.family)) continue;
      CHECK(rh_relative_residual(sides[k], sides[k + 1], w.head) <= 1e-10);
      CHECK(shock_entropy_production(sides[k], sides[k + 1], w.head) >= -1e-10);
      if (w.family == WaveFamily::Shock2 || w.family == WaveFamily::Shock4) {
        CHECK(lax_admissible({sides[k], sides[k + 1], w.family, w.head, w.tail}));
      }
    }
  }
}

TEST_CASE("invariants inside the fans") {
  RandomFans gen(307);
  int fans2 = 0;
  int fans4 = 0;
  for (int n = 0; n < 400; ++n) {
    const RiemannFan fan = gen.next();
    if (!fan.ordered) continue;
    if (fan.waves[1].family == WaveFamily::Raref2 && fan.waves[1].tail > fan.waves[1].head) {
      ++fans2;
      const auto w0 = to_invariants(fan.left_star);
      for (int i = 1; i <= 100; ++i) {
        const double xi = fan.waves[1].head + (fan.waves[1].tail - fan.waves[1].head) * i / 101.0;
        const auto w = to_invariants(sample(fan, xi));
        CHECK(w.xi == Approx(w0.xi).epsilon(1e-10));
        CHECK(w.tau == Approx(w0.tau).epsilon(1e-10));
        CHECK(w.eta == Approx(w0.eta).epsilon(1e-10));
        CHECK(w.u == Approx(2 * xi / 3).epsilon(1e-12));
      }
    }
    if (fan.waves[3].family == WaveFamily::Raref4 && fan.waves[3].tail > fan.waves[3].head) {
      ++fans4;
      const State& l = fan.right_star;
      for (int i = 1; i <= 100; ++i) {
        const double xi = fan.waves[3].head + (fan.waves[3].tail - fan.waves[3].head) * i / 101.0;
        const State s = sample(fan, xi);
        CHECK(s.f == l.f);
        CHECK(s.b == l.b);
        CHECK(s.q / s.g == Approx(l.q / l.g).epsilon(1e-14));
        CHECK(wave_speed(s, 4) == Approx(xi).epsilon(1e-13));
      }
    }
  }
  CHECK(fans2 > 20);
  CHECK(fans4 > 20);
}

TEST_CASE("scaling symmetry through the 1-contact") {
  oracle::StateSampler sampler(311);
  for (int n = 0; n < 100; ++n) {
    const State l = sampler.strict();
    const State r = sampler.strict();
    if (r.fb() >= l.fb() && r.fb() >= raref2_fb_max(l)) continue;
    const double alpha = sampler.uniform(0.5, 2.0);
    auto scale = [alpha](const State& s) { return State{alpha * s.f, s.b / alpha, s.g, s.q}; };
    const RiemannFan a = solve(l, r, kReport);
    const RiemannFan b = solve(scale(l), scale(r), kReport);
    CHECK(a.tag == b.tag);
    CHECK(b.g_mid == Approx(a.g_mid).epsilon(1e-11));
    for (int k = 0; k < 4; ++k) {
      CHECK(b.waves[k].head == Approx(a.waves[k].head).epsilon(1e-11));
      CHECK(b.waves[k].tail == Approx(a.waves[k].tail).epsilon(1e-11));
    }
    check_state(b.left_star, scale(a.left_star), 1e-11);
    check_state(b.right_star, scale(a.right_star), 1e-11);
  }
}

TEST_CASE("ordering violations are structured") {
  // lower layer much faster than upper: wave 2 overtakes wave 3
  const State l{2, 2, 0.5, 0.5};
  const State r{2.2, 2.2, 0.5, 0.5};
  CHECK_THROWS_AS(solve(l, r), OrderingError);
  try {
    solve(l, r);
  } catch (const OrderingError& e) {
    CHECK(e.wave_before() + 1 == e.wave_after());
  }
  const RiemannFan fan = solve(l, r, kReport);
  CHECK_FALSE(fan.ordered);
  CHECK(sample(fan, 0.0) == l);
  CHECK(sample(fan, 100.0) == r);
  CHECK_THROWS_AS(sample(fan, 3.0), OrderingError);
}

TEST_CASE("lower layer decouples in the thin upper-film limit") {
  const double eps = 1e-6;
  oracle::StateSampler sampler(313);
  for (int n = 0; n < 200; ++n) {
    const State l{sampler.uniform(0.5, 2), sampler.uniform(0.5, 2), eps, eps};
    const State r{sampler.uniform(0.5, 2), sampler.uniform(0.5, 2), eps, eps};
    const RiemannFan fan = solve(l, r, kReport);
    const oracle::TempleSolver ref{l.f, l.b, r.f, r.b};
    for (int i = 0; i <= 60; ++i) {
      const double xi = 0.05 * i;
      const auto [f, b] = sample_lower_layer(fan, xi);
      const auto [hf, hb] = ref.at(xi);
      // away from the jumps themselves
      const double s1 = fan.waves[0].head;
      const double s2h = fan.waves[1].head;
      const double s2t = fan.waves[1].tail;
      if (std::abs(xi - s1) < 1e-9 || std::abs(xi - s2h) < 1e-9 || std::abs(xi - s2t) < 1e-9) continue;
      CHECK(f == Approx(hf).epsilon(1e-4));
      CHECK(b == Approx(hb).epsilon(1e-4));
    }
  }
}
