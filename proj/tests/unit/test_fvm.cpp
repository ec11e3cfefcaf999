#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "twofilm/errors.hpp"
#include "twofilm/fvm.hpp"
#include "twofilm/riemann.hpp"
#include "twofilm/system.hpp"

using namespace twofilm;
using doctest::Approx;
using oracle::kTwoLayerLeft;
using oracle::kTwoLayerRight;

namespace {

State riemann_ic(double x) { return x < 0 ? kTwoLayerLeft : kTwoLayerRight; }

State gaussian_ic(double x) {
  const double e = std::exp(-(x - 5) * (x - 5));
  return {1, 1 + e, 1, e};
}

}  // namespace

TEST_CASE("grid") {
  const Grid1D g(-2, 12, 320);
  CHECK(g.dx() == Approx(14.0 / 320).epsilon(1e-15));
  CHECK(g.center(0) == Approx(-2 + 7.0 / 320).epsilon(1e-15));
  CHECK_THROWS_AS(Grid1D(0, 1, 1), ArgumentError);
  CHECK_THROWS_AS(Grid1D(1, 1, 10), ArgumentError);
}

TEST_CASE("init_field") {
  const Grid1D g(-2, 12, 160);
  const CellField c = init_field(g, [](double) { return State{1, 1, 1, 2}; });
  for (const State& u : c.cells) CHECK(u == State{1, 1, 1, 2});

  const CellField r = init_field(g, riemann_ic);
  for (int i = 0; i < g.n_cells(); ++i) CHECK(r.cells[i] == (g.center(i) < 0 ? kTwoLayerLeft : kTwoLayerRight));

  const CellField gs = init_field(g, gaussian_ic);
  CHECK(gs.cells[80].q == Approx(std::exp(-std::pow(g.center(80) - 5, 2))).epsilon(1e-15));

  try {
    init_field(g, [](double x) { return State{1, 1, 1, x < 3 ? 1.0 : -1.0}; });
    FAIL("expected AdmissibilityAbort");
  } catch (const AdmissibilityAbort& e) {
    CHECK(e.cell() == 57);
    CHECK(std::string(e.what()).find("cell 57") != std::string::npos);
  }
}

TEST_CASE("godunov flux is the upwind flux") {
  const State u{1.3, 0.8, 1.1, 2.0};
  CHECK(godunov_flux(u, u) == flux(u));
  const FluxVector fg = godunov_flux(kTwoLayerLeft, kTwoLayerRight);
  const FluxVector fu = oracle::flux(kTwoLayerLeft);
  for (int i = 0; i < 4; ++i) CHECK(fg[i] == Approx(fu[i]).epsilon(1e-15));

  oracle::StateSampler sampler(401);
  int classical = 0;
  for (int n = 0; n < 1000; ++n) {
    const State l = sampler.positive();
    const State r = sampler.positive();
    bool used_fan = false;
    CHECK(godunov_flux(l, r, &used_fan) == flux(l));
    classical += used_fan;
  }
  CHECK(classical > 500);
}

TEST_CASE("lax-friedrichs flux") {
  const State u{1.3, 0.8, 1.1, 2.0};
  CHECK(lxf_flux(u, u, 0.1, 0.01) == flux(u));
  // states with equal flux: only the diffusion term remains
  const State a{2, 0.5, 1, 1};
  const State b{1, 1, 1, 1};
  const FluxVector fa = flux(a);
  const FluxVector fb = flux(b);
  const FluxVector out = lxf_flux(a, b, 0.1, 0.01);
  for (int i = 0; i < 4; ++i)
    CHECK(out[i] == Approx(0.5 * (fa[i] + fb[i]) - 5.0 * (b[i] - a[i])).epsilon(1e-15));
  CHECK_THROWS_AS(lxf_flux(a, b, 0.1, 0), ArgumentError);
}

TEST_CASE("cfl time step") {
  CellField f{{State{1, 1, 1, 2}, State{1, 1, 1, 2}}, 0};
  CHECK(cfl_dt(f, 0.1, 0.45) == Approx(0.01125).epsilon(1e-15));
  CHECK(cfl_dt(f, 0.05, 0.45) == Approx(0.5 * 0.01125).epsilon(1e-15));
  CHECK_THROWS_AS(cfl_dt(CellField{}, 0.1, 0.45), ArgumentError);
  CHECK_THROWS_AS(cfl_dt(f, 0.1, 1.5), ArgumentError);

  const Grid1D g(-2, 12, 160);
  const CellField r = init_field(g, riemann_ic);
  CHECK(wave_speed(kTwoLayerLeft, 4) == Approx(9.366).epsilon(1e-14));
  CHECK(wave_speed(kTwoLayerRight, 4) == Approx(4.635).epsilon(1e-14));
  CHECK(cfl_dt(r, g.dx(), 0.45) == Approx(0.45 * g.dx() / 9.366).epsilon(1e-14));
}

TEST_CASE("step") {
  const Grid1D g(-2, 12, 160);
  const CellField u{std::vector<State>(160, State{1, 1, 1, 2}), 0};
  const CellField same = step(u, g, 0.01, Scheme::Godunov);
  for (const State& s : same.cells) CHECK(s == State{1, 1, 1, 2});
  CHECK(same.time == 0.01);

  const CellField r = init_field(g, riemann_ic);
  const CellField next = step(r, g, cfl_dt(r, g.dx(), 0.45), Scheme::Godunov);
  int changed = 0;
  int where = -1;
  for (int i = 0; i < 160; ++i) {
    if (!(next.cells[i] == r.cells[i])) {
      ++changed;
      where = i;
    }
  }
  CHECK(changed == 1);
  CHECK(g.center(where) > 0);
  CHECK(g.center(where - 1) < 0);
}

TEST_CASE("step aborts on loss of positivity") {
  const Grid1D g(0, 1, 4);
  const CellField u{{State{0.01, 0.01, 1, 2}, State{0.01, 0.01, 1, 2}, State{1, 1, 1, 2},
                     State{1, 1, 1, 2}},
                    0};
  // a huge time step empties cell 2 into cell 3
  try {
    step(u, g, 10.0, Scheme::Godunov);
    FAIL("expected AdmissibilityAbort");
  } catch (const AdmissibilityAbort& e) {
    CHECK(e.cell() == 2);
    CHECK(e.time() == 10.0);
  }
}

TEST_CASE("run") {
  const Grid1D g(-2, 12, 160);
  const RunResult zero = run(g, riemann_ic, {Scheme::Godunov, 0.45, 0.0});
  CHECK(zero.diagnostics.steps == 0);
  CHECK(zero.field.cells == init_field(g, riemann_ic).cells);

  int calls = 0;
  const RunResult res = run(g, riemann_ic, {Scheme::Godunov, 0.45, 1.0}, [&](const CellField&) { ++calls; });
  CHECK(res.field.time == 1.0);
  CHECK(calls == res.diagnostics.steps + 1);
  CHECK(res.diagnostics.mass_history.size() == static_cast<std::size_t>(calls));
  CHECK(res.diagnostics.max_relative_mass_drift <= 1e-13);
  for (int c = 0; c < 4; ++c) CHECK(res.diagnostics.min[c] > 0);

  CHECK_THROWS_AS(run(g, riemann_ic, {Scheme::Godunov, 0.0, 1.0}), ArgumentError);
  CHECK_THROWS_AS(run(g, riemann_ic, {Scheme::Godunov, 0.45, -1.0}), ArgumentError);
}

TEST_CASE("conservation before boundary outflow") {
  const Grid1D g(-2, 12, 320);
  for (Scheme s : {Scheme::Godunov, Scheme::LaxFriedrichs}) {
    const RunResult res = run(g, gaussian_ic, {s, 0.45, 1.0});
    CHECK(res.diagnostics.max_relative_mass_drift_closed <= 1e-13);
    CHECK(res.diagnostics.max_relative_mass_drift <= 1e-13);
    for (int c = 0; c < 4; ++c) CHECK(res.diagnostics.min[c] > 0);
  }
}

TEST_CASE("l1 error") {
  const Grid1D g(-2, 12, 160);
  const CellField r = init_field(g, riemann_ic);
  CHECK(l1_error(r, g, riemann_ic) == Vec4{0, 0, 0, 0});
  const CellField c{std::vector<State>(160, State{1, 1, 1, 2}), 0};
  const Vec4 e = l1_error(c, g, [](double) { return State{1.5, 1, 1, 2}; });
  CHECK(e[0] == Approx(0.5 * 14).epsilon(1e-12));
  CHECK(e[1] == 0);
}

TEST_CASE("godunov is less diffusive than lax-friedrichs") {
  const RiemannFan fan = solve(kTwoLayerLeft, kTwoLayerRight);
  auto exact = [&](double x) { return sample_at(fan, x, 1.0); };
  const Grid1D g(-2, 12, 160);
  const Vec4 eg = l1_error(run(g, riemann_ic, {Scheme::Godunov, 0.45, 1.0}).field, g, exact);
  const Vec4 el = l1_error(run(g, riemann_ic, {Scheme::LaxFriedrichs, 0.45, 1.0}).field, g, exact);
  for (int c = 0; c < 4; ++c) CHECK(el[c] > eg[c]);
}

TEST_CASE("max principle for xi and tau under godunov") {
  for (auto ic : {InitialCondition(riemann_ic), InitialCondition(gaussian_ic)}) {
    const Grid1D g(-2, 12, 320);
    const CellField init = init_field(g, ic);
    double xi_lo = 1e300, xi_hi = 0, tau_lo = 1e300, tau_hi = 0;
    for (const State& u : init.cells) {
      xi_lo = std::min(xi_lo, u.b / u.f);
      xi_hi = std::max(xi_hi, u.b / u.f);
      tau_lo = std::min(tau_lo, u.q / u.g);
      tau_hi = std::max(tau_hi, u.q / u.g);
    }
    double worst = 0;
    run(g, ic, {Scheme::Godunov, 0.45, 1.0}, [&](const CellField& f) {
      for (const State& u : f.cells) {
        const double xi = u.b / u.f;
        const double tau = u.q / u.g;
        worst = std::max({worst, (xi_lo - xi) / xi_lo, (xi - xi_hi) / xi_hi, (tau_lo - tau) / tau_lo,
                          (tau - tau_hi) / tau_hi});
      }
    });
    CHECK(worst <= 1e-12);
  }
}
