#include "cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <random>

#include "cli/csv.hpp"
#include "twofilm/entropy.hpp"
#include "twofilm/riemann.hpp"
#include "twofilm/system.hpp"
#include "twofilm/wavecurves.hpp"

namespace twofilm::cli {

namespace {

std::vector<double> centres(const Grid1D& g) {
  std::vector<double> x(g.n_cells());
  for (int i = 0; i < g.n_cells(); ++i) x[i] = g.center(i);
  return x;
}

void require_riemann(const Scenario& sc, const char* what) {
  if (sc.kind != ScenarioKind::Riemann) {
    throw ConfigError(std::string(what) + " needs scenario=riemann (exact solution), got scenario=" +
                          std::string(to_string(sc.kind)),
                      0);
  }
}

}  // namespace

RunOutput run_scenario(const Scenario& sc) {
  const Grid1D grid = sc.grid();
  const auto start = std::chrono::steady_clock::now();
  RunResult res = run(grid, sc.initial_condition(), sc.scheme);
  const auto stop = std::chrono::steady_clock::now();

  RunOutput out;
  out.x = centres(grid);
  out.field = std::move(res.field);
  out.report.wall_seconds = std::chrono::duration<double>(stop - start).count();
  out.report.steps = res.diagnostics.steps;
  out.report.totals = totals(out.field, grid.dx());
  out.report.max_relative_mass_drift = res.diagnostics.max_relative_mass_drift;
  out.report.warnings = sc.warnings;
  return out;
}

std::vector<State> exact_solution(const Scenario& sc, std::vector<double>* x_out) {
  require_riemann(sc, "exact");
  const RiemannFan fan = solve(sc.left, sc.right);
  const std::vector<double> x = centres(sc.grid());
  std::vector<State> u;
  u.reserve(x.size());
  for (double xi : x) u.push_back(sample_at(fan, xi, sc.scheme.t_end));
  if (x_out) *x_out = x;
  return u;
}

std::vector<ConvergenceRow> convergence_table(const Scenario& sc) {
  require_riemann(sc, "convergence");
  const RiemannFan fan = solve(sc.left, sc.right);
  const double t = sc.scheme.t_end;
  auto exact = [&](double x) { return sample_at(fan, x, t); };

  std::vector<ConvergenceRow> rows;
  for (Scheme s : {Scheme::Godunov, Scheme::LaxFriedrichs}) {
    SchemeConfig cfg = sc.scheme;
    cfg.scheme = s;
    const ConvergenceRow* prev = nullptr;
    for (int n : sc.convergence_cells) {
      const Grid1D grid(sc.x_min, sc.x_max, n);
      const RunResult res = run(grid, sc.initial_condition(), cfg);
      ConvergenceRow row;
      row.scheme = s;
      row.cells = n;
      row.dx = grid.dx();
      row.error = l1_error(res.field, grid, exact);
      if (prev) {
        row.has_order = true;
        for (int c = 0; c < 4; ++c) {
          row.order[c] = std::log(prev->error[c] / row.error[c]) / std::log(prev->dx / row.dx);
        }
      }
      rows.push_back(row);
      prev = &rows.back();
    }
  }
  return rows;
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
  os << "scheme,cells,dx,err_f,err_b,err_g,err_q,order_f,order_b,order_g,order_q\n";
  for (const auto& r : rows) {
    os << to_string(r.scheme) << ',' << r.cells << ',' << format_double(r.dx);
    for (double e : r.error) os << ',' << format_double(e);
    for (double o : r.order) os << ',' << (r.has_order ? format_double(o) : "");
    os << '\n';
  }
}

CheckSummary run_check_suite(int samples, std::uint64_t seed) {
  CheckSummary sum;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> logu(std::log(0.3), std::log(3.0));
  auto draw = [&] { return std::exp(logu(rng)); };
  auto strict = [&] {
    for (;;) {
      const State s{draw(), draw(), draw(), draw()};
      if (s.gq() >= 1.05 * s.fb()) return s;
    }
  };
  auto expect = [&](bool ok, const std::string& what, const State& s) {
    ++sum.checks;
    if (!ok) {
      ++sum.failures;
      sum.messages.push_back(what + " at " + to_string(s));
    }
  };

  for (int n = 0; n < samples; ++n) {
    const State u = strict();

    const auto e = eigen(u);
    const Mat4 df = jacobian(u);
    double scale = 0.0;
    for (const auto& row : df)
      for (double v : row) scale = std::max(scale, std::abs(v));
    for (int k = 0; k < 4; ++k) {
      double res = 0.0;
      double rn = 0.0;
      for (int i = 0; i < 4; ++i) {
        double dr = 0.0;
        for (int j = 0; j < 4; ++j) dr += df[i][j] * e.rights[k][j];
        res = std::max(res, std::abs(dr - e.lambdas[k] * e.rights[k][i]));
        rn = std::max(rn, std::abs(e.rights[k][i]));
      }
      expect(res <= 1e-12 * 4 * scale * std::max(1.0, rn),
             "eigenpair " + std::to_string(k + 1) + " residual", u);
    }
    expect(e.lambdas[0] < e.lambdas[1] && e.lambdas[1] < e.lambdas[2] && e.lambdas[2] < e.lambdas[3],
           "eigenvalue ordering", u);

    const State back = from_invariants(to_invariants(u));
    double rt = 0.0;
    for (int i = 0; i < 4; ++i) rt = std::max(rt, std::abs(back[i] - u[i]) / u[i]);
    expect(rt <= 1e-12, "invariant roundtrip", u);

    expect(compatibility_residual(u, convex_entropy) <= 1e-5, "entropy compatibility", u);
    const Vec4 h = hessian_quadratic_forms(u);
    expect(h[0] > 0 && h[1] > 0 && h[2] > 0 && h[3] > 0, "Hessian positivity", u);

    const State v{draw(), draw(), draw(), draw()};
    expect(godunov_flux(u, v) == flux(u), "Godunov flux equals upwind flux", u);

    const auto s2 = shock2(u, 0.5 * u.fb());
    expect(rh_relative_residual(s2.left, s2.right, s2.speed()) <= 1e-10 && lax_admissible(s2),
           "2-shock jump conditions", u);
    const auto s4 = temple4(u, 0.5 * u.gq());
    expect(rh_relative_residual(s4.left, s4.right, s4.speed()) <= 1e-10 && lax_admissible(s4),
           "4-shock jump conditions", u);
  }
  return sum;
}

void write_report(std::ostream& os, const RunReport& r) {
  os << "steps: " << r.steps << "\n";
  os << "wall time [s]: " << format_double(r.wall_seconds) << "\n";
  os << "totals (f, b, g, q):";
  for (double t : r.totals) os << ' ' << format_double(t);
  os << "\n";
  os << "max relative mass drift per step: " << format_double(r.max_relative_mass_drift) << "\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
}

}  // namespace twofilm::cli
