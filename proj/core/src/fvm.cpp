#include "twofilm/fvm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "twofilm/errors.hpp"
#include "twofilm/riemann.hpp"
#include "twofilm/system.hpp"

namespace twofilm {

Grid1D::Grid1D(double x_min, double x_max, int n_cells)
    : x_min_(x_min), x_max_(x_max), n_cells_(n_cells), dx_((x_max - x_min) / n_cells) {
  if (n_cells < 2) throw ArgumentError("Grid1D: need at least 2 cells");
  if (!(x_max > x_min)) throw ArgumentError("Grid1D: x_max must exceed x_min");
}

std::string_view to_string(Scheme s) noexcept {
  return s == Scheme::Godunov ? "godunov" : "lxf";
}

CellField init_field(const Grid1D& grid, const InitialCondition& ic) {
  CellField field;
  field.cells.reserve(grid.n_cells());
  for (int i = 0; i < grid.n_cells(); ++i) {
    const double x = grid.center(i);
    const State u = ic(x);
    if (!is_admissible(u, Admissibility::Positive)) {
      throw AdmissibilityAbort("init_field: cell " + std::to_string(i) + " at x = " +
                                   std::to_string(x) + " has non-positive state " + to_string(u),
                               i, 0.0);
    }
    field.cells.push_back(u);
  }
  return field;
}

FluxVector godunov_flux(const State& left, const State& right, bool* classical) {
  RiemannFan fan;
  try {
    fan = solve(left, right, {SolveOptions::Ordering::Report});
  } catch (const NoRootError&) {
    // No classical fan, but every characteristic speed is positive on the
    // positive cone, so nothing can enter x < 0.
    if (classical) *classical = false;
    return flux(left);
  }
  if (classical) *classical = true;
  const State interface_state = sample(fan, 0.0);
  const FluxVector out = flux(interface_state);
  if (out != flux(left)) {
    throw std::logic_error("godunov_flux: interface state differs from the upwind state " +
                           to_string(left));
  }
  return out;
}

FluxVector lxf_flux(const State& left, const State& right, double dx, double dt) {
  if (!(dt > 0.0)) throw ArgumentError("lxf_flux: dt must be positive");
  const FluxVector fl = flux(left);
  const FluxVector fr = flux(right);
  const double k = dx / (2.0 * dt);
  FluxVector out{};
  for (int i = 0; i < 4; ++i) out[i] = 0.5 * (fl[i] + fr[i]) - k * (right[i] - left[i]);
  return out;
}

double cfl_dt(const CellField& field, double dx, double cfl) {
  if (field.cells.empty()) throw ArgumentError("cfl_dt: empty field");
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ArgumentError("cfl_dt: cfl must lie in (0, 1]");
  double fastest = 0.0;
  for (const State& u : field.cells) fastest = std::max(fastest, wave_speed(u, 4));
  return cfl * dx / fastest;
}

CellField step(const CellField& field, const Grid1D& grid, double dt, Scheme scheme,
               StepFluxes* boundary) {
  const auto& cells = field.cells;
  const int n = static_cast<int>(cells.size());
  if (n != grid.n_cells()) throw ArgumentError("step: field size does not match the grid");
  const double dx = grid.dx();

  // faces[j] is the flux through the face between cells j-1 and j, with
  // transmissive ghosts cells[-1] = cells[0] and cells[n] = cells[n-1].
  std::vector<FluxVector> faces(n + 1);
  for (int j = 0; j <= n; ++j) {
    const State& l = cells[std::max(j - 1, 0)];
    const State& r = cells[std::min(j, n - 1)];
    faces[j] = scheme == Scheme::Godunov ? godunov_flux(l, r) : lxf_flux(l, r, dx, dt);
  }

  CellField next;
  next.time = field.time + dt;
  next.cells.resize(n);
  const double ratio = dt / dx;
  for (int i = 0; i < n; ++i) {
    Vec4 u = cells[i].as_array();
    for (int c = 0; c < 4; ++c) u[c] -= ratio * (faces[i + 1][c] - faces[i][c]);
    next.cells[i] = State::from_array(u);
    if (!is_admissible(next.cells[i], Admissibility::Positive)) {
      throw AdmissibilityAbort("step: cell " + std::to_string(i) + " at t = " +
                                   std::to_string(next.time) + " became non-positive: " +
                                   to_string(next.cells[i]) + " (was " + to_string(cells[i]) +
                                   ")",
                               i, next.time);
    }
  }
  if (boundary) {
    boundary->inflow = faces[0];
    boundary->outflow = faces[n];
  }
  return next;
}

Vec4 totals(const CellField& field, double dx) {
  Vec4 sum{};
  for (const State& u : field.cells) {
    for (int c = 0; c < 4; ++c) sum[c] += u[c];
  }
  for (double& s : sum) s *= dx;
  return sum;
}

namespace {

void track_extrema(const CellField& field, RunDiagnostics& diag) {
  for (const State& u : field.cells) {
    for (int c = 0; c < 4; ++c) {
      diag.min[c] = std::min(diag.min[c], u[c]);
      diag.max[c] = std::max(diag.max[c], u[c]);
    }
  }
}

}  // namespace

RunResult run(const Grid1D& grid, const InitialCondition& ic, const SchemeConfig& cfg,
              const StepObserver& observer) {
  if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) throw ArgumentError("run: cfl must lie in (0, 1]");
  if (!(cfg.t_end >= 0.0)) throw ArgumentError("run: t_end must be nonnegative");

  RunResult result;
  result.field = init_field(grid, ic);
  auto& diag = result.diagnostics;
  diag.min.fill(std::numeric_limits<double>::infinity());
  diag.max.fill(-std::numeric_limits<double>::infinity());
  track_extrema(result.field, diag);

  const double dx = grid.dx();
  Vec4 mass = totals(result.field, dx);
  diag.mass_history.push_back({0.0, mass[0], mass[2]});
  if (observer) observer(result.field);

  CellField& field = result.field;
  while (field.time < cfg.t_end) {
    double dt = cfl_dt(field, dx, cfg.cfl);
    if (field.time + dt >= cfg.t_end) dt = cfg.t_end - field.time;
    StepFluxes bf;
    CellField next = step(field, grid, dt, cfg.scheme, &bf);
    if (next.time >= cfg.t_end) next.time = cfg.t_end;

    const Vec4 next_mass = totals(next, dx);
    for (int c : {0, 2}) {
      const double boundary_change = dt * (bf.inflow[c] - bf.outflow[c]);
      const double scale = std::abs(mass[c]);
      const double drift = std::abs(next_mass[c] - mass[c] - boundary_change) / scale;
      diag.max_relative_mass_drift = std::max(diag.max_relative_mass_drift, drift);
      if (bf.inflow[c] == bf.outflow[c]) {
        diag.max_relative_mass_drift_closed =
            std::max(diag.max_relative_mass_drift_closed, std::abs(next_mass[c] - mass[c]) / scale);
      }
    }
    mass = next_mass;
    field = std::move(next);
    ++diag.steps;
    track_extrema(field, diag);
    diag.mass_history.push_back({field.time, mass[0], mass[2]});
    if (observer) observer(field);
  }
  return result;
}

Vec4 l1_error(const CellField& field, const Grid1D& grid, const InitialCondition& exact) {
  Vec4 err{};
  for (int i = 0; i < static_cast<int>(field.cells.size()); ++i) {
    const State e = exact(grid.center(i));
    for (int c = 0; c < 4; ++c) err[c] += std::abs(field.cells[i][c] - e[c]);
  }
  for (double& v : err) v *= grid.dx();
  return err;
}

}  // namespace twofilm
