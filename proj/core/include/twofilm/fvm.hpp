#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "twofilm/state.hpp"

namespace twofilm {

/// Uniform 1-D grid of n_cells cells on [x_min, x_max].
class Grid1D {
public:
  /// Throws ArgumentError unless n_cells ≥ 2 and x_max > x_min.
  Grid1D(double x_min, double x_max, int n_cells);

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  int n_cells() const noexcept { return n_cells_; }
  double dx() const noexcept { return dx_; }
  double center(int i) const noexcept { return x_min_ + (i + 0.5) * dx_; }

private:
  double x_min_;
  double x_max_;
  int n_cells_;
  double dx_;
};

/// Cell averages at a given time.
struct CellField {
  std::vector<State> cells;
  double time = 0.0;
};

enum class Scheme { Godunov, LaxFriedrichs };

std::string_view to_string(Scheme s) noexcept;

struct SchemeConfig {
  Scheme scheme = Scheme::Godunov;
  double cfl = 0.45;
  double t_end = 1.0;
};

using InitialCondition = std::function<State(double x)>;

/// Cell i holds ic(center(i)). Throws AdmissibilityAbort naming the cell if a
/// sample is not Positive-admissible.
CellField init_field(const Grid1D& grid, const InitialCondition& ic);

/// Godunov flux F(U(0; left, right)) through the exact Riemann solution.
/// All wave speeds are positive on positive states, so this is F(left); the
/// equality is checked and a std::logic_error is thrown if it ever fails.
/// Data beyond the 2-rarefaction fold have no classical fan; the flux is then
/// F(left) by the same speed argument and `classical` (if given) is cleared.
FluxVector godunov_flux(const State& left, const State& right, bool* classical = nullptr);

/// ½(F(l) + F(r)) - dx/(2dt)(r - l).
FluxVector lxf_flux(const State& left, const State& right, double dx, double dt);

/// cfl·dx / max_i λ₄(U_i). Throws ArgumentError on an empty field.
double cfl_dt(const CellField& field, double dx, double cfl);

/// Boundary fluxes of the last update, used for conservation bookkeeping.
struct StepFluxes {
  FluxVector inflow{};   ///< flux through the left boundary face
  FluxVector outflow{};  ///< flux through the right boundary face
};

/// One conservative update U_i -= dt/dx (F_{i+1/2} - F_{i-1/2}) with
/// transmissive ghost cells. Throws AdmissibilityAbort on a non-positive result.
CellField step(const CellField& field, const Grid1D& grid, double dt, Scheme scheme,
               StepFluxes* boundary = nullptr);

struct MassSample {
  double time = 0.0;
  double total_f = 0.0;
  double total_g = 0.0;
};

struct RunDiagnostics {
  int steps = 0;
  Vec4 min{};
  Vec4 max{};
  std::vector<MassSample> mass_history;
  /// Largest per-step change of Σf·dx and Σg·dx, after subtracting the
  /// boundary fluxes, relative to the total.
  double max_relative_mass_drift = 0.0;
  /// Largest raw per-step relative change of Σf·dx and Σg·dx over steps in
  /// which the boundary fluxes cancel exactly (nothing has reached the
  /// boundary yet).
  double max_relative_mass_drift_closed = 0.0;
};

struct RunResult {
  CellField field;
  RunDiagnostics diagnostics;
};

/// Observer called after every step (and once for the initial field).
using StepObserver = std::function<void(const CellField&)>;

/// Advances from t = 0 to cfg.t_end; the last step is clipped to land on t_end.
RunResult run(const Grid1D& grid, const InitialCondition& ic, const SchemeConfig& cfg,
              const StepObserver& observer = {});

/// Per-component Σ_i |U_i - exact(x_i)| dx at cell centres.
Vec4 l1_error(const CellField& field, const Grid1D& grid, const InitialCondition& exact);

/// Σ_i U_i dx per component, summed left to right.
Vec4 totals(const CellField& field, double dx);

}  // namespace twofilm
