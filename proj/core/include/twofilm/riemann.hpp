#pragma once

#include <array>
#include <utility>
#include <vector>

#include "twofilm/state.hpp"
#include "twofilm/wavecurves.hpp"

namespace twofilm {

/// Case1: f_R b_R ≥ f_L b_L, the 2-wave is a rarefaction (ties give a
/// zero-strength fan). Case2: f_R b_R < f_L b_L, the 2-wave is a shock.
enum class RiemannCase { Case1, Case2 };

/// Full wave pattern: Case1a = J1+R2+J3+S4, Case1b = J1+R2+J3+R4,
/// Case2a = J1+S2+J3+S4, Case2b = J1+S2+J3+R4.
enum class FanCase { Case1a, Case1b, Case2a, Case2b };

std::string_view to_string(FanCase c) noexcept;

struct Wave {
  WaveFamily family = WaveFamily::Contact1;
  double head = 0.0;  ///< slowest speed (σ for discontinuities)
  double tail = 0.0;  ///< fastest speed (σ for discontinuities)
};

/// Self-similar solution U(x/t) of the Riemann problem: five constant states
/// separated by four waves.
struct RiemannFan {
  State left;        ///< U_L
  State left_star;   ///< U_L*, between waves 1 and 2
  State mid_star;    ///< U_M*, between waves 2 and 3
  State right_star;  ///< U_R*, between waves 3 and 4
  State right;       ///< U_R
  std::array<Wave, 4> waves{};
  FanCase tag = FanCase::Case1a;
  double g_mid = 0.0;  ///< g_M*
  bool ordered = true;  ///< wave speeds monotone
  std::vector<Warning> warnings;
};

enum class RootKind { F1, F2 };

/// Scalar root problem for g_M* with the bracket that produced the root.
struct RootProblem {
  RootKind kind = RootKind::F1;
  double lo = 0.0;
  double hi = 0.0;
  bool expanded = false;  ///< bracket had to be widened beyond the analytic one
  double root = 0.0;
};

RiemannCase classify(const State& left, const State& right);

/// F₁(g) = g² q_L - √(g g_L)(f_L b_L + g_L q_L) + f_R b_R g_L
double f1_residual(const State& left, const State& right, double g);

/// F₂(g) = q_L g³ + g g_L(f_R b_R - f_L b_L - s) - g_L²(g_L q_L + f_L b_L - f_R b_R - s),
/// s = √(f_L b_L f_R b_R)
double f2_residual(const State& left, const State& right, double g);

/// Solves F₁ = 0 (Case1, bracket between g_min and g_L, widened
/// geometrically if needed) or F₂ = 0 (Case2, on (g_L, ∞)). Throws
/// NoRootError if no sign change is found. Warnings are appended if given.
///
/// A Case1 root exists iff f_R b_R ≤ 3(η_L/4)^{4/3}, the largest fb on the
/// 2-rarefaction through U_L* (η_L = (f_L b_L + g_L q_L)/(g_L q_L)^{1/4}).
/// f_R b_R < g_L q_L alone does not guarantee it.
RootProblem solve_g_mid(const State& left, const State& right, RiemannCase which,
                        std::vector<Warning>* warnings = nullptr);

struct IntermediateStates {
  State left_star;
  State mid_star;
  State right_star;
};

IntermediateStates intermediate_states(const State& left, const State& right, double g_mid);

/// Shock4 iff g_M* > √(g_L g_R q_R / q_L), otherwise Raref4 (a tie is a
/// zero-strength rarefaction).
WaveFamily classify_wave4(const State& left, const State& right, double g_mid);

struct SolveOptions {
  enum class Ordering {
    Enforce,  ///< throw OrderingError on non-monotone speeds
    Report,   ///< record a SpeedOrdering warning and clear `ordered`
  };
  Ordering ordering = Ordering::Enforce;
};

/// Exact Riemann solution. Accepts Positive-admissible states; states that
/// violate fb < gq produce a NotStrictlyHyperbolic warning.
RiemannFan solve(const State& left, const State& right, SolveOptions options = {});

/// U at similarity coordinate ξ = x/t. Total on ordered fans; on fans with
/// `ordered == false` only ξ below the slowest or above the fastest wave is
/// meaningful, and other ξ throw OrderingError.
State sample(const RiemannFan& fan, double xi);

/// Solution at (x, t) for data separated at x = 0; at t = 0 the initial data.
State sample_at(const RiemannFan& fan, double x, double t);

/// (f, b) at ξ using waves 1 and 2 only. f and b are continuous across waves
/// 3 and 4, so this is valid for unordered fans as well.
std::pair<double, double> sample_lower_layer(const RiemannFan& fan, double xi);

}  // namespace twofilm
