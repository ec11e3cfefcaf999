#pragma once

#include <string_view>

#include "twofilm/state.hpp"

namespace twofilm {

/// Fields 1 and 3 are linearly degenerate (contacts only); fields 2 and 4 are
/// genuinely nonlinear.
enum class WaveFamily { Contact1, Shock2, Raref2, Contact3, Shock4, Raref4 };

std::string_view to_string(WaveFamily family) noexcept;
bool is_discontinuity(WaveFamily family) noexcept;

/// An elementary wave joining `left` to `right`. Discontinuities have
/// head == tail == σ; fans span [head, tail].
struct WaveJump {
  State left;
  State right;
  WaveFamily family = WaveFamily::Contact1;
  double head = 0.0;
  double tail = 0.0;

  double speed() const noexcept { return head; }
};

/// σ[[U]] - [[F(U)]] componentwise.
Vec4 rh_residual(const State& left, const State& right, double speed);

/// ‖rh_residual‖∞ divided by max(1, ‖σU‖∞, ‖F(U)‖∞) over both sides.
double rh_relative_residual(const State& left, const State& right, double speed);

/// 1-contact: fb, g, q preserved, right = (f_r, fb/f_r, g, q), σ₁ = fb/2.
WaveJump contact1(const State& left, double f_right);

/// 3-contact: f, b, gq preserved, right = (f, b, g_r, gq/g_r), σ₃ = fb + gq/2.
WaveJump contact3(const State& left, double g_right);

/// 2-rarefaction to fb = fb_target ≥ fb_l; keeps b/f, q/g and
/// (fb + gq)/(gq)^{1/4}. Fan spans [3 fb_l/2, 3 fb_target/2].
WaveJump raref2(const State& left, double fb_target);

/// 2-shock to fb = fb_target < fb_l; keeps f/b and g/q, solves the remaining
/// Rankine-Hugoniot relation for g. σ₂ = b_l(f_l² + f_l f + f²)/(2 f_l).
WaveJump shock2(const State& left, double fb_target);

/// 4-wave along the Temple line f, b, q/g fixed, ending at gq = gq_target.
/// gq_target < gq_l gives a Lax 4-shock, otherwise a 4-rarefaction.
WaveJump temple4(const State& left, double gq_target);

/// Lax entropy inequalities for Shock2 / Shock4 jumps:
///   Shock2: λ₂(r) < σ < λ₂(l) and λ₁(l) < σ
///   Shock4: λ₄(r) < σ < λ₄(l) and λ₃(l) < σ
/// Throws ArgumentError for other families.
bool lax_admissible(const WaveJump& jump);

}  // namespace twofilm
