#pragma once

#include "twofilm/state.hpp"

namespace twofilm {

/// F(U) = (f²b/2, fb²/2, g²q/2 + fgb, gq²/2 + fbq).
FluxVector flux(const State& u);

/// Flux Jacobian DF(U); the upper-right 2x2 block is identically zero.
Mat4 jacobian(const State& u);

struct EigenDecomposition {
  Vec4 lambdas;                ///< λ₁..λ₄, ordered on strictly hyperbolic states
  std::array<Vec4, 4> rights;  ///< r₁..r₄, unnormalized
};

/// Closed-form eigenstructure:
///   λ = (fb/2, 3fb/2, fb + gq/2, fb + 3gq/2)
///   r₁ = (-f/b, 1, 0, 0)
///   r₂ = ((fb-3gq)/(4qb), (fb-3gq)/(4qf), g/q, 1)
///   r₃ = (0, 0, -g/q, 1)
///   r₄ = (0, 0, g/q, 1)
EigenDecomposition eigen(const State& u);

/// λ_k for k in 1..4 (characteristic speeds; all positive on positive states).
double wave_speed(const State& u, int k);
Vec4 wave_speeds(const State& u);

/// Eigenvector r̂_k scaled so that ∇λ_k·r̂_k takes the closed forms returned by
/// char_field_indicator:
///   r̂₁ = (-f, b, 0, 0)
///   r̂₂ = (f, b, 4fbg/(fb-3gq), 4fbq/(fb-3gq))
///   r̂₃ = (0, 0, -g, q)
///   r̂₄ = (0, 0, g, q)
/// r̂₂ is undefined where 3gq = fb (λ₂ = λ₄).
Vec4 scaled_eigenvector(const State& u, int k);

/// ∇λ_k·r̂_k: 0 for the linearly degenerate fields k = 1, 3; 3fb for k = 2;
/// 3gq for k = 4. Throws ArgumentError for k outside 1..4.
double char_field_indicator(const State& u, int k);

/// Riemann-invariant coordinates W = (ξ, u, τ, η):
///   ξ = b/f,  u = fb,  τ = q/g,  η = (fb + gq)/(gq)^{1/4}.
/// v = gq is recovered from u + v = η v^{1/4}.
struct InvariantCoords {
  double xi = 0.0;
  double u = 0.0;
  double tau = 0.0;
  double eta = 0.0;
};

InvariantCoords to_invariants(const State& s);

/// Which root of u + v = η v^{1/4} to take. The two roots are separated by the
/// fold v = u/3 where λ₂ = λ₄; strictly hyperbolic states lie on Upper.
enum class GqBranch { Upper, Lower };

GqBranch branch_of(const State& s) noexcept;

/// Solves u + v = η v^{1/4} for v on the requested branch. Throws
/// InversionError if (u, η) lies below the fold, i.e. no root exists.
double solve_gq(double u, double eta, GqBranch branch = GqBranch::Upper);

/// Inverse of to_invariants on the Upper branch:
///   f = √(u/ξ), b = √(uξ), g = √(v/τ), q = √(vτ).
State from_invariants(const InvariantCoords& w);

}  // namespace twofilm
