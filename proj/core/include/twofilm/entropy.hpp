#pragma once

#include <functional>
#include <string>
#include <vector>

#include "twofilm/state.hpp"

namespace twofilm {

using ScalarFn = std::function<double(double)>;

/// Generators of one member of the entropy/entropy-flux class. In invariant
/// coordinates (ξ, u, τ, v = gq) the pair is
///
///   E = ρ(u) + √u μ(ξ) + √v ν(τ) + 1/(u + v)
///   Q = ψ(u) + u^{3/2} μ(ξ)/2 + √v ν(τ)(u + v/2) - (3/2) ln(u + v) - u/(2(u + v))
///
/// where ψ must satisfy ψ'(w) = (3/2) w ρ'(w). All four functions are
/// expected to be pure.
struct EntropyGenerators {
  ScalarFn rho;
  ScalarFn mu;
  ScalarFn nu;
  ScalarFn psi;
  std::string name;
};

/// ρ(w) = 1/w, μ(ξ) = 1/ξ, ν(τ) = 1/τ, ψ(w) = -(3/2) ln w. Yields the strictly
/// convex pair of convex_entropy().
EntropyGenerators convex_generators();

/// ρ = μ = ν = ψ = 0.
EntropyGenerators zero_generators();

/// Polynomial generators ρ(w) = Σ rho_coeffs[k] w^k (likewise μ, ν); ψ is the
/// matching closed-form antiderivative of (3/2) w ρ'(w) with ψ(0) = 0.
EntropyGenerators polynomial_generators(std::vector<double> rho_coeffs,
                                        std::vector<double> mu_coeffs,
                                        std::vector<double> nu_coeffs);

struct EntropyPairValue {
  double entropy = 0.0;  ///< E
  double flux = 0.0;     ///< Q
};

using EntropyPairFn = std::function<EntropyPairValue(const State&)>;

EntropyPairValue entropy(const State& u, const EntropyGenerators& gen);

/// Strictly convex pair (Ē, Q̄):
///   Ē = 1/(fb) + f^{3/2}/√b + 1/(fb+gq) + g^{3/2}/√q
///   Q̄ = -(3/2) ln(fb (fb+gq)) + f^{5/2}√b/2 - fb/(2(fb+gq)) + g^{3/2}/√q (fb + gq/2)
EntropyPairValue convex_entropy(const State& u);

/// ‖∇E^T DF - ∇Q^T‖∞ with both gradients from central differences, step
/// 1e-6·(1 + |U_i|).
double compatibility_residual(const State& u, const EntropyPairFn& pair);
double compatibility_residual(const State& u, const EntropyGenerators& gen);

/// Max over sampled w of |ψ'(w) - (3/2) w ρ'(w)|, derivatives by a
/// five-point stencil with step 1e-3·w (generators live on w > 0).
double psi_consistency_error(const EntropyGenerators& gen, const std::vector<double>& samples);

/// Closed forms of r_k^T H_Ē r_k for the directions returned by
/// hessian_form_directions():
///   k=1: 3f^{3/2}/√b + 2fb/(fb+gq)² + 2/(fb)
///   k=2: 6(3g²q² + 2fb(gq - fb)) / ((fb)³ (3gq - fb)(fb + gq))
///   k=3: 2gq/(fb+gq)² + 3g^{3/2}/√q
///   k=4: 2gq(3gq - fb)/(fb+gq)³
/// All four are positive on strictly hyperbolic states.
Vec4 hessian_quadratic_forms(const State& u);

/// Eigenvector directions matching hessian_quadratic_forms():
///   (-f, b, 0, 0), (1/b, 1/f, 4g/(fb-3gq), 4q/(fb-3gq)), (0, 0, -g, q), (0, 0, g, q).
std::array<Vec4, 4> hessian_form_directions(const State& u);

/// σ(Ē(U_r) - Ē(U_l)) - (Q̄(U_r) - Q̄(U_l)); nonnegative for admissible jumps.
double shock_entropy_production(const State& left, const State& right, double speed);

}  // namespace twofilm
