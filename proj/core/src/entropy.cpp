#include "twofilm/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "twofilm/errors.hpp"
#include "twofilm/system.hpp"

namespace twofilm {

namespace {

double horner(const std::vector<double>& c, double w) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * w + *it;
  return acc;
}

Vec4 central_gradient(const std::function<double(const State&)>& fn, const State& u) {
  Vec4 grad{};
  const Vec4 x = u.as_array();
  for (int i = 0; i < 4; ++i) {
    const double h = 1e-6 * (1.0 + std::abs(x[i]));
    Vec4 xp = x;
    Vec4 xm = x;
    xp[i] += h;
    xm[i] -= h;
    grad[i] = (fn(State::from_array(xp)) - fn(State::from_array(xm))) / (2.0 * h);
  }
  return grad;
}

// Five-point stencil: O(h⁴) truncation keeps roundoff and truncation both
// well under 1e-8 for moderately sized generators.
double central_derivative(const ScalarFn& fn, double w) {
  const double h = 1e-3 * std::abs(w);
  return (fn(w - 2.0 * h) - 8.0 * fn(w - h) + 8.0 * fn(w + h) - fn(w + 2.0 * h)) / (12.0 * h);
}

}  // namespace

EntropyGenerators convex_generators() {
  return {
      [](double w) { return 1.0 / w; },
      [](double xi) { return 1.0 / xi; },
      [](double tau) { return 1.0 / tau; },
      [](double w) { return -1.5 * std::log(w); },
      "convex",
  };
}

EntropyGenerators zero_generators() {
  auto zero = [](double) { return 0.0; };
  return {zero, zero, zero, zero, "zero"};
}

EntropyGenerators polynomial_generators(std::vector<double> rho_coeffs,
                                        std::vector<double> mu_coeffs,
                                        std::vector<double> nu_coeffs) {
  // ψ'(w) = (3/2) Σ k a_k w^k  =>  ψ(w) = (3/2) Σ k a_k w^{k+1}/(k+1)
  std::vector<double> psi_coeffs(rho_coeffs.size() + 1, 0.0);
  for (std::size_t k = 1; k < rho_coeffs.size(); ++k) {
    psi_coeffs[k + 1] = 1.5 * static_cast<double>(k) * rho_coeffs[k] / static_cast<double>(k + 1);
  }
  return {
      [c = std::move(rho_coeffs)](double w) { return horner(c, w); },
      [c = std::move(mu_coeffs)](double w) { return horner(c, w); },
      [c = std::move(nu_coeffs)](double w) { return horner(c, w); },
      [c = std::move(psi_coeffs)](double w) { return horner(c, w); },
      "polynomial",
  };
}

EntropyPairValue entropy(const State& s, const EntropyGenerators& gen) {
  require_positive(s, "entropy");
  const double u = s.fb();
  const double v = s.gq();
  const double xi = s.b / s.f;
  const double tau = s.q / s.g;
  const double sum = u + v;
  const double su = std::sqrt(u);
  const double sv = std::sqrt(v);
  const double mu = gen.mu(xi);
  const double nu = gen.nu(tau);

  EntropyPairValue out;
  out.entropy = gen.rho(u) + su * mu + sv * nu + 1.0 / sum;
  out.flux = gen.psi(u) + 0.5 * u * su * mu + sv * nu * (u + 0.5 * v) - 1.5 * std::log(sum) -
             u / (2.0 * sum);
  if (!std::isfinite(out.entropy) || !std::isfinite(out.flux)) {
    throw DomainError("entropy: generator '" + gen.name + "' is not finite at " + to_string(s));
  }
  return out;
}

EntropyPairValue convex_entropy(const State& s) {
  require_positive(s, "convex_entropy");
  const auto [f, b, g, q] = s;
  const double fb = s.fb();
  const double gq = s.gq();
  const double sum = fb + gq;
  const double upper = g * std::sqrt(g / q);  // g^{3/2}/√q
  EntropyPairValue out;
  out.entropy = 1.0 / fb + f * std::sqrt(f / b) + 1.0 / sum + upper;
  out.flux = -1.5 * std::log(fb * sum) + 0.5 * f * f * std::sqrt(f * b) - fb / (2.0 * sum) +
             upper * (fb + 0.5 * gq);
  return out;
}

double compatibility_residual(const State& u, const EntropyPairFn& pair) {
  const Vec4 grad_e = central_gradient([&](const State& s) { return pair(s).entropy; }, u);
  const Vec4 grad_q = central_gradient([&](const State& s) { return pair(s).flux; }, u);
  const Mat4 df = jacobian(u);
  double worst = 0.0;
  for (int j = 0; j < 4; ++j) {
    double row = 0.0;
    for (int i = 0; i < 4; ++i) row += grad_e[i] * df[i][j];
    worst = std::max(worst, std::abs(row - grad_q[j]));
  }
  return worst;
}

double compatibility_residual(const State& u, const EntropyGenerators& gen) {
  return compatibility_residual(u, [&gen](const State& s) { return entropy(s, gen); });
}

double psi_consistency_error(const EntropyGenerators& gen, const std::vector<double>& samples) {
  double worst = 0.0;
  for (double w : samples) {
    const double lhs = central_derivative(gen.psi, w);
    const double rhs = 1.5 * w * central_derivative(gen.rho, w);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

Vec4 hessian_quadratic_forms(const State& s) {
  require_positive(s, "hessian_quadratic_forms");
  const auto [f, b, g, q] = s;
  const double fb = s.fb();
  const double gq = s.gq();
  const double sum = fb + gq;
  return {
      3.0 * f * std::sqrt(f / b) + 2.0 * fb / (sum * sum) + 2.0 / fb,
      6.0 * (3.0 * gq * gq + 2.0 * fb * (gq - fb)) / (fb * fb * fb * (3.0 * gq - fb) * sum),
      2.0 * gq / (sum * sum) + 3.0 * g * std::sqrt(g / q),
      2.0 * gq * (3.0 * gq - fb) / (sum * sum * sum),
  };
}

std::array<Vec4, 4> hessian_form_directions(const State& s) {
  require_positive(s, "hessian_form_directions");
  const auto [f, b, g, q] = s;
  const double c = 4.0 / (s.fb() - 3.0 * s.gq());
  return {{
      {-f, b, 0.0, 0.0},
      {1.0 / b, 1.0 / f, c * g, c * q},
      {0.0, 0.0, -g, q},
      {0.0, 0.0, g, q},
  }};
}

double shock_entropy_production(const State& left, const State& right, double speed) {
  const auto l = convex_entropy(left);
  const auto r = convex_entropy(right);
  return speed * (r.entropy - l.entropy) - (r.flux - l.flux);
}

}  // namespace twofilm
