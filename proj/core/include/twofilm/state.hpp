#pragma once

#include <array>
#include <string>
#include <string_view>

namespace twofilm {

/// Four-component vector in (f, b, g, q) ordering; used for fluxes, jumps and
/// eigenvectors.
using Vec4 = std::array<double, 4>;
using Mat4 = std::array<Vec4, 4>;

/// Flux F(U) of the two-layer system, same ordering as State.
using FluxVector = Vec4;

/// Primitive (and conserved) state of the two-layer film:
///   f  lower film height
///   b  lower bulk concentration gradient
///   g  upper film height
///   q  upper bulk concentration gradient
struct State {
  double f = 0.0;
  double b = 0.0;
  double g = 0.0;
  double q = 0.0;

  constexpr double fb() const noexcept { return f * b; }
  constexpr double gq() const noexcept { return g * q; }

  constexpr Vec4 as_array() const noexcept { return {f, b, g, q}; }
  static constexpr State from_array(const Vec4& v) noexcept { return {v[0], v[1], v[2], v[3]}; }

  constexpr double operator[](int i) const noexcept {
    return i == 0 ? f : i == 1 ? b : i == 2 ? g : q;
  }

  friend constexpr bool operator==(const State&, const State&) = default;
};

enum class Admissibility {
  Positive,  ///< all components > 0
  Strict,    ///< Positive and gq - fb > margin (strict hyperbolicity)
};

inline constexpr double kDefaultHyperbolicityMargin = 1e-10;

bool is_admissible(const State& u, Admissibility level,
                   double margin = kDefaultHyperbolicityMargin) noexcept;

/// Throws DomainError naming `what` if `u` is not Positive-admissible.
void require_positive(const State& u, std::string_view what);

std::string to_string(const State& u);

/// Structured, non-fatal diagnostic attached to results (fans, runs, configs).
struct Warning {
  enum class Code {
    NotStrictlyHyperbolic,  ///< a state violates fb < gq
    BracketSideCondition,   ///< F1 bracket side condition f_R b_R < g_L q_L fails
    BracketExpanded,        ///< root bracket had to be widened
    SpeedOrdering,          ///< fan speeds not monotone (recorded, not thrown)
  };
  Code code;
  std::string message;
};

}  // namespace twofilm
