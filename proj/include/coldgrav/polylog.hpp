#pragma once

// Bose-Einstein functions g_k(z) = sum_{n>=1} z^n / n^k on 0 <= z <= 1.

#include <string>
#include <string_view>

#include "coldgrav/numerics.hpp"

namespace coldgrav {

// Order k of g_k, restricted to positive multiples of 1/2.
class PolylogOrder {
 public:
  /// k = halves / 2. Throws DomainError unless halves >= 1.
  static PolylogOrder from_halves(int halves);
  /// Accepts "3/2", "1.5", "2" and similar spellings of a half-integer.
  static PolylogOrder parse(std::string_view text);

  constexpr int halves() const noexcept { return halves_; }
  constexpr double value() const noexcept { return 0.5 * halves_; }
  constexpr bool is_integer() const noexcept { return halves_ % 2 == 0; }
  /// True when the defining series converges at z = 1 (k > 1).
  constexpr bool converges_at_unity() const noexcept { return halves_ > 2; }
  /// The order k - 1, which must itself be positive.
  PolylogOrder lowered() const { return from_halves(halves_ - 2); }
  std::string str() const;

  friend constexpr bool operator==(PolylogOrder, PolylogOrder) = default;

 private:
  constexpr explicit PolylogOrder(int halves) : halves_(halves) {}
  int halves_;

  friend struct PolylogOrders;
};

struct PolylogOrders {
  static constexpr PolylogOrder one_half{1};
  static constexpr PolylogOrder one{2};
  static constexpr PolylogOrder three_halves{3};
  static constexpr PolylogOrder five_halves{5};
};

/// Divergent orders (k <= 1) are only evaluated for z <= 1 - kDivergentOrderGuard.
inline constexpr double kDivergentOrderGuard = 1e-9;

/// g_k(z) to ~1e-15 relative. Throws DomainError for z outside [0, 1] and
/// DivergenceError when k <= 1 and z > 1 - kDivergentOrderGuard.
double polylog(PolylogOrder k, double z);

/// g_k(z) through its Bose-integral representation
///   2^(2k-1) Gamma(k-1/2) / (sqrt(pi) Gamma(2k-1)) * int_0^inf x^(2k-1) / (e^(x^2)/z - 1) dx,
/// evaluated by adaptive quadrature after mapping [0, inf) onto [0, 1).
/// Requires k > 1/2 and 0 <= z < 1. Throws QuadratureError on failure.
double polylog_integral_oracle(PolylogOrder k, double z,
                               const QuadratureOptions& opts = {});

/// F(z) = g_{1/2}(z) / g_{3/2}(z) on 0 < z < 1; always >= 1.
double polylog_ratio_F(double z);

/// Riemann zeta on the real line, s != 1 (analytically continued for s < 0).
double riemann_zeta(double s);

/// zeta(3/2) = g_{3/2}(1), the condensation threshold for N lambda_dB^3.
double zeta_3_2();

}  // namespace coldgrav
