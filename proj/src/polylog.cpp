#include "coldgrav/polylog.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "coldgrav/constants.hpp"
#include "coldgrav/errors.hpp"

namespace coldgrav {

namespace {

constexpr double kSeriesRelTol = 1e-17;
constexpr long kSeriesMaxTerms = 10'000'000;
// Below this z the defining series converges at least as fast as 2^-n.
constexpr double kSeriesCrossover = 0.5;

// B_2, B_4, ..., B_24.
constexpr std::array<double, 12> kBernoulliEven = {
    1.0 / 6.0,        -1.0 / 30.0,      1.0 / 42.0,          -1.0 / 30.0,
    5.0 / 66.0,       -691.0 / 2730.0,  7.0 / 6.0,           -3617.0 / 510.0,
    43867.0 / 798.0,  -174611.0 / 330.0, 854513.0 / 138.0,   -236364091.0 / 2730.0};

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Euler-Maclaurin summation of zeta(s) with the first N-1 terms explicit.
double zeta_euler_maclaurin(double s) {
  constexpr int N = 12;
  double sum = 0.0;
  for (int n = N - 1; n >= 1; --n) sum += std::pow(n, -s);
  const double nn = N;
  sum += std::pow(nn, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(nn, -s);
  // B_2j / (2j)! * s (s+1) ... (s+2j-2) * N^(-s-2j+1)
  double rising = s;                 // s (s+1) ... (s+2j-2)
  double factorial = 2.0;            // (2j)!
  double power = std::pow(nn, -s - 1.0);
  for (std::size_t j = 1; j <= kBernoulliEven.size(); ++j) {
    sum += kBernoulliEven[j - 1] / factorial * rising * power;
    const double tj = 2.0 * static_cast<double>(j);
    rising *= (s + tj - 1.0) * (s + tj);
    factorial *= (tj + 1.0) * (tj + 2.0);
    power /= nn * nn;
  }
  return sum;
}

bool is_whole(double x) { return std::floor(x) == x; }

double series(double k, double z) {
  double sum = 0.0;
  double zn = 1.0;
  for (long n = 1; n <= kSeriesMaxTerms; ++n) {
    zn *= z;
    const double term = zn / std::pow(static_cast<double>(n), k);
    sum += term;
    if (term <= kSeriesRelTol * sum) return sum;
  }
  throw NumericalError("polylog: series did not converge within " +
                       std::to_string(kSeriesMaxTerms) + " terms");
}

// Expansion in mu = ln z around the singular point z = 1 (valid for |mu| < 2 pi):
//   non-integer k: Gamma(1-k) (-mu)^(k-1) + sum_j zeta(k-j) mu^j / j!
//   integer k = n: mu^(n-1)/(n-1)! (H_{n-1} - ln(-mu)) + sum_{j != n-1} zeta(n-j) mu^j / j!
double log_expansion(PolylogOrder order, double z) {
  const double k = order.value();
  const double mu = std::log(z);
  double sum = 0.0;
  int singular_j = -1;
  if (order.is_integer()) {
    const int n = order.halves() / 2;
    singular_j = n - 1;
    double harmonic = 0.0;
    double factorial = 1.0;
    for (int i = 1; i <= n - 1; ++i) {
      harmonic += 1.0 / i;
      factorial *= i;
    }
    sum = std::pow(mu, n - 1) / factorial * (harmonic - std::log(-mu));
  } else {
    sum = std::tgamma(1.0 - k) * std::pow(-mu, k - 1.0);
  }

  double mu_pow = 1.0;   // mu^j / j!
  int small_terms = 0;
  for (int j = 0; j < 120; ++j) {
    if (j > 0) mu_pow *= mu / j;
    if (j == singular_j) continue;
    const double term = riemann_zeta(k - j) * mu_pow;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) {
      if (++small_terms == 2) return sum;
    } else {
      small_terms = 0;
    }
  }
  throw NumericalError("polylog: expansion around z = 1 did not converge");
}

}  // namespace

PolylogOrder PolylogOrder::from_halves(int halves) {
  if (halves < 1) {
    throw DomainError("polylog order must be a positive multiple of 1/2, got " +
                      std::to_string(halves) + "/2");
  }
  return PolylogOrder(halves);
}

PolylogOrder PolylogOrder::parse(std::string_view text) {
  const auto bad = [&] {
    return DomainError("cannot parse polylog order '" + std::string(text) +
                       "' as a positive half-integer");
  };
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    int num = 0, den = 0;
    const auto num_s = text.substr(0, slash);
    const auto den_s = text.substr(slash + 1);
    if (std::from_chars(num_s.data(), num_s.data() + num_s.size(), num).ptr !=
            num_s.data() + num_s.size() ||
        std::from_chars(den_s.data(), den_s.data() + den_s.size(), den).ptr !=
            den_s.data() + den_s.size()) {
      throw bad();
    }
    if (den == 1) return from_halves(2 * num);
    if (den == 2) return from_halves(num);
    throw bad();
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(std::string(text), &used);
  } catch (const std::exception&) {
    throw bad();
  }
  if (used != text.size() || !is_whole(2.0 * v) || v > 1e6) throw bad();
  return from_halves(static_cast<int>(2.0 * v));
}

std::string PolylogOrder::str() const {
  if (is_integer()) return std::to_string(halves_ / 2);
  return std::to_string(halves_) + "/2";
}

double riemann_zeta(double s) {
  if (!std::isfinite(s)) throw DomainError("zeta: non-finite argument");
  if (s == 1.0) throw DivergenceError("zeta: pole at s = 1");
  if (s == 0.0) return -0.5;
  if (s < 0.0) {
    if (is_whole(s) && is_whole(0.5 * s)) return 0.0;  // trivial zeros
    // zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s)
    const double pi = constants::pi;
    return std::pow(2.0, s) * std::pow(pi, s - 1.0) * std::sin(0.5 * pi * s) *
           std::tgamma(1.0 - s) * riemann_zeta(1.0 - s);
  }
  if (s >= 40.0) {
    double sum = 1.0;
    for (int n = 2;; ++n) {
      const double term = std::pow(n, -s);
      sum += term;
      if (term < 1e-18) return sum;
    }
  }
  return zeta_euler_maclaurin(s);
}

double zeta_3_2() {
  static const double value = riemann_zeta(1.5);
  return value;
}

double polylog(PolylogOrder k, double z) {
  if (!(z >= 0.0 && z <= 1.0)) {
    throw DomainError("polylog: z = " + fmt_double(z) +
                      " outside the physical range [0, 1]");
  }
  if (z == 0.0) return 0.0;
  if (!k.converges_at_unity() && z > 1.0 - kDivergentOrderGuard) {
    throw DivergenceError("polylog: g_" + k.str() + "(z) diverges as z -> 1 (k <= 1); "
                          "evaluation requires z <= 1 - 1e-9, got z = " +
                          fmt_double(z));
  }
  if (z == 1.0) {
    if (k == PolylogOrders::three_halves) return zeta_3_2();
    return riemann_zeta(k.value());
  }
  if (k == PolylogOrders::one) return -std::log1p(-z);
  if (z <= kSeriesCrossover) return series(k.value(), z);
  return log_expansion(k, z);
}

double polylog_integral_oracle(PolylogOrder k, double z,
                               const QuadratureOptions& opts) {
  if (k.halves() <= 1) {
    throw DomainError("integral representation needs k > 1/2 "
                      "(Gamma(k - 1/2) is singular at k = 1/2)");
  }
  if (!(z >= 0.0 && z < 1.0)) {
    throw DomainError("integral representation needs 0 <= z < 1, got z = " +
                      fmt_double(z));
  }
  if (z == 0.0) return 0.0;

  const double order = k.value();
  const double prefactor = std::pow(2.0, 2.0 * order - 1.0) /
                           std::sqrt(constants::pi) *
                           std::tgamma(order - 0.5) / std::tgamma(2.0 * order - 1.0);
  const double log_z = std::log(z);
  const double power = 2.0 * order - 1.0;
  // x = t / (1 - t) maps [0, 1) onto [0, inf); dx = dt / (1 - t)^2.
  const auto integrand = [&](double t) {
    const double u = 1.0 - t;
    const double x = t / u;
    const double denom = std::expm1(x * x - log_z);
    if (!std::isfinite(denom)) return 0.0;
    return std::pow(x, power) / denom / (u * u);
  };
  const auto result = integrate_adaptive(integrand, 0.0, 1.0, opts);
  return prefactor * result.value;
}

double polylog_ratio_F(double z) {
  if (!(z > 0.0 && z < 1.0)) {
    throw DomainError("F(z) = g_1/2(z) / g_3/2(z) requires 0 < z < 1, got z = " +
                      fmt_double(z));
  }
  return polylog(PolylogOrders::one_half, z) / polylog(PolylogOrders::three_halves, z);
}

}  // namespace coldgrav
