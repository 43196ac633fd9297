#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include "coldgrav/errors.hpp"
#include "coldgrav/polylog.hpp"
#include "oracles.hpp"

using namespace coldgrav;
using coldgrav::test::rel_err;

namespace {
const auto k_half = PolylogOrders::one_half;
const auto k_one = PolylogOrders::one;
const auto k_3_2 = PolylogOrders::three_halves;
const auto k_5_2 = PolylogOrders::five_halves;
}  // namespace

TEST_CASE("order parsing") {
  CHECK(PolylogOrder::parse("3/2") == k_3_2);
  CHECK(PolylogOrder::parse("1.5") == k_3_2);
  CHECK(PolylogOrder::parse("1") == k_one);
  CHECK(PolylogOrder::parse("2/1").halves() == 4);
  CHECK(PolylogOrder::parse("1/2").str() == "1/2");
  CHECK_THROWS_AS(PolylogOrder::parse("0"), DomainError);
  CHECK_THROWS_AS(PolylogOrder::parse("-1/2"), DomainError);
  CHECK_THROWS_AS(PolylogOrder::parse("1/3"), DomainError);
  CHECK_THROWS_AS(PolylogOrder::parse("0.3"), DomainError);
  CHECK_THROWS_AS(PolylogOrder::parse("abc"), DomainError);
  CHECK(k_3_2.converges_at_unity());
  CHECK_FALSE(k_one.converges_at_unity());
}

TEST_CASE("polylog worked values") {
  CHECK(polylog(k_3_2, 0.0) == 0.0);
  CHECK(polylog(k_one, 0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  // Brute-force series: 0.62483702081991...
  CHECK(rel_err(polylog(k_3_2, 0.5), 0.6248370208199139) < 1e-14);
  CHECK(rel_err(polylog(k_3_2, 0.5), test::series_bruteforce(1.5, 0.5)) < 1e-13);
  CHECK(rel_err(polylog(k_3_2, 1.0), 2.6123753486854883) < 1e-14);
  CHECK(rel_err(polylog(k_3_2, 1.0), test::zeta_series_with_tail(1.5)) < 1e-12);
  CHECK(rel_err(polylog(k_half, 0.5), 0.8061267230428523) < 1e-14);
}

TEST_CASE("polylog matches brute-force series on both sides of the method switch") {
  for (const int halves : {1, 2, 3, 4, 5, 7, 9}) {
    const auto k = PolylogOrder::from_halves(halves);
    for (const double z : {1e-6, 0.01, 0.2, 0.49, 0.5, 0.51, 0.7, 0.9, 0.99, 0.999}) {
      CAPTURE(halves);
      CAPTURE(z);
      CHECK(rel_err(polylog(k, z), test::series_bruteforce(k.value(), z)) < 1e-12);
    }
  }
}

TEST_CASE("polylog at and near the condensation point") {
  // z = 1 routes to zeta(k) for k > 1.
  CHECK(rel_err(polylog(k_5_2, 1.0), test::zeta_series_with_tail(2.5)) < 1e-12);
  CHECK(rel_err(polylog(PolylogOrder::from_halves(4), 1.0),
                std::numbers::pi * std::numbers::pi / 6.0) < 1e-14);
  // Continuity into z = 1 for k = 3/2: g(1) - g(1 - e) ~ 2 sqrt(pi e).
  const double e = 1e-12;
  const double gap = polylog(k_3_2, 1.0) - polylog(k_3_2, 1.0 - e);
  CHECK(gap == doctest::Approx(2.0 * std::sqrt(std::numbers::pi * e)).epsilon(1e-3));

  CHECK_THROWS_AS(polylog(k_half, 1.0), DivergenceError);
  CHECK_THROWS_AS(polylog(k_one, 1.0), DivergenceError);
  CHECK_THROWS_AS(polylog(k_half, 1.0 - 1e-10), DivergenceError);
  CHECK_NOTHROW(polylog(k_half, 1.0 - 1e-9));
  CHECK_THROWS_AS(polylog(k_3_2, -1e-3), DomainError);
  CHECK_THROWS_AS(polylog(k_3_2, 1.0 + 1e-12), DomainError);
  CHECK_THROWS_AS(polylog(k_3_2, std::nan("")), DomainError);
}

TEST_CASE("zeta(3/2) constant") {
  CHECK(zeta_3_2() == polylog(k_3_2, 1.0));
  CHECK(rel_err(zeta_3_2(), 2.612375348685488) < 1e-15);
  for (const double z : {0.1, 0.9, 0.999999, 1.0 - 1e-15}) CHECK(zeta_3_2() > polylog(k_3_2, z));

  std::vector<std::thread> pool;
  std::vector<double> seen(8);
  for (std::size_t i = 0; i < seen.size(); ++i) {
    pool.emplace_back([&seen, i] { seen[i] = zeta_3_2(); });
  }
  for (auto& t : pool) t.join();
  for (const double v : seen) CHECK(v == zeta_3_2());
}

TEST_CASE("riemann zeta reference values") {
  CHECK(rel_err(riemann_zeta(2.0), std::numbers::pi * std::numbers::pi / 6.0) < 1e-15);
  CHECK(rel_err(riemann_zeta(0.5), -1.4603545088095868) < 1e-14);
  CHECK(riemann_zeta(0.0) == -0.5);
  CHECK(riemann_zeta(-2.0) == 0.0);
  CHECK(rel_err(riemann_zeta(-1.0), -1.0 / 12.0) < 1e-14);
  CHECK(rel_err(riemann_zeta(-3.0), 1.0 / 120.0) < 1e-14);
  CHECK_THROWS_AS(riemann_zeta(1.0), DivergenceError);
}

TEST_CASE("integral representation oracle") {
  CHECK(rel_err(polylog_integral_oracle(k_3_2, 0.5), test::series_bruteforce(1.5, 0.5)) < 1e-10);
  CHECK(rel_err(polylog_integral_oracle(k_5_2, 0.5), test::series_bruteforce(2.5, 0.5)) < 1e-10);
  // Leading order z -> 0: g_k(z) ~ z.
  CHECK(rel_err(polylog_integral_oracle(k_3_2, 1e-9), 1e-9) < 1e-9);
  CHECK(polylog_integral_oracle(k_3_2, 0.0) == 0.0);

  CHECK_THROWS_AS(polylog_integral_oracle(k_half, 0.5), DomainError);
  CHECK_THROWS_AS(polylog_integral_oracle(k_3_2, 1.0), DomainError);
  CHECK_THROWS_AS(polylog_integral_oracle(k_3_2, -0.1), DomainError);
  QuadratureOptions starved;
  starved.max_intervals = 1;
  CHECK_THROWS_AS(polylog_integral_oracle(k_3_2, 0.9, starved), QuadratureError);
}

TEST_CASE("F(z) = g_1/2 / g_3/2") {
  CHECK(rel_err(polylog_ratio_F(0.5), 1.2901391821903402) < 1e-13);
  CHECK(rel_err(polylog_ratio_F(0.5),
                test::series_bruteforce(0.5, 0.5) / test::series_bruteforce(1.5, 0.5)) < 1e-13);
  // Value at z = 0.99 from the brute-force series: 7.1409586837454...
  const double f99 = test::series_bruteforce(0.5, 0.99) / test::series_bruteforce(1.5, 0.99);
  CHECK(rel_err(polylog_ratio_F(0.99), f99) < 1e-12);
  CHECK(rel_err(f99, 7.140958683745438) < 1e-13);
  CHECK(polylog_ratio_F(1e-12) == doctest::Approx(1.0).epsilon(1e-11));

  CHECK_THROWS_AS(polylog_ratio_F(0.0), DomainError);
  CHECK_THROWS_AS(polylog_ratio_F(1.0), DomainError);
}

TEST_CASE("property: monotone in z on a 100-point grid") {
  for (const auto k : {k_half, k_one, k_3_2, k_5_2}) {
    const double zmax = k.converges_at_unity() ? 1.0 : 1.0 - 1e-9;
    double prev = -1.0;
    for (int i = 0; i < 100; ++i) {
      const double z = i == 99 ? zmax : zmax * i / 99.0;
      const double v = polylog(k, z);
      CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("property: series and integral representation agree") {
  for (const auto k : {k_3_2, k_5_2}) {
    for (const double z : {0.01, 0.1, 0.5, 0.9, 0.99}) {
      CAPTURE(z);
      CHECK(rel_err(polylog(k, z), polylog_integral_oracle(k, z)) < 1e-10);
    }
  }
}

TEST_CASE("property: z d/dz g_k = g_{k-1}") {
  const double h = 1e-6;
  for (const auto k : {k_3_2, k_5_2}) {
    for (int i = 0; i < 20; ++i) {
      const double z = 0.05 + (0.9 - 0.05) * i / 19.0;
      const double deriv = z * (polylog(k, z + h) - polylog(k, z - h)) / (2.0 * h);
      CAPTURE(z);
      CHECK(rel_err(deriv, polylog(k.lowered(), z)) < 1e-6);
    }
  }
}

TEST_CASE("property: g_1(z) = -ln(1 - z)") {
  for (int i = 0; i <= 99; ++i) {
    const double z = 0.99 * i / 99.0;
    if (z == 0.0) continue;
    CHECK(rel_err(polylog(k_one, z), -std::log1p(-z)) < 1e-12);
  }
}

TEST_CASE("property: F >= 1 and non-decreasing") {
  double prev = 1.0;
  for (int i = 1; i < 200; ++i) {
    const double z = i / 200.0;
    const double f = polylog_ratio_F(z);
    CHECK(f >= 1.0);
    CHECK(f >= prev);
    prev = f;
  }
}
