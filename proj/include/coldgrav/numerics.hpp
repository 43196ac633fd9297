#pragma once

// Small numerical kernels shared by the physics modules: globally adaptive
// Gauss-Kronrod quadrature and a bracketed Brent root finder.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "coldgrav/errors.hpp"

namespace coldgrav {

struct QuadratureOptions {
  double abs_tol = 1e-14;
  double rel_tol = 1e-10;
  std::size_t max_intervals = 2000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t intervals = 0;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod nodes and weights on [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
};

template <class F>
Segment gauss_kronrod_15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[j] * sum;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * sum;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

// Globally adaptive quadrature of f over the finite interval [a, b]: the
// segment with the largest error estimate is bisected until the summed
// estimate meets max(abs_tol, rel_tol * |I|). The integrand is never sampled
// at the endpoints.
template <class F>
QuadratureResult integrate_adaptive(const F& f, double a, double b,
                                    const QuadratureOptions& opts = {}) {
  std::vector<detail::Segment> segments;
  segments.push_back(detail::gauss_kronrod_15(f, a, b));
  const auto by_error = [](const detail::Segment& l, const detail::Segment& r) {
    return l.error < r.error;
  };

  for (;;) {
    double value = 0.0;
    double error = 0.0;
    for (const auto& s : segments) {
      value += s.value;
      error += s.error;
    }
    if (!std::isfinite(value)) {
      throw QuadratureError("adaptive quadrature: non-finite integrand");
    }
    if (error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(value))) {
      return {value, error, segments.size()};
    }
    if (segments.size() >= opts.max_intervals) {
      throw QuadratureError("adaptive quadrature: tolerance not met within " +
                            std::to_string(opts.max_intervals) +
                            " intervals (error estimate " +
                            std::to_string(error) + ")");
    }
    std::pop_heap(segments.begin(), segments.end(), by_error);
    const detail::Segment worst = segments.back();
    segments.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    segments.push_back(detail::gauss_kronrod_15(f, worst.a, mid));
    std::push_heap(segments.begin(), segments.end(), by_error);
    segments.push_back(detail::gauss_kronrod_15(f, mid, worst.b));
    std::push_heap(segments.begin(), segments.end(), by_error);
  }
}

// Brent's method (bisection / secant / inverse quadratic interpolation) on a
// bracket [a, b] with f(a) and f(b) of opposite sign. Stops once |f(x)| <= ftol
// or the bracket has shrunk to a few ulps; returns the best abscissa seen.
template <class F>
double find_root_bracketed(const F& f, double a, double b, double ftol,
                           int max_iter = 200) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) {
    throw RootFindError("root finder: interval does not bracket a root");
  }
  double c = a, fc = fa;
  double d = b - a, e = d;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (int iter = 0; iter < max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double xtol = 2.0 * eps * std::abs(b) + std::numeric_limits<double>::min();
    const double m = 0.5 * (c - b);
    if (std::abs(fb) <= ftol || std::abs(m) <= xtol) return b;

    if (std::abs(e) >= xtol && std::abs(fa) > std::abs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * m * q - std::abs(xtol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > xtol ? d : (m > 0.0 ? xtol : -xtol);
    fb = f(b);
  }
  throw RootFindError("root finder: no convergence after " +
                      std::to_string(max_iter) + " iterations");
}

}  // namespace coldgrav
