#pragma once

// Test-only reference computations. Everything here deliberately avoids the
// library's own evaluation paths: integrals go through adaptive Simpson,
// walk counts through integer vector iteration, derivatives through central
// differences.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "ctqw/odd_graph.hpp"

namespace oracles {

template <class F, class V>
V simpson_rec(const F& f, double a, double b, V fa, V fm, V fb, V whole,
              double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double h = b - a;
  const V fl = f(0.5 * (a + m));
  const V fr = f(0.5 * (m + b));
  const V left = (h / 12.0) * (fa + 4.0 * fl + fm);
  const V right = (h / 12.0) * (fm + 4.0 * fr + fb);
  const V refined = left + right;
  if (depth <= 0 || std::abs(refined - whole) <= 15.0 * tol)
    return refined + (refined - whole) / 15.0;
  return simpson_rec(f, a, m, fa, fl, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, fr, fb, right, 0.5 * tol, depth - 1);
}

// Adaptive Simpson with Richardson correction; V is double or complex.
template <class V = double, class F>
V adaptive_simpson(const F& f, double a, double b, double tol = 1e-12,
                   int max_depth = 40) {
  const V fa = f(a);
  const V fm = f(0.5 * (a + b));
  const V fb = f(b);
  const V whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// D(x) = int_0^x e^{u^2 - x^2} du; the integrand never exceeds 1, so this is
// overflow-free for any x.
inline double dawson_oracle(double x) {
  if (x == 0.0) return 0.0;
  const double ax = std::abs(x);
  const double val = adaptive_simpson<double>(
      [ax](double u) { return std::exp((u - ax) * (u + ax)); }, 0.0, ax, 1e-14);
  return x < 0.0 ? -val : val;
}

// int e^{-ixt} |x| e^{-x^2} dx over |x| <= radius (tail mass ~e^{-radius^2}).
inline std::complex<double> fourier_limit_oracle(double t, double radius = 8.0,
                                                 double tol = 1e-12) {
  return adaptive_simpson<std::complex<double>>(
      [t](double x) {
        return std::abs(x) * std::exp(-x * x) *
               std::exp(std::complex<double>(0.0, -x * t));
      },
      -radius, radius, tol);
}

// int |x| e^{-x^2} / (z - x) dx over |x| <= radius.
inline std::complex<double> stieltjes_limit_oracle(std::complex<double> z,
                                                   double radius = 8.0,
                                                   double tol = 1e-12) {
  return adaptive_simpson<std::complex<double>>(
      [z](double x) { return std::abs(x) * std::exp(-x * x) / (z - x); },
      -radius, radius, tol);
}

// Closed m-step walk counts at the origin, m = 0..m_max, by repeated
// integer application of the adjacency: counts[m] = (A^m)_{oo}.
inline std::vector<std::int64_t> closed_walk_counts(const ctqw::OddGraph& g,
                                                    int origin, int m_max) {
  std::vector<std::int64_t> v(g.vertex_count(), 0);
  v[origin] = 1;
  std::vector<std::int64_t> counts{1};
  for (int m = 1; m <= m_max; ++m) {
    std::vector<std::int64_t> next(g.vertex_count(), 0);
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int w : g.neighbors[u]) next[u] += v[w];
    v.swap(next);
    counts.push_back(v[origin]);
  }
  return counts;
}

// Central difference of a complex-valued function of time.
template <class F>
std::complex<double> central_derivative(const F& f, double t, double h = 1e-5) {
  return (f(t + h) - f(t - h)) / (2.0 * h);
}

}  // namespace oracles
