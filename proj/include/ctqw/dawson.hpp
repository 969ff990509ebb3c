#pragma once

#include <cmath>

namespace ctqw {

// Dawson's integral D(x) = e^{-x^2} int_0^x e^{s^2} ds.
//
// |x| <= 6: the all-positive series e^{-x^2} sum_n x^{2n+1}/(n!(2n+1)).
//   No cancellation, and e^{x^2} stays far from overflow on this range.
// |x| >  6: the continued fraction of the large-x expansion,
//   2xD = 1/(1 - z/(1 - 2z/(1 - 3z/...))), z = 1/(2x^2),
//   whose truncation floor ~e^{-x^2} is below double precision once |x| > 6.
//
// The combination keeps products like erfi(x) e^{-x^2} finite at any t, which
// is the only way the closed-form limit amplitudes are ever evaluated.
inline double dawson(double x) {
  const double ax = std::abs(x);
  double val;
  if (ax <= 6.0) {
    const double x2 = ax * ax;
    double term = ax;  // x^{2n+1}/n!
    double sum = ax;
    for (int n = 1; n < 400; ++n) {
      term *= x2 / n;
      const double add = term / (2 * n + 1);
      sum += add;
      if (add < sum * 1e-18) break;
    }
    val = sum * std::exp(-x2);
  } else {
    const double z = 1.0 / (2.0 * ax * ax);
    double f = 1.0;
    for (int j = 40; j >= 1; --j) f = 1.0 - j * z / f;
    val = 1.0 / (2.0 * ax * f);
  }
  return x < 0.0 ? -val : val;
}

}  // namespace ctqw
