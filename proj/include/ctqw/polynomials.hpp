#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ctqw/jacobi.hpp"

namespace ctqw {

enum class PolyFamily { P, Q1 };

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("polynomial coefficients exceed 64-bit range");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("polynomial coefficients exceed 64-bit range");
  return r;
}

}  // namespace detail

// Monic orthogonal polynomials of a coefficient sequence:
//   P_0 = 1,  P_1 = x - alpha_1,
//   P_{n+1}(x) = (x - alpha_{n+1}) P_n(x) - omega_n P_{n-1}(x),
// and the once-shifted family Q1 (alpha_{n+2}, omega_{n+1} in place of
// alpha_{n+1}, omega_n), whose degree-(n-1) member over P_n gives the
// truncated resolvent. Coefficients stay integral because the inputs are.
struct PolynomialSequence {
  PolyFamily family = PolyFamily::P;
  // coeffs[n][j] = coefficient of x^j in the degree-n polynomial
  std::vector<std::vector<std::int64_t>> coeffs;
};

inline PolynomialSequence poly_recurrence(const JacobiSequence& jac, int n,
                                          PolyFamily family) {
  if (n < 0) throw std::invalid_argument("poly_recurrence: negative degree");
  const int shift = family == PolyFamily::Q1 ? 1 : 0;
  // degree n consumes alpha_{1+shift}..alpha_{n+shift} and omega_{1+shift}..omega_{n-1+shift}
  if (n + shift > static_cast<int>(jac.alpha.size()) ||
      (n >= 1 && n - 1 + shift > static_cast<int>(jac.omega.size())))
    throw std::out_of_range("poly_recurrence: degree exceeds available levels");

  PolynomialSequence seq;
  seq.family = family;
  seq.coeffs.push_back({1});
  if (n >= 1) seq.coeffs.push_back({-jac.alpha[shift], 1});
  for (int m = 1; m < n; ++m) {
    const std::int64_t a = jac.alpha[m + shift];
    const std::int64_t w = jac.omega[m - 1 + shift];
    const auto& cur = seq.coeffs[m];
    const auto& prev = seq.coeffs[m - 1];
    std::vector<std::int64_t> next(m + 2, 0);
    for (int j = 0; j <= m; ++j) next[j + 1] = cur[j];
    for (int j = 0; j <= m; ++j)
      next[j] = detail::checked_sub(next[j], detail::checked_mul(a, cur[j]));
    for (int j = 0; j <= m - 1; ++j)
      next[j] = detail::checked_sub(next[j], detail::checked_mul(w, prev[j]));
    seq.coeffs.push_back(std::move(next));
  }
  return seq;
}

// Three-term evaluation at a point; used everywhere the monomial coefficients
// would be ill-conditioned. shift = 1 evaluates the Q1 family.
template <class Scalar>
Scalar eval_three_term(const JacobiSequence& jac, int m, int shift, Scalar x) {
  if (m < 0 || m + shift > static_cast<int>(jac.alpha.size()) ||
      (m >= 1 && m - 1 + shift > static_cast<int>(jac.omega.size())))
    throw std::out_of_range("eval_three_term: degree exceeds available levels");
  Scalar prev{};
  Scalar cur = Scalar{1};
  for (int j = 0; j < m; ++j) {
    Scalar next = (x - Scalar(double(jac.alpha[j + shift]))) * cur -
                  (j >= 1 ? Scalar(double(jac.omega[j - 1 + shift])) * prev : Scalar{});
    prev = cur;
    cur = next;
  }
  return cur;
}

inline double eval_orthopoly(const JacobiSequence& jac, int m, double x) {
  return eval_three_term<double>(jac, m, 0, x);
}

// Q_{n-1}(x) / P_n'(x): the closed-form Gauss weight at a zero x of P_n.
// Both recurrences grow factorially in n, so every running value carries a
// shared power-of-two rescale to keep large truncations finite.
inline double gauss_weight_ratio(const JacobiSequence& jac, int n, double x) {
  if (n < 1 || n > static_cast<int>(jac.alpha.size()) ||
      n - 1 > static_cast<int>(jac.omega.size()))
    throw std::out_of_range("gauss_weight_ratio: bad truncation level");
  double p_prev = 0.0, p = 1.0;    // P_m, with derivative dp
  double dp_prev = 0.0, dp = 0.0;
  double q_prev = 0.0, q = 1.0;    // Q_m
  int ep = 0, eq = 0;              // true value = stored * 2^exponent

  constexpr double big = 1e150;
  constexpr int shed = 512;
  for (int m = 0; m < n; ++m) {
    const double am = double(jac.alpha[m]);
    const double wm = m >= 1 ? double(jac.omega[m - 1]) : 0.0;
    const double pn = (x - am) * p - wm * p_prev;
    const double dpn = p + (x - am) * dp - wm * dp_prev;
    p_prev = p;
    p = pn;
    dp_prev = dp;
    dp = dpn;
    if (m < n - 1) {
      const double aq = double(jac.alpha[m + 1]);
      const double wq = m >= 1 ? double(jac.omega[m]) : 0.0;
      const double qn = (x - aq) * q - wq * q_prev;
      q_prev = q;
      q = qn;
    }
    if (std::abs(p) > big || std::abs(dp) > big) {
      p = std::ldexp(p, -shed);
      p_prev = std::ldexp(p_prev, -shed);
      dp = std::ldexp(dp, -shed);
      dp_prev = std::ldexp(dp_prev, -shed);
      ep += shed;
    }
    if (std::abs(q) > big) {
      q = std::ldexp(q, -shed);
      q_prev = std::ldexp(q_prev, -shed);
      eq += shed;
    }
  }
  if (dp == 0.0) throw numeric_error("gauss_weight_ratio: derivative vanished");
  return std::ldexp(q / dp, eq - ep);
}

}  // namespace ctqw
