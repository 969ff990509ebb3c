#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "ctqw/dawson.hpp"
#include "ctqw/intersection.hpp"
#include "ctqw/jacobi.hpp"
#include "ctqw/spectral.hpp"
#include "ctqw/tridiagonal.hpp"
#include "ctqw/walk.hpp"

namespace ctqw {

// Amplitudes of the k -> infinity rescaled walk, against the limiting
// spectral density |x| e^{-x^2}. With D = dawson(t/2):
//   q_0 = 1 - t D
//   q_1 = (i/2) ((t^2 - 2) D - t)
//   q_2 = (t (t^2 - 2) D - t^2) / 4
//   q_3 = (i / (8 sqrt 2)) ((-t^4 + 4 t^2 + 4) D + t^3 - 2 t)
// Everything is Dawson-rewritten: the erf-of-imaginary-argument form
// overflows near t = 54, these expressions never do.

inline std::complex<double> q0_limit(double t) {
  return {1.0 - t * dawson(0.5 * t), 0.0};
}

inline std::complex<double> qm_limit_closed(int m, double t) {
  const double D = dawson(0.5 * t);
  switch (m) {
    case 1:
      return {0.0, 0.5 * ((t * t - 2.0) * D - t)};
    case 2:
      return {0.25 * (t * (t * t - 2.0) * D - t * t), 0.0};
    case 3: {
      const double t2 = t * t;
      return {0.0, ((-t2 * t2 + 4.0 * t2 + 4.0) * D + t2 * t - 2.0 * t) /
                       (8.0 * std::sqrt(2.0))};
    }
    default:
      throw std::invalid_argument(
          "qm_limit_closed: closed forms cover m in {1,2,3}, got " +
          std::to_string(m));
  }
}

// Gauss nodes needed so that e^{-ixt} P_m is integrated to roughly double
// precision against the limit measure. 40 extra levels over m is the floor;
// the oscillation at large t costs about one node per 0.4 time units.
inline int default_limit_levels(int m, double t) {
  const int by_t = 40 + static_cast<int>(std::ceil(2.5 * std::abs(t)));
  return std::max(m + 40, by_t);
}

inline std::complex<double> qm_limit_quadrature(int m, double t, int levels = 0) {
  if (m < 0) throw std::invalid_argument("qm_limit_quadrature: m must be >= 0");
  if (levels <= 0) levels = default_limit_levels(m, t);
  if (m >= levels)
    throw std::out_of_range("qm_limit_quadrature: m = " + std::to_string(m) +
                            " beyond configured level count " +
                            std::to_string(levels));
  const JacobiSequence jac = jacobi_limit(levels);
  const SpectralMeasure mu = gauss_measure(jac, levels);
  return amplitude(mu, jac, m, t);
}

// The limit measure itself: density |x| e^{-x^2} plus the Gauss rule that
// integrates against it. The truncation radius bounds the support needed by
// any direct integration; the tail mass beyond 8 is ~e^{-64}.
struct LimitMeasure {
  double truncation_radius = 8.0;
  SpectralMeasure quadrature_rule;

  static double density(double x) { return std::abs(x) * std::exp(-x * x); }
};

inline LimitMeasure limit_measure(int n_points) {
  LimitMeasure lm;
  lm.quadrature_rule = gauss_measure(jacobi_limit(n_points), n_points);
  return lm;
}

// Truncated continued fraction of the limit resolvent (omega = 1,1,2,2,...).
inline std::complex<double> stieltjes_limit(std::complex<double> z, int depth) {
  if (z.imag() == 0.0)
    throw std::invalid_argument("stieltjes_limit: z must be off the real axis");
  return stieltjes_cf(jacobi_limit(depth), z, depth);
}

struct ConvergenceRow {
  int k = 0;
  std::complex<double> finite;  // <phi_m| e^{-i t A_k / sqrt k} |phi_0>
  std::complex<double> limit;
  double gap = 0.0;
};

struct ConvergenceTable {
  int m = 0;
  double t = 0.0;
  JacobiMode finite_mode = JacobiMode::exact;
  std::vector<ConvergenceRow> rows;
  bool monotone_decreasing = true;  // informational; small k may wobble
};

// Finite-k side of the limit statement, entirely through the k x k
// coefficient matrix: no vertex set is ever built, so k can reach thousands.
inline ConvergenceTable convergence_experiment(const std::vector<int>& k_list,
                                               int m, double t,
                                               JacobiMode finite_mode = JacobiMode::exact) {
  if (m < 0) throw std::invalid_argument("convergence_experiment: m must be >= 0");
  if (finite_mode == JacobiMode::limit)
    throw std::invalid_argument("convergence_experiment: finite mode must be paper or exact");

  ConvergenceTable table;
  table.m = m;
  table.t = t;
  table.finite_mode = finite_mode;

  const std::complex<double> limit_value =
      m == 0 ? q0_limit(t)
             : (m <= 3 ? qm_limit_closed(m, t) : qm_limit_quadrature(m, t));

  for (const int k : k_list) {
    if (k < std::max(3, m + 1))
      throw std::invalid_argument("convergence_experiment: k = " + std::to_string(k) +
                                  " too small for m = " + std::to_string(m));
    const JacobiSequence jac =
        jacobi_from_intersection(closed_form_intersection(k), finite_mode);
    const double scale = 1.0 / std::sqrt(static_cast<double>(k));
    std::vector<double> diag(k), off(k - 1);
    for (int i = 0; i < k; ++i) diag[i] = double(jac.alpha[i]) * scale;
    for (int i = 0; i + 1 < k; ++i) off[i] = std::sqrt(double(jac.omega[i])) * scale;
    const auto eig = tridiagonal_eigen(std::move(diag), std::move(off),
                                       m == 0 ? std::vector<int>{0}
                                              : std::vector<int>{0, m});
    std::complex<double> finite = 0.0;
    const auto& row0 = eig.rows[0];
    const auto& rowm = eig.rows[m == 0 ? 0 : 1];
    for (int l = 0; l < k; ++l)
      finite += rowm[l] * row0[l] * std::polar(1.0, -eig.values[l] * t);

    ConvergenceRow row;
    row.k = k;
    row.finite = finite;
    row.limit = limit_value;
    row.gap = std::abs(finite - limit_value);
    if (!table.rows.empty() && row.gap >= table.rows.back().gap)
      table.monotone_decreasing = false;
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace ctqw
