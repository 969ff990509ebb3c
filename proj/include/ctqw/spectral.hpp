#pragma once

#include <cmath>
#include <complex>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctqw/errors.hpp"
#include "ctqw/jacobi.hpp"
#include "ctqw/polynomials.hpp"
#include "ctqw/tridiagonal.hpp"

namespace ctqw {

struct SpectralAtom {
  double x = 0.0;  // location
  double w = 0.0;  // Gauss weight
};

// Finite atomic measure whose moments reproduce the walk's moment sequence
// up to the truncation level. Atoms ascend in x; weights are positive and
// sum to one.
struct SpectralMeasure {
  JacobiMode mode = JacobiMode::exact;
  int k = 0;
  int n = 0;  // truncation level = number of atoms
  std::vector<SpectralAtom> atoms;

  double total_mass() const {
    double s = 0.0;
    for (const auto& a : atoms) s += a.w;
    return s;
  }
};

// Atom locations are the eigenvalues of the n x n coefficient matrix
// (diagonal alpha, off-diagonal sqrt(omega)); weights are the squared first
// components of its normalized eigenvectors. Every weight is cross-checked
// against the independent ratio Q_{n-1}(x_l)/P_n'(x_l); disagreement beyond
// cross_tol aborts rather than returning a silently wrong measure.
inline SpectralMeasure gauss_measure(const JacobiSequence& jac, int n,
                                     double cross_tol = 1e-10) {
  if (n < 1) throw std::invalid_argument("gauss_measure: need n >= 1");
  if (n > static_cast<int>(jac.alpha.size()) ||
      n - 1 > static_cast<int>(jac.omega.size()))
    throw std::out_of_range("gauss_measure: truncation exceeds available levels");

  std::vector<double> d(n), e(std::max(n - 1, 0));
  for (int i = 0; i < n; ++i) d[i] = double(jac.alpha[i]);
  for (int i = 0; i + 1 < n; ++i) e[i] = std::sqrt(double(jac.omega[i]));
  const auto eig = tridiagonal_eigen(std::move(d), std::move(e), {0});

  SpectralMeasure mu;
  mu.mode = jac.mode;
  mu.k = jac.k;
  mu.n = n;
  mu.atoms.reserve(n);
  for (int l = 0; l < n; ++l) {
    const double w = eig.rows[0][l] * eig.rows[0][l];
    const double w_ratio = gauss_weight_ratio(jac, n, eig.values[l]);
    if (std::abs(w - w_ratio) > cross_tol)
      throw consistency_error(
          "gauss_measure: weight methods disagree at x = " +
          std::to_string(eig.values[l]) + " (eigenvector " + std::to_string(w) +
          " vs ratio " + std::to_string(w_ratio) + ")");
    if (w < 1e-14) {
      std::cerr << "gauss_measure: pruning rounding-level weight " << w
                << " at x = " << eig.values[l] << "\n";
      continue;
    }
    mu.atoms.push_back({eig.values[l], w});
  }
  if (std::abs(mu.total_mass() - 1.0) > 1e-12)
    throw consistency_error("gauss_measure: weights sum to " +
                            std::to_string(mu.total_mass()) + ", not 1");
  return mu;
}

// Bottom-up evaluation of the truncated J-fraction
//   G(z) = 1/(z - alpha_1 - omega_1/(z - alpha_2 - ...)),
// cut after alpha_depth. Division through an intermediate pole is harmless
// in IEEE arithmetic (inf propagates to the correct limit); only a final
// value on top of a pole is an error, reported with the nearest atom.
inline std::complex<double> stieltjes_cf(const JacobiSequence& jac,
                                         std::complex<double> z, int depth) {
  if (depth < 1) throw std::invalid_argument("stieltjes_cf: need depth >= 1");
  if (depth > static_cast<int>(jac.alpha.size()) ||
      depth - 1 > static_cast<int>(jac.omega.size()))
    throw std::out_of_range("stieltjes_cf: depth exceeds available levels");

  std::complex<double> f = z - double(jac.alpha[depth - 1]);
  for (int j = depth - 1; j >= 1; --j)
    f = z - double(jac.alpha[j - 1]) - double(jac.omega[j - 1]) / f;

  if (!(std::abs(f) > 1e-12 * std::max(1.0, std::abs(z)))) {
    const auto mu = gauss_measure(jac, depth);
    double nearest = mu.atoms.front().x;
    for (const auto& a : mu.atoms)
      if (std::abs(a.x - z.real()) < std::abs(nearest - z.real())) nearest = a.x;
    throw numeric_error("stieltjes_cf: z too close to the spectrum; nearest atom at x = " +
                        std::to_string(nearest));
  }
  return 1.0 / f;
}

// Same truncation as a ratio of polynomials, Q_{n-1}(z)/P_n(z).
inline std::complex<double> stieltjes_rational(const JacobiSequence& jac,
                                               std::complex<double> z, int n) {
  if (n < 1) throw std::invalid_argument("stieltjes_rational: need n >= 1");
  const auto P = eval_three_term<std::complex<double>>(jac, n, 0, z);
  const auto Q = eval_three_term<std::complex<double>>(jac, n - 1, 1, z);
  if (std::abs(P) == 0.0)
    throw numeric_error("stieltjes_rational: z is a root of P_n");
  return Q / P;
}

inline std::complex<double> stieltjes_from_atoms(const SpectralMeasure& mu,
                                                 std::complex<double> z) {
  std::complex<double> g = 0.0;
  for (const auto& a : mu.atoms) g += a.w / (z - a.x);
  return g;
}

// Power moments of the measure, m = 0..m_max.
inline std::vector<double> moments(const SpectralMeasure& mu, int m_max) {
  if (m_max < 0) throw std::invalid_argument("moments: m_max must be >= 0");
  std::vector<double> mom(m_max + 1, 0.0);
  for (const auto& a : mu.atoms) {
    double p = a.w;
    for (int m = 0; m <= m_max; ++m) {
      mom[m] += p;
      p *= a.x;
    }
  }
  return mom;
}

}  // namespace ctqw
