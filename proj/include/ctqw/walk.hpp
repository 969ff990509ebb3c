#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ctqw/polynomials.hpp"
#include "ctqw/spectral.hpp"

namespace ctqw {

// q_m(t) = (1/sqrt(omega_1..omega_m)) sum_l A_l e^{-i x_l t} P_m(x_l):
// the amplitude of finding the walk on stratum m at time t, with the
// adjacency matrix as Hamiltonian and hbar = 1.
inline std::complex<double> amplitude(const SpectralMeasure& mu,
                                      const JacobiSequence& jac, int m, double t) {
  if (m < 0 || m >= jac.n_levels())
    throw std::out_of_range("amplitude: stratum " + std::to_string(m) +
                            " out of range");
  std::complex<double> acc = 0.0;
  for (const auto& a : mu.atoms)
    acc += a.w * eval_orthopoly(jac, m, a.x) * std::polar(1.0, -a.x * t);
  return acc / amplitude_norm(jac, m);
}

struct AmplitudeSeries {
  JacobiMode mode = JacobiMode::exact;
  int k = 0;
  std::vector<double> t_grid;
  int m_max = 0;
  std::vector<std::vector<std::complex<double>>> q;  // q[ti][m]
  std::vector<std::int64_t> strata_sizes;            // empty when unknown (limit mode)

  // Unit total probability holds only when the series spans the whole
  // truncated system; a breach is recorded here, never dropped.
  bool conservation_checked = false;
  double conservation_tol = 1e-10;
  double conservation_max_dev = 0.0;
  bool conservation_ok = true;
};

inline AmplitudeSeries amplitude_series(const SpectralMeasure& mu,
                                        const JacobiSequence& jac,
                                        std::vector<double> t_grid, int m_max,
                                        std::vector<std::int64_t> strata_sizes = {},
                                        double conservation_tol = 1e-10) {
  if (m_max < 0 || m_max >= jac.n_levels())
    throw std::out_of_range("amplitude_series: m_max out of range");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!std::isfinite(t_grid[i]))
      throw std::invalid_argument("amplitude_series: non-finite time");
    if (i > 0 && t_grid[i] < t_grid[i - 1])
      throw std::invalid_argument("amplitude_series: time grid must be sorted");
  }

  AmplitudeSeries s;
  s.mode = mu.mode;
  s.k = mu.k;
  s.t_grid = std::move(t_grid);
  s.m_max = m_max;
  s.strata_sizes = std::move(strata_sizes);
  s.conservation_tol = conservation_tol;
  s.conservation_checked = m_max + 1 >= static_cast<int>(mu.atoms.size());

  // P_m at the atoms does not depend on t; tabulate once.
  const int n_atoms = static_cast<int>(mu.atoms.size());
  std::vector<std::vector<double>> pm(m_max + 1, std::vector<double>(n_atoms));
  std::vector<double> norm(m_max + 1);
  for (int m = 0; m <= m_max; ++m) {
    norm[m] = amplitude_norm(jac, m);
    for (int l = 0; l < n_atoms; ++l)
      pm[m][l] = eval_orthopoly(jac, m, mu.atoms[l].x);
  }

  s.q.resize(s.t_grid.size());
  for (std::size_t ti = 0; ti < s.t_grid.size(); ++ti) {
    const double t = s.t_grid[ti];
    std::vector<std::complex<double>> phase(n_atoms);
    for (int l = 0; l < n_atoms; ++l) phase[l] = std::polar(1.0, -mu.atoms[l].x * t);
    s.q[ti].resize(m_max + 1);
    double total = 0.0;
    for (int m = 0; m <= m_max; ++m) {
      std::complex<double> acc = 0.0;
      for (int l = 0; l < n_atoms; ++l) acc += mu.atoms[l].w * pm[m][l] * phase[l];
      acc /= norm[m];
      s.q[ti][m] = acc;
      total += std::norm(acc);
    }
    if (s.conservation_checked)
      s.conservation_max_dev = std::max(s.conservation_max_dev, std::abs(total - 1.0));
  }
  s.conservation_ok =
      !s.conservation_checked || s.conservation_max_dev <= conservation_tol;
  return s;
}

// Probability at one vertex of stratum m. The per-vertex amplitude is
// q_m/sqrt(|V_m|): stratum uniformity plus unit total probability over the
// vertices forces the square-root scaling.
inline double vertex_probability(const AmplitudeSeries& s, int m, int t_index) {
  if (t_index < 0 || t_index >= static_cast<int>(s.t_grid.size()))
    throw std::out_of_range("vertex_probability: time index out of range");
  if (m < 0 || m > s.m_max) throw std::out_of_range("vertex_probability: stratum out of range");
  if (m >= static_cast<int>(s.strata_sizes.size()))
    throw std::invalid_argument("vertex_probability: series has no stratum sizes");
  return std::norm(s.q[t_index][m]) / static_cast<double>(s.strata_sizes[m]);
}

}  // namespace ctqw
