#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctqw/intersection.hpp"

namespace ctqw {

enum class JacobiMode { paper, exact, limit };

inline const char* to_string(JacobiMode m) {
  switch (m) {
    case JacobiMode::paper: return "paper";
    case JacobiMode::exact: return "exact";
    case JacobiMode::limit: return "limit";
  }
  return "?";
}

inline JacobiMode jacobi_mode_from_string(const std::string& s) {
  if (s == "paper") return JacobiMode::paper;
  if (s == "exact") return JacobiMode::exact;
  if (s == "limit") return JacobiMode::limit;
  throw std::invalid_argument("unknown Jacobi mode '" + s +
                              "' (expected paper, exact or limit)");
}

// Coefficients of the walk operator restricted to the stratum basis:
// omega[i-1] = omega_i is the squared coupling between levels i-1 and i,
// alpha[i-1] = alpha_i the diagonal entry at level i-1. All three modes are
// integer-valued (products of intersection numbers), so the sequences are
// kept exact and converted to double only at the numeric boundary.
//
//   paper  alpha identically zero; the published model for O_k
//   exact  alpha_{i+1} = a_i, the true restriction of the adjacency matrix
//          (differs from paper only in the last diagonal entry, a_d != 0)
//   limit  omega = 1,1,2,2,3,3,...; alpha = 0; coefficients of the
//          k -> infinity rescaled walk
struct JacobiSequence {
  JacobiMode mode = JacobiMode::exact;
  int k = 0;                        // 0 in limit mode
  std::vector<std::int64_t> omega;  // omega_1..omega_n, all > 0
  std::vector<std::int64_t> alpha;  // alpha_1..alpha_{n+1}

  int n_levels() const { return static_cast<int>(alpha.size()); }

  bool operator==(const JacobiSequence&) const = default;
};

inline JacobiSequence jacobi_from_intersection(const IntersectionNumbers& in,
                                               JacobiMode mode) {
  if (mode == JacobiMode::limit)
    throw std::invalid_argument(
        "jacobi_from_intersection: the limit sequence comes from jacobi_limit");
  JacobiSequence j;
  j.mode = mode;
  j.k = in.k;
  j.omega.resize(in.d);
  for (int i = 1; i <= in.d; ++i) {
    j.omega[i - 1] = in.c[i - 1] * in.b[i];
    if (j.omega[i - 1] <= 0)
      throw consistency_error("jacobi_from_intersection: omega_" +
                              std::to_string(i) + " is not positive");
  }
  j.alpha.assign(in.d + 1, 0);
  if (mode == JacobiMode::exact)
    for (int i = 0; i <= in.d; ++i) j.alpha[i] = in.a[i];
  return j;
}

// omega_i = ceil(i/2): 1,1,2,2,3,3,...  alpha identically zero.
inline JacobiSequence jacobi_limit(int n_omegas) {
  if (n_omegas < 1)
    throw std::invalid_argument("jacobi_limit: need at least one level");
  JacobiSequence j;
  j.mode = JacobiMode::limit;
  j.omega.resize(n_omegas);
  for (int i = 1; i <= n_omegas; ++i) j.omega[i - 1] = (i + 1) / 2;
  j.alpha.assign(n_omegas + 1, 0);
  return j;
}

// sqrt(omega_1 ... omega_m), the normalization of the m-th amplitude.
inline double amplitude_norm(const JacobiSequence& j, int m) {
  if (m < 0 || m > static_cast<int>(j.omega.size()))
    throw std::out_of_range("amplitude_norm: m = " + std::to_string(m) +
                            " exceeds available levels");
  double p = 1.0;
  for (int i = 0; i < m; ++i) p *= static_cast<double>(j.omega[i]);
  return std::sqrt(p);
}

}  // namespace ctqw
