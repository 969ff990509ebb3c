#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ctqw/errors.hpp"

namespace ctqw {

struct TridiagonalEigen {
  std::vector<double> values;             // ascending
  std::vector<std::vector<double>> rows;  // rows[r][l]: requested component of eigenvector l
};

// Implicit-shift QL iteration for a symmetric tridiagonal matrix (EISPACK
// tql2 lineage). diag holds d_0..d_{n-1}, offdiag e_0..e_{n-2} coupling i
// and i+1. Instead of the full eigenvector matrix, only the requested rows
// of it are accumulated, so Gauss weights (row 0) cost O(n^2).
inline TridiagonalEigen tridiagonal_eigen(std::vector<double> d,
                                          std::vector<double> e,
                                          const std::vector<int>& wanted_rows) {
  const int n = static_cast<int>(d.size());
  if (n == 0) throw std::invalid_argument("tridiagonal_eigen: empty matrix");
  if (static_cast<int>(e.size()) != n - 1 && static_cast<int>(e.size()) != n)
    throw std::invalid_argument("tridiagonal_eigen: offdiagonal size mismatch");
  e.resize(n, 0.0);

  std::vector<std::vector<double>> z(wanted_rows.size(),
                                     std::vector<double>(n, 0.0));
  for (std::size_t r = 0; r < wanted_rows.size(); ++r) {
    if (wanted_rows[r] < 0 || wanted_rows[r] >= n)
      throw std::out_of_range("tridiagonal_eigen: requested row out of range");
    z[r][wanted_rows[r]] = 1.0;
  }

  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 50)
          throw numeric_error("tridiagonal_eigen: QL iteration did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (auto& row : z) {
            f = row[i + 1];
            row[i + 1] = s * row[i] + c * f;
            row[i] = c * row[i] - s * f;
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&d](int a, int b) { return d[a] < d[b]; });

  TridiagonalEigen out;
  out.values.resize(n);
  out.rows.assign(z.size(), std::vector<double>(n));
  for (int l = 0; l < n; ++l) {
    out.values[l] = d[order[l]];
    for (std::size_t r = 0; r < z.size(); ++r) out.rows[r][l] = z[r][order[l]];
  }
  return out;
}

}  // namespace ctqw
