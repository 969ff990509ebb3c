#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctqw/errors.hpp"
#include "ctqw/odd_graph.hpp"

namespace ctqw {

// Intersection numbers in the convention used throughout this library:
// a vertex at distance i from the origin has b[i] of its k neighbors at
// distance i-1, a[i] at distance i, and c[i] at distance i+1, so
// b[0] = c[d] = 0 and c[0] = k. Note that b and c are swapped relative to
// the Brouwer-Cohen-Neumaier convention; the off-diagonal recurrence
// omega_i = c[i-1] * b[i] below assumes this orientation.
struct IntersectionNumbers {
  int k = 0;
  int d = 0;                              // diameter
  std::vector<std::int64_t> a, b, c;      // index 0..d
  std::vector<std::int64_t> shell_sizes;  // k_i; empty when it would overflow
};

// Shell sizes via k_{i+1} = k_i * c_i / b_{i+1} (forward edge count matched
// against backward edge count). Returns an empty vector once a product
// exceeds 64 bits, which happens around k = 34.
inline std::vector<std::int64_t> shell_sizes_from_recursion(
    const IntersectionNumbers& in) {
  std::vector<std::int64_t> sizes{1};
  for (int i = 0; i + 1 <= in.d; ++i) {
    std::int64_t prod = 0;
    if (__builtin_mul_overflow(sizes.back(), in.c[i], &prod)) return {};
    sizes.push_back(prod / in.b[i + 1]);
  }
  return sizes;
}

// Counted directly on the graph. Every vertex of every stratum is visited,
// so a representative-dependent count (impossible for O_k, but the cheap
// guard catches construction bugs) is reported instead of silently averaged.
inline IntersectionNumbers intersection_numbers(const OddGraph& g,
                                                const Stratification& strat) {
  IntersectionNumbers in;
  in.k = g.k;
  in.d = strat.diameter;
  in.a.assign(in.d + 1, 0);
  in.b.assign(in.d + 1, 0);
  in.c.assign(in.d + 1, 0);
  for (int i = 0; i <= in.d; ++i) {
    bool first = true;
    std::int64_t back0 = 0, same0 = 0, fwd0 = 0;
    for (int v : strat.strata[i]) {
      std::int64_t back = 0, same = 0, fwd = 0;
      for (int w : g.neighbors[v]) {
        const int lw = strat.level_of[w];
        if (lw == i - 1)
          ++back;
        else if (lw == i)
          ++same;
        else if (lw == i + 1)
          ++fwd;
        else
          throw consistency_error(
              "intersection_numbers: neighbor crosses more than one stratum");
      }
      if (first) {
        back0 = back;
        same0 = same;
        fwd0 = fwd;
        first = false;
      } else if (back != back0 || same != same0 || fwd != fwd0) {
        throw consistency_error(
            "intersection_numbers: not distance-regular; stratum " +
            std::to_string(i) + " has representative-dependent counts");
      }
    }
    in.b[i] = back0;
    in.a[i] = same0;
    in.c[i] = fwd0;
  }
  for (int i = 0; i <= in.d; ++i)
    if (in.a[i] + in.b[i] + in.c[i] != g.k)
      throw consistency_error(
          "intersection_numbers: counts at level " + std::to_string(i) +
          " do not sum to the degree");
  in.shell_sizes.assign(strat.sizes.begin(), strat.sizes.end());
  return in;
}

// Closed forms for O_k: b alternates ceil(i/2) / i/2 with parity, c is the
// degree minus the same pattern, and a fills in whatever is left of the
// degree. Valid for any k >= 2, so large-k limit experiments never need the
// vertex set.
inline IntersectionNumbers closed_form_intersection(int k) {
  if (k < 2)
    throw std::invalid_argument("closed_form_intersection: k must be >= 2, got " +
                                std::to_string(k));
  IntersectionNumbers in;
  in.k = k;
  in.d = k - 1;
  in.a.assign(k, 0);
  in.b.assign(k, 0);
  in.c.assign(k, 0);
  for (int i = 1; i <= in.d; ++i) in.b[i] = (i % 2 == 0) ? i / 2 : (i + 1) / 2;
  for (int i = 0; i < in.d; ++i) in.c[i] = (i % 2 == 0) ? k - i / 2 : k - (i + 1) / 2;
  for (int i = 0; i <= in.d; ++i) in.a[i] = k - in.b[i] - in.c[i];
  in.shell_sizes = shell_sizes_from_recursion(in);
  return in;
}

}  // namespace ctqw
