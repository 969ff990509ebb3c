#pragma once

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "ctqw/jacobi.hpp"
#include "ctqw/odd_graph.hpp"

namespace ctqw {

// Splitting of the adjacency action by stratum offset: every neighbor of a
// vertex sits one level up, one level down, or on the same level, so the
// three parts partition the edge set. The lowering part is the transpose of
// the raising part; the level-preserving part is symmetric.
struct QuantumDecomposition {
  std::vector<std::vector<int>> up;    // neighbors one stratum further out
  std::vector<std::vector<int>> same;  // neighbors on the same stratum
  std::vector<std::vector<int>> down;  // neighbors one stratum closer in

  // Raising: amplitude entering v comes from its down-neighbors.
  std::vector<double> apply_raise(const std::vector<double>& x) const {
    std::vector<double> out(x.size(), 0.0);
    for (std::size_t v = 0; v < x.size(); ++v)
      for (int u : down[v]) out[v] += x[u];
    return out;
  }

  std::vector<double> apply_lower(const std::vector<double>& x) const {
    std::vector<double> out(x.size(), 0.0);
    for (std::size_t v = 0; v < x.size(); ++v)
      for (int u : up[v]) out[v] += x[u];
    return out;
  }

  std::vector<double> apply_stay(const std::vector<double>& x) const {
    std::vector<double> out(x.size(), 0.0);
    for (std::size_t v = 0; v < x.size(); ++v)
      for (int u : same[v]) out[v] += x[u];
    return out;
  }
};

inline QuantumDecomposition quantum_decompose(const OddGraph& g,
                                              const Stratification& strat) {
  if (static_cast<int>(strat.level_of.size()) != g.vertex_count())
    throw std::invalid_argument("quantum_decompose: graph and stratification disagree");
  QuantumDecomposition qd;
  const int n = g.vertex_count();
  qd.up.resize(n);
  qd.same.resize(n);
  qd.down.resize(n);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors[v]) {
      const int dl = strat.level_of[w] - strat.level_of[v];
      if (dl == 1)
        qd.up[v].push_back(w);
      else if (dl == -1)
        qd.down[v].push_back(w);
      else
        qd.same[v].push_back(w);
    }
  return qd;
}

struct LadderReport {
  double tolerance = 0.0;
  std::vector<double> raise_dev;  // per level, max-norm deviation
  std::vector<double> lower_dev;
  std::vector<double> stay_dev;
  double max_dev = 0.0;
  bool ok = false;
};

// Applies the three parts to each normalized stratum vector and checks the
// ladder coefficients: raising scales by sqrt(omega_{i+1}) into level i+1,
// lowering by sqrt(omega_i) into level i-1, staying by alpha_{i+1}. Only the
// exact-mode sequence carries the true diagonal, so only it can be verified.
inline LadderReport verify_ladder_action(const QuantumDecomposition& qd,
                                         const Stratification& strat,
                                         const JacobiSequence& jac,
                                         double tolerance = 1e-12) {
  if (jac.mode != JacobiMode::exact)
    throw std::invalid_argument("verify_ladder_action: needs the exact-mode sequence");
  const int n = static_cast<int>(strat.level_of.size());
  const int levels = strat.diameter + 1;
  if (jac.n_levels() < levels)
    throw std::invalid_argument("verify_ladder_action: sequence too short");

  std::vector<std::vector<double>> phi(levels, std::vector<double>(n, 0.0));
  for (int i = 0; i < levels; ++i) {
    const double a = 1.0 / std::sqrt(static_cast<double>(strat.sizes[i]));
    for (int v : strat.strata[i]) phi[i][v] = a;
  }

  auto max_abs_diff = [n](const std::vector<double>& x, const std::vector<double>& y) {
    double m = 0.0;
    for (int v = 0; v < n; ++v) m = std::max(m, std::abs(x[v] - y[v]));
    return m;
  };
  auto scaled = [n](const std::vector<double>& x, double s) {
    std::vector<double> out(n, 0.0);
    for (int v = 0; v < n; ++v) out[v] = s * x[v];
    return out;
  };

  LadderReport rep;
  rep.tolerance = tolerance;
  const std::vector<double> zero(n, 0.0);
  for (int i = 0; i < levels; ++i) {
    const auto raised = qd.apply_raise(phi[i]);
    const auto expected_raise =
        i + 1 < levels ? scaled(phi[i + 1], std::sqrt(double(jac.omega[i]))) : zero;
    rep.raise_dev.push_back(max_abs_diff(raised, expected_raise));

    const auto lowered = qd.apply_lower(phi[i]);
    const auto expected_lower =
        i > 0 ? scaled(phi[i - 1], std::sqrt(double(jac.omega[i - 1]))) : zero;
    rep.lower_dev.push_back(max_abs_diff(lowered, expected_lower));

    const auto stayed = qd.apply_stay(phi[i]);
    rep.stay_dev.push_back(
        max_abs_diff(stayed, scaled(phi[i], double(jac.alpha[i]))));
  }
  for (int i = 0; i < levels; ++i)
    rep.max_dev = std::max({rep.max_dev, rep.raise_dev[i], rep.lower_dev[i],
                            rep.stay_dev[i]});
  rep.ok = rep.max_dev <= tolerance;
  return rep;
}

}  // namespace ctqw
