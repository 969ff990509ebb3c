#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ctqw/errors.hpp"
#include "ctqw/odd_graph.hpp"

namespace ctqw {

// Reference evolution e^{-iAt}|origin> on the full vertex space, by a dense
// symmetric eigendecomposition of the adjacency matrix. One decomposition
// serves any number of times, which is why this is not Pade scaling.
// Feasible for k <= k_max_graph only; it exists to cross-validate the
// spectral route, not to replace it.
class DirectOracle {
 public:
  DirectOracle(const OddGraph& g, const Stratification& strat) {
    const int n = g.vertex_count();
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (int v = 0; v < n; ++v)
      for (int w : g.neighbors[v]) A(v, w) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    if (es.info() != Eigen::Success)
      throw numeric_error("DirectOracle: eigendecomposition failed");
    evals_ = es.eigenvalues();
    evecs_ = es.eigenvectors();
    origin_components_ = evecs_.row(strat.origin).transpose();

    const int levels = strat.diameter + 1;
    proj_ = Eigen::MatrixXd::Zero(levels, n);
    for (int i = 0; i < levels; ++i) {
      Eigen::VectorXd phi = Eigen::VectorXd::Zero(n);
      const double a = 1.0 / std::sqrt(static_cast<double>(strat.sizes[i]));
      for (int v : strat.strata[i]) phi(v) = a;
      proj_.row(i) = (phi.transpose() * evecs_);  // <phi_i | v_j>
    }
  }

  int levels() const { return static_cast<int>(proj_.rows()); }

  // q_0..q_d at time t: projections of the evolved state onto the stratum vectors.
  std::vector<std::complex<double>> amplitudes(double t) const {
    std::vector<std::complex<double>> q(levels(), 0.0);
    for (int j = 0; j < evals_.size(); ++j) {
      const std::complex<double> ph =
          origin_components_(j) * std::polar(1.0, -evals_(j) * t);
      for (int i = 0; i < levels(); ++i) q[i] += proj_(i, j) * ph;
    }
    return q;
  }

  // The full evolved state, one complex amplitude per vertex.
  std::vector<std::complex<double>> vertex_state(double t) const {
    const int n = static_cast<int>(evals_.size());
    std::vector<std::complex<double>> psi(n, 0.0);
    for (int j = 0; j < n; ++j) {
      const std::complex<double> ph =
          origin_components_(j) * std::polar(1.0, -evals_(j) * t);
      for (int v = 0; v < n; ++v) psi[v] += evecs_(v, j) * ph;
    }
    return psi;
  }

 private:
  Eigen::VectorXd evals_;
  Eigen::MatrixXd evecs_;
  Eigen::VectorXd origin_components_;  // v_j[origin]
  Eigen::MatrixXd proj_;               // levels x n
};

inline std::vector<std::complex<double>> direct_oracle(const OddGraph& g,
                                                       const Stratification& strat,
                                                       double t) {
  return DirectOracle(g, strat).amplitudes(t);
}

}  // namespace ctqw
