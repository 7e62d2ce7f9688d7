#pragma once

#include <Eigen/Dense>

#include "qcb/symplectic.hpp"

namespace qcb {

/// Multimode Gaussian state: mean quadrature vector plus covariance matrix.
struct GaussianState {
  Eigen::VectorXd mean;
  CovarianceMatrix cm;

  GaussianState(Eigen::VectorXd u, CovarianceMatrix v)
      : mean(std::move(u)), cm(std::move(v)) {}
  explicit GaussianState(CovarianceMatrix v)
      : mean(Eigen::VectorXd::Zero(v.m.rows())), cm(std::move(v)) {}
};

/// Von Neumann entropy in bits, sum of h(nbar_k) over the spectrum.
double von_neumann_entropy(const GaussianState& s);

/// Entropic functional Sigma(V1, V2, delta) = -Tr(rho1 log2 rho2) in bits:
///   [ln det(V2 + i Omega/2) + Tr(V1 G2) + delta^T G2 delta] / (2 ln 2).
/// When V2 has pure-mode directions the sum is evaluated in the Williamson
/// basis of V2, where each pure term contributes 0 or +infinity.
double sigma_functional(const CovarianceMatrix& v1, const CovarianceMatrix& v2,
                        const Eigen::VectorXd& delta);

/// Relative entropy S(rho1 || rho2) = -Sigma(V1,V1,0) + Sigma(V1,V2,delta),
/// extended real >= 0 (+infinity when supports mismatch on a pure direction).
double relative_entropy(const GaussianState& s1, const GaussianState& s2);

}  // namespace qcb
