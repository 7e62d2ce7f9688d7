// Test-only brute-force oracle: single-mode Gaussian states assembled in a
// truncated Fock basis, with entropies computed from the exact thermal
// spectrum conjugated by the same truncated unitaries.  Nothing here touches
// the covariance-matrix code paths under test.
#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qcb/gaussian.hpp"

namespace qcb::testing {

struct FockGaussian {
  Eigen::MatrixXcd rho;      // W rho_th(nu) W^dag, W = R(theta) S(r) D(alpha)
  Eigen::MatrixXcd log2rho;  // W diag(log2 p_n) W^dag (empty for pure nu=1/2)
  double entropy_bits;       // -sum_n p_n log2 p_n of the exact spectrum
};

/// Truncated state with symplectic eigenvalue nu = nbar + 1/2, squeezing r,
/// rotation theta and displacement alpha.
FockGaussian fock_gaussian(double nu, double r, double theta,
                           std::complex<double> alpha, int cutoff);

/// -Tr(rho1 log2 rho2), stable deep into the thermal tail.
double fock_sigma_bits(const Eigen::MatrixXcd& rho1, const FockGaussian& g2);

/// Tr[rho1 (log2 rho1 - log2 rho2)].
double fock_relative_entropy_bits(const FockGaussian& g1, const FockGaussian& g2);

/// Mean vector and covariance matrix measured numerically from the Fock
/// representation (q = (a + a^dag)/sqrt(2), vacuum variance 1/2).
GaussianState gaussian_from_fock(const Eigen::MatrixXcd& rho);

}  // namespace qcb::testing
