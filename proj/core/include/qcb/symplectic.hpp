#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace qcb {

/// Tolerances used across the symplectic layer.
inline constexpr double kSymTol = 1e-12;     // relative symmetry tolerance
inline constexpr double kNuTol = 1e-10;      // uncertainty slack on nu >= 1/2
inline constexpr double kEpsPure = 1e-9;     // |nu - 1/2| below this is a pure mode

/// Symplectic form in (q1..qn, p1..pn) ordering: Omega = [[0, I], [-I, 0]].
Eigen::MatrixXd omega(int modes);

/// Covariance matrix of quadrature second moments, hbar-units with vacuum
/// variance 1/2.  Quadrature ordering is (q-block, p-block).
struct CovarianceMatrix {
  Eigen::MatrixXd m;

  CovarianceMatrix() = default;
  explicit CovarianceMatrix(Eigen::MatrixXd entries) : m(std::move(entries)) {}

  int modes() const { return static_cast<int>(m.rows()) / 2; }

  static CovarianceMatrix vacuum(int modes);
  static CovarianceMatrix thermal(double nbar);
  /// Two-mode squeezed vacuum with variance mu = nbar + 1/2 >= 1/2.
  static CovarianceMatrix tmsv(double mu);
  /// Two-mode CM [[a,c],[c,b]] (+) [[a,-c],[-c,b]] in the 2x2-block form.
  static CovarianceMatrix two_mode(double a, double b, double c);
};

struct SymplecticSpectrum {
  std::vector<double> nu;  // sorted descending, nu_k >= 1/2

  std::vector<double> thermal_numbers() const {
    std::vector<double> nb(nu.size());
    for (std::size_t k = 0; k < nu.size(); ++k) nb[k] = nu[k] - 0.5;
    return nb;
  }
  double min_nu() const;
  bool has_pure_mode() const;
};

struct GibbsMatrix {
  Eigen::MatrixXd m;
  std::vector<bool> singular_flags;  // per mode, nu_k within kEpsPure of 1/2
};

/// Williamson decomposition V = S * diag(nu; nu) * S^T with S symplectic.
/// nu is sorted descending.  V must be symmetric positive definite.
struct WilliamsonForm {
  Eigen::MatrixXd S;
  std::vector<double> nu;
};
WilliamsonForm williamson(const CovarianceMatrix& v);

/// Checks symmetry and the uncertainty principle, returns the symplectic
/// spectrum (moduli of the eigenvalues of i*Omega*V).
/// Throws NotSymmetricError / UncertaintyViolationError.
SymplecticSpectrum validate_cm(const CovarianceMatrix& v);

/// Gibbs matrix G = 2 i Omega coth^{-1}(2 V i Omega), evaluated by applying
/// the scalar inverse hyperbolic cotangent to the symplectic spectrum in the
/// Williamson basis.  Throws SingularSpectrumError when some nu_k <= 1/2 +
/// kEpsPure; callers must use the singular-sum path instead.
GibbsMatrix gibbs_matrix(const CovarianceMatrix& v);

/// Inverse of gibbs_matrix: V = (1/2) coth(i Omega G / 2) i Omega.
CovarianceMatrix cm_from_gibbs(const Eigen::MatrixXd& g);

/// Random symplectic built from random passive (orthogonal-symplectic)
/// rotations and single-mode squeezers; satisfies S Omega S^T = Omega.
Eigen::MatrixXd random_symplectic(int modes, std::uint64_t seed);

/// Deterministic builder: passive layers around per-mode squeezers with the
/// given squeezing parameters r_k (empty or all-zero r with trivial angles
/// gives the identity).
Eigen::MatrixXd make_symplectic(int modes, const std::vector<double>& squeeze,
                                std::uint64_t rotation_seed);

/// Stable symplectic eigenvalues (nu_plus, nu_minus) of the two-mode CM
/// [[a,c],[c,b]] (+) [[a,-c],[-c,b]].
std::pair<double, double> two_mode_symplectic_eigs(double a, double b,
                                                   double c);

}  // namespace qcb
