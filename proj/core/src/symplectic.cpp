#include "qcb/symplectic.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "qcb/entropy.hpp"
#include "qcb/errors.hpp"

namespace qcb {

Eigen::MatrixXd omega(int modes) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
  w.topRightCorner(modes, modes) = Eigen::MatrixXd::Identity(modes, modes);
  w.bottomLeftCorner(modes, modes) = -Eigen::MatrixXd::Identity(modes, modes);
  return w;
}

CovarianceMatrix CovarianceMatrix::vacuum(int modes) {
  return CovarianceMatrix(0.5 * Eigen::MatrixXd::Identity(2 * modes, 2 * modes));
}

CovarianceMatrix CovarianceMatrix::thermal(double nbar) {
  return CovarianceMatrix((nbar + 0.5) * Eigen::MatrixXd::Identity(2, 2));
}

CovarianceMatrix CovarianceMatrix::two_mode(double a, double b, double c) {
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(4, 4);
  // (q_A, q_B, p_A, p_B) ordering
  v(0, 0) = a;
  v(1, 1) = b;
  v(0, 1) = v(1, 0) = c;
  v(2, 2) = a;
  v(3, 3) = b;
  v(2, 3) = v(3, 2) = -c;
  return CovarianceMatrix(v);
}

CovarianceMatrix CovarianceMatrix::tmsv(double mu) {
  if (mu < 0.5) throw DomainError("TMSV requires mu >= 1/2");
  const double c = std::sqrt(std::max(0.0, mu * mu - 0.25));
  return two_mode(mu, mu, c);
}

double SymplecticSpectrum::min_nu() const {
  double m = kInf;
  for (double v : nu) m = std::min(m, v);
  return m;
}

bool SymplecticSpectrum::has_pure_mode() const {
  for (double v : nu) {
    if (v <= 0.5 + kEpsPure) return true;
  }
  return false;
}

namespace {

void check_square_even(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) {
    throw InvalidCmError("covariance matrix must be square with even dimension");
  }
}

void check_symmetric(const Eigen::MatrixXd& m) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > kSymTol * scale) {
    throw NotSymmetricError("covariance matrix is not symmetric");
  }
}

}  // namespace

WilliamsonForm williamson(const CovarianceMatrix& v) {
  check_square_even(v.m);
  check_symmetric(v.m);
  const int n = v.modes();
  const Eigen::MatrixXd vs = 0.5 * (v.m + v.m.transpose());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(vs);
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw UncertaintyViolationError("covariance matrix is not positive definite");
  }
  const Eigen::MatrixXd vih =
      es.eigenvectors() *
      es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
      es.eigenvectors().transpose();

  // A = V^{-1/2} Omega V^{-1/2} is antisymmetric; iA is Hermitian with
  // eigenvalues +-1/nu_k.
  const Eigen::MatrixXd a = vih * omega(n) * vih;
  Eigen::MatrixXcd ia = std::complex<double>(0.0, 1.0) * a.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hes(ia);

  // Keep the positive half of the spectrum, largest lambda = smallest nu.
  struct Pair {
    double lambda;
    Eigen::VectorXcd z;
  };
  std::vector<Pair> pos;
  for (int i = 0; i < ia.rows(); ++i) {
    if (hes.eigenvalues()(i) > 0.0) {
      pos.push_back({hes.eigenvalues()(i), hes.eigenvectors().col(i)});
    }
  }
  if (static_cast<int>(pos.size()) != n) {
    throw InvalidCmError("unable to split the symplectic spectrum");
  }
  // Sort by ascending lambda so nu = 1/lambda is descending.
  std::sort(pos.begin(), pos.end(),
            [](const Pair& x, const Pair& y) { return x.lambda < y.lambda; });

  Eigen::MatrixXd o(2 * n, 2 * n);
  std::vector<double> nu(n);
  const double sq2 = std::sqrt(2.0);
  for (int k = 0; k < n; ++k) {
    nu[k] = 1.0 / pos[k].lambda;
    o.col(k) = sq2 * pos[k].z.imag();
    o.col(n + k) = sq2 * pos[k].z.real();
  }

  // S = V^{1/2} O diag(nu)^{-1/2}; then V = S D S^T and S Omega S^T = Omega.
  const Eigen::MatrixXd vh = es.eigenvectors() *
                             es.eigenvalues().cwiseSqrt().asDiagonal() *
                             es.eigenvectors().transpose();
  Eigen::VectorXd dinv(2 * n);
  for (int k = 0; k < n; ++k) {
    dinv(k) = 1.0 / std::sqrt(nu[k]);
    dinv(n + k) = dinv(k);
  }
  WilliamsonForm wf;
  wf.S = vh * o * dinv.asDiagonal();
  wf.nu = std::move(nu);
  return wf;
}

SymplecticSpectrum validate_cm(const CovarianceMatrix& v) {
  check_square_even(v.m);
  check_symmetric(v.m);
  const int n = v.modes();
  const Eigen::MatrixXd vs = 0.5 * (v.m + v.m.transpose());

  // The moduli of the eigenvalues of i Omega V equal the eigenvalues of the
  // Hermitian matrix i V^{1/2} Omega V^{1/2} (similar via V^{1/2}), which is
  // far better conditioned near pure modes than the non-normal product.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(vs);
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw UncertaintyViolationError("covariance matrix is not positive definite");
  }
  const Eigen::MatrixXd vh = es.eigenvectors() *
                             es.eigenvalues().cwiseSqrt().asDiagonal() *
                             es.eigenvectors().transpose();
  const Eigen::MatrixXd b = vh * omega(n) * vh;
  Eigen::MatrixXcd ib = std::complex<double>(0.0, 1.0) * b.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hes(ib);

  SymplecticSpectrum sp;
  sp.nu.reserve(n);
  for (int i = 2 * n - 1; i >= n; --i) sp.nu.push_back(hes.eigenvalues()(i));

  // Rounding in ill-conditioned large CMs (quasi-Choi states at high mu have
  // exactly pure directions) moves nu by O(scale * eps); keep the absolute
  // 1e-10 gate for ordinary scales and widen proportionally beyond.
  const double scale = std::max(1.0, vs.cwiseAbs().maxCoeff());
  const double slack =
      std::max(kNuTol, 4096.0 * std::numeric_limits<double>::epsilon() * scale);
  if (sp.min_nu() < 0.5 - slack) {
    throw UncertaintyViolationError("uncertainty principle violated: min nu = " +
                                    std::to_string(sp.min_nu()));
  }
  for (double& nu : sp.nu) nu = std::max(nu, 0.5);
  return sp;
}

GibbsMatrix gibbs_matrix(const CovarianceMatrix& v) {
  WilliamsonForm wf = williamson(v);
  const int n = v.modes();

  GibbsMatrix g;
  g.singular_flags.resize(n);
  for (int k = 0; k < n; ++k) {
    g.singular_flags[k] = wf.nu[k] <= 0.5 + kEpsPure;
    if (g.singular_flags[k]) {
      throw SingularSpectrumError(
          "Gibbs matrix is singular: nu_" + std::to_string(k) + " = " +
          std::to_string(wf.nu[k]) + " is a pure-mode direction");
    }
  }

  // G(V) = S^{-T} G(D) S^{-1} with G(D) = diag g(nu), g(nu) = 2 acoth(2 nu).
  Eigen::VectorXd gd(2 * n);
  for (int k = 0; k < n; ++k) {
    const double gk = std::log1p(1.0 / (wf.nu[k] - 0.5));  // ln((nu+1/2)/(nu-1/2))
    gd(k) = gk;
    gd(n + k) = gk;
  }
  const Eigen::MatrixXd sinv = wf.S.inverse();
  Eigen::MatrixXd gm = sinv.transpose() * gd.asDiagonal() * sinv;
  g.m = 0.5 * (gm + gm.transpose());
  return g;
}

CovarianceMatrix cm_from_gibbs(const Eigen::MatrixXd& g) {
  check_square_even(g);
  check_symmetric(g);
  const int n = static_cast<int>(g.rows()) / 2;
  const Eigen::MatrixXcd iw =
      std::complex<double>(0.0, 1.0) * omega(n).cast<std::complex<double>>();

  // V = (1/2) coth(i Omega G / 2) i Omega
  Eigen::MatrixXcd arg = 0.5 * iw * g.cast<std::complex<double>>();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(arg);
  Eigen::VectorXcd cothv(2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    const std::complex<double> z = es.eigenvalues()(i);
    cothv(i) = 1.0 / std::tanh(z);
  }
  const Eigen::MatrixXcd p = es.eigenvectors();
  Eigen::MatrixXcd vtil =
      0.5 * p * cothv.asDiagonal() * p.inverse() * iw;
  Eigen::MatrixXd vv = vtil.real();
  return CovarianceMatrix(0.5 * (vv + vv.transpose()));
}

Eigen::MatrixXd make_symplectic(int modes, const std::vector<double>& squeeze,
                                std::uint64_t rotation_seed) {
  if (modes < 1) throw DomainError("need at least one mode");
  const int n = modes;

  auto passive = [n](std::uint64_t seed) {
    // Orthogonal symplectic [[X, Y], [-Y, X]] from a Haar-ish unitary X + iY.
    if (seed == 0) return Eigen::MatrixXd(Eigen::MatrixXd::Identity(2 * n, 2 * n));
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd z(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) z(i, j) = std::complex<double>(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXd s(2 * n, 2 * n);
    s.topLeftCorner(n, n) = q.real();
    s.topRightCorner(n, n) = q.imag();
    s.bottomLeftCorner(n, n) = -q.imag();
    s.bottomRightCorner(n, n) = q.real();
    return s;
  };

  Eigen::VectorXd d = Eigen::VectorXd::Ones(2 * n);
  for (int k = 0; k < n && k < static_cast<int>(squeeze.size()); ++k) {
    d(k) = std::exp(squeeze[k]);
    d(n + k) = std::exp(-squeeze[k]);
  }
  return passive(rotation_seed) * Eigen::MatrixXd(d.asDiagonal()) *
         passive(rotation_seed == 0 ? 0 : rotation_seed + 1);
}

Eigen::MatrixXd random_symplectic(int modes, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_real_distribution<double> r(-0.8, 0.8);
  std::vector<double> sq(modes);
  for (auto& x : sq) x = r(rng);
  const std::uint64_t rot = rng() | 1ull;  // nonzero
  return make_symplectic(modes, sq, rot);
}

namespace {

// Compensated x*y - z*w (Kahan's determinant trick); exact to ~1 ulp even
// when the products cancel almost completely.
double diff_of_products(double x, double y, double z, double w) {
  const double zw = z * w;
  const double err = std::fma(-z, w, zw);
  return std::fma(x, y, -zw) + err;
}

}  // namespace

std::pair<double, double> two_mode_symplectic_eigs(double a, double b, double c) {
  // Cancellation-free forms: Delta = (a-b)^2 + 2 det2 and
  // Delta^2 - 4 det2^2 = (a-b)^2 ((a+b)^2 - 4c^2), with compensated products.
  const double det2 = diff_of_products(a, b, c, c);  // sqrt(det V)
  if (det2 <= 0.0) throw InvalidCmError("two-mode CM is not positive definite");
  const double delta = (a - b) * (a - b) + 2.0 * det2;
  const double disc =
      std::abs(a - b) *
      std::sqrt(std::max(0.0, diff_of_products(a + b, a + b, 2.0 * c, 2.0 * c)));
  const double nup = std::sqrt(0.5 * (delta + disc));
  const double num = det2 / nup;
  return {nup, num};
}

}  // namespace qcb
