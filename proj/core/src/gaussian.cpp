#include "qcb/gaussian.hpp"

#include <cmath>

#include "qcb/entropy.hpp"
#include "qcb/errors.hpp"

namespace qcb {

double von_neumann_entropy(const GaussianState& s) {
  SymplecticSpectrum sp = validate_cm(s.cm);
  double total = 0.0;
  for (double nu : sp.nu) total += s_entropy(nu);
  return total;
}

namespace {

// Coefficient threshold below which a pure-direction term counts as zero.
constexpr double kSingularCoeffTol = 1e-9;

}  // namespace

double sigma_functional(const CovarianceMatrix& v1, const CovarianceMatrix& v2,
                        const Eigen::VectorXd& delta) {
  if (v1.m.rows() != v2.m.rows()) {
    throw InvalidCmError("state dimensions differ");
  }
  if (delta.size() != v1.m.rows()) {
    throw InvalidCmError("mean-difference vector has wrong dimension");
  }
  validate_cm(v1);
  SymplecticSpectrum sp2 = validate_cm(v2);
  const int n = v2.modes();

  // Work in the Williamson basis of V2.  Folding the displacement term into
  // the trace, Tr(V1 G2) + delta^T G2 delta = Tr[(V1 + delta delta^T) G2],
  // Sigma becomes (1/2) sum_k sum_{+-} alpha_k^{+-} log2(nu_k -+ ... +- 1/2)
  // with alpha_k^{+-} = 1 +- [(V1')_kk + (V1')_{k+n,k+n}].
  WilliamsonForm wf = williamson(v2);
  const Eigen::MatrixXd sinv = wf.S.inverse();
  const Eigen::MatrixXd v1p =
      sinv * (v1.m + delta * delta.transpose()) * sinv.transpose();

  double sigma = 0.0;
  for (int k = 0; k < n; ++k) {
    const double nu = wf.nu[k];
    const double t = v1p(k, k) + v1p(k + n, k + n);
    const double aplus = 1.0 + t;
    const double aminus = 1.0 - t;
    if (nu <= 0.5 + kEpsPure) {
      // Pure direction: contribution is zero or infinite.
      if (aminus < -kSingularCoeffTol) return kInf;
      if (aminus > kSingularCoeffTol) {
        throw InvalidCmError("negative divergence in singular sum; V1 not bona fide");
      }
      continue;  // alpha^- vanishes and log2(nu + 1/2) = log2(1) = 0
    }
    sigma += 0.5 * (aplus * std::log2(nu + 0.5) + aminus * std::log2(nu - 0.5));
  }
  return sigma;
}

double relative_entropy(const GaussianState& s1, const GaussianState& s2) {
  if (s1.mean.size() != s2.mean.size()) {
    throw InvalidCmError("state dimensions differ");
  }
  const Eigen::VectorXd delta = s1.mean - s2.mean;
  const double cross = sigma_functional(s1.cm, s2.cm, delta);
  if (std::isinf(cross)) return kInf;
  const double value = cross - von_neumann_entropy(s1);
  if (value < 0.0) {
    if (value < -1e-8) {
      throw InvalidCmError("relative entropy came out negative: " +
                           std::to_string(value));
    }
    return 0.0;
  }
  return value;
}

}  // namespace qcb
