#include "qcb/gaussian.hpp"

#include <random>

#include "doctest.h"
#include "fock_oracle.hpp"
#include "qcb/entropy.hpp"
#include "qcb/errors.hpp"

using namespace qcb;

namespace {

constexpr int kCutoff = 200;

GaussianState zero_mean(CovarianceMatrix v) { return GaussianState(std::move(v)); }

CovarianceMatrix random_state_cm(int modes, std::uint64_t seed, double max_nbar) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> nb(0.0, max_nbar);
  Eigen::VectorXd d(2 * modes);
  for (int k = 0; k < modes; ++k) {
    d(k) = nb(rng) + 0.5;
    d(modes + k) = d(k);
  }
  const Eigen::MatrixXd s = random_symplectic(modes, rng());
  return CovarianceMatrix(s * d.asDiagonal() * s.transpose());
}

}  // namespace

TEST_CASE("von Neumann entropy of reference states") {
  CHECK(von_neumann_entropy(zero_mean(CovarianceMatrix::vacuum(1))) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(zero_mean(CovarianceMatrix::thermal(1.0))) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(zero_mean(CovarianceMatrix::tmsv(5.0))) <
        1e-7);
}

TEST_CASE("sigma functional reference values") {
  const Eigen::VectorXd zero2 = Eigen::VectorXd::Zero(2);

  SUBCASE("Sigma(V,V,0) equals the entropy for thermal nbar=1") {
    const double sig = sigma_functional(CovarianceMatrix::thermal(1.0),
                                        CovarianceMatrix::thermal(1.0), zero2);
    CHECK(sig == doctest::Approx(2.0).epsilon(1e-12));
  }

  SUBCASE("Sigma(vacuum, thermal nbar=1) against the Fock oracle") {
    // Frozen from the oracle: -Tr(rho_vac log2 rho_th) = log2(nbar+1) = 1.
    const auto vac = testing::fock_gaussian(0.5, 0, 0, 0, kCutoff);
    const auto th = testing::fock_gaussian(1.5, 0, 0, 0, kCutoff);
    const double oracle = testing::fock_sigma_bits(vac.rho, th);
    CHECK(oracle == doctest::Approx(1.0).epsilon(1e-9));

    const double sig = sigma_functional(CovarianceMatrix::vacuum(1),
                                        CovarianceMatrix::thermal(1.0), zero2);
    CHECK(sig == doctest::Approx(oracle).epsilon(1e-9));
  }

  SUBCASE("pure reference with larger-support input diverges") {
    const double sig = sigma_functional(CovarianceMatrix::thermal(1.0),
                                        CovarianceMatrix::vacuum(1), zero2);
    CHECK(std::isinf(sig));
  }
}

TEST_CASE("relative entropy reference values") {
  SUBCASE("identical states give zero") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      GaussianState s = zero_mean(random_state_cm(2, seed, 2.0));
      CHECK(relative_entropy(s, s) == doctest::Approx(0.0).epsilon(1e-12));
    }
  }
  SUBCASE("vacuum vs thermal") {
    const GaussianState vac = zero_mean(CovarianceMatrix::vacuum(1));
    for (double nbar : {0.5, 1.0, 2.0}) {
      const GaussianState th = zero_mean(CovarianceMatrix::thermal(nbar));
      CHECK(relative_entropy(vac, th) ==
            doctest::Approx(std::log2(nbar + 1.0)).epsilon(1e-10));
    }
  }
  SUBCASE("thermal vs vacuum diverges") {
    CHECK(std::isinf(relative_entropy(zero_mean(CovarianceMatrix::thermal(1.0)),
                                      zero_mean(CovarianceMatrix::vacuum(1)))));
  }
}

TEST_CASE("relative entropy agrees with the Fock-basis oracle on a grid") {
  // 5 single-mode squeezed thermal states; all ordered pairs (nu <= 3).
  struct P {
    double nu, r, theta;
  };
  const std::vector<P> params = {{0.7, 0.0, 0.0},
                                 {1.0, 0.2, 0.3},
                                 {1.5, -0.15, 0.0},
                                 {2.2, 0.3, 1.1},
                                 {3.0, 0.1, -0.7}};
  std::vector<testing::FockGaussian> fock;
  std::vector<GaussianState> states;
  for (const auto& p : params) {
    fock.push_back(testing::fock_gaussian(p.nu, p.r, p.theta, 0.0, kCutoff));
    states.push_back(testing::gaussian_from_fock(fock.back().rho));
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (std::size_t j = 0; j < params.size(); ++j) {
      const double oracle = testing::fock_relative_entropy_bits(fock[i], fock[j]);
      const double ours = relative_entropy(states[i], states[j]);
      CAPTURE(i);
      CAPTURE(j);
      CHECK(ours == doctest::Approx(oracle).epsilon(1e-6));
    }
  }
}

TEST_CASE("displaced states against the oracle exercise the delta term") {
  const std::complex<double> alpha(0.6, -0.4);
  const auto f1 = testing::fock_gaussian(1.2, 0.0, 0.0, alpha, kCutoff);
  const auto f2 = testing::fock_gaussian(0.8, 0.1, 0.2, 0.0, kCutoff);
  const GaussianState s1 = testing::gaussian_from_fock(f1.rho);
  const GaussianState s2 = testing::gaussian_from_fock(f2.rho);
  const double oracle = testing::fock_relative_entropy_bits(f1, f2);
  CHECK(relative_entropy(s1, s2) == doctest::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("properties: nonnegativity, entropy identity, displacement covariance") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const int modes = 1 + static_cast<int>(seed % 2);
    GaussianState s1 = zero_mean(random_state_cm(modes, seed, 2.0));
    GaussianState s2 = zero_mean(random_state_cm(modes, seed + 50, 2.0));
    const double rel = relative_entropy(s1, s2);
    CHECK(rel >= -1e-10);

    const double ent = von_neumann_entropy(s1);
    const double sig = sigma_functional(s1.cm, s1.cm,
                                        Eigen::VectorXd::Zero(2 * modes));
    CHECK(ent == doctest::Approx(sig).epsilon(1e-10));

    Eigen::VectorXd shift(2 * modes);
    for (int i = 0; i < shift.size(); ++i) shift(i) = u(rng);
    GaussianState t1(s1.mean + shift, s1.cm);
    GaussianState t2(s2.mean + shift, s2.cm);
    CHECK(relative_entropy(t1, t2) == doctest::Approx(rel).epsilon(1e-9));
  }
}
