#include "qcb/channels.hpp"

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "qcb/errors.hpp"
#include "qcb/telesim.hpp"

using namespace qcb;

namespace {

/// Beamsplitter / two-mode-squeezer dilation oracle: propagate the TMSV CM
/// through the explicit three-mode symplectic and trace out the environment.
CovarianceMatrix dilation_choi_cm(const ChannelSpec& c, double mu) {
  double eta = 1.0, nbar = 0.0, xi = 0.0;
  bool amplifier = false;
  if (const auto* tl = std::get_if<ThermalLoss>(&c)) {
    eta = tl->eta;
    nbar = tl->nbar;
  } else if (const auto* amp = std::get_if<Amplifier>(&c)) {
    eta = amp->gain;
    nbar = amp->nbar;
    amplifier = true;
  } else if (const auto* add = std::get_if<AdditiveNoise>(&c)) {
    xi = add->xi;
  }

  // Modes (A, B, E) in qqpp ordering; 6x6 matrices.
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(6, 6);
  const Eigen::MatrixXd tmsv = CovarianceMatrix::tmsv(mu).m;  // (A,B)
  const int map2[4] = {0, 1, 3, 4};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) v(map2[i], map2[j]) = tmsv(i, j);
  v(2, 2) = nbar + 0.5;
  v(5, 5) = nbar + 0.5;

  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(6, 6);
  if (amplifier) {
    // Two-mode squeezer on (B, E): q -> sqrt(g) q_B + sqrt(g-1) q_E,
    // p -> sqrt(g) p_B - sqrt(g-1) p_E.
    const double ch = std::sqrt(eta), sh = std::sqrt(eta - 1.0);
    s(1, 1) = ch;
    s(1, 2) = sh;
    s(2, 1) = sh;
    s(2, 2) = ch;
    s(4, 4) = ch;
    s(4, 5) = -sh;
    s(5, 4) = -sh;
    s(5, 5) = ch;
  } else if (xi == 0.0) {
    // Beamsplitter on (B, E).
    const double ct = std::sqrt(eta), st = std::sqrt(1.0 - eta);
    s(1, 1) = ct;
    s(1, 2) = st;
    s(2, 1) = -st;
    s(2, 2) = ct;
    s(4, 4) = ct;
    s(4, 5) = st;
    s(5, 4) = -st;
    s(5, 5) = ct;
  }
  Eigen::MatrixXd out = s * v * s.transpose();
  if (xi > 0.0) {
    out(1, 1) += xi;
    out(4, 4) += xi;
  }

  // Keep modes (A, B).
  Eigen::MatrixXd r(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = out(map2[i], map2[j]);
  return CovarianceMatrix(r);
}

/// PPT separability check for the two-mode block form (partial transpose
/// flips the sign of p_B, then the state must still be bona fide).
bool ppt_separable(const CovarianceMatrix& v) {
  Eigen::MatrixXd lam = Eigen::MatrixXd::Identity(4, 4);
  lam(3, 3) = -1.0;
  try {
    validate_cm(CovarianceMatrix(lam * v.m * lam));
    return true;
  } catch (const UncertaintyViolationError&) {
    return false;
  }
}

}  // namespace

TEST_CASE("gaussian quasi-Choi CM reference entries") {
  SUBCASE("eta=1 is the TMSV itself") {
    auto q = gaussian_choi_cm(ThermalLoss{1.0, 0.0}, 2.0);
    CHECK((q.cm.m - CovarianceMatrix::tmsv(2.0).m).cwiseAbs().maxCoeff() < 1e-14);
  }
  SUBCASE("lossy eta=0.5, mu=2") {
    auto q = gaussian_choi_cm(ThermalLoss{0.5, 0.0}, 2.0);
    CHECK(q.beta == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(q.gamma == doctest::Approx(std::sqrt(0.5 * 3.75)).epsilon(1e-14));
  }
  SUBCASE("additive xi=0.5, mu=3") {
    auto q = gaussian_choi_cm(AdditiveNoise{0.5}, 3.0);
    CHECK(q.beta == doctest::Approx(3.5).epsilon(1e-14));
    CHECK(q.gamma == doctest::Approx(std::sqrt(8.75)).epsilon(1e-14));
  }
  SUBCASE("DV families are rejected") {
    CHECK_THROWS_AS(gaussian_choi_cm(Erasure{2, 0.5}, 2.0),
                    NotGaussianFamilyError);
  }
}

TEST_CASE("quasi-Choi CMs match the explicit dilation oracle") {
  std::vector<ChannelSpec> specs;
  for (double eta : {0.2, 0.5, 0.9}) {
    for (double nbar : {0.0, 0.4, 1.1}) specs.push_back(ThermalLoss{eta, nbar});
  }
  specs.push_back(Amplifier{1.6, 0.0});
  specs.push_back(Amplifier{2.0, 0.3});
  specs.push_back(AdditiveNoise{0.35});
  for (const auto& c : specs) {
    for (double mu : {0.5, 2.0, 17.5}) {
      auto q = gaussian_choi_cm(c, mu);
      auto oracle = dilation_choi_cm(c, mu);
      CAPTURE(describe(c));
      CAPTURE(mu);
      CHECK((q.cm.m - oracle.m).cwiseAbs().maxCoeff() < 1e-12);
      CHECK_NOTHROW(validate_cm(q.cm));
    }
  }
}

TEST_CASE("closest separable state") {
  SUBCASE("replaces the off-diagonal and passes PPT") {
    QuasiChoiCM q;
    q.mu = 2.0;
    q.beta = 2.0;
    q.gamma = std::sqrt(2.0 * 2.0 - 0.25);  // strongly entangled
    q.cm = CovarianceMatrix::two_mode(2.0, 2.0, q.gamma);
    auto sep = closest_separable_cm(q);
    CHECK_FALSE(sep.was_already_separable);
    CHECK(sep.cm.m(0, 1) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(ppt_separable(sep.cm));
    CHECK_FALSE(ppt_separable(q.cm));
  }
  SUBCASE("vacuum marginal gives zero correlations") {
    auto q = gaussian_choi_cm(ThermalLoss{0.7, 0.0}, 0.5);
    auto sep = closest_separable_cm(q);
    CHECK(sep.cm.m(0, 1) == doctest::Approx(0.0).epsilon(1e-14));
  }
  SUBCASE("boundary by construction") {
    auto q = gaussian_choi_cm(ThermalLoss{0.9, 0.0}, 10.0);
    auto sep = closest_separable_cm(q);
    const double a = sep.cm.m(0, 0), b = sep.cm.m(1, 1), c = sep.cm.m(0, 1);
    CHECK(c == doctest::Approx(std::sqrt((a - 0.5) * (b - 0.5))).epsilon(1e-12));
  }
}

TEST_CASE("DV Choi matrices") {
  SUBCASE("dephasing p=0 is the Bell state") {
    auto rho = dv_choi(Dephasing{2, {1.0, 0.0}});
    Eigen::MatrixXcd bell = Eigen::MatrixXcd::Zero(4, 4);
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    CHECK((rho - bell).cwiseAbs().maxCoeff() < 1e-14);
  }
  SUBCASE("uniform Pauli twirl is maximally mixed") {
    auto rho = dv_choi(PauliQudit{2, {0.25, 0.25, 0.25, 0.25}});
    CHECK((rho - 0.25 * Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() <
          1e-14);
  }
  SUBCASE("erasure d=2 p=1/2 eigenvalues") {
    auto rho = dv_choi(Erasure{2, 0.5});
    REQUIRE(rho.rows() == 6);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
    std::vector<double> ev(es.eigenvalues().data(),
                           es.eigenvalues().data() + 6);
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    const std::vector<double> expect = {0.5, 0.25, 0.25, 0.0, 0.0, 0.0};
    for (int i = 0; i < 6; ++i) CHECK(ev[i] == doctest::Approx(expect[i]).epsilon(1e-12));
  }
  SUBCASE("dephasing Choi spectrum is the flip distribution itself") {
    const std::vector<double> probs = {0.45, 0.3, 0.15, 0.1};
    auto rho = dv_choi(Dephasing{4, probs});
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
    std::vector<double> ev(es.eigenvalues().data(),
                           es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    for (int i = 0; i < 4; ++i) CHECK(ev[i] == doctest::Approx(probs[i]).epsilon(1e-12));
    for (std::size_t i = 4; i < ev.size(); ++i) CHECK(std::abs(ev[i]) < 1e-13);
  }
  SUBCASE("all DV Choi matrices are PSD with unit trace") {
    std::vector<ChannelSpec> specs = {
        PauliQudit{3, {0.5, 0.1, 0.05, 0.05, 0.1, 0.05, 0.05, 0.05, 0.05}},
        Depolarizing{3, 0.4}, Dephasing{3, {0.6, 0.3, 0.1}}, Erasure{3, 0.3},
        AmplitudeDamping{0.4}};
    for (const auto& c : specs) {
      auto rho = dv_choi(c);
      CAPTURE(describe(c));
      CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
      CHECK(std::abs(rho.trace().imag()) < 1e-14);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
      CHECK(es.eigenvalues().minCoeff() > -1e-12);
    }
  }
  SUBCASE("closed forms agree with the Kraus route") {
    std::vector<ChannelSpec> specs = {
        PauliQudit{2, {0.7, 0.1, 0.1, 0.1}}, Depolarizing{2, 0.3},
        Dephasing{3, {0.6, 0.3, 0.1}}, Erasure{2, 0.25}, AmplitudeDamping{0.5}};
    for (const auto& c : specs) {
      auto direct = dv_choi(c);
      auto via_kraus = choi_of(dv_kraus_channel(c)).rho;
      CAPTURE(describe(c));
      CHECK((direct - via_kraus).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("entanglement-breaking thresholds are inclusive") {
  CHECK(is_entanglement_breaking(ThermalLoss{0.5, 1.0}));       // boundary
  CHECK(is_entanglement_breaking(ThermalLoss{0.5, 1.5}));
  CHECK_FALSE(is_entanglement_breaking(ThermalLoss{0.5, 0.99}));
  CHECK_FALSE(is_entanglement_breaking(AdditiveNoise{0.5}));
  CHECK(is_entanglement_breaking(AdditiveNoise{1.0}));
  CHECK_FALSE(is_entanglement_breaking(Amplifier{2.0, 0.0}));
  CHECK(is_entanglement_breaking(Amplifier{2.0, 1.0}));         // boundary
  CHECK(is_entanglement_breaking(ConjugateAmplifier{}));
  CHECK(is_entanglement_breaking(FormA2{}));
  CHECK_FALSE(is_entanglement_breaking(FormB1{}));
  CHECK_FALSE(is_entanglement_breaking(Erasure{2, 0.9}));
}
