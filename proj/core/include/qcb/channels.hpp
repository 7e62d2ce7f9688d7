#pragma once

#include <Eigen/Dense>
#include <string>
#include <variant>
#include <vector>

#include "qcb/symplectic.hpp"

namespace qcb {

// ---- channel families -----------------------------------------------------

/// Thermal-loss channel with transmissivity eta in [0,1] and nbar thermal
/// photons in the environment; nbar = 0 is the (pure-)lossy channel.
struct ThermalLoss {
  double eta;
  double nbar = 0.0;
};

/// Amplifier with gain g > 1 and nbar thermal photons; nbar = 0 is the
/// quantum-limited amplifier.
struct Amplifier {
  double gain;
  double nbar = 0.0;
};

/// Additive-noise Gaussian channel with noise variance xi >= 0.
struct AdditiveNoise {
  double xi;
};

struct ConjugateAmplifier {};
struct FormA2 {};
struct FormB1 {};

/// Qudit Pauli (Weyl) channel with probabilities p_ab, row-major in (a, b).
struct PauliQudit {
  int d;
  std::vector<double> probs;  // size d*d, index a*d + b
};

struct Depolarizing {
  int d;
  double p;
};

/// Generalized dephasing: probability P_i of i phase flips Z^i.
struct Dephasing {
  int d;
  std::vector<double> probs;  // size d
};

struct Erasure {
  int d;
  double p;
};

struct AmplitudeDamping {
  double p;
};

using ChannelSpec =
    std::variant<ThermalLoss, Amplifier, AdditiveNoise, ConjugateAmplifier,
                 FormA2, FormB1, PauliQudit, Depolarizing, Dephasing, Erasure,
                 AmplitudeDamping>;

/// Range/normalization validation; throws DomainError.
void validate(const ChannelSpec& c);

bool is_gaussian(const ChannelSpec& c);
bool is_dv(const ChannelSpec& c);
/// Short display form, e.g. "thermal-loss:eta=0.5,nbar=1".
std::string describe(const ChannelSpec& c);

// ---- Choi constructions ---------------------------------------------------

/// Quasi-Choi state of a Gaussian channel fed with half a TMSV of variance mu.
struct QuasiChoiCM {
  double mu;
  CovarianceMatrix cm;  // [[mu, gamma],[gamma, beta]] two-mode block form
  double beta;
  double gamma;
};

/// CM of the finite-energy Choi state: beta = eta mu + |1-eta| (nbar + 1/2) +
/// xi and gamma = sqrt(eta (mu^2 - 1/4)); the amplifier gain plays the role
/// of eta > 1.  Throws NotGaussianFamilyError for DV or pathological forms.
QuasiChoiCM gaussian_choi_cm(const ChannelSpec& c, double mu);

/// Most-correlated separable two-mode state with the same diagonals: the
/// off-diagonal is replaced by sqrt((mu - 1/2)(beta - 1/2)).
struct SeparableCM {
  CovarianceMatrix cm;
  bool was_already_separable;
};
SeparableCM closest_separable_cm(const QuasiChoiCM& q);

/// Exact Choi matrix of a DV channel on a d x d (erasure: d x (d+1))
/// bipartite space; trace one, positive semidefinite.
Eigen::MatrixXcd dv_choi(const ChannelSpec& c);

/// Entanglement-breaking predicate for the Gaussian families (thresholds
/// inclusive); DV families return false.
bool is_entanglement_breaking(const ChannelSpec& c);

}  // namespace qcb
