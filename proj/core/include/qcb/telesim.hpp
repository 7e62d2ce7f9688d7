#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "qcb/channels.hpp"

namespace qcb {

/// Finite-dimensional density matrix.  Construction checks Hermiticity,
/// unit trace and positivity.
struct DensityMatrix {
  Eigen::MatrixXcd rho;

  DensityMatrix() = default;
  explicit DensityMatrix(Eigen::MatrixXcd m);

  int dim() const { return static_cast<int>(rho.rows()); }
};

/// Qudit channel in Kraus form; sum K^dag K = I within 1e-10.
struct QuditChannel {
  int dim_in = 0;
  int dim_out = 0;
  std::vector<Eigen::MatrixXcd> kraus;

  QuditChannel() = default;
  QuditChannel(int din, int dout, std::vector<Eigen::MatrixXcd> ops);

  Eigen::MatrixXcd apply(const Eigen::MatrixXcd& rho) const;
};

/// Kraus realizations of the DV channel families (erasure maps d -> d+1).
QuditChannel dv_kraus_channel(const ChannelSpec& c);

/// Generalized Pauli U_ab = X^a Z^b with X|j> = |j (+) 1>, Z|j> = w^j |j>,
/// w = exp(2 pi i / d).
Eigen::MatrixXcd generalized_pauli(int d, int a, int b);

/// Bell POVM: d^2 rank-one projectors M_ab = (U_ab (x) I)^dag Phi (U_ab (x) I)
/// summing to the identity.
std::vector<Eigen::MatrixXcd> bell_povm(int d);

/// Maximally entangled state |Phi> = d^{-1/2} sum_i |ii> as a vector.
Eigen::VectorXcd bell_state_vector(int d);

/// Teleportation over a bipartite resource sigma on (d x dB): Bell-measure
/// the input against the A part, apply the k-th correction inverse on the B
/// part.  Default corrections are the teleportation unitaries themselves.
QuditChannel teleport_channel(
    const DensityMatrix& sigma, int dim_a,
    const std::optional<std::vector<Eigen::MatrixXcd>>& corrections = {});

/// Choi matrix (I (x) E)(Phi) on dim_in x dim_out.
DensityMatrix choi_of(const QuditChannel& ch);

/// Outcome of the tele-covariance test; corrections are filled when the
/// channel is covariant.
struct TeleCovariance {
  bool covariant = false;
  std::vector<Eigen::MatrixXcd> corrections;
};

/// Tests whether for every teleportation unitary U_k there is a unitary V_k
/// with E(U_k rho U_k^dag) = V_k E(rho) V_k^dag; V_k is recovered from the
/// channel's action on full-rank inputs and certified on the Choi matrix
/// within 1e-9.  Throws DimensionTooLargeError for dim_in > 4.
TeleCovariance tele_covariance(const QuditChannel& ch);

bool is_tele_covariant(const QuditChannel& ch);

/// Rebuilds the channel by teleporting over its own Choi matrix with the
/// recovered corrections and reports the Choi distance.
struct StretchReport {
  double choi_distance;
  bool covariant;
};
StretchReport stretch_check(const QuditChannel& ch);

}  // namespace qcb
