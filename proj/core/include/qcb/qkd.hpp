#pragma once

#include <string>
#include <variant>

#include "qcb/rate.hpp"

namespace qcb {

// Benchmark protocols with ideal devices and asymptotic keys.
struct NoSwitching {};
struct Switching {};
struct CvMdiSym {};
/// Asymmetric CV MDI with fixed Alice-relay / Bob-relay transmissivities;
/// the total channel transmissivity is etaA * etaB.
struct CvMdiAsym {
  double etaA;
  double etaB;
};
struct TwoWayHet {};
struct TwoWayHom {};
struct Bb84SinglePhoton {};
struct Bb84Decoy {};
struct DvMdi {};

using ProtocolId = std::variant<NoSwitching, Switching, CvMdiSym, CvMdiAsym,
                                TwoWayHet, TwoWayHom, Bb84SinglePhoton,
                                Bb84Decoy, DvMdi>;

std::string protocol_name(const ProtocolId& p);

/// Ideal asymptotic secret-key rate in bits per channel use over a lossy
/// channel of total transmissivity eta in (0,1); negative closed forms
/// (CV MDI at long distance) clamp to zero with the flag set.  For
/// CvMdiAsym the passed eta must equal etaA * etaB.  Throws DomainError
/// out of range.
ClampedRate ideal_rate(const ProtocolId& p, double eta);

/// lim_{eta -> 0} rate/eta, computed numerically at eta = 1e-5 with a
/// Richardson step at eta = 1e-6.
double asymptotic_slope(const ProtocolId& p);

/// Pre-optimized intensity-dependent forms, exposed for the optimizer tests:
/// decoy-state BB84 at intensity mu and DV MDI at intensities muA, muB.
double bb84_decoy_rate_mu(double eta, double mu);
double dvmdi_rate_mu(double etaA, double etaB, double muA, double muB);

}  // namespace qcb
