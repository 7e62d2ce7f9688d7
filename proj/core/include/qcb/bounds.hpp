#pragma once

#include <string>

#include "qcb/channels.hpp"
#include "qcb/rate.hpp"

namespace qcb {

/// Two-way capacity sandwich for one channel.  `exact` means the closed-form
/// lower and upper coincide (the distillable case, or a zero-capacity one).
struct BoundReport {
  double lower = 0.0;
  double upper = 0.0;
  bool exact = false;
  std::string lower_name;
  std::string upper_name;
  bool lower_clamped = false;
};

/// Reverse coherent information (achievable lower bound) where a closed form
/// exists; negative values clamp to zero.  Throws UnsupportedError for
/// families without one (erasure uses the distillation strategy bound).
ClampedRate reverse_coherent_info(const ChannelSpec& c);

/// Coherent information closed forms (amplifier, additive noise, unital DV
/// channels via log2 d - S(Choi), damping via scalar maximization).
ClampedRate coherent_info(const ChannelSpec& c);

/// Reverse coherent information of the finite-mu quasi-Choi state,
/// s(mu) - s(nu_minus) - s(nu_plus).
double finite_mu_rci(const ChannelSpec& c, double mu);

/// Coherent information of the finite-mu quasi-Choi state.
double finite_mu_ci(const ChannelSpec& c, double mu);

/// Closed-form entanglement flux (REE of the channel's Choi matrix); zero at
/// and beyond the entanglement-breaking thresholds, +infinity for the
/// B1 form and for the noiseless limits (lossy eta=1, additive xi=0).
double entanglement_flux(const ChannelSpec& c);

/// Finite-mu relative entropy S(quasi-Choi || closest separable); converges
/// to entanglement_flux as mu grows.  Returns 0 for EB parameters.
double flux_numeric_limit(const ChannelSpec& c, double mu);

/// Squashed-entanglement bound for amplitude damping,
/// H2(1/2 - p/4) - H2(1 - p/4).
double squashed_damping_bound(double p);

/// General squashing-channel form, (1/2) max_gamma min_eta {...}, evaluated
/// by nested golden-section search.  inner_argmin reports where the inner
/// minimum was attained (1/2 up to tolerance).
struct SquashedMaxMin {
  double value;
  double outer_argmax;
  double inner_argmin;
};
SquashedMaxMin squashed_damping_bound_maxmin(double p);

/// Takeoka-Guha-Wilde comparison bound.  Lossy form when nbar is absent;
/// thermal form with nbar; energy-constrained form when mbar is given.
double tgw_bound(double eta, double nbar = 0.0);
double tgw_bound_constrained(double eta, double mbar);

/// Energy-constrained reverse coherent information of the lossy channel,
/// h(mbar) - h((1-eta) mbar).
double constrained_rci(double eta, double mbar);

/// Classical-communication cost per channel use of the optimal reverse
/// reconciliation protocol over a lossy channel.  Throws DomainError at
/// eta = 0; the limit value is cc_cost_limit().
double cc_cost(double eta);
double cc_cost_limit();

/// Assembles the best closed-form lower and upper bounds.
BoundReport two_way_capacity(const ChannelSpec& c);

}  // namespace qcb
