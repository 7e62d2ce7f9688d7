#pragma once

#include <vector>

#include "qcb/bounds.hpp"
#include "qcb/channels.hpp"

namespace qcb {

/// Fading scenario: channel E_i occurs with probability p_i.
struct ChannelEnsemble {
  struct Member {
    double weight;
    ChannelSpec channel;
  };
  std::vector<Member> members;
};

/// Validates nonemptiness and weight normalization (1e-12).
void validate(const ChannelEnsemble& e);

/// Upper bound sum_i p_i * entanglement_flux(E_i); +infinity propagates from
/// divergent members.  No lower bound is emitted for fading ensembles.
double fading_bound(const ChannelEnsemble& e);

/// Forward/backward pair: lower and upper are the max over the members,
/// exact iff both member reports are exact.
BoundReport two_way_pair(const ChannelSpec& forward, const ChannelSpec& backward);

/// Independent bands: bounds add, exact iff every band is exact.
BoundReport multiband(const std::vector<ChannelSpec>& bands);

/// Multimode fiber with W identical lossy bands of transmissivity eta.
BoundReport fiber(int bands, double eta);

}  // namespace qcb
