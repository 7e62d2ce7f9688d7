#include "qcb/composition.hpp"

#include <cmath>

#include "qcb/entropy.hpp"
#include "qcb/errors.hpp"

namespace qcb {

void validate(const ChannelEnsemble& e) {
  if (e.members.empty()) throw DomainError("ensemble must be nonempty");
  double sum = 0.0;
  for (const auto& m : e.members) {
    if (m.weight < 0.0 || m.weight > 1.0) {
      throw DomainError("ensemble weights must be in [0,1]");
    }
    validate(m.channel);
    sum += m.weight;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw DomainError("ensemble weights sum to " + std::to_string(sum));
  }
}

double fading_bound(const ChannelEnsemble& e) {
  validate(e);
  double total = 0.0;
  for (const auto& m : e.members) {
    const double flux = entanglement_flux(m.channel);
    if (std::isinf(flux)) {
      if (m.weight > 0.0) return kInf;
      continue;
    }
    total += m.weight * flux;
  }
  return total;
}

BoundReport two_way_pair(const ChannelSpec& forward, const ChannelSpec& backward) {
  const BoundReport f = two_way_capacity(forward);
  const BoundReport b = two_way_capacity(backward);
  BoundReport r;
  const BoundReport& lo = f.lower >= b.lower ? f : b;
  const BoundReport& up = f.upper >= b.upper ? f : b;
  r.lower = lo.lower;
  r.lower_name = "max:" + lo.lower_name;
  r.lower_clamped = lo.lower_clamped;
  r.upper = up.upper;
  r.upper_name = "max:" + up.upper_name;
  r.exact = f.exact && b.exact;
  return r;
}

BoundReport multiband(const std::vector<ChannelSpec>& bands) {
  if (bands.empty()) throw DomainError("multiband needs at least one band");
  BoundReport r;
  r.lower = 0.0;
  r.upper = 0.0;
  r.exact = true;
  for (const auto& c : bands) {
    const BoundReport m = two_way_capacity(c);
    r.lower += m.lower;
    r.upper += m.upper;
    r.exact = r.exact && m.exact;
    r.lower_clamped = r.lower_clamped || m.lower_clamped;
  }
  r.lower_name = "sum-of-lowers";
  r.upper_name = "sum-of-uppers";
  if (std::isinf(r.lower) && std::isinf(r.upper)) r.exact = true;
  return r;
}

BoundReport fiber(int bands, double eta) {
  if (bands < 1) throw DomainError("fiber needs at least one band");
  return multiband(std::vector<ChannelSpec>(
      static_cast<std::size_t>(bands), ThermalLoss{eta, 0.0}));
}

}  // namespace qcb
