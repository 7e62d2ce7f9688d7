#include "qcb/qkd.hpp"

#include <cmath>
#include <numbers>

#include "qcb/entropy.hpp"
#include "qcb/errors.hpp"

namespace qcb {

std::string protocol_name(const ProtocolId& p) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, NoSwitching>) return "no-switching";
        else if constexpr (std::is_same_v<T, Switching>) return "switching";
        else if constexpr (std::is_same_v<T, CvMdiSym>) return "cvmdi-sym";
        else if constexpr (std::is_same_v<T, CvMdiAsym>) return "cvmdi-asym";
        else if constexpr (std::is_same_v<T, TwoWayHet>) return "twoway-het";
        else if constexpr (std::is_same_v<T, TwoWayHom>) return "twoway-hom";
        else if constexpr (std::is_same_v<T, Bb84SinglePhoton>) return "bb84-1ph";
        else if constexpr (std::is_same_v<T, Bb84Decoy>) return "bb84-decoy";
        else return "dvmdi";
      },
      p);
}

namespace {

constexpr double kE = std::numbers::e;

double no_switching_rate(double eta) {
  return std::log2(eta / (kE * (1.0 - eta))) + s_entropy((2.0 - eta) / (2.0 * eta));
}

}  // namespace

ClampedRate ideal_rate(const ProtocolId& p, double eta) {
  // eta = 1 is allowed; the CV closed forms diverge there while the DV
  // rates stay finite (eta/2, eta/(2e), eta/(2e^2)).
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw DomainError("protocol rates need eta in (0,1]");
  }
  const double raw = std::visit(
      [eta](const auto& x) -> double {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, NoSwitching>) {
          return no_switching_rate(eta);
        } else if constexpr (std::is_same_v<T, Switching>) {
          return 0.5 * std::log2(1.0 / (1.0 - eta));
        } else if constexpr (std::is_same_v<T, CvMdiSym>) {
          const double rt = std::sqrt(eta);
          return std::log2(eta / (kE * kE * (1.0 - rt))) +
                 s_entropy(1.0 / rt - 0.5);
        } else if constexpr (std::is_same_v<T, CvMdiAsym>) {
          const double ea = x.etaA, eb = x.etaB;
          if (!(ea > 0.0 && ea <= 1.0 && eb > 0.0 && eb <= 1.0)) {
            throw DomainError("cvmdi-asym: transmissivities out of range");
          }
          if (std::abs(ea - eb) < 1e-12) {
            throw DomainError("cvmdi-asym: symmetric case routes to cvmdi-sym");
          }
          if (std::abs(eta - ea * eb) > 1e-9) {
            throw DomainError("cvmdi-asym: eta must equal etaA * etaB");
          }
          return s_entropy(1.0 / eb - 0.5) -
                 s_entropy((2.0 - ea - eb) / (2.0 * std::abs(ea - eb))) +
                 std::log2(ea * eb / (kE * std::abs(ea - eb)));
        } else if constexpr (std::is_same_v<T, TwoWayHet>) {
          return 0.5 * (s_entropy((2.0 - eta + eta * eta) /
                                  (2.0 * eta * (1.0 + eta))) +
                        std::log2(eta * (1.0 + eta) / (kE * (1.0 - eta))));
        } else if constexpr (std::is_same_v<T, TwoWayHom>) {
          return 0.25 * std::log2((1.0 + eta * eta) / (1.0 - eta));
        } else if constexpr (std::is_same_v<T, Bb84SinglePhoton>) {
          return eta / 2.0;
        } else if constexpr (std::is_same_v<T, Bb84Decoy>) {
          return eta / (2.0 * kE);  // optimal intensity mu = 1
        } else {
          return eta / (2.0 * kE * kE);  // optimal intensities muA = muB = 1
        }
      },
      p);
  return clamp_rate(raw);
}

double asymptotic_slope(const ProtocolId& p) {
  // Slopes are taken on the raw closed forms.
  auto slope_at = [&](double eta) {
    if (const auto* a = std::get_if<CvMdiAsym>(&p)) {
      // Slide Bob's arm to zero at fixed asymmetry ratio.
      CvMdiAsym scaled{a->etaA, eta / a->etaA};
      return ideal_rate(ProtocolId(scaled), eta).raw / eta;
    }
    return ideal_rate(p, eta).raw / eta;
  };
  const double s1 = slope_at(1e-5);
  const double s2 = slope_at(1e-6);
  // Richardson step assuming rate/eta = L + c eta.
  return (10.0 * s2 - s1) / 9.0;
}

double bb84_decoy_rate_mu(double eta, double mu) {
  if (!(eta > 0.0 && eta <= 1.0)) throw DomainError("eta out of range");
  if (mu < 0.0) throw DomainError("intensity must be >= 0");
  return std::exp(-mu) * eta * mu / 2.0;
}

double dvmdi_rate_mu(double etaA, double etaB, double muA, double muB) {
  if (!(etaA > 0.0 && etaA <= 1.0 && etaB > 0.0 && etaB <= 1.0)) {
    throw DomainError("eta out of range");
  }
  if (muA < 0.0 || muB < 0.0) throw DomainError("intensity must be >= 0");
  return 0.5 * std::exp(-(muA + muB)) * etaA * etaB * muA * muB;
}

}  // namespace qcb
