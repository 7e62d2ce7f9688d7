#include "qcb/bounds.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "qcb/entropy.hpp"
#include "qcb/errors.hpp"
#include "qcb/gaussian.hpp"
#include "qcb/golden.hpp"

namespace qcb {

namespace {

/// Shannon entropy of the spectrum of a Hermitian unit-trace matrix.
double spectral_entropy(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
  double s = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = es.eigenvalues()(i);
    if (p > 1e-15) s -= p * std::log2(p);
  }
  return s;
}

double log2_dim(int d) { return std::log2(static_cast<double>(d)); }

/// log2 d - S(Choi): coherent = reverse coherent information of unital DV
/// channels, with the entropy taken from the diagonalized Choi matrix.
double unital_dv_rci(const ChannelSpec& c, int d) {
  return log2_dim(d) - spectral_entropy(dv_choi(c));
}

double damping_rci(double p) {
  auto [u, v] =
      golden_max([p](double x) { return binary_entropy(x) - binary_entropy(x * p); },
                 0.0, 1.0);
  (void)u;
  return v;
}

}  // namespace

ClampedRate reverse_coherent_info(const ChannelSpec& c) {
  validate(c);
  if (const auto* tl = std::get_if<ThermalLoss>(&c)) {
    if (tl->eta >= 1.0) return clamp_rate(kInf);
    return clamp_rate(-std::log2(1.0 - tl->eta) - h_thermal(tl->nbar));
  }
  if (const auto* add = std::get_if<AdditiveNoise>(&c)) {
    if (add->xi == 0.0) return clamp_rate(kInf);
    return clamp_rate(-std::log2(add->xi) - 1.0 / kLn2);
  }
  if (const auto* p = std::get_if<PauliQudit>(&c)) {
    return clamp_rate(unital_dv_rci(c, p->d));
  }
  if (const auto* dep = std::get_if<Depolarizing>(&c)) {
    return clamp_rate(unital_dv_rci(c, dep->d));
  }
  if (const auto* deph = std::get_if<Dephasing>(&c)) {
    return clamp_rate(unital_dv_rci(c, deph->d));
  }
  if (const auto* ad = std::get_if<AmplitudeDamping>(&c)) {
    if (ad->p >= 1.0) return clamp_rate(0.0);
    return clamp_rate(damping_rci(ad->p));
  }
  throw UnsupportedError("no reverse coherent information closed form for " +
                         describe(c));
}

ClampedRate coherent_info(const ChannelSpec& c) {
  validate(c);
  if (const auto* amp = std::get_if<Amplifier>(&c)) {
    return clamp_rate(std::log2(amp->gain / (amp->gain - 1.0)) -
                      h_thermal(amp->nbar));
  }
  if (const auto* add = std::get_if<AdditiveNoise>(&c)) {
    if (add->xi == 0.0) return clamp_rate(kInf);
    return clamp_rate(-std::log2(add->xi) - 1.0 / kLn2);
  }
  if (const auto* p = std::get_if<PauliQudit>(&c)) {
    return clamp_rate(unital_dv_rci(c, p->d));
  }
  if (const auto* dep = std::get_if<Depolarizing>(&c)) {
    return clamp_rate(unital_dv_rci(c, dep->d));
  }
  if (const auto* deph = std::get_if<Dephasing>(&c)) {
    return clamp_rate(unital_dv_rci(c, deph->d));
  }
  if (const auto* er = std::get_if<Erasure>(&c)) {
    return clamp_rate((1.0 - 2.0 * er->p) * log2_dim(er->d));
  }
  if (const auto* ad = std::get_if<AmplitudeDamping>(&c)) {
    const double p = ad->p;
    auto [u, v] = golden_max(
        [p](double x) {
          return binary_entropy(x * (1.0 - p)) - binary_entropy(x * p);
        },
        0.0, 1.0);
    (void)u;
    return clamp_rate(v);
  }
  throw UnsupportedError("no coherent information closed form for " +
                         describe(c));
}

double finite_mu_rci(const ChannelSpec& c, double mu) {
  const QuasiChoiCM q = gaussian_choi_cm(c, mu);
  auto [nup, num] = two_mode_symplectic_eigs(q.mu, q.beta, q.gamma);
  return s_entropy(mu) - s_entropy(num) - s_entropy(nup);
}

double finite_mu_ci(const ChannelSpec& c, double mu) {
  const QuasiChoiCM q = gaussian_choi_cm(c, mu);
  auto [nup, num] = two_mode_symplectic_eigs(q.mu, q.beta, q.gamma);
  return s_entropy(q.beta) - s_entropy(num) - s_entropy(nup);
}

double entanglement_flux(const ChannelSpec& c) {
  validate(c);
  if (const auto* tl = std::get_if<ThermalLoss>(&c)) {
    if (tl->eta >= 1.0) return kInf;
    if (is_entanglement_breaking(c)) return 0.0;
    double v = -std::log2(1.0 - tl->eta) - h_thermal(tl->nbar);
    if (tl->nbar > 0.0) v -= tl->nbar * std::log2(tl->eta);
    return v;
  }
  if (const auto* amp = std::get_if<Amplifier>(&c)) {
    if (is_entanglement_breaking(c)) return 0.0;
    if (amp->nbar == 0.0) return std::log2(amp->gain / (amp->gain - 1.0));
    return (amp->nbar + 1.0) * std::log2(amp->gain) -
           std::log2(amp->gain - 1.0) - h_thermal(amp->nbar);
  }
  if (const auto* add = std::get_if<AdditiveNoise>(&c)) {
    if (add->xi == 0.0) return kInf;
    if (add->xi >= 1.0) return 0.0;
    return (add->xi - 1.0) / kLn2 - std::log2(add->xi);
  }
  if (std::holds_alternative<ConjugateAmplifier>(c)) return 0.0;
  if (std::holds_alternative<FormA2>(c)) return 0.0;
  if (std::holds_alternative<FormB1>(c)) return kInf;

  if (const auto* p = std::get_if<PauliQudit>(&c)) {
    if (p->d == 2) {
      // Bell-diagonal REE closed form.
      double pmax = 0.0;
      for (double x : p->probs) pmax = std::max(pmax, x);
      return pmax >= 0.5 ? 1.0 - binary_entropy(pmax) : 0.0;
    }
    // Qudit Weyl channel: REE bound log2 d - H({p_ab}) + H({p_a}).
    std::vector<double> pa(p->d, 0.0);
    for (int a = 0; a < p->d; ++a)
      for (int b = 0; b < p->d; ++b) pa[a] += p->probs[a * p->d + b];
    return log2_dim(p->d) - shannon_entropy(p->probs) + shannon_entropy(pa);
  }
  if (const auto* dep = std::get_if<Depolarizing>(&c)) {
    const double d = dep->d;
    if (dep->p > d / (d + 1.0)) return 0.0;
    const double f = dep->p * (d * d - 1.0) / (d * d);
    return std::log2(d) - binary_entropy(f) - f * std::log2(d - 1.0);
  }
  if (const auto* deph = std::get_if<Dephasing>(&c)) {
    return log2_dim(deph->d) - shannon_entropy(deph->probs);
  }
  if (const auto* er = std::get_if<Erasure>(&c)) {
    return (1.0 - er->p) * log2_dim(er->d);
  }
  const auto& ad = std::get<AmplitudeDamping>(c);
  if (ad.p == 0.0) return 1.0;
  return std::min(1.0, -std::log2(ad.p));
}

double flux_numeric_limit(const ChannelSpec& c, double mu) {
  const QuasiChoiCM q = gaussian_choi_cm(c, mu);
  const SeparableCM sep = closest_separable_cm(q);
  if (sep.was_already_separable) return 0.0;
  return relative_entropy(GaussianState(q.cm), GaussianState(sep.cm));
}

double squashed_damping_bound(double p) {
  if (p < 0.0 || p > 1.0) throw DomainError("damping: p must be in [0,1]");
  return binary_entropy(0.5 - p / 4.0) - binary_entropy(1.0 - p / 4.0);
}

SquashedMaxMin squashed_damping_bound_maxmin(double p) {
  if (p < 0.0 || p > 1.0) throw DomainError("damping: p must be in [0,1]");
  auto bracket = [p](double gamma, double eta) {
    return 0.5 * (binary_entropy(gamma - p * gamma * eta) +
                  binary_entropy(gamma * (1.0 - p + p * eta)) -
                  binary_entropy(p * gamma * (1.0 - eta)) -
                  binary_entropy(p * gamma * eta));
  };
  SquashedMaxMin out{};
  double last_inner = 0.5;
  auto inner_min = [&](double gamma) {
    auto [eta, v] = golden_min([&](double e) { return bracket(gamma, e); }, 0.0, 1.0);
    last_inner = eta;
    return v;
  };
  auto [gamma, value] = golden_max(inner_min, 0.0, 1.0);
  out.value = value;
  out.outer_argmax = gamma;
  out.inner_argmin = last_inner;
  return out;
}

double tgw_bound(double eta, double nbar) {
  if (eta < 0.0 || eta >= 1.0) throw DomainError("tgw: eta must be in [0,1)");
  const double a = (1.0 - eta) * nbar + 1.0 + eta;
  const double b = (1.0 - eta) * nbar + 1.0 - eta;
  return std::log2(a / b);
}

double tgw_bound_constrained(double eta, double mbar) {
  if (eta < 0.0 || eta >= 1.0) throw DomainError("tgw: eta must be in [0,1)");
  if (mbar < 0.0) throw DomainError("tgw: mbar must be >= 0");
  return h_thermal(0.5 * (1.0 + eta) * mbar) -
         h_thermal(0.5 * (1.0 - eta) * mbar);
}

double constrained_rci(double eta, double mbar) {
  if (eta < 0.0 || eta > 1.0) throw DomainError("eta must be in [0,1]");
  if (mbar < 0.0) throw DomainError("mbar must be >= 0");
  return h_thermal(mbar) - h_thermal((1.0 - eta) * mbar);
}

double cc_cost(double eta) {
  if (eta <= 0.0 || eta > 1.0) {
    throw DomainError("cc cost diverges at eta = 0; legal domain is (0,1]");
  }
  const double l3 = std::log2(3.0);
  return (2.0 * eta * std::log2(std::numbers::pi) +
          (2.0 * eta - 3.0) * std::log2(3.0 - 2.0 * eta) + 3.0 * l3) /
         (2.0 * eta);
}

double cc_cost_limit() {
  return std::log2(3.0 * std::numbers::pi * std::numbers::e);
}

namespace {

struct Candidate {
  double value;
  const char* name;
};

void pick_min(BoundReport& r, std::initializer_list<Candidate> cands) {
  bool first = true;
  for (const auto& c : cands) {
    if (first || c.value < r.upper) {
      r.upper = c.value;
      r.upper_name = c.name;
      first = false;
    }
  }
}

void set_lower(BoundReport& r, const ClampedRate& rate, const char* name) {
  r.lower = rate.value;
  r.lower_name = name;
  r.lower_clamped = rate.clamped;
}

void finish_exact(BoundReport& r) {
  r.exact = (std::isinf(r.lower) && std::isinf(r.upper)) ||
            std::abs(r.upper - r.lower) < 1e-12;
}

}  // namespace

BoundReport two_way_capacity(const ChannelSpec& c) {
  validate(c);
  BoundReport r;

  if (std::holds_alternative<ThermalLoss>(c)) {
    set_lower(r, reverse_coherent_info(c), "reverse-coherent-information");
    pick_min(r, {{entanglement_flux(c), "entanglement-flux"}});
  } else if (std::holds_alternative<Amplifier>(c)) {
    set_lower(r, coherent_info(c), "coherent-information");
    pick_min(r, {{entanglement_flux(c), "entanglement-flux"}});
  } else if (std::holds_alternative<AdditiveNoise>(c)) {
    set_lower(r, coherent_info(c), "coherent-information");
    pick_min(r, {{entanglement_flux(c), "entanglement-flux"}});
  } else if (std::holds_alternative<ConjugateAmplifier>(c) ||
             std::holds_alternative<FormA2>(c)) {
    set_lower(r, clamp_rate(0.0), "trivial-zero");
    pick_min(r, {{0.0, "entanglement-flux"}});
  } else if (std::holds_alternative<FormB1>(c)) {
    set_lower(r, clamp_rate(0.0), "trivial-zero");
    pick_min(r, {{kInf, "entanglement-flux"}});
  } else if (const auto* er = std::get_if<Erasure>(&c)) {
    set_lower(r, clamp_rate((1.0 - er->p) * log2_dim(er->d)),
              "erasure-distillation");
    pick_min(r, {{entanglement_flux(c), "entanglement-flux"}});
  } else if (const auto* ad = std::get_if<AmplitudeDamping>(&c)) {
    set_lower(r, reverse_coherent_info(c), "reverse-coherent-information");
    const double flux = ad->p == 0.0 ? kInf : -std::log2(ad->p);
    pick_min(r, {{flux, "entanglement-flux"},
                 {1.0, "dimensionality"},
                 {squashed_damping_bound(ad->p), "squashed-entanglement"}});
  } else {
    // Unital DV families: Pauli, depolarizing, dephasing.
    set_lower(r, coherent_info(c), "coherent-information");
    pick_min(r, {{entanglement_flux(c), "entanglement-flux"}});
  }

  finish_exact(r);
  return r;
}

}  // namespace qcb
