#include "qcb/channels.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "qcb/entropy.hpp"
#include "qcb/errors.hpp"

namespace qcb {

namespace {

constexpr double kProbTol = 1e-12;

void check_probs(const std::vector<double>& p, std::size_t expected,
                 const char* what) {
  if (p.size() != expected) {
    throw DomainError(std::string(what) + ": probability vector has wrong size");
  }
  double sum = 0.0;
  for (double x : p) {
    if (x < 0.0) throw DomainError(std::string(what) + ": negative probability");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kProbTol) {
    throw DomainError(std::string(what) + ": probabilities sum to " +
                      std::to_string(sum));
  }
}

std::string num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

void validate(const ChannelSpec& c) {
  std::visit(
      [](const auto& ch) {
        using T = std::decay_t<decltype(ch)>;
        if constexpr (std::is_same_v<T, ThermalLoss>) {
          if (ch.eta < 0.0 || ch.eta > 1.0) throw DomainError("thermal-loss: eta must be in [0,1]");
          if (ch.nbar < 0.0) throw DomainError("thermal-loss: nbar must be >= 0");
        } else if constexpr (std::is_same_v<T, Amplifier>) {
          if (ch.gain <= 1.0) throw DomainError("amplifier: gain must be > 1");
          if (ch.nbar < 0.0) throw DomainError("amplifier: nbar must be >= 0");
        } else if constexpr (std::is_same_v<T, AdditiveNoise>) {
          if (ch.xi < 0.0) throw DomainError("additive: xi must be >= 0");
        } else if constexpr (std::is_same_v<T, PauliQudit>) {
          if (ch.d < 2) throw DomainError("pauli: d must be >= 2");
          check_probs(ch.probs, static_cast<std::size_t>(ch.d) * ch.d, "pauli");
        } else if constexpr (std::is_same_v<T, Depolarizing>) {
          if (ch.d < 2) throw DomainError("depolarizing: d must be >= 2");
          if (ch.p < 0.0 || ch.p > 1.0) throw DomainError("depolarizing: p must be in [0,1]");
        } else if constexpr (std::is_same_v<T, Dephasing>) {
          if (ch.d < 2) throw DomainError("dephasing: d must be >= 2");
          check_probs(ch.probs, static_cast<std::size_t>(ch.d), "dephasing");
        } else if constexpr (std::is_same_v<T, Erasure>) {
          if (ch.d < 2) throw DomainError("erasure: d must be >= 2");
          if (ch.p < 0.0 || ch.p > 1.0) throw DomainError("erasure: p must be in [0,1]");
        } else if constexpr (std::is_same_v<T, AmplitudeDamping>) {
          if (ch.p < 0.0 || ch.p > 1.0) throw DomainError("damping: p must be in [0,1]");
        }
      },
      c);
}

bool is_gaussian(const ChannelSpec& c) {
  return std::holds_alternative<ThermalLoss>(c) ||
         std::holds_alternative<Amplifier>(c) ||
         std::holds_alternative<AdditiveNoise>(c) ||
         std::holds_alternative<ConjugateAmplifier>(c) ||
         std::holds_alternative<FormA2>(c) || std::holds_alternative<FormB1>(c);
}

bool is_dv(const ChannelSpec& c) { return !is_gaussian(c); }

std::string describe(const ChannelSpec& c) {
  return std::visit(
      [](const auto& ch) -> std::string {
        using T = std::decay_t<decltype(ch)>;
        if constexpr (std::is_same_v<T, ThermalLoss>) {
          if (ch.nbar == 0.0) return "lossy:eta=" + num(ch.eta);
          return "thermal-loss:eta=" + num(ch.eta) + ",nbar=" + num(ch.nbar);
        } else if constexpr (std::is_same_v<T, Amplifier>) {
          return "amplifier:g=" + num(ch.gain) + ",nbar=" + num(ch.nbar);
        } else if constexpr (std::is_same_v<T, AdditiveNoise>) {
          return "additive:xi=" + num(ch.xi);
        } else if constexpr (std::is_same_v<T, ConjugateAmplifier>) {
          return "conj-amplifier";
        } else if constexpr (std::is_same_v<T, FormA2>) {
          return "form-a2";
        } else if constexpr (std::is_same_v<T, FormB1>) {
          return "form-b1";
        } else if constexpr (std::is_same_v<T, PauliQudit>) {
          std::string s = "pauli:d=" + std::to_string(ch.d) + ",p=";
          for (std::size_t i = 0; i < ch.probs.size(); ++i) {
            if (i) s += ",";
            s += num(ch.probs[i]);
          }
          return s;
        } else if constexpr (std::is_same_v<T, Depolarizing>) {
          return "depolarizing:d=" + std::to_string(ch.d) + ",p=" + num(ch.p);
        } else if constexpr (std::is_same_v<T, Dephasing>) {
          std::string s = "dephasing:d=" + std::to_string(ch.d) + ",P=";
          for (std::size_t i = 0; i < ch.probs.size(); ++i) {
            if (i) s += ",";
            s += num(ch.probs[i]);
          }
          return s;
        } else if constexpr (std::is_same_v<T, Erasure>) {
          return "erasure:d=" + std::to_string(ch.d) + ",p=" + num(ch.p);
        } else {
          return "damping:p=" + num(ch.p);
        }
      },
      c);
}

QuasiChoiCM gaussian_choi_cm(const ChannelSpec& c, double mu) {
  validate(c);
  if (mu < 0.5) throw DomainError("quasi-Choi requires mu >= 1/2");

  double eta = 0.0, nbar = 0.0, xi = 0.0;
  if (const auto* tl = std::get_if<ThermalLoss>(&c)) {
    eta = tl->eta;
    nbar = tl->nbar;
  } else if (const auto* amp = std::get_if<Amplifier>(&c)) {
    eta = amp->gain;
    nbar = amp->nbar;
  } else if (const auto* add = std::get_if<AdditiveNoise>(&c)) {
    eta = 1.0;
    xi = add->xi;
  } else {
    throw NotGaussianFamilyError("no quasi-Choi CM for " + describe(c));
  }

  QuasiChoiCM q;
  q.mu = mu;
  q.beta = eta * mu + std::abs(1.0 - eta) * (nbar + 0.5) + xi;
  q.gamma = std::sqrt(eta * (mu * mu - 0.25));
  q.cm = CovarianceMatrix::two_mode(mu, q.beta, q.gamma);
  return q;
}

SeparableCM closest_separable_cm(const QuasiChoiCM& q) {
  const double csep =
      std::sqrt(std::max(0.0, (q.mu - 0.5) * (q.beta - 0.5)));
  SeparableCM out;
  out.was_already_separable = q.gamma <= csep + 1e-12;
  if (out.was_already_separable) {
    out.cm = q.cm;
    return out;
  }
  out.cm = CovarianceMatrix::two_mode(q.mu, q.beta, csep);
  return out;
}

namespace {

using Cplx = std::complex<double>;

Eigen::MatrixXcd pauli_xz(int d, int a, int b) {
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(d, d);
  const double w = 2.0 * std::numbers::pi / d;
  for (int j = 0; j < d; ++j) {
    u((j + a) % d, j) = std::polar(1.0, w * b * j);
  }
  return u;
}

Eigen::VectorXcd bell_vector(int d) {
  Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(d * d);
  for (int i = 0; i < d; ++i) phi(i * d + i) = 1.0 / std::sqrt(double(d));
  return phi;
}

}  // namespace

Eigen::MatrixXcd dv_choi(const ChannelSpec& c) {
  validate(c);
  if (!is_dv(c)) throw NotDvFamilyError("no DV Choi for " + describe(c));

  if (const auto* p = std::get_if<PauliQudit>(&c)) {
    // Bell-diagonal: sum_ab p_ab (I (x) U_ab) Phi (I (x) U_ab)^dag.
    const int d = p->d;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d * d, d * d);
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        const double w = p->probs[a * d + b];
        if (w == 0.0) continue;
        const Eigen::MatrixXcd u = pauli_xz(d, a, b);
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d * d);
        for (int i = 0; i < d; ++i)
          for (int k = 0; k < d; ++k) v(i * d + k) = u(k, i) / std::sqrt(double(d));
        rho += w * v * v.adjoint();
      }
    }
    return rho;
  }
  if (const auto* dep = std::get_if<Depolarizing>(&c)) {
    const int d = dep->d;
    const Eigen::VectorXcd phi = bell_vector(d);
    return (1.0 - dep->p) * (phi * phi.adjoint()) +
           (dep->p / (d * d)) * Eigen::MatrixXcd::Identity(d * d, d * d);
  }
  if (const auto* deph = std::get_if<Dephasing>(&c)) {
    const int d = deph->d;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d * d, d * d);
    const double w = 2.0 * std::numbers::pi / d;
    for (int m = 0; m < d; ++m) {
      for (int j = 0; j < d; ++j) {
        for (int l = 0; l < d; ++l) {
          rho(j * d + j, l * d + l) +=
              deph->probs[m] / d * std::polar(1.0, w * (j - l) * m);
        }
      }
    }
    return rho;
  }
  if (const auto* er = std::get_if<Erasure>(&c)) {
    // Output lives on d+1 levels with |e> as the last basis vector.
    const int d = er->d;
    const int dout = d + 1;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d * dout, d * dout);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        rho(i * dout + i, j * dout + j) += (1.0 - er->p) / d;
      }
      rho(i * dout + d, i * dout + d) += er->p / d;
    }
    return rho;
  }
  const auto& ad = std::get<AmplitudeDamping>(c);
  // (I (x) E)(Phi) from the damping Kraus operators on a 2x2 space.
  Eigen::MatrixXcd a0 = Eigen::MatrixXcd::Zero(2, 2);
  a0(0, 0) = 1.0;
  a0(1, 1) = std::sqrt(1.0 - ad.p);
  Eigen::MatrixXcd a1 = Eigen::MatrixXcd::Zero(2, 2);
  a1(0, 1) = std::sqrt(ad.p);
  const Eigen::VectorXcd phi = bell_vector(2);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(4, 4);
  for (const auto& k : {a0, a1}) {
    Eigen::MatrixXcd ik = Eigen::MatrixXcd::Zero(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) ik(i * 2 + r, i * 2 + s) = k(r, s);
    const Eigen::VectorXcd v = ik * phi;
    rho += v * v.adjoint();
  }
  return rho;
}

bool is_entanglement_breaking(const ChannelSpec& c) {
  validate(c);
  if (const auto* tl = std::get_if<ThermalLoss>(&c)) {
    if (tl->eta >= 1.0) return false;
    return tl->nbar >= tl->eta / (1.0 - tl->eta);
  }
  if (const auto* amp = std::get_if<Amplifier>(&c)) {
    return amp->nbar >= 1.0 / (amp->gain - 1.0);
  }
  if (const auto* add = std::get_if<AdditiveNoise>(&c)) {
    return add->xi >= 1.0;
  }
  if (std::holds_alternative<ConjugateAmplifier>(c)) return true;
  if (std::holds_alternative<FormA2>(c)) return true;
  return false;
}

}  // namespace qcb
