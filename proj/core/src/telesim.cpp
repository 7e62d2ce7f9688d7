#include "qcb/telesim.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <complex>
#include <numbers>
#include <queue>
#include <random>

#include "qcb/errors.hpp"

namespace qcb {

namespace {

using Cplx = std::complex<double>;

constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-10;
constexpr double kKrausTol = 1e-10;
constexpr double kCovTol = 1e-9;

Eigen::MatrixXcd random_density(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Cplx(gauss(rng), gauss(rng));
  Eigen::MatrixXcd rho = g * g.adjoint();
  return rho / rho.trace().real();
}

}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd m) : rho(std::move(m)) {
  if (rho.rows() != rho.cols()) {
    throw DimensionMismatchError("density matrix must be square");
  }
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kHermTol) {
    throw InvalidCmError("density matrix is not Hermitian");
  }
  if (std::abs(rho.trace() - Cplx(1.0, 0.0)) > kTraceTol) {
    throw InvalidCmError("density matrix trace differs from one");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
  if (es.eigenvalues().minCoeff() < -kPsdTol) {
    throw InvalidCmError("density matrix has a negative eigenvalue");
  }
}

QuditChannel::QuditChannel(int din, int dout, std::vector<Eigen::MatrixXcd> ops)
    : dim_in(din), dim_out(dout), kraus(std::move(ops)) {
  if (kraus.empty()) throw DimensionMismatchError("channel needs Kraus operators");
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(din, din);
  for (const auto& k : kraus) {
    if (k.rows() != dout || k.cols() != din) {
      throw DimensionMismatchError("Kraus operator has wrong shape");
    }
    sum += k.adjoint() * k;
  }
  if ((sum - Eigen::MatrixXcd::Identity(din, din)).cwiseAbs().maxCoeff() >
      kKrausTol) {
    throw InvalidCmError("Kraus operators are not trace preserving");
  }
}

Eigen::MatrixXcd QuditChannel::apply(const Eigen::MatrixXcd& rho) const {
  if (rho.rows() != dim_in || rho.cols() != dim_in) {
    throw DimensionMismatchError("input state has wrong dimension");
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_out, dim_out);
  for (const auto& k : kraus) out += k * rho * k.adjoint();
  return out;
}

QuditChannel dv_kraus_channel(const ChannelSpec& c) {
  validate(c);
  if (!is_dv(c)) throw NotDvFamilyError("no Kraus form for " + describe(c));

  if (const auto* p = std::get_if<PauliQudit>(&c)) {
    const int d = p->d;
    std::vector<Eigen::MatrixXcd> ks;
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        const double w = p->probs[a * d + b];
        if (w > 0.0) ks.push_back(std::sqrt(w) * generalized_pauli(d, a, b));
      }
    }
    return QuditChannel(d, d, std::move(ks));
  }
  if (const auto* dep = std::get_if<Depolarizing>(&c)) {
    const int d = dep->d;
    std::vector<Eigen::MatrixXcd> ks;
    if (dep->p < 1.0) {
      ks.push_back(std::sqrt(1.0 - dep->p) *
                   Eigen::MatrixXcd::Identity(d, d));
    }
    if (dep->p > 0.0) {
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(d, d);
          k(i, j) = std::sqrt(dep->p / d);
          ks.push_back(std::move(k));
        }
      }
    }
    return QuditChannel(d, d, std::move(ks));
  }
  if (const auto* deph = std::get_if<Dephasing>(&c)) {
    const int d = deph->d;
    std::vector<Eigen::MatrixXcd> ks;
    for (int i = 0; i < d; ++i) {
      if (deph->probs[i] > 0.0) {
        ks.push_back(std::sqrt(deph->probs[i]) * generalized_pauli(d, 0, i));
      }
    }
    return QuditChannel(d, d, std::move(ks));
  }
  if (const auto* er = std::get_if<Erasure>(&c)) {
    const int d = er->d;
    std::vector<Eigen::MatrixXcd> ks;
    if (er->p < 1.0) {
      Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d + 1, d);
      a.topRows(d) = std::sqrt(1.0 - er->p) * Eigen::MatrixXcd::Identity(d, d);
      ks.push_back(std::move(a));
    }
    if (er->p > 0.0) {
      for (int i = 0; i < d; ++i) {
        Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d + 1, d);
        a(d, i) = std::sqrt(er->p);
        ks.push_back(std::move(a));
      }
    }
    return QuditChannel(d, d + 1, std::move(ks));
  }
  const auto& ad = std::get<AmplitudeDamping>(c);
  Eigen::MatrixXcd a0 = Eigen::MatrixXcd::Zero(2, 2);
  a0(0, 0) = 1.0;
  a0(1, 1) = std::sqrt(1.0 - ad.p);
  Eigen::MatrixXcd a1 = Eigen::MatrixXcd::Zero(2, 2);
  a1(0, 1) = std::sqrt(ad.p);
  return QuditChannel(2, 2, {a0, a1});
}

Eigen::MatrixXcd generalized_pauli(int d, int a, int b) {
  if (d < 2) throw DomainError("qudit dimension must be >= 2");
  if (a < 0 || a >= d || b < 0 || b >= d) {
    throw IndexOutOfRangeError("Pauli indices must be in [0, d)");
  }
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(d, d);
  const double w = 2.0 * std::numbers::pi / d;
  for (int j = 0; j < d; ++j) {
    u((j + a) % d, j) = std::polar(1.0, w * b * j);
  }
  return u;
}

Eigen::VectorXcd bell_state_vector(int d) {
  Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(d * d);
  for (int i = 0; i < d; ++i) phi(i * d + i) = 1.0 / std::sqrt(double(d));
  return phi;
}

std::vector<Eigen::MatrixXcd> bell_povm(int d) {
  if (d < 2) throw DomainError("qudit dimension must be >= 2");
  const Eigen::VectorXcd phi = bell_state_vector(d);
  std::vector<Eigen::MatrixXcd> povm;
  povm.reserve(d * d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const Eigen::MatrixXcd u = generalized_pauli(d, a, b);
      // |Phi_ab> = (U_ab^dag (x) I)|Phi>
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d * d);
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          // U^dag acts on the first factor: <j| U_ab^dag |i> = conj(U(i,j))
          v(j * d + i) += std::conj(u(i, j)) * phi(i * d + i);
        }
      }
      povm.push_back(v * v.adjoint());
    }
  }
  return povm;
}

QuditChannel teleport_channel(
    const DensityMatrix& sigma, int dim_a,
    const std::optional<std::vector<Eigen::MatrixXcd>>& corrections) {
  const int dtot = sigma.dim();
  if (dim_a < 2 || dtot % dim_a != 0) {
    throw DimensionMismatchError("resource dimension is not a multiple of d");
  }
  const int dim_b = dtot / dim_a;
  const int d = dim_a;

  std::vector<Eigen::MatrixXcd> w;
  if (corrections) {
    w = *corrections;
    if (static_cast<int>(w.size()) != d * d) {
      throw DimensionMismatchError("need d^2 correction unitaries");
    }
    for (const auto& u : w) {
      if (u.rows() != dim_b || u.cols() != dim_b) {
        throw DimensionMismatchError("correction unitary has wrong dimension");
      }
    }
  } else {
    if (dim_b != d) {
      throw DimensionMismatchError(
          "default Pauli corrections need a d x d resource");
    }
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) w.push_back(generalized_pauli(d, a, b));
  }

  // Eigenvectors of sigma reshaped to d x dim_b give Kraus operators
  //   E_{k,m} = sqrt(s_m / d) W_k^dag S_m^T U_k.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sigma.rho);
  std::vector<Eigen::MatrixXcd> ks;
  for (int m = 0; m < dtot; ++m) {
    const double s = es.eigenvalues()(m);
    if (s < 1e-14) continue;
    Eigen::MatrixXcd sm(d, dim_b);
    for (int i = 0; i < d; ++i)
      for (int bta = 0; bta < dim_b; ++bta)
        sm(i, bta) = es.eigenvectors()(i * dim_b + bta, m);
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        const int k = a * d + b;
        const Eigen::MatrixXcd u = generalized_pauli(d, a, b);
        ks.push_back(std::sqrt(s / d) * w[k].adjoint() * sm.transpose() * u);
      }
    }
  }
  return QuditChannel(d, dim_b, std::move(ks));
}

DensityMatrix choi_of(const QuditChannel& ch) {
  const int din = ch.dim_in;
  const int dout = ch.dim_out;
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(din * dout, din * dout);
  for (const auto& k : ch.kraus) {
    // (I (x) K)|Phi>, component (i * dout + beta) = K(beta, i)/sqrt(din)
    Eigen::VectorXcd v(din * dout);
    for (int i = 0; i < din; ++i)
      for (int beta = 0; beta < dout; ++beta)
        v(i * dout + beta) = k(beta, i) / std::sqrt(double(din));
    c += v * v.adjoint();
  }
  return DensityMatrix(c);
}

namespace {

/// Choi of rho -> E(U rho U^dag) is (U^T (x) I) C (U^* (x) I).
Eigen::MatrixXcd conjugated_choi(const Eigen::MatrixXcd& c, int din, int dout,
                                 const Eigen::MatrixXcd& u) {
  Eigen::MatrixXcd ut_i = Eigen::MatrixXcd::Zero(din * dout, din * dout);
  for (int i = 0; i < din; ++i)
    for (int j = 0; j < din; ++j)
      for (int b = 0; b < dout; ++b)
        ut_i(i * dout + b, j * dout + b) = u(j, i);  // U^T entry (i,j)
  return ut_i * c * ut_i.adjoint();
}

Eigen::MatrixXcd i_tensor(const Eigen::MatrixXcd& v, int din) {
  const int dout = static_cast<int>(v.rows());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(din * dout, din * dout);
  for (int i = 0; i < din; ++i)
    out.block(i * dout, i * dout, dout, dout) = v;
  return out;
}

Eigen::MatrixXcd nearest_unitary(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

/// Recover V with V A V^dag = B and V A2 V^dag = B2 from eigenbases plus a
/// phase-fixing pass; returns an empty matrix when the spectra already rule
/// a V out.
Eigen::MatrixXcd recover_output_unitary(const Eigen::MatrixXcd& a,
                                        const Eigen::MatrixXcd& b,
                                        const Eigen::MatrixXcd& a2,
                                        const Eigen::MatrixXcd& b2) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ea(a), eb(b);
  const int n = static_cast<int>(a.rows());
  if ((ea.eigenvalues() - eb.eigenvalues()).cwiseAbs().maxCoeff() > 1e-7) {
    return {};
  }
  const Eigen::MatrixXcd ya = ea.eigenvectors();
  const Eigen::MatrixXcd yb = eb.eigenvectors();
  const Eigen::MatrixXcd ma = ya.adjoint() * a2 * ya;
  const Eigen::MatrixXcd mb = yb.adjoint() * b2 * yb;

  // Need diag phases D with Mb = D Ma D^dag; fix them over a spanning walk.
  std::vector<double> theta(n, 0.0);
  std::vector<bool> known(n, false);
  for (int root = 0; root < n; ++root) {
    if (known[root]) continue;
    known[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int i = q.front();
      q.pop();
      for (int j = 0; j < n; ++j) {
        if (known[j] || std::abs(ma(i, j)) < 1e-8) continue;
        // mb_ij = e^{i(theta_i - theta_j)} ma_ij
        theta[j] = theta[i] - std::arg(mb(i, j) / ma(i, j));
        known[j] = true;
        q.push(j);
      }
    }
  }
  Eigen::VectorXcd dph(n);
  for (int i = 0; i < n; ++i) dph(i) = std::polar(1.0, theta[i]);
  return nearest_unitary(yb * dph.asDiagonal() * ya.adjoint());
}

}  // namespace

TeleCovariance tele_covariance(const QuditChannel& ch) {
  const int d = ch.dim_in;
  if (d > 4) {
    throw DimensionTooLargeError("tele-covariance search supports dim_in <= 4");
  }
  const Eigen::MatrixXcd c = choi_of(ch).rho;
  const double scale = std::max(1.0, c.cwiseAbs().maxCoeff());

  TeleCovariance out;
  out.corrections.reserve(d * d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const Eigen::MatrixXcd u = generalized_pauli(d, a, b);
      const Eigen::MatrixXcd ck = conjugated_choi(c, d, ch.dim_out, u);

      auto verify = [&](const Eigen::MatrixXcd& v) {
        if (v.size() == 0) return false;
        const Eigen::MatrixXcd iv = i_tensor(v, d);
        return (iv * c * iv.adjoint() - ck).cwiseAbs().maxCoeff() <
               kCovTol * scale;
      };

      Eigen::MatrixXcd found;
      for (std::uint64_t seed = 1; seed <= 4 && found.size() == 0; ++seed) {
        const Eigen::MatrixXcd rho1 = random_density(d, 7919 * seed + 1);
        const Eigen::MatrixXcd rho2 = random_density(d, 104729 * seed + 2);
        const Eigen::MatrixXcd v = recover_output_unitary(
            ch.apply(rho1), ch.apply(u * rho1 * u.adjoint()), ch.apply(rho2),
            ch.apply(u * rho2 * u.adjoint()));
        if (verify(v)) found = v;
      }
      if (found.size() == 0) {
        // Cheap structural candidates (degenerate channels).
        std::vector<Eigen::MatrixXcd> cands;
        cands.push_back(Eigen::MatrixXcd::Identity(ch.dim_out, ch.dim_out));
        if (ch.dim_out == d) cands.push_back(u);
        if (ch.dim_out == d + 1) {
          Eigen::MatrixXcd aug = Eigen::MatrixXcd::Identity(d + 1, d + 1);
          aug.topLeftCorner(d, d) = u;
          cands.push_back(std::move(aug));
        }
        for (const auto& v : cands) {
          if (verify(v)) {
            found = v;
            break;
          }
        }
      }
      if (found.size() == 0) {
        out.covariant = false;
        out.corrections.clear();
        return out;
      }
      out.corrections.push_back(std::move(found));
    }
  }
  out.covariant = true;
  return out;
}

bool is_tele_covariant(const QuditChannel& ch) {
  return tele_covariance(ch).covariant;
}

StretchReport stretch_check(const QuditChannel& ch) {
  TeleCovariance tc = tele_covariance(ch);
  if (!tc.covariant) {
    throw NotCovariantError("channel is not teleportation-covariant");
  }
  const DensityMatrix resource = choi_of(ch);
  const QuditChannel rebuilt =
      teleport_channel(resource, ch.dim_in, tc.corrections);
  const Eigen::MatrixXcd diff = choi_of(rebuilt).rho - choi_of(ch).rho;
  StretchReport rep;
  rep.covariant = true;
  rep.choi_distance = diff.norm();
  return rep;
}

}  // namespace qcb
