#pragma once

#include <cmath>
#include <limits>
#include <vector>

namespace qcb {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kLn2 = 0.693147180559945309417232121458;

/// Bosonic entropy of a thermal mode with nbar mean photons, in bits:
/// h(x) = (x+1) log2(x+1) - x log2(x).  h(0) = 0 by continuity.
inline double h_thermal(double nbar) {
  if (nbar <= 0.0) return 0.0;
  // log2(nbar+1) + nbar*log2(1 + 1/nbar), cancellation-free for any nbar
  return (std::log1p(nbar) + nbar * std::log1p(1.0 / nbar)) / kLn2;
}

/// Same entropy as a function of the symplectic eigenvalue nu = nbar + 1/2.
inline double s_entropy(double nu) {
  if (nu <= 0.5) return 0.0;
  return 0.5 * std::log2(nu * nu - 0.25) +
         nu * std::log1p(1.0 / (nu - 0.5)) / kLn2;
}

/// Binary Shannon entropy in bits; H2(0) = H2(1) = 0.
inline double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

/// Shannon entropy of a probability vector in bits (zero entries skipped).
inline double shannon_entropy(const std::vector<double>& p) {
  double s = 0.0;
  for (double x : p) {
    if (x > 0.0) s -= x * std::log2(x);
  }
  return s;
}

}  // namespace qcb
