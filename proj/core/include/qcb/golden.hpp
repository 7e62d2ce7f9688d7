#pragma once

#include <cmath>
#include <utility>

namespace qcb {

/// Golden-section minimization of a unimodal f on [a, b]; returns (x, f(x)).
/// Terminates when the bracket shrinks below xtol.
template <typename F>
std::pair<double, double> golden_min(F&& f, double a, double b,
                                     double xtol = 1e-10) {
  constexpr double invphi = 0.6180339887498948;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (std::abs(b - a) > xtol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

/// Golden-section maximization of a concave f on [a, b].
template <typename F>
std::pair<double, double> golden_max(F&& f, double a, double b,
                                     double xtol = 1e-10) {
  auto [x, v] = golden_min([&](double t) { return -f(t); }, a, b, xtol);
  return {x, -v};
}

}  // namespace qcb
