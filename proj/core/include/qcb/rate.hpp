#pragma once

namespace qcb {

/// A possibly-clamped rate: closed forms can come out negative, achievable
/// rates cannot.  `raw` keeps the unclamped value for plots.
struct ClampedRate {
  double value;
  double raw;
  bool clamped;
};

inline ClampedRate clamp_rate(double raw) {
  return {raw < 0.0 ? 0.0 : raw, raw, raw < 0.0};
}

}  // namespace qcb
