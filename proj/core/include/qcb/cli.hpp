#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcb {

/// Exit codes shared by the CLI entry point.
enum CliExit : int {
  kCliOk = 0,
  kCliParseError = 2,
  kCliDomainError = 3,
  kCliVerificationFailure = 4,
};

/// Runs one CLI invocation (args excludes the program name).  All command
/// output goes to `out`, diagnostics to `err`.
///
/// Subcommands: capacity, sweep, verify-limit, telesim-check, qkd-rate.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

/// Transmissivity of a fiber link at 0.2 dB/km: eta = 10^(-0.02 d_km).
double eta_from_distance_km(double km);

/// Fixed float rendering used in tables: 12 significant digits, '.' decimal,
/// "inf" for infinities.
std::string format_value(double v);

}  // namespace qcb
