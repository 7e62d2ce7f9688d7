#pragma once

#include <string>

#include "qcb/channels.hpp"
#include "qcb/qkd.hpp"

namespace qcb {

/// Parses the flat channel-spec grammar `family:key=value{,key=value}`.
/// List-valued keys comma-join after `=` until the next `key=` token, e.g.
///   lossy:eta=0.5
///   thermal-loss:eta=0.5,nbar=1
///   pauli:d=2,p=0.7,0.1,0.1,0.1
/// Throws ParseError (with position) or DomainError (range checks).
ChannelSpec parse_channel_spec(const std::string& text);

/// Protocol tokens: no-switching, switching, cvmdi-sym, twoway-het,
/// twoway-hom, bb84-1ph, bb84-decoy, dvmdi, and
/// cvmdi-asym:etaA=...,etaB=...
ProtocolId parse_protocol_spec(const std::string& text);

}  // namespace qcb
