#include "qcb/parse.hpp"

#include <cstdlib>
#include <map>
#include <set>
#include <vector>

#include "qcb/errors.hpp"

namespace qcb {

namespace {

struct KeyValues {
  std::string key;
  std::vector<double> values;
  std::size_t position;
};

double parse_number(const std::string& tok, std::size_t pos) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw ParseError("expected a number, got '" + tok + "'", pos);
  }
  return v;
}

/// Splits `key=v1,v2,...` groups after the family prefix.
std::vector<KeyValues> parse_params(const std::string& text, std::size_t start) {
  std::vector<KeyValues> groups;
  std::size_t i = start;
  while (i < text.size()) {
    std::size_t eq = text.find('=', i);
    if (eq == std::string::npos) {
      throw ParseError("expected key=value", i);
    }
    KeyValues kv;
    kv.key = text.substr(i, eq - i);
    kv.position = i;
    if (kv.key.empty()) throw ParseError("empty parameter name", i);
    i = eq + 1;
    while (i < text.size()) {
      std::size_t comma = text.find(',', i);
      const std::size_t end = comma == std::string::npos ? text.size() : comma;
      const std::string tok = text.substr(i, end - i);
      // A token containing '=' starts the next key.
      if (tok.find('=') != std::string::npos) break;
      kv.values.push_back(parse_number(tok, i));
      i = end == text.size() ? end : end + 1;
      if (comma == std::string::npos) break;
    }
    if (kv.values.empty()) {
      throw ParseError("parameter '" + kv.key + "' has no value", kv.position);
    }
    groups.push_back(std::move(kv));
  }
  return groups;
}

class Params {
 public:
  Params(const std::string& text, std::size_t start, std::string family)
      : family_(std::move(family)) {
    for (auto& kv : parse_params(text, start)) {
      if (map_.count(kv.key)) {
        throw ParseError("duplicate parameter '" + kv.key + "'", kv.position);
      }
      map_.emplace(kv.key, std::move(kv));
    }
  }

  double scalar(const std::string& key) {
    const KeyValues& kv = get(key);
    if (kv.values.size() != 1) {
      throw ParseError("parameter '" + key + "' expects a single value",
                       kv.position);
    }
    return kv.values[0];
  }

  double scalar_or(const std::string& key, double fallback) {
    if (!map_.count(key)) return fallback;
    return scalar(key);
  }

  std::vector<double> list(const std::string& key) { return get(key).values; }

  bool has(const std::string& key) const { return map_.count(key) != 0; }

  void done() const {
    for (const auto& [key, kv] : map_) {
      if (!used_.count(key)) {
        throw ParseError("unknown parameter '" + key + "' for " + family_,
                         kv.position);
      }
    }
  }

 private:
  const KeyValues& get(const std::string& key) {
    auto it = map_.find(key);
    if (it == map_.end()) {
      throw ParseError(family_ + " requires parameter '" + key + "'", 0);
    }
    used_.insert(key);
    return it->second;
  }

  std::string family_;
  std::map<std::string, KeyValues> map_;
  std::set<std::string> used_;
};

}  // namespace

ChannelSpec parse_channel_spec(const std::string& text) {
  const std::size_t colon = text.find(':');
  const std::string family = text.substr(0, colon);
  const std::size_t pstart = colon == std::string::npos ? text.size() : colon + 1;

  auto params = [&] { return Params(text, pstart, family); };

  ChannelSpec spec;
  if (family == "lossy") {
    Params p = params();
    spec = ThermalLoss{p.scalar("eta"), 0.0};
    p.done();
  } else if (family == "thermal-loss") {
    Params p = params();
    spec = ThermalLoss{p.scalar("eta"), p.scalar_or("nbar", 0.0)};
    p.done();
  } else if (family == "amplifier") {
    Params p = params();
    spec = Amplifier{p.scalar("g"), p.scalar_or("nbar", 0.0)};
    p.done();
  } else if (family == "additive") {
    Params p = params();
    spec = AdditiveNoise{p.scalar("xi")};
    p.done();
  } else if (family == "conj-amplifier") {
    spec = ConjugateAmplifier{};
  } else if (family == "form-a2") {
    spec = FormA2{};
  } else if (family == "form-b1") {
    spec = FormB1{};
  } else if (family == "pauli") {
    Params p = params();
    const int d = static_cast<int>(p.scalar("d"));
    spec = PauliQudit{d, p.list("p")};
    p.done();
  } else if (family == "depolarizing") {
    Params p = params();
    spec = Depolarizing{static_cast<int>(p.scalar_or("d", 2)), p.scalar("p")};
    p.done();
  } else if (family == "dephasing") {
    Params p = params();
    if (p.has("P")) {
      std::vector<double> probs = p.list("P");
      const int d = static_cast<int>(p.scalar_or("d", double(probs.size())));
      spec = Dephasing{d, std::move(probs)};
    } else {
      // Qubit shorthand: single flip probability.
      const double flip = p.scalar("p");
      if (flip < 0.0 || flip > 1.0) throw DomainError("dephasing: p must be in [0,1]");
      spec = Dephasing{2, {1.0 - flip, flip}};
    }
    p.done();
  } else if (family == "erasure") {
    Params p = params();
    spec = Erasure{static_cast<int>(p.scalar_or("d", 2)), p.scalar("p")};
    p.done();
  } else if (family == "damping") {
    Params p = params();
    spec = AmplitudeDamping{p.scalar("p")};
    p.done();
  } else {
    throw ParseError("unknown channel family '" + family + "'", 0);
  }
  validate(spec);
  return spec;
}

ProtocolId parse_protocol_spec(const std::string& text) {
  const std::size_t colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::size_t pstart = colon == std::string::npos ? text.size() : colon + 1;

  if (name == "no-switching") return NoSwitching{};
  if (name == "switching") return Switching{};
  if (name == "cvmdi-sym") return CvMdiSym{};
  if (name == "cvmdi-asym") {
    Params p(text, pstart, name);
    CvMdiAsym a{p.scalar("etaA"), p.scalar("etaB")};
    p.done();
    return a;
  }
  if (name == "twoway-het") return TwoWayHet{};
  if (name == "twoway-hom") return TwoWayHom{};
  if (name == "bb84-1ph") return Bb84SinglePhoton{};
  if (name == "bb84-decoy") return Bb84Decoy{};
  if (name == "dvmdi") return DvMdi{};
  throw ParseError("unknown protocol '" + name + "'", 0);
}

}  // namespace qcb
