#include "qcb/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "qcb/bounds.hpp"
#include "qcb/entropy.hpp"
#include "qcb/errors.hpp"
#include "qcb/parse.hpp"
#include "qcb/qkd.hpp"
#include "qcb/telesim.hpp"

namespace qcb {

double eta_from_distance_km(double km) {
  if (km < 0.0) throw DomainError("distance must be >= 0 km");
  return std::pow(10.0, -0.02 * km);
}

std::string format_value(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

struct Args {
  std::vector<std::string> positional;
  std::optional<std::string> axis;
  std::optional<double> from;
  std::optional<double> to;
  std::optional<int> points;
  bool distance_mode = false;
  std::optional<double> distance_value;
  std::optional<double> eta;
  std::vector<std::string> series;
  std::string format = "csv";
  std::optional<std::string> out_path;
  std::vector<double> mu_list;
  bool slope = false;
};

double parse_num(const std::string& s, const std::string& flag) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') {
    throw ParseError("flag " + flag + " expects a number, got '" + s + "'", 0);
  }
  return v;
}

Args parse_args(const std::vector<std::string>& raw, std::size_t start) {
  // Accept both "--flag value" and "--flag=value".
  std::vector<std::string> argv;
  for (std::size_t i = start; i < raw.size(); ++i) {
    const std::string& t = raw[i];
    const std::size_t eq = t.find('=');
    if (t.rfind("--", 0) == 0 && eq != std::string::npos) {
      argv.push_back(t.substr(0, eq));
      argv.push_back(t.substr(eq + 1));
    } else {
      argv.push_back(t);
    }
  }

  Args a;
  for (std::size_t i = 0; i < argv.size(); ++i) {
    const std::string& t = argv[i];
    auto next = [&](const char* flag) -> const std::string& {
      if (i + 1 >= argv.size()) {
        throw ParseError(std::string("flag ") + flag + " expects a value", 0);
      }
      return argv[++i];
    };
    if (t == "--axis") {
      a.axis = next("--axis");
    } else if (t == "--from") {
      a.from = parse_num(next("--from"), t);
    } else if (t == "--to") {
      a.to = parse_num(next("--to"), t);
    } else if (t == "--points") {
      a.points = static_cast<int>(parse_num(next("--points"), t));
    } else if (t == "--distance-km") {
      // Bare flag in sweeps (axis is km); takes a value for point commands.
      if (i + 1 < argv.size() && !argv[i + 1].empty() && argv[i + 1][0] != '-') {
        a.distance_value = parse_num(argv[++i], t);
      }
      a.distance_mode = true;
    } else if (t == "--eta") {
      a.eta = parse_num(next("--eta"), t);
    } else if (t == "--series") {
      std::stringstream ss(next("--series"));
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) a.series.push_back(tok);
      }
    } else if (t == "--format") {
      a.format = next("--format");
      if (a.format != "csv" && a.format != "json") {
        throw ParseError("format must be csv or json", 0);
      }
    } else if (t == "--out") {
      a.out_path = next("--out");
    } else if (t == "--mu") {
      std::stringstream ss(next("--mu"));
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) a.mu_list.push_back(parse_num(tok, "--mu"));
      }
    } else if (t == "--slope") {
      a.slope = true;
    } else if (!t.empty() && t[0] == '-') {
      throw ParseError("unknown flag '" + t + "'", 0);
    } else {
      a.positional.push_back(t);
    }
  }
  return a;
}

void print_report(std::ostream& out, const std::string& label,
                  const BoundReport& r) {
  out << "channel: " << label << "\n";
  out << "lower: " << format_value(r.lower) << " (" << r.lower_name;
  if (r.lower_clamped) out << ", clamped";
  out << ")\n";
  out << "upper: " << format_value(r.upper) << " (" << r.upper_name << ")\n";
  out << "exact: " << (r.exact ? "yes" : "no") << "\n";
}

int cmd_capacity(const Args& a, std::ostream& out) {
  if (a.positional.size() != 1) {
    throw ParseError("capacity expects exactly one channel spec", 0);
  }
  const ChannelSpec c = parse_channel_spec(a.positional[0]);
  print_report(out, describe(c), two_way_capacity(c));
  return kCliOk;
}

double channel_eta(const ChannelSpec& c) {
  if (const auto* tl = std::get_if<ThermalLoss>(&c)) return tl->eta;
  throw DomainError("this series needs a lossy/thermal-loss channel");
}

double eval_series(const std::string& name, const ChannelSpec& c) {
  if (name == "capacity" || name == "capacity-upper") {
    return two_way_capacity(c).upper;
  }
  if (name == "capacity-lower") return two_way_capacity(c).lower;
  if (name == "flux") return entanglement_flux(c);
  if (name == "rci") return reverse_coherent_info(c).value;
  if (name == "coherent-info") return coherent_info(c).raw;
  if (name == "coherent-info-clamped") return coherent_info(c).value;
  if (name == "tgw") {
    const auto* tl = std::get_if<ThermalLoss>(&c);
    if (tl == nullptr) throw DomainError("tgw series needs a loss channel");
    if (tl->eta >= 1.0) return kInf;
    return tgw_bound(tl->eta, tl->nbar);
  }
  if (name == "squashed") {
    const auto* ad = std::get_if<AmplitudeDamping>(&c);
    if (ad == nullptr) throw DomainError("squashed series needs damping");
    return squashed_damping_bound(ad->p);
  }
  // Otherwise a protocol token evaluated at the channel transmissivity.
  const ProtocolId p = parse_protocol_spec(name);
  return ideal_rate(p, channel_eta(c)).value;
}

void emit_csv(std::ostream& os, const std::vector<std::string>& series,
              const std::vector<double>& xs,
              const std::vector<std::vector<double>>& cols) {
  os << "x";
  for (const auto& s : series) os << "," << s;
  os << "\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    os << format_value(xs[i]);
    for (const auto& col : cols) os << "," << format_value(col[i]);
    os << "\n";
  }
}

std::string json_number(double v) {
  if (std::isinf(v)) return v > 0 ? "\"Infinity\"" : "\"-Infinity\"";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void emit_json(std::ostream& os, const std::vector<std::string>& series,
               const std::vector<double>& xs,
               const std::vector<std::vector<double>>& cols) {
  os << "{\n  \"x\": [";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ", ";
    os << json_number(xs[i]);
  }
  os << "],\n  \"series\": {\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    os << "    \"" << series[s] << "\": [";
    for (std::size_t i = 0; i < cols[s].size(); ++i) {
      if (i) os << ", ";
      os << json_number(cols[s][i]);
    }
    os << "]";
    os << (s + 1 < series.size() ? ",\n" : "\n");
  }
  os << "  }\n}\n";
}

int cmd_sweep(const Args& a, std::ostream& out) {
  if (a.positional.size() != 1) {
    throw ParseError("sweep expects exactly one channel spec", 0);
  }
  if (a.series.empty()) throw ParseError("sweep requires --series", 0);
  if (!a.from || !a.to) throw ParseError("sweep requires --from and --to", 0);
  const int points = a.points.value_or(0);
  if (points < 1) throw ParseError("sweep requires --points >= 1", 0);
  if (!a.distance_mode && !a.axis) {
    throw ParseError("sweep requires --axis NAME or --distance-km", 0);
  }

  const std::string& base = a.positional[0];
  const std::string axis_param = a.distance_mode ? "eta" : *a.axis;

  std::vector<double> xs(points);
  for (int i = 0; i < points; ++i) {
    xs[i] = points == 1 ? *a.from
                        : *a.from + (*a.to - *a.from) * i / (points - 1);
  }

  std::vector<std::vector<double>> cols(a.series.size(),
                                        std::vector<double>(points));
  for (int i = 0; i < points; ++i) {
    const double param =
        a.distance_mode ? eta_from_distance_km(xs[i]) : xs[i];
    char val[64];
    std::snprintf(val, sizeof(val), "%.17g", param);
    const std::string text = base +
                             (base.find(':') == std::string::npos ? ":" : ",") +
                             axis_param + "=" + val;
    const ChannelSpec c = parse_channel_spec(text);
    for (std::size_t s = 0; s < a.series.size(); ++s) {
      cols[s][i] = eval_series(a.series[s], c);
    }
  }

  std::ofstream file;
  std::ostream* os = &out;
  if (a.out_path) {
    file.open(*a.out_path);
    if (!file) throw DomainError("cannot open output file " + *a.out_path);
    os = &file;
  }
  if (a.format == "json") {
    emit_json(*os, a.series, xs, cols);
  } else {
    emit_csv(*os, a.series, xs, cols);
  }
  return kCliOk;
}

int cmd_verify_limit(const Args& a, std::ostream& out) {
  if (a.positional.size() != 1) {
    throw ParseError("verify-limit expects exactly one channel spec", 0);
  }
  const ChannelSpec c = parse_channel_spec(a.positional[0]);
  std::vector<double> mus = a.mu_list;
  if (mus.empty()) mus = {1e2, 1e3, 1e4};

  const double closed = entanglement_flux(c);
  out << "mu,S_mu,closed_form,abs_diff,abs_diff_mu\n";
  double first_scaled = -1.0, last_scaled = -1.0;
  for (double mu : mus) {
    const double smu = flux_numeric_limit(c, mu);
    const double diff = std::isinf(closed) ? kInf : std::abs(smu - closed);
    const double scaled = diff * mu;
    out << format_value(mu) << "," << format_value(smu) << ","
        << format_value(closed) << "," << format_value(diff) << ","
        << format_value(scaled) << "\n";
    if (first_scaled < 0.0) first_scaled = scaled;
    last_scaled = scaled;
  }
  if (std::isinf(closed)) return kCliVerificationFailure;
  if (last_scaled > first_scaled * 1.05 + 1e-9) {
    out << "verify-limit: |diff|*mu grows with mu\n";
    return kCliVerificationFailure;
  }
  return kCliOk;
}

int cmd_telesim_check(const Args& a, std::ostream& out) {
  if (a.positional.size() != 1) {
    throw ParseError("telesim-check expects exactly one channel spec", 0);
  }
  const ChannelSpec c = parse_channel_spec(a.positional[0]);
  const QuditChannel ch = dv_kraus_channel(c);
  const TeleCovariance tc = tele_covariance(ch);
  out << "channel: " << describe(c) << "\n";
  out << "tele-covariant: " << (tc.covariant ? "yes" : "no") << "\n";
  if (!tc.covariant) return kCliOk;
  const StretchReport rep = stretch_check(ch);
  out << "choi-roundtrip-distance: " << format_value(rep.choi_distance) << "\n";
  return rep.choi_distance < 1e-10 ? kCliOk : kCliVerificationFailure;
}

int cmd_qkd_rate(const Args& a, std::ostream& out) {
  if (a.positional.size() != 1) {
    throw ParseError("qkd-rate expects exactly one protocol", 0);
  }
  const ProtocolId p = parse_protocol_spec(a.positional[0]);
  if (a.slope) {
    out << "protocol: " << protocol_name(p) << "\n";
    out << "slope: " << format_value(asymptotic_slope(p)) << "\n";
    return kCliOk;
  }
  double eta;
  if (a.eta) {
    eta = *a.eta;
  } else if (a.distance_value) {
    eta = eta_from_distance_km(*a.distance_value);
  } else if (const auto* asym = std::get_if<CvMdiAsym>(&p)) {
    eta = asym->etaA * asym->etaB;
  } else {
    throw ParseError("qkd-rate requires --eta or --distance-km", 0);
  }
  const ClampedRate r = ideal_rate(p, eta);
  out << "protocol: " << protocol_name(p) << "\n";
  out << "eta: " << format_value(eta) << "\n";
  out << "rate: " << format_value(r.value);
  if (r.clamped) out << " (clamped, raw " << format_value(r.raw) << ")";
  out << "\n";
  return kCliOk;
}

const char kUsage[] =
    "usage: qcap <command> [options]\n"
    "commands:\n"
    "  capacity <channel-spec>             closed-form capacity bounds\n"
    "  sweep <channel-spec> --axis P --from A --to B --points N\n"
    "        --series s1,s2,... [--distance-km] [--format csv|json] [--out F]\n"
    "  verify-limit <channel-spec> [--mu m1,m2,...]\n"
    "  telesim-check <channel-spec>\n"
    "  qkd-rate <protocol> (--eta V | --distance-km V | --slope)\n";

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    if (args.empty()) {
      err << kUsage;
      return kCliParseError;
    }
    const std::string& cmd = args[0];
    const Args a = parse_args(args, 1);
    if (cmd == "capacity") return cmd_capacity(a, out);
    if (cmd == "sweep") return cmd_sweep(a, out);
    if (cmd == "verify-limit") return cmd_verify_limit(a, out);
    if (cmd == "telesim-check") return cmd_telesim_check(a, out);
    if (cmd == "qkd-rate") return cmd_qkd_rate(a, out);
    if (cmd == "--help" || cmd == "help") {
      out << kUsage;
      return kCliOk;
    }
    throw ParseError("unknown command '" + cmd + "'", 0);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kCliParseError;
  } catch (const DimensionTooLargeError& e) {
    err << "domain error: " << e.what() << "\n";
    return kCliDomainError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kCliDomainError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kCliDomainError;
  }
}

}  // namespace qcb
