#include "qcb/cli.hpp"

#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qcb/errors.hpp"
#include "qcb/parse.hpp"

using namespace qcb;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("channel spec grammar") {
  SUBCASE("scalar and list parameters") {
    auto c = parse_channel_spec("thermal-loss:eta=0.5,nbar=1");
    const auto& tl = std::get<ThermalLoss>(c);
    CHECK(tl.eta == 0.5);
    CHECK(tl.nbar == 1.0);

    auto p = parse_channel_spec("pauli:d=2,p=0.7,0.1,0.1,0.1");
    const auto& pq = std::get<PauliQudit>(p);
    CHECK(pq.d == 2);
    CHECK(pq.probs == std::vector<double>{0.7, 0.1, 0.1, 0.1});

    auto deph = parse_channel_spec("dephasing:p=0.3");
    const auto& dz = std::get<Dephasing>(deph);
    CHECK(dz.d == 2);
    CHECK(dz.probs[1] == 0.3);

    auto dq = parse_channel_spec("dephasing:d=3,P=0.6,0.3,0.1");
    CHECK(std::get<Dephasing>(dq).d == 3);
  }
  SUBCASE("errors carry a position") {
    try {
      parse_channel_spec("lossy:eta=abc");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 10);
    }
    CHECK_THROWS_AS(parse_channel_spec("warp:eta=0.5"), ParseError);
    CHECK_THROWS_AS(parse_channel_spec("lossy:eta=0.5,eta=0.6"), ParseError);
    CHECK_THROWS_AS(parse_channel_spec("lossy:eta=0.5,bogus=1"), ParseError);
    CHECK_THROWS_AS(parse_channel_spec("pauli:d=2,p=0.9,0.1,0.1,0.1"),
                    DomainError);  // not normalized
    CHECK_THROWS_AS(parse_channel_spec("lossy:eta=1.5"), DomainError);
  }
}

TEST_CASE("capacity command") {
  auto r = run({"capacity", "lossy:eta=0.5"});
  CHECK(r.code == kCliOk);
  CHECK(r.out.find("lower: 1 (reverse-coherent-information)") != std::string::npos);
  CHECK(r.out.find("upper: 1 (entanglement-flux)") != std::string::npos);
  CHECK(r.out.find("exact: yes") != std::string::npos);

  auto e4 = run({"capacity", "erasure:d=4,p=0.5"});
  CHECK(e4.code == kCliOk);
  CHECK(e4.out.find("upper: 1 (entanglement-flux)") != std::string::npos);
  CHECK(e4.out.find("exact: yes") != std::string::npos);

  auto damp = run({"capacity", "damping:p=0.25"});
  CHECK(damp.code == kCliOk);
  CHECK(damp.out.find("exact: no") != std::string::npos);
  CHECK(damp.out.find("squashed-entanglement") != std::string::npos);

  CHECK(run({"capacity", "nonsense"}).code == kCliParseError);
  CHECK(run({"capacity", "lossy:eta=2"}).code == kCliDomainError);
}

TEST_CASE("sweep command") {
  SUBCASE("csv output is bit-stable and well formed") {
    auto r1 = run({"sweep", "lossy", "--axis", "eta", "--from", "0.1", "--to",
                   "0.9", "--points", "5", "--series", "capacity,tgw"});
    auto r2 = run({"sweep", "lossy", "--axis", "eta", "--from", "0.1", "--to",
                   "0.9", "--points", "5", "--series", "capacity,tgw"});
    CHECK(r1.code == kCliOk);
    CHECK(r1.out == r2.out);
    CHECK(r1.out.rfind("x,capacity,tgw\n", 0) == 0);
    // 1 header + 5 rows
    int lines = 0;
    for (char ch : r1.out) lines += ch == '\n';
    CHECK(lines == 6);
  }
  SUBCASE("distance mode converts 50 km to eta = 0.1") {
    auto r = run({"sweep", "lossy", "--distance-km", "--from", "50", "--to",
                  "50", "--points", "1", "--series", "capacity"});
    CHECK(r.code == kCliOk);
    // -log2(1 - 0.1) = 0.152003093445049
    CHECK(r.out.find("50,0.152003093445") != std::string::npos);
  }
  SUBCASE("single-point sweep equals the capacity command") {
    auto s = run({"sweep", "damping", "--axis", "p", "--from", "0.25", "--to",
                  "0.25", "--points", "1", "--series", "capacity-lower,capacity"});
    auto c = run({"capacity", "damping:p=0.25"});
    REQUIRE(s.code == kCliOk);
    // Extract the numbers from both outputs and compare.
    const auto row = s.out.substr(s.out.find('\n') + 1);
    const auto comma1 = row.find(',');
    const auto comma2 = row.find(',', comma1 + 1);
    const std::string lower = row.substr(comma1 + 1, comma2 - comma1 - 1);
    const std::string upper = row.substr(comma2 + 1, row.size() - comma2 - 2);
    CHECK(c.out.find("lower: " + lower) != std::string::npos);
    CHECK(c.out.find("upper: " + upper) != std::string::npos);
  }
  SUBCASE("eta=1 rows render inf in csv and Infinity in json") {
    auto csv = run({"sweep", "lossy", "--axis", "eta", "--from", "1", "--to",
                    "1", "--points", "1", "--series", "capacity"});
    CHECK(csv.out.find("1,inf") != std::string::npos);
    auto js = run({"sweep", "lossy", "--axis", "eta", "--from", "1", "--to",
                   "1", "--points", "1", "--series", "capacity", "--format",
                   "json"});
    CHECK(js.out.find("\"Infinity\"") != std::string::npos);
  }
  SUBCASE("json output parses and carries the right values") {
    auto js = run({"sweep", "lossy", "--axis", "eta", "--from", "0.25", "--to",
                   "0.75", "--points", "3", "--series", "capacity,tgw",
                   "--format", "json"});
    REQUIRE(js.code == kCliOk);
    const auto doc = nlohmann::json::parse(js.out);
    REQUIRE(doc.at("x").size() == 3);
    CHECK(doc.at("x")[1].get<double>() == doctest::Approx(0.5));
    CHECK(doc.at("series").at("capacity")[1].get<double>() ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(doc.at("series").at("tgw")[1].get<double>() ==
          doctest::Approx(std::log2(3.0)).epsilon(1e-12));
  }
  SUBCASE("fig-4 style recipe stays ordered below the capacity") {
    auto r = run({"sweep", "lossy", "--distance-km", "--from", "1", "--to",
                  "500", "--points", "25", "--series",
                  "capacity,tgw,no-switching,twoway-hom,bb84-1ph,bb84-decoy,dvmdi"});
    REQUIRE(r.code == kCliOk);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);  // header
    std::vector<double> prevS;
    while (std::getline(is, line)) {
      std::vector<double> vals;
      std::stringstream ls(line);
      std::string tok;
      while (std::getline(ls, tok, ',')) vals.push_back(std::stod(tok));
      // capacity (col 1) topmost, tgw (col 2) above capacity, protocols below.
      for (std::size_t s = 3; s < vals.size(); ++s) CHECK(vals[s] <= vals[1] + 1e-12);
      CHECK(vals[1] < vals[2]);
      if (!prevS.empty()) {
        for (std::size_t s = 1; s < vals.size(); ++s) CHECK(vals[s] <= prevS[s] + 1e-12);
      }
      prevS = vals;
    }
  }
  SUBCASE("fig-5c recipe: gap shrinks as xi -> 0") {
    // Below the clamp point the gap is exactly xi/ln2, so it vanishes with
    // the noise; sweep the small-noise region in ascending xi.
    auto r = run({"sweep", "additive", "--axis", "xi", "--from", "0.01", "--to",
                  "0.3", "--points", "10", "--series",
                  "flux,coherent-info-clamped"});
    REQUIRE(r.code == kCliOk);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    double prev_gap = -1.0, first_gap = -1.0;
    while (std::getline(is, line)) {
      const auto c1 = line.find(',');
      const auto c2 = line.find(',', c1 + 1);
      const double flux = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
      const double ci = std::stod(line.substr(c2 + 1));
      const double gap = flux - ci;
      CHECK(gap > 0.0);
      if (prev_gap >= 0.0) CHECK(gap > prev_gap);
      if (first_gap < 0.0) first_gap = gap;
      prev_gap = gap;
    }
    CHECK(first_gap < 0.02);  // almost coincident already at xi = 0.01
  }
  SUBCASE("emitted capacity columns keep the bound ordering") {
    auto r = run({"sweep", "damping", "--axis", "p", "--from", "0.02", "--to",
                  "0.98", "--points", "25", "--series",
                  "capacity-lower,capacity-upper,squashed,flux"});
    REQUIRE(r.code == kCliOk);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
      std::vector<double> vals;
      std::stringstream ls(line);
      std::string tok;
      while (std::getline(ls, tok, ',')) vals.push_back(std::stod(tok));
      REQUIRE(vals.size() == 5);
      CHECK(vals[1] <= vals[2] + 1e-9);  // lower <= upper
      CHECK(vals[2] <= vals[3] + 1e-12); // upper is the min of the candidates
      CHECK(vals[2] <= vals[4] + 1e-12);
    }
  }
  SUBCASE("--flag=value spelling is accepted") {
    auto spaced = run({"sweep", "lossy", "--axis", "eta", "--from", "0.2",
                       "--to", "0.8", "--points", "3", "--series", "capacity",
                       "--format", "csv"});
    auto eq = run({"sweep", "lossy", "--axis=eta", "--from=0.2", "--to=0.8",
                   "--points=3", "--series=capacity", "--format=csv"});
    CHECK(eq.code == kCliOk);
    CHECK(eq.out == spaced.out);
  }
  SUBCASE("missing flags yield parse errors") {
    CHECK(run({"sweep", "lossy", "--from", "0.1", "--to", "0.9", "--points",
               "5", "--series", "capacity"})
              .code == kCliParseError);
    CHECK(run({"sweep", "lossy", "--axis", "eta", "--from", "0.1", "--to",
               "0.9", "--points", "5"})
              .code == kCliParseError);
  }
  SUBCASE("ranges outside the parameter domain are rejected") {
    CHECK(run({"sweep", "lossy", "--axis", "eta", "--from", "0.5", "--to",
               "1.5", "--points", "5", "--series", "capacity"})
              .code == kCliDomainError);
    CHECK(run({"sweep", "damping", "--axis", "p", "--from", "-0.2", "--to",
               "0.5", "--points", "5", "--series", "capacity"})
              .code == kCliDomainError);
  }
}

TEST_CASE("verify-limit command") {
  auto r = run({"verify-limit", "lossy:eta=0.5", "--mu", "100,1000,10000"});
  CHECK(r.code == kCliOk);
  CHECK(r.out.rfind("mu,S_mu,closed_form,abs_diff,abs_diff_mu\n", 0) == 0);

  auto eb = run({"verify-limit", "additive:xi=1"});
  CHECK(eb.code == kCliOk);
  CHECK(eb.out.find("100,0,0,0,0") != std::string::npos);

  auto amp = run({"verify-limit", "amplifier:g=2", "--mu", "1000,10000"});
  CHECK(amp.code == kCliOk);
  CHECK(amp.out.find(",1,") != std::string::npos);  // closed form equals 1
}

TEST_CASE("telesim-check command") {
  auto cov = run({"telesim-check", "dephasing:p=0.3"});
  CHECK(cov.code == kCliOk);
  CHECK(cov.out.find("tele-covariant: yes") != std::string::npos);
  CHECK(cov.out.find("choi-roundtrip-distance:") != std::string::npos);

  auto damp = run({"telesim-check", "damping:p=0.5"});
  CHECK(damp.code == kCliOk);
  CHECK(damp.out.find("tele-covariant: no") != std::string::npos);

  auto pauli = run({"telesim-check",
                    "pauli:d=3,p=0.111111111111111,0.111111111111111,"
                    "0.111111111111111,0.111111111111111,0.111111111111111,"
                    "0.111111111111111,0.111111111111111,0.111111111111111,"
                    "0.111111111111112"});
  CHECK(pauli.code == kCliOk);
  CHECK(pauli.out.find("tele-covariant: yes") != std::string::npos);

  CHECK(run({"telesim-check", "dephasing:d=5,P=0.6,0.1,0.1,0.1,0.1"}).code ==
        kCliDomainError);  // dimension too large for the search
}

TEST_CASE("qkd-rate command") {
  auto r = run({"qkd-rate", "bb84-decoy", "--eta", "0.5"});
  CHECK(r.code == kCliOk);
  CHECK(r.out.find("rate: 0.0919698602929") != std::string::npos);

  auto d = run({"qkd-rate", "no-switching", "--distance-km", "50"});
  CHECK(d.code == kCliOk);

  auto s = run({"qkd-rate", "twoway-hom", "--slope"});
  CHECK(s.code == kCliOk);
  CHECK(s.out.find("slope: 0.36067") != std::string::npos);

  CHECK(run({"qkd-rate", "bb84-decoy"}).code == kCliParseError);
  CHECK(run({"qkd-rate", "bb84-decoy", "--eta", "1.5"}).code == kCliDomainError);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kCliParseError);
  CHECK(run({"frobnicate"}).code == kCliParseError);
  CHECK(run({"capacity", "lossy:eta=0.5", "extra"}).code == kCliParseError);
}
