#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "qhcurve/cli.hpp"
#include "qhcurve/parser.hpp"
#include "qhcurve/report.hpp"

using namespace qhcurve;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* const kFixtures[] = {"t^4+t^5, t^7, t^8, t^9", "t^5, t^6, t^8+t^9", "t^4, t^5, t^6",
                                 "t^4, t^5+t^6, t^6, t^7"};

}  // namespace

TEST_CASE("series json") {
  const auto f = TruncatedSeries::from_terms({{-2, Rational(3, 4)}, {5, -1}}, 9);
  const auto j = series_to_json(f);
  CHECK(j["precision"] == 9);
  CHECK(j["terms"][0][1] == "3/4");
  CHECK(series_from_json(j) == f);
  CHECK(series_from_json(series_to_json(TruncatedSeries::zero(4))) == TruncatedSeries::zero(4));
}

TEST_CASE("report round trip") {
  for (const char* text : kFixtures) {
    CAPTURE(text);
    const auto report = analyze(parse_generators(text));
    const auto j = report_to_json(report);
    CHECK(report_from_json(j) == report);
    CHECK(report_from_json(nlohmann::json::parse(j.dump())) == report);
  }
}

TEST_CASE("json layout") {
  const auto j = report_to_json(analyze(parse_generators("t^5, t^6, t^8+t^9")));
  CHECK(j["semigroup"]["conductor"] == 10);
  CHECK(j["valuation_criterion"]["r"] == 3);
  CHECK(j["valuation_criterion"]["order_values"][0] == "inf");
  CHECK(j["trace_criterion"]["quasihomogeneous"] == false);
  CHECK(j["h_invariant"] == 6);
  CHECK(j["reparametrization"].is_null());
  CHECK(j["quasihomogeneous"] == false);
}

TEST_CASE("verdict lines") {
  CHECK(verdict_line(analyze(parse_generators("t^5, t^6, t^8+t^9"))) ==
        "NOT quasihomogeneous (trace criterion); valuation criterion inconclusive (6 < 10)");
  CHECK(verdict_line(analyze(parse_generators("t^4+t^5, t^7, t^8, t^9"))).find("met (8 >= 7)") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(cli({"analyze", "t^4+t^5, t^7, t^8, t^9"}).code == kExitOk);
  CHECK(cli({"analyze", "t^4 +"}).code == kExitInvalidInput);
  CHECK(cli({"analyze", "t^2"}).code == kExitInvalidInput);
  CHECK(cli({"analyze", "t^4, t^6"}).code == kExitPrecisionCap);
  CHECK(cli({"analyze", "t^7, t^11", "--max-precision", "16"}).code == kExitPrecisionCap);
  CHECK(cli({"analyze", "t^4, t^5", "--check", "nonsense"}).code == kExitInvalidInput);
  CHECK(cli({}).code == kExitInvalidInput);
  CHECK(cli({"analyze", "--help"}).code == kExitOk);
  CHECK(exit_code_for(ErrorKind::VerificationFailed) == kExitInternal);
  CHECK(exit_code_for(ErrorKind::InternalConsistency) == kExitInternal);
  CHECK(exit_code_for(ErrorKind::InsufficientPrecision) == kExitPrecisionCap);
}

TEST_CASE("cli output") {
  const auto quiet = cli({"analyze", "t^5, t^6, t^8+t^9", "--quiet"});
  CHECK(quiet.out == "NOT quasihomogeneous (trace criterion); valuation criterion inconclusive (6 < 10)\n");

  const auto text = cli({"analyze"}, "t^4, t^5, t^6");
  CHECK(text.code == 0);
  CHECK(text.out.find("quasihomogeneous") != std::string::npos);

  const auto json = cli({"analyze", "t^4+t^5, t^7, t^8, t^9", "--json", "--reparametrize"});
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["reparametrization"]["branch"] == "root_of_first_unit");
  auto direct = analyze(parse_generators("t^4+t^5, t^7, t^8, t^9"));
  direct.timings = report_from_json(j).timings;
  CHECK(report_from_json(j) == direct);

  const auto no_rep = nlohmann::json::parse(cli({"analyze", "t^4+t^5, t^7, t^8, t^9", "--json"}).out);
  CHECK(no_rep["reparametrization"].is_null());

  const auto err = cli({"analyze", "t^4, 1/0*t^5", "--json"});
  CHECK(err.code == kExitInvalidInput);
  CHECK(nlohmann::json::parse(err.out)["error"]["kind"] == "ZeroDenominator");
  CHECK(err.err.find("line 1, column") != std::string::npos);
}

TEST_CASE("cli batches keep input order") {
  const auto run = cli({"analyze", "t^4, t^5, t^6; t^2; t^5, t^6, t^8+t^9", "--json", "-j", "3"});
  CHECK(run.code == kExitInvalidInput);
  const auto j = nlohmann::json::parse(run.out);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["quasihomogeneous"] == true);
  CHECK(j[1]["error"]["kind"] == "RegularRing");
  CHECK(j[2]["quasihomogeneous"] == false);
  CHECK(run.err.find("ring 2") != std::string::npos);
}
