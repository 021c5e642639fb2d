#include "qhcurve/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "qhcurve/parser.hpp"
#include "qhcurve/quasihom.hpp"
#include "qhcurve/report.hpp"

namespace qhcurve {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PrecisionCapExceeded:
    case ErrorKind::InsufficientPrecision:
      return kExitPrecisionCap;
    case ErrorKind::InternalConsistency:
    case ErrorKind::VerificationFailed:
      return kExitInternal;
    default:
      return kExitInvalidInput;
  }
}

const char* stage_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::ZeroGenerator:
    case ErrorKind::ConstantTermInGenerator:
    case ErrorKind::ZeroDenominator:
      return "parse";
    case ErrorKind::EmptyInput:
    case ErrorKind::NonPositiveValuation:
    case ErrorKind::RegularRing:
      return "normalize";
    case ErrorKind::PrecisionCapExceeded:
    case ErrorKind::InsufficientPrecision:
      return "semigroup";
    case ErrorKind::CriterionNotMet:
    case ErrorKind::VerificationFailed:
      return "reparametrize";
    case ErrorKind::InternalConsistency:
      return "consistency";
    default:
      return "series";
  }
}

namespace {

struct Failure {
  ErrorKind kind;
  std::string message;
};

using Outcome = std::variant<AnalysisReport, Failure>;

nlohmann::json failure_json(const Failure& f) {
  return {{"error", {{"kind", std::string(to_string(f.kind))}, {"stage", stage_for(f.kind)}, {"message", f.message}}}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasihomogeneity analysis of parametrized algebroid curves", "qhcurve"};
  app.require_subcommand(1);
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze k[[x_1, ..., x_n]] given by generators in t");

  std::string expression;
  std::string file;
  std::optional<int> precision;
  int max_precision = kDefaultMaxPrecision;
  std::string check = "all";
  bool with_reparametrization = false;
  bool json_output = false;
  bool quiet = false;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());

  analyze_cmd->add_option("expression", expression, "Generators, e.g. \"t^4+t^5, t^7, t^8, t^9\"; ';' separates rings");
  analyze_cmd->add_option("-f,--file", file, "Read generators from a file")->check(CLI::ExistingFile);
  analyze_cmd->add_option("--precision", precision, "Starting working precision")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--max-precision", max_precision, "Precision cap")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--check", check, "Criteria to run")->check(CLI::IsMember({"valuation", "trace", "all"}));
  analyze_cmd->add_flag("--reparametrize", with_reparametrization, "Include the reparametrization certificate");
  analyze_cmd->add_flag("--json", json_output, "JSON report on stdout");
  analyze_cmd->add_flag("--quiet", quiet, "Only print the verdict");
  analyze_cmd->add_option("-j,--jobs", jobs, "Rings analyzed concurrently in batch mode")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << (analyze_cmd->parsed() ? analyze_cmd->help() : app.help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  if (precision && *precision > max_precision) {
    err << "error: --precision " << *precision << " exceeds --max-precision " << max_precision << "\n";
    return kExitInvalidInput;
  }

  std::string text;
  if (!expression.empty() && !file.empty()) {
    err << "error: give either an expression or --file, not both\n";
    return kExitInvalidInput;
  }
  if (!file.empty()) {
    std::ifstream f(file, std::ios::binary);
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  } else if (!expression.empty()) {
    text = expression;
  } else {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }

  std::vector<std::vector<TruncatedSeries>> rings;
  try {
    rings = parse_document(text, max_precision);
  } catch (const SyntaxError& e) {
    err << "error [parse]: " << e.what() << "\n";
    if (json_output) out << failure_json({e.kind(), e.what()}).dump(2) << "\n";
    return kExitInvalidInput;
  }

  AnalyzeOptions options;
  options.precision = precision;
  options.max_precision = max_precision;
  options.checks = check == "valuation" ? CheckSelection::Valuation
                   : check == "trace"   ? CheckSelection::Trace
                                        : CheckSelection::All;
  options.reparametrize = with_reparametrization;

  auto run_one = [&options](const std::vector<TruncatedSeries>& gens) -> Outcome {
    try {
      return analyze(gens, options);
    } catch (const Error& e) {
      return Failure{e.kind(), e.what()};
    } catch (const std::exception& e) {
      return Failure{ErrorKind::InternalConsistency, e.what()};
    }
  };

  // Rings are analyzed in parallel waves; results keep input order.
  std::vector<Outcome> outcomes;
  outcomes.reserve(rings.size());
  for (std::size_t start = 0; start < rings.size(); start += jobs) {
    std::vector<std::future<Outcome>> wave;
    for (std::size_t i = start; i < std::min(rings.size(), start + jobs); ++i)
      wave.push_back(std::async(std::launch::async, run_one, std::cref(rings[i])));
    for (auto& f : wave) outcomes.push_back(f.get());
  }

  int code = kExitOk;
  nlohmann::json batch = nlohmann::json::array();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const std::string label = rings.size() > 1 ? "ring " + std::to_string(i + 1) + ": " : "";
    if (const auto* failure = std::get_if<Failure>(&outcomes[i])) {
      code = std::max(code, exit_code_for(failure->kind));
      err << "error [" << stage_for(failure->kind) << "]: " << label << failure->message << "\n";
      batch.push_back(failure_json(*failure));
      continue;
    }
    const auto& report = std::get<AnalysisReport>(outcomes[i]);
    if (json_output) {
      batch.push_back(report_to_json(report));
    } else {
      if (rings.size() > 1) out << "# " << label << "\n";
      out << (quiet ? verdict_line(report) + "\n" : render_text(report));
    }
  }
  if (json_output) out << (rings.size() == 1 ? batch.front() : batch).dump(2) << "\n";
  return code;
}

}  // namespace qhcurve
