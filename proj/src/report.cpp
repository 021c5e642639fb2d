#include "qhcurve/report.hpp"

#include <sstream>
#include <stdexcept>

#include "qhcurve/error.hpp"

namespace qhcurve {

using nlohmann::json;

namespace {

json valuation_to_json(const Valuation& v) {
  if (v.is_finite()) return v.value();
  return "inf";
}

Valuation valuation_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw std::invalid_argument("valuation must be an integer or \"inf\"");
    return Valuation::infinity(0);
  }
  return Valuation::finite(j.get<int>());
}

ReparametrizationBranch branch_from_string(const std::string& s) {
  for (auto b : {ReparametrizationBranch::Monomial, ReparametrizationBranch::CoordinateUnchanged,
                 ReparametrizationBranch::RootOfFirstUnit})
    if (to_string(b) == s) return b;
  throw std::invalid_argument("unknown reparametrization branch " + s);
}

std::string join(const std::vector<int>& xs, const char* sep = ", ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? sep : "") << xs[i];
  return out.str();
}

}  // namespace

json series_to_json(const TruncatedSeries& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(json::array({e, to_string(c)}));
  return {{"precision", f.precision()}, {"terms", terms}};
}

TruncatedSeries series_from_json(const json& j) {
  std::vector<std::pair<int, Rational>> terms;
  const int precision = j.at("precision").get<int>();
  for (const auto& t : j.at("terms")) {
    const int e = t.at(0).get<int>();
    if (e >= precision) throw std::invalid_argument("series term beyond its precision");
    terms.emplace_back(e, parse_rational(t.at(1).get<std::string>()));
  }
  return TruncatedSeries::from_terms(terms, precision);
}

json report_to_json(const AnalysisReport& report) {
  json j;
  j["normalized_generators"] = json::array();
  for (const auto& g : report.normalized_generators) j["normalized_generators"].push_back(series_to_json(g));
  j["exponents"] = report.exponents;
  j["precision"] = report.precision;
  j["monomial_ring"] = report.monomial_ring;

  const auto& sg = report.semigroup;
  j["semigroup"] = {{"gaps", sg.gaps}, {"conductor", sg.conductor}, {"genus", sg.genus}};
  j["semigroup"]["monomial_semigroup_conductor"] =
      sg.monomial_semigroup_conductor ? json(*sg.monomial_semigroup_conductor) : json(nullptr);

  if (const auto& vc = report.valuation_criterion) {
    json orders = json::array();
    for (const auto& o : vc->order_values) orders.push_back(valuation_to_json(o));
    j["valuation_criterion"] = {{"order_values", orders}, {"r", vc->r + 1},           {"a", vc->a},
                                {"conductor", vc->conductor}, {"monomial", vc->monomial}, {"met", vc->met}};
  } else {
    j["valuation_criterion"] = nullptr;
  }

  if (const auto& tc = report.trace_criterion) {
    j["trace_criterion"] = {{"v_D", tc->v_D},
                            {"v_D_inverse", tc->v_D_inverse},
                            {"v_trace", tc->v_trace},
                            {"v_maximal_ideal", tc->v_maximal_ideal},
                            {"quasihomogeneous", tc->quasihomogeneous}};
    j["h_invariant"] = tc->h_invariant;
  } else {
    j["trace_criterion"] = nullptr;
    j["h_invariant"] = nullptr;
  }

  if (const auto& rp = report.reparametrization) {
    j["reparametrization"] = {{"branch", std::string(to_string(rp->branch))},
                              {"uniformizer", series_to_json(rp->new_uniformizer)},
                              {"inverse_parameter", series_to_json(rp->inverse_parameter)},
                              {"exponents", rp->monomial_exponents},
                              {"semigroup_generators", rp->semigroup_generators}};
  } else {
    j["reparametrization"] = nullptr;
  }

  const auto verdict = report.quasihomogeneous();
  j["quasihomogeneous"] = verdict ? json(*verdict) : json(nullptr);
  j["timings"] = {{"semigroup_us", report.timings.semigroup_us},
                  {"valuation_us", report.timings.valuation_us},
                  {"trace_us", report.timings.trace_us},
                  {"reparametrize_us", report.timings.reparametrize_us}};
  return j;
}

AnalysisReport report_from_json(const json& j) {
  AnalysisReport report;
  for (const auto& g : j.at("normalized_generators")) report.normalized_generators.push_back(series_from_json(g));
  report.exponents = j.at("exponents").get<std::vector<int>>();
  report.precision = j.at("precision").get<int>();
  report.monomial_ring = j.at("monomial_ring").get<bool>();

  const auto& sg = j.at("semigroup");
  report.semigroup.gaps = sg.at("gaps").get<std::vector<int>>();
  report.semigroup.conductor = sg.at("conductor").get<int>();
  report.semigroup.genus = sg.at("genus").get<int>();
  if (!sg.at("monomial_semigroup_conductor").is_null())
    report.semigroup.monomial_semigroup_conductor = sg.at("monomial_semigroup_conductor").get<int>();

  if (const auto& vc = j.at("valuation_criterion"); !vc.is_null()) {
    ValuationCriterionResult v;
    for (const auto& o : vc.at("order_values")) v.order_values.push_back(valuation_from_json(o));
    const auto r = vc.at("r").get<std::size_t>();
    if (r == 0 || r > v.order_values.size()) throw std::invalid_argument("valuation_criterion.r out of range");
    v.r = r - 1;
    v.a = vc.at("a").get<int>();
    v.conductor = vc.at("conductor").get<int>();
    v.monomial = vc.at("monomial").get<bool>();
    v.met = vc.at("met").get<bool>();
    report.valuation_criterion = v;
  }

  if (const auto& tc = j.at("trace_criterion"); !tc.is_null()) {
    TraceCriterionResult t;
    t.v_D = tc.at("v_D").get<int>();
    t.v_D_inverse = tc.at("v_D_inverse").get<int>();
    t.v_trace = tc.at("v_trace").get<int>();
    t.v_maximal_ideal = tc.at("v_maximal_ideal").get<int>();
    t.quasihomogeneous = tc.at("quasihomogeneous").get<bool>();
    t.h_invariant = j.at("h_invariant").get<int>();
    report.trace_criterion = t;
  }

  if (const auto& rp = j.at("reparametrization"); !rp.is_null()) {
    Reparametrization r;
    r.branch = branch_from_string(rp.at("branch").get<std::string>());
    r.new_uniformizer = series_from_json(rp.at("uniformizer"));
    r.inverse_parameter = series_from_json(rp.at("inverse_parameter"));
    r.monomial_exponents = rp.at("exponents").get<std::vector<int>>();
    r.semigroup_generators = rp.at("semigroup_generators").get<std::vector<int>>();
    report.reparametrization = r;
  }

  const auto& tm = j.at("timings");
  report.timings.semigroup_us = tm.at("semigroup_us").get<std::int64_t>();
  report.timings.valuation_us = tm.at("valuation_us").get<std::int64_t>();
  report.timings.trace_us = tm.at("trace_us").get<std::int64_t>();
  report.timings.reparametrize_us = tm.at("reparametrize_us").get<std::int64_t>();
  return report;
}

namespace {

/// The first `count` nonzero terms followed by the O-term.
std::string leading_terms(const TruncatedSeries& f, std::size_t count) {
  const auto terms = f.terms();
  if (terms.size() <= count) return to_string(f);
  return to_string(f.truncated(terms[count].first));
}

}  // namespace

std::string polynomial_text(const TruncatedSeries& f) {
  std::string s = to_string(f);
  const auto cut = s.rfind(" + O(t^");
  return cut == std::string::npos ? s : s.substr(0, cut);
}

std::string verdict_line(const AnalysisReport& report) {
  std::string valuation_part;
  if (const auto& vc = report.valuation_criterion) {
    if (vc->monomial) {
      valuation_part = "valuation criterion met (monomial ring)";
    } else {
      const int lhs = vc->order_values[vc->r].value() + vc->a;
      valuation_part = vc->met ? "valuation criterion met (" + std::to_string(lhs) + " >= " + std::to_string(vc->conductor) + ")"
                               : "valuation criterion inconclusive (" + std::to_string(lhs) + " < " +
                                     std::to_string(vc->conductor) + ")";
    }
  }
  if (const auto& tc = report.trace_criterion) {
    std::string line = tc->quasihomogeneous ? "quasihomogeneous (trace criterion)" : "NOT quasihomogeneous (trace criterion)";
    if (!valuation_part.empty()) line += "; " + valuation_part;
    return line;
  }
  if (report.valuation_criterion && report.valuation_criterion->met) return "quasihomogeneous (" + valuation_part + ")";
  return "undecided: " + valuation_part + "; trace criterion not run";
}

std::string render_text(const AnalysisReport& report) {
  std::ostringstream out;
  out << "R = k[[";
  for (std::size_t i = 0; i < report.normalized_generators.size(); ++i)
    out << (i ? ", " : "") << polynomial_text(report.normalized_generators[i]);
  out << "]]  (working precision " << report.precision << ")\n";

  const auto& sg = report.semigroup;
  out << "semigroup: conductor " << sg.conductor << ", genus " << sg.genus << ", gaps {" << join(sg.gaps) << "}\n";

  if (const auto& vc = report.valuation_criterion) {
    out << "orders of units: ";
    for (std::size_t i = 0; i < vc->order_values.size(); ++i)
      out << (i ? ", " : "") << "o(alpha_" << i + 1 << ") = " << to_string(vc->order_values[i]);
    out << "; r = " << vc->r + 1 << ", a = " << vc->a << "\n";
  }
  if (const auto& tc = report.trace_criterion) {
    out << "trace criterion: v(D) = " << tc->v_D << ", v(D^-1) = " << tc->v_D_inverse << ", v(tr(Omega_R)) = "
        << tc->v_trace << (tc->quasihomogeneous ? " = " : " != ") << "v(m) = " << tc->v_maximal_ideal << "\n";
    out << "h(Omega_R) = " << tc->h_invariant << "\n";
  }
  if (const auto& rp = report.reparametrization) {
    out << "reparametrization (" << to_string(rp->branch) << "): s = " << leading_terms(rp->new_uniformizer, 6) << "\n";
    out << "  R = k[[";
    for (std::size_t i = 0; i < rp->semigroup_generators.size(); ++i)
      out << (i ? ", " : "") << "s^" << rp->semigroup_generators[i];
    out << "]], with s^" << join(rp->monomial_exponents, ", s^") << " in R\n";
  }
  out << verdict_line(report) << "\n";
  return out.str();
}

}  // namespace qhcurve
