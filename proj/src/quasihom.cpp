#include "qhcurve/quasihom.hpp"

#include <algorithm>
#include <chrono>

#include "qhcurve/error.hpp"
#include "qhcurve/ideal.hpp"
#include "qhcurve/numerical_semigroup.hpp"

namespace qhcurve {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_us(Clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - since).count();
}

void certify(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::VerificationFailed, what);
}

}  // namespace

ValuationCriterionResult check_valuation_criterion(const Ring& ring) {
  const auto& curve = ring.curve();
  ValuationCriterionResult out;
  out.conductor = ring.conductor();
  for (std::size_t i = 0; i < curve.size(); ++i) out.order_values.push_back(order_of_unit(curve.unit_part(i)));

  out.r = static_cast<std::size_t>(std::min_element(out.order_values.begin(), out.order_values.end()) -
                                   out.order_values.begin());
  out.a = 0;
  for (std::size_t j = 0; j < curve.size(); ++j)
    if (j != out.r && (out.a == 0 || curve.exponents()[j] < out.a)) out.a = curve.exponents()[j];

  const Valuation& o_r = out.order_values[out.r];
  out.monomial = o_r.is_infinite();
  out.met = out.monomial || o_r.value() + out.a >= out.conductor;
  return out;
}

std::string_view to_string(ReparametrizationBranch branch) {
  switch (branch) {
    case ReparametrizationBranch::Monomial: return "monomial";
    case ReparametrizationBranch::CoordinateUnchanged: return "coordinate_unchanged";
    case ReparametrizationBranch::RootOfFirstUnit: return "root_of_first_unit";
  }
  return "unknown";
}

Reparametrization reparametrize(const Ring& ring, const ValuationCriterionResult& crit) {
  if (!crit.met)
    throw Error(ErrorKind::CriterionNotMet, "o(alpha_r) + a = " + to_string(crit.order_values.at(crit.r) + crit.a) +
                                                " < c_R = " + std::to_string(crit.conductor));
  const auto& curve = ring.curve();
  const int P = ring.precision();
  const int c = ring.conductor();

  Reparametrization out;
  out.monomial_exponents = curve.exponents();
  out.semigroup_generators = minimal_generators(ring.basis().membership(), c);

  if (crit.monomial || crit.r != 0) {
    // x_j = alpha_j(0) t^(a_j) + (terms of valuation >= c_R), so t^(a_j) is in R.
    out.branch = crit.monomial ? ReparametrizationBranch::Monomial : ReparametrizationBranch::CoordinateUnchanged;
    out.new_uniformizer = TruncatedSeries::monomial(Rational(1), 1, P);
    out.inverse_parameter = out.new_uniformizer;
  } else {
    // s = alpha_1^(1/a_1) t makes x_1 = s^(a_1); the tails of the other
    // generators lie in the conductor when written in s.
    out.branch = ReparametrizationBranch::RootOfFirstUnit;
    const int a1 = curve.multiplicity();
    const TruncatedSeries beta = nth_root_of_unit(curve.unit_part(0), static_cast<unsigned>(a1));
    out.new_uniformizer = beta.shifted(1);
    out.inverse_parameter = reversion(out.new_uniformizer);
    const TruncatedSeries lead = pow(out.new_uniformizer, static_cast<unsigned>(a1));
    const int upto = std::min(lead.precision(), curve.generators()[0].precision());
    certify(lead.agrees_with(curve.generators()[0], upto), "s^(a_1) differs from x_1");
  }

  for (int a : out.monomial_exponents)
    certify(ring.contains(pow(out.new_uniformizer, static_cast<unsigned>(a))),
            "s^" + std::to_string(a) + " is not in R");
  for (int g : out.semigroup_generators)
    certify(ring.contains(pow(out.new_uniformizer, static_cast<unsigned>(g))),
            "s^" + std::to_string(g) + " is not in R");
  return out;
}

TraceCriterionResult check_trace_criterion(const Ring& ring) {
  const auto& curve = ring.curve();
  const FractionalIdeal d = derivative_ideal(curve);
  const FractionalIdeal d_inv = inverse(d, ring);
  const FractionalIdeal tr = multiply(d, d_inv, ring);

  TraceCriterionResult out;
  out.v_D = d.min_valuation();
  out.v_D_inverse = d_inv.min_valuation();
  out.v_trace = tr.min_valuation();
  out.v_maximal_ideal = curve.multiplicity();
  if (out.v_D != out.v_maximal_ideal - 1)
    throw Error(ErrorKind::InternalConsistency, "v(D) = " + std::to_string(out.v_D) + " but a_1 - 1 = " +
                                                    std::to_string(out.v_maximal_ideal - 1));
  if (out.v_trace != out.v_D + out.v_D_inverse)
    throw Error(ErrorKind::InternalConsistency, "v(tr D) = " + std::to_string(out.v_trace) +
                                                    " differs from v(D) + v(D^-1)");
  out.quasihomogeneous = out.v_trace == out.v_maximal_ideal;
  out.h_invariant = colength(d, ring) - ring.semigroup().genus + out.v_D_inverse;
  if (out.h_invariant < 1)
    throw Error(ErrorKind::InternalConsistency, "h(Omega_R) = " + std::to_string(out.h_invariant) +
                                                    " < 1 on a non-regular ring");
  return out;
}

int h_invariant(const Ring& ring) {
  const FractionalIdeal d = derivative_ideal(ring.curve());
  const int h = colength(d, ring) - ring.semigroup().genus + inverse(d, ring).min_valuation();
  if (h < 1) throw Error(ErrorKind::InternalConsistency, "h(Omega_R) = " + std::to_string(h) + " < 1");
  return h;
}

std::optional<bool> AnalysisReport::quasihomogeneous() const {
  if (trace_criterion) return trace_criterion->quasihomogeneous;
  if (valuation_criterion && valuation_criterion->met) return true;
  return std::nullopt;
}

namespace {

AnalysisReport analyze_ring(const Ring& ring, const AnalyzeOptions& options, std::int64_t semigroup_us) {
  AnalysisReport report;
  report.normalized_generators = ring.curve().generators();
  report.exponents = ring.curve().exponents();
  report.precision = ring.precision();
  report.semigroup = ring.semigroup();
  report.monomial_ring = is_monomial_ring(ring.curve());
  report.timings.semigroup_us = semigroup_us;

  if (options.checks != CheckSelection::Trace) {
    const auto start = Clock::now();
    report.valuation_criterion = check_valuation_criterion(ring);
    report.timings.valuation_us = elapsed_us(start);
  }
  if (options.checks != CheckSelection::Valuation) {
    const auto start = Clock::now();
    report.trace_criterion = check_trace_criterion(ring);
    report.timings.trace_us = elapsed_us(start);
  }
  if (options.reparametrize && report.valuation_criterion && report.valuation_criterion->met) {
    const auto start = Clock::now();
    report.reparametrization = reparametrize(ring, *report.valuation_criterion);
    report.timings.reparametrize_us = elapsed_us(start);
  }

  if (const auto& tc = report.trace_criterion) {
    const bool by_inverse = tc->v_D_inverse == 1;
    const bool by_h = tc->h_invariant == 1;
    if (tc->quasihomogeneous != by_inverse || by_inverse != by_h)
      throw Error(ErrorKind::InternalConsistency,
                  "verdict, v(D^-1) = 1 and h = 1 disagree (v(D^-1) = " + std::to_string(tc->v_D_inverse) +
                      ", h = " + std::to_string(tc->h_invariant) + ")");
    if (report.valuation_criterion && report.valuation_criterion->met && !tc->quasihomogeneous)
      throw Error(ErrorKind::InternalConsistency, "valuation criterion met but trace criterion says not quasihomogeneous");
  }
  return report;
}

}  // namespace

AnalysisReport analyze(const Ring& ring, const AnalyzeOptions& options) { return analyze_ring(ring, options, 0); }

AnalysisReport analyze(std::span<const TruncatedSeries> raw_generators, const AnalyzeOptions& options) {
  std::optional<int> precision = options.precision;
  for (;;) {
    const auto start = Clock::now();
    const Ring ring = Ring::build(raw_generators, RingOptions{precision, options.max_precision});
    const std::int64_t semigroup_us = elapsed_us(start);
    try {
      return analyze_ring(ring, options, semigroup_us);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InsufficientPrecision) throw;
      if (ring.precision() >= options.max_precision)
        throw Error(ErrorKind::PrecisionCapExceeded, std::string("ideal computations need more than the cap: ") + e.what());
      precision = std::min(2 * ring.precision(), options.max_precision);
    }
  }
}

}  // namespace qhcurve
