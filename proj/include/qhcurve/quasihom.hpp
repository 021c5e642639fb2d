#pragma once

// Quasihomogeneity of R = k[[x_1, ..., x_n]]:
//  - the sufficient valuation criterion o(alpha_r) + min_{j != r} a_j >= c_R,
//    with an explicit monomializing change of uniformizer when it holds;
//  - the exact criterion v(tr(Omega_R)) = v(m), computed as v(D) + v(D^{-1})
//    for the ideal D of derivatives, together with the h-invariant
//    h(Omega_R) = l(R-bar/D) - l(R-bar/R) + v(D^{-1}).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qhcurve/ring.hpp"
#include "qhcurve/series.hpp"

namespace qhcurve {

struct ValuationCriterionResult {
  /// o(alpha_i) per generator.
  std::vector<Valuation> order_values;
  /// 0-based index attaining the minimum order (smallest such index).
  std::size_t r = 0;
  /// min over j != r of a_j
  int a = 0;
  int conductor = 0;
  /// Every o(alpha_i) is infinite; met without evaluating the inequality.
  bool monomial = false;
  bool met = false;

  friend bool operator==(const ValuationCriterionResult&, const ValuationCriterionResult&) = default;
};

ValuationCriterionResult check_valuation_criterion(const Ring& ring);

enum class ReparametrizationBranch { Monomial, CoordinateUnchanged, RootOfFirstUnit };

std::string_view to_string(ReparametrizationBranch branch);

/// A new uniformizer s(t) with R = k[[s^g : g in semigroup_generators]].
struct Reparametrization {
  ReparametrizationBranch branch = ReparametrizationBranch::Monomial;
  /// s(t), valuation 1.
  TruncatedSeries new_uniformizer = TruncatedSeries::zero(0);
  /// t(s), the compositional inverse of s(t).
  TruncatedSeries inverse_parameter = TruncatedSeries::zero(0);
  /// a_1, ..., a_n: every s^(a_i) lies in R.
  std::vector<int> monomial_exponents;
  /// Minimal generators of the value semigroup; every s^g lies in R.
  std::vector<int> semigroup_generators;

  friend bool operator==(const Reparametrization&, const Reparametrization&) = default;
};

/// CriterionNotMet unless crit.met; VerificationFailed if a certificate check fails.
Reparametrization reparametrize(const Ring& ring, const ValuationCriterionResult& crit);

struct TraceCriterionResult {
  int v_D = 0;
  int v_D_inverse = 0;
  int v_trace = 0;
  int v_maximal_ideal = 0;
  bool quasihomogeneous = false;
  int h_invariant = 0;

  friend bool operator==(const TraceCriterionResult&, const TraceCriterionResult&) = default;
};

TraceCriterionResult check_trace_criterion(const Ring& ring);
/// l(R-bar/D) - l(R-bar/R) + v(D^{-1}); InternalConsistency unless >= 1.
int h_invariant(const Ring& ring);

enum class CheckSelection { Valuation, Trace, All };

struct AnalyzeOptions {
  std::optional<int> precision;
  int max_precision = 4096;
  CheckSelection checks = CheckSelection::All;
  bool reparametrize = true;
};

struct StageTimings {
  std::int64_t semigroup_us = 0;
  std::int64_t valuation_us = 0;
  std::int64_t trace_us = 0;
  std::int64_t reparametrize_us = 0;

  friend bool operator==(const StageTimings&, const StageTimings&) = default;
};

struct AnalysisReport {
  std::vector<TruncatedSeries> normalized_generators;
  std::vector<int> exponents;
  int precision = 0;
  SemigroupData semigroup;
  std::optional<ValuationCriterionResult> valuation_criterion;
  std::optional<TraceCriterionResult> trace_criterion;
  std::optional<Reparametrization> reparametrization;
  bool monomial_ring = false;
  StageTimings timings;

  /// Trace verdict when computed, otherwise true if the valuation criterion holds.
  std::optional<bool> quasihomogeneous() const;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// normalize -> semigroup -> criteria -> reparametrization. Retries with a
/// doubled working precision when an ideal computation runs out of precision.
/// InternalConsistency when the two criteria contradict each other.
AnalysisReport analyze(std::span<const TruncatedSeries> raw_generators, const AnalyzeOptions& options = {});
AnalysisReport analyze(const Ring& ring, const AnalyzeOptions& options = {});

}  // namespace qhcurve
