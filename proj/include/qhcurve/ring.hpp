#pragma once

// The curve ring R = k[[x_1, ..., x_n]] inside k[[t]], its standard basis,
// value semigroup and conductor.

#include <optional>
#include <span>
#include <vector>

#include "qhcurve/series.hpp"

namespace qhcurve {

/// Normalized generators x_i = alpha_i t^(a_i): a_1 < ... < a_n, alpha_i(0) = 1.
class CurveParametrization {
 public:
  CurveParametrization(std::vector<TruncatedSeries> generators, int precision);

  const std::vector<TruncatedSeries>& generators() const noexcept { return generators_; }
  const std::vector<int>& exponents() const noexcept { return exponents_; }
  std::size_t size() const noexcept { return generators_.size(); }
  int precision() const noexcept { return precision_; }
  /// v(m) = a_1
  int multiplicity() const noexcept { return exponents_.front(); }

  /// The unit alpha_i = x_i / t^(a_i), known to precision - a_i.
  TruncatedSeries unit_part(std::size_t i) const;

  /// Same generators known to a different precision (InsufficientPrecision if unavailable).
  CurveParametrization with_precision(int precision) const;
  /// Precision up to which the generators are actually known.
  int available_precision() const;

  friend bool operator==(const CurveParametrization& a, const CurveParametrization& b);

 private:
  std::vector<TruncatedSeries> generators_;
  std::vector<int> exponents_;
  int precision_;
};

/// Scales leading coefficients to 1, merges equal valuations by Gaussian
/// reduction, drops vanished generators and sorts. The result carries the
/// smallest precision among the inputs.
CurveParametrization normalize(std::span<const TruncatedSeries> raw_generators);

/// Starting working precision: 2 (c_0 + 1) + a_n when gcd(a) = 1, where c_0
/// is the conductor of <a_1, ..., a_n>; 4 a_n otherwise.
int default_precision(const std::vector<int>& exponents);

struct BasisEntry {
  int valuation;
  /// Leading coefficient 1, zero at every other semigroup value below the precision.
  TruncatedSeries element;
};

/// One fully reduced representative of R per semigroup value below the precision.
class StandardBasis {
 public:
  StandardBasis(std::vector<BasisEntry> entries, int precision);

  const std::vector<BasisEntry>& entries() const noexcept { return entries_; }
  int precision() const noexcept { return precision_; }
  bool has(int valuation) const;
  const BasisEntry& at(int valuation) const;
  /// Membership of each exponent in [0, precision) in the value semigroup.
  std::vector<bool> membership() const;

 private:
  std::vector<BasisEntry> entries_;
  std::vector<int> index_;
  int precision_;
};

/// Completion of the generators to a standard basis of the image of R in k[[t]]/(t^P).
StandardBasis standard_basis(const CurveParametrization& curve);

struct SemigroupData {
  std::vector<int> gaps;
  int conductor = 0;
  int genus = 0;
  /// Conductor of <a_1, ..., a_n>, when their gcd is 1.
  std::optional<int> monomial_semigroup_conductor;

  bool contains(int s) const;
  friend bool operator==(const SemigroupData&, const SemigroupData&) = default;
};

/// Reads gaps and conductor off the basis. Throws PrecisionCapExceeded when the
/// window does not certify them, i.e. when it lacks a run of a_1 consecutive
/// semigroup values ending below the precision.
SemigroupData value_semigroup(const StandardBasis& basis, const CurveParametrization& curve);

struct RingOptions {
  /// Starting working precision; the policy of default_precision() otherwise.
  std::optional<int> precision;
  /// Largest working precision tried before giving up.
  int max_precision = 4096;
};

/// R with its standard basis and certified semigroup data. Immutable.
class Ring {
 public:
  /// Normalizes the raw generators and doubles the working precision until
  /// the semigroup is certified and the window leaves room for ideal
  /// computations (P >= c_R + a_1 + 1).
  static Ring build(std::span<const TruncatedSeries> raw_generators, const RingOptions& options = {});
  /// Uses exactly the precision of `curve`; PrecisionCapExceeded when it does not certify.
  static Ring from_curve(CurveParametrization curve);

  const CurveParametrization& curve() const noexcept { return curve_; }
  const StandardBasis& basis() const noexcept { return basis_; }
  const SemigroupData& semigroup() const noexcept { return semigroup_; }
  int conductor() const noexcept { return semigroup_.conductor; }
  int precision() const noexcept { return curve_.precision(); }

  /// Remainder of f modulo R + t^c R-bar: supported on the gaps, precision c_R.
  /// f must have nonnegative valuation and be known to O(t^c_R).
  TruncatedSeries reduce(const TruncatedSeries& f) const;
  bool contains(const TruncatedSeries& f) const;

 private:
  Ring(CurveParametrization curve, StandardBasis basis, SemigroupData semigroup);

  CurveParametrization curve_;
  StandardBasis basis_;
  SemigroupData semigroup_;
};

bool contains(const Ring& ring, const TruncatedSeries& f);
/// Every generator is a single term (all o(alpha_i) infinite).
bool is_monomial_ring(const CurveParametrization& curve);

}  // namespace qhcurve
