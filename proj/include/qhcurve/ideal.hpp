#pragma once

// Fractional ideals of R inside k((t)).
//
// Every fractional ideal I contains t^T k[[t]] for T = v(I) + c_R, so it is
// determined by its image in the finite window [v(I), T). An ideal may also
// carry a smaller, explicitly known tail start T, which then bounds the window.

#include <optional>
#include <vector>

#include "qhcurve/ring.hpp"
#include "qhcurve/series.hpp"

namespace qhcurve {

class FractionalIdeal {
 public:
  /// Generators vanishing to their precision are dropped when the precision
  /// reaches the tail; otherwise InsufficientPrecision. At least one generator
  /// must remain.
  explicit FractionalIdeal(std::vector<TruncatedSeries> generators, std::optional<int> tail_start = std::nullopt);

  const std::vector<TruncatedSeries>& generators() const noexcept { return generators_; }
  /// v(I): attained on a generator.
  int min_valuation() const noexcept { return min_valuation_; }
  /// t^T k[[t]] is contained in I for T = tail_start(), when known.
  const std::optional<int>& explicit_tail() const noexcept { return tail_; }

 private:
  std::vector<TruncatedSeries> generators_;
  std::optional<int> tail_;
  int min_valuation_;
};

/// Valuations of the nonzero elements of an ideal.
struct ValueSet {
  int min_valuation = 0;
  /// Sorted members in [min_valuation, tail_start).
  std::vector<int> window_members;
  /// Least T such that every integer >= T is a member.
  int tail_start = 0;

  bool contains(int s) const;
  friend bool operator==(const ValueSet&, const ValueSet&) = default;
};

/// Reduced echelon basis of I modulo t^T k[[t]], with T the value set's tail start.
/// Two ideals are equal exactly when their window bases are.
struct WindowBasis {
  int lo = 0;
  int tail_start = 0;
  std::vector<TruncatedSeries> rows;

  friend bool operator==(const WindowBasis&, const WindowBasis&) = default;
};

/// D = R x_1'(t) + ... + R x_n'(t); v(D) = a_1 - 1.
FractionalIdeal derivative_ideal(const CurveParametrization& curve);
/// f R
FractionalIdeal principal_ideal(const TruncatedSeries& f);
/// R itself; generator 1 known to O(t^c_R).
FractionalIdeal unit_ideal(const Ring& ring);
/// R-bar = k[[t]].
FractionalIdeal normalization_ideal();
/// gamma I
FractionalIdeal scale(const TruncatedSeries& gamma, const FractionalIdeal& ideal);

/// Smallest certified tail start: the explicit tail or v(I) + c_R.
int effective_tail(const FractionalIdeal& ideal, const Ring& ring);

WindowBasis window_basis(const FractionalIdeal& ideal, const Ring& ring);
ValueSet value_set(const FractionalIdeal& ideal, const Ring& ring);

/// l(R-bar / I) = number of nonnegative integers missing from the value set.
/// NotIntegral when v(I) < 0.
int colength(const FractionalIdeal& ideal, const Ring& ring);

/// I^{-1} = R :_Q I, from the linear conditions y g_j in R over the window
/// [-v(I), c_R - v(I)); carries the explicit tail c_R - v(I).
FractionalIdeal inverse(const FractionalIdeal& ideal, const Ring& ring);
/// I J, generated by pairwise products; v = v(I) + v(J).
FractionalIdeal multiply(const FractionalIdeal& lhs, const FractionalIdeal& rhs, const Ring& ring);
/// tr(I) = I I^{-1}
FractionalIdeal trace(const FractionalIdeal& ideal, const Ring& ring);

}  // namespace qhcurve
