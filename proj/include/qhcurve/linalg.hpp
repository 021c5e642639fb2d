#pragma once

// Exact row echelon forms over a window of exponents [lo, hi).

#include <optional>
#include <vector>

#include "qhcurve/rational.hpp"
#include "qhcurve/series.hpp"

namespace qhcurve {

using RationalVector = std::vector<Rational>;

/// Incrementally built echelon basis of a subspace of Q^[lo, hi).
///
/// Rows are stored by pivot with a leading 1. insert() reduces the candidate
/// against every stored row; rows are not back-reduced until reduce_fully().
class Echelon {
 public:
  Echelon(int lo, int hi);

  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return hi_; }
  int rank() const noexcept { return rank_; }

  bool has_pivot(int exponent) const;
  /// Row whose pivot is `exponent`; throws std::out_of_range when absent.
  const RationalVector& row(int exponent) const;
  /// Pivot exponents in increasing order.
  std::vector<int> pivots() const;

  /// Zeroes every pivot position of `v` by subtracting stored rows.
  void reduce(RationalVector& v) const;
  /// Reduces and stores `v`; returns the new pivot, or nothing if `v` was dependent.
  std::optional<int> insert(RationalVector v);
  /// Back-substitution into reduced row echelon form (unique for the subspace).
  void reduce_fully();

  /// Smallest k such that every exponent in [k, hi) is a pivot.
  int filled_from() const;

  RationalVector window_of(const TruncatedSeries& f) const;
  TruncatedSeries series_of(const RationalVector& v) const;

 private:
  int lo_;
  int hi_;
  int rank_ = 0;
  std::vector<std::optional<RationalVector>> rows_;
};

/// Basis of {x : A x = 0}, returned in reduced echelon form with respect to
/// increasing column index. `columns` is the number of unknowns.
std::vector<RationalVector> nullspace(std::vector<RationalVector> rows, int columns);

}  // namespace qhcurve
