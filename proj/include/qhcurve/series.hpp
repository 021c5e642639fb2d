#pragma once

// Exact truncated Laurent series over the rationals.
//
// A TruncatedSeries stores the coefficients of t^shift, ..., t^(precision-1);
// every exponent >= precision is unknown. Every reported coefficient is exact,
// and all operations track the precision they can actually certify.

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qhcurve/rational.hpp"

namespace qhcurve {

/// Order valuation: a finite integer or infinity.
///
/// A series that vanishes up to its precision has valuation "infinity known to
/// precision p": larger than every integer, but only certified below p.
class Valuation {
 public:
  static Valuation finite(int value) { return Valuation(false, value); }
  /// `known_to` records the precision up to which the vanishing is certified.
  static Valuation infinity(int known_to) { return Valuation(true, known_to); }

  bool is_finite() const noexcept { return !infinite_; }
  bool is_infinite() const noexcept { return infinite_; }

  /// Throws std::logic_error on infinity.
  int value() const;
  /// Finite value, or the certified bound for infinity.
  int lower_bound() const noexcept { return value_; }

  /// infinity + n = infinity
  Valuation operator+(int n) const;

  friend bool operator==(const Valuation& a, const Valuation& b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) noexcept {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend bool operator==(const Valuation& a, int b) noexcept { return a.is_finite() && a.value_ == b; }
  friend std::strong_ordering operator<=>(const Valuation& a, int b) noexcept {
    if (a.infinite_) return std::strong_ordering::greater;
    return a.value_ <=> b;
  }

 private:
  Valuation(bool infinite, int value) : infinite_(infinite), value_(value) {}

  bool infinite_;
  int value_;
};

/// "inf" for infinity, the decimal value otherwise.
std::string to_string(const Valuation& v);

class TruncatedSeries {
 public:
  /// Coefficient of t^(shift+i) at index i; precision = shift + coeffs.size().
  /// An empty coefficient vector yields the zero series known to precision `shift`.
  TruncatedSeries(int shift, std::vector<Rational> coeffs);

  static TruncatedSeries zero(int precision);
  static TruncatedSeries monomial(const Rational& c, int exponent, int precision);
  /// Terms with exponents >= precision are discarded.
  static TruncatedSeries from_terms(const std::vector<std::pair<int, Rational>>& terms, int precision);

  int shift() const noexcept { return shift_; }
  int precision() const noexcept { return shift_ + static_cast<int>(coeffs_.size()); }

  /// Zero below the shift; throws std::out_of_range at or above the precision.
  const Rational& coeff(int exponent) const;

  Valuation valuation() const;
  /// True when every known coefficient vanishes.
  bool is_zero() const { return valuation().is_infinite(); }
  /// Coefficient at the valuation; throws std::logic_error for a zero series.
  const Rational& leading_coefficient() const;

  /// Nonzero (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<int, Rational>> terms() const;

  /// Forget everything at or above `precision`; InsufficientPrecision if it exceeds the current one.
  TruncatedSeries truncated(int precision) const;
  /// Multiplication by t^k.
  TruncatedSeries shifted(int k) const;

  /// Coefficientwise equality below `upto`; both operands must be known there.
  bool agrees_with(const TruncatedSeries& other, int upto) const;

  /// Same precision and same coefficients.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  int shift_;
  std::vector<Rational> coeffs_;
};

/// Human readable form, e.g. "t^4 + t^5 + O(t^12)".
std::string to_string(const TruncatedSeries& f);

Valuation valuation(const TruncatedSeries& f);
/// o(u) = v(u - u(0)) for a unit u; NotAUnit otherwise.
Valuation order_of_unit(const TruncatedSeries& u);

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries scale(const Rational& c, const TruncatedSeries& f);
TruncatedSeries negate(const TruncatedSeries& f);
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries pow(const TruncatedSeries& f, unsigned n);
TruncatedSeries derivative(const TruncatedSeries& f);

/// Multiplicative inverse of a unit of k[[t]], by Newton iteration.
TruncatedSeries unit_inverse(const TruncatedSeries& u);
/// The n-th root with constant term 1 of a unit with constant term 1 (Hensel lift).
TruncatedSeries nth_root_of_unit(const TruncatedSeries& u, unsigned n);
/// f(g(t)) for a power series f and v(g) >= 1.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);
/// Compositional inverse of f = t + O(t^2).
TruncatedSeries reversion(const TruncatedSeries& f);

inline TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) { return add(f, g); }
inline TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) { return sub(f, g); }
inline TruncatedSeries operator-(const TruncatedSeries& f) { return negate(f); }
inline TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) { return mul(f, g); }
inline TruncatedSeries operator*(const Rational& c, const TruncatedSeries& f) { return scale(c, f); }

}  // namespace qhcurve
