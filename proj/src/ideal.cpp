#include "qhcurve/ideal.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "qhcurve/error.hpp"
#include "qhcurve/linalg.hpp"

namespace qhcurve {

FractionalIdeal::FractionalIdeal(std::vector<TruncatedSeries> generators, std::optional<int> tail_start)
    : tail_(tail_start) {
  for (auto& g : generators) {
    const Valuation v = g.valuation();
    if (v.is_infinite()) {
      if (tail_ && g.precision() >= *tail_) continue;
      throw Error(ErrorKind::InsufficientPrecision,
                  "ideal generator vanishes to O(t^" + std::to_string(g.precision()) + ") without a known tail");
    }
    generators_.push_back(std::move(g));
  }
  if (generators_.empty() && !tail_) throw std::invalid_argument("fractional ideal needs a nonzero generator");

  min_valuation_ = tail_ ? *tail_ : generators_.front().valuation().value();
  for (const auto& g : generators_) min_valuation_ = std::min(min_valuation_, g.valuation().value());
  if (tail_ && min_valuation_ == *tail_) {
    const bool attained = std::any_of(generators_.begin(), generators_.end(),
                                      [&](const TruncatedSeries& g) { return g.valuation() == *tail_; });
    if (!attained) generators_.push_back(TruncatedSeries::monomial(Rational(1), *tail_, *tail_ + 1));
  }
}

bool ValueSet::contains(int s) const {
  if (s >= tail_start) return true;
  return std::binary_search(window_members.begin(), window_members.end(), s);
}

FractionalIdeal derivative_ideal(const CurveParametrization& curve) {
  std::vector<TruncatedSeries> gens;
  for (const auto& x : curve.generators()) gens.push_back(derivative(x));
  return FractionalIdeal(std::move(gens));
}

FractionalIdeal principal_ideal(const TruncatedSeries& f) { return FractionalIdeal({f}); }

FractionalIdeal unit_ideal(const Ring& ring) {
  return FractionalIdeal({TruncatedSeries::monomial(Rational(1), 0, ring.precision())});
}

FractionalIdeal normalization_ideal() { return FractionalIdeal({}, 0); }

FractionalIdeal scale(const TruncatedSeries& gamma, const FractionalIdeal& ideal) {
  const Valuation vg = gamma.valuation();
  if (vg.is_infinite()) throw std::invalid_argument("cannot scale an ideal by zero");
  std::vector<TruncatedSeries> gens;
  for (const auto& g : ideal.generators()) gens.push_back(mul(gamma, g));
  std::optional<int> tail;
  if (ideal.explicit_tail()) tail = *ideal.explicit_tail() + vg.value();
  return FractionalIdeal(std::move(gens), tail);
}

int effective_tail(const FractionalIdeal& ideal, const Ring& ring) {
  const int bound = ideal.min_valuation() + ring.conductor();
  return ideal.explicit_tail() ? std::min(*ideal.explicit_tail(), bound) : bound;
}

WindowBasis window_basis(const FractionalIdeal& ideal, const Ring& ring) {
  const int lo = ideal.min_valuation();
  const int hi = effective_tail(ideal, ring);
  const auto& curve = ring.curve();
  Echelon echelon(lo, hi);
  std::deque<int> pending;
  auto insert = [&](const TruncatedSeries& f) {
    if (auto p = echelon.insert(echelon.window_of(f.truncated(hi)))) pending.push_back(*p);
  };

  // R-module closure of the generators inside the window: the k-span is
  // closed under multiplication by each x_i.
  for (const auto& g : ideal.generators())
    if (g.valuation() < hi) insert(g);
  while (!pending.empty()) {
    const int s = pending.front();
    pending.pop_front();
    const TruncatedSeries row = echelon.series_of(echelon.row(s));
    for (std::size_t i = 0; i < curve.size(); ++i) {
      if (s + curve.exponents()[i] >= echelon.filled_from()) continue;
      insert(mul(row, curve.generators()[i]));
    }
  }
  echelon.reduce_fully();

  WindowBasis out;
  out.lo = lo;
  out.tail_start = echelon.filled_from();
  for (int p : echelon.pivots())
    if (p < out.tail_start) out.rows.push_back(echelon.series_of(echelon.row(p)).truncated(out.tail_start));
  return out;
}

ValueSet value_set(const FractionalIdeal& ideal, const Ring& ring) {
  const WindowBasis basis = window_basis(ideal, ring);
  ValueSet out;
  out.min_valuation = basis.lo;
  out.tail_start = basis.tail_start;
  for (const auto& row : basis.rows) out.window_members.push_back(row.valuation().value());
  return out;
}

int colength(const FractionalIdeal& ideal, const Ring& ring) {
  if (ideal.min_valuation() < 0)
    throw Error(ErrorKind::NotIntegral, "colength needs an ideal inside k[[t]], v(I) = " + std::to_string(ideal.min_valuation()));
  const ValueSet vs = value_set(ideal, ring);
  return vs.tail_start - static_cast<int>(vs.window_members.size());
}

FractionalIdeal inverse(const FractionalIdeal& ideal, const Ring& ring) {
  const int c = ring.conductor();
  const int v = ideal.min_valuation();
  const int tail = effective_tail(ideal, ring);
  // y I in R forces v(y) >= -v(I); y t^tail k[[t]] in R forces v(y) >= c - tail;
  // and every y of valuation >= c - v(I) works.
  const int klo = c - tail;
  const int khi = c - v;
  const int unknowns = khi - klo;
  const auto& gaps = ring.semigroup().gaps;

  std::vector<RationalVector> equations;
  for (const auto& g : ideal.generators()) {
    if (g.valuation() >= tail) continue;
    std::vector<RationalVector> block(gaps.size(), RationalVector(static_cast<std::size_t>(unknowns)));
    for (int k = klo; k < khi; ++k) {
      const TruncatedSeries remainder = ring.reduce(g.shifted(k).truncated(c));
      for (std::size_t r = 0; r < gaps.size(); ++r)
        if (gaps[r] < c) block[r][static_cast<std::size_t>(k - klo)] = remainder.coeff(gaps[r]);
    }
    for (auto& row : block) equations.push_back(std::move(row));
  }

  std::vector<TruncatedSeries> gens;
  for (auto& y : nullspace(std::move(equations), unknowns)) gens.emplace_back(klo, std::move(y));
  return FractionalIdeal(std::move(gens), khi);
}

FractionalIdeal multiply(const FractionalIdeal& lhs, const FractionalIdeal& rhs, const Ring& ring) {
  const int tail = std::min(effective_tail(lhs, ring) + rhs.min_valuation(),
                            effective_tail(rhs, ring) + lhs.min_valuation());
  std::vector<TruncatedSeries> gens;
  for (const auto& g : lhs.generators())
    for (const auto& h : rhs.generators()) {
      if (g.valuation().value() + h.valuation().value() >= tail) continue;
      gens.push_back(mul(g, h).truncated(tail));
    }
  return FractionalIdeal(std::move(gens), tail);
}

FractionalIdeal trace(const FractionalIdeal& ideal, const Ring& ring) {
  return multiply(ideal, inverse(ideal, ring), ring);
}

}  // namespace qhcurve
