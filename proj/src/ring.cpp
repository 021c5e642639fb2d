#include "qhcurve/ring.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "qhcurve/error.hpp"
#include "qhcurve/linalg.hpp"
#include "qhcurve/numerical_semigroup.hpp"

namespace qhcurve {

namespace {

int exponent_gcd(const std::vector<TruncatedSeries>& generators) {
  int d = 0;
  for (const auto& g : generators)
    for (const auto& [e, c] : g.terms()) d = std::gcd(d, e);
  return d;
}

}  // namespace

CurveParametrization::CurveParametrization(std::vector<TruncatedSeries> generators, int precision)
    : precision_(precision) {
  if (generators.size() < 2)
    throw Error(ErrorKind::RegularRing, "need at least two generators, got " + std::to_string(generators.size()));
  for (auto& g : generators) {
    const Valuation v = g.valuation();
    if (v.is_infinite()) throw Error(ErrorKind::EmptyInput, "generator vanishes to O(t^" + std::to_string(g.precision()) + ")");
    if (v.value() <= 0) throw Error(ErrorKind::NonPositiveValuation, "generator " + to_string(g) + " has valuation " + to_string(v));
    if (v.value() == 1) throw Error(ErrorKind::RegularRing, "generator " + to_string(g) + " has valuation 1");
    if (g.leading_coefficient() != 1)
      throw std::invalid_argument("generator " + to_string(g) + " is not normalized to leading coefficient 1");
    if (!exponents_.empty() && v.value() <= exponents_.back())
      throw std::invalid_argument("generator valuations must strictly increase");
    exponents_.push_back(v.value());
    generators_.push_back(g.truncated(precision));
  }
}

TruncatedSeries CurveParametrization::unit_part(std::size_t i) const {
  return generators_.at(i).shifted(-exponents_.at(i));
}

CurveParametrization CurveParametrization::with_precision(int precision) const {
  if (precision > available_precision())
    throw Error(ErrorKind::InsufficientPrecision, "generators known to O(t^" + std::to_string(available_precision()) +
                                                      "), requested O(t^" + std::to_string(precision) + ")");
  return CurveParametrization(generators_, precision);
}

int CurveParametrization::available_precision() const {
  int p = generators_.front().precision();
  for (const auto& g : generators_) p = std::min(p, g.precision());
  return p;
}

bool operator==(const CurveParametrization& a, const CurveParametrization& b) {
  return a.precision_ == b.precision_ && a.generators_ == b.generators_;
}

CurveParametrization normalize(std::span<const TruncatedSeries> raw_generators) {
  if (raw_generators.empty()) throw Error(ErrorKind::EmptyInput, "no generators");
  std::vector<TruncatedSeries> work;
  int precision = raw_generators.front().precision();
  for (const auto& g : raw_generators) {
    precision = std::min(precision, g.precision());
    const Valuation v = g.valuation();
    if (v.is_infinite()) continue;
    if (v.value() <= 0)
      throw Error(ErrorKind::NonPositiveValuation, "generator " + to_string(g) + " has valuation " + to_string(v));
    work.push_back(g);
  }

  // Gaussian reduction of equal leading exponents until all valuations differ.
  for (;;) {
    std::vector<TruncatedSeries> next;
    for (auto& g : work)
      if (g.valuation().is_finite()) next.push_back(std::move(g));
    work = std::move(next);
    std::stable_sort(work.begin(), work.end(), [](const TruncatedSeries& a, const TruncatedSeries& b) {
      return a.valuation().value() < b.valuation().value();
    });
    bool changed = false;
    for (std::size_t i = 0; i + 1 < work.size(); ++i) {
      if (work[i].valuation() != work[i + 1].valuation()) continue;
      const Rational factor = work[i + 1].leading_coefficient() / work[i].leading_coefficient();
      work[i + 1] = sub(work[i + 1], scale(factor, work[i]));
      changed = true;
      break;
    }
    if (!changed) break;
  }
  if (work.empty()) throw Error(ErrorKind::EmptyInput, "every generator vanished after normalization");

  std::vector<TruncatedSeries> normalized;
  for (const auto& g : work) {
    if (g.valuation() == 1) throw Error(ErrorKind::RegularRing, "a generator of valuation 1 makes R regular");
    normalized.push_back(scale(1 / g.leading_coefficient(), g));
  }
  if (normalized.size() < 2)
    throw Error(ErrorKind::RegularRing, "R = k[[x]] with a single generator is not a curve of embedding dimension >= 2");
  return CurveParametrization(std::move(normalized), precision);
}

int default_precision(const std::vector<int>& exponents) {
  if (exponents.empty()) throw std::invalid_argument("default_precision: no exponents");
  if (const auto c0 = monomial_conductor(exponents)) return 2 * (*c0 + 1) + exponents.back();
  return 4 * exponents.back();
}

StandardBasis::StandardBasis(std::vector<BasisEntry> entries, int precision)
    : entries_(std::move(entries)), index_(static_cast<std::size_t>(precision), -1), precision_(precision) {
  std::sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) { return a.valuation < b.valuation; });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const int s = entries_[i].valuation;
    if (s < 0 || s >= precision || index_[static_cast<std::size_t>(s)] != -1)
      throw std::invalid_argument("standard basis valuations must be distinct and inside the window");
    index_[static_cast<std::size_t>(s)] = static_cast<int>(i);
  }
}

bool StandardBasis::has(int valuation) const {
  return valuation >= 0 && valuation < precision_ && index_[static_cast<std::size_t>(valuation)] >= 0;
}

const BasisEntry& StandardBasis::at(int valuation) const {
  if (!has(valuation)) throw std::out_of_range("no basis entry at valuation " + std::to_string(valuation));
  return entries_[static_cast<std::size_t>(index_[static_cast<std::size_t>(valuation)])];
}

std::vector<bool> StandardBasis::membership() const {
  std::vector<bool> out(static_cast<std::size_t>(precision_));
  for (int s = 0; s < precision_; ++s) out[static_cast<std::size_t>(s)] = has(s);
  return out;
}

StandardBasis standard_basis(const CurveParametrization& curve) {
  const int P = curve.precision();
  Echelon echelon(0, P);
  std::deque<int> pending;
  if (auto p = echelon.insert(echelon.window_of(TruncatedSeries::monomial(Rational(1), 0, P)))) pending.push_back(*p);

  // The span stays closed under multiplication by every generator: each new
  // row contributes its n products, reduced against everything found so far.
  while (!pending.empty()) {
    const int s = pending.front();
    pending.pop_front();
    const TruncatedSeries entry = echelon.series_of(echelon.row(s));
    for (std::size_t i = 0; i < curve.size(); ++i) {
      if (s + curve.exponents()[i] >= echelon.filled_from()) continue;
      const TruncatedSeries product = mul(entry, curve.generators()[i]).truncated(P);
      if (auto p = echelon.insert(echelon.window_of(product))) pending.push_back(*p);
    }
  }
  echelon.reduce_fully();

  std::vector<BasisEntry> entries;
  for (int s : echelon.pivots()) entries.push_back({s, echelon.series_of(echelon.row(s))});
  return StandardBasis(std::move(entries), P);
}

bool SemigroupData::contains(int s) const {
  if (s < 0) return false;
  return !std::binary_search(gaps.begin(), gaps.end(), s);
}

SemigroupData value_semigroup(const StandardBasis& basis, const CurveParametrization& curve) {
  const int P = basis.precision();
  const int a1 = curve.multiplicity();
  SemigroupData data;
  for (int s = 0; s < P; ++s)
    if (!basis.has(s)) data.gaps.push_back(s);
  data.conductor = data.gaps.empty() ? 0 : data.gaps.back() + 1;
  if (data.conductor + a1 > P)
    throw Error(ErrorKind::PrecisionCapExceeded,
                "window O(t^" + std::to_string(P) + ") does not certify the conductor (last gap " +
                    std::to_string(data.conductor - 1) + ", multiplicity " + std::to_string(a1) + ")");
  data.genus = static_cast<int>(data.gaps.size());
  data.monomial_semigroup_conductor = monomial_conductor(curve.exponents());
  return data;
}

Ring::Ring(CurveParametrization curve, StandardBasis basis, SemigroupData semigroup)
    : curve_(std::move(curve)), basis_(std::move(basis)), semigroup_(std::move(semigroup)) {}

Ring Ring::from_curve(CurveParametrization curve) {
  StandardBasis basis = standard_basis(curve);
  SemigroupData semigroup = value_semigroup(basis, curve);
  return Ring(std::move(curve), std::move(basis), std::move(semigroup));
}

Ring Ring::build(std::span<const TruncatedSeries> raw_generators, const RingOptions& options) {
  const CurveParametrization raw = normalize(raw_generators);
  const int available = raw.precision();
  const int cap = options.max_precision;
  int P = options.precision.value_or(std::min(default_precision(raw.exponents()), cap));
  if (P > cap)
    throw Error(ErrorKind::PrecisionCapExceeded,
                "requested precision " + std::to_string(P) + " exceeds the cap " + std::to_string(cap));

  const int d = exponent_gcd(raw.generators());
  if (d > 1 && available >= cap)
    throw Error(ErrorKind::PrecisionCapExceeded,
                "every generator lies in k[[t^" + std::to_string(d) + "]] up to O(t^" + std::to_string(available) +
                    "), so t is not a uniformizer of the normalization");

  for (;;) {
    if (P > available)
      throw Error(ErrorKind::InsufficientPrecision, "generators known to O(t^" + std::to_string(available) +
                                                        "), working precision " + std::to_string(P) + " needed");
    CurveParametrization curve = raw.with_precision(P);
    StandardBasis basis = standard_basis(curve);
    std::optional<SemigroupData> semigroup;
    try {
      semigroup = value_semigroup(basis, curve);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PrecisionCapExceeded) throw;
    }
    if (semigroup && P >= semigroup->conductor + curve.multiplicity() + 1)
      return Ring(std::move(curve), std::move(basis), std::move(*semigroup));
    if (P >= cap)
      throw Error(ErrorKind::PrecisionCapExceeded,
                  "conductor not certified below the precision cap " + std::to_string(cap));
    P = std::min(2 * P, cap);
  }
}

TruncatedSeries Ring::reduce(const TruncatedSeries& f) const {
  const int c = conductor();
  if (f.precision() < c)
    throw Error(ErrorKind::InsufficientPrecision, "membership needs O(t^" + std::to_string(c) + "), got " + to_string(f));
  for (const auto& [e, coeff] : f.terms()) {
    if (e >= 0) break;
    throw Error(ErrorKind::NotIntegral, "series with negative valuation is not in k[[t]]: " + to_string(f));
  }
  std::vector<Rational> v(static_cast<std::size_t>(c));
  for (int e = 0; e < c; ++e) v[static_cast<std::size_t>(e)] = f.coeff(e);
  Rational prod;
  for (int s = 0; s < c; ++s) {
    Rational& lead = v[static_cast<std::size_t>(s)];
    if (sgn(lead) == 0 || !basis_.has(s)) continue;
    const Rational factor = lead;
    const TruncatedSeries& e = basis_.at(s).element;
    for (int j = s; j < c; ++j) {
      const Rational& x = e.coeff(j);
      if (sgn(x) == 0) continue;
      mpq_mul(prod.get_mpq_t(), factor.get_mpq_t(), x.get_mpq_t());
      mpq_sub(v[static_cast<std::size_t>(j)].get_mpq_t(), v[static_cast<std::size_t>(j)].get_mpq_t(), prod.get_mpq_t());
    }
  }
  return TruncatedSeries(0, std::move(v));
}

bool Ring::contains(const TruncatedSeries& f) const { return reduce(f).is_zero(); }

bool contains(const Ring& ring, const TruncatedSeries& f) { return ring.contains(f); }

bool is_monomial_ring(const CurveParametrization& curve) {
  return std::all_of(curve.generators().begin(), curve.generators().end(),
                     [](const TruncatedSeries& g) { return g.terms().size() == 1; });
}

}  // namespace qhcurve
