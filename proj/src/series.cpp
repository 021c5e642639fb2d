#include "qhcurve/series.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

#include "qhcurve/error.hpp"

namespace qhcurve {

namespace {

const Rational kZero{0};

int first_nonzero(const TruncatedSeries& f) {
  const Valuation v = f.valuation();
  return v.lower_bound();
}

/// Declares the unknown coefficients in [f.precision(), precision) to be zero.
/// Only valid inside Newton iterations, where the padded value is an
/// approximation whose error is tracked by the iteration itself.
TruncatedSeries extended(const TruncatedSeries& f, int precision) {
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(std::max(0, precision - f.shift())));
  for (int e = f.shift(); e < precision; ++e) coeffs.push_back(e < f.precision() ? f.coeff(e) : kZero);
  return TruncatedSeries(f.shift(), std::move(coeffs));
}

void require_known(const TruncatedSeries& f, int upto, const char* what) {
  if (f.precision() < upto)
    throw Error(ErrorKind::InsufficientPrecision, std::string(what) + ": series known to O(t^" +
                                                      std::to_string(f.precision()) + "), need O(t^" +
                                                      std::to_string(upto) + ")");
}

}  // namespace

int Valuation::value() const {
  if (infinite_) throw std::logic_error("Valuation::value() called on infinity");
  return value_;
}

Valuation Valuation::operator+(int n) const {
  if (infinite_) return *this;
  return finite(value_ + n);
}

std::string to_string(const Valuation& v) { return v.is_finite() ? std::to_string(v.value()) : "inf"; }

TruncatedSeries::TruncatedSeries(int shift, std::vector<Rational> coeffs)
    : shift_(shift), coeffs_(std::move(coeffs)) {}

TruncatedSeries TruncatedSeries::zero(int precision) { return TruncatedSeries(precision, {}); }

TruncatedSeries TruncatedSeries::monomial(const Rational& c, int exponent, int precision) {
  if (exponent >= precision) return zero(precision);
  std::vector<Rational> coeffs(static_cast<std::size_t>(precision - exponent));
  coeffs[0] = c;
  return TruncatedSeries(exponent, std::move(coeffs));
}

TruncatedSeries TruncatedSeries::from_terms(const std::vector<std::pair<int, Rational>>& terms,
                                            int precision) {
  int lo = precision;
  for (const auto& [e, c] : terms)
    if (e < lo) lo = e;
  std::vector<Rational> coeffs(static_cast<std::size_t>(precision - lo));
  for (const auto& [e, c] : terms)
    if (e < precision) coeffs[static_cast<std::size_t>(e - lo)] += c;
  return TruncatedSeries(lo, std::move(coeffs));
}

const Rational& TruncatedSeries::coeff(int exponent) const {
  if (exponent >= precision())
    throw std::out_of_range("coefficient of t^" + std::to_string(exponent) + " is beyond O(t^" +
                            std::to_string(precision()) + ")");
  if (exponent < shift_) return kZero;
  return coeffs_[static_cast<std::size_t>(exponent - shift_)];
}

Valuation TruncatedSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return Valuation::finite(shift_ + static_cast<int>(i));
  return Valuation::infinity(precision());
}

const Rational& TruncatedSeries::leading_coefficient() const {
  const Valuation v = valuation();
  if (v.is_infinite()) throw std::logic_error("leading coefficient of a zero series");
  return coeff(v.value());
}

std::vector<std::pair<int, Rational>> TruncatedSeries::terms() const {
  std::vector<std::pair<int, Rational>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) out.emplace_back(shift_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

TruncatedSeries TruncatedSeries::truncated(int precision) const {
  require_known(*this, precision, "truncation");
  if (precision <= shift_) return zero(precision);
  return TruncatedSeries(shift_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + (precision - shift_)));
}

TruncatedSeries TruncatedSeries::shifted(int k) const { return TruncatedSeries(shift_ + k, coeffs_); }

bool TruncatedSeries::agrees_with(const TruncatedSeries& other, int upto) const {
  require_known(*this, upto, "comparison");
  require_known(other, upto, "comparison");
  for (int e = std::min(shift_, other.shift_); e < upto; ++e)
    if (coeff(e) != other.coeff(e)) return false;
  return true;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.precision() == b.precision() && a.agrees_with(b, a.precision());
}

std::string to_string(const TruncatedSeries& f) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "t";
    if (e != 1) out << "^" << e;
  }
  if (first) out << "0";
  out << " + O(t^" << f.precision() << ")";
  return out.str();
}

Valuation valuation(const TruncatedSeries& f) { return f.valuation(); }

Valuation order_of_unit(const TruncatedSeries& u) {
  const Valuation v = u.valuation();
  if (v != 0) throw Error(ErrorKind::NotAUnit, "order_of_unit needs valuation 0, got " + to_string(v));
  for (int e = 1; e < u.precision(); ++e)
    if (sgn(u.coeff(e)) != 0) return Valuation::finite(e);
  return Valuation::infinity(u.precision());
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int prec = std::min(f.precision(), g.precision());
  const int lo = std::min(f.shift(), g.shift());
  if (lo >= prec) return TruncatedSeries::zero(prec);
  std::vector<Rational> coeffs(static_cast<std::size_t>(prec - lo));
  for (int e = lo; e < prec; ++e) coeffs[static_cast<std::size_t>(e - lo)] = f.coeff(e) + g.coeff(e);
  return TruncatedSeries(lo, std::move(coeffs));
}

TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int prec = std::min(f.precision(), g.precision());
  const int lo = std::min(f.shift(), g.shift());
  if (lo >= prec) return TruncatedSeries::zero(prec);
  std::vector<Rational> coeffs(static_cast<std::size_t>(prec - lo));
  for (int e = lo; e < prec; ++e) coeffs[static_cast<std::size_t>(e - lo)] = f.coeff(e) - g.coeff(e);
  return TruncatedSeries(lo, std::move(coeffs));
}

TruncatedSeries scale(const Rational& c, const TruncatedSeries& f) {
  if (sgn(c) == 0) return TruncatedSeries::zero(f.precision());
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(f.precision() - f.shift()));
  for (int e = f.shift(); e < f.precision(); ++e) coeffs.push_back(c * f.coeff(e));
  return TruncatedSeries(f.shift(), std::move(coeffs));
}

TruncatedSeries negate(const TruncatedSeries& f) { return scale(Rational(-1), f); }

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int vf = first_nonzero(f);
  const int vg = first_nonzero(g);
  const long long prec_ll =
      std::min<long long>(static_cast<long long>(f.precision()) + vg, static_cast<long long>(g.precision()) + vf);
  const int prec = static_cast<int>(std::clamp<long long>(prec_ll, INT_MIN / 2, INT_MAX / 2));
  const int lo = vf + vg;
  if (lo >= prec) return TruncatedSeries::zero(prec);

  // Integer convolution over a common denominator per operand; one
  // canonicalization per output coefficient instead of one per term.
  auto scaled_terms = [](const TruncatedSeries& h, int from, int to, mpz_class& denominator) {
    denominator = 1;
    for (int e = from; e < to; ++e)
      if (sgn(h.coeff(e)) != 0) mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), h.coeff(e).get_den_mpz_t());
    std::vector<std::pair<int, mpz_class>> out;
    for (int e = from; e < to; ++e) {
      const Rational& c = h.coeff(e);
      if (sgn(c) == 0) continue;
      mpz_class n;
      mpz_divexact(n.get_mpz_t(), denominator.get_mpz_t(), c.get_den_mpz_t());
      n *= c.get_num();
      out.emplace_back(e, std::move(n));
    }
    return out;
  };
  mpz_class df, dg;
  const auto fterms = scaled_terms(f, vf, std::min(f.precision(), prec - vg), df);
  const auto gterms = scaled_terms(g, vg, std::min(g.precision(), prec - vf), dg);

  std::vector<mpz_class> acc(static_cast<std::size_t>(prec - lo));
  for (const auto& [ef, a] : fterms)
    for (const auto& [eg, b] : gterms) {
      if (ef + eg >= prec) break;
      mpz_addmul(acc[static_cast<std::size_t>(ef + eg - lo)].get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
  const mpz_class denominator = df * dg;
  std::vector<Rational> coeffs(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (sgn(acc[i]) == 0) continue;
    coeffs[i] = Rational(acc[i], denominator);
    coeffs[i].canonicalize();
  }
  return TruncatedSeries(lo, std::move(coeffs));
}

TruncatedSeries pow(const TruncatedSeries& f, unsigned n) {
  if (n == 0) {
    const int rel = f.precision() - first_nonzero(f);
    return TruncatedSeries::monomial(Rational(1), 0, std::max(rel, 1));
  }
  TruncatedSeries result = f;
  TruncatedSeries base = f;
  bool have = false;
  while (n > 0) {
    if (n & 1U) {
      result = have ? mul(result, base) : base;
      have = true;
    }
    n >>= 1U;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

TruncatedSeries derivative(const TruncatedSeries& f) {
  if (f.precision() <= f.shift())
    return TruncatedSeries::zero(f.precision() - 1);
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(f.precision() - f.shift()));
  for (int e = f.shift(); e < f.precision(); ++e) coeffs.push_back(Rational(e) * f.coeff(e));
  return TruncatedSeries(f.shift() - 1, std::move(coeffs));
}

TruncatedSeries unit_inverse(const TruncatedSeries& u) {
  const Valuation v = u.valuation();
  if (v != 0) throw Error(ErrorKind::NotAUnit, "unit_inverse needs valuation 0, got " + to_string(v));
  const int p = u.precision();
  TruncatedSeries w = TruncatedSeries::monomial(Rational(1) / u.coeff(0), 0, 1);
  for (int k = 1; k < p;) {
    const int k2 = std::min(2 * k, p);
    const TruncatedSeries we = extended(w, k2);
    const TruncatedSeries e = mul(u.truncated(k2), we);
    w = mul(we, sub(TruncatedSeries::monomial(Rational(2), 0, k2), e)).truncated(k2);
    k = k2;
  }
  if (!mul(u, w).agrees_with(TruncatedSeries::monomial(Rational(1), 0, p), p))
    throw Error(ErrorKind::VerificationFailed, "unit_inverse: u*w != 1");
  return w;
}

TruncatedSeries nth_root_of_unit(const TruncatedSeries& u, unsigned n) {
  if (n == 0) throw std::invalid_argument("nth_root_of_unit: n must be positive");
  const Valuation v = u.valuation();
  if (v != 0) throw Error(ErrorKind::NotAUnit, "nth_root_of_unit needs valuation 0, got " + to_string(v));
  if (u.coeff(0) != 1)
    throw Error(ErrorKind::NonUnitConstant, "nth_root_of_unit needs constant term 1, got " + u.coeff(0).get_str());
  const int p = u.precision();
  TruncatedSeries beta = TruncatedSeries::monomial(Rational(1), 0, 1);
  for (int k = 1; k < p;) {
    const int k2 = std::min(2 * k, p);
    const TruncatedSeries be = extended(beta, k2);
    const TruncatedSeries lower = pow(be, n - 1);
    const TruncatedSeries residual = sub(u.truncated(k2), mul(lower, be));
    const TruncatedSeries step = mul(residual, unit_inverse(scale(Rational(n), lower)));
    beta = add(be, step).truncated(k2);
    k = k2;
  }
  if (!pow(beta, n).agrees_with(u, p)) throw Error(ErrorKind::VerificationFailed, "nth_root_of_unit: beta^n != u");
  return beta;
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  const Valuation vf = f.valuation();
  if (vf.is_finite() && vf.value() < 0)
    throw Error(ErrorKind::CompositionUndefined, "outer series has negative valuation " + to_string(vf));
  const Valuation vg = g.valuation();
  if (vg.lower_bound() < 1)
    throw Error(ErrorKind::CompositionUndefined, "inner series must have valuation >= 1, got " + to_string(vg));

  const int pf = f.precision();
  const int step = vg.lower_bound();
  bool has_tail = false;
  for (int e = 1; e < pf; ++e)
    if (sgn(f.coeff(e)) != 0) has_tail = true;
  long long prec_ll = static_cast<long long>(std::max(pf, 0)) * step;
  if (has_tail) prec_ll = std::min<long long>(prec_ll, g.precision());
  const int prec = static_cast<int>(std::min<long long>(prec_ll, INT_MAX / 2));
  if (prec <= 0) return TruncatedSeries::zero(std::max(prec, 0));

  std::vector<Rational> acc(static_cast<std::size_t>(prec));
  if (pf > 0) acc[0] = f.coeff(0);
  if (has_tail && vg.is_finite()) {
    TruncatedSeries power = g.truncated(prec);
    Rational prod;
    for (int k = 1; k < pf && static_cast<long long>(k) * step < prec; ++k) {
      const Rational& c = f.coeff(k);
      if (sgn(c) != 0) {
        for (int e = std::max(power.shift(), 0); e < prec; ++e) {
          const Rational& pc = power.coeff(e);
          if (sgn(pc) == 0) continue;
          mpq_mul(prod.get_mpq_t(), c.get_mpq_t(), pc.get_mpq_t());
          mpq_add(acc[e].get_mpq_t(), acc[e].get_mpq_t(), prod.get_mpq_t());
        }
      }
      if (k + 1 < pf && static_cast<long long>(k + 1) * step < prec) power = mul(power, g).truncated(prec);
    }
  }
  return TruncatedSeries(0, std::move(acc));
}

TruncatedSeries reversion(const TruncatedSeries& f) {
  const Valuation v = f.valuation();
  if (v != 1 || f.coeff(1) != 1)
    throw Error(ErrorKind::ReversionUndefined, "reversion needs f = t + O(t^2), got " + to_string(f));
  const int p = f.precision();
  const TruncatedSeries df = derivative(f);
  TruncatedSeries g = TruncatedSeries::monomial(Rational(1), 1, 2);
  for (int k = 2; k < p;) {
    const int k2 = std::min(2 * k, p);
    const TruncatedSeries ge = extended(g, k2);
    const TruncatedSeries residual = sub(compose(f.truncated(k2), ge), TruncatedSeries::monomial(Rational(1), 1, k2));
    const TruncatedSeries slope = compose(df.truncated(std::min(k2, df.precision())), ge);
    g = sub(ge, mul(residual, unit_inverse(slope))).truncated(k2);
    k = k2;
  }
  if (p < 2) g = g.truncated(p);
  const TruncatedSeries ident = TruncatedSeries::monomial(Rational(1), 1, p);
  if (!compose(f, g).agrees_with(ident, p) || !compose(g, f).agrees_with(ident, p))
    throw Error(ErrorKind::VerificationFailed, "reversion: round trip is not the identity");
  return g;
}

}  // namespace qhcurve
