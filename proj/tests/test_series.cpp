#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qhcurve/error.hpp"
#include "qhcurve/series.hpp"

using namespace qhcurve;

namespace {

TruncatedSeries poly(std::vector<std::pair<int, Rational>> terms, int precision) {
  return TruncatedSeries::from_terms(terms, precision);
}

// Schoolbook convolution on raw coefficient arrays, independent of mul().
std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InternalConsistency;
}

}  // namespace

TEST_CASE("valuation") {
  CHECK(poly({{4, 1}, {5, 1}}, 12).valuation() == 4);
  const auto z = TruncatedSeries::zero(9);
  CHECK(z.valuation().is_infinite());
  CHECK(z.valuation().lower_bound() == 9);
  CHECK_THROWS_AS(z.valuation().value(), std::logic_error);
  CHECK(poly({{-1, Rational(3, 2)}, {2, 1}}, 10).valuation() == -1);
}

TEST_CASE("valuation arithmetic") {
  const auto inf = Valuation::infinity(5);
  CHECK((inf + 3).is_infinite());
  CHECK(Valuation::finite(1000000) < inf);
  CHECK(Valuation::finite(2) + 3 == 5);
  CHECK(to_string(inf) == "inf");
}

TEST_CASE("order of a unit") {
  CHECK(order_of_unit(poly({{0, 1}, {1, 1}}, 10)) == 1);
  CHECK(order_of_unit(poly({{0, 5}}, 10)).is_infinite());
  CHECK(order_of_unit(poly({{0, 2}, {3, 1}, {7, -1}}, 10)) == 3);
  CHECK(kind_of([] { order_of_unit(poly({{1, 1}}, 10)); }) == ErrorKind::NotAUnit);
}

TEST_CASE("linear operations") {
  const auto f = poly({{4, 1}, {5, 1}}, 12);
  CHECK(sub(f, poly({{5, 1}}, 20)) == poly({{4, 1}}, 12));
  const auto zero = scale(0, f);
  CHECK(zero.is_zero());
  CHECK(zero.precision() == 12);
  const auto g = poly({{2, 7}, {3, -1}}, 15);
  CHECK(add(f, sub(g, g)) == f);
  CHECK(add(f, g).precision() == 12);
}

TEST_CASE("product against a plain convolution") {
  const auto f = poly({{4, 1}, {5, 1}}, 30);
  const auto sq = mul(f, f);
  CHECK(sq.precision() == 34);
  const std::vector<Rational> unit{1, 1};
  const auto ref = convolve(unit, unit);
  CHECK(sq.truncated(20) == poly({{8, ref[0]}, {9, ref[1]}, {10, ref[2]}}, 20));
  CHECK(sq.truncated(20) == poly({{8, 1}, {9, 2}, {10, 1}}, 20));

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int round = 0; round < 20; ++round) {
    std::vector<Rational> a(8), b(6);
    for (auto& x : a) x = coeff(rng);
    for (auto& x : b) x = coeff(rng);
    a[0] = 1;
    b[0] = -2;
    const auto ref_ab = convolve(a, b);
    const auto prod = mul(TruncatedSeries(-2, a), TruncatedSeries(3, b));
    CHECK(prod.precision() == std::min(6 + 3, 9 + -2));
    for (int e = 1; e < prod.precision(); ++e) CHECK(prod.coeff(e) == ref_ab[static_cast<std::size_t>(e - 1)]);
  }
}

TEST_CASE("powers") {
  const auto f = poly({{1, 1}, {2, 1}}, 20);
  CHECK(pow(f, 0) == TruncatedSeries::monomial(1, 0, 19));
  CHECK(pow(f, 3) == mul(f, mul(f, f)));
}

TEST_CASE("inverse of a unit") {
  const auto u = poly({{0, 2}, {5, 1}}, 40);
  const auto w = unit_inverse(u);
  CHECK(mul(u, w) == TruncatedSeries::monomial(1, 0, 40));
  CHECK(kind_of([&] { unit_inverse(poly({{1, 1}}, 10)); }) == ErrorKind::NotAUnit);
}

TEST_CASE("n-th roots of units") {
  const auto u = poly({{0, 1}, {1, 1}}, 32);
  const auto beta = nth_root_of_unit(u, 2);
  CHECK(pow(beta, 2) == u);
  CHECK(beta.coeff(0) == 1);
  CHECK(beta.coeff(1) == Rational(1, 2));
  CHECK(beta.coeff(2) == Rational(-1, 8));
  CHECK(pow(nth_root_of_unit(u, 4), 4) == u);
  CHECK(kind_of([] { nth_root_of_unit(poly({{0, 2}, {1, 1}}, 10), 2); }) == ErrorKind::NonUnitConstant);
}

TEST_CASE("composition and reversion") {
  const auto f = poly({{1, 1}, {2, 1}}, 24);
  const auto g = reversion(f);
  CHECK(g.coeff(1) == 1);
  CHECK(g.coeff(2) == -1);
  CHECK(g.coeff(3) == 2);
  CHECK(g.coeff(4) == -5);
  CHECK(compose(f, g) == TruncatedSeries::monomial(1, 1, 24));
  CHECK(compose(g, f) == TruncatedSeries::monomial(1, 1, 24));

  CHECK(kind_of([] { compose(poly({{1, 1}}, 5), poly({{0, 1}}, 5)); }) == ErrorKind::CompositionUndefined);
  CHECK(kind_of([] { reversion(poly({{2, 1}}, 9)); }) == ErrorKind::ReversionUndefined);
}

TEST_CASE("reversion of s = beta t from the first-unit root") {
  const auto beta = nth_root_of_unit(poly({{0, 1}, {1, 1}}, 40), 4);
  const auto s = beta.shifted(1);
  const auto t_of_s = reversion(s);
  CHECK(compose(s, t_of_s).agrees_with(TruncatedSeries::monomial(1, 1, 41), s.precision()));
}

TEST_CASE("derivative") {
  CHECK(derivative(poly({{4, 1}, {5, 1}}, 12)) == poly({{3, 4}, {4, 5}}, 11));
  CHECK(derivative(poly({{0, 3}}, 6)).is_zero());
  CHECK(derivative(poly({{-2, 1}}, 6)) == poly({{-3, -2}}, 5));
}

TEST_CASE("truncation and coefficient access") {
  const auto f = poly({{2, 1}}, 8);
  CHECK(kind_of([&] { f.truncated(9); }) == ErrorKind::InsufficientPrecision);
  CHECK_THROWS_AS(f.coeff(8), std::out_of_range);
  CHECK(f.coeff(-4) == 0);
  CHECK(to_string(poly({{4, 1}, {5, 1}}, 12)) == "t^4 + t^5 + O(t^12)");
}
