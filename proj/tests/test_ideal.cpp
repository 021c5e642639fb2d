#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qhcurve/error.hpp"
#include "qhcurve/ideal.hpp"
#include "qhcurve/parser.hpp"

using namespace qhcurve;

namespace {

TruncatedSeries mono(int e, int precision = 128) { return TruncatedSeries::monomial(1, e, precision); }

}  // namespace

TEST_CASE("derivative ideal") {
  const Ring m = Ring::build(parse_generators("t^4, t^5, t^6"));
  const auto d = derivative_ideal(m.curve());
  CHECK(d.min_valuation() == 3);
  CHECK(d.generators()[0].terms() == std::vector<std::pair<int, Rational>>{{3, 4}});

  const Ring r32 = Ring::build(parse_generators("t^4+t^5, t^7, t^8, t^9"));
  CHECK(derivative_ideal(r32.curve()).min_valuation() == 3);
  const Ring r33 = Ring::build(parse_generators("t^5, t^6, t^8+t^9"));
  const auto d33 = derivative_ideal(r33.curve());
  CHECK(d33.min_valuation() == 4);
  CHECK(d33.generators()[2].terms() == std::vector<std::pair<int, Rational>>{{7, 8}, {8, 9}});
}

TEST_CASE("value sets and colength on <4,5,6>") {
  const Ring m = Ring::build(parse_generators("t^4, t^5, t^6"));
  const auto vs = value_set(derivative_ideal(m.curve()), m);
  CHECK(vs.min_valuation == 3);
  // {3, 4, 5, 7, 8, 9, ...}: the tail already starts at 7.
  CHECK(vs.window_members == std::vector<int>{3, 4, 5});
  CHECK(vs.tail_start == 7);
  CHECK_FALSE(vs.contains(6));
  for (int s : {3, 4, 5, 7, 8, 9, 10, 11}) CHECK(vs.contains(s));
  CHECK(colength(derivative_ideal(m.curve()), m) == 4);

  const auto unit = value_set(unit_ideal(m), m);
  CHECK(unit.window_members == std::vector<int>{0, 4, 5, 6});
  CHECK(unit.tail_start == 8);

  const auto shifted = value_set(principal_ideal(mono(1)), m);
  CHECK(shifted.window_members == std::vector<int>{1, 5, 6, 7});
  CHECK(shifted.tail_start == 9);

  CHECK(colength(normalization_ideal(), m) == 0);
}

TEST_CASE("colength of R is the genus") {
  const Ring r = Ring::build(parse_generators("t^4+t^5, t^7, t^8, t^9"));
  CHECK(colength(unit_ideal(r), r) == 5);
  const auto neg = principal_ideal(TruncatedSeries::monomial(1, -1, 64));
  try {
    colength(neg, r);
    FAIL("expected NotIntegral");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotIntegral);
  }
}

TEST_CASE("inverse ideals") {
  const Ring m = Ring::build(parse_generators("t^4, t^5, t^6"));
  CHECK(inverse(unit_ideal(m), m).min_valuation() == 0);
  CHECK(window_basis(inverse(unit_ideal(m), m), m) == window_basis(unit_ideal(m), m));
  CHECK(inverse(derivative_ideal(m.curve()), m).min_valuation() == 1);
  CHECK(inverse(principal_ideal(mono(2)), m).min_valuation() == -2);

  const auto f = TruncatedSeries::from_terms({{3, 1}, {4, 2}}, 128);
  const auto f_inv = inverse(principal_ideal(f), m);
  CHECK(f_inv.min_valuation() == -3);
  CHECK(window_basis(f_inv, m) == window_basis(principal_ideal(unit_inverse(f.shifted(-3)).shifted(-3)), m));
}

TEST_CASE("products and traces") {
  const Ring m = Ring::build(parse_generators("t^4, t^5, t^6"));
  const FractionalIdeal i({mono(3), mono(4)});
  const FractionalIdeal j({mono(1), mono(2)});
  const auto ij = multiply(i, j, m);
  CHECK(ij.min_valuation() == 4);
  CHECK(window_basis(multiply(i, unit_ideal(m), m), m) == window_basis(i, m));

  const auto d = derivative_ideal(m.curve());
  CHECK(multiply(d, inverse(d, m), m).min_valuation() == 4);
  CHECK(trace(d, m).min_valuation() == 4);
  CHECK(window_basis(trace(unit_ideal(m), m), m) == window_basis(unit_ideal(m), m));
  const auto f = TruncatedSeries::from_terms({{2, 1}, {3, -1}}, 128);
  CHECK(window_basis(trace(principal_ideal(f), m), m) == window_basis(unit_ideal(m), m));
}

TEST_CASE("derivative ideal of t^5, t^6, t^8+t^9") {
  const Ring r = Ring::build(parse_generators("t^5, t^6, t^8+t^9"));
  const auto d = derivative_ideal(r.curve());
  CHECK(inverse(d, r).min_valuation() == 6);
  CHECK(colength(d, r) == 6);
  CHECK(trace(d, r).min_valuation() == 10);
}

TEST_CASE("scaling") {
  const Ring m = Ring::build(parse_generators("t^4, t^5, t^6"));
  const auto d = derivative_ideal(m.curve());
  const auto gamma = TruncatedSeries::from_terms({{-2, 3}, {0, 1}}, 128);
  const auto scaled = scale(gamma, d);
  CHECK(scaled.min_valuation() == 1);
  CHECK(window_basis(trace(scaled, m), m) == window_basis(trace(d, m), m));
  CHECK_THROWS(scale(TruncatedSeries::zero(10), d));
}
