#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qhcurve::oracle {

std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& rows, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < columns && rank < rows.size(); ++col) {
    std::size_t pick = rank;
    while (pick < rows.size() && sgn(rows[pick][col]) == 0) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[rank], rows[pick]);
    const Rational inv = 1 / rows[rank][col];
    for (std::size_t j = col; j < columns; ++j) rows[rank][j] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][col]) == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t j = col; j < columns; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

CoefficientMatrix monomial_matrix(const std::vector<TruncatedSeries>& generators, int P, std::size_t max_monomials) {
  std::vector<int> vals;
  for (const auto& g : generators) {
    const Valuation v = g.valuation();
    if (!v.is_finite() || v.value() < 1) throw std::invalid_argument("oracle: generators need valuation >= 1");
    if (g.precision() < P) throw std::invalid_argument("oracle: generator known below the window");
    vals.push_back(v.value());
  }
  CoefficientMatrix m{0, P, {}};
  std::vector<TruncatedSeries> partial{TruncatedSeries::monomial(Rational(1), 0, P)};
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int total) {
    if (i == generators.size()) {
      if (m.rows.size() >= max_monomials) throw std::length_error("oracle: monomial count exceeds the guard");
      std::vector<Rational> row(static_cast<std::size_t>(P));
      for (int e = 0; e < P; ++e) row[static_cast<std::size_t>(e)] = partial.back().coeff(e);
      m.rows.push_back(std::move(row));
      return;
    }
    walk(i + 1, total);
    const std::size_t depth = partial.size();
    for (int t = total + vals[i]; t < P; t += vals[i]) {
      partial.push_back(mul(partial.back(), generators[i]).truncated(P));
      walk(i + 1, t);
    }
    partial.erase(partial.begin() + static_cast<std::ptrdiff_t>(depth), partial.end());
  };
  walk(0, 0);
  return m;
}

BruteSemigroup brute_semigroup(const std::vector<TruncatedSeries>& generators, int P, std::size_t max_monomials) {
  CoefficientMatrix m = monomial_matrix(generators, P, max_monomials);
  const auto pivots = row_reduce(m.rows, static_cast<std::size_t>(P));
  BruteSemigroup out;
  out.members.assign(static_cast<std::size_t>(P), false);
  for (auto p : pivots) out.members[p] = true;
  for (int s = 0; s < P; ++s)
    if (!out.members[static_cast<std::size_t>(s)]) out.gaps.push_back(s);
  out.conductor = out.gaps.empty() ? 0 : out.gaps.back() + 1;
  out.genus = static_cast<int>(out.gaps.size());
  return out;
}

bool brute_membership(const std::vector<TruncatedSeries>& generators, const TruncatedSeries& f, int P,
                      std::size_t max_monomials) {
  CoefficientMatrix m = monomial_matrix(generators, P, max_monomials);
  const auto size = static_cast<std::size_t>(P);
  const std::size_t rank = row_reduce(m.rows, size).size();
  std::vector<Rational> target(size);
  for (int e = 0; e < P; ++e) target[static_cast<std::size_t>(e)] = f.coeff(e);
  m.rows.push_back(std::move(target));
  return row_reduce(m.rows, size).size() == rank;
}

int brute_inverse_valuation(const std::vector<TruncatedSeries>& ideal_generators,
                            const std::vector<TruncatedSeries>& ring_generators, int P, std::size_t max_monomials) {
  const BruteSemigroup sg = brute_semigroup(ring_generators, P, max_monomials);
  const int c = sg.conductor;
  int v = ideal_generators.front().valuation().value();
  for (const auto& g : ideal_generators) v = std::min(v, g.valuation().value());

  // Monomials of R below t^c span R modulo the conductor.
  CoefficientMatrix mono = monomial_matrix(ring_generators, c, max_monomials);
  const std::size_t n_y = static_cast<std::size_t>(c);  // y on [-v, c - v)
  const std::size_t n_lambda = mono.rows.size();
  const std::size_t m = ideal_generators.size();
  const std::size_t columns = n_y + m * n_lambda;

  // Unknowns: y_k, then lambda_{j,mu}. Equations: coefficient of t^e (e < c) in
  // y g_j - sum_mu lambda_{j,mu} mu vanishes.
  std::vector<std::vector<Rational>> rows;
  for (std::size_t j = 0; j < m; ++j) {
    const auto& g = ideal_generators[j];
    for (int e = 0; e < c; ++e) {
      std::vector<Rational> row(columns);
      for (int k = -v; k < c - v; ++k) {
        const int ge = e - k;
        if (ge < g.shift() || ge >= g.precision()) {
          if (ge >= g.precision()) throw std::invalid_argument("oracle: ideal generator known below the window");
          continue;
        }
        row[static_cast<std::size_t>(k + v)] = g.coeff(ge);
      }
      for (std::size_t mu = 0; mu < n_lambda; ++mu)
        row[n_y + j * n_lambda + mu] = -mono.rows[mu][static_cast<std::size_t>(e)];
      rows.push_back(std::move(row));
    }
  }
  const auto pivots = row_reduce(rows, columns);

  // Null vectors, projected onto the y coordinates.
  std::vector<bool> is_pivot(columns, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> projections;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> y(n_y);
    if (free < n_y) y[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (pivots[r] < n_y) y[pivots[r]] = -rows[r][free];
    projections.push_back(std::move(y));
  }
  const auto y_pivots = row_reduce(projections, n_y);
  if (y_pivots.empty()) return c - v;
  return static_cast<int>(y_pivots.front()) - v;
}

int brute_colength(const std::vector<TruncatedSeries>& ideal_generators,
                   const std::vector<TruncatedSeries>& ring_generators, int P, std::size_t max_monomials) {
  const BruteSemigroup sg = brute_semigroup(ring_generators, P, max_monomials);
  const int c = sg.conductor;
  int v = ideal_generators.front().valuation().value();
  for (const auto& g : ideal_generators) v = std::min(v, g.valuation().value());
  if (v < 0) throw std::invalid_argument("oracle: colength of a non-integral ideal");
  const int hi = v + c;
  CoefficientMatrix mono = monomial_matrix(ring_generators, c, max_monomials);
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : ideal_generators)
    for (const auto& mu : mono.rows) {
      const TruncatedSeries m_series(0, mu);
      const TruncatedSeries product = mul(g, m_series);
      std::vector<Rational> row(static_cast<std::size_t>(hi));
      for (int e = 0; e < hi && e < product.precision(); ++e) row[static_cast<std::size_t>(e)] = product.coeff(e);
      rows.push_back(std::move(row));
    }
  const auto pivots = row_reduce(rows, static_cast<std::size_t>(hi));
  return hi - static_cast<int>(pivots.size());
}

}  // namespace qhcurve::oracle
