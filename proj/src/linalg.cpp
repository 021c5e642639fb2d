#include "qhcurve/linalg.hpp"

#include <stdexcept>

namespace qhcurve {

namespace {

/// v -= c * row, starting at `from`.
void axpy(RationalVector& v, const Rational& c, const RationalVector& row, std::size_t from) {
  Rational prod;
  for (std::size_t i = from; i < v.size(); ++i) {
    if (sgn(row[i]) == 0) continue;
    mpq_mul(prod.get_mpq_t(), c.get_mpq_t(), row[i].get_mpq_t());
    mpq_sub(v[i].get_mpq_t(), v[i].get_mpq_t(), prod.get_mpq_t());
  }
}

}  // namespace

Echelon::Echelon(int lo, int hi) : lo_(lo), hi_(hi), rows_(static_cast<std::size_t>(hi > lo ? hi - lo : 0)) {}

bool Echelon::has_pivot(int exponent) const {
  return exponent >= lo_ && exponent < hi_ && rows_[static_cast<std::size_t>(exponent - lo_)].has_value();
}

const RationalVector& Echelon::row(int exponent) const {
  if (!has_pivot(exponent)) throw std::out_of_range("no echelon row with pivot " + std::to_string(exponent));
  return *rows_[static_cast<std::size_t>(exponent - lo_)];
}

std::vector<int> Echelon::pivots() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i]) out.push_back(lo_ + static_cast<int>(i));
  return out;
}

void Echelon::reduce(RationalVector& v) const {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0 || !rows_[i]) continue;
    const Rational c = v[i];
    axpy(v, c, *rows_[i], i);
  }
}

std::optional<int> Echelon::insert(RationalVector v) {
  reduce(v);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    const Rational inv = 1 / v[i];
    for (std::size_t j = i; j < v.size(); ++j) v[j] *= inv;
    rows_[i] = std::move(v);
    ++rank_;
    return lo_ + static_cast<int>(i);
  }
  return std::nullopt;
}

void Echelon::reduce_fully() {
  for (std::size_t i = rows_.size(); i-- > 0;) {
    if (!rows_[i]) continue;
    RationalVector& r = *rows_[i];
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      if (sgn(r[j]) == 0 || !rows_[j]) continue;
      const Rational c = r[j];
      axpy(r, c, *rows_[j], j);
    }
  }
}

int Echelon::filled_from() const {
  int k = hi_;
  while (k > lo_ && rows_[static_cast<std::size_t>(k - 1 - lo_)]) --k;
  return k;
}

RationalVector Echelon::window_of(const TruncatedSeries& f) const {
  RationalVector v(rows_.size());
  for (int e = lo_; e < hi_; ++e) v[static_cast<std::size_t>(e - lo_)] = f.coeff(e);
  return v;
}

TruncatedSeries Echelon::series_of(const RationalVector& v) const { return TruncatedSeries(lo_, v); }

std::vector<RationalVector> nullspace(std::vector<RationalVector> rows, int columns) {
  const auto n = static_cast<std::size_t>(columns);
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pick = rank;
    while (pick < rows.size() && sgn(rows[pick][col]) == 0) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[rank], rows[pick]);
    const Rational inv = 1 / rows[rank][col];
    for (std::size_t j = col; j < n; ++j) rows[rank][j] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][col]) == 0) continue;
      const Rational c = rows[r][col];
      axpy(rows[r], c, rows[rank], col);
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  Echelon basis(0, columns);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(n);
    x[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = -rows[r][free];
    basis.insert(std::move(x));
  }
  basis.reduce_fully();
  std::vector<RationalVector> out;
  for (int p : basis.pivots()) out.push_back(basis.row(p));
  return out;
}

}  // namespace qhcurve
