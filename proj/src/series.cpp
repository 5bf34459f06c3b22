#include "jetarc/series.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "jetarc/detail/combinatorics.hpp"
#include "jetarc/errors.hpp"

namespace jetarc {

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
  return monomial(c, 0, order);
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, std::size_t k, std::size_t order) {
  TruncatedSeries s(order);
  if (k < order) s.coeffs_[k] = c;
  return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, VarId t, std::size_t order) {
  TruncatedSeries s(order);
  for (const auto& term : p.terms()) {
    if ((term.monomial.support() & ~(std::uint64_t{1} << t)) != 0)
      throw ValidationError("series literal '" + p.to_string() + "' is not univariate in " + p.universe()->name(t));
    unsigned k = term.monomial.exponent(t);
    if (k < order) s.coeffs_[k] += term.coefficient;
  }
  return s;
}

std::optional<std::size_t> TruncatedSeries::order() const {
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return j;
  return std::nullopt;
}

std::size_t TruncatedSeries::capped_order() const { return order().value_or(coeffs_.size()); }

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > coeffs_.size()) throw ValidationError("cannot truncate a series to a finer order");
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order)));
}

TruncatedSeries TruncatedSeries::lifted(std::size_t order) const {
  TruncatedSeries s(order);
  for (std::size_t j = 0; j < std::min(order, coeffs_.size()); ++j) s.coeffs_[j] = coeffs_[j];
  return s;
}

TruncatedSeries TruncatedSeries::shifted_up(std::size_t k) const {
  TruncatedSeries s(coeffs_.size());
  for (std::size_t j = 0; j + k < coeffs_.size(); ++j) s.coeffs_[j + k] = coeffs_[j];
  return s;
}

TruncatedSeries TruncatedSeries::shifted_down(std::size_t k) const {
  if (capped_order() < k) throw ValidationError("series not divisible by t^" + std::to_string(k));
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_.empty() || coeffs_[0] == 0) throw ValidationError("series is not a unit");
  std::size_t n = coeffs_.size();
  TruncatedSeries inv(n);
  Rational c0inv = 1 / coeffs_[0];
  inv.coeffs_[0] = c0inv;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * inv.coeffs_[k - j];
    inv.coeffs_[k] = -acc * c0inv;
  }
  return inv;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t n = std::min(a.truncation(), b.truncation());
  TruncatedSeries s(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (b.coeffs_[j] != 0) s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return s;
}

TruncatedSeries operator*(TruncatedSeries a, const Rational& c) {
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

std::string TruncatedSeries::to_string(const std::string& var) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = abs(c);
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (j == 0 || mag != 1) out << mag.get_str() << (j ? "*" : "");
    if (j >= 1) out << var;
    if (j >= 2) out << '^' << j;
  }
  if (first) out << '0';
  out << " + O(" << var << '^' << coeffs_.size() << ')';
  return out.str();
}

TruncatedSeries evaluate_series(const Polynomial& f, const std::vector<TruncatedSeries>& assignment,
                                std::size_t order) {
  std::map<VarId, TruncatedSeries> map;
  for (std::uint64_t m = f.support(); m; m &= m - 1) {
    auto v = static_cast<VarId>(std::countr_zero(m));
    if (v >= assignment.size())
      throw ValidationError("no series assigned to variable '" + f.universe()->name(v) + "'");
    map.emplace(v, assignment[v]);
  }
  return evaluate_series(f, map, order);
}

TruncatedSeries evaluate_series(const Polynomial& f, const std::map<VarId, TruncatedSeries>& assignment,
                                std::size_t order) {
  std::map<VarId, std::vector<TruncatedSeries>> powers;
  for (std::uint64_t m = f.support(); m; m &= m - 1) {
    auto v = static_cast<VarId>(std::countr_zero(m));
    auto it = assignment.find(v);
    if (it == assignment.end())
      throw ValidationError("no series assigned to variable '" + f.universe()->name(v) + "'");
    if (it->second.truncation() < order)
      throw ValidationError("series for '" + f.universe()->name(v) + "' has truncation " +
                            std::to_string(it->second.truncation()) + " < " + std::to_string(order));
    powers[v].push_back(TruncatedSeries::constant(1, order));
  }
  TruncatedSeries result(order);
  for (const auto& term : f.terms()) {
    TruncatedSeries prod = TruncatedSeries::constant(term.coefficient, order);
    for (std::uint64_t m = term.monomial.support(); m; m &= m - 1) {
      auto v = static_cast<VarId>(std::countr_zero(m));
      unsigned e = term.monomial.exponent(v);
      auto& cache = powers[v];
      while (cache.size() <= e) cache.push_back(cache.back() * assignment.at(v).truncated(order));
      prod = prod * cache[e];
    }
    result += prod;
  }
  return result;
}

SeriesVector truncate(const SeriesVector& v, std::size_t order) {
  SeriesVector out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.truncated(order));
  return out;
}

std::size_t order_of(const SeriesVector& v) {
  std::size_t best = v.empty() ? 0 : v.front().truncation();
  for (const auto& s : v) best = std::min(best, s.capped_order());
  return best;
}

// ---------------------------------------------------------------------------

SeriesMatrix::SeriesMatrix(std::size_t rows, std::size_t cols, std::size_t truncation)
    : rows_(rows), cols_(cols), truncation_(truncation), data_(rows * cols, TruncatedSeries(truncation)) {}

SeriesMatrix SeriesMatrix::identity(std::size_t n, std::size_t truncation) {
  SeriesMatrix m(n, n, truncation);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = TruncatedSeries::constant(1, truncation);
  return m;
}

SeriesMatrix SeriesMatrix::truncated(std::size_t order) const {
  SeriesMatrix m(rows_, cols_, order);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].truncated(order);
  return m;
}

SeriesMatrix SeriesMatrix::columns(const std::vector<std::size_t>& which) const {
  SeriesMatrix m(rows_, which.size(), truncation_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < which.size(); ++j) m(i, j) = (*this)(i, which[j]);
  return m;
}

SeriesMatrix SeriesMatrix::transposed() const {
  SeriesMatrix m(cols_, rows_, truncation_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.cols_ != b.rows_) throw ValidationError("matrix dimension mismatch");
  std::size_t k = std::min(a.truncation_, b.truncation_);
  SeriesMatrix m(a.rows_, b.cols_, k);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      for (std::size_t l = 0; l < a.cols_; ++l) m(i, j) += a(i, l) * b(l, j);
  return m;
}

SeriesVector operator*(const SeriesMatrix& a, const SeriesVector& v) {
  if (a.cols_ != v.size()) throw ValidationError("matrix/vector dimension mismatch");
  std::size_t k = a.truncation_;
  for (const auto& s : v) k = std::min(k, s.truncation());
  SeriesVector out(a.rows_, TruncatedSeries(k));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) out[i] += a(i, l) * v[l];
  return out;
}

TruncatedSeries determinant(const SeriesMatrix& a) {
  if (a.rows() != a.cols()) throw ValidationError("determinant of a non-square matrix");
  TruncatedSeries zero(a.truncation());
  TruncatedSeries one = TruncatedSeries::constant(1, a.truncation());
  return detail::laplace_determinant<TruncatedSeries>(
      a.rows(), [&](std::size_t i, std::size_t j) { return a(i, j); }, zero, one);
}

SeriesMatrix adjugate(const SeriesMatrix& a) {
  if (a.rows() != a.cols()) throw ValidationError("adjugate of a non-square matrix");
  std::size_t n = a.rows();
  SeriesMatrix adj(n, n, a.truncation());
  if (n == 1) {
    adj(0, 0) = TruncatedSeries::constant(1, a.truncation());
    return adj;
  }
  TruncatedSeries zero(a.truncation());
  TruncatedSeries one = TruncatedSeries::constant(1, a.truncation());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // cofactor of (i, j) goes to adj(j, i)
      auto entry = [&](std::size_t r, std::size_t c) {
        return a(r < i ? r : r + 1, c < j ? c : c + 1);
      };
      TruncatedSeries minor = detail::laplace_determinant<TruncatedSeries>(n - 1, entry, zero, one);
      adj(j, i) = ((i + j) % 2 == 0) ? minor : -minor;
    }
  }
  return adj;
}

std::size_t minor_ideal_order(const SeriesMatrix& a, std::size_t k) {
  std::size_t best = a.truncation();
  if (k == 0) return 0;
  TruncatedSeries zero(a.truncation());
  TruncatedSeries one = TruncatedSeries::constant(1, a.truncation());
  detail::for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
    detail::for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
      auto entry = [&](std::size_t r, std::size_t c) { return a(rows[r], cols[c]); };
      best = std::min(best, detail::laplace_determinant<TruncatedSeries>(k, entry, zero, one).capped_order());
      return true;
    });
    return true;
  });
  return best;
}

}  // namespace jetarc
