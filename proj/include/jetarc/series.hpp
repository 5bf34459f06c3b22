#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jetarc/polynomial.hpp"
#include "jetarc/rational.hpp"

namespace jetarc {

/// Element of Q[t]/(t^N). The truncation order N is the coefficient count;
/// arithmetic between different orders truncates to the smaller one.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::size_t order) : coeffs_(order) {}
  TruncatedSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {}

  static TruncatedSeries constant(const Rational& c, std::size_t order);
  /// c·t^k truncated at order.
  static TruncatedSeries monomial(const Rational& c, std::size_t k, std::size_t order);
  /// Reads the coefficients of a univariate polynomial in variable t.
  static TruncatedSeries from_polynomial(const Polynomial& p, VarId t, std::size_t order);

  std::size_t truncation() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t j) const { return coeffs_[j]; }
  Rational& operator[](std::size_t j) { return coeffs_[j]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Least j with a nonzero coefficient; nullopt stands for infinity.
  std::optional<std::size_t> order() const;
  /// order() with infinity replaced by the truncation order.
  std::size_t capped_order() const;
  bool is_zero() const { return !order().has_value(); }

  TruncatedSeries truncated(std::size_t order) const;
  /// Pads with zeros (re-reads the degree ≤ N-1 representative in a finer ring).
  TruncatedSeries lifted(std::size_t order) const;
  /// Multiplication by t^k.
  TruncatedSeries shifted_up(std::size_t k) const;
  /// Division by t^k; the caller guarantees order ≥ k. Result has order N-k.
  TruncatedSeries shifted_down(std::size_t k) const;
  /// Inverse of a unit (nonzero constant coefficient).
  TruncatedSeries inverse() const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  std::vector<Rational> coeffs_;
};

/// f(assignment) in Q[t]/(t^N). Every assignment must have truncation ≥ N.
TruncatedSeries evaluate_series(const Polynomial& f, const std::map<VarId, TruncatedSeries>& assignment,
                                std::size_t order);
/// Positional variant: assignment[v] is the image of variable v.
TruncatedSeries evaluate_series(const Polynomial& f, const std::vector<TruncatedSeries>& assignment,
                                std::size_t order);

using SeriesVector = std::vector<TruncatedSeries>;

SeriesVector truncate(const SeriesVector& v, std::size_t order);
/// Largest k with every entry ≡ 0 mod t^k (the truncation if all vanish).
std::size_t order_of(const SeriesVector& v);

/// Dense rows×cols matrix over Q[t]/(t^K) with a common truncation K.
class SeriesMatrix {
 public:
  SeriesMatrix() = default;
  SeriesMatrix(std::size_t rows, std::size_t cols, std::size_t truncation);
  static SeriesMatrix identity(std::size_t n, std::size_t truncation);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t truncation() const { return truncation_; }

  TruncatedSeries& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const TruncatedSeries& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  SeriesMatrix truncated(std::size_t order) const;
  SeriesMatrix columns(const std::vector<std::size_t>& which) const;
  SeriesMatrix transposed() const;

  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesVector operator*(const SeriesMatrix& a, const SeriesVector& v);
  friend bool operator==(const SeriesMatrix& a, const SeriesMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0, truncation_ = 0;
  std::vector<TruncatedSeries> data_;
};

TruncatedSeries determinant(const SeriesMatrix& a);
/// Classical adjoint: adjugate(A)·A = det(A)·I.
SeriesMatrix adjugate(const SeriesMatrix& a);
/// Minimum order over all k×k minors (truncation when all vanish).
std::size_t minor_ideal_order(const SeriesMatrix& a, std::size_t k);

}  // namespace jetarc
