#include "jetarc/lifting.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "jetarc/detail/combinatorics.hpp"
#include "jetarc/errors.hpp"

namespace jetarc {

namespace {

std::size_t common_truncation(const SeriesVector& u) {
  if (u.empty()) throw ValidationError("empty series vector");
  std::size_t k = u.front().truncation();
  for (const auto& s : u)
    if (s.truncation() != k) throw ValidationError("series vector without a uniform truncation");
  return k;
}

void check_system(const std::vector<Polynomial>& f, const SeriesVector& u) {
  if (f.empty()) throw ValidationError("empty polynomial system");
  for (const auto& g : f)
    if (g.universe() != f.front().universe()) throw ValidationError("polynomials over different universes");
  if (u.size() != f.front().universe()->size())
    throw ValidationError("series vector of length " + std::to_string(u.size()) + " for " +
                          std::to_string(f.front().universe()->size()) + " variables");
  if (f.size() > u.size()) throw ValidationError("more equations than variables");
}

SeriesVector lift_all(const SeriesVector& u, std::size_t order) {
  SeriesVector out;
  out.reserve(u.size());
  for (const auto& s : u) out.push_back(s.lifted(order));
  return out;
}

SeriesVector evaluate_all(const std::vector<Polynomial>& f, const SeriesVector& u, std::size_t order) {
  SeriesVector out;
  out.reserve(f.size());
  for (const auto& g : f) out.push_back(evaluate_series(g, u, order));
  return out;
}

// Validates that u (truncation level+1) is a jet of V(F) whose Jacobian has
// r-minor order e.
void check_jet(const std::vector<Polynomial>& f, const SeriesVector& u, std::size_t level, std::size_t e) {
  check_system(f, u);
  if (common_truncation(u) != level + 1)
    throw ValidationError("jet has truncation " + std::to_string(u.front().truncation()) + ", expected " +
                          std::to_string(level + 1));
  if (order_of(evaluate_all(f, u, level + 1)) < level + 1) throw ValidationError("jet does not lie on V(F)");
  if (e > level) throw ValidationError("Jacobian order exceeds the jet level");
  std::size_t order = minor_ideal_order(jacobian_at(f, u), f.size());
  if (order != e)
    throw ValidationError("Jacobian minors have order " + std::to_string(order) + ", not " + std::to_string(e));
}

void row_axpy(SeriesMatrix& m, std::size_t target, const TruncatedSeries& q, std::size_t source) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) -= q * m(source, j);
}

void col_axpy(SeriesMatrix& m, std::size_t target, const TruncatedSeries& q, std::size_t source) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) -= m(i, source) * q;
}

void swap_rows(SeriesMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(SeriesMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

}  // namespace

SeriesMatrix jacobian_at(const std::vector<Polynomial>& f, const SeriesVector& u) {
  check_system(f, u);
  std::size_t k = common_truncation(u);
  SeriesMatrix j(f.size(), u.size(), k);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t v = 0; v < u.size(); ++v)
      j(i, v) = evaluate_series(partial_derivative(f[i], static_cast<VarId>(v)), u, k);
  return j;
}

std::vector<std::size_t> select_columns(const SeriesMatrix& jacobian, std::size_t e) {
  std::vector<std::size_t> found;
  detail::for_each_subset(jacobian.cols(), jacobian.rows(), [&](const std::vector<std::size_t>& cols) {
    if (determinant(jacobian.columns(cols)).capped_order() != e) return true;
    found = cols;
    return false;
  });
  if (found.empty()) throw ValidationError("no column subset has a minor of order " + std::to_string(e));
  return found;
}

bool liftable(const std::vector<Polynomial>& f, const SeriesVector& u, std::size_t m, std::size_t e) {
  check_jet(f, u, m, e);
  std::size_t k = m + e + 1;
  SeriesVector w = lift_all(u, k);
  SeriesMatrix jac = jacobian_at(f, w);
  auto cols = select_columns(jac.truncated(m + 1), e);
  return order_of(adjugate(jac.columns(cols)) * evaluate_all(f, w, k)) >= k;
}

LiftSystem lift_system(const std::vector<Polynomial>& f, const SeriesVector& u, std::size_t m, std::size_t e) {
  if (!liftable(f, u, m, e)) throw ValidationError("jet is not liftable");
  std::size_t k = m + e + 2;
  SeriesVector w = lift_all(u, k);
  SeriesMatrix jac = jacobian_at(f, w);
  auto cols = select_columns(jac.truncated(m + 1), e);
  SeriesMatrix r = jac.columns(cols);
  // R*·F(w + t^(m+1)v) ≡ R*F(w) + t^(m+1)·R*J·v mod t^(m+e+2), and every entry of
  // R*J has order ≥ e, so the t^(m+e+1) coefficient is affine in v.
  SeriesMatrix adj = adjugate(r);
  SeriesVector rf = adj * evaluate_all(f, w, k);
  SeriesMatrix rj = adj * jac;
  LiftSystem sys;
  sys.bound = cols;
  for (std::size_t j = 0; j < u.size(); ++j)
    if (std::find(cols.begin(), cols.end(), j) == cols.end()) sys.free.push_back(j);
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::vector<Rational> row;
    for (std::size_t j = 0; j < u.size(); ++j) row.push_back(rj(i, j)[e]);
    sys.a.push_back(std::move(row));
    sys.b.push_back(-rf[i][m + e + 1]);
  }
  return sys;
}

SeriesVector lift_step(const std::vector<Polynomial>& f, const SeriesVector& u, std::size_t m, std::size_t e,
                       const FreeChoice& free_choice) {
  LiftSystem sys = lift_system(f, u, m, e);
  std::vector<Rational> v(u.size());
  for (std::size_t j : sys.free) v[j] = free_choice ? free_choice(j) : Rational(0);
  // On the bound columns A = det(R)_e · Id.
  for (std::size_t i = 0; i < sys.bound.size(); ++i) {
    Rational rhs = sys.b[i];
    for (std::size_t j : sys.free) rhs -= sys.a[i][j] * v[j];
    v[sys.bound[i]] = rhs / sys.a[i][sys.bound[i]];
  }
  SeriesVector w = lift_all(u, m + 2);
  for (std::size_t j = 0; j < w.size(); ++j) w[j][m + 1] = v[j];
  if (order_of(evaluate_all(f, w, m + 2)) < m + 2) throw InvariantFailure("lift_step produced a non-solution");
  return w;
}

SmithForm smith_form(const SeriesMatrix& a) {
  std::size_t k = a.truncation();
  std::size_t rows = a.rows(), cols = a.cols();
  SmithForm s{{}, SeriesMatrix::identity(rows, k), SeriesMatrix::identity(cols, k)};
  SeriesMatrix b = a;
  std::size_t diag = std::min(rows, cols);
  for (std::size_t d = 0; d < diag; ++d) {
    std::size_t best = k, pi = d, pj = d;
    for (std::size_t i = d; i < rows; ++i)
      for (std::size_t j = d; j < cols; ++j) {
        std::size_t o = b(i, j).capped_order();
        if (o < best) best = o, pi = i, pj = j;
      }
    if (best == k) {
      s.orders.resize(diag, k);
      break;
    }
    swap_rows(b, d, pi);
    swap_rows(s.u, d, pi);
    swap_cols(b, d, pj);
    swap_cols(s.v, d, pj);
    TruncatedSeries unit = b(d, d).shifted_down(best).lifted(k).inverse();
    for (std::size_t j = 0; j < cols; ++j) b(d, j) = b(d, j) * unit;
    for (std::size_t j = 0; j < rows; ++j) s.u(d, j) = s.u(d, j) * unit;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == d || b(i, d).is_zero()) continue;
      TruncatedSeries q = b(i, d).shifted_down(best).lifted(k);
      row_axpy(b, i, q, d);
      row_axpy(s.u, i, q, d);
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (j == d || b(d, j).is_zero()) continue;
      TruncatedSeries q = b(d, j).shifted_down(best).lifted(k);
      col_axpy(b, j, q, d);
      col_axpy(s.v, j, q, d);
    }
    s.orders.push_back(best);
  }
  return s;
}

bool in_image(const std::vector<Polynomial>& f, const SeriesVector& u, std::size_t m, std::size_t p, std::size_t e) {
  if (m < p + e || m > 2 * p) throw ValidationError("in_image requires 2p >= m >= p + e");
  check_jet(f, u, p, e);
  std::size_t k = m - p;
  if (k == 0) return true;
  SeriesVector w = lift_all(u, m + 1);
  SeriesVector g;
  for (const auto& value : evaluate_all(f, w, m + 1)) g.push_back(value.shifted_down(p + 1));
  SmithForm s = smith_form(jacobian_at(f, w).truncated(k));
  SeriesVector h = s.u * g;
  for (std::size_t i = 0; i < h.size(); ++i) {
    std::size_t need = i < s.orders.size() ? s.orders[i] : k;
    if (h[i].capped_order() < need) return false;
  }
  return true;
}

}  // namespace jetarc
