#include <random>

#include "doctest.h"
#include "jetarc/errors.hpp"
#include "jetarc/lifting.hpp"

using namespace jetarc;

namespace {

// Σ c_j t^j truncated at order.
TruncatedSeries series(std::initializer_list<int> coefficients, std::size_t order) {
  std::vector<Rational> c(order);
  std::size_t j = 0;
  for (int v : coefficients) {
    if (j < order) c[j] = v;
    ++j;
  }
  return TruncatedSeries(c);
}

TruncatedSeries t_power(std::size_t k, std::size_t order, int c = 1) {
  return TruncatedSeries::monomial(c, k, order);
}

std::vector<Polynomial> cusp() {
  auto u = make_universe({"x", "y"});
  return {parse_polynomial("x^2 - y^3", u)};
}

// Rank over Q by fraction-free elimination on a copy.
std::size_t rank(std::vector<std::vector<Rational>> a) {
  std::size_t r = 0;
  std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

SeriesMatrix diagonal_of(const SmithForm& s, std::size_t rows, std::size_t cols, std::size_t k) {
  SeriesMatrix d(rows, cols, k);
  for (std::size_t i = 0; i < s.orders.size(); ++i) d(i, i) = t_power(s.orders[i], k);
  return d;
}

}  // namespace

TEST_CASE("jacobian_at examples") {
  auto f = cusp();
  auto j = jacobian_at(f, {t_power(3, 8), t_power(2, 8)});
  CHECK(j(0, 0) == t_power(3, 8, 2));
  CHECK(j(0, 1) == t_power(4, 8, -3));
  auto axis = jacobian_at(f, {TruncatedSeries(8), t_power(2, 8)});
  CHECK(axis(0, 0).is_zero());
  CHECK(axis(0, 1) == t_power(4, 8, -3));

  auto u3 = make_universe({"x", "y", "z"});
  auto line = jacobian_at({parse_polynomial("x", u3)}, {series({1, 2, 3}, 3), series({4}, 3), series({0, 5}, 3)});
  CHECK(line(0, 0) == series({1}, 3));
  CHECK(line(0, 1).is_zero());
  CHECK(line(0, 2).is_zero());

  CHECK_THROWS_AS(jacobian_at(f, {t_power(3, 8)}), ValidationError);
}

TEST_CASE("liftable examples") {
  auto f = cusp();
  CHECK(liftable(f, {t_power(3, 4), t_power(2, 4)}, 3, 3));
  CHECK(liftable(f, {t_power(3, 4), series({0, 0, 1, 1}, 4)}, 3, 3));
  CHECK_FALSE(liftable(f, {TruncatedSeries(5), t_power(2, 5)}, 4, 4));
  // Truth check for the last case: x = t^5 a forces ord x^2 ≥ 10 while ord y^3 = 6.

  CHECK_THROWS_AS(liftable(f, {t_power(3, 4), t_power(2, 4)}, 3, 2), ValidationError);
  CHECK_THROWS_AS(liftable(f, {t_power(1, 4), t_power(2, 4)}, 3, 1), ValidationError);
  CHECK_THROWS_AS(liftable(f, {t_power(3, 3), t_power(2, 3)}, 2, 3), ValidationError);
}

TEST_CASE("lift_step examples") {
  auto f = cusp();
  auto w = lift_step(f, {t_power(3, 4), t_power(2, 4)}, 3, 3);
  CHECK(w == SeriesVector{t_power(3, 5), t_power(2, 5)});

  SeriesVector u{t_power(3, 4), series({0, 0, 1, 1}, 4)};
  auto step = lift_step(f, u, 3, 3);
  CHECK(step[0].truncation() == 5);
  CHECK(evaluate_series(f[0], step, 5).is_zero());
  SeriesVector current = u;
  for (std::size_t m = 3; m < 6; ++m) current = lift_step(f, current, m, 3);
  CHECK(evaluate_series(f[0], current, 7).is_zero());
  CHECK(current[1] == series({0, 0, 1, 1}, 7));

  CHECK_THROWS_AS(lift_step(f, {TruncatedSeries(5), t_power(2, 5)}, 4, 4), ValidationError);
}

TEST_CASE("smith_form examples") {
  SeriesMatrix a(2, 2, 4);
  a(0, 0) = t_power(2, 4);
  a(1, 1) = t_power(5, 4);
  CHECK(smith_form(a).orders == std::vector<std::size_t>{2, 4});

  SeriesMatrix b(2, 2, 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) b(i, j) = t_power(1, 3);
  auto sb = smith_form(b);
  CHECK(sb.orders == std::vector<std::size_t>{1, 3});
  CHECK(sb.u * b * sb.v == diagonal_of(sb, 2, 2, 3));

  CHECK(smith_form(SeriesMatrix::identity(2, 5)).orders == std::vector<std::size_t>{0, 0});
}

TEST_CASE("in_image examples") {
  auto f = cusp();
  CHECK(in_image(f, {t_power(3, 4), t_power(2, 4)}, 6, 3, 3));
  CHECK_FALSE(in_image(f, {TruncatedSeries(5), t_power(2, 5)}, 8, 4, 4));
  CHECK_THROWS_AS(in_image(f, {t_power(3, 4), t_power(2, 4)}, 7, 3, 3), ValidationError);
  CHECK_THROWS_AS(in_image(f, {t_power(3, 4), t_power(2, 4)}, 5, 3, 3), ValidationError);
}

TEST_CASE("property: Smith orders match minor-ideal orders") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> shift(0, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 2 + trial % 2, cols = 3;
    std::size_t k = 2 + static_cast<std::size_t>(trial % 5);
    SeriesMatrix a(rows, cols, k);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        std::vector<Rational> c(k);
        for (std::size_t l = static_cast<std::size_t>(shift(rng)); l < k; ++l) c[l] = coeff(rng);
        a(i, j) = TruncatedSeries(c);
      }
    auto s = smith_form(a);
    REQUIRE(s.orders.size() == rows);
    CHECK(s.u * a * s.v == diagonal_of(s, rows, cols, k));
    CHECK(!determinant(s.u).is_zero());
    CHECK(determinant(s.u)[0] != 0);
    CHECK(determinant(s.v)[0] != 0);
    std::size_t sum = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i > 0) CHECK(s.orders[i - 1] <= s.orders[i]);
      sum += s.orders[i];
      CHECK(std::min(sum, k) == minor_ideal_order(a, i + 1));
    }
  }
}

TEST_CASE("property: iterated lifts and the solution space") {
  auto f = cusp();
  auto u2 = make_universe({"x", "y", "z"});
  std::vector<Polynomial> surface{parse_polynomial("x*y - z^2", u2)};
  struct Case {
    std::vector<Polynomial> f;
    SeriesVector u;
    std::size_t m, e;
  };
  std::vector<Case> cases{
      {f, {t_power(3, 4), series({0, 0, 1, 1}, 4)}, 3, 3},
      {f, {series({0, 0, 0, 1, 0, 3}, 6), series({0, 0, 1, 0, 2}, 6)}, 5, 3},
      {surface, {series({0, 1}, 3), series({0, 1, 2}, 3), series({0, 1, 1}, 3)}, 2, 1},
      {surface, {series({1}, 2), series({0}, 2), series({0, 1}, 2)}, 1, 0},
  };
  for (const auto& c : cases) {
    CAPTURE(c.m);
    REQUIRE(liftable(c.f, c.u, c.m, c.e));
    auto sys = lift_system(c.f, c.u, c.m, c.e);
    CHECK(rank(sys.a) == c.f.size());
    CHECK(sys.free.size() == c.u.size() - c.f.size());
    SeriesVector current = c.u;
    for (std::size_t k = 1; k <= 4; ++k) {
      std::size_t free_value = k;
      current = lift_step(c.f, current, c.m + k - 1, c.e, [&](std::size_t) { return Rational(free_value); });
      for (const auto& g : c.f) CHECK(evaluate_series(g, current, c.m + k + 1).is_zero());
    }
  }
}

TEST_CASE("property: liftable agrees with in_image") {
  // Perturbed cusp arcs (t^3 + a t^i, t^2 + b t^j), truncated just below the
  // order of F along them.
  auto f = cusp();
  int agree_true = 0, agree_false = 0;
  for (int i = 4; i <= 8; ++i)
    for (int j = 3; j <= 8; ++j)
      for (int a : {0, 1, 2})
        for (int b : {0, 1, -1}) {
          std::size_t big = 20;
          SeriesVector arc{t_power(3, big) + t_power(static_cast<std::size_t>(i), big, a),
                           t_power(2, big) + t_power(static_cast<std::size_t>(j), big, b)};
          auto value = evaluate_series(f[0], arc, big).order();
          std::size_t m = value ? std::min<std::size_t>(*value - 1, 9) : 9;
          if (m < 3) continue;
          SeriesVector u{arc[0].truncated(m + 1), arc[1].truncated(m + 1)};
          bool lift = liftable(f, u, m, 3);
          CHECK(lift == in_image(f, u, m + 3, m, 3));
          (lift ? agree_true : agree_false)++;
        }
  CHECK(agree_true > 0);
  CHECK(agree_false > 0);
}
