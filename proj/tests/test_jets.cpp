#include <random>

#include "doctest.h"
#include "jetarc/errors.hpp"
#include "jetarc/jets.hpp"
#include "support.hpp"

using namespace jetarc;

namespace {

JetPoint random_jet(std::mt19937_64& rng, std::size_t n, unsigned level) {
  JetPoint a(n, level);
  for (unsigned j = 0; j <= level; ++j)
    for (std::size_t i = 0; i < n; ++i) a.at(i, j) = testing::random_rational(rng, 4);
  return a;
}

}  // namespace

TEST_CASE("jet ring layout") {
  auto base = make_universe({"x", "y"});
  JetRing ring(base, 2);
  CHECK(ring.universe()->size() == 6);
  CHECK(ring.universe()->names() == std::vector<std::string>{"x_0", "y_0", "x_1", "y_1", "x_2", "y_2"});
  CHECK(ring.at_level(1).universe()->is_prefix_of(*ring.universe()));
  CHECK(ring.variables_above(0) == std::vector<VarId>{2, 3, 4, 5});
  CHECK_THROWS_AS(JetRing(base, 40), ValidationError);
}

TEST_CASE("total_derivative examples") {
  auto base = make_universe({"x", "y"});
  JetRing ring(base, 2);
  auto u = ring.universe();
  CHECK(total_derivative(ring, parse_polynomial("x_0", u)) == parse_polynomial("x_1", u));
  auto d1 = total_derivative(ring, ring.embed(parse_polynomial("x^2 - y^3", base)));
  CHECK(d1 == parse_polynomial("2*x_0*x_1 - 3*y_0^2*y_1", u));
  auto dd = total_derivative(ring, total_derivative(ring, parse_polynomial("x_0^2", u)));
  CHECK(dd == parse_polynomial("2*x_1^2 + 2*x_0*x_2", u));
  CHECK_THROWS_AS(total_derivative(ring, parse_polynomial("x_2", u)), ValidationError);
}

TEST_CASE("jet_ideal examples") {
  auto base = make_universe({"x", "y"});
  auto zero = jet_ideal(IdealPresentation(base), 3);
  CHECK(zero.is_zero());
  CHECK(krull_dimension(zero) == 8);

  auto cusp = jet_ideal(IdealPresentation(base, {parse_polynomial("x^2 - y^3", base)}), 1);
  auto u1 = cusp.universe();
  CHECK(cusp.generators() ==
        std::vector<Polynomial>{parse_polynomial("x_0^2 - y_0^3", u1), parse_polynomial("2*x_0*x_1 - 3*y_0^2*y_1", u1)});

  auto node = jet_ideal(IdealPresentation(base, {parse_polynomial("x*y", base)}), 2);
  auto u2 = node.universe();
  CHECK(node.generators() == std::vector<Polynomial>{parse_polynomial("x_0*y_0", u2),
                                                     parse_polynomial("x_1*y_0 + x_0*y_1", u2),
                                                     parse_polynomial("x_2*y_0 + 2*x_1*y_1 + x_0*y_2", u2)});
}

TEST_CASE("arc_substitution_check examples") {
  auto base = make_universe({"x", "y"});
  JetPoint line(2, 1);
  line.at(0, 1) = 1;
  line.at(1, 1) = 1;
  CHECK(arc_substitution_check(parse_polynomial("x*y", base), line));

  // x = t^3, y = t^2 in divided powers: a^(3) = 3!, a^(2) = 2!.
  JetPoint cusp(2, 5);
  cusp.at(0, 3) = 6;
  cusp.at(1, 2) = 2;
  auto f = parse_polynomial("x^2 - y^3", base);
  CHECK(arc_substitution_check(f, cusp));
  CHECK(jet_satisfies(jet_ideal(IdealPresentation(base, {f}), 5), cusp));
}

TEST_CASE("property: arc_substitution_check on random inputs") {
  std::mt19937_64 rng(61);
  auto base = make_universe({"x", "y", "z"});
  for (int trial = 0; trial < 100; ++trial) {
    unsigned m = static_cast<unsigned>(trial % 5);
    auto f = testing::random_polynomial(rng, base, 3, 3, 4);
    CHECK(arc_substitution_check(f, random_jet(rng, 3, m)));
  }
}

TEST_CASE("scale_jet and constant_jet") {
  std::mt19937_64 rng(67);
  auto a = random_jet(rng, 2, 3);
  CHECK(scale_jet(a, 1) == a);
  CHECK(scale_jet(a, 0) == constant_jet(a.base_point(), 3));
  CHECK(scale_jet(scale_jet(a, 2), 3) == scale_jet(a, 6));

  auto origin = constant_jet({0, 0}, 3);
  for (const auto& c : origin.coordinates()) CHECK(c == 0);

  auto base = make_universe({"x", "y"});
  auto diag = jet_ideal(IdealPresentation(base, {parse_polynomial("x - y", base)}), 2);
  CHECK(diag.generators().size() == 3);
  CHECK(jet_satisfies(diag, constant_jet({1, 1}, 2)));
}

TEST_CASE("arcs round trip through divided powers") {
  std::mt19937_64 rng(71);
  auto a = random_jet(rng, 3, 4);
  CHECK(JetPoint::from_arcs(a.arcs(), 4) == a);
  CHECK(a.truncated(2) == JetPoint::from_arcs(a.arcs(), 2));
}

TEST_CASE("property: D is a derivation") {
  std::mt19937_64 rng(73);
  auto base = make_universe({"x", "y"});
  JetRing ring(base, 3);
  auto u = ring.universe();
  for (int trial = 0; trial < 30; ++trial) {
    // Operands in the level-1 variables so their derivatives fit at level 3.
    auto f = testing::random_polynomial(rng, u, 4, 3, 4);
    auto g = testing::random_polynomial(rng, u, 4, 3, 4);
    CHECK(total_derivative(ring, f + g) == total_derivative(ring, f) + total_derivative(ring, g));
    CHECK(total_derivative(ring, f * g) == total_derivative(ring, f) * g + f * total_derivative(ring, g));
  }
}

TEST_CASE("property: jet ideals are compatible with truncation") {
  auto base = make_universe({"x", "y"});
  IdealPresentation i(base, {parse_polynomial("x^2 - y^3", base), parse_polynomial("x*y + y", base)});
  auto top = jet_ideal(i, 4);
  for (unsigned p = 0; p < 4; ++p) {
    auto low = jet_ideal(i, p);
    REQUIRE(low.generators().size() == (p + 1) * 2);
    for (std::size_t k = 0; k < low.generators().size(); ++k)
      CHECK(low.generators()[k].in(top.universe()) == top.generators()[k]);
  }
}

TEST_CASE("property: jets of smooth varieties have dimension (m+1)·dim") {
  auto base = make_universe({"x", "y"});
  IdealPresentation circle(base, {parse_polynomial("x^2 + y^2 - 1", base)});
  for (unsigned m = 0; m <= 4; ++m) {
    CHECK(krull_dimension(jet_ideal(IdealPresentation(base), m)) == static_cast<int>(2 * (m + 1)));
    CHECK(krull_dimension(jet_ideal(circle, m)) == static_cast<int>(m + 1));
  }
}

TEST_CASE("property: the torus action preserves jet spaces") {
  auto base = make_universe({"x", "y"});
  auto f = parse_polynomial("x^2 - y^3", base);
  auto jets = jet_ideal(IdealPresentation(base, {f}), 5);
  JetPoint cusp(2, 5);
  cusp.at(0, 3) = 6;
  cusp.at(1, 2) = 2;
  for (int c : {-2, 0, 1, 3}) CHECK(jet_satisfies(jets, scale_jet(cusp, c)));
  SeriesVector arcs{TruncatedSeries(std::vector<Rational>(6)), TruncatedSeries(std::vector<Rational>(6))};
  // y = (t + t^2)^2 = t^2 + 2t^3 + t^4, x = (t + t^2)^3 = t^3 + 3t^4 + 3t^5.
  arcs[1][2] = 1; arcs[1][3] = 2; arcs[1][4] = 1;
  arcs[0][3] = 1; arcs[0][4] = 3; arcs[0][5] = 3;
  auto a = JetPoint::from_arcs(arcs, 5);
  CHECK(jet_satisfies(jets, a));
  CHECK(jet_satisfies(jets, scale_jet(a, Rational(-1, 2))));
}
