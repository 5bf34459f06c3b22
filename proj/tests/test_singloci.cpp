#include "doctest.h"
#include "jetarc/errors.hpp"
#include "jetarc/singloci.hpp"

using namespace jetarc;

namespace {

EmbeddedVariety variety(const UniversePtr& u, std::initializer_list<const char*> gens, int n) {
  IdealPresentation i(u);
  for (const char* g : gens) i.add(parse_polynomial(g, u));
  return EmbeddedVariety(i, n);
}

IdealPresentation ideal(const UniversePtr& u, std::initializer_list<const char*> gens) {
  IdealPresentation i(u);
  for (const char* g : gens) i.add(parse_polynomial(g, u));
  return i;
}

}  // namespace

TEST_CASE("jacobian_ideal examples") {
  auto u = make_universe({"x", "y"});
  auto cusp = variety(u, {"x^2 - y^3"}, 1);
  CHECK(jacobian_minors(cusp.ideal().generators(), u, 1) ==
        std::vector<Polynomial>{parse_polynomial("2*x", u), parse_polynomial("-3*y^2", u)});
  CHECK(ideal_equal(jacobian_ideal(cusp), ideal(u, {"x", "y^2"})));

  CHECK(ideal_equal(jacobian_ideal(variety(u, {"y"}, 1)), IdealPresentation::unit(u)));
  CHECK(ideal_equal(jacobian_ideal(variety(u, {"x*y"}, 1)), ideal(u, {"x", "y"})));
}

TEST_CASE("singular loci on the corpus") {
  auto u = make_universe({"x", "y"});
  CHECK(singular_locus_dimension(variety(u, {"y"}, 1)) == std::nullopt);
  CHECK(singular_locus_dimension(variety(u, {"x^2 + y^2 - 1"}, 1)) == std::nullopt);
  CHECK(singular_locus_dimension(variety(u, {"x^2 - y^3"}, 1)) == 0);
  CHECK(singular_locus_dimension(variety(u, {"x*y"}, 1)) == 0);
  auto v = make_universe({"x", "y", "z"});
  // Whitney umbrella: singular along the z-axis.
  CHECK(singular_locus_dimension(variety(v, {"x^2 - y^2*z"}, 2)) == 1);
}

TEST_CASE("EmbeddedVariety validation") {
  auto u = make_universe({"x", "y"});
  CHECK_THROWS_AS(variety(u, {"x"}, 3), ValidationError);
  CHECK_THROWS_AS(variety(u, {"1"}, 1), ValidationError);
  CHECK_NOTHROW(variety(u, {"x^2 - y^3"}, 1).verify_dimension());
  CHECK_THROWS_AS(variety(u, {"x^2 - y^3"}, 0).verify_dimension(), ValidationError);
}

TEST_CASE("generic_ci_reduction of a hypersurface") {
  auto u = make_universe({"x", "y"});
  auto cusp = variety(u, {"x^2 - y^3"}, 1);
  auto r = generic_ci_reduction(cusp, 1);
  CHECK(r.certified);
  REQUIRE(r.matrix.size() == 1);
  CHECK(r.matrix[0][0] != 0);
  CHECK(ideal_equal(r.ci_ideal, cusp.ideal()));
  CHECK(ideal_equal(r.residue_ideal, IdealPresentation::unit(u)));
  CHECK(residue_inclusion_check(cusp, r));
}

TEST_CASE("generic_ci_reduction of the cone over the twisted cubic") {
  auto u = make_universe({"x", "y", "z", "w"});
  auto cone = variety(u, {"x*z - y^2", "x*w - y*z", "y*w - z^2"}, 2);
  cone.verify_dimension();
  for (std::uint64_t seed : {1, 2, 3}) {
    auto r = generic_ci_reduction(cone, seed);
    CHECK(r.certified);
    CHECK(krull_dimension(r.ci_ideal) == 2);
    CHECK(ideal_contains(cone.ideal(), r.ci_ideal));
    // The residual component is a plane distinct from X.
    CHECK(krull_dimension(r.residue_ideal) == 2);
    CHECK_FALSE(ideal_contains(r.residue_ideal, cone.ideal()));
    // V(I_M) = X ∪ V(residue).
    auto meet = intersect(cone.ideal(), r.residue_ideal);
    CHECK(ideal_contains(meet, r.ci_ideal));
    for (const auto& g : meet.generators()) CHECK(radical_contains(r.ci_ideal, g));
    CHECK(residue_inclusion_check(cone, r));
  }
}

TEST_CASE("generic_ci_reduction rejects too few generators") {
  auto u = make_universe({"x", "y", "z"});
  CHECK_THROWS_AS(generic_ci_reduction(variety(u, {"x"}, 1), 1), ValidationError);
}

TEST_CASE("property: certified reductions on the corpus") {
  auto u = make_universe({"x", "y", "z"});
  std::vector<EmbeddedVariety> corpus{variety(u, {"x^2 - y^2*z"}, 2), variety(u, {"x*y", "y*z", "x*z"}, 1),
                                      variety(u, {"x", "y^2 - z^3"}, 1), variety(u, {"x*y", "z"}, 1)};
  for (const auto& x : corpus) {
    auto r = generic_ci_reduction(x, 11);
    CHECK(r.certified);
    CHECK(ideal_contains(x.ideal(), r.ci_ideal));
    CHECK(krull_dimension(r.ci_ideal) == x.expected_dim());
    CHECK(residue_inclusion_check(x, r));
  }
}
