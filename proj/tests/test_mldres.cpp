#include <random>

#include "doctest.h"
#include "jetarc/errors.hpp"
#include "jetarc/mldres.hpp"

using namespace jetarc;

namespace {

ResolutionData load(const std::string& name) { return load_resolution_data(std::string(JETARC_DATA_DIR) + "/" + name); }

ResolutionData with_weight(ResolutionData d, const char* q) {
  d.weights = {parse_rational(q)};
  return d;
}

ResolutionData single_divisor(const char* kappa, int alpha) {
  ResolutionData d;
  d.ambient_dim = 2;
  d.weights = {0};
  d.divisors.push_back({"E", parse_rational(kappa), 0, {alpha}, true, true});
  d.normalize();
  return d;
}

// A chain of in_W divisors with neighbouring faces plus one
// divisor meeting W through the last chain member.
ResolutionData random_resolution(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 4), kappa(0, 6), alpha(0, 4), z(0, 2), weight(0, 12), r(1, 3);
  ResolutionData d;
  d.ambient_dim = 2;
  d.index_r = r(rng);
  d.weights = {fraction(weight(rng), 12), fraction(weight(rng), 12)};
  int n = len(rng);
  for (int j = 0; j < n; ++j) {
    d.divisors.push_back({"E" + std::to_string(j), fraction(kappa(rng), d.index_r), z(rng), {alpha(rng), alpha(rng)},
                          true, true});
    if (j > 0) d.faces.insert((std::uint64_t{1} << j) | (std::uint64_t{1} << (j - 1)));
  }
  d.divisors.push_back({"C", 0, 0, {1 + alpha(rng) % 2, alpha(rng) % 2}, false, true});
  d.faces.insert((std::uint64_t{1} << n) | (std::uint64_t{1} << (n - 1)));
  d.normalize();
  return d;
}

}  // namespace

TEST_CASE("resolution data loading") {
  auto cusp = load("cusp_res.json");
  CHECK(cusp.divisors.size() == 4);
  CHECK(cusp.weights == std::vector<Rational>{Rational(5, 6)});
  CHECK(cusp.is_face(0b0101));
  CHECK(cusp.is_face(0b0010));
  CHECK_FALSE(cusp.is_face(0b0011));
  CHECK(resolution_from_json(to_json(cusp)).faces == cusp.faces);

  auto bad = to_json(cusp);
  bad["divisors"][0]["alpha"] = {2, 1};
  CHECK_THROWS_AS(resolution_from_json(bad), ValidationError);
  bad = to_json(cusp);
  bad["divisors"][0]["kappa"] = "1/2";
  CHECK_THROWS_AS(resolution_from_json(bad), ValidationError);
  bad = to_json(cusp);
  bad["divisors"][0]["meets_W"] = false;
  CHECK_THROWS_AS(resolution_from_json(bad), ValidationError);
  bad = to_json(cusp);
  bad["faces"] = {{"E1", "E9"}};
  CHECK_THROWS_AS(resolution_from_json(bad), ValidationError);
  CHECK_THROWS_AS(load("missing.json"), ValidationError);
}

TEST_CASE("mld_from_divisors examples") {
  auto cusp = load("cusp_res.json");
  auto at = mld_from_divisors(cusp);
  CHECK(at.value == MldValue(0));
  CHECK(cusp.divisors[at.witness].name == "E3");
  CHECK(mld_from_divisors(with_weight(cusp, "1")).value.is_minus_infinity());
  CHECK(mld_from_divisors(load("smooth_point_res.json")).value == MldValue(2));

  ResolutionData none = cusp;
  for (auto& e : none.divisors) e.in_w = false;
  CHECK_THROWS_AS(mld_from_divisors(none), ValidationError);
}

TEST_CASE("contact_codim_combinatorial examples") {
  CHECK(contact_codim_combinatorial(single_divisor("4", 6), {6}, 0) == Rational(5));
  auto cusp = load("cusp_res.json");
  CHECK(contact_codim_combinatorial(cusp, {6}, 0) == Rational(5));
  CHECK(contact_codim_combinatorial(cusp, {2}, 0) == Rational(2));
  CHECK(contact_codim_combinatorial(cusp, {7}, 0) == Rational(6));
  CHECK(contact_codim_combinatorial(cusp, {0}, 0) == std::nullopt);
  CHECK(contact_codim_combinatorial(cusp, {1}, 0) == std::nullopt);
  CHECK(contact_codim_combinatorial(load("quadric_cone_res.json"), {}, 1) == Rational(2));
  CHECK_THROWS_AS(contact_codim_combinatorial(cusp, {-1}, 0), ValidationError);
  CHECK_THROWS_AS(contact_codim_combinatorial(cusp, {1, 1}, 0), ValidationError);
}

TEST_CASE("mld_via_contact examples") {
  auto cusp = load("cusp_res.json");
  auto at = mld_via_contact(cusp);
  CHECK(at.value == MldValue(0));
  CHECK(at.w == std::vector<int>{6});
  CHECK(at.ell == 0);
  auto half = mld_via_contact(with_weight(cusp, "1/2"));
  CHECK(half.value == MldValue(1));
  CHECK(half.w == std::vector<int>{2});
  CHECK(mld_via_contact(with_weight(cusp, "1")).value.is_minus_infinity());
  auto smooth = load("smooth_point_res.json");
  CHECK(mld_via_contact(smooth).value == mld_from_divisors(smooth).value);
}

TEST_CASE("MldValue ordering") {
  CHECK(MldValue::minus_infinity() < MldValue(-100));
  CHECK_FALSE(MldValue::minus_infinity() < MldValue::minus_infinity());
  CHECK(MldValue(Rational(1, 3)) < MldValue(Rational(1, 2)));
  CHECK(MldValue::minus_infinity().to_string() == "-inf");
  CHECK(MldValue(Rational(5, 6)).to_string() == "5/6");
}

TEST_CASE("property: both mld routes agree on the corpus") {
  auto cusp = load("cusp_res.json");
  auto node = load("node_res.json");
  std::vector<ResolutionData> corpus{load("smooth_point_res.json"), load("quadric_cone_res.json")};
  for (const char* q : {"0", "1/2", "3/4", "5/6", "1", "3/2"}) corpus.push_back(with_weight(cusp, q));
  for (const char* q : {"1/2", "1", "2"}) corpus.push_back(with_weight(node, q));
  std::vector<std::string> expected{"2", "1", "2", "1", "1/2", "0", "-inf", "-inf", "1", "0", "-inf"};
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    CAPTURE(k);
    CHECK(mld_from_divisors(corpus[k]).value.to_string() == expected[k]);
    CHECK(mld_via_contact(corpus[k]).value == mld_from_divisors(corpus[k]).value);
  }
}

TEST_CASE("property: both mld routes agree on random data") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    auto d = random_resolution(rng);
    CAPTURE(to_json(d).dump());
    CHECK(mld_via_contact(d).value == mld_from_divisors(d).value);
  }
}

TEST_CASE("property: raising a weight lowers both mld values") {
  auto cusp = load("cusp_res.json");
  MldValue previous_div(100), previous_contact(100);
  for (int k = 0; k <= 8; ++k) {
    auto d = cusp;
    d.weights = {fraction(k, 6)};
    auto a = mld_from_divisors(d).value;
    auto b = mld_via_contact(d).value;
    CHECK_FALSE(previous_div < a);
    CHECK_FALSE(previous_contact < b);
    previous_div = a;
    previous_contact = b;
  }
}

TEST_CASE("property: contact codimension matches brute force over ν") {
  // Independent enumeration of ν ∈ [0, 12]^4 against the explicit cusp nerve.
  auto cusp = load("cusp_res.json");
  const int kappa[] = {1, 2, 4, 0}, alpha[] = {2, 3, 6, 1};
  auto is_face = [](int mask) {
    for (int f : {0b0001, 0b0010, 0b0100, 0b1000, 0b0101, 0b0110, 0b1100})
      if ((mask & ~f) == 0) return true;
    return mask == 0;
  };
  for (int w = 0; w <= 12; ++w) {
    std::optional<int> best;
    for (int a = 0; a <= 12; ++a)
      for (int b = 0; b <= 12; ++b)
        for (int c = 0; c <= 12; ++c)
          for (int e = 0; e <= 12; ++e) {
            int nu[] = {a, b, c, e};
            int sum = 0, cost = 0, mask = 0;
            for (int j = 0; j < 4; ++j) {
              sum += alpha[j] * nu[j];
              cost += (kappa[j] + 1) * nu[j];
              if (nu[j] > 0) mask |= 1 << j;
            }
            if (sum != w || !is_face(mask) || (mask & 0b0111) == 0) continue;
            if (!best || cost < *best) best = cost;
          }
    CAPTURE(w);
    auto got = contact_codim_combinatorial(cusp, {w}, 0);
    REQUIRE(got.has_value() == best.has_value());
    if (best) CHECK(*got == Rational(*best));
  }
}

TEST_CASE("property: contact codimension is subadditive along multiples") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    auto d = random_resolution(rng);
    for (std::size_t j = 0; j < d.divisors.size(); ++j) {
      if (!d.divisors[j].in_w) continue;
      std::vector<int> w = d.divisors[j].alpha;
      int ell = d.divisors[j].z;
      auto one = contact_codim_combinatorial(d, w, ell);
      REQUIRE(one.has_value());
      for (int k = 2; k <= 3; ++k) {
        std::vector<int> wk = w;
        for (int& x : wk) x *= k;
        auto many = contact_codim_combinatorial(d, wk, ell * k);
        REQUIRE(many.has_value());
        CHECK(*many <= *one * k);
      }
    }
  }
}

TEST_CASE("property: scaling r, z and l together") {
  std::mt19937_64 rng(21);
  std::vector<ResolutionData> corpus{load("quadric_cone_res.json")};
  for (int i = 0; i < 20; ++i) corpus.push_back(random_resolution(rng));
  for (const auto& base : corpus)
    for (int k = 2; k <= 3; ++k) {
      auto scaled = base;
      scaled.index_r *= k;
      for (auto& e : scaled.divisors) e.z *= k;
      scaled.normalize();
      for (int ell = 0; ell <= 3; ++ell)
        for (int w0 = 0; w0 <= 3; ++w0) {
          std::vector<int> w(base.weights.size(), w0);
          auto a = contact_codim_combinatorial(base, w, ell);
          auto b = contact_codim_combinatorial(scaled, w, ell * k);
          REQUIRE(a.has_value() == b.has_value());
          if (a) CHECK(*a - fraction(ell, base.index_r) == *b - fraction(ell * k, scaled.index_r));
        }
    }
}
