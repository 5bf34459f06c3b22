#pragma once

#include <random>
#include <string>
#include <vector>

#include "jetarc/polynomial.hpp"
#include "jetarc/series.hpp"

namespace jetarc::testing {

inline Rational random_rational(std::mt19937_64& rng, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// Random polynomial of total degree ≤ max_degree in the first nvars variables.
inline Polynomial random_polynomial(std::mt19937_64& rng, const UniversePtr& u, std::size_t nvars,
                                    unsigned max_degree, std::size_t max_terms = 5) {
  std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::vector<Term> terms;
  std::size_t count = nterms(rng);
  for (std::size_t k = 0; k < count; ++k) {
    Monomial m;
    unsigned d = deg(rng);
    for (unsigned e = 0; e < d; ++e) {
      VarId v = var(rng);
      m.set_exponent(v, m.exponent(v) + 1);
    }
    terms.push_back(Term{m, random_rational(rng)});
  }
  return Polynomial::from_terms(u, std::move(terms));
}

inline TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order) {
  std::vector<Rational> c(order);
  for (auto& x : c) x = random_rational(rng, 3);
  return TruncatedSeries(std::move(c));
}

}  // namespace jetarc::testing
