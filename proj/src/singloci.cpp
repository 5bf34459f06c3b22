#include "jetarc/singloci.hpp"

#include <random>

#include "jetarc/detail/combinatorics.hpp"
#include "jetarc/errors.hpp"

namespace jetarc {

namespace {

bool below(const Dimension& d, int n) { return !d.has_value() || *d < n; }

}  // namespace

EmbeddedVariety::EmbeddedVariety(IdealPresentation ideal, int expected_dim)
    : ideal_(std::move(ideal)), n_(expected_dim) {
  if (n_ < 0 || n_ > ambient_dim())
    throw ValidationError("expected dimension " + std::to_string(n_) + " outside [0, " +
                          std::to_string(ambient_dim()) + "]");
  if (ideal_.has_unit_generator()) throw ValidationError("ideal of the variety is the unit ideal");
}

void EmbeddedVariety::verify_dimension(const Budget& budget) const {
  auto d = krull_dimension(ideal_, budget);
  if (d != n_)
    throw ValidationError("variety has dimension " + (d ? std::to_string(*d) : std::string("empty")) +
                          ", expected " + std::to_string(n_));
}

std::vector<Polynomial> jacobian_minors(const std::vector<Polynomial>& f, const UniversePtr& universe, std::size_t k) {
  std::size_t n = universe->size();
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& fi : f) {
    std::vector<Polynomial> row;
    for (VarId v = 0; v < n; ++v) row.push_back(partial_derivative(fi.in(universe), v));
    jac.push_back(std::move(row));
  }
  std::vector<Polynomial> out;
  Polynomial zero(universe), one = Polynomial::constant(universe, 1);
  detail::for_each_subset(jac.size(), k, [&](const std::vector<std::size_t>& rows) {
    detail::for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
      auto det = detail::laplace_determinant<Polynomial>(
          k, [&](std::size_t i, std::size_t j) { return jac[rows[i]][cols[j]]; }, zero, one);
      if (!det.is_zero()) out.push_back(std::move(det));
      return true;
    });
    return true;
  });
  return out;
}

IdealPresentation jacobian_ideal(const EmbeddedVariety& x) {
  IdealPresentation out = x.ideal();
  for (auto& m : jacobian_minors(x.ideal().generators(), x.universe(), static_cast<std::size_t>(x.codim())))
    out.add(m);
  return out;
}

Dimension singular_locus_dimension(const EmbeddedVariety& x, const Budget& budget) {
  return krull_dimension(jacobian_ideal(x), budget);
}

CIReduction generic_ci_reduction(const EmbeddedVariety& x, std::uint64_t seed, const CIOptions& options) {
  const auto& f = x.ideal().generators();
  auto c = static_cast<std::size_t>(x.codim());
  if (f.size() < c)
    throw ValidationError("need at least " + std::to_string(c) + " generators for a complete intersection, got " +
                          std::to_string(f.size()));
  const auto& u = x.universe();
  int n = x.expected_dim();
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    CIReduction r{{}, IdealPresentation(u), IdealPresentation::unit(u), seed + static_cast<std::uint64_t>(attempt),
                  false};
    std::mt19937_64 rng(r.seed);
    std::uniform_int_distribution<int> coeff(-options.coefficient_bound, options.coefficient_bound);
    std::vector<Polynomial> fs;
    for (std::size_t i = 0; i < c; ++i) {
      std::vector<Rational> row;
      Polynomial fi(u);
      for (const auto& fj : f) {
        row.emplace_back(coeff(rng));
        fi += fj * row.back();
      }
      r.matrix.push_back(std::move(row));
      fs.push_back(std::move(fi));
    }
    r.ci_ideal = IdealPresentation(u, fs);
    if (krull_dimension(r.ci_ideal, options.budget) != n) continue;
    r.residue_ideal = ideal_quotient(r.ci_ideal, x.ideal(), options.budget);
    if (!below(krull_dimension(x.ideal() + r.residue_ideal, options.budget), n)) continue;
    IdealPresentation minors(u, jacobian_minors(fs, u, c));
    if (c > 0 && !below(krull_dimension(x.ideal() + minors, options.budget), n)) continue;
    r.certified = true;
    return r;
  }
  throw InvariantFailure("complete-intersection certification failed after " + std::to_string(options.max_attempts) +
                         " attempts; widen the coefficient range");
}

bool residue_inclusion_check(const EmbeddedVariety& x, const CIReduction& r, const Budget& budget) {
  auto g = groebner_basis(r.residue_ideal + x.ideal(), MonomialOrder::grevlex(), budget);
  for (const auto& m :
       jacobian_minors(r.ci_ideal.generators(), x.universe(), static_cast<std::size_t>(x.codim())))
    if (!contains(g, m)) return false;
  return true;
}

}  // namespace jetarc
