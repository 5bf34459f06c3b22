#pragma once

#include <cstdint>
#include <vector>

#include "jetarc/groebner.hpp"
#include "jetarc/polynomial.hpp"

namespace jetarc {

/// Closed subvariety X ⊂ A^N of expected pure dimension n.
class EmbeddedVariety {
 public:
  /// Throws ValidationError unless 0 ≤ n ≤ N and no generator is a unit.
  EmbeddedVariety(IdealPresentation ideal, int expected_dim);

  const IdealPresentation& ideal() const { return ideal_; }
  const UniversePtr& universe() const { return ideal_.universe(); }
  int ambient_dim() const { return static_cast<int>(ideal_.universe()->size()); }
  int expected_dim() const { return n_; }
  int codim() const { return ambient_dim() - n_; }

  /// Throws ValidationError unless krull_dimension(ideal) = n.
  void verify_dimension(const Budget& budget = {}) const;

 private:
  IdealPresentation ideal_;
  int n_;
};

/// Nonzero k×k minors of the Jacobian matrix (∂f_i/∂x_j) of the given
/// polynomials, rows and columns taken in lexicographic order.
std::vector<Polynomial> jacobian_minors(const std::vector<Polynomial>& f, const UniversePtr& universe, std::size_t k);

/// Codim-size minors of X's Jacobian matrix together with I_X.
IdealPresentation jacobian_ideal(const EmbeddedVariety& x);

/// Dimension of V(Jac_X) ⊂ X; nullopt when X is smooth.
Dimension singular_locus_dimension(const EmbeddedVariety& x, const Budget& budget = {});

/// M = V(F_1..F_c) with F_i = Σ_j a_ij f_j for integer a_ij.
struct CIReduction {
  std::vector<std::vector<Rational>> matrix;
  IdealPresentation ci_ideal;
  /// (I_M : I_X).
  IdealPresentation residue_ideal;
  std::uint64_t seed = 0;
  bool certified = false;
};

struct CIOptions {
  int coefficient_bound = 7;
  int max_attempts = 8;
  Budget budget;
};

/// Random combination certified by: dim M = n; (I_M : I_X) vanishes on no
/// component of X; the c-minors of (F_i) vanish on no component of X. Seeds
/// seed, seed+1, ... are tried in turn.
CIReduction generic_ci_reduction(const EmbeddedVariety& x, std::uint64_t seed, const CIOptions& options = {});

/// Every c-minor of the Jacobian of (F_i) lies in (I_M : I_X) + I_X.
bool residue_inclusion_check(const EmbeddedVariety& x, const CIReduction& r, const Budget& budget = {});

}  // namespace jetarc
