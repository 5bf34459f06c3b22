#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jetarc/monomial.hpp"
#include "jetarc/polynomial.hpp"

namespace jetarc {

/// Resource limits for Buchberger runs.
struct Budget {
  /// Maximum number of S-pair reductions per basis computation.
  std::size_t max_pairs = 50000;
};

/// Finite generating set of an ideal. Zero generators are dropped and all
/// generators are re-tagged into a common universe.
class IdealPresentation {
 public:
  explicit IdealPresentation(UniversePtr universe, std::vector<Polynomial> generators = {});

  static IdealPresentation unit(UniversePtr universe);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  /// True if some generator is a nonzero constant (no Groebner work needed).
  bool has_unit_generator() const;

  IdealPresentation in(const UniversePtr& larger) const;
  void add(const Polynomial& p);
  friend IdealPresentation operator+(const IdealPresentation& a, const IdealPresentation& b);

 private:
  UniversePtr universe_;
  std::vector<Polynomial> generators_;
};

/// Reduced Groebner basis for a fixed term order. Elements are monic and
/// sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(UniversePtr universe, MonomialOrder order, std::vector<std::vector<Term>> ordered);

  const UniversePtr& universe() const { return universe_; }
  const MonomialOrder& order() const { return order_; }
  bool reduced() const { return reduced_; }
  bool is_unit() const;
  std::size_t size() const { return ordered_.size(); }

  /// Basis elements as canonical polynomials.
  std::vector<Polynomial> basis() const;
  const std::vector<Monomial>& leading_monomials() const { return leading_; }
  /// Terms of element i sorted by this basis's order.
  const std::vector<Term>& ordered_terms(std::size_t i) const { return ordered_[i]; }

  IdealPresentation ideal() const { return IdealPresentation(universe_, basis()); }

 private:
  UniversePtr universe_;
  MonomialOrder order_;
  std::vector<std::vector<Term>> ordered_;
  std::vector<Monomial> leading_;
  bool reduced_ = true;
};

GroebnerBasis groebner_basis(const IdealPresentation& ideal, const MonomialOrder& order = MonomialOrder::grevlex(),
                             const Budget& budget = {});

/// Remainder of f modulo G; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);
bool contains(const GroebnerBasis& basis, const Polynomial& f);

/// Dimension of the zero set over the algebraic closure; nullopt means the
/// set is empty (unit ideal).
using Dimension = std::optional<int>;

Dimension krull_dimension(const IdealPresentation& ideal, const Budget& budget = {});
/// Dimension read off the leading monomials of any Groebner basis.
Dimension krull_dimension(const GroebnerBasis& basis);
/// Size of a largest subset of the given variables containing the support of
/// no monomial in the list (the dimension of the monomial ideal's zero set
/// restricted to those variables).
int max_independent_set(std::uint64_t variables, const std::vector<Monomial>& monomials);

/// (I : J) = {f : fJ ⊆ I}.
IdealPresentation ideal_quotient(const IdealPresentation& i, const IdealPresentation& j, const Budget& budget = {});
/// (I : J^∞).
IdealPresentation saturation(const IdealPresentation& i, const IdealPresentation& j, const Budget& budget = {});
/// I ∩ Q[variables outside block].
IdealPresentation eliminate(const IdealPresentation& i, const std::vector<VarId>& block, const Budget& budget = {});
/// Groebner basis of the elimination ideal (block-order basis restricted to
/// elements free of the block).
GroebnerBasis elimination_basis(const IdealPresentation& i, const std::vector<VarId>& block,
                                const Budget& budget = {});
IdealPresentation intersect(const IdealPresentation& i, const IdealPresentation& j, const Budget& budget = {});

/// J ⊆ I.
bool ideal_contains(const IdealPresentation& i, const IdealPresentation& j, const Budget& budget = {});
bool ideal_equal(const IdealPresentation& i, const IdealPresentation& j, const Budget& budget = {});
/// f ∈ rad(I), via 1 ∈ I + (1 - T f).
bool radical_contains(const IdealPresentation& i, const Polynomial& f, const Budget& budget = {});

/// f / g when g divides f exactly; throws InvariantFailure otherwise.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// Universe with one fresh internal variable appended; returns its id.
std::pair<UniversePtr, VarId> with_tag_variable(const UniversePtr& universe);

}  // namespace jetarc
