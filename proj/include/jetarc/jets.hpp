#pragma once

#include <cstddef>
#include <vector>

#include "jetarc/groebner.hpp"
#include "jetarc/polynomial.hpp"
#include "jetarc/series.hpp"

namespace jetarc {

/// Polynomial ring of the level-m jets of an n-dimensional affine space.
/// Variables are stored order-major: x_i^(j) has id j·n + i, so the level-p
/// ring is a prefix and x_i^(0) has the id of the base variable x_i.
class JetRing {
 public:
  /// Throws ValidationError if (m+1)·n exceeds the variable capacity.
  JetRing(UniversePtr base, unsigned level);

  const UniversePtr& base() const { return base_; }
  const UniversePtr& universe() const { return universe_; }
  unsigned level() const { return level_; }
  std::size_t base_size() const { return base_->size(); }

  VarId variable(std::size_t i, unsigned j) const { return static_cast<VarId>(j * base_size() + i); }
  unsigned order_of(VarId v) const { return static_cast<unsigned>(v / base_size()); }
  std::size_t base_index(VarId v) const { return v % base_size(); }
  /// Ids of all variables of order > p.
  std::vector<VarId> variables_above(unsigned p) const;

  JetRing at_level(unsigned p) const { return JetRing(base_, p); }

  /// Re-tags a base polynomial as a polynomial in the order-0 variables.
  Polynomial embed(const Polynomial& f) const;

 private:
  UniversePtr base_;
  unsigned level_;
  UniversePtr universe_;
};

/// k-point of the jet space, in divided-power coordinates: the arc is
/// Σ_j a_i^(j) t^j / j!.
class JetPoint {
 public:
  JetPoint(std::size_t base_size, unsigned level)
      : n_(base_size), level_(level), coords_((level + 1) * base_size) {}

  std::size_t base_size() const { return n_; }
  unsigned level() const { return level_; }
  const Rational& at(std::size_t i, unsigned j) const { return coords_[j * n_ + i]; }
  Rational& at(std::size_t i, unsigned j) { return coords_[j * n_ + i]; }
  /// Coordinates indexed by JetRing variable id.
  const std::vector<Rational>& coordinates() const { return coords_; }
  std::vector<Rational> base_point() const;

  /// Raw series coefficients of each arc, truncated at t^(level+1).
  SeriesVector arcs() const;
  static JetPoint from_arcs(const SeriesVector& arcs, unsigned level);

  JetPoint truncated(unsigned p) const;

  friend bool operator==(const JetPoint& a, const JetPoint& b) = default;

 private:
  std::size_t n_;
  unsigned level_;
  std::vector<Rational> coords_;
};

/// D(f) for the derivation with D(x_i^(j)) = x_i^(j+1). f must live in a
/// prefix of ring's universe and involve only variables of order < level.
Polynomial total_derivative(const JetRing& ring, const Polynomial& f);

/// f^(0), ..., f^(m) for a base polynomial f.
std::vector<Polynomial> jet_equations(const JetRing& ring, const Polynomial& f);

/// (f_i^(j)) listed level by level, so the level-p generators are a prefix.
IdealPresentation jet_ideal(const IdealPresentation& ideal, unsigned level);

/// Compares the series expansion of f along the arc of a with f^(j)(a)/j!.
bool arc_substitution_check(const Polynomial& f, const JetPoint& a);

/// Action of t ↦ ct: a^(j) ↦ c^j a^(j).
JetPoint scale_jet(const JetPoint& a, const Rational& c);

JetPoint constant_jet(const std::vector<Rational>& point, unsigned level);

/// Whether a lies on every generator of the given jet ideal.
bool jet_satisfies(const IdealPresentation& jet_ideal, const JetPoint& a);

}  // namespace jetarc
