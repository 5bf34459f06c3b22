#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jetarc/monomial.hpp"
#include "jetarc/rational.hpp"

namespace jetarc {

/// Ordered list of distinct variable names; a variable's id is its position.
/// Extending a universe appends names and keeps every existing id.
class VariableUniverse {
 public:
  explicit VariableUniverse(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(VarId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VarId> find(std::string_view name) const;

  /// Throws ValidationError for an unknown name.
  VarId id(std::string_view name) const;

  std::shared_ptr<const VariableUniverse> extended(const std::vector<std::string>& more) const;

  /// True if this universe's names are a prefix of other's.
  bool is_prefix_of(const VariableUniverse& other) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VarId> index_;
};

using UniversePtr = std::shared_ptr<const VariableUniverse>;

UniversePtr make_universe(std::vector<std::string> names);

/// The larger of two prefix-compatible universes; throws ValidationError on
/// a mismatch.
UniversePtr common_universe(const UniversePtr& a, const UniversePtr& b);

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Sparse multivariate polynomial over Q. Terms are kept strictly decreasing
/// in grevlex with no zero coefficients, so structural equality is ideal
/// equality of elements.
class Polynomial {
 public:
  explicit Polynomial(UniversePtr universe);

  static Polynomial constant(UniversePtr universe, const Rational& c);
  static Polynomial variable(UniversePtr universe, VarId v);
  static Polynomial monomial(UniversePtr universe, const Monomial& m, const Rational& c);
  /// Collects like terms, drops zeros and sorts.
  static Polynomial from_terms(UniversePtr universe, std::vector<Term> terms);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  Rational constant_term() const;
  unsigned total_degree() const;
  /// Bitmask of the variables that occur.
  std::uint64_t support() const;

  /// Re-tags into a universe extending this one (ids unchanged).
  Polynomial in(const UniversePtr& larger) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned exponent) const;
  std::string to_string() const;

 private:
  UniversePtr universe_;
  std::vector<Term> terms_;
};

/// Parses the expression grammar
///   expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
///   factor := base ('^' posint)? ; base := rational | identifier | '(' expr ')'
/// with an optional sign in front of an expression. Errors carry the
/// character position.
Polynomial parse_polynomial(std::string_view text, const UniversePtr& universe);

Polynomial partial_derivative(const Polynomial& f, VarId v);

/// Image of f under the ring homomorphism sending each variable to its
/// assigned polynomial. All images must live in prefix-compatible universes;
/// the result lives in the largest of them.
Polynomial substitute(const Polynomial& f, const std::map<VarId, Polynomial>& assignment);

/// Evaluates f at rational values for every occurring variable.
Rational evaluate(const Polynomial& f, const std::vector<Rational>& point);

}  // namespace jetarc
