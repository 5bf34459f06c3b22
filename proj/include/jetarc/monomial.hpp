#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace jetarc {

using VarId = std::size_t;

/// Hard cap on the size of a variable universe. Jet rings at desk scale
/// ((m+1)·n plus a few tag variables) stay well below it.
inline constexpr std::size_t kMaxVariables = 64;

/// Exponent vector with a cached total degree and a support bitmask.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(VarId v, unsigned exponent = 1);

  unsigned exponent(VarId v) const { return exps_[v]; }
  void set_exponent(VarId v, unsigned exponent);
  unsigned degree() const { return degree_; }
  std::uint64_t support() const { return support_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const { return (support_ & other.support_) == 0; }

  /// Exact quotient; the caller guarantees divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.support_ == b.support_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
  std::uint64_t support_ = 0;
};

/// Graded reverse lexicographic comparison with x_0 > x_1 > ... ;
/// returns -1, 0 or 1.
int grevlex_compare(const Monomial& a, const Monomial& b);
int lex_compare(const Monomial& a, const Monomial& b);

/// A term order. Block orders put every monomial involving the eliminated
/// block above every monomial free of it, so a Groebner basis for the block
/// order restricts to a basis of the elimination ideal.
class MonomialOrder {
 public:
  enum class Kind { GradedReverseLex, Lex, Block, Weighted };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::GradedReverseLex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  static MonomialOrder block(const std::vector<VarId>& eliminated, Kind inner = Kind::GradedReverseLex,
                             Kind outer = Kind::GradedReverseLex);

  /// Product of grevlex orders on the given blocks, earlier blocks more
  /// significant; variables in no block form a final block.
  static MonomialOrder product(const std::vector<std::vector<VarId>>& blocks);

  /// Positive integer weights, compared first; ties broken by grevlex.
  static MonomialOrder weighted(std::vector<unsigned> weights);

  Kind kind() const { return kind_; }
  /// Weighted degree for weighted orders, total degree otherwise.
  unsigned degree(const Monomial& m) const;
  /// Mask of the most significant block (the eliminated variables).
  std::uint64_t block_mask() const { return block_mask_; }

  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  explicit MonomialOrder(Kind kind) : kind_(kind) {}

  Kind kind_;
  Kind inner_ = Kind::GradedReverseLex;
  Kind outer_ = Kind::GradedReverseLex;
  std::uint64_t block_mask_ = 0;
  std::shared_ptr<const std::vector<unsigned>> weights_;
  // Further grevlex blocks after block_mask_ (product orders only).
  std::vector<std::uint64_t> tail_blocks_;
};

}  // namespace jetarc
