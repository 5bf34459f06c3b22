#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "jetarc/rational.hpp"

namespace jetarc {

/// A rational number or −∞.
class MldValue {
 public:
  MldValue(Rational value) : value_(std::move(value)) {}
  static MldValue minus_infinity() { return MldValue(); }

  bool is_minus_infinity() const { return !value_.has_value(); }
  /// Throws std::bad_optional_access on −∞.
  const Rational& value() const { return value_.value(); }
  std::string to_string() const;

  friend bool operator==(const MldValue& a, const MldValue& b) { return a.value_ == b.value_; }
  friend bool operator<(const MldValue& a, const MldValue& b);

 private:
  MldValue() = default;
  std::optional<Rational> value_;
};

struct DivisorRecord {
  std::string name;
  Rational kappa;
  int z = 0;
  std::vector<int> alpha;
  bool in_w = false;
  bool meets_w = false;
};

/// Numerical data of a log resolution f: X' → X of (X, Σ q_i Y_i) with rK_X
/// Cartier. faces holds the nerve as divisor-index bitmasks, closed under
/// subsets and containing every singleton.
struct ResolutionData {
  int ambient_dim = 0;
  int index_r = 1;
  std::vector<Rational> weights;
  std::vector<DivisorRecord> divisors;
  std::set<std::uint64_t> faces;

  /// Closes faces under subsets, adds singletons and checks every invariant;
  /// throws ValidationError.
  void normalize();
  bool is_face(std::uint64_t support) const { return support == 0 || faces.count(support) > 0; }
  std::size_t index_of(const std::string& name) const;
  /// κ_j + 1 − Σ_i q_i α_ij.
  Rational log_discrepancy(std::size_t j) const;
};

/// Reads {ambient_dim, r, weights[], divisors[{name, kappa, z, alpha[], in_W,
/// meets_W}], faces[[names]]}; rationals may be numbers or "a/b" strings.
ResolutionData resolution_from_json(const nlohmann::json& j);
ResolutionData load_resolution_data(const std::string& path);
nlohmann::json to_json(const ResolutionData& data);

struct DivisorMld {
  MldValue value;
  /// Minimizing in_W divisor, or the divisor with negative log discrepancy.
  std::size_t witness = 0;
};

/// Reads mld(W; X, Y) off the divisors: −∞ if a divisor meeting W has
/// negative log discrepancy, else the minimum over divisors inside W.
DivisorMld mld_from_divisors(const ResolutionData& data);

/// ℓ/r + min Σ_j (κ_j+1)ν_j over ν ∈ N^d with Σ_j α_ij ν_j = w_i, Σ_j z_j ν_j = ℓ,
/// support a face, and ν_j ≥ 1 for some in_W divisor. nullopt when no ν is
/// admissible.
std::optional<Rational> contact_codim_combinatorial(const ResolutionData& data, const std::vector<int>& w, int ell);

struct ContactMld {
  MldValue value;
  std::vector<int> w;
  int ell = 0;
};

/// Minimum of codim − ℓ/r − Σ q_i w_i over (w, ℓ) = (α_·j, z_j) for in_W
/// divisors, over the contact data of admissible ν with Σ ν_j ≤ nu_max, and
/// over rays ν + N·e_k through divisors of negative log discrepancy. A
/// negative candidate yields −∞ once doubling (w, ℓ) is seen to decrease the
/// value.
ContactMld mld_via_contact(const ResolutionData& data, int nu_max = 3);

}  // namespace jetarc
