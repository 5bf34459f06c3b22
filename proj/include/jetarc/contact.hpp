#pragma once

#include <optional>
#include <vector>

#include "jetarc/groebner.hpp"
#include "jetarc/jets.hpp"
#include "jetarc/singloci.hpp"

namespace jetarc {

/// V(closed) minus the union of the V(J_k): each witness J_k asks that not
/// all of its generators vanish.
struct ConstructibleLocus {
  JetRing ring;
  IdealPresentation closed;
  std::vector<IdealPresentation> open_witnesses;

  explicit ConstructibleLocus(JetRing r) : ring(std::move(r)), closed(ring.universe()) {}

  /// Conjunction of both loci; other must live over the same ring.
  void intersect_with(const ConstructibleLocus& other);
};

enum class ContactMode { AtLeast, Exactly };

/// Jets γ with ord_γ(Z) ≥ e or = e, at a fixed level.
struct ContactSpec {
  IdealPresentation subscheme;
  unsigned order = 0;
  ContactMode mode = ContactMode::AtLeast;
  unsigned level = 0;
};

/// Adds the contact conditions of Z to a locus over ring. Requires
/// e ≤ level+1 (at least) or e ≤ level (exactly).
void add_contact_conditions(ConstructibleLocus& locus, const IdealPresentation& subscheme, unsigned order,
                            ContactMode mode);

ConstructibleLocus contact_locus(const ContactSpec& spec, const std::optional<IdealPresentation>& ambient = {});

/// Dimension of the locus; nullopt when empty.
Dimension constructible_dimension(const ConstructibleLocus& locus, const Budget& budget = {});

/// Dimension of the closure of the locus's image in the level-p jets.
Dimension image_dimension(const ConstructibleLocus& locus, unsigned p, const Budget& budget = {});

/// Codimension of ψ_m(Cont^e(Jac_X)) in the level-m jets, realized as the
/// projection of the level-(m+e) contact locus. nullopt means the cylinder
/// is empty. With check_stability the value is recomputed at m+1 and a
/// disagreement raises InvariantFailure.
std::optional<int> cylinder_codim(const EmbeddedVariety& x, unsigned jac_order, unsigned level,
                                  bool check_stability = true, const Budget& budget = {});

/// Level-m jets of X over a fixed level-p jet γ.
ConstructibleLocus truncation_fiber(const IdealPresentation& ideal, const JetPoint& gamma, unsigned level);

/// e + (m-p)·n; requires 2p ≥ m ≥ e + p.
int fiber_dim_formula(int e, int m, int p, int n);

struct ChangeOfVariableReport {
  std::optional<int> direct_codim;
  /// Codimension of the pulled-back locus with ord(det Jac_f) = e, indexed by e.
  std::vector<std::optional<int>> pulled_back_codim;
  std::optional<int> transformed_min;
  std::optional<unsigned> argmin;
  bool agree = false;
};

/// Compares codim of B (an intersection of contact loci in the target) with
/// min_e codim(f^{-1}(B) ∩ {ord det Jac_f = e}) + e over e ≤ e_max. The map
/// sends target variable k to map[k], a polynomial in the source variables.
ChangeOfVariableReport change_of_variable_probe(const std::vector<Polynomial>& map, const UniversePtr& source,
                                                const std::vector<ContactSpec>& target_loci, unsigned e_max,
                                                unsigned level, const Budget& budget = {});

}  // namespace jetarc
