#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jetarc/contact.hpp"
#include "jetarc/mldres.hpp"
#include "jetarc/singloci.hpp"

namespace jetarc {

struct WeightedIdeal {
  IdealPresentation ideal;
  Rational q;
};

/// (X, Σ q_i Y_i) with W ⊂ X. An unset variety means X is the whole affine
/// space over universe; an unset jr means J_r is the unit ideal.
struct PairSpec {
  UniversePtr universe;
  std::optional<EmbeddedVariety> variety;
  std::vector<WeightedIdeal> y;
  IdealPresentation w;
  std::optional<IdealPresentation> jr;
  int index_r = 1;

  static PairSpec smooth(UniversePtr universe, std::vector<WeightedIdeal> y, IdealPresentation w);
  int dimension() const;
  bool is_smooth_ambient() const { return !variety.has_value(); }
  /// Throws ValidationError on negative weights, r < 1, mismatched universes
  /// or a W that is not a proper closed subset of X.
  void validate(const Budget& budget = {}) const;
};

struct SearchBounds {
  int w_max = 0;
  int m_max = 0;
  int e_max = 0;
  int eprime_max = 0;
  /// Evaluates every admissible level up to m_max and requires the value to
  /// be independent of m.
  bool all_levels = false;
  Budget budget;

  /// Throws ValidationError unless m_max ≥ max(2·e_max, e_max + eprime_max,
  /// e_max + w_max) and all bounds are nonnegative.
  void validate() const;
};

/// One cell of the scan: contact orders w along Y, Jacobian order e, J_r
/// order e′, jet level m.
struct JetCell {
  std::vector<int> w;
  int e = 0;
  int eprime = 0;
  int m = 0;
};

enum class Provenance { Interior, UpperBoundOnly };

struct JetMld {
  MldValue value;
  Provenance provenance = Provenance::Interior;
  JetCell witness;
  int cells = 0;
};

/// Level-m jets of X with ord Y_i ≥ w_i, ord Jac_X = e, ord J_r = e′ and,
/// when with_w, ord W ≥ 1.
ConstructibleLocus pair_locus(const PairSpec& pair, const JetCell& cell, bool with_w = true);

/// (m+1)·dim X + e′/r − Σ q_i w_i − dim(pair_locus); nullopt for an empty cell.
std::optional<Rational> cell_value(const PairSpec& pair, const JetCell& cell, bool with_w, const Budget& budget = {});

/// Minimum of cell_value over the bounded grid, each cell at its least
/// admissible level m = max(2e, e + e′, e + w_i). A negative minimum is −∞.
/// UpperBoundOnly marks a minimizer with some w_i = w_max, e = e_max or
/// e′ = eprime_max among the free directions.
JetMld mld_jet_estimate(const PairSpec& pair, const SearchBounds& bounds);

struct LcReport {
  bool log_canonical = true;
  std::optional<JetCell> violation;
  /// (m+1)·dim X − dim of the violating level-m locus, and Σ q_i w_i − e′/r.
  Rational codim = 0;
  Rational threshold = 0;
};

/// Scans the bounded grid without the W condition for a cell with
/// codim < Σ q_i w_i − e′/r; log canonical within bounds when none exists.
LcReport lc_check(const PairSpec& pair, const SearchBounds& bounds);

struct IoaReport {
  JetMld left;
  JetMld right;
  bool agree = false;
};

/// mld(W; X, Y|_X) against mld(W; A^N, c·X + Y) for a normal complete
/// intersection X of codimension c. Refuses presentations with more than c
/// generators and X with singular locus of codimension < 2 in X.
IoaReport ioa_check(const EmbeddedVariety& x, const std::vector<WeightedIdeal>& y, const IdealPresentation& w,
                    const SearchBounds& bounds);

/// Reads {vars, variety: {gens, expected_dim}?, Y: [{gens, q}], W: [gens],
/// jr: [gens]?, r, bounds: {w_max, m_max, e_max, eprime_max}?}.
struct PairFile {
  PairSpec pair;
  std::optional<SearchBounds> bounds;
};

PairFile pair_from_json(const nlohmann::json& j);
PairFile load_pair(const std::string& path);

}  // namespace jetarc
