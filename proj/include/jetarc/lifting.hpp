#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "jetarc/polynomial.hpp"
#include "jetarc/series.hpp"

namespace jetarc {

/// r×N matrix of ∂F_i/∂x_j evaluated at u, truncated at the common
/// truncation of u.
SeriesMatrix jacobian_at(const std::vector<Polynomial>& f, const SeriesVector& u);

/// Lexicographically first r-subset of columns whose minor has order exactly
/// e. Throws ValidationError when none exists.
std::vector<std::size_t> select_columns(const SeriesMatrix& jacobian, std::size_t e);

/// Whether the m-jet u (truncation m+1) of the complete intersection V(F)
/// lifts to an (m+e)-jet, where e is the order of the r-minors of the
/// Jacobian at u. Requires m ≥ e, F(u) ≡ 0 mod t^(m+1) and the minor order
/// to equal e.
bool liftable(const std::vector<Polynomial>& f, const SeriesVector& u, std::size_t m, std::size_t e);

/// The affine conditions A·v = b on v ∈ Q^N for which u + t^(m+1)·v stays
/// liftable at level m+1. A has full rank r on liftable input.
struct LiftSystem {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<std::size_t> bound;
  std::vector<std::size_t> free;
};

LiftSystem lift_system(const std::vector<Polynomial>& f, const SeriesVector& u, std::size_t m, std::size_t e);

/// Value of the free coordinate with the given index; default all zero.
using FreeChoice = std::function<Rational(std::size_t coordinate)>;

/// w = u + t^(m+1)·v with truncation m+2, F(w) ≡ 0 mod t^(m+2), and w
/// again liftable. Throws ValidationError when u is not liftable.
SeriesVector lift_step(const std::vector<Polynomial>& f, const SeriesVector& u, std::size_t m, std::size_t e,
                       const FreeChoice& free_choice = {});

/// U·A·V = (diag(t^a_1, ..., t^a_k) | 0) over Q[t]/(t^K), k = min(rows, cols),
/// with a_1 ≤ ... ≤ a_k ≤ K (K standing for the zero class).
struct SmithForm {
  std::vector<std::size_t> orders;
  SeriesMatrix u;
  SeriesMatrix v;
};

SmithForm smith_form(const SeriesMatrix& a);

/// Whether the p-jet u (truncation p+1) of V(F) is the truncation of an
/// m-jet. Requires 2p ≥ m ≥ p+e, F(u) ≡ 0 mod t^(p+1) and r-minor order e.
bool in_image(const std::vector<Polynomial>& f, const SeriesVector& u, std::size_t m, std::size_t p, std::size_t e);

}  // namespace jetarc
