#include "jetarc/contact.hpp"

#include <algorithm>

#include "jetarc/errors.hpp"

namespace jetarc {

namespace {

void check_ring(const JetRing& ring, const UniversePtr& base) {
  if (base != ring.base() && !base->is_prefix_of(*ring.base()))
    throw ValidationError("subscheme does not live over the jet ring's base variables");
}

// Every tuple (g_1, ..., g_K) with g_k a generator of witness k, as products.
std::vector<Polynomial> witness_products(const ConstructibleLocus& locus) {
  std::vector<Polynomial> acc{Polynomial::constant(locus.ring.universe(), 1)};
  for (const auto& w : locus.open_witnesses) {
    std::vector<Polynomial> next;
    for (const auto& a : acc)
      for (const auto& g : w.generators()) next.push_back(a * g.in(locus.ring.universe()));
    acc = std::move(next);
  }
  return acc;
}

Dimension max_dimension(const Dimension& a, const Dimension& b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

// Dimension of V(ideal) ∩ D(h), projected away from the variables of order
// > p. favored variables form the most significant block after the
// eliminated ones; the choice of order only affects speed.
Dimension chart_dimension(const JetRing& ring, const IdealPresentation& ideal, const Polynomial& h,
                          std::optional<unsigned> p, const std::vector<VarId>& favored, const Budget& budget) {
  if (h.is_zero()) return std::nullopt;
  std::vector<VarId> block = p ? ring.variables_above(*p) : std::vector<VarId>{};
  IdealPresentation work = ideal;
  if (!h.is_constant()) {
    auto [tagged, t] = with_tag_variable(ring.universe());
    work = work.in(tagged);
    work.add(Polynomial::constant(tagged, 1) - Polynomial::variable(tagged, t) * h.in(tagged));
    block.push_back(t);
  }
  if (work.has_unit_generator()) return std::nullopt;
  std::vector<std::vector<VarId>> blocks;
  if (p) blocks.push_back(block);
  std::vector<VarId> top;
  for (VarId v : favored)
    if (std::find(block.begin(), block.end(), v) == block.end() || !p) top.push_back(v);
  if (!top.empty()) blocks.push_back(top);
  auto order = blocks.empty() ? MonomialOrder::grevlex() : MonomialOrder::product(blocks);
  auto g = groebner_basis(work, order, budget);
  if (g.is_unit()) return std::nullopt;
  if (!p) return krull_dimension(g);
  std::vector<Monomial> kept;
  for (const auto& lm : g.leading_monomials())
    if ((lm.support() & order.block_mask()) == 0) kept.push_back(lm);
  std::size_t total = work.universe()->size();
  std::uint64_t vars = total >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << total) - 1);
  return max_independent_set(vars & ~order.block_mask(), kept);
}

// Dimension of π(V(ideal) ∩ D(v) ∩ D(h)). When dim π(V(ideal + h) ∩ D(v)) is
// smaller than dim π(V(ideal) ∩ D(v)), a top component meets D(h) densely and
// no tag variable is needed for h.
Dimension localized_dimension(const JetRing& ring, const IdealPresentation& ideal, const Polynomial& v,
                              const Polynomial& h, std::optional<unsigned> p, const std::vector<VarId>& favored,
                              const Budget& budget) {
  if (h.is_constant()) return chart_dimension(ring, ideal, v * h, p, favored, budget);
  auto whole = chart_dimension(ring, ideal, v, p, favored, budget);
  if (!whole) return std::nullopt;
  IdealPresentation on_h = ideal;
  on_h.add(h);
  auto boundary = chart_dimension(ring, on_h, v, p, favored, budget);
  if (!boundary || *boundary < *whole) return whole;
  return chart_dimension(ring, ideal, v * h, p, favored, budget);
}

// Splits V(closed) ∩ D(h) along the base coordinates:
// D(v_0) ∪ V(v_0)D(v_1) ∪ ... ∪ V(v_0..v_{n-1}).
Dimension piece_dimension(const ConstructibleLocus& locus, const Polynomial& h, std::optional<unsigned> p,
                          const Budget& budget) {
  const auto& ring = locus.ring;
  const auto& u = ring.universe();
  Dimension best;
  IdealPresentation prefix = locus.closed;
  for (std::size_t i = 0; i < ring.base_size(); ++i) {
    Polynomial v = Polynomial::variable(u, ring.variable(i, 0));
    std::vector<VarId> favored;
    for (unsigned j = 1; j <= ring.level(); ++j) favored.push_back(ring.variable(i, j));
    best = max_dimension(best, localized_dimension(ring, prefix, v, h.in(u), p, favored, budget));
    prefix.add(v);
  }
  return max_dimension(best, localized_dimension(ring, prefix, Polynomial::constant(u, 1), h.in(u), p, {}, budget));
}

Dimension locus_dimension(const ConstructibleLocus& locus, std::optional<unsigned> p, const Budget& budget) {
  if (locus.closed.has_unit_generator()) return std::nullopt;
  Dimension best;
  for (const auto& h : witness_products(locus)) best = max_dimension(best, piece_dimension(locus, h, p, budget));
  return best;
}

std::vector<Polynomial> jacobian_minors_of(const EmbeddedVariety& x) {
  return jacobian_minors(x.ideal().generators(), x.universe(), static_cast<std::size_t>(x.codim()));
}

std::optional<int> codim_of(int ambient, const Dimension& d) {
  if (!d) return std::nullopt;
  return ambient - *d;
}

}  // namespace

void ConstructibleLocus::intersect_with(const ConstructibleLocus& other) {
  if (other.ring.universe()->names() != ring.universe()->names())
    throw ValidationError("loci live over different jet rings");
  for (const auto& g : other.closed.generators()) closed.add(g.in(ring.universe()));
  for (const auto& w : other.open_witnesses) open_witnesses.push_back(w.in(ring.universe()));
}

void add_contact_conditions(ConstructibleLocus& locus, const IdealPresentation& subscheme, unsigned order,
                            ContactMode mode) {
  const auto& ring = locus.ring;
  check_ring(ring, subscheme.universe());
  unsigned limit = mode == ContactMode::AtLeast ? ring.level() + 1 : ring.level();
  if (order > limit)
    throw ValidationError("contact order " + std::to_string(order) + " not visible at level " +
                          std::to_string(ring.level()));
  IdealPresentation witness(ring.universe());
  for (const auto& g : subscheme.generators()) {
    Polynomial current = ring.embed(g);
    for (unsigned j = 0; j < order; ++j) {
      locus.closed.add(current);
      if (j + 1 <= ring.level()) current = total_derivative(ring, current);
    }
    if (mode == ContactMode::Exactly) witness.add(current);
  }
  if (mode == ContactMode::Exactly) locus.open_witnesses.push_back(std::move(witness));
}

ConstructibleLocus contact_locus(const ContactSpec& spec, const std::optional<IdealPresentation>& ambient) {
  ConstructibleLocus locus(JetRing(spec.subscheme.universe(), spec.level));
  if (ambient) {
    check_ring(locus.ring, ambient->universe());
    locus.closed = jet_ideal(ambient->in(spec.subscheme.universe()), spec.level);
  }
  add_contact_conditions(locus, spec.subscheme, spec.order, spec.mode);
  return locus;
}

Dimension constructible_dimension(const ConstructibleLocus& locus, const Budget& budget) {
  return locus_dimension(locus, std::nullopt, budget);
}

Dimension image_dimension(const ConstructibleLocus& locus, unsigned p, const Budget& budget) {
  if (p > locus.ring.level()) throw ValidationError("projection level above the locus level");
  return locus_dimension(locus, p, budget);
}

std::optional<int> cylinder_codim(const EmbeddedVariety& x, unsigned jac_order, unsigned level, bool check_stability,
                                  const Budget& budget) {
  if (level < jac_order)
    throw ValidationError("level " + std::to_string(level) + " below the Jacobian order " + std::to_string(jac_order));
  IdealPresentation minors(x.universe(), jacobian_minors_of(x));
  int n = x.expected_dim();
  auto at = [&](unsigned m) {
    ConstructibleLocus locus(JetRing(x.universe(), m + jac_order));
    locus.closed = jet_ideal(x.ideal(), m + jac_order);
    add_contact_conditions(locus, minors, jac_order, ContactMode::Exactly);
    return codim_of(static_cast<int>(m + 1) * n, image_dimension(locus, m, budget));
  };
  auto value = at(level);
  if (check_stability && at(level + 1) != value)
    throw InvariantFailure("cylinder codimension changes between levels " + std::to_string(level) + " and " +
                           std::to_string(level + 1));
  return value;
}

ConstructibleLocus truncation_fiber(const IdealPresentation& ideal, const JetPoint& gamma, unsigned level) {
  if (gamma.level() > level) throw ValidationError("fiber level below the level of the jet");
  if (gamma.base_size() != ideal.universe()->size()) throw ValidationError("jet does not match the variables");
  ConstructibleLocus locus(JetRing(ideal.universe(), level));
  const auto& ring = locus.ring;
  locus.closed = jet_ideal(ideal, level);
  for (unsigned j = 0; j <= gamma.level(); ++j)
    for (std::size_t i = 0; i < gamma.base_size(); ++i)
      locus.closed.add(Polynomial::variable(ring.universe(), ring.variable(i, j)) -
                       Polynomial::constant(ring.universe(), gamma.at(i, j)));
  return locus;
}

int fiber_dim_formula(int e, int m, int p, int n) {
  if (e < 0 || n < 0 || !(2 * p >= m && m >= e + p))
    throw ValidationError("fiber formula needs 2p >= m >= e + p");
  return e + (m - p) * n;
}

ChangeOfVariableReport change_of_variable_probe(const std::vector<Polynomial>& map, const UniversePtr& source,
                                                const std::vector<ContactSpec>& target_loci, unsigned e_max,
                                                unsigned level, const Budget& budget) {
  if (map.size() != source->size()) throw ValidationError("map must have as many components as source variables");
  if (target_loci.empty()) throw ValidationError("no target locus given");
  if (e_max > level) throw ValidationError("e_max exceeds the level");
  const auto& target = target_loci.front().subscheme.universe();
  if (target->size() != map.size()) throw ValidationError("target dimension does not match the map");
  int ambient = static_cast<int>((level + 1) * map.size());

  std::map<VarId, Polynomial> assignment;
  for (VarId k = 0; k < map.size(); ++k) assignment.emplace(k, map[k].in(source));

  ConstructibleLocus direct(JetRing(target, level));
  ConstructibleLocus pulled(JetRing(source, level));
  for (const auto& spec : target_loci) {
    add_contact_conditions(direct, spec.subscheme, spec.order, spec.mode);
    IdealPresentation back(source);
    for (const auto& g : spec.subscheme.generators()) back.add(substitute(g.in(target), assignment));
    add_contact_conditions(pulled, back, spec.order, spec.mode);
  }

  ChangeOfVariableReport report;
  report.direct_codim = codim_of(ambient, constructible_dimension(direct, budget));
  auto jac = jacobian_minors(map, source, map.size());
  if (jac.empty()) throw ValidationError("map has vanishing Jacobian determinant");
  IdealPresentation det(source, jac);
  for (unsigned e = 0; e <= e_max; ++e) {
    ConstructibleLocus piece = pulled;
    add_contact_conditions(piece, det, e, ContactMode::Exactly);
    auto c = codim_of(ambient, constructible_dimension(piece, budget));
    report.pulled_back_codim.push_back(c);
    if (c && (!report.transformed_min || *c + static_cast<int>(e) < *report.transformed_min)) {
      report.transformed_min = *c + static_cast<int>(e);
      report.argmin = e;
    }
  }
  report.agree = report.direct_codim == report.transformed_min;
  return report;
}

}  // namespace jetarc
