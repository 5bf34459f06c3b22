#include "jetarc/jets.hpp"

#include "jetarc/errors.hpp"
#include "jetarc/monomial.hpp"

namespace jetarc {

namespace {

UniversePtr jet_universe(const UniversePtr& base, unsigned level) {
  std::size_t n = base->size();
  if ((level + 1) * n > kMaxVariables)
    throw ValidationError("jet ring of level " + std::to_string(level) + " over " + std::to_string(n) +
                          " variables exceeds " + std::to_string(kMaxVariables) + " variables");
  std::vector<std::string> names;
  names.reserve((level + 1) * n);
  for (unsigned j = 0; j <= level; ++j)
    for (std::size_t i = 0; i < n; ++i) names.push_back(base->name(static_cast<VarId>(i)) + "_" + std::to_string(j));
  return make_universe(std::move(names));
}

}  // namespace

JetRing::JetRing(UniversePtr base, unsigned level) : base_(std::move(base)), level_(level) {
  universe_ = jet_universe(base_, level_);
}

std::vector<VarId> JetRing::variables_above(unsigned p) const {
  std::vector<VarId> out;
  for (unsigned j = p + 1; j <= level_; ++j)
    for (std::size_t i = 0; i < base_size(); ++i) out.push_back(variable(i, j));
  return out;
}

Polynomial JetRing::embed(const Polynomial& f) const {
  if (!f.universe()->is_prefix_of(*base_) && f.universe() != base_)
    throw ValidationError("polynomial is not over the base variables of the jet ring");
  return Polynomial::from_terms(universe_, f.terms());
}

std::vector<Rational> JetPoint::base_point() const { return {coords_.begin(), coords_.begin() + n_}; }

SeriesVector JetPoint::arcs() const {
  SeriesVector out(n_, TruncatedSeries(level_ + 1));
  for (unsigned j = 0; j <= level_; ++j) {
    Rational scale(1, factorial(j));
    for (std::size_t i = 0; i < n_; ++i) out[i][j] = at(i, j) * scale;
  }
  return out;
}

JetPoint JetPoint::from_arcs(const SeriesVector& arcs, unsigned level) {
  JetPoint a(arcs.size(), level);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].truncation() < level + 1) throw ValidationError("arc truncated below the jet level");
    for (unsigned j = 0; j <= level; ++j) a.at(i, j) = arcs[i][j] * Rational(factorial(j));
  }
  return a;
}

JetPoint JetPoint::truncated(unsigned p) const {
  if (p > level_) throw ValidationError("cannot truncate a jet to a higher level");
  JetPoint out(n_, p);
  std::copy(coords_.begin(), coords_.begin() + static_cast<std::ptrdiff_t>((p + 1) * n_), out.coords_.begin());
  return out;
}

Polynomial total_derivative(const JetRing& ring, const Polynomial& f) {
  const auto& u = f.universe();
  if (u != ring.universe() && !u->is_prefix_of(*ring.universe()))
    throw ValidationError("polynomial does not live in the jet ring");
  std::uint64_t support = f.support();
  Polynomial out(ring.universe());
  for (VarId v = 0; support != 0; ++v, support >>= 1) {
    if ((support & 1) == 0) continue;
    if (ring.order_of(v) >= ring.level())
      throw ValidationError("target level " + std::to_string(ring.level()) + " too small for the derivative of " +
                            ring.universe()->name(v));
    out += partial_derivative(f, v).in(ring.universe()) *
           Polynomial::variable(ring.universe(), static_cast<VarId>(v + ring.base_size()));
  }
  return out;
}

std::vector<Polynomial> jet_equations(const JetRing& ring, const Polynomial& f) {
  std::vector<Polynomial> out;
  out.reserve(ring.level() + 1);
  out.push_back(ring.embed(f));
  for (unsigned j = 1; j <= ring.level(); ++j) out.push_back(total_derivative(ring, out.back()));
  return out;
}

IdealPresentation jet_ideal(const IdealPresentation& ideal, unsigned level) {
  JetRing ring(ideal.universe(), level);
  std::vector<std::vector<Polynomial>> per_generator;
  for (const auto& f : ideal.generators()) per_generator.push_back(jet_equations(ring, f));
  std::vector<Polynomial> gens;
  for (unsigned j = 0; j <= level; ++j)
    for (const auto& eqs : per_generator) gens.push_back(eqs[j]);
  return IdealPresentation(ring.universe(), std::move(gens));
}

bool arc_substitution_check(const Polynomial& f, const JetPoint& a) {
  if (f.universe()->size() != a.base_size()) throw ValidationError("jet point does not match the base variables");
  JetRing ring(f.universe(), a.level());
  auto series = evaluate_series(f, a.arcs(), a.level() + 1);
  auto eqs = jet_equations(ring, f);
  for (unsigned j = 0; j <= a.level(); ++j)
    if (series[j] != evaluate(eqs[j], a.coordinates()) / Rational(factorial(j))) return false;
  return true;
}

JetPoint scale_jet(const JetPoint& a, const Rational& c) {
  JetPoint out = a;
  Rational cj = 1;
  for (unsigned j = 0; j <= a.level(); ++j) {
    for (std::size_t i = 0; i < a.base_size(); ++i) out.at(i, j) = a.at(i, j) * cj;
    cj *= c;
  }
  return out;
}

JetPoint constant_jet(const std::vector<Rational>& point, unsigned level) {
  JetPoint out(point.size(), level);
  for (std::size_t i = 0; i < point.size(); ++i) out.at(i, 0) = point[i];
  return out;
}

bool jet_satisfies(const IdealPresentation& jet_ideal, const JetPoint& a) {
  for (const auto& g : jet_ideal.generators())
    if (evaluate(g, a.coordinates()) != 0) return false;
  return true;
}

}  // namespace jetarc
