#include "jetarc/mldjets.hpp"

#include <algorithm>
#include <fstream>
#include <functional>

#include "jetarc/errors.hpp"

namespace jetarc {

namespace {

Rational rational_field(const nlohmann::json& j, const char* what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ValidationError(std::string(what) + " must be an integer or an \"a/b\" string");
}

int int_field(const nlohmann::json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) throw ValidationError(std::string(key) + " must be an integer");
  return j.at(key).get<int>();
}

IdealPresentation ideal_field(const nlohmann::json& gens, const UniversePtr& universe, const char* what) {
  if (!gens.is_array()) throw ValidationError(std::string(what) + " must be a list of polynomials");
  IdealPresentation ideal(universe);
  for (const auto& g : gens) {
    if (!g.is_string()) throw ValidationError(std::string(what) + " entries must be strings");
    ideal.add(parse_polynomial(g.get<std::string>(), universe));
  }
  return ideal;
}

bool smooth_cell_axis(const PairSpec& pair) { return pair.is_smooth_ambient(); }

int least_level(const JetCell& cell) {
  int m = std::max(2 * cell.e, cell.e + cell.eprime);
  for (int w : cell.w) m = std::max(m, cell.e + w);
  return m;
}

// Visits the grid in the order e, e′, then w as an odometer with the first
// component slowest.
void for_each_cell(const PairSpec& pair, const SearchBounds& bounds, const std::function<void(JetCell)>& visit) {
  int e_top = smooth_cell_axis(pair) ? 0 : bounds.e_max;
  int ep_top = pair.jr ? bounds.eprime_max : 0;
  std::size_t k = pair.y.size();
  for (int e = 0; e <= e_top; ++e)
    for (int ep = 0; ep <= ep_top; ++ep) {
      std::vector<int> w(k, 0);
      while (true) {
        JetCell cell{w, e, ep, 0};
        cell.m = least_level(cell);
        visit(cell);
        std::size_t i = k;
        while (i > 0 && w[i - 1] == bounds.w_max) w[--i] = 0;
        if (i == 0) break;
        ++w[i - 1];
      }
    }
}

bool on_boundary(const PairSpec& pair, const SearchBounds& bounds, const JetCell& cell) {
  if (std::find(cell.w.begin(), cell.w.end(), bounds.w_max) != cell.w.end()) return true;
  if (!pair.is_smooth_ambient() && cell.e == bounds.e_max) return true;
  return pair.jr && cell.eprime == bounds.eprime_max;
}

// Value of the cell at its least level, or at every admissible level when
// all_levels is set (which must then agree).
std::optional<Rational> stable_value(const PairSpec& pair, const SearchBounds& bounds, const JetCell& cell,
                                     bool with_w) {
  auto value = cell_value(pair, cell, with_w, bounds.budget);
  if (!bounds.all_levels) return value;
  for (int m = cell.m + 1; m <= bounds.m_max; ++m) {
    JetCell higher = cell;
    higher.m = m;
    if (cell_value(pair, higher, with_w, bounds.budget) != value)
      throw InvariantFailure("jet expression changes between levels " + std::to_string(cell.m) + " and " +
                             std::to_string(m));
  }
  return value;
}

}  // namespace

PairSpec PairSpec::smooth(UniversePtr universe, std::vector<WeightedIdeal> y, IdealPresentation w) {
  PairSpec pair{std::move(universe), std::nullopt, std::move(y), std::move(w), std::nullopt, 1};
  return pair;
}

int PairSpec::dimension() const {
  return variety ? variety->expected_dim() : static_cast<int>(universe->size());
}

void PairSpec::validate(const Budget& budget) const {
  if (!universe) throw ValidationError("pair without a variable universe");
  if (index_r < 1) throw ValidationError("index r must be positive");
  auto same = [&](const IdealPresentation& ideal, const char* what) {
    if (ideal.universe()->names() != universe->names())
      throw ValidationError(std::string(what) + " lives over different variables than the pair");
  };
  if (variety) same(variety->ideal(), "X");
  for (const auto& [ideal, q] : y) {
    same(ideal, "Y");
    if (q < 0) throw ValidationError("negative weight " + q.get_str() + " on Y");
  }
  same(w, "W");
  if (jr) same(*jr, "J_r");
  IdealPresentation x_ideal = variety ? variety->ideal() : IdealPresentation(universe);
  auto w_dim = krull_dimension(x_ideal + w, budget);
  if (!w_dim) throw ValidationError("W does not meet X");
  if (*w_dim >= dimension()) throw ValidationError("W is not a proper closed subset of X");
}

void SearchBounds::validate() const {
  if (w_max < 0 || m_max < 0 || e_max < 0 || eprime_max < 0) throw ValidationError("negative search bound");
  int need = std::max({2 * e_max, e_max + eprime_max, e_max + w_max});
  if (m_max < need)
    throw ValidationError("m_max = " + std::to_string(m_max) + " below the required " + std::to_string(need));
}

ConstructibleLocus pair_locus(const PairSpec& pair, const JetCell& cell, bool with_w) {
  if (cell.w.size() != pair.y.size()) throw ValidationError("contact vector length differs from the number of Y");
  if (cell.m < least_level(cell)) throw ValidationError("level below max(2e, e+e', e+w_i)");
  unsigned m = static_cast<unsigned>(cell.m);
  ConstructibleLocus locus(JetRing(pair.universe, m));
  if (pair.variety) locus.closed = jet_ideal(pair.variety->ideal(), m);
  for (std::size_t i = 0; i < pair.y.size(); ++i)
    add_contact_conditions(locus, pair.y[i].ideal, static_cast<unsigned>(cell.w[i]), ContactMode::AtLeast);
  if (pair.variety) {
    IdealPresentation minors(pair.universe,
                             jacobian_minors(pair.variety->ideal().generators(), pair.universe,
                                             static_cast<std::size_t>(pair.variety->codim())));
    add_contact_conditions(locus, minors, static_cast<unsigned>(cell.e), ContactMode::Exactly);
  } else if (cell.e != 0) {
    throw ValidationError("Jacobian order must be 0 on a smooth ambient space");
  }
  if (pair.jr)
    add_contact_conditions(locus, *pair.jr, static_cast<unsigned>(cell.eprime), ContactMode::Exactly);
  else if (cell.eprime != 0)
    throw ValidationError("J_r order must be 0 when J_r is the unit ideal");
  if (with_w) add_contact_conditions(locus, pair.w, 1, ContactMode::AtLeast);
  return locus;
}

std::optional<Rational> cell_value(const PairSpec& pair, const JetCell& cell, bool with_w, const Budget& budget) {
  auto dim = constructible_dimension(pair_locus(pair, cell, with_w), budget);
  if (!dim) return std::nullopt;
  Rational value = Rational((cell.m + 1) * pair.dimension()) + fraction(cell.eprime, pair.index_r) - *dim;
  for (std::size_t i = 0; i < pair.y.size(); ++i) value -= pair.y[i].q * cell.w[i];
  return value;
}

JetMld mld_jet_estimate(const PairSpec& pair, const SearchBounds& bounds) {
  bounds.validate();
  pair.validate(bounds.budget);
  std::optional<Rational> best;
  JetMld result{MldValue(0), Provenance::Interior, {}, 0};
  for_each_cell(pair, bounds, [&](const JetCell& cell) {
    auto value = stable_value(pair, bounds, cell, true);
    ++result.cells;
    if (!value || (best && *value >= *best)) return;
    best = value;
    result.witness = cell;
  });
  if (!best) throw ValidationError("no jet of X has contact with W inside the search bounds");
  // A negative cell stays negative along t ↦ t^k and scales to −∞.
  if (*best < 0) {
    result.value = MldValue::minus_infinity();
    return result;
  }
  result.value = MldValue(*best);
  if (on_boundary(pair, bounds, result.witness)) result.provenance = Provenance::UpperBoundOnly;
  return result;
}

LcReport lc_check(const PairSpec& pair, const SearchBounds& bounds) {
  bounds.validate();
  pair.validate(bounds.budget);
  LcReport report;
  for_each_cell(pair, bounds, [&](const JetCell& cell) {
    if (!report.log_canonical) return;
    auto value = stable_value(pair, bounds, cell, false);
    if (!value || *value >= 0) return;
    report.log_canonical = false;
    report.violation = cell;
    Rational weighted = 0;
    for (std::size_t i = 0; i < pair.y.size(); ++i) weighted += pair.y[i].q * cell.w[i];
    report.threshold = weighted - fraction(cell.eprime, pair.index_r);
    report.codim = *value + report.threshold;
  });
  return report;
}

IoaReport ioa_check(const EmbeddedVariety& x, const std::vector<WeightedIdeal>& y, const IdealPresentation& w,
                    const SearchBounds& bounds) {
  bounds.validate();
  if (static_cast<int>(x.ideal().generators().size()) != x.codim())
    throw ValidationError("X must be presented by exactly codim X = " + std::to_string(x.codim()) + " equations");
  x.verify_dimension(bounds.budget);
  // Complete intersections are Cohen-Macaulay, so normality is regularity in
  // codimension one.
  auto sing = singular_locus_dimension(x, bounds.budget);
  if (sing && *sing > x.expected_dim() - 2)
    throw ValidationError("X is not normal: its singular locus has dimension " + std::to_string(*sing));

  PairSpec left{x.universe(), x, y, w, std::nullopt, 1};
  std::vector<WeightedIdeal> ambient_y{{x.ideal(), Rational(x.codim())}};
  ambient_y.insert(ambient_y.end(), y.begin(), y.end());
  PairSpec right = PairSpec::smooth(x.universe(), std::move(ambient_y), w);

  IoaReport report{mld_jet_estimate(left, bounds), mld_jet_estimate(right, bounds), false};
  report.agree = report.left.value == report.right.value;
  return report;
}

PairFile pair_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    UniversePtr universe = make_universe(vars);
    PairFile file{PairSpec::smooth(universe, {}, IdealPresentation(universe)), std::nullopt};
    PairSpec& pair = file.pair;
    if (j.contains("variety")) {
      const auto& v = j.at("variety");
      pair.variety.emplace(ideal_field(v.at("gens"), universe, "variety gens"), int_field(v, "expected_dim", -1));
    }
    if (j.contains("Y"))
      for (const auto& entry : j.at("Y"))
        pair.y.push_back({ideal_field(entry.at("gens"), universe, "Y gens"), rational_field(entry.at("q"), "q")});
    pair.w = ideal_field(j.at("W"), universe, "W");
    if (j.contains("jr")) pair.jr = ideal_field(j.at("jr"), universe, "jr");
    pair.index_r = int_field(j, "r", 1);
    if (j.contains("bounds")) {
      const auto& b = j.at("bounds");
      SearchBounds bounds;
      bounds.w_max = int_field(b, "w_max", 0);
      bounds.e_max = int_field(b, "e_max", 0);
      bounds.eprime_max = int_field(b, "eprime_max", 0);
      bounds.m_max = int_field(b, "m_max", std::max({2 * bounds.e_max, bounds.e_max + bounds.eprime_max,
                                                     bounds.e_max + bounds.w_max}));
      bounds.validate();
      file.bounds = bounds;
    }
    return file;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed pair description: ") + e.what());
  }
}

PairFile load_pair(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("malformed JSON in '" + path + "': " + e.what());
  }
  try {
    return pair_from_json(j);
  } catch (const ValidationError& e) {
    throw ValidationError("'" + path + "': " + e.what());
  }
}

}  // namespace jetarc
