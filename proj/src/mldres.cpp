#include "jetarc/mldres.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <fstream>
#include <functional>
#include <utility>

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

Rational weighted_sum(const std::vector<Rational>& q, const std::vector<int>& w) {
  Rational s = 0;
  for (std::size_t i = 0; i < q.size(); ++i) s += q[i] * w[i];
  return s;
}

std::uint64_t in_w_mask(const ResolutionData& data) {
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < data.divisors.size(); ++j)
    if (data.divisors[j].in_w) mask |= std::uint64_t{1} << j;
  if (mask == 0) throw ValidationError("no divisor with center inside W");
  return mask;
}

// Calls visit(ν) for every ν with Σ ν_j ≤ budget whose support is a
// face meeting the in_W divisors.
void for_each_admissible(const ResolutionData& data, int budget,
                         const std::function<void(const std::vector<int>&)>& visit) {
  std::uint64_t inside = in_w_mask(data);
  std::size_t d = data.divisors.size();
  std::vector<int> nu(d, 0);
  std::function<void(std::size_t, int, std::uint64_t)> rec = [&](std::size_t j, int left, std::uint64_t support) {
    if (j == d) {
      if (support & inside) visit(nu);
      return;
    }
    rec(j + 1, left, support);
    std::uint64_t grown = support | (std::uint64_t{1} << j);
    if (!data.is_face(grown)) return;
    for (int k = 1; k <= left; ++k) {
      nu[j] = k;
      rec(j + 1, left - k, grown);
    }
    nu[j] = 0;
  };
  rec(0, budget, 0);
}

}  // namespace

std::string MldValue::to_string() const { return value_ ? jetarc::to_string(*value_) : "-inf"; }

bool operator<(const MldValue& a, const MldValue& b) {
  if (b.is_minus_infinity()) return false;
  if (a.is_minus_infinity()) return true;
  return a.value() < b.value();
}

void ResolutionData::normalize() {
  if (ambient_dim < 1) throw ValidationError("ambient_dim must be positive");
  if (index_r < 1) throw ValidationError("index r must be positive");
  if (divisors.empty()) throw ValidationError("resolution data without divisors");
  if (divisors.size() > 64) throw ValidationError("at most 64 divisors are supported");
  for (const auto& q : weights)
    if (q < 0) throw ValidationError("negative weight " + jetarc::to_string(q));
  std::set<std::string> names;
  for (const auto& e : divisors) {
    if (e.name.empty() || !names.insert(e.name).second) throw ValidationError("divisor names must be unique");
    Rational scaled = e.kappa * index_r;
    if (scaled.get_den() != 1) throw ValidationError("r·kappa of " + e.name + " is not an integer");
    if (e.z < 0) throw ValidationError("negative z for " + e.name);
    if (e.alpha.size() != weights.size())
      throw ValidationError("alpha of " + e.name + " has length " + std::to_string(e.alpha.size()) + ", expected " +
                            std::to_string(weights.size()));
    for (int a : e.alpha)
      if (a < 0) throw ValidationError("negative alpha for " + e.name);
    if (e.in_w && !e.meets_w) throw ValidationError(e.name + " lies over W but is marked as not meeting W");
  }
  std::uint64_t all = divisors.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << divisors.size()) - 1;
  std::set<std::uint64_t> closed;
  for (std::size_t j = 0; j < divisors.size(); ++j) closed.insert(std::uint64_t{1} << j);
  for (std::uint64_t face : faces) {
    if (face & ~all) throw ValidationError("face refers to an unknown divisor");
    // All nonempty submasks.
    for (std::uint64_t sub = face; sub; sub = (sub - 1) & face) closed.insert(sub);
  }
  faces = std::move(closed);
}

std::size_t ResolutionData::index_of(const std::string& name) const {
  for (std::size_t j = 0; j < divisors.size(); ++j)
    if (divisors[j].name == name) return j;
  throw ValidationError("unknown divisor '" + name + "'");
}

Rational ResolutionData::log_discrepancy(std::size_t j) const {
  return divisors[j].kappa + 1 - weighted_sum(weights, divisors[j].alpha);
}

ResolutionData resolution_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("resolution data must be a JSON object");
  ResolutionData data;
  data.ambient_dim = int_field(j, "ambient_dim", 0);
  data.index_r = int_field(j, "r", 1);
  if (j.contains("weights"))
    for (const auto& q : j.at("weights")) data.weights.push_back(rational_field(q, "weight"));
  if (!j.contains("divisors") || !j.at("divisors").is_array()) throw ValidationError("missing divisors array");
  for (const auto& e : j.at("divisors")) {
    DivisorRecord rec;
    if (!e.contains("name") || !e.at("name").is_string()) throw ValidationError("divisor without a name");
    rec.name = e.at("name").get<std::string>();
    rec.kappa = e.contains("kappa") ? rational_field(e.at("kappa"), "kappa") : Rational(0);
    rec.z = int_field(e, "z", 0);
    if (e.contains("alpha"))
      for (const auto& a : e.at("alpha")) {
        if (!a.is_number_integer()) throw ValidationError("alpha entries must be integers");
        rec.alpha.push_back(a.get<int>());
      }
    rec.in_w = e.value("in_W", false);
    rec.meets_w = e.value("meets_W", rec.in_w);
    data.divisors.push_back(std::move(rec));
  }
  if (j.contains("faces"))
    for (const auto& face : j.at("faces")) {
      std::uint64_t mask = 0;
      for (const auto& name : face) mask |= std::uint64_t{1} << data.index_of(name.get<std::string>());
      if (mask) data.faces.insert(mask);
    }
  data.normalize();
  return data;
}

ResolutionData load_resolution_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("malformed JSON in '" + path + "': " + e.what());
  }
  return resolution_from_json(j);
}

nlohmann::json to_json(const ResolutionData& data) {
  nlohmann::json j;
  j["ambient_dim"] = data.ambient_dim;
  j["r"] = data.index_r;
  j["weights"] = nlohmann::json::array();
  for (const auto& q : data.weights) j["weights"].push_back(to_string(q));
  j["divisors"] = nlohmann::json::array();
  for (const auto& e : data.divisors)
    j["divisors"].push_back({{"name", e.name},
                             {"kappa", to_string(e.kappa)},
                             {"z", e.z},
                             {"alpha", e.alpha},
                             {"in_W", e.in_w},
                             {"meets_W", e.meets_w}});
  j["faces"] = nlohmann::json::array();
  for (std::uint64_t face : data.faces) {
    if (std::popcount(face) < 2) continue;
    nlohmann::json names = nlohmann::json::array();
    for (std::uint64_t m = face; m; m &= m - 1) names.push_back(data.divisors[std::countr_zero(m)].name);
    j["faces"].push_back(names);
  }
  return j;
}

DivisorMld mld_from_divisors(const ResolutionData& data) {
  in_w_mask(data);
  for (std::size_t j = 0; j < data.divisors.size(); ++j)
    if (data.divisors[j].meets_w && data.log_discrepancy(j) < 0) return {MldValue::minus_infinity(), j};
  std::optional<DivisorMld> best;
  for (std::size_t j = 0; j < data.divisors.size(); ++j) {
    if (!data.divisors[j].in_w) continue;
    Rational a = data.log_discrepancy(j);
    if (!best || a < best->value.value()) best = DivisorMld{a, j};
  }
  return *best;
}

std::optional<Rational> contact_codim_combinatorial(const ResolutionData& data, const std::vector<int>& w, int ell) {
  if (w.size() != data.weights.size()) throw ValidationError("contact vector has the wrong length");
  if (ell < 0) throw ValidationError("negative Nash order");
  for (int wi : w)
    if (wi < 0) throw ValidationError("negative contact order");
  std::uint64_t inside = in_w_mask(data);
  std::size_t d = data.divisors.size(), s = w.size();
  // Row s carries the z constraint.
  std::vector<int> rest(w);
  rest.push_back(ell);
  auto coefficient = [&](std::size_t i, std::size_t j) { return i < s ? data.divisors[j].alpha[i] : data.divisors[j].z; };
  std::vector<bool> free(d, true);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i <= s; ++i)
      if (coefficient(i, j) > 0) free[j] = false;
    if (free[j] && data.divisors[j].kappa + 1 < 0) throw ValidationError("ill-posed data: " + data.divisors[j].name);
  }
  std::optional<Rational> best;
  Rational objective = 0;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t j, std::uint64_t support) {
    if (j == d) {
      for (int r : rest)
        if (r != 0) return;
      if ((support & inside) == 0) return;
      if (!best || objective < *best) best = objective;
      return;
    }
    rec(j + 1, support);
    std::uint64_t grown = support | (std::uint64_t{1} << j);
    if (!data.is_face(grown)) return;
    // A free divisor only matters through its support, and κ_j + 1 ≥ 0.
    int bound = 1;
    if (!free[j]) {
      bound = INT_MAX;
      for (std::size_t i = 0; i <= s; ++i)
        if (int c = coefficient(i, j); c > 0) bound = std::min(bound, std::max(rest[i], 0) / c);
    }
    Rational step = data.divisors[j].kappa + 1;
    for (int k = 1; k <= bound; ++k) {
      for (std::size_t i = 0; i <= s; ++i) rest[i] -= coefficient(i, j);
      objective += step;
      rec(j + 1, grown);
    }
    for (std::size_t i = 0; i <= s; ++i) rest[i] += bound * coefficient(i, j);
    objective -= step * bound;
  };
  rec(0, 0);
  if (!best) return std::nullopt;
  return *best + fraction(ell, data.index_r);
}

ContactMld mld_via_contact(const ResolutionData& data, int nu_max) {
  std::uint64_t inside = in_w_mask(data);
  std::size_t s = data.weights.size();
  std::vector<std::pair<std::vector<int>, int>> candidates;
  std::set<std::pair<std::vector<int>, int>> seen;
  auto add = [&](const std::vector<int>& nu) {
    std::vector<int> w(s, 0);
    int ell = 0;
    for (std::size_t j = 0; j < nu.size(); ++j) {
      for (std::size_t i = 0; i < s; ++i) w[i] += data.divisors[j].alpha[i] * nu[j];
      ell += data.divisors[j].z * nu[j];
    }
    if (seen.insert({w, ell}).second) candidates.emplace_back(w, ell);
  };
  for (std::size_t j = 0; j < data.divisors.size(); ++j)
    if (inside & (std::uint64_t{1} << j)) {
      std::vector<int> nu(data.divisors.size(), 0);
      nu[j] = 1;
      add(nu);
    }
  // Escalation: along ν + N·e_k with κ_k + 1 − Σ q_i α_ik < 0 and the support
  // still a face, the objective eventually turns negative.
  for_each_admissible(data, nu_max, [&](const std::vector<int>& nu) {
    add(nu);
    std::uint64_t support = 0;
    Rational value = 0;
    for (std::size_t j = 0; j < nu.size(); ++j)
      if (nu[j] > 0) {
        support |= std::uint64_t{1} << j;
        value += data.log_discrepancy(j) * nu[j];
      }
    for (std::size_t k = 0; k < nu.size(); ++k) {
      Rational slope = data.log_discrepancy(k);
      if (slope >= 0 || !data.is_face(support | (std::uint64_t{1} << k))) continue;
      Rational steps = value / -slope;
      Integer whole = steps.get_num() / steps.get_den();
      std::vector<int> ray = nu;
      ray[k] += static_cast<int>(std::max<long>(whole.get_si(), 0)) + 1;
      add(ray);
    }
  });

  auto value_at = [&](const std::vector<int>& w, int ell) -> std::optional<Rational> {
    auto codim = contact_codim_combinatorial(data, w, ell);
    if (!codim) return std::nullopt;
    return *codim - fraction(ell, data.index_r) - weighted_sum(data.weights, w);
  };
  std::optional<ContactMld> best;
  for (const auto& [w, ell] : candidates) {
    auto v = value_at(w, ell);
    if (!v) throw InvariantFailure("admissible contact data has an empty contact locus");
    if (!best || *v < best->value.value()) best = ContactMld{*v, w, ell};
  }
  if (best->value.value() >= 0) return *best;
  // Negative: the value at k·(w, ℓ) is at most k times the value at (w, ℓ).
  Rational previous = best->value.value();
  std::vector<int> w = best->w;
  int ell = best->ell;
  for (int round = 0; round < 2; ++round) {
    for (int& wi : w) wi *= 2;
    ell *= 2;
    auto v = value_at(w, ell);
    if (!v || !(*v < previous)) throw InvariantFailure("negative contact value does not decrease under doubling");
    previous = *v;
  }
  best->value = MldValue::minus_infinity();
  return *best;
}

}  // namespace jetarc
