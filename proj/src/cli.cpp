#include "jetarc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "jetarc/contact.hpp"
#include "jetarc/errors.hpp"
#include "jetarc/jets.hpp"
#include "jetarc/lifting.hpp"
#include "jetarc/mldjets.hpp"
#include "jetarc/mldres.hpp"

namespace jetarc::cli {

namespace {

using nlohmann::json;

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed JSON in '" + path + "': " + e.what());
  }
}

template <typename F>
auto with_file(const std::string& path, F&& f) {
  try {
    return f(read_json(path));
  } catch (const json::exception& e) {
    throw ValidationError("'" + path + "': " + e.what());
  } catch (const ValidationError& e) {
    std::string what = e.what();
    if (what.find(path) != std::string::npos) throw;
    throw ValidationError("'" + path + "': " + what);
  }
}

json dim_json(const Dimension& d) { return d ? json(*d) : json("empty"); }
json mld_json(const MldValue& v) { return v.to_string(); }

json polys_json(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

json cell_json(const JetCell& cell) {
  return json{{"w", cell.w}, {"e", cell.e}, {"eprime", cell.eprime}, {"m", cell.m}};
}

json jet_mld_json(const JetMld& r) {
  return json{{"value", mld_json(r.value)},
              {"provenance", r.provenance == Provenance::Interior ? "interior" : "upper-bound-only"},
              {"witness", cell_json(r.witness)},
              {"cells", r.cells}};
}

void render(const json& report, std::ostream& out, const std::string& indent = "") {
  for (const auto& [key, value] : report.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      render(value, out, indent + "  ");
    } else if (value.is_string()) {
      out << indent << key << ": " << value.get<std::string>() << "\n";
    } else if (value.is_array() && std::all_of(value.begin(), value.end(), [](const json& v) { return v.is_string(); }) &&
               !value.empty()) {
      out << indent << key << ":\n";
      for (const auto& v : value) out << indent << "  " << v.get<std::string>() << "\n";
    } else {
      out << indent << key << ": " << value.dump() << "\n";
    }
  }
}

SeriesVector arc_series(const IdealFile& file, std::size_t truncation) {
  auto n = file.ideal.universe()->size();
  if (file.arc.size() != n)
    throw ValidationError("the ideal file needs an arc with one entry per variable (" + std::to_string(n) + ")");
  auto t = make_universe({"t"});
  SeriesVector u;
  for (const auto& a : file.arc) {
    auto p = parse_polynomial(a, t);
    u.push_back(TruncatedSeries::from_polynomial(p, 0, truncation));
  }
  return u;
}

EmbeddedVariety variety_of(const IdealFile& file) {
  if (!file.expected_dim) throw ValidationError("the ideal file needs expected_dim for this command");
  return EmbeddedVariety(file.ideal, *file.expected_dim);
}

ContactMode mode_field(const json& j) {
  std::string mode = j.value("mode", std::string("at_least"));
  if (mode == "at_least") return ContactMode::AtLeast;
  if (mode == "exactly") return ContactMode::Exactly;
  throw ValidationError("mode must be \"at_least\" or \"exactly\", not \"" + mode + "\"");
}

struct Options {
  std::string ideal, data, pair;
  std::optional<int> m, p, jac_order, order, ell, nu_max;
  std::vector<std::string> q;
  std::vector<int> w;
  std::uint64_t seed = 0;
  bool json_out = false;
  std::size_t max_pairs = Budget{}.max_pairs;

  Budget budget() const { return Budget{max_pairs}; }
};

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw ValidationError(std::string(flag) + " is required");
  if (*v < 0) throw ValidationError(std::string(flag) + " must be nonnegative");
  return *v;
}

std::vector<Rational> weights(const Options& o) {
  std::vector<Rational> q;
  for (const auto& s : o.q) {
    try {
      q.push_back(parse_rational(s));
    } catch (const ValidationError& e) {
      throw ValidationError("--q " + s + ": " + e.what());
    }
  }
  return q;
}

// Applies --q, --w, --m and --jac-order overrides to a pair file.
SearchBounds pair_bounds(PairFile& file, const Options& o) {
  auto q = weights(o);
  if (!q.empty()) {
    if (q.size() != file.pair.y.size())
      throw ValidationError("--q given " + std::to_string(q.size()) + " times for " +
                            std::to_string(file.pair.y.size()) + " components of Y");
    for (std::size_t i = 0; i < q.size(); ++i) file.pair.y[i].q = q[i];
  }
  SearchBounds b = file.bounds.value_or(SearchBounds{});
  if (o.w.size() > 1) throw ValidationError("--w takes a single w_max for this command");
  if (!o.w.empty()) b.w_max = o.w[0];
  if (o.m) b.m_max = *o.m;
  if (o.jac_order) b.e_max = *o.jac_order;
  b.budget = o.budget();
  return b;
}

json cmd_jet_eqs(const Options& o) {
  auto file = load_ideal_file(o.ideal);
  unsigned m = need(o.m, "--m");
  auto eqs = jet_ideal(file.ideal, m);
  return json{{"level", m}, {"count", eqs.generators().size()}, {"generators", polys_json(eqs.generators())}};
}

json cmd_jet_dim(const Options& o) {
  auto file = load_ideal_file(o.ideal);
  unsigned m = need(o.m, "--m");
  return json{{"level", m}, {"dimension", dim_json(krull_dimension(jet_ideal(file.ideal, m), o.budget()))}};
}

json cmd_jacobian(const Options& o) {
  auto x = variety_of(load_ideal_file(o.ideal));
  json report{{"minors", polys_json(jacobian_minors(x.ideal().generators(), x.universe(),
                                                    static_cast<std::size_t>(x.codim())))},
              {"singular_locus_dim", dim_json(singular_locus_dimension(x, o.budget()))}};
  if (static_cast<int>(x.ideal().generators().size()) > x.codim()) {
    CIOptions options;
    options.budget = o.budget();
    auto ci = generic_ci_reduction(x, o.seed, options);
    json matrix = json::array();
    for (const auto& row : ci.matrix) {
      json r = json::array();
      for (const auto& a : row) r.push_back(to_string(a));
      matrix.push_back(r);
    }
    report["ci_reduction"] = json{{"matrix", matrix},
                                  {"generators", polys_json(ci.ci_ideal.generators())},
                                  {"seed", ci.seed},
                                  {"certified", ci.certified}};
  }
  return report;
}

json cmd_contact_dim(const Options& o) {
  auto file = load_ideal_file(o.ideal);
  unsigned m = need(o.m, "--m");
  unsigned e = need(o.order, "--order");
  auto d = constructible_dimension(contact_locus({file.ideal, e, ContactMode::AtLeast, m}), o.budget());
  int ambient = static_cast<int>((m + 1) * file.ideal.universe()->size());
  return json{{"level", m},
              {"order", e},
              {"dimension", dim_json(d)},
              {"codimension", d ? json(ambient - *d) : json("empty")}};
}

json cmd_cylinder_codim(const Options& o) {
  auto x = variety_of(load_ideal_file(o.ideal));
  unsigned e = need(o.jac_order, "--jac-order");
  unsigned m = need(o.m, "--m");
  auto c = cylinder_codim(x, e, m, true, o.budget());
  return json{{"jac_order", e}, {"level", m}, {"codimension", c ? json(*c) : json("empty")}};
}

json cmd_lift(const Options& o) {
  auto file = load_ideal_file(o.ideal);
  std::size_t m = need(o.m, "--m");
  std::size_t e = need(o.jac_order, "--jac-order");
  auto u = arc_series(file, m + 1);
  const auto& f = file.ideal.generators();
  bool ok = liftable(f, u, m, e);
  json report{{"level", m}, {"jac_order", e}, {"liftable", ok}};
  if (ok) {
    json lifted = json::array();
    for (const auto& s : lift_step(f, u, m, e)) lifted.push_back(s.to_string());
    report["lifted"] = lifted;
  }
  return report;
}

json cmd_in_image(const Options& o) {
  auto file = load_ideal_file(o.ideal);
  std::size_t p = need(o.p, "--p");
  std::size_t m = need(o.m, "--m");
  std::size_t e = need(o.jac_order, "--jac-order");
  auto u = arc_series(file, p + 1);
  return json{{"level", m}, {"p", p}, {"jac_order", e}, {"in_image", in_image(file.ideal.generators(), u, m, p, e)}};
}

json cmd_mld_res(const Options& o) {
  auto data = with_file(o.data, [](const json& j) { return resolution_from_json(j); });
  auto q = weights(o);
  if (!q.empty()) {
    if (q.size() != data.weights.size())
      throw ValidationError("--q given " + std::to_string(q.size()) + " times for " +
                            std::to_string(data.weights.size()) + " weights");
    data.weights = q;
    data.normalize();
  }
  int nu_max = o.nu_max.value_or(3);
  if (nu_max < 1) throw ValidationError("--nu-max must be positive");
  auto divisors = mld_from_divisors(data);
  auto contact = mld_via_contact(data, nu_max);
  json report{{"mld", mld_json(divisors.value)},
              {"witness", data.divisors[divisors.witness].name},
              {"contact", json{{"mld", mld_json(contact.value)}, {"w", contact.w}, {"ell", contact.ell}}},
              {"agree", divisors.value == contact.value}};
  if (!o.w.empty()) {
    auto c = contact_codim_combinatorial(data, o.w, o.ell.value_or(0));
    report["contact_codim"] = c ? json(to_string(*c)) : json("empty");
  }
  return report;
}

json cmd_mld_jets(const Options& o) {
  auto file = load_pair(o.pair);
  auto b = pair_bounds(file, o);
  return jet_mld_json(mld_jet_estimate(file.pair, b));
}

json cmd_lc_check(const Options& o) {
  auto file = load_pair(o.pair);
  auto b = pair_bounds(file, o);
  auto r = lc_check(file.pair, b);
  json report{{"log_canonical", r.log_canonical}};
  if (r.violation)
    report["certificate"] = json{{"cell", cell_json(*r.violation)},
                                 {"codim", to_string(r.codim)},
                                 {"threshold", to_string(r.threshold)}};
  return report;
}

json cmd_ioa_check(const Options& o) {
  auto file = load_pair(o.pair);
  auto b = pair_bounds(file, o);
  if (!file.pair.variety) throw ValidationError("'" + o.pair + "': ioa-check needs a variety block");
  if (file.pair.jr) throw ValidationError("'" + o.pair + "': ioa-check covers the lci case, drop jr");
  auto r = ioa_check(*file.pair.variety, file.pair.y, file.pair.w, b);
  return json{{"left", jet_mld_json(r.left)}, {"right", jet_mld_json(r.right)}, {"agree", r.agree}};
}

json cmd_cov_probe(const Options& o) {
  unsigned m = need(o.m, "--m");
  return with_file(o.data, [&](const json& j) {
    auto source = make_universe(j.at("source_vars").get<std::vector<std::string>>());
    auto target = make_universe(j.at("target_vars").get<std::vector<std::string>>());
    std::vector<Polynomial> map;
    for (const auto& s : j.at("map")) map.push_back(parse_polynomial(s.get<std::string>(), source));
    if (map.size() != target->size()) throw ValidationError("map needs one polynomial per target variable");
    std::vector<ContactSpec> loci;
    for (const auto& t : j.at("targets")) {
      IdealPresentation z(target);
      for (const auto& g : t.at("gens")) z.add(parse_polynomial(g.get<std::string>(), target));
      loci.push_back({z, t.at("order").get<unsigned>(), mode_field(t), m});
    }
    unsigned e_max = o.jac_order ? static_cast<unsigned>(need(o.jac_order, "--jac-order")) : j.value("e_max", 2u);
    auto r = change_of_variable_probe(map, source, loci, e_max, m, o.budget());
    json pulled = json::array();
    for (const auto& c : r.pulled_back_codim) pulled.push_back(c ? json(*c) : json("empty"));
    return json{{"direct_codim", r.direct_codim ? json(*r.direct_codim) : json("empty")},
                {"pulled_back_codim", pulled},
                {"transformed_min", r.transformed_min ? json(*r.transformed_min) : json("empty")},
                {"argmin", r.argmin ? json(*r.argmin) : json(nullptr)},
                {"agree", r.agree}};
  });
}

}  // namespace

IdealFile ideal_file_from_json(const nlohmann::json& j) {
  auto universe = make_universe(j.at("vars").get<std::vector<std::string>>());
  IdealFile file{IdealPresentation(universe), std::nullopt, {}};
  for (const auto& g : j.at("gens")) file.ideal.add(parse_polynomial(g.get<std::string>(), universe));
  if (j.contains("expected_dim")) file.expected_dim = j.at("expected_dim").get<int>();
  if (j.contains("arc")) file.arc = j.at("arc").get<std::vector<std::string>>();
  return file;
}

IdealFile load_ideal_file(const std::string& path) {
  return with_file(path, [](const json& j) { return ideal_file_from_json(j); });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact jet-scheme, arc-space and minimal log discrepancy computations", "jetarc"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
    std::function<json(const Options&)> handler;
    std::vector<std::string> flags;
  };
  const std::vector<Command> commands{
      {"jet-eqs", "generators of the jet ideal at level --m", cmd_jet_eqs, {"ideal", "m"}},
      {"jet-dim", "dimension of the level --m jet scheme", cmd_jet_dim, {"ideal", "m", "max-pairs"}},
      {"jacobian", "Jacobian minors, singular locus and a generic complete intersection", cmd_jacobian,
       {"ideal", "seed", "max-pairs"}},
      {"contact-dim", "dimension of the jets with contact ≥ --order along the ideal", cmd_contact_dim,
       {"ideal", "m", "order", "max-pairs"}},
      {"cylinder-codim", "codimension of the jets with Jacobian order exactly --jac-order", cmd_cylinder_codim,
       {"ideal", "m", "jac-order", "max-pairs"}},
      {"lift", "whether the arc of the ideal file lifts from level --m", cmd_lift, {"ideal", "m", "jac-order"}},
      {"in-image", "whether the level --p jet is a truncation of a level --m jet", cmd_in_image,
       {"ideal", "m", "p", "jac-order"}},
      {"mld-res", "mld from resolution data", cmd_mld_res, {"data", "q", "w", "ell", "nu-max"}},
      {"mld-jets", "jet-theoretic mld estimate of a pair", cmd_mld_jets, {"pair", "q", "w", "m", "jac-order", "max-pairs"}},
      {"lc-check", "log canonicity within the search bounds", cmd_lc_check,
       {"pair", "q", "w", "m", "jac-order", "max-pairs"}},
      {"ioa-check", "both sides of inversion of adjunction for a complete intersection", cmd_ioa_check,
       {"pair", "q", "w", "m", "jac-order", "max-pairs"}},
      {"cov-probe", "change-of-variables comparison for a polynomial map", cmd_cov_probe,
       {"data", "m", "jac-order", "max-pairs"}},
  };

  std::map<CLI::App*, const Command*> by_app;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    by_app[sub] = &c;
    sub->add_flag("--json", o.json_out, "print a JSON report");
    for (const auto& flag : c.flags) {
      if (flag == "ideal") sub->add_option("--ideal", o.ideal, "ideal file {vars, gens, expected_dim?, arc?}")->required();
      if (flag == "data") sub->add_option("--data", o.data, "data file")->required();
      if (flag == "pair") sub->add_option("--pair", o.pair, "pair file")->required();
      if (flag == "m") sub->add_option("--m", o.m, "jet level");
      if (flag == "p") sub->add_option("--p", o.p, "lower jet level");
      if (flag == "jac-order") sub->add_option("--jac-order", o.jac_order, "Jacobian order e");
      if (flag == "order") sub->add_option("--order", o.order, "contact order");
      if (flag == "q") sub->add_option("--q", o.q, "weight a/b, once per component");
      if (flag == "w") sub->add_option("--w", o.w, "contact order, once per component");
      if (flag == "ell") sub->add_option("--ell", o.ell, "order along Z_r");
      if (flag == "seed") sub->add_option("--seed", o.seed, "seed of the first random combination");
      if (flag == "nu-max") sub->add_option("--nu-max", o.nu_max, "bound on Σ ν_j for the contact route (default 3)");
      if (flag == "max-pairs")
        sub->add_option("--max-pairs", o.max_pairs, "S-pair budget per Groebner basis")->capture_default_str();
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Success;
  } catch (const CLI::ParseError& e) {
    err << "jetarc: " << e.what() << "\n";
    return Invalid;
  }

  const Command* command = nullptr;
  for (auto* sub : app.get_subcommands()) command = by_app.at(sub);
  try {
    json report = command->handler(o);
    if (o.json_out)
      out << report.dump(2) << "\n";
    else
      render(report, out);
    return Success;
  } catch (const ValidationError& e) {
    err << "jetarc " << command->name << ": " << e.what() << "\n";
    return Invalid;
  } catch (const BudgetExceeded& e) {
    err << "jetarc " << command->name << ": budget exceeded (raise --max-pairs): " << e.what() << "\n";
    return OverBudget;
  } catch (const InvariantFailure& e) {
    err << "jetarc " << command->name << ": internal invariant failed: " << e.what() << "\n";
    return Internal;
  } catch (const json::exception& e) {
    err << "jetarc " << command->name << ": " << e.what() << "\n";
    return Invalid;
  } catch (const std::exception& e) {
    err << "jetarc " << command->name << ": unexpected failure: " << e.what() << "\n";
    return Internal;
  }
}

}  // namespace jetarc::cli
