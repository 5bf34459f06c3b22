#include <sstream>

#include "doctest.h"
#include "jetarc/cli.hpp"

using namespace jetarc;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  for (auto& a : args)
    if (a.rfind("@", 0) == 0) a = std::string(JETARC_DATA_DIR) + "/" + a.substr(1);
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  auto r = run(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("command examples") {
  auto eqs = run_json({"jet-eqs", "--ideal", "@cusp.json", "--m", "2"});
  CHECK(eqs["count"] == 3);
  CHECK(eqs["generators"][0] == "-y_0^3 + x_0^2");

  CHECK(run_json({"cylinder-codim", "--ideal", "@cusp.json", "--jac-order", "3", "--m", "3"})["codimension"] == 2);
  CHECK(run_json({"jet-dim", "--ideal", "@cusp.json", "--m", "3"})["dimension"] == 4);

  auto res = run_json({"mld-res", "--data", "@cusp_res.json", "--q", "5/6"});
  CHECK(res["mld"] == "0");
  CHECK(res["witness"] == "E3");
  CHECK(res["agree"] == true);
  CHECK(run_json({"mld-res", "--data", "@cusp_res.json", "--q", "1"})["mld"] == "-inf");
  CHECK(run_json({"mld-res", "--data", "@cusp_res.json", "--w", "7"})["contact_codim"] == "6");

  auto jets = run_json({"mld-jets", "--pair", "@cusp_pair.json", "--q", "1/2"});
  CHECK(jets["value"] == "1");
  CHECK(jets["witness"]["w"] == nlohmann::json::array({2}));

  auto lc = run_json({"lc-check", "--pair", "@cusp_pair.json", "--q", "1"});
  CHECK(lc["log_canonical"] == false);
  CHECK(lc["certificate"]["codim"] == "5");

  auto ioa = run_json({"ioa-check", "--pair", "@quadric_cone_pair.json"});
  CHECK(ioa["left"]["value"] == "1");
  CHECK(ioa["right"]["value"] == "1");
  CHECK(ioa["agree"] == true);

  auto cov = run_json({"cov-probe", "--data", "@blowup_chart.json", "--m", "3"});
  CHECK(cov["transformed_min"] == 2);
  CHECK(cov["argmin"] == 1);
  CHECK(cov["agree"] == true);

  CHECK(run_json({"lift", "--ideal", "@cusp_arc.json", "--m", "5", "--jac-order", "3"})["liftable"] == true);
  CHECK(run_json({"in-image", "--ideal", "@cusp_arc.json", "--p", "5", "--m", "8", "--jac-order", "3"})["in_image"] ==
        true);
  CHECK(run_json({"contact-dim", "--ideal", "@cusp.json", "--order", "6", "--m", "5"})["codimension"] == 5);
  CHECK(run_json({"jacobian", "--ideal", "@cusp.json"})["singular_locus_dim"] == 0);
}

TEST_CASE("human-readable reports") {
  auto r = run({"mld-res", "--data", "@cusp_res.json", "--q", "5/6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("mld: 0\n") != std::string::npos);
  CHECK(r.out.find("witness: E3\n") != std::string::npos);
}

TEST_CASE("exit codes and diagnostics") {
  auto unknown = run({"jet-dim", "--ideal", "@cusp.json", "--m", "2", "--bogus"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("--bogus") != std::string::npos);

  auto missing = run({"mld-res", "--data", "nowhere.json"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("nowhere.json") != std::string::npos);

  auto bad_q = run({"mld-res", "--data", "@cusp_res.json", "--q", "five"});
  CHECK(bad_q.code == 2);
  CHECK(bad_q.err.find("--q") != std::string::npos);

  auto no_level = run({"jet-eqs", "--ideal", "@cusp.json"});
  CHECK(no_level.code == 2);
  CHECK(no_level.err.find("--m") != std::string::npos);

  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({}).code == 2);

  auto budget = run({"jet-dim", "--ideal", "@cusp.json", "--m", "4", "--max-pairs", "1"});
  CHECK(budget.code == 3);

  auto unstable = run({"mld-jets", "--pair", "@cusp_pair.json", "--m", "3"});
  CHECK(unstable.code == 2);
  CHECK(unstable.err.find("m_max") != std::string::npos);
}

TEST_CASE("property: JSON reports round-trip byte for byte") {
  std::vector<std::vector<std::string>> commands{
      {"jet-eqs", "--ideal", "@cusp.json", "--m", "3"},
      {"mld-res", "--data", "@node_res.json", "--q", "1"},
      {"mld-jets", "--pair", "@cusp_pair.json", "--q", "3/4"},
      {"cov-probe", "--data", "@blowup_chart.json", "--m", "3"},
      {"jacobian", "--ideal", "@cusp.json"},
  };
  for (auto args : commands) {
    CAPTURE(args[0]);
    args.push_back("--json");
    auto first = run(args);
    REQUIRE(first.code == 0);
    CHECK(nlohmann::json::parse(first.out).dump(2) + "\n" == first.out);
    CHECK(run(args).out == first.out);
  }
}
