#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "jetarc/singloci.hpp"

namespace jetarc::cli {

enum ExitCode : int { Success = 0, Invalid = 2, OverBudget = 3, Internal = 4 };

/// Contents of an ideal file: {vars, gens, expected_dim?, arc?}. arc lists
/// one polynomial in t per variable.
struct IdealFile {
  IdealPresentation ideal;
  std::optional<int> expected_dim;
  std::vector<std::string> arc;
};

IdealFile ideal_file_from_json(const nlohmann::json& j);
IdealFile load_ideal_file(const std::string& path);

/// Runs one command. The report goes to out (human-readable, or a single
/// JSON document with --json); diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jetarc::cli
