// Scripted CLI invocations compared byte for byte with stored outputs.
// cases.json lists {"name", "args", "exit"}; <name>.json holds the stdout.
// Setting ROBBA_UPDATE_GOLDEN=1 rewrites the stored outputs.
#pragma once

#include "robba/cli/cli.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace robba::testing {

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
  int exit = 0;
};

struct GoldenOutcome {
  std::string name;
  bool ok = false;
  std::string detail;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<GoldenCase> golden_cases(const std::string& dir) {
  const auto j = nlohmann::json::parse(slurp(dir + "/cases.json"));
  std::vector<GoldenCase> out;
  for (const auto& c : j) out.push_back({c["name"], c["args"], c.value("exit", 0)});
  return out;
}

inline std::pair<int, std::string> run_case(const GoldenCase& c) {
  std::ostringstream out, err;
  const int status = cli::run_cli(c.args, out, err);
  return {status, out.str()};
}

inline std::vector<GoldenOutcome> run_golden(const std::string& dir) {
  const char* update = std::getenv("ROBBA_UPDATE_GOLDEN");
  std::vector<GoldenOutcome> outcomes;
  for (const auto& c : golden_cases(dir)) {
    const auto path = dir + "/" + c.name + ".json";
    const auto [status, first] = run_case(c);
    const auto [status2, second] = run_case(c);
    if (update && std::string(update) == "1") {
      std::ofstream(path, std::ios::binary) << first;
    }
    GoldenOutcome o{c.name, false, {}};
    if (first != second || status != status2) {
      o.detail = "output differs between runs";
    } else if (status != c.exit) {
      o.detail = "exit " + std::to_string(status) + ", expected " + std::to_string(c.exit);
    } else if (first != slurp(path)) {
      o.detail = "output differs from " + path + ":\n" + first;
    } else {
      o.ok = true;
    }
    outcomes.push_back(std::move(o));
  }
  return outcomes;
}

}  // namespace robba::testing
