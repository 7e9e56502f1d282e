#pragma once

// Command-line front end: polyemden <command> [--key value ...]
//
// Settings are merged as defaults < config file (--config, `key = value`
// lines) < POLYEMDEN_<KEY> environment variables < command-line flags.

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyemden/shooting.hpp"

namespace polyemden {

enum ExitCode : int { kExitOk = 0, kExitValidation = 2, kExitNumerical = 3, kExitInvariant = 4 };

struct RunConfig {
  std::string command;
  ProblemParams params;
  bool theta_given = false;
  std::string p_text = "2";
  std::string q_text = "2";
  std::size_t grid = 512;
  double tol = 1e-8;
  std::uint64_t seed = 20240611;
  std::string out = "out";
  unsigned threads = 0;
  int starts = 100;
  double box_lo = 1.0;
  double box_hi = 1e5;
  double dedup = 1e-5;  ///< relative distance below which two hits are one solution
  std::string input;  ///< classify: CSV with N,alpha,beta,p,q
  double t_max = 50.0;
  double ds = 0.05;
  double norm_ceiling = 1e6;
  int max_points = 2000;
  double window = 10.0;
  int tail = 6;
  double growth = 1e3;
  std::string which = "beta";  ///< capacity: alpha (exponent p') or beta (exponent q')
  double exponent = 0.0;       ///< capacity exponent; 0 picks the conjugate
  double gamma = 0.0;          ///< cutoff power; 0 picks the default
  std::string radii = "10,20,50,100,200,500,1000";

  /// key = value lines, sorted by key, with every effective setting.
  std::string echo() const;
};

/// Parses `key = value` lines; '#' starts a comment.
std::map<std::string, std::string> parse_config_text(const std::string& text);

nlohmann::json record_json(const SolutionRecord& rec, const std::string& profile_csv_path);

/// Runs one command; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyemden
