#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkm/params.hpp"

namespace gkm::cli {

// Malformed command line: unknown flag, missing value, bad number.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a parameter constraint.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --help was given; carries the formatted help text.
struct HelpRequested {
  std::string text;
};

enum class Command { kEval, kGrid, kMoments, kPoly, kGenfun, kVerify, kSample, kConjEval, kConjVerify };

const char* command_name(Command c);

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct RunConfig {
  Command command = Command::kEval;
  std::optional<ParamSet> params;     // real-parameter commands
  std::optional<ConjParamSet> conj;   // conj-eval
  std::vector<double> x;
  std::optional<int> k;
  int m = 0;
  int K = 12;
  int n_points = 257;
  std::optional<double> tol;
  std::uint64_t seed = kDefaultSeed;
  std::int64_t count = 100000;
  std::string suite = "all";
  int joint = 0;  // conj-eval: 0 = f_Mk at --x, 2 = f2M grid, 3 = g3 grid
  std::string out;  // empty means stdout
};

/// argv[0] is the program name. Throws UsageError, ValidationError or
/// HelpRequested.
RunConfig parse_config(int argc, const char* const* argv);
RunConfig parse_config(const std::vector<std::string>& args);

}  // namespace gkm::cli
