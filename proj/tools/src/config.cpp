#include "gkm_cli/config.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include "gkm/errors.hpp"
#include "gkm_cli/verify.hpp"

namespace gkm::cli {
namespace {

using nlohmann::json;

struct Raw {
  std::vector<double> a, rho, y, x;
  std::optional<double> c;
  std::string params_file;
};

void add_params(CLI::App* sub, Raw& raw) {
  sub->add_option("--a", raw.a, "Parameters a_1..a_n, comma separated")->delimiter(',');
  sub->add_option("--c", raw.c, "Scale c > 0 (default 1)");
  sub->add_option("--params-file", raw.params_file, "JSON file {\"c\": ..., \"a\": [...]}");
}

void add_conj_params(CLI::App* sub, Raw& raw) {
  sub->add_option("--rho", raw.rho, "rho_1..rho_k, comma separated")->delimiter(',');
  sub->add_option("--y", raw.y, "y_1..y_k, comma separated")->delimiter(',');
  sub->add_option("--params-file", raw.params_file, "JSON file {\"rho\": [...], \"y\": [...]}");
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--params-file: cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("--params-file: " + path + ": " + e.what());
  }
}

std::vector<double> json_reals(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  if (!j.at(key).is_array()) throw UsageError(std::string("--params-file: \"") + key + "\" must be an array");
  std::vector<double> v;
  for (const auto& e : j.at(key)) {
    if (!e.is_number()) throw UsageError(std::string("--params-file: \"") + key + "\" must hold numbers");
    v.push_back(e.get<double>());
  }
  return v;
}

ParamSet make_params(const Raw& raw) {
  std::vector<double> a = raw.a;
  double c = raw.c.value_or(1.0);
  if (!raw.params_file.empty()) {
    if (!raw.a.empty() || raw.c) throw UsageError("--params-file cannot be combined with --a or --c");
    const json j = read_json(raw.params_file);
    a = json_reals(j, "a");
    if (j.contains("c")) {
      if (!j.at("c").is_number()) throw UsageError("--params-file: \"c\" must be a number");
      c = j.at("c").get<double>();
    }
  }
  try {
    return ParamSet(std::move(a), c);
  } catch (const InvalidParameters& e) {
    throw ValidationError(e.what());
  }
}

ConjParamSet make_conj(const Raw& raw) {
  std::vector<double> rho = raw.rho, y = raw.y;
  if (!raw.params_file.empty()) {
    if (!raw.rho.empty() || !raw.y.empty()) {
      throw UsageError("--params-file cannot be combined with --rho or --y");
    }
    const json j = read_json(raw.params_file);
    rho = json_reals(j, "rho");
    y = json_reals(j, "y");
  }
  try {
    return ConjParamSet(std::move(rho), std::move(y));
  } catch (const InvalidParameters& e) {
    throw ValidationError(e.what());
  }
}

void require_in_support(const std::vector<double>& xs, double c) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(std::abs(xs[i]) <= c)) {
      throw ValidationError("x_" + std::to_string(i + 1) + " = " + std::to_string(xs[i]) +
                            " lies outside the support [-c, c] with c = " + std::to_string(c));
    }
  }
}

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::kEval: return "eval";
    case Command::kGrid: return "grid";
    case Command::kMoments: return "moments";
    case Command::kPoly: return "poly";
    case Command::kGenfun: return "genfun";
    case Command::kVerify: return "verify";
    case Command::kSample: return "sample";
    case Command::kConjEval: return "conj-eval";
    case Command::kConjVerify: return "conj-verify";
  }
  return "?";
}

RunConfig parse_config(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return parse_config(args);
}

RunConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Generalized Kesten-McKay densities: evaluation, verification, sampling", "gkm"};
  app.require_subcommand(1);
  RunConfig cfg;
  Raw raw;
  std::optional<int> k;
  std::optional<double> tol;

  auto* eval = app.add_subcommand("eval", "Density at the given points");
  add_params(eval, raw);
  eval->add_option("--x", raw.x, "Evaluation points, comma separated")->delimiter(',')->required();

  auto* grid = app.add_subcommand("grid", "Density on a Chebyshev extrema grid over [-c, c]");
  add_params(grid, raw);
  grid->add_option("--n-points", cfg.n_points, "Grid size (>= 2)");

  auto* moments = app.add_subcommand("moments", "Raw moments k = 0..K");
  add_params(moments, raw);
  moments->add_option("--K", cfg.K, "Highest order");
  moments->add_option("--k", k, "Single order instead of 0..K");

  auto* poly = app.add_subcommand("poly", "U-basis coefficients of the orthogonal polynomial P_m");
  add_params(poly, raw);
  poly->add_option("--m", cfg.m, "Degree");

  auto* genfun = app.add_subcommand("genfun", "Numerator polynomial Q_n and B_{n,0..K}");
  add_params(genfun, raw);
  genfun->add_option("--K", cfg.K, "Length of the B prefix");

  auto* verify = app.add_subcommand("verify", "Run an invariant suite and emit a JSON report");
  verify->add_option("--suite", cfg.suite, "Suite name");
  verify->add_option("--tol", tol, "Replace every check's threshold");

  auto* smp = app.add_subcommand("sample", "Inverse-transform samples (CSV plus JSON sidecar)");
  add_params(smp, raw);
  smp->add_option("--count", cfg.count, "Number of draws");
  smp->add_option("--seed", cfg.seed, "Stream seed");
  smp->add_option("--n-points", cfg.n_points, "CDF grid size (>= 64)");

  auto* conj_eval = app.add_subcommand("conj-eval", "Conjugate-pair density, or 2D/3D joint grids");
  add_conj_params(conj_eval, raw);
  conj_eval->add_option("--x", raw.x, "Evaluation points, comma separated")->delimiter(',');
  conj_eval->add_option("--joint", cfg.joint, "2: bivariate grid, 3: trivariate grid (uses --rho only)")
      ->check(CLI::IsMember({0, 2, 3}));
  conj_eval->add_option("--n-points", cfg.n_points, "Points per axis for --joint");

  auto* conj_verify = app.add_subcommand("conj-verify", "Conjugate and Markov suites");
  conj_verify->add_option("--tol", tol, "Replace every check's threshold");

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--out", cfg.out, "Output file (default stdout)");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  const std::pair<const char*, Command> table[] = {
      {"eval", Command::kEval},       {"grid", Command::kGrid},
      {"moments", Command::kMoments}, {"poly", Command::kPoly},
      {"genfun", Command::kGenfun},   {"verify", Command::kVerify},
      {"sample", Command::kSample},   {"conj-eval", Command::kConjEval},
      {"conj-verify", Command::kConjVerify}};
  for (const auto& [n, c] : table) {
    if (name == n) cfg.command = c;
  }
  cfg.k = k;
  cfg.tol = tol;
  cfg.x = raw.x;

  if (tol && !(*tol > 0.0)) throw ValidationError("--tol must be positive");

  switch (cfg.command) {
    case Command::kEval:
      cfg.params = make_params(raw);
      require_in_support(cfg.x, cfg.params->c());
      break;
    case Command::kGrid:
      cfg.params = make_params(raw);
      if (cfg.n_points < 2) throw ValidationError("--n-points must be >= 2");
      break;
    case Command::kMoments:
      cfg.params = make_params(raw);
      if (cfg.K < 0 || cfg.K > 64) throw ValidationError("--K must lie in [0, 64]");
      if (k && (*k < 0 || *k > 64)) throw ValidationError("--k must lie in [0, 64]");
      break;
    case Command::kPoly:
      cfg.params = make_params(raw);
      if (cfg.m < 0) throw ValidationError("--m must be >= 0");
      break;
    case Command::kGenfun:
      cfg.params = make_params(raw);
      if (cfg.K < 0) throw ValidationError("--K must be >= 0");
      break;
    case Command::kVerify: {
      const auto names = suite_names();
      if (std::find(names.begin(), names.end(), cfg.suite) == names.end()) {
        std::string list;
        for (const auto& s : names) list += (list.empty() ? "" : ", ") + s;
        throw UsageError("--suite: unknown suite '" + cfg.suite + "' (one of " + list + ")");
      }
      break;
    }
    case Command::kSample:
      cfg.params = make_params(raw);
      if (cfg.count < 1) throw ValidationError("--count must be >= 1");
      if (cfg.n_points < 64) throw ValidationError("--n-points must be >= 64 for sampling");
      if (cfg.out.empty()) throw UsageError("sample: --out is required (the sidecar goes to <out>.json)");
      break;
    case Command::kConjEval:
      if (cfg.joint == 0) {
        cfg.conj = make_conj(raw);
        if (cfg.x.empty()) throw UsageError("conj-eval: --x is required unless --joint is given");
        require_in_support(cfg.x, 1.0);
      } else {
        Raw only_rho = raw;
        only_rho.y.assign(raw.rho.size(), 0.0);
        if (!raw.params_file.empty()) throw UsageError("--joint takes --rho directly");
        if (static_cast<int>(raw.rho.size()) != (cfg.joint == 2 ? 1 : 3)) {
          throw UsageError("--joint " + std::to_string(cfg.joint) + " needs " +
                           (cfg.joint == 2 ? "one --rho value" : "three --rho values"));
        }
        cfg.conj = make_conj(only_rho);
        if (cfg.n_points < 2) throw ValidationError("--n-points must be >= 2");
      }
      break;
    case Command::kConjVerify:
      cfg.suite = "conj";
      break;
  }
  return cfg;
}

}  // namespace gkm::cli
