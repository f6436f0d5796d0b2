#include "gkm_cli/commands.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "gkm/conjugate.hpp"
#include "gkm/counter_rng.hpp"
#include "gkm/kesten_mckay.hpp"
#include "gkm/orthopoly.hpp"
#include "gkm/sampler.hpp"
#include "gkm_cli/verify.hpp"

namespace gkm::cli {
namespace {

class Csv {
 public:
  Csv(std::ostream& os, const std::string& header) : os_(os) {
    os_ << "# schema_version: " << kSchemaVersion << '\n' << header << '\n';
  }
  template <class... Ts>
  void row(const Ts&... cells) {
    bool first = true;
    ((os_ << (first ? "" : ",") << cell(cells), first = false), ...);
    os_ << '\n';
  }

 private:
  static std::string cell(double v) { return format_double(v); }
  static std::string cell(int v) { return std::to_string(v); }
  static std::string cell(const char* v) { return v; }
  std::ostream& os_;
};

// Chebyshev extrema -cos(i pi/(n-1)), i = 0..n-1, on [-1, 1].
std::vector<double> extrema_grid(int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = -std::cos(std::numbers::pi * i / (n - 1));
  xs.front() = -1.0;
  xs.back() = 1.0;
  return xs;
}

void eval(const RunConfig& cfg, std::ostream& os) {
  const KestenMcKay f(*cfg.params);
  Csv csv(os, "x,density");
  for (double x : cfg.x) csv.row(x, f.pdf(x));
}

void grid(const RunConfig& cfg, std::ostream& os) {
  const KestenMcKay f(*cfg.params);
  const double c = cfg.params->c();
  Csv csv(os, "x,density");
  for (double u : extrema_grid(cfg.n_points)) {
    const double x = u * c;
    csv.row(x, f.pdf(std::clamp(x, -c, c)));
  }
}

void moments(const RunConfig& cfg, std::ostream& os) {
  Csv csv(os, "k,moment");
  const int lo = cfg.k.value_or(0), hi = cfg.k.value_or(cfg.K);
  for (int k = lo; k <= hi; ++k) csv.row(k, moment(*cfg.params, k));
}

void poly(const RunConfig& cfg, std::ostream& os) {
  const OrthoPoly p = p_coeffs(cfg.m, *cfg.params);
  Csv csv(os, "j,u_index,coefficient");
  for (const auto& t : p.terms()) csv.row(t.j, t.u_index, t.coefficient);
}

void genfun(const RunConfig& cfg, std::ostream& os) {
  const auto q = q_poly(*cfg.params);
  const BSeq b = b_from_genfun(*cfg.params, cfg.K);
  Csv csv(os, "series,index,value");
  for (std::size_t i = 0; i < q.size(); ++i) csv.row("Q", static_cast<int>(i), q[i]);
  for (int k = 0; k <= b.order(); ++k) csv.row("B", k, b.values[k]);
}

int verify(const RunConfig& cfg, std::ostream& os) {
  const Report r = run_verify(cfg.suite, cfg.tol);
  os << report_json(r);
  return r.pass() ? 0 : 1;
}

void sample_cmd(const RunConfig& cfg, std::ostream& os) {
  const ParamSet& p = *cfg.params;
  const CdfTable table = build_cdf(p, cfg.n_points);
  const auto xs = sample(table, cfg.count, cfg.seed);
  Csv csv(os, "x");
  for (double x : xs) csv.row(x * p.c());

  nlohmann::ordered_json side;
  side["schema_version"] = kSchemaVersion;
  side["command"] = "sample";
  side["params"] = {{"c", p.c()}, {"a", std::vector<double>(p.a().begin(), p.a().end())}};
  side["count"] = cfg.count;
  side["seed"] = cfg.seed;
  side["cdf_points"] = cfg.n_points;
  side["generator"] = "splitmix64 finalizer over a Weyl counter, 53-bit midpoint uniforms";
  std::ofstream meta(cfg.out + ".json");
  if (!meta) throw std::runtime_error("cannot write " + cfg.out + ".json");
  meta << side.dump(2) << '\n';
}

void conj_eval(const RunConfig& cfg, std::ostream& os) {
  const ConjParamSet& p = *cfg.conj;
  if (cfg.joint == 0) {
    const ConjugateDensity f(p);
    Csv csv(os, "x,density");
    for (double x : cfg.x) csv.row(x, f.pdf(x));
    return;
  }
  const auto axis = extrema_grid(cfg.n_points);
  if (cfg.joint == 2) {
    const double rho = p.rho()[0];
    Csv csv(os, "x,y,value");
    for (double x : axis) {
      for (double y : axis) csv.row(x, y, f2m(x, y, rho));
    }
    return;
  }
  const double r1 = p.rho()[0], r2 = p.rho()[1], r3 = p.rho()[2];
  require_g3_nonnegative(r1, r2, r3);
  Csv csv(os, "x,y,z,value");
  for (double x : axis) {
    for (double y : axis) {
      for (double z : axis) csv.row(x, y, z, g3(x, y, z, r1, r2, r3));
    }
  }
}

int dispatch(const RunConfig& cfg, std::ostream& os) {
  switch (cfg.command) {
    case Command::kEval: eval(cfg, os); return 0;
    case Command::kGrid: grid(cfg, os); return 0;
    case Command::kMoments: moments(cfg, os); return 0;
    case Command::kPoly: poly(cfg, os); return 0;
    case Command::kGenfun: genfun(cfg, os); return 0;
    case Command::kVerify:
    case Command::kConjVerify: return verify(cfg, os);
    case Command::kSample: sample_cmd(cfg, os); return 0;
    case Command::kConjEval: conj_eval(cfg, os); return 0;
  }
  return 0;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

int run(const RunConfig& cfg, std::ostream& out) {
  if (cfg.out.empty()) return dispatch(cfg, out);
  std::ofstream file(cfg.out);
  if (!file) throw std::runtime_error("cannot write " + cfg.out);
  const int status = dispatch(cfg, file);
  file.close();
  if (!file) throw std::runtime_error("error writing " + cfg.out);
  return status;
}

}  // namespace gkm::cli
