#include "gkm/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gkm/errors.hpp"

namespace gkm {
namespace {

std::string indexed(const char* name, std::size_t i, double v) {
  return std::string(name) + "_" + std::to_string(i + 1) + " = " + std::to_string(v);
}

}  // namespace

ParamSet::ParamSet(std::vector<double> a, double c)
    : a_(std::move(a)), c_(c), min_gap_(std::numeric_limits<double>::infinity()), max_abs_(0.0) {
  if (!(c_ > 0.0) || !std::isfinite(c_)) {
    throw InvalidParameters("scale c must be positive and finite, got " + std::to_string(c_));
  }
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!(std::abs(a_[i]) < 1.0)) {
      throw InvalidParameters(indexed("a", i, a_[i]) + " violates |a_i| < 1");
    }
    max_abs_ = std::max(max_abs_, std::abs(a_[i]));
  }
  std::vector<double> sorted = a_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    min_gap_ = std::min(min_gap_, sorted[i] - sorted[i - 1]);
  }
}

ConjParamSet::ConjParamSet(std::vector<double> rho, std::vector<double> y)
    : rho_(std::move(rho)), y_(std::move(y)) {
  if (rho_.size() != y_.size()) {
    throw InvalidParameters("rho and y must have equal length (" + std::to_string(rho_.size()) +
                            " vs " + std::to_string(y_.size()) + ")");
  }
  for (std::size_t i = 0; i < rho_.size(); ++i) {
    if (!(std::abs(rho_[i]) < 1.0)) {
      throw InvalidParameters(indexed("rho", i, rho_[i]) + " violates |rho_i| < 1");
    }
    if (!(std::abs(y_[i]) <= 1.0)) {
      throw InvalidParameters(indexed("y", i, y_[i]) + " violates |y_i| <= 1");
    }
  }
}

}  // namespace gkm
