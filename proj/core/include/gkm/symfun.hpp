#pragma once

#include <span>
#include <vector>

namespace gkm {

/// Coefficients of prod_i (1 + t a_i), i.e. the elementary symmetric
/// functions S_0..S_n. Works for real or complex scalars.
template <class T>
std::vector<T> elementary_symmetric(std::span<const T> a) {
  std::vector<T> s(a.size() + 1, T{0});
  s[0] = T{1};
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = i + 1; k >= 1; --k) s[k] += a[i] * s[k - 1];
  }
  return s;
}

/// S_0..S_n of one parameter vector.
class SymTable {
 public:
  SymTable() : s_{1.0} {}
  explicit SymTable(std::vector<double> s) : s_(std::move(s)) {}

  int n() const { return static_cast<int>(s_.size()) - 1; }
  /// S_k, and zero for k < 0 or k > n.
  double operator[](int k) const { return (k < 0 || k > n()) ? 0.0 : s_[k]; }
  std::span<const double> values() const { return s_; }

 private:
  std::vector<double> s_;
};

SymTable elementary_all(std::span<const double> a);

/// Complete homogeneous symmetric polynomial h_m(a): the sum of every
/// monomial of total degree m in a_1..a_n.
double delta(int m, std::span<const double> a);

/// h_0..h_{m_max} in one pass.
std::vector<double> delta_all(int m_max, std::span<const double> a);

}  // namespace gkm
