#include "gkm/symfun.hpp"

#include "gkm/errors.hpp"

namespace gkm {

SymTable elementary_all(std::span<const double> a) {
  return SymTable(elementary_symmetric<double>(a));
}

std::vector<double> delta_all(int m_max, std::span<const double> a) {
  if (m_max < 0) throw PreconditionViolation("delta: m >= 0 required");
  // h over the empty prefix is (1, 0, 0, ...); appending a_i gives
  // h'_m = h_m + a_i h'_{m-1}.
  std::vector<double> h(m_max + 1, 0.0);
  h[0] = 1.0;
  for (double ai : a) {
    for (int m = 1; m <= m_max; ++m) h[m] += ai * h[m - 1];
  }
  return h;
}

double delta(int m, std::span<const double> a) { return delta_all(m, a).back(); }

}  // namespace gkm
