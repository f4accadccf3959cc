// Test-only brute-force oracles. These deliberately avoid the type-class
// machinery: spectra are expanded to full d^n vectors and compared entry by
// entry, so they stay an independent check on the compressed path.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

// full d^n expansion of the n-fold product of `probs`, sorted descending
inline std::vector<double> expanded_product(const std::vector<double>& probs,
                                            int n) {
  std::vector<double> out{1.0};
  for (int i = 0; i < n; ++i) {
    std::vector<double> next;
    next.reserve(out.size() * probs.size());
    for (double x : out) {
      for (double p : probs) next.push_back(x * p);
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// p ≺ q by direct prefix sums over the expanded vectors, zero padding the
// shorter one
inline bool majorizes_expanded(const std::vector<double>& p,
                               const std::vector<double>& q,
                               double tol = 1e-9) {
  const std::size_t len = std::max(p.size(), q.size());
  double sp = 0.0, sq = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    if (k < p.size()) sp += p[k];
    if (k < q.size()) sq += q[k];
    if (sp > sq + tol) return false;
  }
  return true;
}

inline double entropy_bits(const std::vector<double>& probs) {
  double s = 0.0;
  for (double p : probs) {
    if (p > 0) s -= p * std::log2(p);
  }
  return s;
}

}  // namespace oracle
