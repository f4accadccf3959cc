#include "entax/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace entax {

namespace {

// margin and first failing k over the padded common length
ConvertibilityVerdict prefix_compare(const std::vector<double>& p,
                                     const std::vector<double>& q,
                                     double tol) {
  const std::size_t len = std::max(p.size(), q.size());
  ConvertibilityVerdict v;
  v.convertible = true;
  v.margin = std::numeric_limits<double>::infinity();
  double sp = 0.0, sq = 0.0, cp = 0.0, cq = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    if (k < p.size()) {
      double y = p[k] - cp, t = sp + y;
      cp = (t - sp) - y;
      sp = t;
    }
    if (k < q.size()) {
      double y = q[k] - cq, t = sq + y;
      cq = (t - sq) - y;
      sq = t;
    }
    const double slack = sq - sp;
    if (slack < v.margin) v.margin = slack;
    if (slack < -tol && v.convertible) {
      v.convertible = false;
      v.failing_prefix = k + 1;
    }
  }
  return v;
}

}  // namespace

bool majorizes(const SchmidtVector& p, const SchmidtVector& q, double tol) {
  return prefix_compare(p.probs(), q.probs(), tol).convertible;
}

ConvertibilityVerdict convertible_single_copy(const SchmidtVector& a,
                                              const SchmidtVector& b,
                                              double tol) {
  return prefix_compare(a.probs(), b.probs(), tol);
}

std::vector<double> sample_ordered_simplex(int dim, std::mt19937_64& rng) {
  if (dim < 1) throw std::invalid_argument("sample_ordered_simplex: dim < 1");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(dim));
  double sum = 0.0;
  for (double& x : v) {
    double u;
    do {
      u = unit(rng);
    } while (u <= 0.0);
    x = -std::log(u);
    sum += x;
  }
  for (double& x : v) x /= sum;
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

SchmidtVector random_state(int dim, std::mt19937_64& rng) {
  return SchmidtVector(sample_ordered_simplex(dim, rng));
}

SchmidtVector apply_t_transforms(const SchmidtVector& q, int count,
                                 std::mt19937_64& rng) {
  std::vector<double> v = q.probs();
  if (v.size() < 2) return q;
  std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int step = 0; step < count; ++step) {
    std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (v[i] < v[j]) std::swap(i, j);
    if (v[i] - v[j] < 1e-12) continue;
    const double delta = unit(rng) * 0.5 * (v[i] - v[j]);
    v[i] -= delta;
    v[j] += delta;
  }
  std::sort(v.begin(), v.end(), std::greater<>());
  return SchmidtVector(std::move(v));
}

std::optional<IncomparablePair> sample_incomparable_pair(int dim,
                                                         std::uint64_t seed,
                                                         int max_attempts) {
  if (dim < 3) {
    throw std::invalid_argument(
        "sample_incomparable_pair: dim must be >= 3 (dimension-2 spectra are "
        "totally ordered)");
  }
  std::mt19937_64 rng(seed);
  SchmidtVector ancestor(
      std::vector<double>(static_cast<std::size_t>(dim), 1.0 / dim));
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    SchmidtVector a = random_state(dim, rng);
    SchmidtVector b = random_state(dim, rng);
    if (!majorizes(a, b) && !majorizes(b, a)) {
      return IncomparablePair{std::move(a), std::move(b), ancestor};
    }
  }
  return std::nullopt;
}

}  // namespace entax
