#include "entax/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace entax {

namespace {

double kahan_sum(const std::vector<double>& v) {
  double s = 0.0, c = 0.0;
  for (double x : v) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

}  // namespace

SchmidtVector::SchmidtVector(std::vector<double> probs, std::string label)
    : label_(std::move(label)) {
  if (probs.empty()) {
    throw std::invalid_argument("SchmidtVector: empty spectrum");
  }
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument("SchmidtVector: negative or non-finite entry");
    }
  }
  double raw_sum = kahan_sum(probs);
  if (std::abs(raw_sum - 1.0) > kSumTolerance) {
    throw std::invalid_argument("SchmidtVector: probabilities sum to " +
                                std::to_string(raw_sum) + ", expected 1");
  }
  std::erase_if(probs, [](double p) { return p < kPruneThreshold; });
  if (probs.empty()) {
    throw std::invalid_argument("SchmidtVector: all entries below prune threshold");
  }
  std::sort(probs.begin(), probs.end(), std::greater<>());
  double kept = kahan_sum(probs);
  for (double& p : probs) p /= kept;
  probs_ = std::move(probs);
}

SchmidtVector schmidt_from_amplitudes(
    const std::vector<std::vector<std::complex<double>>>& amps,
    std::string label) {
  if (amps.empty() || amps.front().empty()) {
    throw std::invalid_argument("schmidt_from_amplitudes: empty matrix");
  }
  const std::size_t rows = amps.size();
  const std::size_t cols = amps.front().size();
  for (const auto& row : amps) {
    if (row.size() != cols) {
      throw std::invalid_argument("schmidt_from_amplitudes: ragged matrix");
    }
  }

  // Work column-wise on the narrower side; the spectrum is invariant under
  // conjugate transposition.
  const bool flip = cols > rows;
  const std::size_t n = flip ? rows : cols;
  const std::size_t m = flip ? cols : rows;
  std::vector<std::vector<std::complex<double>>> col(n,
      std::vector<std::complex<double>>(m));
  double fro2 = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      fro2 += std::norm(amps[r][c]);
      if (flip) {
        col[r][c] = std::conj(amps[r][c]);
      } else {
        col[c][r] = amps[r][c];
      }
    }
  }
  if (fro2 < 1e-24) {
    throw DegenerateStateError("schmidt_from_amplitudes: zero amplitude matrix");
  }
  if (std::abs(std::sqrt(fro2) - 1.0) > 1e-6) {
    throw NormalizationError(
        "schmidt_from_amplitudes: Frobenius norm " + std::to_string(std::sqrt(fro2)) +
        ", expected 1");
  }

  // One-sided Jacobi: sweep column pairs until all are orthogonal to 1e-12
  // relative to their norms. Squared column norms then equal the squared
  // singular values.
  constexpr double kConv = 1e-12;
  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double worst = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        std::complex<double> g{0.0, 0.0};
        double alpha = 0.0, beta = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
          alpha += std::norm(col[p][k]);
          beta += std::norm(col[q][k]);
          g += std::conj(col[p][k]) * col[q][k];
        }
        const double ga = std::abs(g);
        const double scale = std::sqrt(alpha * beta);
        if (scale <= 0.0 || ga <= kConv * scale) continue;
        worst = std::max(worst, ga / scale);
        const std::complex<double> phase = g / ga;
        const double zeta = (beta - alpha) / (2.0 * ga);
        const double t = (zeta >= 0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        for (std::size_t k = 0; k < m; ++k) {
          const std::complex<double> u = col[p][k];
          const std::complex<double> w = std::conj(phase) * col[q][k];
          col[p][k] = cs * u - sn * w;
          col[q][k] = phase * (sn * u + cs * w);
        }
      }
    }
    if (worst <= kConv) break;
  }

  std::vector<double> probs(n);
  for (std::size_t p = 0; p < n; ++p) {
    double s = 0.0;
    for (std::size_t k = 0; k < m; ++k) s += std::norm(col[p][k]);
    probs[p] = s;
  }
  // Renormalize exactly to absorb the 1e-6 input slack.
  double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  for (double& p : probs) p /= total;
  return SchmidtVector(std::move(probs), std::move(label));
}

SchmidtVector tensor(const SchmidtVector& a, const SchmidtVector& b) {
  std::vector<double> out;
  out.reserve(a.rank() * b.rank());
  for (double pa : a.probs()) {
    for (double pb : b.probs()) out.push_back(pa * pb);
  }
  return SchmidtVector(std::move(out));
}

double entropy(const SchmidtVector& a) {
  double s = 0.0;
  for (double p : a.probs()) s -= p * std::log2(p);
  return std::max(s, 0.0);
}

double min_entropy(const SchmidtVector& a) {
  return std::max(-std::log2(a.max_prob()), 0.0);
}

double rank_entropy(const SchmidtVector& a) {
  return std::log2(static_cast<double>(a.rank()));
}

}  // namespace entax
