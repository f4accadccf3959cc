#include "entax/asymptotic.hpp"

#include <cmath>
#include <limits>
#include <thread>

namespace entax {

namespace {

int search_upper_bound(const SchmidtVector& a, int n) {
  const int log_dim = static_cast<int>(
      std::ceil(std::log2(static_cast<double>(a.rank()))));
  return 4 * n * std::max(log_dim, 1);
}

}  // namespace

bool dilution_feasible(const SchmidtVector& e, int m, const SchmidtVector& a,
                       int n, double epsilon, std::size_t class_budget) {
  const TypeClassSpectrum source = product_spectrum(e, m, class_budget);
  const TypeClassSpectrum target = product_spectrum(a, n, class_budget);
  return spectra_majorizes(source, smoothed_truncate(target, epsilon));
}

bool distillation_feasible(const SchmidtVector& a, int n,
                           const SchmidtVector& e, int m, double epsilon,
                           std::size_t class_budget) {
  const TypeClassSpectrum source = product_spectrum(a, n, class_budget);
  const TypeClassSpectrum target = product_spectrum(e, m, class_budget);
  return spectra_majorizes(smoothed_truncate(source, epsilon), target);
}

std::optional<RatePoint> RateFrontier::best() const {
  std::optional<RatePoint> out;
  for (const auto& pt : points) {
    if (!pt.feasible) continue;
    if (!out) {
      out = pt;
      continue;
    }
    const bool better = direction == RateDirection::kDilution
                            ? pt.ratio() < out->ratio()
                            : pt.ratio() > out->ratio();
    if (better) out = pt;
  }
  return out;
}

RateFrontier rate_frontier(const SchmidtVector& a, const SchmidtVector& e,
                           int n_max, double epsilon, RateDirection direction,
                           std::size_t class_budget, int threads) {
  if (n_max < 1) throw std::invalid_argument("rate_frontier: n_max < 1");
  RateFrontier frontier;
  frontier.direction = direction;
  const double entropy_e = entropy(e);
  frontier.reference_entropy_ratio =
      entropy_e > 0.0 ? entropy(a) / entropy_e
                      : std::numeric_limits<double>::infinity();
  frontier.points.resize(static_cast<std::size_t>(n_max));

  auto solve_point = [&](int n) {
    RatePoint pt;
    pt.n = n;
    pt.direction = direction;
    pt.epsilon = epsilon;
    try {
      const int hi = search_upper_bound(a, n);
      auto feasible_at = [&](int m) {
        return direction == RateDirection::kDilution
                   ? dilution_feasible(e, m, a, n, epsilon, class_budget)
                   : distillation_feasible(a, n, e, m, epsilon, class_budget);
      };
      if (direction == RateDirection::kDilution) {
        // minimal feasible m
        if (feasible_at(hi)) {
          int lo = 0, high = hi;
          if (feasible_at(0)) {
            high = 0;
          } else {
            while (high - lo > 1) {
              const int mid = lo + (high - lo) / 2;
              (feasible_at(mid) ? high : lo) = mid;
            }
          }
          pt.feasible = true;
          pt.m = high;
        }
      } else {
        // maximal feasible m; m = 0 (no yardstick produced) always is
        if (feasible_at(hi)) {
          pt.feasible = true;
          pt.m = hi;
        } else {
          int lo = 0, high = hi;
          while (high - lo > 1) {
            const int mid = lo + (high - lo) / 2;
            (feasible_at(mid) ? lo : high) = mid;
          }
          pt.feasible = true;
          pt.m = lo;
        }
      }
    } catch (const BudgetExceeded&) {
      pt.budget_exceeded = true;
    }
    frontier.points[static_cast<std::size_t>(n - 1)] = pt;
  };

  const int workers = std::max(1, threads);
  if (workers == 1) {
    for (int n = 1; n <= n_max; ++n) solve_point(n);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        for (int n = 1 + t; n <= n_max; n += workers) solve_point(n);
      });
    }
    for (auto& th : pool) th.join();
  }
  return frontier;
}

std::optional<RateEstimate> estimate_rate(const SchmidtVector& a,
                                          const SchmidtVector& e,
                                          double epsilon, int n_max,
                                          std::size_t class_budget,
                                          int threads) {
  const RateFrontier frontier = rate_frontier(
      a, e, n_max, epsilon, RateDirection::kDilution, class_budget, threads);
  const auto best = frontier.best();
  if (!best) return std::nullopt;
  return RateEstimate{best->m, best->n, best->ratio(),
                      frontier.reference_entropy_ratio};
}

}  // namespace entax
