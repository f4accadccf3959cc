#pragma once

#include <optional>
#include <vector>

#include "entax/schmidt.hpp"
#include "entax/typeclass.hpp"

namespace entax {

enum class RateDirection { kDilution, kDistillation };

struct RatePoint {
  int n = 0;
  /// threshold copy count of the yardstick: minimal feasible m for
  /// dilution, maximal for distillation; meaningful only when feasible
  int m = 0;
  RateDirection direction = RateDirection::kDilution;
  double epsilon = 0.0;
  bool feasible = false;
  bool budget_exceeded = false;

  double ratio() const { return static_cast<double>(m) / n; }
};

struct RateFrontier {
  std::vector<RatePoint> points;
  /// entropy(a) / entropy(e), the asymptotic reference for m/n
  double reference_entropy_ratio = 0.0;
  RateDirection direction = RateDirection::kDilution;

  /// Best feasible ratio: minimal m/n for dilution, maximal for
  /// distillation. Empty when no point is feasible.
  std::optional<RatePoint> best() const;
};

/// Can m copies of the yardstick e be converted into n copies of a, up to
/// mass epsilon of smoothing on the target? Decided by type-class
/// majorization; epsilon = 0 is the exact relation.
bool dilution_feasible(const SchmidtVector& e, int m, const SchmidtVector& a,
                       int n, double epsilon,
                       std::size_t class_budget = kDefaultClassBudget);

/// Mirror image: can n copies of a (smoothed by epsilon) be converted into
/// m copies of the yardstick e?
bool distillation_feasible(const SchmidtVector& a, int n,
                           const SchmidtVector& e, int m, double epsilon,
                           std::size_t class_budget = kDefaultClassBudget);

/// Threshold m for every n in 1..n_max, found by binary search (feasibility
/// is monotone in m in both directions). A point whose spectra blow the
/// class budget is recorded with budget_exceeded and skipped; the frontier
/// is still returned for the completed points.
RateFrontier rate_frontier(const SchmidtVector& a, const SchmidtVector& e,
                           int n_max, double epsilon, RateDirection direction,
                           std::size_t class_budget = kDefaultClassBudget,
                           int threads = 1);

struct RateEstimate {
  int m = 0;
  int n = 1;
  double ratio = 0.0;
  double reference_entropy_ratio = 0.0;
};

/// Finite-n approximation of the dilution rate: the best (smallest) m/n on
/// the dilution frontier up to n_max copies of a. Empty when no frontier
/// point is feasible within the budget.
std::optional<RateEstimate> estimate_rate(
    const SchmidtVector& a, const SchmidtVector& e, double epsilon, int n_max,
    std::size_t class_budget = kDefaultClassBudget, int threads = 1);

}  // namespace entax
