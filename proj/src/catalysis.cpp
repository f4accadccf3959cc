#include "entax/catalysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

namespace entax {

ConvertibilityVerdict convertible_with_catalyst(const SchmidtVector& a,
                                                const SchmidtVector& b,
                                                const Catalyst& c,
                                                double tol) {
  return convertible_single_copy(tensor(a, c.spectrum),
                                 tensor(b, c.spectrum), tol);
}

namespace {

double catalyst_margin(const SchmidtVector& a, const SchmidtVector& b,
                       const std::vector<double>& candidate, double tol) {
  Catalyst c{SchmidtVector(candidate), CatalystProvenance::kGridSearch};
  return convertible_with_catalyst(a, b, c, tol).margin;
}

// non-increasing positive integer compositions of total into parts entries
void enumerate_ordered_grid(int total, int parts, int cap,
                            std::vector<int>& current,
                            std::vector<std::vector<double>>& out) {
  if (parts == 1) {
    if (total >= 1 && total <= cap) {
      std::vector<double> probs;
      probs.reserve(current.size() + 1);
      for (int g : current) probs.push_back(g);
      probs.push_back(total);
      out.push_back(std::move(probs));
    }
    return;
  }
  // keep at least 1 per remaining part, and non-increasing order
  for (int g = std::min(cap, total - (parts - 1)); g >= (total + parts - 1) / parts;
       --g) {
    current.push_back(g);
    enumerate_ordered_grid(total - g, parts - 1, g, current, out);
    current.pop_back();
  }
}

struct BestCandidate {
  double margin = -std::numeric_limits<double>::infinity();
  std::vector<double> spectrum;

  // higher margin wins; ties broken by lexicographically smaller spectrum
  void offer(double m, const std::vector<double>& s) {
    if (m > margin || (m == margin && !spectrum.empty() && s < spectrum)) {
      margin = m;
      spectrum = s;
    }
  }
};

}  // namespace

CatalystSearchResult search_catalyst(const SchmidtVector& a,
                                     const SchmidtVector& b,
                                     const CatalystSearchOptions& opts) {
  if (opts.max_dim < 2 || opts.grid_points < 3) {
    throw std::invalid_argument("search_catalyst: need max_dim >= 2 and grid_points >= 3");
  }

  CatalystSearchResult result;
  const ConvertibilityVerdict plain = convertible_single_copy(a, b, opts.tol);
  result.evaluations = 1;
  if (plain.convertible) {
    result.margin = plain.margin;
    result.catalyst = Catalyst{SchmidtVector({1.0}),
                               CatalystProvenance::kUserSupplied};
    return result;
  }
  // Entropy is non-increasing along ≺ and additive under tensoring, so a
  // catalyzed conversion that would raise it is impossible at any dimension.
  if (entropy(a) < entropy(b) - 1e-6) {
    result.margin = plain.margin;
    return result;
  }

  const int grid_total = opts.grid_points - 1;
  BestCandidate best;
  for (int dim = 2; dim <= opts.max_dim; ++dim) {
    std::vector<std::vector<double>> grid;
    std::vector<int> scratch;
    enumerate_ordered_grid(grid_total, dim, grid_total, scratch, grid);
    for (auto& candidate : grid) {
      for (double& g : candidate) g /= grid_total;
    }

    const int threads = std::max(1, opts.threads);
    std::vector<BestCandidate> local(static_cast<std::size_t>(threads));
    std::atomic<std::uint64_t> evals{0};
    auto worker = [&](int tid) {
      for (std::size_t i = static_cast<std::size_t>(tid); i < grid.size();
           i += static_cast<std::size_t>(threads)) {
        local[static_cast<std::size_t>(tid)].offer(
            catalyst_margin(a, b, grid[i], opts.tol), grid[i]);
        evals.fetch_add(1, std::memory_order_relaxed);
      }
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(threads));
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
      for (auto& th : pool) th.join();
    }
    for (const auto& lb : local) {
      if (!lb.spectrum.empty()) best.offer(lb.margin, lb.spectrum);
    }
    result.evaluations += evals.load();
  }

  if (best.spectrum.empty()) {
    result.margin = plain.margin;
    return result;
  }

  // Coordinate-descent refinement: transfer mass between pairs of entries,
  // shrinking the step until 1e-4, accepting strict margin improvements.
  std::vector<double> current = best.spectrum;
  double current_margin = best.margin;
  bool refined = false;
  double step = 1.0 / grid_total;
  for (int iter = 0; iter < opts.refine_iters && step >= 1e-4; ++iter) {
    bool improved = false;
    for (std::size_t i = 0; i < current.size() && !improved; ++i) {
      for (std::size_t j = 0; j < current.size() && !improved; ++j) {
        if (i == j) continue;
        if (current[i] - step <= 1e-6) continue;
        std::vector<double> trial = current;
        trial[i] -= step;
        trial[j] += step;
        std::sort(trial.begin(), trial.end(), std::greater<>());
        const double m = catalyst_margin(a, b, trial, opts.tol);
        ++result.evaluations;
        if (m > current_margin + 1e-15) {
          current = std::move(trial);
          current_margin = m;
          improved = true;
          refined = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }

  result.margin = current_margin;
  if (current_margin >= -opts.tol) {
    result.catalyst = Catalyst{SchmidtVector(current),
                               refined ? CatalystProvenance::kRefined
                                       : CatalystProvenance::kGridSearch};
  }
  return result;
}

}  // namespace entax
