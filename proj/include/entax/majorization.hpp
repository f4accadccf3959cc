#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "entax/schmidt.hpp"

namespace entax {

constexpr double kDefaultTol = 1e-9;

/// Decision record for an a -> b query. margin is the minimum over prefix
/// lengths k of prefix_b(k) - prefix_a(k); the conversion is possible iff
/// that minimum is >= -tol. failing_prefix is the first (1-based) k where
/// the comparison fails, present exactly when not convertible.
struct ConvertibilityVerdict {
  bool convertible = false;
  std::optional<std::size_t> failing_prefix;
  double margin = 0.0;
};

/// p ≺ q: every prefix sum of p is at most the corresponding prefix sum of
/// q (within tol). The shorter spectrum is implicitly zero-padded.
bool majorizes(const SchmidtVector& p, const SchmidtVector& q,
               double tol = kDefaultTol);

/// Single-copy, catalyst-free conversion a -> b, decided by a ≺ b.
ConvertibilityVerdict convertible_single_copy(const SchmidtVector& a,
                                              const SchmidtVector& b,
                                              double tol = kDefaultTol);

struct IncomparablePair {
  SchmidtVector a;
  SchmidtVector b;
  /// Uniform spectrum of the requested dimension; majorized by everything
  /// of that dimension, hence a common single-copy ancestor of a and b.
  SchmidtVector common_ancestor;
};

/// Samples a pair with neither a ≺ b nor b ≺ a. Requires dim >= 3
/// (dimension-2 spectra are totally ordered); throws std::invalid_argument
/// below that. Returns nullopt after max_attempts rejections.
std::optional<IncomparablePair> sample_incomparable_pair(int dim,
                                                         std::uint64_t seed,
                                                         int max_attempts);

/// Uniform sample from the ordered probability simplex
/// p1 >= p2 >= ... >= p_dim > 0 (exponential normalization, then sort).
std::vector<double> sample_ordered_simplex(int dim, std::mt19937_64& rng);

SchmidtVector random_state(int dim, std::mt19937_64& rng);

/// Applies `count` random Robin Hood transfers to q, each moving mass from
/// a larger entry to a smaller one; the result is majorized by q by
/// construction. Used to generate guaranteed-positive ≺ instances.
SchmidtVector apply_t_transforms(const SchmidtVector& q, int count,
                                 std::mt19937_64& rng);

}  // namespace entax
