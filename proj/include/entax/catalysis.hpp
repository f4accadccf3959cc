#pragma once

#include <cstdint>
#include <optional>

#include "entax/majorization.hpp"
#include "entax/schmidt.hpp"

namespace entax {

enum class CatalystProvenance { kUserSupplied, kGridSearch, kRefined };

/// Ancillary state c enabling a⊗c -> b⊗c when a -> b alone is impossible.
/// The catalyst appears identically on both sides and is never consumed.
struct Catalyst {
  SchmidtVector spectrum;
  CatalystProvenance provenance = CatalystProvenance::kUserSupplied;
};

/// Verdict on tensor(a, c) ≺ tensor(b, c).
ConvertibilityVerdict convertible_with_catalyst(const SchmidtVector& a,
                                                const SchmidtVector& b,
                                                const Catalyst& c,
                                                double tol = kDefaultTol);

struct CatalystSearchOptions {
  int max_dim = 4;
  /// grid resolution: candidate probabilities are multiples of
  /// 1/(grid_points - 1)
  int grid_points = 51;
  int refine_iters = 64;
  double tol = kDefaultTol;
  int threads = 1;
};

struct CatalystSearchResult {
  std::optional<Catalyst> catalyst;
  /// best verdict margin seen, whether or not it cleared -tol
  double margin = 0.0;
  std::uint64_t evaluations = 0;
};

/// Searches for a catalyst making a -> b possible. If a ≺ b already, the
/// trivial catalyst (1.0) is returned immediately. If entropy(a) is below
/// entropy(b) beyond tolerance no catalyst can exist (entropy is preserved
/// or decreased along ≺, with or without a spectator) and the search
/// returns empty without spending the budget. Otherwise: exhaustive grid
/// over the ordered probability simplex for each dimension 2..max_dim,
/// then coordinate-descent refinement of the best grid point, maximizing
/// the verdict margin. Deterministic given options; an empty result means
/// only that nothing was found at this dimension/resolution.
CatalystSearchResult search_catalyst(const SchmidtVector& a,
                                     const SchmidtVector& b,
                                     const CatalystSearchOptions& opts = {});

}  // namespace entax
