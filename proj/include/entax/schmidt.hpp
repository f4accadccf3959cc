#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace entax {

/// Input amplitude matrix is not normalized to unit Frobenius norm.
class NormalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input amplitude matrix is (numerically) zero.
class DegenerateStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sorted probability spectrum of a bi-partite pure state: the complete
/// invariant of the state under local unitaries, and the only data any
/// convertibility decision in this library looks at.
///
/// Invariants: entries strictly positive (near-zeros pruned at
/// construction), non-increasing, summing to 1 within 1e-9.
class SchmidtVector {
 public:
  static constexpr double kPruneThreshold = 1e-12;
  static constexpr double kSumTolerance = 1e-9;

  /// Accepts probabilities in any order; sorts, prunes entries below the
  /// prune threshold and renormalizes. Throws std::invalid_argument on an
  /// empty spectrum, a negative entry, or a raw sum off 1 by more than
  /// kSumTolerance.
  explicit SchmidtVector(std::vector<double> probs, std::string label = {});

  const std::vector<double>& probs() const { return probs_; }
  const std::string& label() const { return label_; }

  std::size_t rank() const { return probs_.size(); }
  double max_prob() const { return probs_.front(); }

  bool operator==(const SchmidtVector& other) const {
    return probs_ == other.probs_;
  }

 private:
  std::vector<double> probs_;
  std::string label_;
};

/// Schmidt spectrum of a bi-partite pure state given as a dA x dB complex
/// amplitude matrix: squared singular values, computed by one-sided Jacobi
/// iteration to 1e-12 relative column-orthogonality.
SchmidtVector schmidt_from_amplitudes(
    const std::vector<std::vector<std::complex<double>>>& amps,
    std::string label = {});

/// Joint spectrum of two states considered together: sorted pairwise
/// products.
SchmidtVector tensor(const SchmidtVector& a, const SchmidtVector& b);

/// von Neumann entropy of entanglement in bits: -sum p log2 p.
double entropy(const SchmidtVector& a);

/// -log2 of the largest probability; lower bound of the entropy family.
double min_entropy(const SchmidtVector& a);

/// log2 of the Schmidt rank; upper bound of the entropy family.
double rank_entropy(const SchmidtVector& a);

}  // namespace entax
