#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "entax/schmidt.hpp"

namespace entax {

using BigInt = boost::multiprecision::cpp_int;

/// Requested n-fold product spectrum would need more type classes than the
/// configured budget allows.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultClassBudget = 2'000'000;

struct TypeClass {
  double log2_prob;
  BigInt multiplicity;
};

/// Compressed n-fold product spectrum: one entry per distinct per-outcome
/// probability, with an exact count of outcomes sharing it. Classes are
/// sorted by log2_prob strictly descending (numerically equal values are
/// merged). Total multiplicity equals base_dim^copies exactly; total mass
/// equals 1 within 1e-6 under compensated summation.
struct TypeClassSpectrum {
  std::vector<TypeClass> classes;
  int copies = 0;
  int base_dim = 1;

  BigInt total_count() const;
  double total_mass() const;
};

/// Spectrum of a^{⊗n} without d^n enumeration: one class per composition
/// (k1..kd) of n, log2_prob = Σ ki·log2 pi, multiplicity = multinomial(n; k),
/// equal-log classes merged with 1e-12 tolerance. n = 0 yields the trivial
/// spectrum {(0, 1)}. Throws BudgetExceeded when the composition count
/// C(n+d-1, d-1) is over budget.
TypeClassSpectrum product_spectrum(const SchmidtVector& a, int n,
                                   std::size_t class_budget = kDefaultClassBudget);

/// Drops the smallest-probability classes while the discarded mass stays
/// within epsilon (boundary class always kept whole), then renormalizes the
/// kept mass to 1 by shifting every log2_prob. epsilon = 0 is the identity.
TypeClassSpectrum smoothed_truncate(const TypeClassSpectrum& s, double epsilon);

/// Majorization p ≺ q on compressed spectra: the two piecewise-linear
/// cumulative-mass curves are compared at every class boundary of either
/// spectrum, with implicit zero padding past either support.
bool spectra_majorizes(const TypeClassSpectrum& p, const TypeClassSpectrum& q,
                       double tol = 1e-9);

}  // namespace entax
