#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entax/schmidt.hpp"

namespace entax {

/// Dense pure state of k >= 2 parties with arbitrary per-party dimensions.
/// Amplitudes are stored row-major (last party fastest). Total dimension is
/// capped (default 2^12) since every cut spectrum goes through a dense
/// decomposition.
class MultipartiteState {
 public:
  static constexpr std::size_t kDefaultDimCap = std::size_t{1} << 12;

  MultipartiteState(std::vector<int> dims,
                    std::vector<std::complex<double>> amps,
                    std::vector<std::string> party_labels = {},
                    std::size_t dim_cap = kDefaultDimCap);

  int party_count() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
  const std::vector<std::string>& party_labels() const { return labels_; }

 private:
  std::vector<int> dims_;
  std::vector<std::complex<double>> amps_;
  std::vector<std::string> labels_;
};

/// Parties in a cut are identified by a bitmask; bit i (from 0) selects the
/// (i+1)-th party. Masks reported by cut enumeration are canonicalized up to
/// complement symmetry: the side with fewer parties wins, ties broken by
/// smaller mask value.
using CutMask = std::uint32_t;

/// Spectrum of the reduced state on the masked parties: the amplitude
/// tensor reshaped to (masked) x (unmasked) and run through the same
/// decomposition as the bi-partite core. Mask must be nontrivial.
SchmidtVector cut_schmidt(const MultipartiteState& s, CutMask mask);

struct CutEntry {
  CutMask mask;
  SchmidtVector spectrum;
  double entropy_bits;
};

/// One entry per nontrivial bipartition up to complement symmetry, ordered
/// by canonical mask value.
std::vector<CutEntry> cut_profile(const MultipartiteState& s);

/// Necessary-condition scan for s1 -> s2: returns the first canonical mask
/// whose cut spectrum of s1 fails to majorize-convert into that of s2,
/// certifying that the conversion is impossible. nullopt means no cut
/// disproves the conversion; it never certifies convertibility.
std::optional<CutMask> cut_obstruction(const MultipartiteState& s1,
                                       const MultipartiteState& s2,
                                       double tol = 1e-9);

/// Three-party incomparability demonstration: the GHZ-like ancestor
/// (|000> + |111>)/sqrt(2), b = psi1 ⊗ Bell(2,3) and c = Bell(1,2) ⊗ psi3
/// are built; b and c obstruct each other across single-party cuts while
/// neither is obstructed from the ancestor.
struct TripartiteReport {
  bool b_to_c_obstructed = false;
  std::optional<CutMask> b_to_c_mask;
  bool c_to_b_obstructed = false;
  std::optional<CutMask> c_to_b_mask;
  bool ghz_to_b_obstructed = false;
  bool ghz_to_c_obstructed = false;
  std::array<double, 3> ghz_cut_entropies{};
};

/// psi1/psi3 are single-qubit amplitude pairs, |0> by default; the
/// obstruction structure is insensitive to the choice.
TripartiteReport tripartite_incomparability_report(
    std::array<std::complex<double>, 2> psi1 = {1.0, 0.0},
    std::array<std::complex<double>, 2> psi3 = {1.0, 0.0});

}  // namespace entax
