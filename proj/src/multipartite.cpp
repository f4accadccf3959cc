#include "entax/multipartite.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "entax/majorization.hpp"

namespace entax {

namespace {

CutMask full_mask(int parties) {
  return static_cast<CutMask>((std::uint64_t{1} << parties) - 1);
}

CutMask canonical_mask(CutMask mask, int parties) {
  const CutMask complement = full_mask(parties) & ~mask;
  const int pm = std::popcount(mask);
  const int pc = std::popcount(complement);
  if (pm != pc) return pm < pc ? mask : complement;
  return std::min(mask, complement);
}

}  // namespace

MultipartiteState::MultipartiteState(std::vector<int> dims,
                                     std::vector<std::complex<double>> amps,
                                     std::vector<std::string> party_labels,
                                     std::size_t dim_cap)
    : dims_(std::move(dims)), amps_(std::move(amps)),
      labels_(std::move(party_labels)) {
  if (dims_.size() < 2) {
    throw std::invalid_argument("MultipartiteState: need at least 2 parties");
  }
  std::size_t total = 1;
  for (int d : dims_) {
    if (d < 1) throw std::invalid_argument("MultipartiteState: dimension < 1");
    total *= static_cast<std::size_t>(d);
    if (total > dim_cap) {
      throw std::invalid_argument("MultipartiteState: total dimension over cap");
    }
  }
  if (amps_.size() != total) {
    throw std::invalid_argument("MultipartiteState: amplitude count mismatch");
  }
  double norm2 = 0.0;
  for (const auto& a : amps_) norm2 += std::norm(a);
  if (norm2 < 1e-24) {
    throw DegenerateStateError("MultipartiteState: zero state");
  }
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-6) {
    throw NormalizationError("MultipartiteState: global norm is " +
                             std::to_string(std::sqrt(norm2)));
  }
  if (!labels_.empty() && labels_.size() != dims_.size()) {
    throw std::invalid_argument("MultipartiteState: label count mismatch");
  }
}

SchmidtVector cut_schmidt(const MultipartiteState& s, CutMask mask) {
  const int parties = s.party_count();
  if (mask == 0 || mask >= full_mask(parties)) {
    throw std::invalid_argument("cut_schmidt: mask must be a nontrivial subset");
  }

  std::size_t rows = 1, cols = 1;
  for (int p = 0; p < parties; ++p) {
    const auto d = static_cast<std::size_t>(s.dims()[p]);
    if (mask & (CutMask{1} << p)) {
      rows *= d;
    } else {
      cols *= d;
    }
  }

  std::vector<std::vector<std::complex<double>>> matrix(
      rows, std::vector<std::complex<double>>(cols));
  std::vector<int> index(static_cast<std::size_t>(parties), 0);
  for (std::size_t flat = 0; flat < s.amplitudes().size(); ++flat) {
    std::size_t r = 0, c = 0;
    for (int p = 0; p < parties; ++p) {
      const auto d = static_cast<std::size_t>(s.dims()[p]);
      const auto i = static_cast<std::size_t>(index[static_cast<std::size_t>(p)]);
      if (mask & (CutMask{1} << p)) {
        r = r * d + i;
      } else {
        c = c * d + i;
      }
    }
    matrix[r][c] = s.amplitudes()[flat];
    // advance the mixed-radix index, last party fastest
    for (int p = parties - 1; p >= 0; --p) {
      auto& ip = index[static_cast<std::size_t>(p)];
      if (++ip < s.dims()[p]) break;
      ip = 0;
    }
  }
  return schmidt_from_amplitudes(matrix);
}

std::vector<CutEntry> cut_profile(const MultipartiteState& s) {
  const int parties = s.party_count();
  std::vector<CutMask> canonical;
  for (CutMask mask = 1; mask < full_mask(parties); ++mask) {
    if (canonical_mask(mask, parties) == mask) canonical.push_back(mask);
  }
  std::vector<CutEntry> profile;
  profile.reserve(canonical.size());
  for (CutMask mask : canonical) {
    SchmidtVector spectrum = cut_schmidt(s, mask);
    const double bits = entropy(spectrum);
    profile.push_back({mask, std::move(spectrum), bits});
  }
  return profile;
}

std::optional<CutMask> cut_obstruction(const MultipartiteState& s1,
                                       const MultipartiteState& s2,
                                       double tol) {
  if (s1.dims() != s2.dims()) {
    throw std::invalid_argument("cut_obstruction: party structures differ");
  }
  const int parties = s1.party_count();
  for (CutMask mask = 1; mask < full_mask(parties); ++mask) {
    if (canonical_mask(mask, parties) != mask) continue;
    if (!majorizes(cut_schmidt(s1, mask), cut_schmidt(s2, mask), tol)) {
      return mask;
    }
  }
  return std::nullopt;
}

TripartiteReport tripartite_incomparability_report(
    std::array<std::complex<double>, 2> psi1,
    std::array<std::complex<double>, 2> psi3) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const std::vector<int> dims{2, 2, 2};

  std::vector<std::complex<double>> ghz_amps(8, 0.0);
  ghz_amps[0b000] = inv_sqrt2;
  ghz_amps[0b111] = inv_sqrt2;
  const MultipartiteState ghz(dims, ghz_amps, {"1", "2", "3"});

  // b = psi1 ⊗ (|00> + |11>)/sqrt(2) on parties 2,3
  std::vector<std::complex<double>> b_amps(8, 0.0);
  for (int i = 0; i < 2; ++i) {
    b_amps[static_cast<std::size_t>(i << 2 | 0b00)] =
        psi1[static_cast<std::size_t>(i)] * inv_sqrt2;
    b_amps[static_cast<std::size_t>(i << 2 | 0b11)] =
        psi1[static_cast<std::size_t>(i)] * inv_sqrt2;
  }
  const MultipartiteState b(dims, b_amps, {"1", "2", "3"});

  // c = (|00> + |11>)/sqrt(2) on parties 1,2 ⊗ psi3
  std::vector<std::complex<double>> c_amps(8, 0.0);
  for (int i = 0; i < 2; ++i) {
    c_amps[static_cast<std::size_t>(0b000 | i)] =
        psi3[static_cast<std::size_t>(i)] * inv_sqrt2;
    c_amps[static_cast<std::size_t>(0b110 | i)] =
        psi3[static_cast<std::size_t>(i)] * inv_sqrt2;
  }
  const MultipartiteState c(dims, c_amps, {"1", "2", "3"});

  TripartiteReport report;
  report.b_to_c_mask = cut_obstruction(b, c);
  report.b_to_c_obstructed = report.b_to_c_mask.has_value();
  report.c_to_b_mask = cut_obstruction(c, b);
  report.c_to_b_obstructed = report.c_to_b_mask.has_value();
  report.ghz_to_b_obstructed = cut_obstruction(ghz, b).has_value();
  report.ghz_to_c_obstructed = cut_obstruction(ghz, c).has_value();
  for (int p = 0; p < 3; ++p) {
    report.ghz_cut_entropies[static_cast<std::size_t>(p)] =
        entropy(cut_schmidt(ghz, CutMask{1} << p));
  }
  return report;
}

}  // namespace entax
