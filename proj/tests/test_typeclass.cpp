#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "entax/majorization.hpp"
#include "entax/schmidt.hpp"
#include "entax/typeclass.hpp"
#include "oracle.hpp"

using namespace entax;

namespace {
SchmidtVector sv(std::vector<double> p) { return SchmidtVector(std::move(p)); }

BigInt bigint_pow(int base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}
}  // namespace

TEST_CASE("product_spectrum worked examples") {
  // (0.9, 0.1)^{x2}: three classes 0.81 x1, 0.09 x2, 0.01 x1
  TypeClassSpectrum s = product_spectrum(sv({0.9, 0.1}), 2);
  REQUIRE(s.classes.size() == 3);
  CHECK(s.classes[0].log2_prob == doctest::Approx(std::log2(0.81)).epsilon(1e-12));
  CHECK(s.classes[0].multiplicity == 1);
  CHECK(s.classes[1].log2_prob == doctest::Approx(std::log2(0.09)).epsilon(1e-12));
  CHECK(s.classes[1].multiplicity == 2);
  CHECK(s.classes[2].log2_prob == doctest::Approx(std::log2(0.01)).epsilon(1e-12));
  CHECK(s.classes[2].multiplicity == 1);
  CHECK(s.total_count() == 4);
  CHECK(s.total_mass() == doctest::Approx(1.0).epsilon(1e-9));

  // uniform qubit, three copies: single merged class (-3, 8)
  TypeClassSpectrum u = product_spectrum(sv({0.5, 0.5}), 3);
  REQUIRE(u.classes.size() == 1);
  CHECK(u.classes[0].log2_prob == doctest::Approx(-3.0).epsilon(1e-12));
  CHECK(u.classes[0].multiplicity == 8);

  // n = 0 is the trivial spectrum
  TypeClassSpectrum e = product_spectrum(sv({0.7, 0.3}), 0);
  REQUIRE(e.classes.size() == 1);
  CHECK(e.classes[0].log2_prob == doctest::Approx(0.0));
  CHECK(e.classes[0].multiplicity == 1);

  // rank-1 base stays a single unit class
  TypeClassSpectrum one = product_spectrum(sv({1.0}), 5);
  REQUIRE(one.classes.size() == 1);
  CHECK(one.classes[0].log2_prob == doctest::Approx(0.0));
  CHECK(one.classes[0].multiplicity == 1);
}

TEST_CASE("product_spectrum invariants on random bases") {
  std::mt19937_64 rng(55);
  for (int it = 0; it < 100; ++it) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 12);
    SchmidtVector a(sample_ordered_simplex(d, rng));
    TypeClassSpectrum s = product_spectrum(a, n);
    CHECK(s.total_count() == bigint_pow(d, n));
    CHECK(s.total_mass() == doctest::Approx(1.0).epsilon(1e-6));
    for (std::size_t i = 0; i < s.classes.size(); ++i) {
      CHECK(s.classes[i].multiplicity > 0);
      if (i > 0) CHECK(s.classes[i].log2_prob < s.classes[i - 1].log2_prob);
    }
  }
}

TEST_CASE("product_spectrum respects the class budget") {
  // d = 3, n = 10: C(12, 2) = 66 compositions
  CHECK_THROWS_AS(product_spectrum(sv({0.5, 0.3, 0.2}), 10, 65), BudgetExceeded);
  CHECK_NOTHROW(product_spectrum(sv({0.5, 0.3, 0.2}), 10, 66));
}

TEST_CASE("smoothed_truncate worked examples") {
  TypeClassSpectrum s = product_spectrum(sv({0.9, 0.1}), 1);
  // epsilon below the tail mass keeps everything
  TypeClassSpectrum keep = smoothed_truncate(s, 0.05);
  CHECK(keep.classes.size() == 2);
  // epsilon = 0.15 drops the 0.1 class and renormalizes 0.9 to 1
  TypeClassSpectrum cut = smoothed_truncate(s, 0.15);
  REQUIRE(cut.classes.size() == 1);
  CHECK(cut.classes[0].log2_prob == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(cut.total_mass() == doctest::Approx(1.0).epsilon(1e-9));
  // epsilon = 0 is the identity
  TypeClassSpectrum id = smoothed_truncate(s, 0.0);
  CHECK(id.classes.size() == s.classes.size());
  CHECK(id.classes[0].log2_prob == doctest::Approx(s.classes[0].log2_prob));
  CHECK_THROWS_AS(smoothed_truncate(s, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(smoothed_truncate(s, -0.1), std::invalid_argument);
}

TEST_CASE("smoothed_truncate keeps boundary classes whole") {
  // (0.4, 0.3, 0.3)^{x1}: the two 0.3 entries merge into one class of
  // multiplicity 2; epsilon = 0.35 cannot split it, so both survive or
  // neither does -- dropping both would exceed epsilon, so both stay
  TypeClassSpectrum s = product_spectrum(sv({0.4, 0.3, 0.3}), 1);
  REQUIRE(s.classes.size() == 2);
  REQUIRE(s.classes[1].multiplicity == 2);
  TypeClassSpectrum t = smoothed_truncate(s, 0.35);
  CHECK(t.classes.size() == 2);
  CHECK(t.total_mass() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("spectra_majorizes worked examples") {
  SchmidtVector epr({0.5, 0.5});
  SchmidtVector skew({0.9, 0.1});
  // the uniform spectrum over 4 is below everything of support <= 4
  CHECK(spectra_majorizes(product_spectrum(epr, 2), product_spectrum(skew, 2)));
  // the reverse fails already at the first prefix: 0.81 > 0.25
  CHECK_FALSE(spectra_majorizes(product_spectrum(skew, 2), product_spectrum(epr, 2)));
  // reflexivity
  TypeClassSpectrum s = product_spectrum(skew, 5);
  CHECK(spectra_majorizes(s, s));
}

TEST_CASE("spectra_majorizes agrees with full expansion on random instances") {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 100; ++it) {
    const int d1 = 2 + static_cast<int>(rng() % 2);
    const int d2 = 2 + static_cast<int>(rng() % 2);
    const int n1 = 1 + static_cast<int>(rng() % 8);
    const int n2 = 1 + static_cast<int>(rng() % 8);
    SchmidtVector a(sample_ordered_simplex(d1, rng));
    SchmidtVector b(sample_ordered_simplex(d2, rng));
    TypeClassSpectrum sa = product_spectrum(a, n1);
    TypeClassSpectrum sb = product_spectrum(b, n2);
    const auto ea = oracle::expanded_product(a.probs(), n1);
    const auto eb = oracle::expanded_product(b.probs(), n2);
    CHECK(spectra_majorizes(sa, sb) == oracle::majorizes_expanded(ea, eb));
    CHECK(spectra_majorizes(sb, sa) == oracle::majorizes_expanded(eb, ea));
  }
}

TEST_CASE("spectra_majorizes matches plain majorization for single copies") {
  std::mt19937_64 rng(88);
  for (int it = 0; it < 500; ++it) {
    SchmidtVector a(sample_ordered_simplex(2 + static_cast<int>(rng() % 4), rng));
    SchmidtVector b(sample_ordered_simplex(2 + static_cast<int>(rng() % 4), rng));
    CHECK(spectra_majorizes(product_spectrum(a, 1), product_spectrum(b, 1)) ==
          majorizes(a, b));
  }
}
