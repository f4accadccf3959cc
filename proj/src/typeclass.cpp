#include "entax/typeclass.hpp"

#include <algorithm>
#include <cmath>

namespace entax {

namespace {

constexpr double kMergeTol = 1e-12;

double log2_big(const BigInt& v) {
  const unsigned bits = boost::multiprecision::msb(v);
  if (bits <= 900) return std::log2(v.convert_to<double>());
  const BigInt shifted = v >> (bits - 52);
  return static_cast<double>(bits - 52) +
         std::log2(shifted.convert_to<double>());
}

double class_mass(const TypeClass& c) {
  return std::exp2(c.log2_prob + log2_big(c.multiplicity));
}

double partial_mass(const BigInt& count, double log2_prob) {
  if (count == 0) return 0.0;
  return std::exp2(log2_prob + log2_big(count));
}

BigInt binomial(const BigInt& n, const BigInt& k) {
  BigInt r = 1;
  for (BigInt i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

void merge_equal_classes(std::vector<TypeClass>& classes) {
  std::sort(classes.begin(), classes.end(),
            [](const TypeClass& x, const TypeClass& y) {
              return x.log2_prob > y.log2_prob;
            });
  std::vector<TypeClass> merged;
  merged.reserve(classes.size());
  for (auto& c : classes) {
    if (!merged.empty() &&
        merged.back().log2_prob - c.log2_prob <= kMergeTol) {
      merged.back().multiplicity += c.multiplicity;
    } else {
      merged.push_back(std::move(c));
    }
  }
  classes = std::move(merged);
}

// prefix tables over class boundaries
struct CumulativeCurve {
  std::vector<BigInt> count;   // outcomes up to and including class i
  std::vector<double> mass;    // mass up to and including class i (compensated)
  const TypeClassSpectrum* spectrum;

  explicit CumulativeCurve(const TypeClassSpectrum& s) : spectrum(&s) {
    count.reserve(s.classes.size());
    mass.reserve(s.classes.size());
    BigInt n = 0;
    double m = 0.0, comp = 0.0;
    for (const auto& c : s.classes) {
      n += c.multiplicity;
      const double x = class_mass(c) - comp;
      const double t = m + x;
      comp = (t - m) - x;
      m = t;
      count.push_back(n);
      mass.push_back(m);
    }
  }

  // Cumulative mass of the largest k outcomes, flat past the support.
  // `cursor` must advance with k across calls; evaluation is then amortized
  // constant time over a sweep of increasing breakpoints.
  double at(const BigInt& k, std::size_t& cursor) const {
    if (k <= 0) return 0.0;
    while (cursor < count.size() && count[cursor] < k) ++cursor;
    if (cursor >= count.size()) return mass.empty() ? 0.0 : mass.back();
    if (count[cursor] == k) return mass[cursor];
    const BigInt before = cursor == 0 ? BigInt(0) : count[cursor - 1];
    const double base = cursor == 0 ? 0.0 : mass[cursor - 1];
    return base + partial_mass(k - before, spectrum->classes[cursor].log2_prob);
  }
};

}  // namespace

BigInt TypeClassSpectrum::total_count() const {
  BigInt n = 0;
  for (const auto& c : classes) n += c.multiplicity;
  return n;
}

double TypeClassSpectrum::total_mass() const {
  double m = 0.0, comp = 0.0;
  for (const auto& c : classes) {
    const double x = class_mass(c) - comp;
    const double t = m + x;
    comp = (t - m) - x;
    m = t;
  }
  return m;
}

TypeClassSpectrum product_spectrum(const SchmidtVector& a, int n,
                                   std::size_t class_budget) {
  if (n < 0) throw std::invalid_argument("product_spectrum: n < 0");
  const int d = static_cast<int>(a.rank());
  TypeClassSpectrum out;
  out.copies = n;
  out.base_dim = d;
  if (n == 0) {
    out.classes.push_back({0.0, BigInt(1)});
    return out;
  }

  const BigInt composition_count = binomial(BigInt(n + d - 1), BigInt(d - 1));
  if (composition_count > class_budget) {
    throw BudgetExceeded("product_spectrum: " + composition_count.str() +
                         " type classes exceed budget " +
                         std::to_string(class_budget));
  }
  out.classes.reserve(composition_count.convert_to<std::size_t>());

  std::vector<double> log2p(a.probs().size());
  for (std::size_t i = 0; i < log2p.size(); ++i) {
    log2p[i] = std::log2(a.probs()[i]);
  }

  // Depth-first over compositions (k1..kd) of n, carrying the running
  // log-probability and the exact coefficient as a product of binomials
  // C(rem, k) per level.
  struct Frame {
    int level;
    int remaining;
    double log_prob;
    BigInt coeff;
  };
  std::vector<Frame> stack;
  stack.push_back({0, n, 0.0, BigInt(1)});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.level == d - 1) {
      out.classes.push_back(
          {f.log_prob + f.remaining * log2p[static_cast<std::size_t>(f.level)],
           std::move(f.coeff)});
      continue;
    }
    BigInt binom = 1;  // C(remaining, k), updated incrementally
    for (int k = 0; k <= f.remaining; ++k) {
      if (k > 0) {
        binom *= f.remaining - (k - 1);
        binom /= k;
      }
      stack.push_back({f.level + 1, f.remaining - k,
                       f.log_prob + k * log2p[static_cast<std::size_t>(f.level)],
                       f.coeff * binom});
    }
  }

  merge_equal_classes(out.classes);
  return out;
}

TypeClassSpectrum smoothed_truncate(const TypeClassSpectrum& s, double epsilon) {
  if (epsilon < 0.0 || epsilon >= 1.0) {
    throw std::invalid_argument("smoothed_truncate: epsilon must be in [0, 1)");
  }
  if (epsilon == 0.0) return s;

  TypeClassSpectrum out;
  out.copies = s.copies;
  out.base_dim = s.base_dim;
  double kept = 0.0, comp = 0.0;
  for (const auto& c : s.classes) {
    out.classes.push_back(c);
    const double x = class_mass(c) - comp;
    const double t = kept + x;
    comp = (t - kept) - x;
    kept = t;
    if (kept >= 1.0 - epsilon) break;
  }
  const double shift = -std::log2(kept);
  for (auto& c : out.classes) c.log2_prob += shift;
  return out;
}

bool spectra_majorizes(const TypeClassSpectrum& p, const TypeClassSpectrum& q,
                       double tol) {
  const CumulativeCurve cp(p);
  const CumulativeCurve cq(q);
  // The difference of the two cumulative curves is piecewise linear with
  // breakpoints at the class boundaries of either spectrum, so checking
  // every boundary of both (in one merged increasing sweep) is exhaustive.
  std::size_t ip = 0, iq = 0;          // next unvisited breakpoint per curve
  std::size_t cur_p = 0, cur_q = 0;    // evaluation cursors
  while (ip < cp.count.size() || iq < cq.count.size()) {
    BigInt k;
    if (iq >= cq.count.size() ||
        (ip < cp.count.size() && cp.count[ip] <= cq.count[iq])) {
      k = cp.count[ip];
      ++ip;
      if (iq < cq.count.size() && cq.count[iq] == k) ++iq;
    } else {
      k = cq.count[iq];
      ++iq;
    }
    if (cp.at(k, cur_p) > cq.at(k, cur_q) + tol) return false;
  }
  return true;
}

}  // namespace entax
