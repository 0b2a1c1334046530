#pragma once

#include <cstdint>
#include <vector>

#include "bbcell/bbcell.hpp"

namespace testutil {

using namespace bbcell;

/// Deterministic xorshift generator; avoids std distributions so the test
/// corpus is identical across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }

  /// Uniform-ish integer in [lo, hi].
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  Rational rational(long long max_num = 4, long long max_den = 3) {
    long long num = range(-max_num, max_num);
    long long den = range(1, max_den);
    return Rational(num, den);
  }

  Rational nonzero_rational(long long max_num = 4, long long max_den = 3) {
    while (true) {
      Rational r = rational(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

  WeightVector weight(int dim, long long lo = -3, long long hi = 3,
                      bool allow_zero = false) {
    WeightVector w;
    for (int i = 0; i < dim; ++i) {
      long long v = range(lo, hi);
      while (!allow_zero && v == 0) v = range(lo, hi);
      w.xi.push_back(v);
    }
    return w;
  }

  SignedOrder signed_order(int dim) {
    SignedOrder so;
    so.sign.resize(static_cast<size_t>(dim));
    so.perm.resize(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) {
      so.sign[static_cast<size_t>(i)] = range(0, 1) ? 1 : -1;
      so.perm[static_cast<size_t>(i)] = i;
    }
    for (int i = dim - 1; i > 0; --i) {
      int j = static_cast<int>(range(0, i));
      std::swap(so.perm[static_cast<size_t>(i)], so.perm[static_cast<size_t>(j)]);
    }
    return so;
  }

 private:
  uint64_t state_;
};

inline PolyQ qvar(int dim, int i) {
  return PolyQ::variable(dim, CoeffRing::rational(), i);
}

inline PolyQ qconst(int dim, Rational c) {
  return PolyQ::constant(dim, CoeffRing::rational(), std::move(c));
}

inline PolyQ qmono(int dim, Exponent e, Rational c = Rational(1)) {
  return PolyQ::monomial(dim, CoeffRing::rational(), std::move(e), std::move(c));
}

/// Random polynomial with small support and coefficients.
inline PolyQ random_poly(Rng& rng, int dim, int max_terms = 4, int max_exp = 3) {
  std::vector<PolyQ::Term> terms;
  int k = static_cast<int>(rng.range(1, max_terms));
  for (int t = 0; t < k; ++t) {
    Exponent e(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i)
      e[static_cast<size_t>(i)] = static_cast<int>(rng.range(0, max_exp));
    terms.emplace_back(std::move(e), rng.rational());
  }
  return PolyQ::from_terms(dim, CoeffRing::rational(), std::move(terms));
}

/// (x - p)^corner-style ideal of a fat point: the staircase monomial ideal
/// translated to sit at the given rational point.
inline IdealQ translated_staircase_ideal(const StandardSet& delta,
                                         const std::vector<Rational>& point) {
  const int d = delta.dim();
  std::vector<PolyQ> shifted_vars;
  for (int i = 0; i < d; ++i)
    shifted_vars.push_back(qvar(d, i) - qconst(d, point[static_cast<size_t>(i)]));
  std::vector<PolyQ> gens;
  for (const Exponent& c : delta.outer_corners()) {
    PolyQ g = qconst(d, Rational(1));
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < c[static_cast<size_t>(i)]; ++k)
        g = g * shifted_vars[static_cast<size_t>(i)];
    gens.push_back(std::move(g));
  }
  return make_ideal_q(d, std::move(gens));
}

/// Product of translated fat points at pairwise distinct points: supports
/// are coprime, so the product presents the intersection and the rank is
/// the sum of the staircase sizes.
struct CorpusInstance {
  IdealQ ideal;
  int expected_rank = 0;
};

inline CorpusInstance random_corpus_ideal(Rng& rng, int dim, int max_total) {
  const std::vector<Rational> coords = {
      Rational(0),      Rational(0), Rational(1),  Rational(-1),
      Rational(1, 2),   Rational(2), Rational(-2), Rational(0),
      Rational(-1, 2)};
  while (true) {
    int total = 0;
    std::vector<StandardSet> parts;
    std::vector<std::vector<Rational>> points;
    int npoints = static_cast<int>(rng.range(1, 2));
    for (int p = 0; p < npoints && total < max_total; ++p) {
      int n = static_cast<int>(rng.range(1, max_total - total));
      auto all = enumerate_standard_sets(dim, n);
      parts.push_back(all[static_cast<size_t>(rng.range(
          0, static_cast<long long>(all.size()) - 1))]);
      std::vector<Rational> pt;
      for (int i = 0; i < dim; ++i)
        pt.push_back(coords[static_cast<size_t>(rng.range(
            0, static_cast<long long>(coords.size()) - 1))]);
      points.push_back(std::move(pt));
      total += n;
    }
    bool distinct = true;
    for (size_t a = 0; a < points.size(); ++a)
      for (size_t b = a + 1; b < points.size(); ++b)
        if (points[a] == points[b]) distinct = false;
    if (!distinct) continue;
    // Product of the component ideals.
    std::vector<PolyQ> gens = {qconst(dim, Rational(1))};
    for (size_t p = 0; p < parts.size(); ++p) {
      IdealQ part = translated_staircase_ideal(parts[p], points[p]);
      std::vector<PolyQ> next;
      for (const PolyQ& a : gens)
        for (const PolyQ& b : part.gens) next.push_back(a * b);
      gens = std::move(next);
    }
    CorpusInstance inst{make_ideal_q(dim, std::move(gens)), total};
    if (artifacts(inst.ideal).rank != inst.expected_rank) continue;
    return inst;
  }
}

}  // namespace testutil
