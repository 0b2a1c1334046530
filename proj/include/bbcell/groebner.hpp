#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bbcell/errors.hpp"
#include "bbcell/linalg.hpp"
#include "bbcell/polynomial.hpp"
#include "bbcell/staircase.hpp"

namespace bbcell {

/// Global (well-founded) monomial order: grevlex on the first `split`
/// variables, ties broken by grevlex on the rest. split = 0 is plain
/// grevlex; split = k eliminates the first k variables.
struct BlockOrder {
  int dim;
  int split = 0;

  bool less(const Exponent& a, const Exponent& b) const {
    int c = grevlex_compare_range(a, b, 0, split);
    if (c != 0) return c < 0;
    return grevlex_compare_range(a, b, split, dim) < 0;
  }
  bool greater(const Exponent& a, const Exponent& b) const { return less(b, a); }
};

inline const std::pair<Exponent, Rational>& leading_term(const PolyQ& f,
                                                         const BlockOrder& ord) {
  if (f.is_zero()) throw ZeroPolynomial("leading term of zero");
  const auto& terms = f.terms();
  size_t best = 0;
  for (size_t i = 1; i < terms.size(); ++i)
    if (ord.less(terms[best].first, terms[i].first)) best = i;
  return terms[best];
}

/// Full normal form of f modulo basis: repeatedly cancels the largest
/// reducible term. Terminates because the order is global.
inline PolyQ normal_form(PolyQ f, const std::vector<PolyQ>& basis,
                         const BlockOrder& ord, long* steps = nullptr) {
  PolyQ remainder(f.dim(), f.ring());
  while (!f.is_zero()) {
    const auto& [m, c] = leading_term(f, ord);
    bool reduced = false;
    for (const PolyQ& g : basis) {
      const auto& [gm, gc] = leading_term(g, ord);
      if (!divides(gm, m)) continue;
      f = f - g.times_term(m - gm, c / gc);
      if (steps) ++*steps;
      reduced = true;
      break;
    }
    if (!reduced) {
      PolyQ t = PolyQ::monomial(f.dim(), f.ring(), m, c);
      remainder = remainder + t;
      f = f - t;
    }
  }
  return remainder;
}

struct GroebnerBasis {
  std::vector<PolyQ> polys;  // reduced: monic, minimal, tails irreducible
  long spairs_formed = 0;
  long reduction_steps = 0;
};

inline PolyQ s_polynomial(const PolyQ& f, const PolyQ& g, const BlockOrder& ord) {
  const auto& [mf, cf] = leading_term(f, ord);
  const auto& [mg, cg] = leading_term(g, ord);
  Exponent lcm(mf.size());
  for (size_t i = 0; i < mf.size(); ++i) lcm[i] = std::max(mf[i], mg[i]);
  return f.times_term(lcm - mf, cf.inverse()) - g.times_term(lcm - mg, cg.inverse());
}

/// Buchberger with the coprime-leading-term criterion, followed by
/// minimalization and tail reduction. The final basis is verified: every
/// S-polynomial must reduce to zero.
inline GroebnerBasis buchberger_reduced(std::vector<PolyQ> gens,
                                        const BlockOrder& ord) {
  GroebnerBasis out;
  std::vector<PolyQ> basis;
  for (PolyQ& g : gens)
    if (!g.is_zero()) basis.push_back(std::move(g));
  if (basis.empty()) return out;

  // TODO: the chain criterion would trim more pairs than coprimality alone.
  auto coprime = [](const Exponent& a, const Exponent& b) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] > 0 && b[i] > 0) return false;
    return true;
  };

  std::vector<std::pair<size_t, size_t>> queue;
  auto push_pairs = [&](size_t upto) {
    for (size_t i = 0; i < upto; ++i) queue.emplace_back(i, upto);
  };
  for (size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    // Deterministic normal selection: smallest lcm in the global order.
    size_t pick = 0;
    auto lcm_of = [&](const std::pair<size_t, size_t>& pr) {
      const Exponent& a = leading_term(basis[pr.first], ord).first;
      const Exponent& b = leading_term(basis[pr.second], ord).first;
      Exponent l(a.size());
      for (size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
      return l;
    };
    Exponent best = lcm_of(queue[0]);
    for (size_t i = 1; i < queue.size(); ++i) {
      Exponent l = lcm_of(queue[i]);
      if (ord.less(l, best) || (l == best && queue[i] < queue[pick])) {
        best = l;
        pick = i;
      }
    }
    auto [i, j] = queue[pick];
    queue.erase(queue.begin() + static_cast<long>(pick));

    const Exponent& mi = leading_term(basis[i], ord).first;
    const Exponent& mj = leading_term(basis[j], ord).first;
    if (coprime(mi, mj)) continue;
    ++out.spairs_formed;
    PolyQ r = normal_form(s_polynomial(basis[i], basis[j], ord), basis, ord,
                          &out.reduction_steps);
    if (!r.is_zero()) {
      basis.push_back(std::move(r));
      push_pairs(basis.size() - 1);
    }
  }

  // Minimalize: drop elements whose leading term another one divides.
  std::vector<PolyQ> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    const Exponent& mi = leading_term(basis[i], ord).first;
    bool keep = true;
    for (size_t j = 0; j < basis.size() && keep; ++j) {
      if (i == j) continue;
      const Exponent& mj = leading_term(basis[j], ord).first;
      if (mj == mi ? j < i : divides(mj, mi)) keep = false;
    }
    if (keep) minimal.push_back(basis[i]);
  }

  // Reduce tails and normalize to monic.
  std::vector<PolyQ> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<PolyQ> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    PolyQ r = normal_form(minimal[i], others, ord, &out.reduction_steps);
    if (r.is_zero()) continue;
    const auto& [m, c] = leading_term(r, ord);
    reduced.push_back(r.scaled(c.inverse()));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const PolyQ& a, const PolyQ& b) {
    return ord.less(leading_term(a, ord).first, leading_term(b, ord).first);
  });

  // Buchberger criterion, re-checked on the final basis.
  for (size_t i = 0; i < reduced.size(); ++i)
    for (size_t j = i + 1; j < reduced.size(); ++j) {
      PolyQ s = s_polynomial(reduced[i], reduced[j], ord);
      if (!normal_form(s, reduced, ord).is_zero())
        throw InternalError("S-polynomial does not reduce to zero");
    }

  out.polys = std::move(reduced);
  return out;
}

/// Cached engine data for a zero-dimensional ideal over the rationals:
/// reduced grevlex basis, the quotient staircase, and one multiplication
/// matrix per variable (columns are normal forms of x_i * basis monomial).
struct EngineArtifacts {
  GroebnerBasis gb;
  std::vector<Exponent> lead_terms;
  StandardSet quotient_basis;
  std::vector<Exponent> basis;  // ascending grevlex
  int rank = 0;
  std::vector<MatQ> mult;

  int basis_index(const Exponent& e) const {
    for (size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == e) return static_cast<int>(i);
    return -1;
  }
};

template <class R>
struct IdealPresentation {
  CoeffRing ring;
  int dim = 0;
  std::vector<Polynomial<R>> gens;
  mutable std::shared_ptr<const EngineArtifacts> cache;
};

using IdealQ = IdealPresentation<Rational>;
using IdealD = IdealPresentation<DualNumber>;

/// Normalizes a generator list: drops zeros, deduplicates structurally.
template <class R>
IdealPresentation<R> make_ideal(int dim, CoeffRing ring,
                                std::vector<Polynomial<R>> gens) {
  IdealPresentation<R> ideal;
  ideal.ring = ring;
  ideal.dim = dim;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.dim() != dim) throw DimensionMismatch("generator dimension mismatch");
    if (g.ring() != ring) throw MixedRings("generator over a different ring");
    bool dup = false;
    for (const auto& h : ideal.gens)
      if (h == g) dup = true;
    if (!dup) ideal.gens.push_back(std::move(g));
  }
  return ideal;
}

inline IdealQ make_ideal_q(int dim, std::vector<PolyQ> gens) {
  return make_ideal<Rational>(dim, CoeffRing::rational(), std::move(gens));
}

namespace detail {

/// Standard monomials of a monomial leading-term ideal; throws unless a
/// pure power of every variable appears (the structural zero-dimensionality
/// criterion).
inline std::vector<Exponent> staircase_of_leads(int dim,
                                                const std::vector<Exponent>& leads) {
  for (const Exponent& m : leads)
    if (total_degree(m) == 0) return {};  // unit ideal: empty subscheme
  std::vector<int> cap(static_cast<size_t>(dim), -1);
  for (const Exponent& m : leads) {
    int nz = -1;
    bool pure = true;
    for (int i = 0; i < dim; ++i) {
      if (m[static_cast<size_t>(i)] == 0) continue;
      if (nz >= 0) pure = false;
      nz = i;
    }
    if (pure && nz >= 0) {
      int& c = cap[static_cast<size_t>(nz)];
      int e = m[static_cast<size_t>(nz)];
      if (c < 0 || e < c) c = e;
    }
  }
  for (int i = 0; i < dim; ++i)
    if (cap[static_cast<size_t>(i)] < 0)
      throw NotZeroDimensional("no pure power of x" + std::to_string(i + 1) +
                               " among leading terms");
  std::vector<Exponent> standard;
  for (const Exponent& e : box_exponents(cap)) {
    bool divisible = false;
    for (const Exponent& m : leads)
      if (divides(m, e)) divisible = true;
    if (!divisible) standard.push_back(e);
  }
  return standard;
}

}  // namespace detail

/// Computes (and caches) the grevlex engine artifacts. Throws
/// NotZeroDimensional when the quotient is not finite over Q.
inline const EngineArtifacts& artifacts(const IdealQ& ideal) {
  if (ideal.cache) return *ideal.cache;
  if (ideal.ring.is_dual())
    throw MixedRings("groebner engine requires the rational field");
  auto art = std::make_shared<EngineArtifacts>();
  BlockOrder ord{ideal.dim, 0};
  art->gb = buchberger_reduced(ideal.gens, ord);
  if (art->gb.polys.empty())
    throw NotZeroDimensional("zero ideal has infinite quotient");
  for (const PolyQ& g : art->gb.polys)
    art->lead_terms.push_back(leading_term(g, ord).first);
  std::vector<Exponent> standard =
      detail::staircase_of_leads(ideal.dim, art->lead_terms);
  art->quotient_basis = StandardSet::validate(ideal.dim, standard);
  art->basis = art->quotient_basis.elements();
  std::sort(art->basis.begin(), art->basis.end(),
            [&](const Exponent& a, const Exponent& b) { return ord.less(a, b); });
  art->rank = static_cast<int>(art->basis.size());

  const int n = art->rank;
  auto coords = [&](const PolyQ& f) {
    VecQ v(static_cast<size_t>(n));
    for (const auto& [m, c] : f.terms()) {
      int idx = art->basis_index(m);
      if (idx < 0) throw InternalError("normal form outside quotient basis");
      v[static_cast<size_t>(idx)] = c;
    }
    return v;
  };
  for (int i = 0; i < ideal.dim; ++i) {
    MatQ m = mat_zero(n, n);
    for (int j = 0; j < n; ++j) {
      PolyQ xb = PolyQ::monomial(ideal.dim, ideal.ring,
                                 art->basis[static_cast<size_t>(j)] +
                                     unit_exponent(ideal.dim, i),
                                 Rational(1));
      VecQ col = coords(normal_form(xb, art->gb.polys, ord));
      for (int r = 0; r < n; ++r)
        m[static_cast<size_t>(r)][static_cast<size_t>(j)] =
            col[static_cast<size_t>(r)];
    }
    art->mult.push_back(std::move(m));
  }
  for (size_t i = 0; i < art->mult.size(); ++i)
    for (size_t j = i + 1; j < art->mult.size(); ++j)
      if (!mat_equal(mat_mul(art->mult[i], art->mult[j]),
                     mat_mul(art->mult[j], art->mult[i])))
        throw InternalError("multiplication matrices do not commute");

  ideal.cache = art;
  return *ideal.cache;
}

/// Image of f in the quotient, as coordinates over the grevlex staircase.
inline VecQ normal_form_coords(const PolyQ& f, const EngineArtifacts& art) {
  BlockOrder ord{f.dim(), 0};
  PolyQ r = normal_form(f, art.gb.polys, ord);
  VecQ v(static_cast<size_t>(art.rank));
  for (const auto& [m, c] : r.terms()) {
    int idx = art.basis_index(m);
    if (idx < 0) throw InternalError("normal form outside quotient basis");
    v[static_cast<size_t>(idx)] = c;
  }
  return v;
}

inline bool ideal_member(const PolyQ& f, const IdealQ& ideal) {
  return vec_is_zero(normal_form_coords(f, artifacts(ideal)));
}

/// Monic generator of I intersect Q[x_i], found from the first linear
/// dependence among normal forms of powers of x_i. Returned univariate
/// (dimension 1).
inline PolyQ min_poly(const EngineArtifacts& art, int var) {
  const CoeffRing ring = CoeffRing::rational();
  const int n = art.rank;
  if (n == 0) return PolyQ::constant(1, ring, Rational(1));
  const MatQ& m = art.mult[static_cast<size_t>(var)];
  int one_idx = art.basis_index(zero_exponent(static_cast<int>(art.basis[0].size())));
  if (one_idx < 0) throw InternalError("quotient basis misses the constant monomial");
  VecQ v(static_cast<size_t>(n));
  v[static_cast<size_t>(one_idx)] = Rational(1);
  IncrementalSolver solver(n);
  for (int k = 0; k <= n; ++k) {
    auto dep = solver.insert(v);
    if (dep) {
      std::vector<PolyQ::Term> terms;
      terms.emplace_back(Exponent{k}, Rational(1));
      for (int j = 0; j < k; ++j) {
        Rational c = -(*dep)[static_cast<size_t>(j)];
        if (!c.is_zero()) terms.emplace_back(Exponent{j}, c);
      }
      return PolyQ::from_terms(1, ring, std::move(terms));
    }
    v = mat_vec(m, v);
  }
  throw InternalError("no minimal polynomial within rank bound");
}

/// Reduced grevlex bases are canonical, so ideal equality is structural.
inline bool ideal_equal(const IdealQ& a, const IdealQ& b) {
  if (a.dim != b.dim) return false;
  BlockOrder ord{a.dim, 0};
  GroebnerBasis ga = buchberger_reduced(a.gens, ord);
  GroebnerBasis gb = buchberger_reduced(b.gens, ord);
  return ga.polys == gb.polys;
}

}  // namespace bbcell
