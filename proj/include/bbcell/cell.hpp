#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bbcell/groebner.hpp"
#include "bbcell/linalg.hpp"
#include "bbcell/oracle.hpp"
#include "bbcell/order.hpp"
#include "bbcell/staircase.hpp"

namespace bbcell {

struct NotBounded : Error {
  NotBounded(int var, std::string min_poly_text)
      : Error("not bounded: x" + std::to_string(var + 1) +
              " has minimal polynomial " + min_poly_text +
              ", not a pure power"),
        var(var),
        min_poly_text(std::move(min_poly_text)) {}
  int var;
  std::string min_poly_text;
};

/// Per-variable exponents r_i and witnesses h_i in I intersect Q[x_i]:
/// an exact pure power for negative variables, leading-term pure power
/// (the minimal polynomial) for positive ones.
struct BoundednessCertificate {
  std::vector<int> exponent;   // r_i
  std::vector<PolyQ> witness;  // univariate, dimension 1
};

struct BoundednessResult {
  bool bounded = false;
  BoundednessCertificate cert;
  int offending_var = -1;
  PolyQ offending_min_poly{1, CoeffRing::rational()};
};

inline BoundednessResult boundedness(const IdealQ& ideal, const QHOrder& order) {
  if (!order.is_total()) throw Error("boundedness needs a total order");
  if (order.dim() != ideal.dim)
    throw DimensionMismatch("order dimension mismatch");
  const EngineArtifacts& art = artifacts(ideal);
  BoundednessResult res;
  res.cert.exponent.resize(static_cast<size_t>(ideal.dim));
  for (int i = 0; i < ideal.dim; ++i) {
    PolyQ mp = min_poly(art, i);
    if (!order.variable_positive(i) && !mp.is_monomial()) {
      res.bounded = false;
      res.offending_var = i;
      res.offending_min_poly = mp;
      return res;
    }
    res.cert.exponent[static_cast<size_t>(i)] = mp.degree_in(0);
    res.cert.witness.push_back(std::move(mp));
  }
  res.bounded = true;
  return res;
}

/// The staircase of the initial ideal under a total quasi-homogeneous
/// order, with the monic reduced basis indexed by the outer corners.
struct InitialStaircaseResult {
  StandardSet staircase;
  std::vector<Exponent> corners;  // ascending lex
  std::vector<PolyQ> basis;       // aligned with corners; tails in staircase
  std::vector<int> box;           // extents of the search box
  long steps = 0;
};

/// Order change by finite-box linear algebra: enumerate box monomials in
/// increasing order; a monomial is standard when its normal form is
/// independent of the normal forms of the previously accepted ones, and a
/// dependency yields a basis element with that monomial as its only
/// initial term.
inline InitialStaircaseResult initial_staircase(const IdealQ& ideal,
                                                const QHOrder& order) {
  const EngineArtifacts& art = artifacts(ideal);
  BoundednessResult bnd = boundedness(ideal, order);
  if (!bnd.bounded)
    throw NotBounded(bnd.offending_var, poly_str(bnd.offending_min_poly));
  const int d = ideal.dim;
  const int n = art.rank;

  InitialStaircaseResult out;
  out.box.resize(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i)
    out.box[static_cast<size_t>(i)] =
        std::max(bnd.cert.exponent[static_cast<size_t>(i)], n + 1);

  std::vector<Exponent> monos = box_exponents(out.box);
  std::sort(monos.begin(), monos.end(),
            [&](const Exponent& a, const Exponent& b) { return order.less(a, b); });

  IncrementalSolver solver(n);
  std::vector<Exponent> accepted;
  std::map<Exponent, PolyQ> rejected;  // monomial -> monic witness
  for (const Exponent& m : monos) {
    ++out.steps;
    VecQ v = normal_form_coords(
        PolyQ::monomial(d, ideal.ring, m, Rational(1)), art);
    auto dep = solver.insert(std::move(v));
    if (!dep) {
      accepted.push_back(m);
      continue;
    }
    PolyQ g = PolyQ::monomial(d, ideal.ring, m, Rational(1));
    for (size_t k = 0; k < dep->size(); ++k) {
      const Rational& c = (*dep)[k];
      if (c.is_zero()) continue;
      g = g - PolyQ::monomial(d, ideal.ring, accepted[k], c);
    }
    rejected.emplace(m, std::move(g));
  }
  if (static_cast<int>(accepted.size()) != n)
    throw InternalError("initial staircase box yielded " +
                        std::to_string(accepted.size()) +
                        " standard monomials, expected " + std::to_string(n));
  out.staircase = StandardSet::validate(d, accepted);
  out.corners = out.staircase.outer_corners();
  for (const Exponent& c : out.corners) {
    auto it = rejected.find(c);
    if (it == rejected.end())
      throw InternalError("outer corner not witnessed inside the box");
    out.basis.push_back(it->second);
  }
  return out;
}

struct MonicResult {
  bool ok = false;
  std::string diagnosis;  // empty when ok
  int rank = 0;
  BoundednessResult bounds;
  std::optional<InitialStaircaseResult> staircase;
};

/// Tests the three clauses in order: quotient rank equals the cardinality,
/// boundedness, and staircase of the initial ideal equal to delta.
inline MonicResult delta_monic(const IdealQ& ideal, const QHOrder& order,
                               const StandardSet& delta) {
  MonicResult res;
  const EngineArtifacts& art = artifacts(ideal);
  res.rank = art.rank;
  std::vector<std::string> failures;
  if (art.rank != delta.size())
    failures.push_back("quotient rank " + std::to_string(art.rank) +
                       " != " + std::to_string(delta.size()));
  res.bounds = boundedness(ideal, order);
  if (!res.bounds.bounded) {
    failures.push_back("not bounded");
  } else {
    res.staircase = initial_staircase(ideal, order);
    if (res.staircase->staircase != delta)
      failures.push_back("initial staircase " + res.staircase->staircase.str() +
                         " != " + delta.str());
  }
  if (failures.empty()) {
    res.ok = true;
    return res;
  }
  for (size_t i = 0; i < failures.size(); ++i) {
    if (i) res.diagnosis += "; ";
    res.diagnosis += failures[i];
  }
  return res;
}

/// Division with a staircase-split remainder: f = sum quotients_j * basis_j
/// + r_delta + r_prime, where r_delta is supported in the staircase and
/// every term of r_prime has weight below the minimum over the staircase.
struct DivisionResult {
  std::vector<PolyQ> quotients;  // aligned with the corner basis
  PolyQ r_delta;
  PolyQ r_prime;
  long iterations = 0;
};

inline long default_division_limit(const InitialStaircaseResult& isr) {
  long box = 1;
  for (int e : isr.box) box *= e;
  return 10L * isr.staircase.size() * box;
}

inline DivisionResult divide(const PolyQ& f, const InitialStaircaseResult& isr,
                             const QHOrder& order, long max_iter = 0) {
  if (!order.is_total()) throw Error("division needs a total order");
  const StandardSet& delta = isr.staircase;
  if (f.dim() != delta.dim())
    throw DimensionMismatch("dividend dimension mismatch");
  if (max_iter <= 0) max_iter = default_division_limit(isr);

  // Terms below every staircase weight stay in r_prime; with an empty
  // staircase the constraint is vacuous and nothing needs reducing.
  long long min_weight = 0;
  bool have_min = false;
  for (const Exponent& e : delta.elements()) {
    long long w = order.weight().value(e);
    if (!have_min || w < min_weight) min_weight = w;
    have_min = true;
  }

  DivisionResult res{std::vector<PolyQ>(isr.basis.size(),
                                        PolyQ(f.dim(), f.ring())),
                     PolyQ(f.dim(), f.ring()), PolyQ(f.dim(), f.ring()), 0};
  PolyQ rest = f;
  while (true) {
    // Largest term outside the staircase.
    const Exponent* top = nullptr;
    const Rational* top_c = nullptr;
    for (const auto& [m, c] : rest.terms()) {
      if (delta.contains(m)) continue;
      if (!top || order.less(*top, m)) {
        top = &m;
        top_c = &c;
      }
    }
    if (!top || !have_min || order.weight().value(*top) < min_weight) break;
    if (++res.iterations > max_iter)
      throw IterationLimit("division exceeded " + std::to_string(max_iter) +
                           " iterations");
    size_t pick = isr.corners.size();
    for (size_t k = 0; k < isr.corners.size(); ++k) {
      if (divides(isr.corners[k], *top)) {
        pick = k;
        break;
      }
    }
    if (pick == isr.corners.size())
      throw InternalError("monomial outside the staircase has no corner divisor");
    Exponent q = *top - isr.corners[pick];
    Rational c = *top_c;
    res.quotients[pick] =
        res.quotients[pick] + PolyQ::monomial(f.dim(), f.ring(), q, c);
    rest = rest - isr.basis[pick].times_term(q, c);
  }
  for (const auto& [m, c] : rest.terms()) {
    PolyQ t = PolyQ::monomial(f.dim(), f.ring(), m, c);
    if (delta.contains(m))
      res.r_delta = res.r_delta + t;
    else
      res.r_prime = res.r_prime + t;
  }
  return res;
}

/// Membership through the staircase-split remainder.
inline bool divides_to_zero(const PolyQ& f, const InitialStaircaseResult& isr,
                            const QHOrder& order) {
  return divide(f, isr, order).r_delta.is_zero();
}

/// For each negative variable x_i, certifies x_i^n in the ideal by checking
/// that the staircase-split remainder vanishes. The staircase result must
/// come from a successful delta_monic run.
inline std::vector<std::pair<int, bool>> xn_membership(
    const IdealQ& ideal, const QHOrder& order, const InitialStaircaseResult& isr) {
  std::vector<std::pair<int, bool>> out;
  const int n = isr.staircase.size();
  for (int i = 0; i < ideal.dim; ++i) {
    if (order.variable_positive(i)) continue;
    Exponent e = zero_exponent(ideal.dim);
    e[static_cast<size_t>(i)] = n;
    PolyQ p = PolyQ::monomial(ideal.dim, ideal.ring, e, Rational(1));
    out.emplace_back(i, divide(p, isr, order).r_delta.is_zero());
  }
  return out;
}

struct BBResult {
  bool member = false;
  std::string diagnosis;
  MonicResult plus;
  MonicResult minus;
};

/// Membership in the Bialynicki-Birula locus of the staircase: the ideal
/// must be delta-monic for both orders of the canonical pair. A custom
/// signed tie-break replaces the canonical all-plus identity one; the two
/// polarities still bracket the weight.
inline BBResult bb_membership(const IdealQ& ideal, const WeightVector& xi,
                              const StandardSet& delta,
                              const std::optional<SignedOrder>& tie = std::nullopt) {
  QHOrder plus = tie ? QHOrder::total(xi, *tie, Polarity::kPlus)
                     : QHOrder::canonical_pair(xi).first;
  QHOrder minus = tie ? QHOrder::total(xi, *tie, Polarity::kMinus)
                      : QHOrder::canonical_pair(xi).second;
  BBResult res;
  res.plus = delta_monic(ideal, plus, delta);
  res.minus = delta_monic(ideal, minus, delta);
  res.member = res.plus.ok && res.minus.ok;
  if (!res.plus.ok)
    res.diagnosis = res.plus.diagnosis;
  else if (!res.minus.ok)
    res.diagnosis = "minus order: " + res.minus.diagnosis;
  return res;
}

struct FlatLimitResult {
  IdealQ limit;
  std::optional<StandardSet> staircase;  // set when the limit is monomial
};

/// The flat limit of the torus flow: generated by the weight-partial-order
/// initial forms of the plus-order reduced basis. Requires boundedness for
/// the plus order.
inline FlatLimitResult flat_limit(const IdealQ& ideal, const WeightVector& xi) {
  auto [plus, minus] = QHOrder::canonical_pair(xi);
  InitialStaircaseResult isr = initial_staircase(ideal, plus);  // may throw
  QHOrder partial = QHOrder::partial(xi);
  std::vector<PolyQ> gens;
  for (const PolyQ& g : isr.basis) gens.push_back(initial_form(g, partial));
  FlatLimitResult out{make_ideal_q(ideal.dim, std::move(gens)), std::nullopt};
  try {
    const EngineArtifacts& art = artifacts(out.limit);
    bool monomial = true;
    for (const PolyQ& g : art.gb.polys)
      if (!g.is_monomial()) monomial = false;
    if (monomial) out.staircase = art.quotient_basis;
  } catch (const NotZeroDimensional&) {
    // the limit presentation is still returned; it just has no staircase
  }
  return out;
}

/// flat_limit cross-validated against the saturation oracle; a mismatch is
/// a defect, reported as InternalError.
inline FlatLimitResult flat_limit_checked(const IdealQ& ideal,
                                          const WeightVector& xi) {
  FlatLimitResult res = flat_limit(ideal, xi);
  DegenerationResult deg = degeneration_oracle(ideal, xi);
  if (!ideal_equal(res.limit, deg.limit))
    throw InternalError("flat limit disagrees with the degeneration oracle");
  return res;
}

}  // namespace bbcell
