#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "bbcell/groebner.hpp"
#include "bbcell/linalg.hpp"
#include "bbcell/order.hpp"
#include "bbcell/staircase.hpp"

namespace bbcell {

namespace detail {

/// Q-linear coordinates for B-span(box monomials), B = Q[eps]/(eps^N):
/// index = monomial index * N + eps power. Monomials ascending lex.
struct DualBox {
  int dim;
  int eps_order;
  std::vector<int> extents;
  std::vector<Exponent> monos;

  DualBox(int dim, int eps_order, std::vector<int> extents_in)
      : dim(dim), eps_order(eps_order), extents(std::move(extents_in)) {
    monos = box_exponents(extents);
  }

  int mono_index(const Exponent& e) const {
    auto it = std::lower_bound(
        monos.begin(), monos.end(), e,
        [](const Exponent& a, const Exponent& b) { return lex_compare(a, b) < 0; });
    if (it == monos.end() || *it != e) return -1;
    return static_cast<int>(it - monos.begin());
  }

  size_t width() const { return monos.size() * static_cast<size_t>(eps_order); }

  bool inside(const Exponent& e) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] >= extents[i]) return false;
    return true;
  }

  /// Encodes f, dropping terms outside the box (valid only when the caller
  /// has certified the pure powers x_i^{extents_i} as ideal members).
  VecQ encode_clipped(const PolyD& f) const {
    VecQ v(width());
    for (const auto& [m, c] : f.terms()) {
      if (!inside(m)) continue;
      int mi = mono_index(m);
      for (int k = 0; k < eps_order; ++k) {
        if (c.coeff(k).is_zero()) continue;
        v[static_cast<size_t>(mi) * static_cast<size_t>(eps_order) +
          static_cast<size_t>(k)] = c.coeff(k);
      }
    }
    return v;
  }

  /// Multiplication by x_var with clipping at the box boundary.
  VecQ mult_var_clipped(const VecQ& v, int var) const {
    VecQ r(width());
    for (size_t mi = 0; mi < monos.size(); ++mi) {
      Exponent e = monos[mi];
      ++e[static_cast<size_t>(var)];
      if (!inside(e)) continue;
      int ti = mono_index(e);
      for (int k = 0; k < eps_order; ++k) {
        const Rational& c =
            v[mi * static_cast<size_t>(eps_order) + static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        r[static_cast<size_t>(ti) * static_cast<size_t>(eps_order) +
          static_cast<size_t>(k)] = c;
      }
    }
    return r;
  }

  /// Multiplication by eps (truncates at eps^N).
  VecQ mult_eps(const VecQ& v) const {
    VecQ r(width());
    for (size_t mi = 0; mi < monos.size(); ++mi)
      for (int k = 0; k + 1 < eps_order; ++k) {
        const Rational& c =
            v[mi * static_cast<size_t>(eps_order) + static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        r[mi * static_cast<size_t>(eps_order) + static_cast<size_t>(k) + 1] = c;
      }
    return r;
  }
};

}  // namespace detail

/// Searches for an exact witness of x_var^r as a B-combination of shifted
/// generators inside a bounded expansion box. Sound but not complete: a
/// miss reports failure even though a witness might exist beyond the box.
inline bool verify_pure_power_bound(const IdealD& ideal, int var, int r) {
  const int d = ideal.dim;
  const int N = ideal.ring.eps_order;
  std::vector<int> extents(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    int maxdeg = 0;
    for (const PolyD& g : ideal.gens) maxdeg = std::max(maxdeg, g.degree_in(i));
    extents[static_cast<size_t>(i)] = (i == var ? r : 0) + maxdeg + 1;
  }
  detail::DualBox box(d, N, extents);
  IncrementalSolver solver(static_cast<int>(box.width()));
  for (const PolyD& g : ideal.gens) {
    std::vector<int> room(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i)
      room[static_cast<size_t>(i)] =
          extents[static_cast<size_t>(i)] - g.degree_in(i);
    for (const Exponent& shift : box_exponents(room)) {
      PolyD shifted = g.times_term(shift, coeff_traits<DualNumber>::one(ideal.ring));
      VecQ base = box.encode_clipped(shifted);  // nothing clips: it fits
      for (int k = 0; k < N; ++k) {
        solver.insert(base);
        base = box.mult_eps(base);
      }
    }
  }
  Exponent target = zero_exponent(d);
  target[static_cast<size_t>(var)] = r;
  PolyD tp = PolyD::monomial(d, ideal.ring, target,
                             coeff_traits<DualNumber>::one(ideal.ring));
  return solver.express(box.encode_clipped(tp)).has_value();
}

inline void verify_bounds_or_throw(const IdealD& ideal,
                                   const std::vector<int>& bounds) {
  if (static_cast<int>(bounds.size()) != ideal.dim)
    throw DimensionMismatch("one pure-power bound per variable required");
  for (int i = 0; i < ideal.dim; ++i) {
    if (bounds[static_cast<size_t>(i)] < 1)
      throw BoundNotVerified("bounds must be at least 1");
    if (!verify_pure_power_bound(ideal, i, bounds[static_cast<size_t>(i)]))
      throw BoundNotVerified("no witness found for x" + std::to_string(i + 1) +
                             "^" + std::to_string(bounds[static_cast<size_t>(i)]));
  }
}

namespace detail {

/// Basis of I intersect span_B(box): the span of the clipped generators
/// closed under multiplication by the variables and by eps.
inline std::vector<VecQ> box_closure(const IdealD& ideal, const DualBox& box) {
  IncrementalSolver solver(static_cast<int>(box.width()));
  std::vector<VecQ> basis;
  std::deque<VecQ> queue;
  auto offer = [&](VecQ v) {
    if (vec_is_zero(v)) return;
    if (!solver.insert(v)) {
      basis.push_back(v);
      queue.push_back(std::move(v));
    }
  };
  for (const PolyD& g : ideal.gens) offer(box.encode_clipped(g));
  while (!queue.empty()) {
    VecQ w = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < box.dim; ++i) offer(box.mult_var_clipped(w, i));
    offer(box.mult_eps(w));
  }
  return basis;
}

}  // namespace detail

namespace detail {

/// All coefficient-ideal descriptors at once. Gaussian elimination over the
/// closure with columns taken in order-descending monomial blocks puts each
/// row's pivot at the largest monomial it touches; a pivot at (m, eps^k)
/// witnesses valuation k in in_m(I), and rows pivoted strictly below m
/// cannot touch m at all.
class DualCoeffTable {
 public:
  DualCoeffTable(const DualBox& box, std::vector<VecQ> rows,
                 const QHOrder& order)
      : box_(box), min_val_(box.monos.size(), -1) {
    const int N = box.eps_order;
    std::vector<size_t> mono_order(box.monos.size());
    for (size_t i = 0; i < mono_order.size(); ++i) mono_order[i] = i;
    std::sort(mono_order.begin(), mono_order.end(), [&](size_t a, size_t b) {
      return order.compare(box.monos[a], box.monos[b]) == Cmp::kGreater;
    });
    size_t rank = 0;
    for (size_t oi = 0; oi < mono_order.size() && rank < rows.size(); ++oi) {
      for (int k = 0; k < N; ++k) {
        size_t col = mono_order[oi] * static_cast<size_t>(N) +
                     static_cast<size_t>(k);
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        Rational inv = rows[rank][col].inverse();
        for (size_t r = 0; r < rows.size(); ++r) {
          if (r == rank || rows[r][col].is_zero()) continue;
          Rational f = rows[r][col] * inv;
          for (size_t c = 0; c < rows[r].size(); ++c)
            rows[r][c] -= f * rows[rank][c];
        }
        int& entry = min_val_[mono_order[oi]];
        if (entry < 0 || k < entry) entry = k;
        ++rank;
      }
    }
  }

  CoeffIdeal descriptor(const Exponent& m) const {
    if (!box_.inside(m)) return CoeffIdeal::unit();
    int mi = box_.mono_index(m);
    int v = min_val_[static_cast<size_t>(mi)];
    return v < 0 ? CoeffIdeal::zero() : CoeffIdeal::power(v);
  }

 private:
  const DualBox& box_;
  std::vector<int> min_val_;  // -1 when no element has its initial at m
};

}  // namespace detail

/// The ideal of initial coefficients in_m(I) over B = Q[eps]/(eps^N),
/// computed by exact linear algebra inside the box of the verified pure
/// powers. A monomial outside the box is divisible by a certified pure
/// power, so its descriptor is the unit ideal.
inline CoeffIdeal initial_coeff_ideal(const IdealD& ideal, const Exponent& m,
                                      const QHOrder& order,
                                      const std::vector<int>& bounds) {
  if (!order.is_total()) throw Error("initial_coeff_ideal needs a total order");
  if (!ideal.ring.is_dual()) throw MixedRings("dual-number ideal required");
  verify_bounds_or_throw(ideal, bounds);
  detail::DualBox box(ideal.dim, ideal.ring.eps_order, bounds);
  if (!box.inside(m)) return CoeffIdeal::unit();
  detail::DualCoeffTable table(box, detail::box_closure(ideal, box), order);
  return table.descriptor(m);
}

struct DualMonicResult {
  bool ok = false;
  std::string diagnosis;
  std::vector<std::pair<Exponent, CoeffIdeal>> table;  // box monomials, asc lex
};

/// Delta-monic pattern over dual numbers: unit descriptor off the
/// staircase, zero descriptor on it (outside the box every descriptor is a
/// unit by the certified pure powers).
inline DualMonicResult dual_delta_monic(const IdealD& ideal, const QHOrder& order,
                                        const std::vector<int>& bounds,
                                        const StandardSet& delta) {
  if (!order.is_total()) throw Error("dual_delta_monic needs a total order");
  verify_bounds_or_throw(ideal, bounds);
  DualMonicResult res;
  detail::DualBox box(ideal.dim, ideal.ring.eps_order, bounds);
  for (const Exponent& e : delta.elements())
    if (!box.inside(e)) {
      res.diagnosis = "staircase element " + exponent_str(e) +
                      " is divisible by a certified pure power";
      return res;
    }
  detail::DualCoeffTable table(box, detail::box_closure(ideal, box), order);
  res.ok = true;
  for (const Exponent& m : box.monos) {
    CoeffIdeal desc = table.descriptor(m);
    if (delta.contains(m) ? !desc.is_zero() : !desc.is_unit()) {
      if (res.ok) {
        res.ok = false;
        res.diagnosis = "in_m at " + exponent_str(m) + " is " + desc.str() +
                        (delta.contains(m) ? ", expected 0" : ", expected <1>");
      }
    }
    res.table.emplace_back(m, desc);
  }
  return res;
}

/// Base change to the residue field (eps := 0), staying in the dual
/// machinery with truncation order 1.
inline IdealD residue_field_ideal(const IdealD& ideal) {
  CoeffRing ring = CoeffRing::dual(1);
  std::vector<PolyD> gens;
  for (const PolyD& g : ideal.gens) {
    std::vector<PolyD::Term> terms;
    for (const auto& [m, c] : g.terms()) {
      DualNumber v(1, c.coeff(0));
      if (!v.is_zero()) terms.emplace_back(m, std::move(v));
    }
    gens.push_back(PolyD::from_terms(g.dim(), ring, std::move(terms)));
  }
  return make_ideal<DualNumber>(ideal.dim, ring, std::move(gens));
}

}  // namespace bbcell
