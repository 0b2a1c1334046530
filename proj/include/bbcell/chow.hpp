#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bbcell/cell.hpp"
#include "bbcell/groebner.hpp"
#include "bbcell/linalg.hpp"

namespace bbcell {

/// Image of the ideal under the coordinatewise Hilbert-Chow map: the
/// characteristic polynomial of the multiplication matrix of x_var, whose
/// coefficients are the signed elementary symmetric functions of the n
/// coordinates. The origin of Sym^n(A^1) is L^n.
struct ChowPoint {
  int var = 0;
  PolyQ charpoly{1, CoeffRing::rational()};  // univariate, monic, degree n

  bool is_origin() const { return charpoly.is_monomial(); }
};

inline PolyQ charpoly_from_matrix(const MatQ& m) {
  const int n = static_cast<int>(m.size());
  VecQ c = charpoly_coeffs(m);
  std::vector<PolyQ::Term> terms;
  terms.emplace_back(Exponent{n}, Rational(1));
  for (int k = 1; k <= n; ++k)
    if (!c[static_cast<size_t>(k - 1)].is_zero())
      terms.emplace_back(Exponent{n - k}, c[static_cast<size_t>(k - 1)]);
  return PolyQ::from_terms(1, CoeffRing::rational(), std::move(terms));
}

inline ChowPoint chow_point(const EngineArtifacts& art, int var) {
  return {var, charpoly_from_matrix(art.mult[static_cast<size_t>(var)])};
}

/// The staircase monomials sorted descending in the order, and the matrix
/// of multiplication by x_var in that basis, entries via the
/// staircase-split division remainder.
struct DeltaBasisMatrix {
  std::vector<Exponent> basis;  // b_1 > b_2 > ... > b_n
  MatQ matrix;
};

inline DeltaBasisMatrix delta_mult_matrix(const IdealQ& ideal,
                                          const QHOrder& order,
                                          const InitialStaircaseResult& isr,
                                          int var) {
  DeltaBasisMatrix out;
  out.basis = isr.staircase.elements();
  std::sort(out.basis.begin(), out.basis.end(),
            [&](const Exponent& a, const Exponent& b) { return order.less(b, a); });
  const int n = static_cast<int>(out.basis.size());
  out.matrix = mat_zero(n, n);
  for (int j = 0; j < n; ++j) {
    Exponent e = out.basis[static_cast<size_t>(j)] + unit_exponent(ideal.dim, var);
    PolyQ xb = PolyQ::monomial(ideal.dim, ideal.ring, e, Rational(1));
    // r_delta is the image in the quotient even when a low remainder is
    // left over; the low remainder is itself an ideal member then.
    DivisionResult dv = divide(xb, isr, order);
    for (const auto& [m, c] : dv.r_delta.terms()) {
      auto it = std::find(out.basis.begin(), out.basis.end(), m);
      if (it == out.basis.end())
        throw InternalError("division remainder outside the staircase");
      out.matrix[static_cast<size_t>(it - out.basis.begin())]
                [static_cast<size_t>(j)] = c;
    }
  }
  return out;
}

struct TriangularityResult {
  bool strictly_lower = false;
  DeltaBasisMatrix data;
};

/// In the descending staircase basis, multiplication by a negative variable
/// has a strictly lower triangular matrix. A failure is a theorem
/// violation, reported loudly by callers.
inline TriangularityResult triangularity_check(const IdealQ& ideal,
                                               const QHOrder& order,
                                               const InitialStaircaseResult& isr,
                                               int var) {
  TriangularityResult res;
  res.data = delta_mult_matrix(ideal, order, isr, var);
  res.strictly_lower = true;
  const size_t n = res.data.basis.size();
  for (size_t r = 0; r < n; ++r)
    for (size_t c = r; c < n; ++c)
      if (!res.data.matrix[r][c].is_zero()) res.strictly_lower = false;
  return res;
}

/// Formal sum of pure tensors of univariate polynomials (slots are
/// polynomials in the distinguished variable, given in dimension 1).
struct PureTensor {
  std::vector<PolyQ> slots;
};

using TensorSum = std::vector<std::pair<Rational, PureTensor>>;

inline MatQ poly_of_matrix(const PolyQ& p, const MatQ& m) {
  const int n = static_cast<int>(m.size());
  MatQ acc = mat_zero(n, n);
  for (const auto& [e, c] : p.terms()) {
    MatQ pw = mat_identity(n);
    for (int k = 0; k < e[0]; ++k) pw = mat_mul(pw, m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        acc[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
            c * pw[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return acc;
}

/// Linearized determinant: the multilinear extension of
/// det(column_1 of P_1-multiplication, ..., column_n of P_n-multiplication)
/// in a fixed basis with multiplication matrix `mult` for the variable.
inline Rational linearized_determinant(const TensorSum& tensor, const MatQ& mult) {
  const int n = static_cast<int>(mult.size());
  Rational total(0);
  for (const auto& [coeff, pure] : tensor) {
    if (static_cast<int>(pure.slots.size()) != n)
      throw LengthMismatch("tensor length " + std::to_string(pure.slots.size()) +
                           " != quotient rank " + std::to_string(n));
    MatQ cols = mat_zero(n, n);
    for (int j = 0; j < n; ++j) {
      MatQ pm = poly_of_matrix(pure.slots[static_cast<size_t>(j)], mult);
      for (int i = 0; i < n; ++i)
        cols[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            pm[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    total += coeff * mat_det(cols);
  }
  return total;
}

/// Sum over all distinct permutations of the slots.
inline TensorSum symmetrize(const PureTensor& t) {
  std::vector<PolyQ> slots = t.slots;
  std::sort(slots.begin(), slots.end(),
            [](const PolyQ& a, const PolyQ& b) { return a.before(b); });
  TensorSum out;
  do {
    out.emplace_back(Rational(1), PureTensor{slots});
  } while (std::next_permutation(slots.begin(), slots.end(),
                                 [](const PolyQ& a, const PolyQ& b) {
                                   return a.before(b);
                                 }));
  return out;
}

/// Slotwise product, extended bilinearly.
inline TensorSum tensor_product(const TensorSum& a, const TensorSum& b) {
  TensorSum out;
  for (const auto& [ca, ta] : a)
    for (const auto& [cb, tb] : b) {
      if (ta.slots.size() != tb.slots.size())
        throw LengthMismatch("tensor product of different lengths");
      PureTensor prod;
      for (size_t j = 0; j < ta.slots.size(); ++j)
        prod.slots.push_back(ta.slots[j] * tb.slots[j]);
      out.emplace_back(ca * cb, std::move(prod));
    }
  return out;
}

struct FiberCheckResult {
  bool ok = true;
  std::string detail;
};

/// Executable form of the fiber theorem: on a member of the
/// Bialynicki-Birula locus, every coordinate with nonpositive weight maps
/// to the origin of Sym^n(A^1). Certifies triangularity, the charpoly, and
/// the vanishing of the linearized determinant on tensors with a slot
/// divisible by the variable.
inline FiberCheckResult fiber_check(const IdealQ& ideal, const WeightVector& xi,
                                    const StandardSet& delta) {
  auto fail = [](std::string why) { return FiberCheckResult{false, std::move(why)}; };
  auto [plus, minus] = QHOrder::canonical_pair(xi);
  MonicResult mplus = delta_monic(ideal, plus, delta);
  MonicResult mminus = delta_monic(ideal, minus, delta);
  if (!mplus.ok || !mminus.ok)
    return fail("not a member of the Bialynicki-Birula locus");
  const EngineArtifacts& art = artifacts(ideal);
  const int n = delta.size();
  for (int i = 0; i < ideal.dim; ++i) {
    if (xi.xi[static_cast<size_t>(i)] > 0) continue;
    // Pick the canonical order under which x_i is negative: the plus order
    // for negative weight, the minus order for weight zero.
    const QHOrder& order = xi.xi[static_cast<size_t>(i)] < 0 ? plus : minus;
    const MonicResult& monic = xi.xi[static_cast<size_t>(i)] < 0 ? mplus : mminus;
    TriangularityResult tri =
        triangularity_check(ideal, order, *monic.staircase, i);
    if (!tri.strictly_lower)
      return fail("multiplication by x" + std::to_string(i + 1) +
                  " is not strictly lower triangular");
    ChowPoint cp = chow_point(art, i);
    if (!cp.is_origin())
      return fail("chow point of x" + std::to_string(i + 1) +
                  " is " + poly_str(cp.charpoly, {"L"}) + ", not L^" +
                  std::to_string(n));
    // ld vanishes whenever some slot is divisible by x_i.
    CoeffRing q = CoeffRing::rational();
    PolyQ one = PolyQ::constant(1, q, Rational(1));
    PolyQ v = PolyQ::variable(1, q, 0);
    std::vector<PolyQ> probes = {v, v * v, v * (v + one)};
    for (const PolyQ& p : probes) {
      PureTensor t;
      t.slots.assign(static_cast<size_t>(n), one);
      t.slots[0] = p;
      if (n > 1) t.slots[static_cast<size_t>(n - 1)] = v + one;
      for (const auto& [c, pure] : symmetrize(t)) {
        (void)c;
        Rational val = linearized_determinant({{Rational(1), pure}}, tri.data.matrix);
        if (!val.is_zero())
          return fail("linearized determinant does not vanish on a tensor "
                      "with a slot divisible by x" + std::to_string(i + 1));
      }
    }
  }
  return {};
}

}  // namespace bbcell
