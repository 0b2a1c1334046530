#pragma once

#include <utility>
#include <vector>

#include "bbcell/groebner.hpp"
#include "bbcell/order.hpp"

namespace bbcell {

/// Independent route to the torus flat limit. `family` presents the
/// t-saturated ideal generated by the translated generators, in d+1
/// variables with t at position 0; `limit` is its fiber at t = 0;
/// `generic_rank` is the quotient dimension over the function field in t.
struct DegenerationResult {
  IdealQ family;
  IdealQ limit;
  int generic_rank = 0;
};

/// Saturation with respect to t by the adjoined-inverse-variable method:
/// eliminate u from <translated generators> + <u*t - 1>.
inline DegenerationResult degeneration_oracle(const IdealQ& ideal,
                                              const WeightVector& xi) {
  artifacts(ideal);  // throws NotZeroDimensional early
  const int d = ideal.dim;
  const CoeffRing q = ideal.ring;

  // Variables (u, t, x1..xd); u-block first for elimination.
  std::vector<PolyQ> sat_gens;
  for (const PolyQ& g : ideal.gens)
    sat_gens.push_back(torus_act(g, xi).poly.insert_variable(0));
  {
    PolyQ u = PolyQ::variable(d + 2, q, 0);
    PolyQ t = PolyQ::variable(d + 2, q, 1);
    sat_gens.push_back(u * t - PolyQ::constant(d + 2, q, Rational(1)));
  }
  GroebnerBasis sat = buchberger_reduced(sat_gens, BlockOrder{d + 2, 1});

  DegenerationResult out;
  std::vector<PolyQ> family_gens;
  for (const PolyQ& g : sat.polys)
    if (g.degree_in(0) == 0) family_gens.push_back(g.drop_variable(0));
  out.family = make_ideal_q(d + 1, family_gens);

  // Generic rank: put t last and take the staircase of the x-parts of the
  // leading terms; over Q(t) the t-part of a lead is a unit.
  {
    std::vector<int> perm;  // new var i = old var perm[i]
    for (int i = 1; i <= d; ++i) perm.push_back(i);
    perm.push_back(0);
    std::vector<PolyQ> moved;
    for (const PolyQ& g : family_gens) moved.push_back(g.permute_variables(perm));
    GroebnerBasis gb = buchberger_reduced(moved, BlockOrder{d + 1, d});
    std::vector<Exponent> xleads;
    for (const PolyQ& g : gb.polys) {
      Exponent lead = leading_term(g, BlockOrder{d + 1, d}).first;
      lead.pop_back();  // drop the t coordinate
      xleads.push_back(std::move(lead));
    }
    out.generic_rank =
        static_cast<int>(detail::staircase_of_leads(d, xleads).size());
  }

  std::vector<PolyQ> limit_gens;
  for (const PolyQ& g : family_gens) {
    PolyQ at0 = g.substitute_zero(0);
    if (!at0.is_zero()) limit_gens.push_back(at0.drop_variable(0));
  }
  out.limit = make_ideal_q(d, limit_gens);
  return out;
}

/// The monomial ideal of a staircase: generated by its outer corners.
inline IdealQ staircase_ideal(const StandardSet& delta) {
  std::vector<PolyQ> gens;
  for (const Exponent& c : delta.outer_corners())
    gens.push_back(
        PolyQ::monomial(delta.dim(), CoeffRing::rational(), c, Rational(1)));
  return make_ideal_q(delta.dim(), std::move(gens));
}

/// Fiber of the family at t = value (t is variable 0).
inline IdealQ family_fiber(const IdealQ& family, const Rational& value) {
  std::vector<PolyQ> gens;
  const int d = family.dim - 1;
  for (const PolyQ& g : family.gens) {
    // substitute t := value
    PolyQ acc(family.dim, family.ring);
    for (const auto& [m, c] : g.terms()) {
      Rational coeff = c;
      for (int k = 0; k < m[0]; ++k) coeff *= value;
      Exponent e = m;
      e[0] = 0;
      acc = acc + PolyQ::monomial(family.dim, family.ring, e, coeff);
    }
    if (!acc.is_zero()) gens.push_back(acc.drop_variable(0));
  }
  return make_ideal_q(d, std::move(gens));
}

}  // namespace bbcell
