#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"

using namespace bbcell;
using testutil::Rng;

namespace {

PolyD dvar(int dim, CoeffRing ring, int i) { return PolyD::variable(dim, ring, i); }

PolyD dconst(int dim, CoeffRing ring, DualNumber c) {
  return PolyD::constant(dim, ring, std::move(c));
}

/// I = <x - eps, x^2> over Q[eps]/eps^2, the schematic probe instance.
IdealD probe_ideal() {
  CoeffRing ring = CoeffRing::dual(2);
  PolyD x = dvar(1, ring, 0);
  PolyD eps = dconst(1, ring, DualNumber::eps(2));
  return make_ideal<DualNumber>(1, ring, {x - eps, x * x});
}

}  // namespace

TEST_CASE("pure-power bound verification finds witnesses") {
  IdealD I = probe_ideal();
  CHECK(verify_pure_power_bound(I, 0, 2));
  CHECK_NOTHROW(verify_bounds_or_throw(I, {2}));
  // x^1 is not in the ideal (residue is <x>, but eps obstructs at order 1)
  CHECK(!verify_pure_power_bound(I, 0, 1));

  // <x - eps> alone: x^2 = (x + eps)(x - eps) is a witness
  CoeffRing ring = CoeffRing::dual(2);
  PolyD x = dvar(1, ring, 0);
  PolyD eps = dconst(1, ring, DualNumber::eps(2));
  IdealD J = make_ideal<DualNumber>(1, ring, {x - eps});
  CHECK(verify_pure_power_bound(J, 0, 2));

  // <eps * x>: no pure power of x is ever a member
  IdealD K = make_ideal<DualNumber>(1, ring, {eps * x});
  CHECK(!verify_pure_power_bound(K, 0, 1));
  CHECK(!verify_pure_power_bound(K, 0, 3));
  CHECK_THROWS_AS(verify_bounds_or_throw(K, {3}), BoundNotVerified);
}

TEST_CASE("schematic probe: initial coefficient ideals") {
  IdealD I = probe_ideal();
  auto plus = QHOrder::canonical_pair(WeightVector{{-1}}).first;
  std::vector<int> bounds{2};
  CHECK(initial_coeff_ideal(I, Exponent{0}, plus, bounds) == CoeffIdeal::power(1));
  CHECK(initial_coeff_ideal(I, Exponent{1}, plus, bounds) == CoeffIdeal::power(1));
  CHECK(initial_coeff_ideal(I, Exponent{2}, plus, bounds) == CoeffIdeal::unit());
  // hence not delta-monic for {0}
  DualMonicResult dm =
      dual_delta_monic(I, plus, bounds, StandardSet::validate(1, {{0}}));
  CHECK(!dm.ok);
  CHECK(dm.diagnosis.find("<eps>") != std::string::npos);
}

TEST_CASE("base change to the residue field on the probe") {
  IdealD I = probe_ideal();
  IdealD R = residue_field_ideal(I);
  auto plus = QHOrder::canonical_pair(WeightVector{{-1}}).first;
  // V(x) over the residue field is monic for {0}
  DualMonicResult dm =
      dual_delta_monic(R, plus, {2}, StandardSet::validate(1, {{0}}));
  CHECK(dm.ok);
}

TEST_CASE("eps-perturbed monomial ideals and base change") {
  Rng rng(42);
  CoeffRing ring = CoeffRing::dual(2);
  for (int trial = 0; trial < 12; ++trial) {
    int d = static_cast<int>(rng.range(1, 2));
    int n = static_cast<int>(rng.range(1, 4));
    auto all = enumerate_standard_sets(d, n);
    StandardSet delta = all[static_cast<size_t>(
        rng.range(0, static_cast<long long>(all.size()) - 1))];
    // perturb each corner generator by eps times a staircase monomial
    std::vector<PolyD> gens;
    for (const Exponent& c : delta.outer_corners()) {
      PolyD g = PolyD::monomial(d, ring, c, coeff_traits<DualNumber>::one(ring));
      if (rng.range(0, 1)) {
        const auto& elems = delta.elements();
        const Exponent& m = elems[static_cast<size_t>(
            rng.range(0, static_cast<long long>(elems.size()) - 1))];
        g = g + PolyD::monomial(d, ring, m, DualNumber::eps(2));
      }
      gens.push_back(std::move(g));
    }
    IdealD I = make_ideal<DualNumber>(d, ring, gens);
    WeightVector xi = rng.weight(d, -3, 3, false);
    auto plus = QHOrder::canonical_pair(xi).first;
    // bounds: 2n covers the corner products of the perturbed generators
    std::vector<int> bounds(static_cast<size_t>(d), 2 * n + 1);
    bool verified = true;
    try {
      verify_bounds_or_throw(I, bounds);
    } catch (const BoundNotVerified&) {
      verified = false;
    }
    if (!verified) continue;
    DualMonicResult full = dual_delta_monic(I, plus, bounds, delta);
    // descriptors that are all zero-or-unit must survive eps := 0
    bool clean = true;
    for (auto& [m, desc] : full.table)
      if (!desc.is_zero() && !desc.is_unit()) clean = false;
    if (!clean) continue;
    DualMonicResult res =
        dual_delta_monic(residue_field_ideal(I), plus, bounds, delta);
    REQUIRE(res.table.size() == full.table.size());
    for (size_t k = 0; k < res.table.size(); ++k) {
      CHECK(res.table[k].first == full.table[k].first);
      CHECK(res.table[k].second == full.table[k].second);
    }
  }
}

TEST_CASE("unperturbed monomial ideals match the monic pattern exactly") {
  CoeffRing ring = CoeffRing::dual(2);
  for (const StandardSet& delta : enumerate_standard_sets(2, 3)) {
    std::vector<PolyD> gens;
    for (const Exponent& c : delta.outer_corners())
      gens.push_back(
          PolyD::monomial(2, ring, c, coeff_traits<DualNumber>::one(ring)));
    IdealD I = make_ideal<DualNumber>(2, ring, gens);
    auto plus = QHOrder::canonical_pair(WeightVector{{2, -1}}).first;
    std::vector<int> bounds(2, delta.size() + 1);
    DualMonicResult res = dual_delta_monic(I, plus, bounds, delta);
    CHECK(res.ok);
  }
}

TEST_CASE("dual operations demand verified bounds and dual rings") {
  IdealD I = probe_ideal();
  auto plus = QHOrder::canonical_pair(WeightVector{{-1}}).first;
  CHECK_THROWS_AS(initial_coeff_ideal(I, Exponent{0}, plus, {1}),
                  BoundNotVerified);
  CHECK_THROWS_AS(
      initial_coeff_ideal(I, Exponent{0}, QHOrder::partial(WeightVector{{-1}}), {2}),
      Error);
}
