#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"

using namespace bbcell;
using testutil::Rng;

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rational(2, 3) + Rational(1, 6) == Rational(5, 6));
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-4, 2).str() == "-2");
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(0).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByNonUnit);
  CHECK_THROWS_AS(Rational(1).operator/(Rational(0)), DivisionByNonUnit);
}

TEST_CASE("rational field laws on random triples") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    Rational a = rng.rational(9, 7), b = rng.rational(9, 7), c = rng.rational(9, 7);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
  }
}

TEST_CASE("dual numbers truncate at eps^N") {
  DualNumber one(2, Rational(1));
  DualNumber eps = DualNumber::eps(2);
  CHECK((one + eps) * (one - eps) == one);  // eps^2 = 0
  CHECK(!eps.is_unit());
  CHECK(eps.valuation() == 1);
  CHECK((eps * eps).is_zero());
  DualNumber x(3, Rational(1));
  x.set_coeff(1, Rational(2));
  x.set_coeff(2, Rational(-1, 3));
  CHECK(x * x.inverse() == DualNumber(3, Rational(1)));
  CHECK_THROWS_AS(eps.inverse(), DivisionByNonUnit);
  CHECK_THROWS_AS(one + DualNumber(3, Rational(1)), MixedRings);
  CHECK_THROWS_AS(DualNumber(0), Error);
  CHECK_THROWS_AS(DualNumber(17), Error);
}

TEST_CASE("dual multiplication matches truncated convolution") {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    int n = static_cast<int>(rng.range(1, 5));
    DualNumber a(n), b(n);
    for (int k = 0; k < n; ++k) {
      a.set_coeff(k, rng.rational());
      b.set_coeff(k, rng.rational());
    }
    DualNumber prod = a * b;
    for (int k = 0; k < n; ++k) {
      Rational expect(0);
      for (int i = 0; i <= k; ++i) expect += a.coeff(i) * b.coeff(k - i);
      CHECK(prod.coeff(k) == expect);
    }
  }
}

TEST_CASE("coefficient ideals over the field") {
  CHECK(coeff_ideal(std::vector<Rational>{Rational(0), Rational(0)}) ==
        CoeffIdeal::zero());
  CHECK(coeff_ideal(std::vector<Rational>{Rational(3, 2)}) == CoeffIdeal::unit());
}

TEST_CASE("coefficient ideals over dual numbers pick the minimal eps power") {
  DualNumber eps = DualNumber::eps(2);
  DualNumber zero(2);
  CHECK(coeff_ideal(std::vector<DualNumber>{eps, zero}) == CoeffIdeal::power(1));
  CHECK(coeff_ideal(std::vector<DualNumber>{zero}) == CoeffIdeal::zero());
  CHECK(coeff_ideal(std::vector<DualNumber>{DualNumber(2, Rational(2)), eps}) ==
        CoeffIdeal::unit());
  CHECK_THROWS_AS(
      coeff_ideal(std::vector<DualNumber>{eps, DualNumber(3, Rational(1))}),
      MixedRings);
}

TEST_CASE("coeff_ideal is monotone under adding generators") {
  Rng rng(37);
  for (int t = 0; t < 100; ++t) {
    int n = static_cast<int>(rng.range(1, 4));
    std::vector<DualNumber> gens;
    for (int g = 0; g < static_cast<int>(rng.range(1, 5)); ++g) {
      DualNumber v(n);
      for (int k = 0; k < n; ++k)
        if (rng.range(0, 2) == 0) v.set_coeff(k, rng.rational());
      gens.push_back(std::move(v));
    }
    CoeffIdeal before = coeff_ideal(gens);
    DualNumber extra(n);
    for (int k = 0; k < n; ++k)
      if (rng.range(0, 1) == 0) extra.set_coeff(k, rng.rational());
    gens.push_back(extra);
    CoeffIdeal after = coeff_ideal(gens);
    CHECK(after.contains(before));
  }
}
