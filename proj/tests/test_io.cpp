#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"

using namespace bbcell;
using testutil::qconst;
using testutil::qmono;
using testutil::qvar;

TEST_CASE("polynomial grammar") {
  PolyQ f = io::poly_q("x1^2*x2 - 3/4*x2^3 + 1", 2);
  PolyQ x = qvar(2, 0), y = qvar(2, 1);
  CHECK(f == x * x * y - qconst(2, Rational(3, 4)) * y * y * y + qconst(2, Rational(1)));
  CHECK(io::poly_q("2x1", 1) == qmono(1, {1}, Rational(2)));
  CHECK(io::poly_q("-x1 + x1", 1).is_zero());
  CHECK(io::poly_q("5/10", 1) == qconst(1, Rational(1, 2)));
  CHECK(io::poly_q("x1*x1*x1", 1) == qmono(1, {3}));
}

TEST_CASE("printing round-trips through the parser") {
  PolyQ f = io::poly_q("x1^2*x2 - 3/4*x2^3 + 1", 2);
  CHECK(io::poly_q(poly_str(f), 2) == f);
  PolyD g = io::poly_d("x1 - eps + 2*eps*x1^2", 1, 2);
  CHECK(io::poly_d(poly_str(g), 1, 2) == g);
}

TEST_CASE("parse errors carry position and reason") {
  try {
    io::poly_q("x1 + + x2", 2, 7);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 7);
    CHECK(e.col > 1);
  }
  CHECK_THROWS_AS(io::poly_q("x3", 2), ParseError);
  CHECK_THROWS_AS(io::poly_q("x1^-2", 1), ParseError);
  CHECK_THROWS_AS(io::poly_q("y1", 1), ParseError);
  CHECK_THROWS_AS(io::poly_q("", 1), ParseError);
  CHECK_THROWS_AS(io::poly_q("eps", 1), ParseError);  // rational ring
  CHECK_THROWS_AS(io::poly_q("1/0", 1), ParseError);
}

TEST_CASE("dual coefficients") {
  PolyD g = io::poly_d("x1 - eps", 1, 2);
  CHECK(g.terms().size() == 2);
  CHECK(io::poly_d("eps^2", 1, 2).is_zero());  // truncated away
  CHECK(io::poly_d("eps*eps", 1, 2).is_zero());
  CHECK(!io::poly_d("eps^2", 1, 3).is_zero());
}

TEST_CASE("staircase, weight, tie-break, and order specs") {
  StandardSet s = io::delta_spec("{(0,0),(0,1)}", 2);
  CHECK(s == StandardSet::validate(2, {{0, 0}, {0, 1}}));
  CHECK_THROWS_AS(io::delta_spec("{(1,1)}", 2), NotDownwardClosed);
  CHECK_THROWS_AS(io::delta_spec("{(0,0),(0)}", 2), ParseError);

  WeightVector w = io::weight_spec("(1,-1)", 2);
  CHECK(w.xi == std::vector<long long>{1, -1});
  // rationals clear to integers
  CHECK(io::weight_spec("(1/2,-1/3)", 2).xi == std::vector<long long>{3, -2});

  SignedOrder tie = io::tiebreak_spec("-2,+1", 2);
  CHECK(tie.perm == std::vector<int>{1, 0});
  CHECK(tie.sign == std::vector<int>{1, -1});
  CHECK_THROWS_AS(io::tiebreak_spec("+1", 2), ParseError);
  CHECK_THROWS_AS(io::tiebreak_spec("+1,+1", 2), ParseError);

  io::OrderSpec spec = io::order_spec("w=(1,-1);tiebreak=+1,+2;polarity=+", 2);
  REQUIRE(spec.weight);
  REQUIRE(spec.tiebreak);
  REQUIRE(spec.polarity);
  QHOrder o = QHOrder::total(*spec.weight, *spec.tiebreak, *spec.polarity);
  CHECK(o.str() == "w=(1,-1);tiebreak=+1,+2;polarity=+");
  CHECK(!io::order_spec("polarity=-", 2).weight);
  CHECK_THROWS_AS(io::order_spec("weird=1", 2), ParseError);
}

TEST_CASE("ideal files parse with headers and generators") {
  std::string text =
      "# worked instance\n"
      "dim: 2\n"
      "ring: rational\n"
      "weight: (1,-1)\n"
      "delta: {(0,0),(0,1)}\n"
      "gens:\n"
      "x1 + x2\n"
      "x2^2\n";
  io::IdealFile file = io::parse_ideal_file(text);
  CHECK(file.dim == 2);
  CHECK(!file.ring.is_dual());
  REQUIRE(file.weight);
  CHECK(file.weight->xi == std::vector<long long>{1, -1});
  REQUIRE(file.delta);
  CHECK(file.delta->size() == 2);
  REQUIRE(file.gens_q.size() == 2);
  CHECK(file.gens_q[0] == qvar(2, 0) + qvar(2, 1));

  std::string dual_text =
      "dim: 1\n"
      "ring: dual 2\n"
      "weight: (-1)\n"
      "bounds: (2)\n"
      "gens:\n"
      "x1 - eps\n"
      "x1^2\n";
  io::IdealFile dual_file = io::parse_ideal_file(dual_text);
  CHECK(dual_file.ring.is_dual());
  CHECK(dual_file.ring.eps_order == 2);
  REQUIRE(dual_file.bounds);
  CHECK(*dual_file.bounds == std::vector<int>{2});
  CHECK(dual_file.gens_d.size() == 2);
}

TEST_CASE("ideal file errors carry line numbers") {
  try {
    io::parse_ideal_file("dim: 2\ngens:\nx1 + !\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
  CHECK_THROWS_AS(io::parse_ideal_file("gens:\nx1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_ideal_file("dim: 2\n"), ParseError);
  CHECK_THROWS_AS(io::parse_ideal_file("dim: 2\nring: fancy\ngens:\nx1\n"),
                  ParseError);
  // eps in a rational file is an error at the offending generator line
  try {
    io::parse_ideal_file("dim: 1\nring: rational\ngens:\nx1 - eps\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
  }
}
