#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"

using namespace bbcell;
using testutil::Rng;
using testutil::qconst;
using testutil::qmono;
using testutil::qvar;
using testutil::random_corpus_ideal;

namespace {

IdealQ worked_ideal() {
  PolyQ x = qvar(2, 0), y = qvar(2, 1);
  return make_ideal_q(2, {x + y, y * y});
}

const StandardSet& worked_delta() {
  static StandardSet s = StandardSet::validate(2, {{0, 0}, {0, 1}});
  return s;
}

}  // namespace

TEST_CASE("boundedness certificates") {
  auto [plus, minus] = QHOrder::canonical_pair(WeightVector{{1, -1}});
  BoundednessResult r = boundedness(worked_ideal(), plus);
  REQUIRE(r.bounded);
  CHECK(r.cert.exponent == std::vector<int>{2, 2});
  PolyQ t = qvar(1, 0);
  CHECK(r.cert.witness[0] == t * t);
  CHECK(r.cert.witness[1] == t * t);

  PolyQ z = qvar(1, 0);
  IdealQ J = make_ideal_q(1, {z * z + z * z * z});
  auto [p1, m1] = QHOrder::canonical_pair(WeightVector{{-1}});
  BoundednessResult rj = boundedness(J, p1);
  CHECK(!rj.bounded);
  CHECK(rj.offending_var == 0);
  CHECK(rj.offending_min_poly == z * z * z + z * z);

  // monomial ideals are bounded for every order
  for (const StandardSet& delta : enumerate_standard_sets(2, 4)) {
    IdealQ M = staircase_ideal(delta);
    Rng rng(5);
    for (int k = 0; k < 3; ++k) {
      QHOrder o = QHOrder::total(rng.weight(2, -3, 3, true), rng.signed_order(2),
                                 Polarity::kPlus);
      CHECK(boundedness(M, o).bounded);
    }
  }
}

TEST_CASE("initial staircase of the worked ideal under both orders") {
  auto [plus, minus] = QHOrder::canonical_pair(WeightVector{{1, -1}});
  IdealQ I = worked_ideal();
  InitialStaircaseResult rp = initial_staircase(I, plus);
  CHECK(rp.staircase == worked_delta());
  REQUIRE(rp.corners.size() == 2);
  CHECK(rp.corners[0] == Exponent{0, 2});
  CHECK(rp.corners[1] == Exponent{1, 0});
  PolyQ x = qvar(2, 0), y = qvar(2, 1);
  CHECK(rp.basis[0] == y * y);
  CHECK(rp.basis[1] == x + y);
  InitialStaircaseResult rm = initial_staircase(I, minus);
  CHECK(rm.staircase == worked_delta());
}

TEST_CASE("initial staircase of a monomial ideal is its own staircase") {
  Rng rng(7);
  for (const StandardSet& delta : enumerate_standard_sets(2, 5)) {
    IdealQ M = staircase_ideal(delta);
    QHOrder o = QHOrder::total(rng.weight(2, -3, 3, true), rng.signed_order(2),
                               Polarity::kPlus);
    InitialStaircaseResult r = initial_staircase(M, o);
    CHECK(r.staircase == delta);
    for (size_t k = 0; k < r.corners.size(); ++k)
      CHECK(r.basis[k] == qmono(2, r.corners[k]));
  }
}

TEST_CASE("initial staircase propagates unboundedness") {
  PolyQ z = qvar(1, 0);
  IdealQ J = make_ideal_q(1, {z * z + z * z * z});
  auto [p1, m1] = QHOrder::canonical_pair(WeightVector{{-1}});
  CHECK_THROWS_AS(initial_staircase(J, p1), NotBounded);
}

TEST_CASE("delta_monic diagnoses in clause order") {
  auto [plus, minus] = QHOrder::canonical_pair(WeightVector{{1, -1}});
  MonicResult ok = delta_monic(worked_ideal(), plus, worked_delta());
  CHECK(ok.ok);
  CHECK(ok.diagnosis.empty());

  PolyQ z = qvar(1, 0);
  IdealQ J = make_ideal_q(1, {z * z + z * z * z});
  auto [p1, m1] = QHOrder::canonical_pair(WeightVector{{-1}});
  MonicResult bad = delta_monic(J, p1, StandardSet::validate(1, {{0}, {1}}));
  CHECK(!bad.ok);
  CHECK(bad.diagnosis == "quotient rank 3 != 2; not bounded");

  // staircase mismatch on a monomial ideal
  StandardSet other = StandardSet::validate(2, {{0, 0}, {1, 0}});
  MonicResult mism = delta_monic(staircase_ideal(worked_delta()), plus, other);
  CHECK(!mism.ok);
  CHECK(mism.diagnosis.find("initial staircase") != std::string::npos);
}

TEST_CASE("division on the worked instance") {
  auto [plus, minus] = QHOrder::canonical_pair(WeightVector{{1, -1}});
  IdealQ I = worked_ideal();
  InitialStaircaseResult isr = initial_staircase(I, plus);
  PolyQ x = qvar(2, 0), y = qvar(2, 1);

  DivisionResult dx = divide(x, isr, plus);
  CHECK(dx.r_delta == -y);
  CHECK(dx.r_prime.is_zero());
  CHECK(dx.quotients[1] == qconst(2, Rational(1)));  // corner (1,0)
  CHECK(dx.quotients[0].is_zero());

  DivisionResult dy = divide(y, isr, plus);
  CHECK(dy.r_delta == y);
  CHECK(dy.iterations == 0);

  DivisionResult dm = divide(x + y, isr, plus);
  CHECK(dm.r_delta.is_zero());

  // reassembly is exact
  PolyQ f = x * x * y + qconst(2, Rational(3, 2)) * x - y * y;
  DivisionResult dv = divide(f, isr, plus);
  PolyQ rebuilt = dv.r_delta + dv.r_prime;
  for (size_t k = 0; k < isr.basis.size(); ++k)
    rebuilt = rebuilt + dv.quotients[k] * isr.basis[k];
  CHECK(rebuilt == f);

  CHECK_THROWS_AS(divide(x * x * y, isr, plus, 1), IterationLimit);
}

TEST_CASE("pure powers of negative variables certified by division") {
  auto [plus, minus] = QHOrder::canonical_pair(WeightVector{{1, -1}});
  IdealQ I = worked_ideal();
  InitialStaircaseResult isr = initial_staircase(I, plus);
  auto checks = xn_membership(I, plus, isr);
  REQUIRE(checks.size() == 1);
  CHECK(checks[0].first == 1);
  CHECK(checks[0].second);

  // monomial ideals: x_i^n is outside the staircase for every negative i
  for (const StandardSet& delta : enumerate_standard_sets(2, 4)) {
    IdealQ M = staircase_ideal(delta);
    InitialStaircaseResult im = initial_staircase(M, plus);
    for (auto& [i, ok] : xn_membership(M, plus, im)) CHECK(ok);
  }
}

TEST_CASE("bb membership on worked instances") {
  BBResult r = bb_membership(worked_ideal(), WeightVector{{1, -1}}, worked_delta());
  CHECK(r.member);

  PolyQ z = qvar(1, 0);
  IdealQ J = make_ideal_q(1, {z * z + z * z * z});
  BBResult rj = bb_membership(J, WeightVector{{-1}},
                              StandardSet::validate(1, {{0}, {1}}));
  CHECK(!rj.member);
  CHECK(rj.diagnosis == "quotient rank 3 != 2; not bounded");

  for (const StandardSet& delta : enumerate_standard_sets(3, 4)) {
    Rng rng(3);
    WeightVector xi = rng.weight(3, -3, 3, false);
    CHECK(bb_membership(staircase_ideal(delta), xi, delta).member);
  }

  // a custom signed tie-break gives the same verdict on members
  Rng rng(9);
  for (int t = 0; t < 5; ++t) {
    SignedOrder tie = rng.signed_order(2);
    CHECK(bb_membership(worked_ideal(), WeightVector{{1, -1}}, worked_delta(), tie)
              .member);
  }
}

TEST_CASE("flat limits") {
  IdealQ I = worked_ideal();
  FlatLimitResult fl = flat_limit_checked(I, WeightVector{{1, -1}});
  CHECK(ideal_equal(fl.limit, staircase_ideal(worked_delta())));
  REQUIRE(fl.staircase.has_value());
  CHECK(*fl.staircase == worked_delta());

  // weight-homogeneous input is its own limit
  PolyQ x = qvar(2, 0), y = qvar(2, 1);
  IdealQ H = make_ideal_q(2, {x * x - x * y, y * y * y, x * y * y});
  FlatLimitResult fh = flat_limit_checked(H, WeightVector{{1, 1}});
  CHECK(ideal_equal(fh.limit, H));

  // monomial fixed point
  IdealQ M = staircase_ideal(worked_delta());
  FlatLimitResult fm = flat_limit_checked(M, WeightVector{{2, -1}});
  CHECK(ideal_equal(fm.limit, M));

  PolyQ z = qvar(1, 0);
  IdealQ J = make_ideal_q(1, {z * z + z * z * z});
  CHECK_THROWS_AS(flat_limit(J, WeightVector{{-1}}), NotBounded);
}

TEST_CASE("flat limits of members contain the corners and keep the rank") {
  // worked member, plus two shipped-style nontrivial members
  struct Case {
    IdealQ ideal;
    WeightVector xi;
    StandardSet delta;
  };
  PolyQ x3 = qvar(3, 0), y3 = qvar(3, 1), z3 = qvar(3, 2);
  std::vector<Case> cases;
  cases.push_back({worked_ideal(), WeightVector{{1, -1}}, worked_delta()});
  cases.push_back({make_ideal_q(3, {x3 - z3, y3 + qconst(3, Rational(2)) * z3,
                                    z3 * z3}),
                   WeightVector{{1, 2, -1}},
                   StandardSet::validate(3, {{0, 0, 0}, {0, 0, 1}})});
  cases.push_back(
      {make_ideal_q(3, {x3 * x3 - y3, x3 * y3, x3 * z3, y3 * y3, y3 * z3,
                        z3 * z3}),
       WeightVector{{2, -1, -1}},
       StandardSet::validate(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})});
  for (const Case& c : cases) {
    REQUIRE(bb_membership(c.ideal, c.xi, c.delta).member);
    FlatLimitResult fl = flat_limit_checked(c.ideal, c.xi);
    CHECK(artifacts(fl.limit).rank == c.delta.size());
    for (const Exponent& corner : c.delta.outer_corners())
      CHECK(ideal_member(qmono(c.ideal.dim, corner), fl.limit));
    REQUIRE(fl.staircase.has_value());
    CHECK(*fl.staircase == c.delta);
  }
}

TEST_CASE("order stability: the staircase ignores the tie-break for bounded ideals") {
  Rng rng(99);
  IdealQ I = worked_ideal();
  WeightVector xi{{1, -1}};
  StandardSet base = initial_staircase(I, QHOrder::canonical_pair(xi).first).staircase;
  for (int t = 0; t < 8; ++t) {
    QHOrder o = QHOrder::total(xi, rng.signed_order(2), Polarity::kPlus);
    CHECK(initial_staircase(I, o).staircase == base);
  }
}

TEST_CASE("division remainder is independent of the admissible tie-break") {
  Rng rng(123);
  IdealQ I = worked_ideal();
  WeightVector xi{{1, -1}};
  auto plus = QHOrder::canonical_pair(xi).first;
  InitialStaircaseResult base = initial_staircase(I, plus);
  for (int t = 0; t < 15; ++t) {
    PolyQ f = testutil::random_poly(rng, 2);
    DivisionResult want = divide(f, base, plus);
    for (int k = 0; k < 3; ++k) {
      QHOrder o = QHOrder::total(xi, rng.signed_order(2),
                                 rng.range(0, 1) ? Polarity::kPlus : Polarity::kMinus);
      InitialStaircaseResult isr = initial_staircase(I, o);
      if (isr.staircase != base.staircase) continue;  // not admissible for delta
      DivisionResult got = divide(f, isr, o);
      CHECK(got.r_delta == want.r_delta);
    }
  }
}

TEST_CASE("initial staircase agrees with a single-weight degeneration") {
  // On the search box, the total order coincides with the order by one
  // deformed integer weight; the saturation oracle for that weight yields
  // the initial ideal independently, and a monomial lies in a weight-initial
  // ideal exactly when it is the initial form of a member.
  Rng rng(2718);
  int done = 0;
  while (done < 10) {
    int d = 1 + static_cast<int>(rng.range(0, 1));
    auto inst = random_corpus_ideal(rng, d, 4);
    WeightVector xi = rng.weight(d, -2, 2, false);
    auto [plus, minus] = QHOrder::canonical_pair(xi);
    const QHOrder& order = rng.range(0, 1) ? plus : minus;
    BoundednessResult bd = boundedness(inst.ideal, order);
    if (!bd.bounded) continue;
    InitialStaircaseResult isr = initial_staircase(inst.ideal, order);
    long long base = 1;
    for (int e : isr.box) base = std::max<long long>(base, e + 1);
    WeightVector deformed;
    long long big = 1;
    for (int i = 0; i < d; ++i) big *= base;
    for (int i = 0; i < d; ++i) {
      long long lex_part = 1;
      for (int k = i + 1; k < d; ++k) lex_part *= base;
      deformed.xi.push_back(xi.xi[static_cast<size_t>(i)] * big +
                            order.effective_sign(i) * lex_part);
    }
    // sanity: the deformed weight reproduces the order on the box
    std::vector<Exponent> box = box_exponents(isr.box);
    for (size_t a = 0; a < box.size(); ++a)
      for (size_t b = 0; b < box.size(); ++b) {
        if (a == b) continue;
        bool lt = order.less(box[a], box[b]);
        REQUIRE(lt == (deformed.value(box[a]) < deformed.value(box[b])));
      }
    DegenerationResult deg = degeneration_oracle(inst.ideal, deformed);
    for (const Exponent& m : box) {
      bool standard = isr.staircase.contains(m);
      bool in_initial = ideal_member(testutil::qmono(d, m), deg.limit);
      CHECK(standard == !in_initial);
    }
    CHECK(artifacts(deg.limit).rank == isr.staircase.size());
    ++done;
  }
}

TEST_CASE("membership through division matches the engine") {
  Rng rng(321);
  IdealQ I = worked_ideal();
  auto plus = QHOrder::canonical_pair(WeightVector{{1, -1}}).first;
  InitialStaircaseResult isr = initial_staircase(I, plus);
  const auto& A = artifacts(I);
  for (int t = 0; t < 40; ++t) {
    PolyQ f = testutil::random_poly(rng, 2);
    bool via_division = divide(f, isr, plus).r_delta.is_zero();
    bool via_engine = vec_is_zero(normal_form_coords(f, A));
    CHECK(via_division == via_engine);
  }
}

TEST_CASE("two points colliding along the attracting axis") {
  PolyQ x = qvar(2, 0), y = qvar(2, 1);
  // points (0,0) and (1,0); the flow pushes the second into the origin
  IdealQ I = make_ideal_q(2, {x * x - x, y});
  WeightVector xi{{1, -1}};
  StandardSet delta = StandardSet::validate(2, {{0, 0}, {1, 0}});
  BBResult bb = bb_membership(I, xi, delta);
  CHECK(bb.member);
  FlatLimitResult fl = flat_limit_checked(I, xi);
  CHECK(ideal_equal(fl.limit, staircase_ideal(delta)));
  // the same pair cannot flow to the other length-2 staircase
  StandardSet other = StandardSet::validate(2, {{0, 0}, {0, 1}});
  CHECK(!bb_membership(I, xi, other).member);
}

TEST_CASE("zero-weight coordinates: member and non-member, both routes") {
  PolyQ x = qvar(2, 0), y = qvar(2, 1);
  WeightVector xi{{0, 1}};
  // member: nilpotent in the zero-weight direction
  IdealQ I = make_ideal_q(2, {x * x, y});
  StandardSet delta = StandardSet::validate(2, {{0, 0}, {1, 0}});
  BBResult bb = bb_membership(I, xi, delta);
  CHECK(bb.member);
  auto deg = degeneration_oracle(I, xi);
  CHECK(ideal_equal(deg.limit, staircase_ideal(delta)));
  CHECK(deg.generic_rank == 2);

  // non-member: x - 1 is not bounded under the minus order (x negative there)
  IdealQ J = make_ideal_q(2, {x - qconst(2, Rational(1)), y});
  BBResult bj = bb_membership(J, xi, StandardSet::validate(2, {{0, 0}}));
  CHECK(!bj.member);
  CHECK(bj.diagnosis.find("minus order") != std::string::npos);
  auto dj = degeneration_oracle(J, xi);
  CHECK(!ideal_equal(dj.limit, staircase_ideal(StandardSet::validate(2, {{0, 0}}))));
}

TEST_CASE("division remainder equals the linear-algebra normal form") {
  // Independent route: express the grevlex normal form of f in the
  // staircase-monomial basis of the quotient; for a member that basis is
  // invertible and the coordinates are exactly r_delta.
  Rng rng(808);
  std::vector<std::pair<IdealQ, WeightVector>> cases;
  cases.emplace_back(worked_ideal(), WeightVector{{1, -1}});
  {
    PolyQ x = qvar(3, 0), y = qvar(3, 1), z = qvar(3, 2);
    cases.emplace_back(
        make_ideal_q(3, {x * x - y, x * y, x * z, y * y, y * z, z * z}),
        WeightVector{{2, -1, -1}});
  }
  for (const auto& [ideal, xi] : cases) {
    auto plus = QHOrder::canonical_pair(xi).first;
    InitialStaircaseResult isr = initial_staircase(ideal, plus);
    const EngineArtifacts& art = artifacts(ideal);
    REQUIRE(isr.staircase.size() == art.rank);
    IncrementalSolver solver(art.rank);
    const auto& delta_monos = isr.staircase.elements();
    for (const Exponent& m : delta_monos) {
      auto dep = solver.insert(
          normal_form_coords(qmono(ideal.dim, m), art));
      REQUIRE(!dep.has_value());  // staircase monomials stay independent
    }
    for (int t = 0; t < 25; ++t) {
      PolyQ f = testutil::random_poly(rng, ideal.dim);
      auto combo = solver.express(normal_form_coords(f, art));
      REQUIRE(combo.has_value());
      PolyQ expected(ideal.dim, ideal.ring);
      for (size_t k = 0; k < delta_monos.size(); ++k)
        expected = expected + qmono(ideal.dim, delta_monos[k], (*combo)[k]);
      CHECK(divide(f, isr, plus).r_delta == expected);
    }
  }
}

TEST_CASE("monic with nonzero weights implies bounded") {
  Rng rng(555);
  for (int t = 0; t < 8; ++t) {
    int d = static_cast<int>(rng.range(1, 3));
    auto inst = random_corpus_ideal(rng, d, 4);
    WeightVector xi = rng.weight(d, -3, 3, false);
    auto [plus, minus] = QHOrder::canonical_pair(xi);
    const auto& A = artifacts(inst.ideal);
    BoundednessResult bd = boundedness(inst.ideal, plus);
    if (!bd.bounded) continue;
    InitialStaircaseResult isr = initial_staircase(inst.ideal, plus);
    if (isr.staircase.size() != A.rank) continue;
    // rank and staircase clauses hold; boundedness held as asserted
    CHECK(delta_monic(inst.ideal, plus, isr.staircase).ok);
  }
}
