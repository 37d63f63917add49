#include <optional>
#include <random>

#include "doctest.h"
#include "qalg/quadfield.hpp"

using namespace qalg;

namespace {

// Minimal unit > 1 by ascending Y in X^2 - d Y^2 = -4, +4; the unit is
// (X + Y sqrt d)/2.  Integrality is X = Y mod 2 (automatic for d = 1 mod 4),
// else X, Y both even.  At a fixed Y the rhs = -4 branch has the smaller X.
struct OracleUnit {
  std::int64_t x2, y2;
  int norm;
};

std::optional<OracleUnit> brute_fundamental(std::int64_t d, std::int64_t y_max) {
  bool half_ok = mod_pos(d, 4) == 1;
  for (std::int64_t y = 1; y <= y_max; ++y) {
    for (int rhs : {-4, 4}) {
      std::int64_t xx = d * y * y + rhs;
      if (xx <= 0) continue;
      std::int64_t x;
      if (!is_square64(xx, &x)) continue;
      if (!half_ok && (x % 2 != 0 || y % 2 != 0)) continue;
      return OracleUnit{x, y, rhs < 0 ? -1 : 1};
    }
  }
  return std::nullopt;
}

// First solution of X^2 - D Y^2 = rhs by ascending Y.
std::optional<std::pair<std::int64_t, std::int64_t>> brute_pell(
    std::int64_t D, int rhs, std::int64_t y_max) {
  for (std::int64_t y = 1; y <= y_max; ++y) {
    std::int64_t xx = D * y * y + rhs;
    std::int64_t x;
    if (xx > 0 && is_square64(xx, &x)) return std::make_pair(x, y);
  }
  return std::nullopt;
}

bool is_one_mod2(const QuadRat& v) {
  auto [a, b] = (v - QuadRat::integer(v.ring(), 1)).theta_coords();
  if (!rat_is_int(a) || !rat_is_int(b)) return false;
  return numerator(a) % 2 == 0 && numerator(b) % 2 == 0;
}

QuadRat random_elem(RingSpec ring, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 3);
  return QuadRat(ring, Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("make_ring derives theta kind and discriminant") {
  CHECK(make_ring(2).theta == ThetaKind::SqrtD);
  CHECK(make_ring(2).discriminant == 8);
  CHECK(make_ring(3).discriminant == 12);
  CHECK(make_ring(5).theta == ThetaKind::HalfOnePlusSqrtD);
  CHECK(make_ring(5).discriminant == 5);
  CHECK(make_ring(7).discriminant == 28);
  CHECK(make_ring(13).discriminant == 13);
  CHECK(make_ring(-1).theta == ThetaKind::SqrtD);
  CHECK(make_ring(-1).discriminant == -4);
  CHECK(make_ring(-3).theta == ThetaKind::HalfOnePlusSqrtD);
  CHECK(make_ring(-3).discriminant == -3);
  CHECK(make_ring(-7).discriminant == -7);
  CHECK(make_ring(-2).discriminant == -8);

  CHECK_THROWS_AS(make_ring(0), Error);
  CHECK_THROWS_AS(make_ring(1), Error);
  CHECK_THROWS_AS(make_ring(12), Error);
  CHECK_THROWS_AS(make_ring(-4), Error);
  CHECK_THROWS_AS(make_ring(9), Error);
  CHECK_THROWS_AS(make_ring(50), Error);
  CHECK_THROWS_AS(make_ring(3, 2), Error);
}

TEST_CASE("quadrat field laws on random elements") {
  std::mt19937 rng(20240811);
  for (std::int64_t d : {5, -7, 2, -1}) {
    RingSpec ring = make_ring(d);
    QuadRat one = QuadRat::integer(ring, 1);
    for (int it = 0; it < 200; ++it) {
      QuadRat a = random_elem(ring, rng);
      QuadRat b = random_elem(ring, rng);
      QuadRat c = random_elem(ring, rng);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a.norm() * b.norm() == (a * b).norm());
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK(a * a.conj() == QuadRat(ring, a.norm(), Rat(0)));
      CHECK(a.trace() == a.x() * 2);
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == one);
        CHECK(a.div(a) == one);
        CHECK(a.pow(-3) == a.inverse().pow(3));
      }
      CHECK(a.pow(4) == a * a * a * a);
      CHECK(a.pow(0) == one);
    }
  }
}

TEST_CASE("integrality and theta coordinates") {
  RingSpec r5 = make_ring(5);
  CHECK(QuadRat::theta(r5).is_integral());
  CHECK(QuadRat(r5, Rat(1, 2), Rat(1, 2)).is_integral());
  CHECK(QuadRat(r5, Rat(1, 2), Rat(0)).is_integral() == false);
  CHECK(QuadRat(r5, Rat(1, 2), Rat(1, 3)).is_integral() == false);
  CHECK(QuadRat::root(r5).is_integral());

  RingSpec r7 = make_ring(7);
  CHECK(QuadRat(r7, Rat(1, 2), Rat(1, 2)).is_integral() == false);
  CHECK(QuadRat::root(r7).is_integral());
  CHECK(QuadRat::theta(r7) == QuadRat::root(r7));

  for (std::int64_t d : {5, 7, -3, -7}) {
    RingSpec ring = make_ring(d);
    for (Int a = -3; a <= 3; ++a) {
      for (Int b = -3; b <= 3; ++b) {
        QuadRat v = QuadRat::from_theta(ring, a, b);
        CHECK(v.is_integral());
        auto [ta, tb] = v.theta_coords();
        CHECK(ta == Rat(a));
        CHECK(tb == Rat(b));
      }
    }
  }
}

TEST_CASE("real embedding sign and comparison") {
  RingSpec r2 = make_ring(2);
  QuadRat root = QuadRat::root(r2);
  QuadRat one = QuadRat::integer(r2, 1);
  CHECK(root.greater_than(one));
  CHECK((one - root).sign_real() == -1);
  CHECK((root * root - QuadRat::integer(r2, 2)).sign_real() == 0);
  // 7/5 < sqrt 2 < 3/2: both comparisons need the conjugate trick.
  CHECK(root.greater_than(QuadRat(r2, Rat(7, 5), Rat(0))));
  CHECK(QuadRat(r2, Rat(3, 2), Rat(0)).greater_than(root));

  RingSpec rm7 = make_ring(-7);
  CHECK_THROWS_AS(QuadRat::root(rm7).sign_real(), Error);
}

TEST_CASE("fundamental unit matches the brute-force oracle up to 100") {
  for (std::int64_t d = 2; d <= 100; ++d) {
    if (!is_square_free(d)) continue;
    RingSpec ring = make_ring(d);
    FundUnit fu = fundamental_unit(ring);
    auto oracle = brute_fundamental(d, 500000);
    REQUIRE(oracle.has_value());
    QuadRat expect(ring, Rat(oracle->x2, 2), Rat(oracle->y2, 2));
    CHECK(fu.eps == expect);
    CHECK(fu.norm == oracle->norm);
    CHECK(fu.eps.norm() == Rat(fu.norm));
    CHECK(fu.eps.is_integral());
    CHECK(fu.eps.greater_than(QuadRat::integer(ring, 1)));
  }
}

TEST_CASE("fundamental unit pinned values") {
  RingSpec r2 = make_ring(2);
  CHECK(fundamental_unit(r2).eps == QuadRat(r2, Rat(1), Rat(1)));
  CHECK(fundamental_unit(r2).norm == -1);

  RingSpec r5 = make_ring(5);
  CHECK(fundamental_unit(r5).eps == QuadRat(r5, Rat(1, 2), Rat(1, 2)));
  CHECK(fundamental_unit(r5).norm == -1);

  RingSpec r7 = make_ring(7);
  CHECK(fundamental_unit(r7).eps == QuadRat(r7, Rat(8), Rat(3)));
  CHECK(fundamental_unit(r7).norm == 1);
  CHECK(fundamental_unit(r7).mod2_order == 2);

  RingSpec r10 = make_ring(10);
  CHECK(fundamental_unit(r10).eps == QuadRat(r10, Rat(3), Rat(1)));

  RingSpec r13 = make_ring(13);
  CHECK(fundamental_unit(r13).eps == QuadRat(r13, Rat(3, 2), Rat(1, 2)));
  CHECK(fundamental_unit(r13).norm == -1);

  RingSpec r94 = make_ring(94);
  CHECK(fundamental_unit(r94).eps == QuadRat(r94, Rat(2143295), Rat(221064)));
  CHECK(fundamental_unit(r94).norm == 1);

  CHECK_THROWS_AS(fundamental_unit(make_ring(-7)), Error);
}

TEST_CASE("continued fraction of theta") {
  ThetaCF cf7 = theta_cf(make_ring(7));
  REQUIRE(cf7.pre.size() == 1);
  CHECK(cf7.pre[0] == 2);
  REQUIRE(cf7.cycle.size() == 4);
  CHECK(cf7.cycle == std::vector<Int>{1, 1, 1, 4});

  ThetaCF cf2 = theta_cf(make_ring(2));
  CHECK(cf2.pre == std::vector<Int>{1});
  CHECK(cf2.cycle == std::vector<Int>{2});

  // theta = (1+sqrt 5)/2 is reduced, so the expansion is purely periodic.
  ThetaCF cf5 = theta_cf(make_ring(5));
  CHECK(cf5.pre.empty());
  CHECK(cf5.cycle == std::vector<Int>{1});

  ThetaCF cf13 = theta_cf(make_ring(13));
  CHECK(cf13.pre == std::vector<Int>{2});
  CHECK(cf13.cycle == std::vector<Int>{3});
}

TEST_CASE("pell_solve minimal solutions") {
  auto s14 = pell_solve(14, 1);
  REQUIRE(s14.has_value());
  CHECK(s14->x == 15);
  CHECK(s14->y == 4);

  auto s2 = pell_solve(2, -1);
  REQUIRE(s2.has_value());
  CHECK(s2->x == 1);
  CHECK(s2->y == 1);

  CHECK(!pell_solve(3, -1).has_value());
  CHECK(!pell_solve(7, -1).has_value());

  auto s7 = pell_solve(7, 1);
  REQUIRE(s7.has_value());
  CHECK(s7->x == 8);
  CHECK(s7->y == 3);

  // Non-maximal order: D = 28 works on Z[2 sqrt 7].
  auto s28 = pell_solve(28, 1);
  REQUIRE(s28.has_value());
  CHECK(s28->x == 127);
  CHECK(s28->y == 24);

  auto s13 = pell_solve(13, -1);
  REQUIRE(s13.has_value());
  CHECK(s13->x == 18);
  CHECK(s13->y == 5);

  CHECK_THROWS_AS(pell_solve(16, 1), Error);
  CHECK_THROWS_AS(pell_solve(0, 1), Error);
  CHECK_THROWS_AS(pell_solve(-5, 1), Error);
  CHECK_THROWS_AS(pell_solve(7, 2), Error);
}

TEST_CASE("pell_solve matches brute force for D <= 60") {
  for (std::int64_t D = 2; D <= 60; ++D) {
    std::int64_t r;
    if (is_square64(D, &r)) continue;
    for (int rhs : {1, -1}) {
      auto got = pell_solve(D, rhs);
      auto want = brute_pell(D, rhs, 1000000);
      CHECK(got.has_value() == want.has_value());
      if (got && want) {
        CHECK(got->x == want->first);
        CHECK(got->y == want->second);
      }
    }
  }
}

TEST_CASE("pell_nth follows the group law") {
  PellSolution s{15, 4, 14, 1};
  PellSolution s2 = pell_nth(s, 2);
  CHECK(s2.x == 449);
  CHECK(s2.y == 120);
  CHECK(pell_nth(s, 1).x == 15);

  // (x + y sqrt D)^n stays a solution of the rhs^n equation.
  PellSolution t{18, 5, 13, -1};
  for (std::int64_t n = 1; n <= 6; ++n) {
    PellSolution tn = pell_nth(t, n);
    Int lhs = tn.x * tn.x - Int(13) * tn.y * tn.y;
    CHECK(lhs == (n % 2 == 0 ? 1 : -1));
    CHECK(tn.rhs == (n % 2 == 0 ? 1 : -1));
  }

  CHECK_THROWS_AS(pell_nth(s, 0), Error);
  CHECK_THROWS_AS(pell_nth(s, -2), Error);
}

TEST_CASE("mod 2 exponent bound by residue class") {
  CHECK(unit_mod2_exponent(make_ring(17)).bound == 1);
  CHECK(unit_mod2_exponent(make_ring(41)).bound == 1);
  CHECK(unit_mod2_exponent(make_ring(2)).bound == 2);
  CHECK(unit_mod2_exponent(make_ring(7)).bound == 2);
  CHECK(unit_mod2_exponent(make_ring(5)).bound == 3);
  CHECK(unit_mod2_exponent(make_ring(13)).bound == 3);
  CHECK(unit_mod2_exponent(make_ring(-7)).bound == 1);
  CHECK(unit_mod2_exponent(make_ring(-1)).bound == 2);
  CHECK(unit_mod2_exponent(make_ring(-3)).bound == 3);

  CHECK(unit_mod2_exponent(make_ring(17)).exact_order == 1);
  CHECK(unit_mod2_exponent(make_ring(7)).exact_order == 2);
  CHECK(unit_mod2_exponent(make_ring(5)).exact_order == 3);
  CHECK(unit_mod2_exponent(make_ring(13)).exact_order == 3);
  CHECK(unit_mod2_exponent(make_ring(-1)).exact_order == 2);
  CHECK(unit_mod2_exponent(make_ring(-3)).exact_order == 3);
  CHECK(unit_mod2_exponent(make_ring(-7)).exact_order == 1);
}

TEST_CASE("exact mod 2 order divides the bound, d <= 200") {
  for (std::int64_t d = 2; d <= 200; ++d) {
    if (!is_square_free(d)) continue;
    RingSpec ring = make_ring(d);
    Mod2Exponent m2 = unit_mod2_exponent(ring);
    CHECK(m2.bound % m2.exact_order == 0);
    QuadRat eps = fundamental_unit(ring).eps;
    CHECK(is_one_mod2(eps.pow(m2.exact_order)));
    for (int i = 1; i < m2.exact_order; ++i) {
      CHECK(!is_one_mod2(eps.pow(i)));
    }
  }
}

TEST_CASE("mod2_order validates its input") {
  RingSpec r7 = make_ring(7);
  CHECK(mod2_order(QuadRat::root(r7)) == 2);
  CHECK_THROWS_AS(mod2_order(QuadRat(r7, Rat(1, 2), Rat(0))), Error);
  // 1 + sqrt 7 has even norm, hence is not invertible mod 2.
  CHECK_THROWS_AS(mod2_order(QuadRat(r7, Rat(1), Rat(1))), Error);
}

TEST_CASE("unit group torsion structure") {
  UnitGroupInfo gm1 = unit_group_torsion(make_ring(-1));
  CHECK(gm1.torsion_order == 4);
  CHECK(gm1.structure == "C4");
  CHECK(gm1.rank == 0);
  CHECK(gm1.torsion_gen.pow(4).is_one());
  CHECK(!gm1.torsion_gen.pow(2).is_one());

  UnitGroupInfo gm3 = unit_group_torsion(make_ring(-3));
  CHECK(gm3.torsion_order == 6);
  CHECK(gm3.structure == "C6");
  CHECK(gm3.torsion_gen.pow(6).is_one());
  CHECK(!gm3.torsion_gen.pow(3).is_one());
  CHECK(!gm3.torsion_gen.pow(2).is_one());

  UnitGroupInfo gm7 = unit_group_torsion(make_ring(-7));
  CHECK(gm7.torsion_order == 2);
  CHECK(gm7.structure == "C2");
  CHECK(gm7.rank == 0);

  UnitGroupInfo g2 = unit_group_torsion(make_ring(2));
  CHECK(g2.torsion_order == 2);
  CHECK(g2.rank == 1);
  CHECK(g2.structure == "C2 x Z");
}
