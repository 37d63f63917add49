#include <vector>

#include "doctest.h"
#include "qalg/freeness.hpp"
#include "qalg/unitfactory.hpp"

using namespace qalg;

namespace {

UnitWitness pell2_on(Slot psi) {
  return pell2_unit(make_ring(-7), fundamental_unit(make_ring(7)), 0, psi);
}

}  // namespace

TEST_CASE("the 2-pell pair on i and j has no short relations") {
  UnitWitness x = pell2_on(1);
  UnitWitness y = pell2_on(2);
  WordReport r = no_relation_up_to(x.u, y.u, 5);
  CHECK(r.clean());
  CHECK(r.max_length == 5);
  CHECK(r.relations_found.empty());
  // 4 * 3^(l-1) freely reduced words per length l.
  CHECK(r.elements_examined == 4 + 12 + 36 + 108 + 324);
}

TEST_CASE("parallel search reproduces the serial report") {
  UnitWitness x = pell2_on(1);
  UnitWitness y = pell2_on(2);
  for (int L : {2, 3, 4, 6}) {
    WordReport par = no_relation_up_to(x.u, y.u, L);
    WordReport ser = no_relation_up_to_serial(x.u, y.u, L);
    CHECK(par.max_length == ser.max_length);
    CHECK(par.relations_found == ser.relations_found);
    CHECK(par.elements_examined == ser.elements_examined);
  }

  // Relation-rich pairs stress the merge order.
  RingSpec ring = make_ring(-7);
  Quaternion i = Quaternion::basis(ring, 1);
  Quaternion j = Quaternion::basis(ring, 2);
  for (int L : {2, 4, 5}) {
    WordReport par = no_relation_up_to(i, j, L);
    WordReport ser = no_relation_up_to_serial(i, j, L);
    CHECK(par.relations_found == ser.relations_found);
    CHECK(par.elements_examined == ser.elements_examined);
  }
}

TEST_CASE("identical generators collapse at length two") {
  UnitWitness x = pell2_on(1);
  WordReport r = no_relation_up_to(x.u, x.u, 2);
  CHECK(!r.clean());
  CHECK(r.relations_found ==
        std::vector<std::string>{"xY", "Xy", "yX", "Yx"});
  CHECK(r.elements_examined == 4 + 12);
}

TEST_CASE("torsion generators produce power relations") {
  RingSpec ring = make_ring(-7);
  UnitWitness x = pell2_on(1);
  Quaternion j = Quaternion::basis(ring, 2);
  WordReport r = no_relation_up_to(x.u, j, 4);
  CHECK(!r.clean());
  bool has_y4 = false, has_conj = false;
  for (const auto& w : r.relations_found) {
    if (w == "yyyy") has_y4 = true;
    if (w == "yxYx") has_conj = true;
  }
  // j x j^-1 = x^-1, so both the pure power and the conjugation word close.
  CHECK(has_y4);
  CHECK(has_conj);
}

TEST_CASE("empty and bounded searches") {
  UnitWitness x = pell2_on(1);
  UnitWitness y = pell2_on(2);
  WordReport r0 = no_relation_up_to(x.u, y.u, 0);
  CHECK(r0.clean());
  CHECK(r0.elements_examined == 0);
  CHECK_THROWS_AS(no_relation_up_to(x.u, y.u, 15), Error);
  CHECK_THROWS_AS(no_relation_up_to(x.u, y.u, -1), Error);

  RingSpec ring = make_ring(-7);
  QuadRat z = QuadRat::integer(ring, 0);
  Quaternion three(QuadRat::integer(ring, 3), z, z, z);
  CHECK_THROWS_AS(no_relation_up_to(three, x.u, 2), Error);
}

TEST_CASE("powers of distinct 2-pell units stay disjoint") {
  UnitWitness x = pell2_on(1);
  UnitWitness y = pell2_on(2);
  CHECK(powers_disjoint(x, y, 6));
  CHECK(powers_disjoint(y, x, 6));
  CHECK(!powers_disjoint(x, x, 4));

  // Same slot witnesses collide: u^2 of one equals the other's first power.
  UnitWitness ysq = pell2_power(y, 2);
  CHECK(!powers_disjoint(y, ysq, 4));

  // A torsion seed (m = 0) has trivial power set, disjoint from any other.
  UnitWitness triv = pell2_unit(make_ring(-7), PellSolution{1, 0, 7, 1}, 0, 2);
  CHECK(powers_disjoint(triv, y, 5));
}

TEST_CASE("powers_disjoint validates its witnesses") {
  UnitWitness x = pell2_on(1);
  UnitWitness g = gauss_units(make_ring(-7), 6, -1, true)[0];
  CHECK_THROWS_AS(powers_disjoint(g, x, 4), Error);
  try {
    powers_disjoint(g, x, 4);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::wrong_family);
  }

  // Imaginary-slot layout has no scalar seed to compare on.
  UnitWitness ik = pell2_unit(make_ring(-7), fundamental_unit(make_ring(7)), 1, 3);
  CHECK_THROWS_AS(powers_disjoint(ik, x, 4), Error);

  UnitWitness w15 =
      pell2_unit(make_ring(-15), fundamental_unit(make_ring(15)), 0, 2);
  try {
    powers_disjoint(x, w15, 4);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::mixed_rings);
  }
}

TEST_CASE("find_free_power scans exponents") {
  UnitWitness x = pell2_on(1);
  UnitWitness y = pell2_on(2);
  auto m = find_free_power(x.u, y.u, 3, 4);
  REQUIRE(m.has_value());
  CHECK(*m == 1);

  RingSpec ring = make_ring(-7);
  Quaternion i = Quaternion::basis(ring, 1);
  Quaternion j = Quaternion::basis(ring, 2);
  CHECK(!find_free_power(i, j, 3, 4).has_value());
  CHECK(!find_free_power(i, j, 0, 4).has_value());
  CHECK_THROWS_AS(find_free_power(i, j, 1001, 4), Error);
}
