#include "doctest.h"
#include "hrhlab/families.hpp"

using namespace hrhlab;

TEST_CASE("hodge diamonds complete under conjugation and serre duality") {
  HodgeDiamond g(2, {{0, 0, 1}, {1, 1, 9}});
  CHECK(g.n() == 2);
  CHECK(g.h(0, 0) == 1);
  CHECK(g.h(2, 2) == 1);  // filled by duality
  CHECK(g.h(1, 1) == 9);
  CHECK(g.h(0, 1) == 0);  // unset cells default to zero
  CHECK(g.h(2, 0) == 0);
  CHECK(g.h(3, 0) == 0);  // out of grid reads zero
  CHECK(g.betti(0) == 1);
  CHECK(g.betti(1) == 0);
  CHECK(g.betti(2) == 9);
  CHECK(g.betti(4) == 1);
  CHECK(g.betti(5) == 0);

  HodgeDiamond k3(2, {{0, 0, 1}, {0, 2, 1}, {1, 1, 20}});
  CHECK(k3.h(2, 0) == 1);  // conjugate of (0,2)
  CHECK(k3.betti(2) == 22);

  auto canon = g.canonical_entries();
  REQUIRE(canon.size() == 3);
  CHECK(canon[0] == std::tuple<long, long, long long>{0, 0, 1});
  CHECK(canon[1] == std::tuple<long, long, long long>{1, 1, 9});
  CHECK(canon[2] == std::tuple<long, long, long long>{2, 2, 1});
}

TEST_CASE("hodge diamond validation") {
  CHECK_THROWS_AS(HodgeDiamond(-1, {}), DomainError);
  CHECK_THROWS_AS(HodgeDiamond(2, {{0, 0, 1}, {2, 2, 2}}), DomainError);  // conflict
  CHECK_THROWS_AS(HodgeDiamond(2, {{0, 0, 1}, {3, 0, 1}}), DomainError);  // range
  CHECK_THROWS_AS(HodgeDiamond(2, {{0, 0, 1}, {1, 0, -1}}), DomainError); // negative
  CHECK_THROWS_AS(HodgeDiamond(2, {}), DomainError);                      // h00 = 0
  CHECK_NOTHROW(HodgeDiamond(0, {{0, 0, 2}}));  // disconnected is representable
}

TEST_CASE("cones over classic surfaces") {
  HodgeDiamond p2(2, {{0, 0, 1}, {1, 1, 1}, {2, 2, 1}});
  CHECK(cone_hrh(p2).is_infinite());
  CHECK(cone_lcdef(p2) == 0);

  HodgeDiamond godeaux(2, {{0, 0, 1}, {1, 1, 9}});
  CHECK(cone_hrh(godeaux) == HRHValue::exact(0));
  CHECK(cone_lcdef(godeaux) == 0);

  HodgeDiamond quadric(2, {{0, 0, 1}, {1, 1, 2}});
  CHECK(cone_hrh(quadric) == HRHValue::exact(0));

  // abelian surface: b1 = 4 breaks even the first comparison
  HodgeDiamond abelian(2, {{0, 0, 1}, {0, 1, 2}, {0, 2, 1}, {1, 1, 4}});
  CHECK(cone_hrh(abelian) == HRHValue::exact(-1));
  CHECK(cone_lcdef(abelian) == 1);

  // elliptic curve: the base itself fails connect-like vanishing in row 0
  HodgeDiamond elliptic(1, {{0, 0, 1}, {0, 1, 1}});
  CHECK(cone_hrh(elliptic) == HRHValue::exact(-1));

  HodgeDiamond p1(1, {{0, 0, 1}, {1, 1, 1}});
  CHECK(cone_hrh(p1).is_infinite());

  HodgeDiamond disconnected(0, {{0, 0, 2}});
  CHECK_THROWS_AS(cone_hrh(disconnected), DomainError);
  CHECK(cone_lcdef(disconnected) == 0);  // lcdef has no connectedness premise
}

TEST_CASE("toric cones normalize rays and decide by simpliciality") {
  ToricCone c = make_toric_cone({{2, 0, 0}, {0, 3, 0}, {1, 0, 0}});
  REQUIRE(c.rays.size() == 2);  // (2,0,0) and (1,0,0) collapse
  CHECK(c.rays[0] == std::vector<Int>{1, 0, 0});
  CHECK(c.rays[1] == std::vector<Int>{0, 1, 0});
  CHECK(toric_rank(c) == 2);
  CHECK(toric_hrh(c).is_infinite());

  ToricCone square = make_toric_cone({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  CHECK(square.rays.size() == 4);
  CHECK(toric_rank(square) == 3);
  CHECK(toric_hrh(square) == HRHValue::exact(0));

  // simplicial but not smooth: still a rational homology manifold
  ToricCone quotient = make_toric_cone({{2, 1}, {1, 2}});
  CHECK(toric_hrh(quotient).is_infinite());

  CHECK_THROWS_AS(make_toric_cone({}), DomainError);
  CHECK_THROWS_AS(make_toric_cone({{0, 0}}), DomainError);
  CHECK_THROWS_AS(make_toric_cone({{1, 0}, {1, 0, 0}}), DomainError);
  CHECK_THROWS_AS(make_toric_cone({std::vector<Int>{}}), DomainError);
}

TEST_CASE("secant verdicts form the three-way split") {
  CHECK(secant_hrh(true, false).is_infinite());
  CHECK(secant_hrh(true, true).is_infinite());  // p1 wins
  CHECK(secant_hrh(false, true) == HRHValue::exact(0));
  CHECK(secant_hrh(false, false) == HRHValue::exact(-1));
}
