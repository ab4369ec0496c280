#include "doctest.h"
#include "hrhlab/spectrum.hpp"

using namespace hrhlab;

namespace {

Rational rat(long n, long d = 1) { return Rational(Int(n), Int(d)); }

BPSpec bp(std::initializer_list<long> exps) { return BPSpec{exps}; }

}  // namespace

TEST_CASE("bp validation and milnor numbers") {
  CHECK_NOTHROW(validate_bp(bp({2})));
  CHECK_THROWS_AS(validate_bp(bp({})), DomainError);
  CHECK_THROWS_AS(validate_bp(bp({2, 1})), DomainError);
  CHECK_THROWS_AS(validate_bp(bp({0})), DomainError);
  CHECK(bp_mu(bp({2})) == 1);
  CHECK(bp_mu(bp({3, 3})) == 4);
  CHECK(bp_mu(bp({5, 5, 5, 5, 5, 5, 5, 5, 5, 5})) == 1048576);
}

TEST_CASE("one- and two-variable spectra are the frozen multisets") {
  SpectrumData node = bp_spectrum(bp({2}));
  CHECK(node.ambient_vars == 1);
  CHECK(node.values.total() == 1);
  CHECK(node.values.count(rat(1, 2)) == 1);

  SpectrumData cusp = bp_spectrum(bp({2, 3}));
  CHECK(cusp.ambient_vars == 2);
  CHECK(cusp.values.count(rat(5, 6)) == 1);
  CHECK(cusp.values.count(rat(7, 6)) == 1);
  CHECK(cusp.values.total() == 2);

  SpectrumData triple = bp_spectrum(bp({3, 3}));
  CHECK(triple.values.count(rat(2, 3)) == 1);
  CHECK(triple.values.count(rat(1)) == 2);
  CHECK(triple.values.count(rat(4, 3)) == 1);
  CHECK(triple.values.total() == 4);
}

TEST_CASE("integer detection drives the level") {
  CHECK(sp_min_int(bp_spectrum(bp({2, 3}))) == ExtValue::infinity());
  CHECK(sp_min_int(bp_spectrum(bp({3, 3}))) == ExtValue(rat(1)));
  CHECK(hrh_isolated_hypersurface(bp_spectrum(bp({2, 3}))).is_infinite());
  CHECK(hrh_isolated_hypersurface(bp_spectrum(bp({3, 3}))) == HRHValue::exact(-1));
  // quadric in 2m variables: spectrum {m}, level m - 2
  for (long m = 2; m <= 6; ++m) {
    BPSpec q{std::vector<long>(2 * m, 2)};
    CHECK(hrh_isolated_hypersurface(bp_spectrum(q)) == HRHValue::exact(m - 2));
  }
}

TEST_CASE("hrh values compare, print, and take minima") {
  CHECK(HRHValue::exact(1).str() == "1");
  CHECK(HRHValue::infinity().str() == "inf");
  CHECK(HRHValue::interval(0, 1).str() == "[0,1]");
  CHECK(HRHValue::at_least(0).str() == ">=0");
  CHECK(HRHValue::interval(2, 2) == HRHValue::exact(2));
  CHECK_THROWS_AS(HRHValue::exact(-2), DomainError);
  CHECK_THROWS_AS(HRHValue::interval(1, 0), DomainError);
  CHECK_THROWS_AS(HRHValue::infinity().lo(), DomainError);
  CHECK_THROWS_AS(HRHValue::at_least(0).hi(), DomainError);

  CHECK(hrh_min(HRHValue::exact(1), HRHValue::exact(3)) == HRHValue::exact(1));
  CHECK(hrh_min(HRHValue::infinity(), HRHValue::exact(3)) == HRHValue::exact(3));
  CHECK(hrh_min(HRHValue::infinity(), HRHValue::infinity()).is_infinite());
}

TEST_CASE("milnor vector bins spectral values by right endpoint") {
  // quadric in 4 variables: spectrum {2}, d = 3, bin (1, 2] -> p = 2
  MilnorVector ms = milnor_s(bp_spectrum(bp({2, 2, 2, 2})));
  CHECK(ms.d == 3);
  REQUIRE(ms.s.size() == 4);
  CHECK(ms.s[0] == 0);
  CHECK(ms.s[1] == 0);
  CHECK(ms.s[2] == 1);
  CHECK(ms.s[3] == 0);

  // cusp: spectrum {5/6, 7/6}, d = 1, bins (1, 2] and (0, 1]
  MilnorVector cusp = milnor_s(bp_spectrum(bp({2, 3})));
  REQUIRE(cusp.s.size() == 2);
  CHECK(cusp.s[0] == 1);
  CHECK(cusp.s[1] == 1);
}

TEST_CASE("milnor route agrees with the spectral route on frozen inputs") {
  for (auto exps : {std::vector<long>{2, 2, 2, 2}, {3, 3}, {2, 3}, {3, 4, 5},
                    {2, 2, 2, 2, 2, 2}, {4, 4, 4, 4}}) {
    SpectrumData sd = bp_spectrum(BPSpec{exps});
    CHECK(hrh_from_milnor(milnor_s(sd)) == hrh_isolated_hypersurface(sd));
  }
}

TEST_CASE("duality checks skip integer values") {
  CHECK(check_duality(bp_spectrum(bp({3, 3, 4}))));
  SpectrumData bad;
  bad.ambient_vars = 2;
  bad.values.add(rat(1, 2));  // partner 3/2 missing
  bad.values.add(rat(1));
  CHECK_FALSE(check_duality(bad));
  SpectrumData lopsided_int;
  lopsided_int.ambient_vars = 2;
  lopsided_int.values.add(rat(1), 2);  // integers are exempt from the pairing
  CHECK(check_duality(lopsided_int));
}

TEST_CASE("spectrum validation rejects out-of-range values") {
  SpectrumData sd;
  sd.ambient_vars = 2;
  sd.values.add(rat(5, 2));  // outside (0, 2)
  CHECK_THROWS_AS(validate_spectrum(sd), DomainError);
  SpectrumData empty;
  empty.ambient_vars = 0;
  CHECK_THROWS_AS(validate_spectrum(empty), DomainError);
}

TEST_CASE("link tables enforce shape and answer window queries") {
  // d = 1 table for a node-like link: all zero entries is Serre-valid
  LinkTable flat(1, 1, {{0, 0}, {0, 0}});
  CHECK(flat.ell(0, 0) == 0);
  CHECK(flat.ell(5, 5) == 0);  // out of grid
  CHECK(link_table_verdict(flat, 0) == LinkVerdict::Holds);
  CHECK(link_table_verdict(flat, 1) == LinkVerdict::Holds);
  CHECK_THROWS_AS(link_table_verdict(flat, -1), DomainError);

  CHECK_THROWS_AS(LinkTable(1, 1, {{0, 0}}), DomainError);        // wrong rows
  CHECK_THROWS_AS(LinkTable(1, 1, {{0}, {0, 0}}), DomainError);   // ragged
  CHECK_THROWS_AS(LinkTable(1, 1, {{-1, 0}, {0, 0}}), DomainError);

  // Serre-invalid: ell(0,0) != ell(1,0) while q = 0 <= d - 1
  LinkTable bad(1, 1, {{1, 0}, {0, 0}});
  CHECK(link_table_verdict(bad, 0) == LinkVerdict::InvalidTable);

  // d = 2, a = 2: a unit at ell(2,2), inside the level-0 window q <= d + a
  LinkTable blocked(2, 2, {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}});
  CHECK(link_table_verdict(blocked, 0) == LinkVerdict::Fails);
}

TEST_CASE("the matrix-factorization identity cross-checks the milnor vector") {
  // quadric in 3 variables: spectrum {3/2}, d = 2, s = (0, 1, 0)
  SpectrumData sd = bp_spectrum(bp({2, 2, 2}));
  MilnorVector ms = milnor_s(sd);
  REQUIRE(ms.d == 2);
  CHECK(ms.s[1] == 1);

  // table with ell(1,0) = 1 satisfies s_1 - s_1 = 0 and s_2 - s_0 = 0
  // only if the (p, d-p-1) and (p, d-p) cells balance row by row
  LinkTable zero(2, 1, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  CHECK(eqmf_consistency(zero, ms));

  LinkTable off(2, 1, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
  CHECK_FALSE(eqmf_consistency(off, ms));

  MilnorVector wrong_d;
  wrong_d.d = 1;
  wrong_d.s = {Int(0), Int(0)};
  CHECK_THROWS_AS(eqmf_consistency(zero, wrong_d), DomainError);
}
