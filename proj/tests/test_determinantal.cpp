#include "doctest.h"
#include "hrhlab/determinantal.hpp"

using namespace hrhlab;

namespace {

DetSpec generic(long m, long n, long p) { return {DetCase::Generic, m, n, p}; }
DetSpec skew_odd(long m, long p) { return {DetCase::SkewOdd, m, 0, p}; }
DetSpec skew_even(long m, long p) { return {DetCase::SkewEven, m, 0, p}; }
DetSpec symmetric(long n, long p) { return {DetCase::Symmetric, 0, n, p}; }

}  // namespace

TEST_CASE("parameter ranges are enforced per case") {
  CHECK_NOTHROW(validate_det_spec(generic(3, 3, 0)));
  CHECK_NOTHROW(validate_det_spec(generic(3, 3, 3)));
  CHECK_THROWS_AS(validate_det_spec(generic(3, 4, 1)), DomainError);  // m < n
  CHECK_THROWS_AS(validate_det_spec(generic(3, 1, 0)), DomainError);  // n < 2
  CHECK_THROWS_AS(validate_det_spec(generic(3, 3, 4)), DomainError);  // p > n
  CHECK_THROWS_AS(validate_det_spec(generic(3, 3, -1)), DomainError);
  CHECK_NOTHROW(validate_det_spec(skew_odd(1, 0)));
  CHECK_THROWS_AS(validate_det_spec(skew_odd(0, 0)), DomainError);
  CHECK_THROWS_AS(validate_det_spec(skew_even(2, 3)), DomainError);   // p > m
  CHECK_NOTHROW(validate_det_spec(symmetric(1, 1)));
  CHECK_THROWS_AS(validate_det_spec(symmetric(0, 0)), DomainError);
  CHECK_THROWS_AS(validate_det_spec(symmetric(3, 4)), DomainError);
}

TEST_CASE("boundary strata are smooth and the symmetric rank-one locus is special") {
  CHECK(det_verdict(generic(4, 3, 0)) == DetVerdict::Smooth);
  CHECK(det_verdict(generic(4, 3, 3)) == DetVerdict::Smooth);
  CHECK(det_verdict(skew_odd(3, 3)) == DetVerdict::Smooth);
  CHECK(det_verdict(skew_even(3, 0)) == DetVerdict::Smooth);
  CHECK(det_verdict(symmetric(4, 1)) == DetVerdict::SpecialRhm);
  CHECK(det_verdict(symmetric(4, 0)) == DetVerdict::Smooth);
  CHECK(det_verdict(symmetric(4, 2)) == DetVerdict::Computed);
  CHECK(det_verdict(generic(4, 3, 2)) == DetVerdict::Computed);
}

TEST_CASE("dimensions follow the closed forms") {
  CHECK(det_dim_x(generic(4, 3, 2)) == 12);
  CHECK(det_codim(generic(4, 3, 2)) == 2);
  CHECK(det_dim(generic(4, 3, 2)) == 10);
  CHECK(det_codim(skew_odd(3, 2)) == 3);
  CHECK(det_dim_x(skew_odd(3, 2)) == 21);   // 7 x 7 skew matrices
  CHECK(det_codim(skew_even(2, 1)) == 1);
  CHECK(det_dim_x(skew_even(2, 1)) == 6);   // 4 x 4 skew matrices
  CHECK(det_codim(symmetric(5, 3)) == 3);
  CHECK(det_dim_x(symmetric(5, 3)) == 15);  // 5 x 5 symmetric matrices
}

TEST_CASE("generic 4x3 rank-2 locus: the fully worked example") {
  DetReport r = det_report(generic(4, 3, 2));
  CHECK(r.verdict == DetVerdict::Computed);
  CHECK(r.codim == 2);
  CHECK(r.dim == 10);
  REQUIRE(r.groth.classes.size() == 3);
  CHECK(r.groth.classes.at(2).str() == "1*q^2");
  CHECK(r.groth.classes.at(1).str() == "1*q^3");
  CHECK(r.groth.classes.at(0).str() == "1*q^4");
  CHECK(r.ic_eq_h);
  CHECK(r.lcdef_gen == 1);
  CHECK(r.lcd == 4);
  CHECK(r.lcdef == 2);
  CHECK(r.nrs == 4);
  CHECK(r.hrh == HRHValue::exact(0));
  CHECK_FALSE(r.is_rhm);
  CHECK(r.ppbound_holds);
  CHECK(r.ppbound_equality);
}

TEST_CASE("square generic matrices put every class at the same degree") {
  DetReport r = det_report(generic(3, 3, 2));
  CHECK(r.codim == 1);
  for (const auto& [s, cl] : r.groth.classes) CHECK(cl.str() == "1*q^1");
  CHECK_FALSE(r.ic_eq_h);  // three classes share the bottom degree
  CHECK(r.hrh == HRHValue::exact(0));
}

TEST_CASE("generic rank-1 stratum of 5x4 matrices") {
  DetReport r = det_report(generic(5, 4, 1));
  CHECK(r.codim == 12);
  REQUIRE(r.groth.classes.size() == 2);
  CHECK(r.groth.classes.at(0).str() == "1*q^13 + 1*q^15 + 1*q^17");
  CHECK(r.groth.classes.at(1).str() == "1*q^12");
  CHECK(r.ic_eq_h);
  CHECK(r.lcdef_gen == 5);
  CHECK(r.lcd == 17);
  CHECK(r.lcdef == 5);
}

TEST_CASE("skew pfaffian strata match their frozen class vectors") {
  DetReport odd = det_report(skew_odd(3, 2));
  CHECK(odd.groth.classes.at(0).str() == "1*q^7");
  CHECK(odd.groth.classes.at(1).str() == "1*q^5");
  CHECK(odd.groth.classes.at(2).str() == "1*q^3");
  CHECK(odd.codim == 3);
  CHECK(odd.lcd == 7);
  CHECK(odd.lcdef_gen == 2);
  CHECK(odd.lcdef == 4);
  CHECK(odd.ic_eq_h);
  CHECK(odd.hrh == HRHValue::interval(0, 1));

  DetReport pf = det_report(skew_even(2, 1));
  CHECK(pf.codim == 1);
  CHECK(pf.groth.classes.at(0).str() == "1*q^1");
  CHECK(pf.groth.classes.at(1).str() == "1*q^1");
  CHECK_FALSE(pf.ic_eq_h);
  CHECK(pf.nrs == 5);
  CHECK(pf.hrh == HRHValue::interval(0, 1));
  CHECK(pf.ppbound_holds);
  CHECK_FALSE(pf.ppbound_equality);

  DetReport even = det_report(skew_even(3, 2));
  CHECK(even.codim == 1);
  for (const auto& [s, cl] : even.groth.classes) CHECK(cl.min_degree() == 1);
  CHECK(even.lcd == 1);
  CHECK(even.lcdef_gen == 0);
  CHECK(even.lcdef == 0);

  DetReport wide = det_report(skew_even(4, 2));
  CHECK(wide.codim == 6);
  CHECK(wide.groth.classes.at(2).coeff(6) == 1);
  CHECK(wide.groth.classes.at(0).coeff(6) == 1);  // shared bottom degree
  CHECK_FALSE(wide.ic_eq_h);

  DetReport far = det_report(skew_odd(4, 1));
  CHECK(far.codim == 21);
  CHECK(far.groth.classes.at(0).str() == "1*q^23 + 1*q^27 + 1*q^31");
  CHECK(far.ic_eq_h);
}

TEST_CASE("symmetric strata match their frozen class vectors") {
  DetReport r32 = det_report(symmetric(3, 2));
  CHECK(r32.codim == 1);
  REQUIRE(r32.groth.classes.size() == 2);
  CHECK(r32.groth.classes.at(2).str() == "1*q^1");
  CHECK(r32.groth.classes.at(0).str() == "1*q^1");
  CHECK_FALSE(r32.ic_eq_h);
  CHECK(r32.lcdef_gen == 0);
  CHECK(r32.lcd == 1);
  CHECK(r32.lcdef == 0);

  DetReport r53 = det_report(symmetric(5, 3));
  CHECK(r53.codim == 3);
  CHECK(r53.groth.classes.at(3).str() == "1*q^3");
  CHECK(r53.groth.classes.at(1).str() == "1*q^5");
  CHECK(r53.ic_eq_h);
  CHECK(r53.lcdef_gen == 2);
  CHECK(r53.lcd == 5);
  CHECK(r53.lcdef == 2);

  DetReport r64 = det_report(symmetric(6, 4));
  CHECK(r64.groth.classes.at(4).str() == "1*q^3");
  CHECK(r64.groth.classes.at(2).str() == "1*q^5");
  CHECK(r64.groth.classes.at(0).str() == "1*q^7");

  DetReport r73 = det_report(symmetric(7, 3));
  CHECK(r73.codim == 10);
  CHECK(r73.groth.classes.at(1).str() == "1*q^12 + 1*q^16");
  CHECK(r73.ic_eq_h);
}

TEST_CASE("smooth and special strata report level infinity") {
  DetReport sm = det_report(generic(4, 3, 0));
  CHECK(sm.verdict == DetVerdict::Smooth);
  CHECK(sm.hrh.is_infinite());
  CHECK(sm.is_rhm);
  CHECK(sm.lcdef == 0);

  DetReport sp = det_report(symmetric(5, 1));
  CHECK(sp.verdict == DetVerdict::SpecialRhm);
  CHECK(sp.hrh.is_infinite());
  CHECK(sp.is_rhm);
  CHECK(sp.lcdef == 0);
}

TEST_CASE("neighbor codimension differences give nrs_codim") {
  CHECK(nrs_codim(generic(4, 3, 2)) == 4);
  CHECK(nrs_codim(generic(5, 4, 1)) == 8);
  CHECK(nrs_codim(skew_odd(3, 2)) == 7);
  CHECK(nrs_codim(skew_even(2, 1)) == 5);
  CHECK(nrs_codim(symmetric(5, 3)) == 7);
  CHECK(nrs_codim(symmetric(6, 4)) == 7);
}

TEST_CASE("requests outside the computed band are domain errors") {
  CHECK_THROWS_AS(lcdef_invariants(generic(4, 3, 0)), DomainError);
  CHECK_THROWS_AS(nrs_codim(generic(4, 3, 3)), DomainError);
  CHECK_THROWS_AS(groth_vector(symmetric(4, 1)), DomainError);
  CHECK_THROWS_AS(det_report(generic(2, 3, 1)), DomainError);
}

TEST_CASE("case names are the hyphenated command tokens") {
  CHECK(std::string(det_case_name(DetCase::Generic)) == "generic");
  CHECK(std::string(det_case_name(DetCase::SkewOdd)) == "skew-odd");
  CHECK(std::string(det_case_name(DetCase::SkewEven)) == "skew-even");
  CHECK(std::string(det_case_name(DetCase::Symmetric)) == "symmetric");
}
