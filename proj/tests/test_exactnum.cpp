#include "doctest.h"
#include "hrhlab/exactnum.hpp"

using namespace hrhlab;

TEST_CASE("rationals normalize and print in lowest terms") {
  CHECK(Rational(Int(2), Int(4)).str() == "1/2");
  CHECK(Rational(Int(1), Int(-2)).str() == "-1/2");
  CHECK(Rational(Int(-6), Int(-4)).str() == "3/2");
  CHECK(Rational(Int(8), Int(4)).str() == "2");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(-3).str() == "-3");
  CHECK_THROWS_AS(Rational(Int(1), Int(0)), DomainError);
}

TEST_CASE("rational parsing round-trips and rejects junk") {
  CHECK(Rational::parse("5/6") == Rational(Int(5), Int(6)));
  CHECK(Rational::parse("-7/2") == Rational(Int(-7), Int(2)));
  CHECK(Rational::parse("4/6") == Rational(Int(2), Int(3)));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK_THROWS_AS(Rational::parse(""), DomainError);
  CHECK_THROWS_AS(Rational::parse("1/"), DomainError);
  CHECK_THROWS_AS(Rational::parse("a/b"), DomainError);
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("1.5"), DomainError);
}

TEST_CASE("rational floor, ceil, and arithmetic") {
  CHECK(Rational(Int(7), Int(2)).floor() == 3);
  CHECK(Rational(Int(7), Int(2)).ceil() == 4);
  CHECK(Rational(Int(-7), Int(2)).floor() == -4);
  CHECK(Rational(Int(-7), Int(2)).ceil() == -3);
  CHECK(Rational(3).floor() == 3);
  CHECK(Rational(3).ceil() == 3);
  CHECK(Rational(Int(1), Int(2)) + Rational(Int(1), Int(3)) ==
        Rational(Int(5), Int(6)));
  CHECK(Rational(Int(1), Int(2)) * Rational(Int(2), Int(3)) ==
        Rational(Int(1), Int(3)));
  CHECK(Rational(1) / Rational(Int(1), Int(4)) == Rational(4));
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK(Rational(Int(1), Int(3)) < Rational(Int(1), Int(2)));
}

TEST_CASE("extended values treat infinity as maximal and absorbing") {
  ExtValue inf = ExtValue::infinity();
  ExtValue two{Rational(2)};
  CHECK(inf.is_infinite());
  CHECK(inf.str() == "inf");
  CHECK(two.str() == "2");
  CHECK(two <= inf);
  CHECK_FALSE(inf <= two);
  CHECK(inf <= inf);
  CHECK(inf == ExtValue::infinity());
  CHECK(inf.plus(5).is_infinite());
  CHECK(inf.minus(5).is_infinite());
  CHECK(two.plus(1) == ExtValue(Rational(3)));
  CHECK(two.minus(3) == ExtValue(Rational(-1)));
  CHECK_THROWS_AS(inf.value(), DomainError);
}

TEST_CASE("laurent polynomials have a frozen text form") {
  CHECK(LaurentPoly::zero().str() == "0");
  CHECK(LaurentPoly::one().str() == "1*q^0");
  CHECK(LaurentPoly::monomial(3, -2).str() == "3*q^-2");
  LaurentPoly p = LaurentPoly::one() + LaurentPoly::monomial(1, 1);
  CHECK((p * p).str() == "1*q^0 + 2*q^1 + 1*q^2");
}

TEST_CASE("laurent arithmetic keeps canonical form") {
  LaurentPoly p = LaurentPoly::monomial(1, 2) - LaurentPoly::monomial(1, 2);
  CHECK(p.is_zero());
  CHECK_THROWS_AS(p.min_degree(), DomainError);
  CHECK_THROWS_AS(p.max_degree(), DomainError);

  LaurentPoly r = LaurentPoly::one() + LaurentPoly::monomial(2, 3);
  CHECK(r.coeff(0) == 1);
  CHECK(r.coeff(3) == 2);
  CHECK(r.coeff(7) == 0);
  CHECK(r.min_degree() == 0);
  CHECK(r.max_degree() == 3);
  CHECK(r.eval_one() == 3);
  CHECK(r.shift(-4).min_degree() == -4);
  CHECK(r.scale(5).coeff(3) == 10);
  CHECK(r.subst_pow(2) == LaurentPoly::one() + LaurentPoly::monomial(2, 6));
  CHECK(r.subst_pow(-1) == LaurentPoly::one() + LaurentPoly::monomial(2, -3));
  CHECK_THROWS_AS(r.subst_pow(0), DomainError);
}

TEST_CASE("exact division succeeds exactly when it divides") {
  LaurentPoly one = LaurentPoly::one();
  LaurentPoly q = LaurentPoly::monomial(1, 1);
  LaurentPoly num = one - q * q;  // 1 - q^2
  LaurentPoly den = one - q;     // 1 - q
  CHECK(divide_exact(num, den) == one + q);
  CHECK_THROWS_AS(divide_exact(one + q * q, den), DomainError);
  CHECK_THROWS_AS(divide_exact(one, LaurentPoly::zero()), DomainError);
  CHECK(divide_exact(LaurentPoly::zero(), den).is_zero());
}

TEST_CASE("gaussian binomials match their frozen expansions") {
  CHECK(qbinomial(4, 2, 1).str() ==
        "1*q^0 + 1*q^1 + 2*q^2 + 1*q^3 + 1*q^4");
  CHECK(qbinomial(3, 1, 1).str() == "1*q^0 + 1*q^1 + 1*q^2");
  CHECK(qbinomial(5, 0, 1) == LaurentPoly::one());
  CHECK(qbinomial(5, 5, 1) == LaurentPoly::one());
  CHECK(qbinomial(2, 1, 2).str() == "1*q^0 + 1*q^2");
  CHECK(qbinomial(6, 3, 1).eval_one() == 20);
  CHECK_THROWS_AS(qbinomial(2, 3, 1), DomainError);
  CHECK_THROWS_AS(qbinomial(-1, 0, 1), DomainError);
  CHECK_THROWS_AS(qbinomial(4, 2, 0), DomainError);
}

TEST_CASE("step substitution scales exponents") {
  CHECK(qbinomial(4, 2, 2) == qbinomial(4, 2, 1).subst_pow(2));
  LaurentPoly neg = qbinomial(4, 2, -4);
  CHECK(neg.min_degree() == -4 * 2 * (4 - 2));
  CHECK(neg.coeff(neg.min_degree()) == 1);
  CHECK(neg.max_degree() == 0);
}

TEST_CASE("rational multisets track multiplicities exactly") {
  RationalMultiset ms;
  ms.add(Rational(Int(1), Int(2)));
  ms.add(Rational(Int(1), Int(2)), 2);
  ms.add(Rational(1));
  CHECK(ms.count(Rational(Int(1), Int(2))) == 3);
  CHECK(ms.count(Rational(7)) == 0);
  CHECK(ms.total() == 4);
  CHECK(ms.distinct() == 2);
  CHECK(ms.min_value() == Rational(Int(1), Int(2)));
  ms.remove_one(Rational(1));
  CHECK(ms.count(Rational(1)) == 0);
  CHECK_THROWS_AS(ms.remove_one(Rational(1)), DomainError);
  CHECK_THROWS_AS(ms.add(Rational(1), 0), DomainError);
  CHECK_THROWS_AS(RationalMultiset().min_value(), DomainError);
}

TEST_CASE("sumsets convolve multiplicities") {
  RationalMultiset a, b;
  a.add(Rational(Int(1), Int(2)), 2);
  a.add(Rational(1));
  b.add(Rational(Int(1), Int(2)));
  b.add(Rational(Int(3), Int(2)));
  RationalMultiset s = multiset_sumset(a, b);
  CHECK(s.count(Rational(1)) == 2);       // 1/2 + 1/2
  CHECK(s.count(Rational(2)) == 2);       // 1/2 + 3/2
  CHECK(s.count(Rational(Int(3), Int(2)))== 1);  // 1 + 1/2
  CHECK(s.count(Rational(Int(5), Int(2)))== 1);  // 1 + 3/2
  CHECK(s.total() == a.total() * b.total());
  CHECK(multiset_sumset(a, RationalMultiset()).empty());
}
