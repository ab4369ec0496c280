#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hrhlab/errors.hpp"

namespace hrhlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/**
 * Exact rational number. Always stored in lowest terms with a positive
 * denominator. Text form is "p/q", or just "p" when q == 1.
 */
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  explicit Rational(const Int& n) : v_(n) {}
  Rational(const Int& num, const Int& den);

  static Rational parse(std::string_view text);

  const Int num() const { return boost::multiprecision::numerator(v_); }
  const Int den() const { return boost::multiprecision::denominator(v_); }
  bool is_integer() const { return den() == 1; }
  Int floor() const;
  Int ceil() const;

  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
  Rat v_;
};

/**
 * A rational extended with +infinity, infinity comparing strictly above
 * every finite value. Text form of infinity is "inf".
 */
class ExtValue {
public:
  ExtValue() : inf_(false), v_(0) {}
  ExtValue(const Rational& v) : inf_(false), v_(v) {}
  static ExtValue infinity();

  bool is_infinite() const { return inf_; }
  const Rational& value() const;  // domain error when infinite

  // Finite values shift by k; infinity is absorbing.
  ExtValue plus(long k) const;
  ExtValue minus(long k) const { return plus(-k); }

  std::string str() const;

  friend bool operator==(const ExtValue& a, const ExtValue& b);
  friend bool operator<=(const ExtValue& a, const ExtValue& b);

private:
  bool inf_;
  Rational v_;
};

/**
 * Integer-coefficient Laurent polynomial in one variable q, kept in
 * canonical form: no zero coefficient is ever stored, so the zero
 * polynomial is the empty term map and equality is structural.
 */
class LaurentPoly {
public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(1, 0); }
  static LaurentPoly monomial(const Int& coeff, const Int& exp);

  bool is_zero() const { return terms_.empty(); }
  Int coeff(const Int& exp) const;
  const std::map<Int, Int>& terms() const { return terms_; }
  Int min_degree() const;  // domain error on the zero polynomial
  Int max_degree() const;  // domain error on the zero polynomial
  Int eval_one() const;    // sum of coefficients

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly scale(const Int& c) const;        // multiply by a constant
  LaurentPoly shift(const Int& k) const;        // multiply by q^k
  LaurentPoly subst_pow(long k) const;          // q -> q^k, k != 0

  std::string str() const;  // ascending "c*q^e" terms, " + "-joined; zero is "0"

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

private:
  void set(const Int& exp, const Int& coeff);
  std::map<Int, Int> terms_;
};

// Exact quotient num/den; domain error when the division is not exact.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

// Gaussian binomial coefficient binom(a, b) in the variable q^step.
// Preconditions: a >= b >= 0 and step != 0. binom(a, 0) = binom(a, a) = 1.
LaurentPoly qbinomial(long a, long b, long step);

/**
 * Finite multiset of rationals with positive arbitrary-precision
 * multiplicities. Iteration order is ascending by value.
 */
class RationalMultiset {
public:
  using Map = std::map<Rational, Int>;

  RationalMultiset() = default;

  void add(const Rational& v, const Int& mult = 1);  // mult >= 1 required
  void remove_one(const Rational& v);                // absent value is a domain error
  Int count(const Rational& v) const;
  Int total() const;           // sum of multiplicities
  bool empty() const { return entries_.empty(); }
  std::size_t distinct() const { return entries_.size(); }
  const Map& entries() const { return entries_; }
  const Rational& min_value() const;  // domain error when empty

  friend bool operator==(const RationalMultiset& a, const RationalMultiset& b) {
    return a.entries_ == b.entries_;
  }

private:
  Map entries_;
};

// Sumset A + B with multiplicities: mult(c) = sum over a+b=c of
// mult_A(a) * mult_B(b). The sumset with an empty multiset is empty.
RationalMultiset multiset_sumset(const RationalMultiset& a, const RationalMultiset& b);

}  // namespace hrhlab
