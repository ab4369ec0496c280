#include "hrhlab/exactnum.hpp"

#include <cctype>
#include <sstream>

namespace hrhlab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Syntax: return "E_SYNTAX";
    case Errc::Exponent: return "E_EXPONENT";
    case Errc::DetRange: return "E_DET_RANGE";
    case Errc::Domain: return "E_DOMAIN";
    case Errc::MuCap: return "E_MU_CAP";
    case Errc::Io: return "E_IO";
  }
  return "E_DOMAIN";
}

Rational::Rational(const Int& num, const Int& den) {
  if (den == 0) throw DomainError(Errc::Domain, "rational with zero denominator");
  // cpp_rational reduces to lowest terms but insists on a positive denominator
  if (den < 0) v_ = Rat(Int(-num), Int(-den));
  else v_ = Rat(num, den);
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] {
    return DomainError(Errc::Domain, "malformed rational '" + std::string(text) + "'");
  };
  auto parse_int = [&](std::string_view s) -> Int {
    if (s.empty()) throw bad();
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') { neg = s[0] == '-'; i = 1; }
    if (i == s.size()) throw bad();
    Int v = 0;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
      v = v * 10 + (s[i] - '0');
    }
    return neg ? Int(-v) : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw bad();
  return Rational(num, den);
}

Int Rational::floor() const {
  Int n = num(), d = den();
  Int q = n / d, r = n % d;
  if (r != 0 && n < 0) --q;
  return q;
}

Int Rational::ceil() const {
  Int n = num(), d = den();
  Int q = n / d, r = n % d;
  if (r != 0 && n > 0) ++q;
  return q;
}

std::string Rational::str() const {
  if (is_integer()) return num().str();
  return num().str() + "/" + den().str();
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw DomainError(Errc::Domain, "division by zero");
  v_ /= o.v_;
  return *this;
}

ExtValue ExtValue::infinity() {
  ExtValue e;
  e.inf_ = true;
  return e;
}

const Rational& ExtValue::value() const {
  if (inf_) throw DomainError(Errc::Domain, "no finite value: +infinity");
  return v_;
}

ExtValue ExtValue::plus(long k) const {
  if (inf_) return *this;
  return ExtValue(v_ + Rational(k));
}

std::string ExtValue::str() const { return inf_ ? "inf" : v_.str(); }

bool operator==(const ExtValue& a, const ExtValue& b) {
  if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
  return a.v_ == b.v_;
}

bool operator<=(const ExtValue& a, const ExtValue& b) {
  if (b.inf_) return true;
  if (a.inf_) return false;
  return a.v_ <= b.v_;
}

LaurentPoly LaurentPoly::monomial(const Int& coeff, const Int& exp) {
  LaurentPoly p;
  p.set(exp, coeff);
  return p;
}

void LaurentPoly::set(const Int& exp, const Int& coeff) {
  if (coeff == 0) {
    terms_.erase(exp);
  } else {
    terms_[exp] = coeff;
  }
}

Int LaurentPoly::coeff(const Int& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

Int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw DomainError(Errc::Domain, "degree of the zero polynomial");
  return terms_.begin()->first;
}

Int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw DomainError(Errc::Domain, "degree of the zero polynomial");
  return terms_.rbegin()->first;
}

Int LaurentPoly::eval_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) set(e, coeff(e) + c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) set(e, coeff(e) - c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
  return r;
}

LaurentPoly LaurentPoly::scale(const Int& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

LaurentPoly LaurentPoly::shift(const Int& k) const {
  LaurentPoly r;
  for (const auto& [e, v] : terms_) r.terms_[e + k] = v;
  return r;
}

LaurentPoly LaurentPoly::subst_pow(long k) const {
  if (k == 0) throw DomainError(Errc::Domain, "substitution exponent must be nonzero");
  LaurentPoly r;
  for (const auto& [e, v] : terms_) r.terms_[e * k] = v;
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.str() << "*q^" << e.str();
  }
  return out.str();
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DomainError(Errc::Domain, "division by the zero polynomial");
  LaurentPoly rem = num;
  LaurentPoly quot;
  Int dlead = den.max_degree();
  Int dcoeff = den.coeff(dlead);
  // In an exact quotient no exponent can fall below num.min - den.min;
  // crossing that floor means the division is really a power-series tail.
  Int qfloor = num.is_zero() ? Int(0) : num.min_degree() - den.min_degree();
  while (!rem.is_zero()) {
    Int rlead = rem.max_degree();
    Int rcoeff = rem.coeff(rlead);
    if (rcoeff % dcoeff != 0 || rlead - dlead < qfloor)
      throw DomainError(Errc::Domain, "inexact polynomial division");
    LaurentPoly term = LaurentPoly::monomial(rcoeff / dcoeff, rlead - dlead);
    quot += term;
    rem -= term * den;
    if (!rem.is_zero() && rem.max_degree() >= rlead)
      throw DomainError(Errc::Domain, "inexact polynomial division");
  }
  return quot;
}

LaurentPoly qbinomial(long a, long b, long step) {
  if (b < 0 || a < b)
    throw DomainError(Errc::Domain, "qbinomial requires a >= b >= 0");
  if (step == 0)
    throw DomainError(Errc::Domain, "qbinomial requires step != 0");
  // Iterate binom(a-b+i, i) = binom(a-b+i-1, i-1) * (1 - q^(a-b+i)) / (1 - q^i);
  // every intermediate quotient is a polynomial, so division stays exact.
  LaurentPoly p = LaurentPoly::one();
  for (long i = 1; i <= b; ++i) {
    LaurentPoly top = LaurentPoly::one() - LaurentPoly::monomial(1, a - b + i);
    LaurentPoly bot = LaurentPoly::one() - LaurentPoly::monomial(1, i);
    p = divide_exact(p * top, bot);
  }
  if (step != 1) p = p.subst_pow(step);
  return p;
}

void RationalMultiset::add(const Rational& v, const Int& mult) {
  if (mult < 1) throw DomainError(Errc::Domain, "multiset multiplicity must be >= 1");
  entries_[v] += mult;
}

void RationalMultiset::remove_one(const Rational& v) {
  auto it = entries_.find(v);
  if (it == entries_.end())
    throw DomainError(Errc::Domain, "value " + v.str() + " not present in multiset");
  if (--it->second == 0) entries_.erase(it);
}

Int RationalMultiset::count(const Rational& v) const {
  auto it = entries_.find(v);
  return it == entries_.end() ? Int(0) : it->second;
}

Int RationalMultiset::total() const {
  Int s = 0;
  for (const auto& [v, m] : entries_) s += m;
  return s;
}

const Rational& RationalMultiset::min_value() const {
  if (entries_.empty()) throw DomainError(Errc::Domain, "minimum of an empty multiset");
  return entries_.begin()->first;
}

RationalMultiset multiset_sumset(const RationalMultiset& a, const RationalMultiset& b) {
  RationalMultiset r;
  for (const auto& [va, ma] : a.entries())
    for (const auto& [vb, mb] : b.entries())
      r.add(va + vb, ma * mb);
  return r;
}

}  // namespace hrhlab
