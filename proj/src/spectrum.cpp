#include "hrhlab/spectrum.hpp"

#include <sstream>

namespace hrhlab {

void validate_bp(const BPSpec& spec) {
  if (spec.exponents.empty())
    throw DomainError(Errc::Exponent, "Brieskorn-Pham spec needs at least one exponent");
  for (long a : spec.exponents)
    if (a < 2)
      throw DomainError(Errc::Exponent, "exponent must be >= 2");
}

Int bp_mu(const BPSpec& spec) {
  validate_bp(spec);
  Int mu = 1;
  for (long a : spec.exponents) mu *= (a - 1);
  return mu;
}

void validate_spectrum(const SpectrumData& sd) {
  if (sd.ambient_vars < 1)
    throw DomainError(Errc::Domain, "spectrum needs ambient_vars >= 1");
  Rational lo(0), hi(sd.ambient_vars);
  for (const auto& [v, m] : sd.values.entries())
    if (!(lo < v && v < hi))
      throw DomainError(Errc::Domain,
                        "spectral value " + v.str() + " outside (0, n)");
}

HRHValue HRHValue::exact(long v) {
  if (v < -1) throw DomainError(Errc::Domain, "level below -1");
  HRHValue h;
  h.kind_ = Kind::Exact;
  h.lo_ = h.hi_ = v;
  return h;
}

HRHValue HRHValue::infinity() {
  HRHValue h;
  h.kind_ = Kind::Exact;
  h.inf_ = true;
  return h;
}

HRHValue HRHValue::interval(long lo, long hi) {
  if (lo < -1 || hi < lo) throw DomainError(Errc::Domain, "bad level interval");
  if (lo == hi) return exact(lo);
  HRHValue h;
  h.kind_ = Kind::Interval;
  h.lo_ = lo;
  h.hi_ = hi;
  return h;
}

HRHValue HRHValue::at_least(long lo) {
  if (lo < -1) throw DomainError(Errc::Domain, "level below -1");
  HRHValue h;
  h.kind_ = Kind::LowerBound;
  h.lo_ = lo;
  return h;
}

long HRHValue::lo() const {
  if (inf_) throw DomainError(Errc::Domain, "no finite endpoint: +infinity");
  return lo_;
}

long HRHValue::hi() const {
  if (inf_) throw DomainError(Errc::Domain, "no finite endpoint: +infinity");
  if (kind_ == Kind::LowerBound)
    throw DomainError(Errc::Domain, "lower bound has no upper endpoint");
  return hi_;
}

std::string HRHValue::str() const {
  if (inf_) return "inf";
  std::ostringstream out;
  switch (kind_) {
    case Kind::Exact:
      out << lo_;
      break;
    case Kind::Interval:
      out << "[" << lo_ << "," << hi_ << "]";
      break;
    case Kind::LowerBound:
      out << ">=" << lo_;
      break;
  }
  return out.str();
}

bool operator==(const HRHValue& a, const HRHValue& b) {
  if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == HRHValue::Kind::LowerBound) return a.lo_ == b.lo_;
  return a.lo_ == b.lo_ && a.hi_ == b.hi_;
}

HRHValue hrh_min(const HRHValue& a, const HRHValue& b) {
  if (a.is_infinite()) return b;
  if (b.is_infinite()) return a;
  if (!a.is_exact_finite() || !b.is_exact_finite())
    throw DomainError(Errc::Domain, "hrh_min needs exact or infinite operands");
  return HRHValue::exact(std::min(a.lo(), b.lo()));
}

SpectrumData bp_spectrum(const BPSpec& spec) {
  validate_bp(spec);
  RationalMultiset acc;
  bool first = true;
  for (long a : spec.exponents) {
    RationalMultiset one;
    for (long i = 1; i < a; ++i) one.add(Rational(Int(i), Int(a)));
    acc = first ? one : multiset_sumset(acc, one);
    first = false;
  }
  return SpectrumData{acc, static_cast<long>(spec.exponents.size())};
}

ExtValue sp_min_int(const SpectrumData& sd) {
  validate_spectrum(sd);
  for (const auto& [v, m] : sd.values.entries())
    if (v.is_integer()) return ExtValue(v);
  return ExtValue::infinity();
}

HRHValue hrh_isolated_hypersurface(const SpectrumData& sd) {
  ExtValue m = sp_min_int(sd);
  if (m.is_infinite()) return HRHValue::infinity();
  return HRHValue::exact(static_cast<long>(m.value().num().convert_to<long long>()) - 2);
}

MilnorVector milnor_s(const SpectrumData& sd) {
  validate_spectrum(sd);
  long d = sd.ambient_vars - 1;
  MilnorVector ms;
  ms.d = d;
  ms.s.assign(static_cast<std::size_t>(d) + 1, Int(0));
  for (const auto& [v, m] : sd.values.entries()) {
    // alpha in (d - p, d - p + 1] puts alpha in bin p = d + 1 - ceil(alpha).
    Int p = Int(d) + 1 - v.ceil();
    ms.s[p.convert_to<std::size_t>()] += m;
  }
  return ms;
}

HRHValue hrh_from_milnor(const MilnorVector& ms) {
  long d = ms.d;
  if (ms.s.size() != static_cast<std::size_t>(d) + 1)
    throw DomainError(Errc::Domain, "Milnor vector length disagrees with d");
  long candidate = d;
  for (long p = 0; p <= d; ++p) {
    if (ms.s[static_cast<std::size_t>(d - p)] != ms.s[static_cast<std::size_t>(p)]) {
      candidate = p - 1;
      break;
    }
  }
  if (candidate < 0) return HRHValue::exact(-1);
  // Levels past (d - 3) / 2 are unattainable for a genuine singularity,
  // so a candidate beyond the threshold certifies a rational homology
  // manifold point.
  if (2 * candidate > d - 3) return HRHValue::infinity();
  return HRHValue::exact(candidate);
}

bool check_duality(const SpectrumData& sd) {
  Rational n(sd.ambient_vars);
  for (const auto& [v, m] : sd.values.entries()) {
    if (v.is_integer()) continue;
    if (sd.values.count(n - v) != m) return false;
  }
  return true;
}

LinkTable::LinkTable(long d, long a, std::vector<std::vector<long long>> entries)
    : d_(d), a_(a), entries_(std::move(entries)) {
  if (d_ < 0) throw DomainError(Errc::Domain, "link table needs d >= 0");
  if (a_ < 0) throw DomainError(Errc::Domain, "link table needs a >= 0");
  auto rows = static_cast<std::size_t>(d_) + 1;
  if (entries_.size() != rows)
    throw DomainError(Errc::Domain, "link table must have d + 1 rows");
  for (const auto& row : entries_) {
    if (row.size() != rows)
      throw DomainError(Errc::Domain, "link table must have d + 1 columns");
    for (long long v : row)
      if (v < 0) throw DomainError(Errc::Domain, "link table entries must be >= 0");
  }
}

long long LinkTable::ell(long p, long q) const {
  if (p < 0 || p > d_ || q < 0 || q > d_) return 0;
  return entries_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
}

LinkVerdict link_table_verdict(const LinkTable& lt, long k) {
  if (k < 0) throw DomainError(Errc::Domain, "level k must be >= 0");
  long d = lt.d();
  // Serre duality must hold wherever both mirror cells lie in the grid;
  // the q = d column has its mirror at q = -1 and stays unconstrained.
  for (long p = 0; p <= d; ++p)
    for (long q = 0; q <= d - 1; ++q)
      if (lt.ell(p, q) != lt.ell(d - p, d - q - 1)) return LinkVerdict::InvalidTable;
  for (long i = 0; i <= k; ++i)
    for (long q = d; q <= d + lt.a(); ++q)
      if (lt.ell(d - i, q - d + i) != 0) return LinkVerdict::Fails;
  for (long i = 1; i <= k; ++i)
    if (lt.ell(d - i, d - 1 + i) != 0) return LinkVerdict::Fails;
  return LinkVerdict::Holds;
}

bool eqmf_consistency(const LinkTable& lt, const MilnorVector& ms) {
  if (lt.d() != ms.d)
    throw DomainError(Errc::Domain, "link table and Milnor vector dimensions differ");
  long d = ms.d;
  for (long p = 0; p <= d; ++p) {
    Int lhs = ms.s[static_cast<std::size_t>(d - p)] - ms.s[static_cast<std::size_t>(p)];
    Int rhs = Int(lt.ell(p, d - p - 1)) - Int(lt.ell(p, d - p));
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace hrhlab
