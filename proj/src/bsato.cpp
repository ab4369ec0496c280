#include "hrhlab/bsato.hpp"

namespace hrhlab {

RootSet roots_from_spectrum(const SpectrumData& sd) {
  validate_spectrum(sd);
  RootSet rs;
  rs.r = 1;
  for (const auto& [v, m] : sd.values.entries()) rs.roots.add(v, 1);
  rs.roots.add(Rational(1), 1);
  return rs;
}

RootSet bp_reduced_roots(const BPSpec& spec) {
  return roots_from_spectrum(bp_spectrum(spec));
}

RootSet tuple_ts_roots(const RootSet& a, const RootSet& b) {
  RootSet rs;
  rs.r = a.r + b.r;
  RationalMultiset sum = multiset_sumset(a.roots, b.roots);
  for (const auto& [v, m] : sum.entries()) rs.roots.add(v, 1);
  return rs;
}

ExtValue alpha_tilde_int(const RootSet& rs) {
  Rational r(rs.r);
  if (rs.roots.count(r) < 1)
    throw DomainError(Errc::Domain,
                      "root set lacks the codimension root " + r.str());
  RationalMultiset rest = rs.roots;
  rest.remove_one(r);
  for (const auto& [v, m] : rest.entries())
    if (v.is_integer()) return ExtValue(v);
  return ExtValue::infinity();
}

bool IneqReport::all_hold() const {
  for (const auto& e : entries)
    if (!e.holds) return false;
  return true;
}

namespace {

// lhs <= HRH with infinity maximal; an interval or lower bound counts as
// holding when the inequality holds against its largest admissible value.
bool le_hrh(const ExtValue& lhs, const HRHValue& rhs) {
  if (rhs.is_infinite()) return true;
  if (lhs.is_infinite()) return false;
  if (rhs.kind() == HRHValue::Kind::LowerBound) return true;
  return lhs.value() <= Rational(rhs.hi());
}

}  // namespace

IneqReport check_cor_bs(const ExtValue& alpha_tilde, long r, const HRHValue& hrh,
                        const ExtValue& sp_min,
                        const std::optional<ExtValue>& p_q) {
  IneqReport rep;
  if (p_q) {
    rep.entries.push_back(
        {"cor-bs(1)", alpha_tilde.str(), p_q->str(), alpha_tilde <= *p_q});
  }
  ExtValue lhs2 = alpha_tilde.minus(r + 1);
  rep.entries.push_back({"cor-bs(2)", lhs2.str(), hrh.str(), le_hrh(lhs2, hrh)});
  ExtValue lhs3 = alpha_tilde.minus(r - 1);
  rep.entries.push_back({"cor-bs(3)", lhs3.str(), sp_min.str(), lhs3 <= sp_min});
  return rep;
}

}  // namespace hrhlab
