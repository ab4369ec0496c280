#include "hrhlab/determinantal.hpp"

#include <sstream>

namespace hrhlab {

namespace {

long choose2(long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

std::string spec_str(const DetSpec& s) {
  std::ostringstream out;
  out << det_case_name(s.kind);
  if (s.kind == DetCase::Generic) out << " m=" << s.m << " n=" << s.n;
  else if (s.kind == DetCase::Symmetric) out << " n=" << s.n;
  else out << " m=" << s.m;
  out << " p=" << s.p;
  return out.str();
}

void require_computed(const DetSpec& spec) {
  if (det_verdict(spec) != DetVerdict::Computed)
    throw DomainError(Errc::DetRange,
                      "p outside the singular range for " + spec_str(spec));
}

[[noreturn]] void inconsistent(const DetSpec& spec, const std::string& what) {
  throw ConsistencyError(what + " disagrees with its closed form for " + spec_str(spec));
}

}  // namespace

const char* det_case_name(DetCase c) {
  switch (c) {
    case DetCase::Generic: return "generic";
    case DetCase::SkewOdd: return "skew-odd";
    case DetCase::SkewEven: return "skew-even";
    case DetCase::Symmetric: return "symmetric";
  }
  return "generic";
}

void validate_det_spec(const DetSpec& spec) {
  auto fail = [&](const std::string& why) {
    throw DomainError(Errc::DetRange, "invalid determinantal parameters (" + why + ")");
  };
  switch (spec.kind) {
    case DetCase::Generic:
      if (spec.n < 2) fail("need n >= 2");
      if (spec.m < spec.n) fail("need m >= n");
      if (spec.p < 0 || spec.p > spec.n) fail("need 0 <= p <= n");
      break;
    case DetCase::SkewOdd:
    case DetCase::SkewEven:
      if (spec.m < 1) fail("need m >= 1");
      if (spec.p < 0 || spec.p > spec.m) fail("need 0 <= p <= m");
      break;
    case DetCase::Symmetric:
      if (spec.n < 1) fail("need n >= 1");
      if (spec.p < 0 || spec.p > spec.n) fail("need 0 <= p <= n");
      break;
  }
}

DetVerdict det_verdict(const DetSpec& spec) {
  validate_det_spec(spec);
  long top = spec.kind == DetCase::Generic || spec.kind == DetCase::Symmetric
                 ? spec.n
                 : spec.m;
  if (spec.p == 0 || spec.p == top) return DetVerdict::Smooth;
  if (spec.kind == DetCase::Symmetric && spec.p == 1) return DetVerdict::SpecialRhm;
  return DetVerdict::Computed;
}

long det_dim_x(const DetSpec& spec) {
  validate_det_spec(spec);
  switch (spec.kind) {
    case DetCase::Generic: return spec.m * spec.n;
    case DetCase::SkewOdd: return choose2(2 * spec.m + 1);
    case DetCase::SkewEven: return choose2(2 * spec.m);
    case DetCase::Symmetric: return choose2(spec.n + 1);
  }
  return 0;
}

long det_codim(const DetSpec& spec) {
  validate_det_spec(spec);
  switch (spec.kind) {
    case DetCase::Generic: return (spec.m - spec.p) * (spec.n - spec.p);
    case DetCase::SkewOdd: return (spec.m - spec.p) * (2 * (spec.m - spec.p) + 1);
    case DetCase::SkewEven: return (spec.m - spec.p) * (2 * (spec.m - spec.p) - 1);
    case DetCase::Symmetric: return choose2(spec.n - spec.p + 1);
  }
  return 0;
}

long det_dim(const DetSpec& spec) { return det_dim_x(spec) - det_codim(spec); }

GrothVector groth_vector(const DetSpec& spec) {
  require_computed(spec);
  long m = spec.m, n = spec.n, p = spec.p;
  GrothVector g;
  switch (spec.kind) {
    case DetCase::Generic:
      for (long s = 0; s <= p; ++s) {
        LaurentPoly cl = qbinomial(n - s - 1, p - s, 2)
                             .shift((n - p) * (n - p) + (n - s) * (m - n));
        g.classes[s] = cl;
      }
      break;
    case DetCase::SkewOdd:
      for (long s = 0; s <= p; ++s) {
        LaurentPoly cl =
            qbinomial(m - 1 - s, p - s, 4)
                .shift(2 * (m - p) * (m - p) + (m - p) + 2 * (p - s));
        g.classes[s] = cl;
      }
      break;
    case DetCase::SkewEven:
      for (long s = 0; s <= p; ++s) {
        LaurentPoly cl = qbinomial(m - 1 - s, p - s, 4)
                             .shift(2 * (m - p) * (m - p) - (m - p));
        g.classes[s] = cl;
      }
      break;
    case DetCase::Symmetric:
      for (long l = 0; 2 * l <= p; ++l) {
        LaurentPoly cl =
            qbinomial((n - p + 2 * l - 1) / 2, l, -4)
                .shift(1 + choose2(n - p + 2 * l + 1) - choose2(2 * l + 2));
        g.classes[p - 2 * l] = cl;
      }
      break;
  }
  // Structural invariants of the vector: nonnegative multiplicities and
  // lowest q-degree equal to the codimension.
  Int min_deg;
  bool have = false;
  for (const auto& [s, cl] : g.classes) {
    if (cl.is_zero()) inconsistent(spec, "empty class polynomial");
    for (const auto& [e, c] : cl.terms())
      if (c < 0) inconsistent(spec, "negative multiplicity");
    if (!have || cl.min_degree() < min_deg) {
      min_deg = cl.min_degree();
      have = true;
    }
  }
  if (!have || min_deg != det_codim(spec)) inconsistent(spec, "lowest q-degree");
  return g;
}

bool ic_equals_h(const DetSpec& spec) {
  require_computed(spec);
  GrothVector g = groth_vector(spec);
  Int c = det_codim(spec);
  if (g.classes.at(spec.p).coeff(c) != 1)
    inconsistent(spec, "top class multiplicity at codim degree");
  bool computed = true;
  for (const auto& [s, cl] : g.classes)
    if (s != spec.p && cl.coeff(c) != 0) computed = false;
  bool closed = false;
  switch (spec.kind) {
    case DetCase::Generic: closed = spec.m > spec.n; break;
    case DetCase::SkewOdd: closed = true; break;
    case DetCase::SkewEven: closed = false; break;
    case DetCase::Symmetric: closed = (spec.n - spec.p) % 2 == 0; break;
  }
  if (computed != closed) inconsistent(spec, "ic-equals-h criterion");
  return computed;
}

LcdefTriple lcdef_invariants(const DetSpec& spec) {
  require_computed(spec);
  GrothVector g = groth_vector(spec);
  long m = spec.m, n = spec.n, p = spec.p;
  long codim = det_codim(spec);

  long witness = spec.kind == DetCase::Symmetric ? p - 2 : p - 1;
  LcdefTriple t;
  t.lcdef_gen =
      (g.classes.at(witness).max_degree() - codim).convert_to<long>();
  long gen_closed = 0;
  switch (spec.kind) {
    case DetCase::Generic: gen_closed = m + n - 2 * p - 2; break;
    case DetCase::SkewOdd: gen_closed = 4 * (m - p - 1) + 2; break;
    case DetCase::SkewEven: gen_closed = 4 * (m - p - 1); break;
    case DetCase::Symmetric: gen_closed = 2 * (n - p - 1); break;
  }
  if (t.lcdef_gen != gen_closed) inconsistent(spec, "lcdef_gen");

  Int lcd_deg = 0;
  bool have = false;
  for (const auto& [s, cl] : g.classes)
    if (!have || cl.max_degree() > lcd_deg) {
      lcd_deg = cl.max_degree();
      have = true;
    }
  t.lcd = lcd_deg.convert_to<long>();
  long lcd_closed = 0;
  switch (spec.kind) {
    case DetCase::Generic: lcd_closed = m * n - (p + 1) * (p + 1) + 1; break;
    case DetCase::SkewOdd: lcd_closed = choose2(2 * m + 1) - choose2(2 * p + 2) + 1; break;
    case DetCase::SkewEven: lcd_closed = choose2(2 * m) - choose2(2 * p + 2) + 1; break;
    case DetCase::Symmetric:
      lcd_closed = p % 2 == 0 ? 1 + choose2(n + 1) - choose2(p + 2)
                              : 1 + choose2(n) - choose2(p + 1);
      break;
  }
  if (t.lcd != lcd_closed) inconsistent(spec, "lcd");

  t.lcdef = t.lcd - codim;
  if (t.lcdef < t.lcdef_gen) inconsistent(spec, "lcdef below lcdef_gen");
  long diff_closed = 0;
  switch (spec.kind) {
    case DetCase::Generic: diff_closed = (p - 1) * (m + n - 2 * p - 2); break;
    case DetCase::SkewOdd: diff_closed = 2 * (p - 1) * (2 * (m - p - 1) + 1); break;
    case DetCase::SkewEven: diff_closed = 4 * (p - 1) * (m - p - 1); break;
    case DetCase::Symmetric:
      diff_closed = p % 2 == 0 ? (n - p - 1) * (p - 2) : (n - p - 1) * (p - 3);
      break;
  }
  if (t.lcdef - t.lcdef_gen != diff_closed) inconsistent(spec, "lcdef - lcdef_gen");
  return t;
}

long nrs_codim(const DetSpec& spec) {
  require_computed(spec);
  long m = spec.m, n = spec.n, p = spec.p;
  long closed = 0;
  switch (spec.kind) {
    case DetCase::Generic: closed = m + n - 2 * p + 1; break;
    case DetCase::SkewOdd: closed = 4 * (m - p) + 3; break;
    case DetCase::SkewEven: closed = 4 * (m - p) + 1; break;
    case DetCase::Symmetric: closed = 2 * (n - p) + 3; break;
  }
  // The stratum is cut out by the next singular neighbor, so its
  // codimension inside Z_p is a difference of ambient codimensions.
  DetSpec neighbor = spec;
  neighbor.p = spec.kind == DetCase::Symmetric ? p - 2 : p - 1;
  long delta = det_codim(neighbor) - det_codim(spec);
  if (delta != closed) inconsistent(spec, "nrs codimension");
  return closed;
}

DetReport det_report(const DetSpec& spec) {
  DetReport rep;
  rep.spec = spec;
  rep.verdict = det_verdict(spec);
  rep.codim = det_codim(spec);
  rep.dim = det_dim(spec);
  if (rep.verdict != DetVerdict::Computed) {
    rep.hrh = HRHValue::infinity();
    rep.is_rhm = true;
    rep.lcdef = 0;
    return rep;
  }
  rep.groth = groth_vector(spec);
  rep.ic_eq_h = ic_equals_h(spec);
  LcdefTriple t = lcdef_invariants(spec);
  rep.lcdef_gen = t.lcdef_gen;
  rep.lcd = t.lcd;
  rep.lcdef = t.lcdef;
  rep.nrs = nrs_codim(spec);
  long hi = (rep.nrs - rep.lcdef_gen - 3) / 2;
  if (spec.kind == DetCase::Generic && hi != 0)
    throw ConsistencyError("generic level bound must collapse to 0");
  rep.hrh = hi == 0 ? HRHValue::exact(0) : HRHValue::interval(0, hi);
  rep.is_rhm = false;
  long lhs = rep.lcdef_gen + 2 * rep.hrh.lo() + 3;
  rep.ppbound_holds = lhs <= rep.nrs;
  rep.ppbound_equality = lhs == rep.nrs;
  if (!rep.ppbound_holds) throw ConsistencyError("level bound violated on " + spec_str(spec));
  return rep;
}

}  // namespace hrhlab
