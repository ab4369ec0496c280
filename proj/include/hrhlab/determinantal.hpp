#pragma once

#include <map>
#include <string>

#include "hrhlab/spectrum.hpp"

namespace hrhlab {

enum class DetCase { Generic, SkewOdd, SkewEven, Symmetric };

const char* det_case_name(DetCase c);  // "generic", "skew-odd", ...

// Rank stratum Z_p inside a space of matrices:
//   generic:   m x n matrices (m >= n >= 2), rank <= p, 0 <= p <= n
//   skew-odd:  skew-symmetric (2m+1) x (2m+1), rank <= 2p, 0 <= p <= m
//   skew-even: skew-symmetric 2m x 2m, rank <= 2p, 0 <= p <= m
//   symmetric: symmetric n x n, rank <= p, 0 <= p <= n
struct DetSpec {
  DetCase kind = DetCase::Generic;
  long m = 0;  // generic: rows; skew: half the matrix size (rounded down)
  long n = 0;  // generic: columns; symmetric: matrix size
  long p = 0;
  friend bool operator==(const DetSpec&, const DetSpec&) = default;
};

void validate_det_spec(const DetSpec& spec);  // E_DET_RANGE on bad parameters

// Singular range carries the computed invariants; the boundary values of p
// give smooth strata, and the symmetric p = 1 stratum is the cone over a
// quadratic Veronese, a rational homology manifold with trivial defect.
enum class DetVerdict { Smooth, SpecialRhm, Computed };

DetVerdict det_verdict(const DetSpec& spec);

long det_dim_x(const DetSpec& spec);  // dimension of the ambient matrix space
long det_codim(const DetSpec& spec);  // codimension of Z_p
long det_dim(const DetSpec& spec);    // dim Z_p = dim_x - codim

// Class of the local cohomology modules in the Grothendieck group of the
// relevant equivariant category, graded by q: for each simple class index s
// the Laurent polynomial collecting the q-degrees where [D_s] occurs.
// Invariants enforced: all coefficients >= 0, lowest q-degree over all
// classes equals codim(Z_p). Defined on the singular range only.
struct GrothVector {
  std::map<long, LaurentPoly> classes;
};

GrothVector groth_vector(const DetSpec& spec);

// Whether the intersection-cohomology class equals the plain class in
// lowest degree: [D_p] is then the only class contributing at q^codim.
// Cross-checked against the closed criterion (generic: m > n; skew-odd:
// always; skew-even: never; symmetric: n = p mod 2).
bool ic_equals_h(const DetSpec& spec);

struct LcdefTriple {
  long lcdef_gen = 0;  // generation defect, top witness degree minus codim
  long lcd = 0;        // top q-degree over all classes
  long lcdef = 0;      // lcd - codim
};

LcdefTriple lcdef_invariants(const DetSpec& spec);

// Codimension jump to the non-rational-singularity stratum.
long nrs_codim(const DetSpec& spec);

struct DetReport {
  DetSpec spec;
  DetVerdict verdict = DetVerdict::Computed;
  long codim = 0;
  long dim = 0;
  // level data, set for every verdict
  HRHValue hrh = HRHValue::infinity();
  bool is_rhm = true;
  long lcdef = 0;
  // formula band, meaningful only when verdict == Computed
  GrothVector groth;
  bool ic_eq_h = false;
  long lcdef_gen = 0;
  long lcd = 0;
  long nrs = 0;
  bool ppbound_holds = false;     // lcdef_gen + 2*level_lo + 3 <= nrs
  bool ppbound_equality = false;  // equality case, attained generically
};

DetReport det_report(const DetSpec& spec);

}  // namespace hrhlab
