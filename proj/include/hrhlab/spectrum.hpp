#pragma once

#include <string>
#include <vector>

#include "hrhlab/exactnum.hpp"

namespace hrhlab {

// Brieskorn-Pham singularity x_1^{a_1} + ... + x_n^{a_n}, every a_i >= 2.
struct BPSpec {
  std::vector<long> exponents;
};

void validate_bp(const BPSpec& spec);  // E_EXPONENT when some a_i < 2
Int bp_mu(const BPSpec& spec);         // Milnor number, product of (a_i - 1)

// Spectrum of an isolated hypersurface singularity in ambient_vars
// variables: a multiset of rationals in the open interval (0, ambient_vars),
// of total cardinality mu. The singular fiber has dimension d = n - 1.
struct SpectrumData {
  RationalMultiset values;
  long ambient_vars = 0;
};

void validate_spectrum(const SpectrumData& sd);

/**
 * Higher rational homology level. One of: an exact integer >= -1,
 * +infinity (rational homology manifold), a closed interval [lo, hi],
 * or a one-sided lower bound.
 */
class HRHValue {
public:
  enum class Kind { Exact, Interval, LowerBound };

  static HRHValue exact(long v);           // v >= -1 required
  static HRHValue infinity();
  static HRHValue interval(long lo, long hi);
  static HRHValue at_least(long lo);

  Kind kind() const { return kind_; }
  bool is_infinite() const { return inf_; }
  bool is_exact_finite() const { return kind_ == Kind::Exact && !inf_; }
  long lo() const;  // finite lower endpoint; domain error when infinite
  long hi() const;  // upper endpoint; domain error when infinite or lower-bound

  std::string str() const;  // "1", "inf", "[0,1]", ">=0"

  friend bool operator==(const HRHValue& a, const HRHValue& b);

private:
  HRHValue() = default;
  Kind kind_ = Kind::Exact;
  bool inf_ = false;
  long lo_ = 0, hi_ = 0;
};

// Smallest element of the pipeline-wide lattice: min(a, b) with infinity
// absorbing only against infinity. Defined for exact and infinite inputs.
HRHValue hrh_min(const HRHValue& a, const HRHValue& b);

// Production path for Brieskorn-Pham spectra: the spectrum of a sum of
// singularities in disjoint variables is the sumset of the spectra, so the
// full spectrum folds the one-variable spectra {i/a : 1 <= i <= a-1}.
SpectrumData bp_spectrum(const BPSpec& spec);

// Smallest integer spectral value, +infinity when none exists.
ExtValue sp_min_int(const SpectrumData& sd);

// For an isolated hypersurface singularity the level equals
// Sp_min_Z - 2, or +infinity when the spectrum has no integer values.
HRHValue hrh_isolated_hypersurface(const SpectrumData& sd);

// s_p = #{alpha in spectrum : alpha in (d - p, d - p + 1]}, p = 0..d.
struct MilnorVector {
  std::vector<Int> s;
  long d = 0;
};

MilnorVector milnor_s(const SpectrumData& sd);

// Level read off the Milnor vector: the largest k with s_{d-p} = s_p for
// all p <= k, bumped to +infinity past the dimension threshold 2k > d - 3.
HRHValue hrh_from_milnor(const MilnorVector& ms);

// Spectral duality mult(alpha) = mult(n - alpha) for non-integer alpha.
bool check_duality(const SpectrumData& sd);

/**
 * Hodge table ell^{p,q} of the link of an isolated singularity of a
 * d-dimensional variety germ, tabulated on the grid 0 <= p, q <= d;
 * a is the width of the vanishing window used by the level criterion.
 * Reads outside the grid return 0.
 */
class LinkTable {
public:
  LinkTable(long d, long a, std::vector<std::vector<long long>> entries);

  long d() const { return d_; }
  long a() const { return a_; }
  long long ell(long p, long q) const;  // 0 outside [0,d] x [0,d]

private:
  long d_, a_;
  std::vector<std::vector<long long>> entries_;
};

enum class LinkVerdict { Holds, Fails, InvalidTable };

// Level criterion on the link table at level k: the verdict is Holds when
//   (i)  ell^{d-i, q-d+i} = 0 for all 0 <= i <= k and d <= q <= d + a, and
//   (ii) ell^{d-i, d-1+i} = 0 for all 1 <= i <= k.
// InvalidTable when the table violates Serre duality
// ell^{p,q} = ell^{d-p, d-q-1} on the cells where both sides lie in grid.
LinkVerdict link_table_verdict(const LinkTable& lt, long k);

// Matrix-factorization identity tying the link table to the Milnor vector:
// s_{d-p} - s_p = ell^{p, d-p-1} - ell^{p, d-p} for 0 <= p <= d.
bool eqmf_consistency(const LinkTable& lt, const MilnorVector& ms);

}  // namespace hrhlab
