#pragma once

#include <tuple>
#include <vector>

#include "hrhlab/spectrum.hpp"

namespace hrhlab {

/**
 * Hodge diamond of a smooth projective variety of dimension n. Input
 * entries are completed under the symmetries h^{p,q} = h^{q,p} and
 * h^{p,q} = h^{n-p,n-q}; conflicting completions are a domain error.
 * Reads outside [0,n]^2 return 0. h^{0,0} >= 1 is required.
 */
class HodgeDiamond {
public:
  HodgeDiamond(long n, const std::vector<std::tuple<long, long, long long>>& entries);

  long n() const { return n_; }
  long long h(long p, long q) const;
  // Nonzero entries with p <= q, sorted; the canonical external form.
  std::vector<std::tuple<long, long, long long>> canonical_entries() const;
  long long betti(long i) const;  // sum of h^{p,q} with p + q = i; 0 outside

  friend bool operator==(const HodgeDiamond& a, const HodgeDiamond& b) {
    return a.n_ == b.n_ && a.h_ == b.h_;
  }

private:
  long n_;
  std::vector<long long> h_;
};

// Level of the affine cone over the polarized base: the largest k such
// that the bottom rows of the diamond through k look like projective
// space (h^{p,p} = 1 and h^{p,q} = 0 otherwise for all p <= k), bumped to
// +infinity past the threshold 2k > n - 2; -1 when already h^{0,q} != 0
// for some q >= 1.
HRHValue cone_hrh(const HodgeDiamond& base);

// Local cohomological defect of the cone: the smallest c >= 0 such that
// the Betti numbers satisfy b_{i} = b_{i+2} for all -1 <= i <= n - 3 - c
// (with b_{-1} = 0), i.e. the failure width of the hard Lefschetz ladder.
long cone_lcdef(const HodgeDiamond& base);

// Rational cone given by its ray generators. Construction normalizes each
// ray to a primitive vector, deduplicates, and rejects zero rays, empty
// input, and mixed dimensions.
struct ToricCone {
  std::vector<std::vector<Int>> rays;
  friend bool operator==(const ToricCone&, const ToricCone&) = default;
};

ToricCone make_toric_cone(const std::vector<std::vector<Int>>& rays);
long toric_rank(const ToricCone& cone);  // rank of the ray matrix

// An affine toric variety is a rational homology manifold at the cone
// point exactly when the cone is simplicial: ray count equals rank.
HRHValue toric_hrh(const ToricCone& cone);

// Level of a secant variety of a Segre-Veronese variety at a point of the
// last nontrivial stratum: +infinity for secants of P^1 embeddings, else 0
// when the relevant higher direct images vanish and -1 when they do not.
HRHValue secant_hrh(bool is_p1, bool has_vanishing);

}  // namespace hrhlab
