#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hrhlab/spectrum.hpp"

namespace hrhlab {

// Multiset of roots gamma of the Bernstein-Sato polynomial written in the
// factor form (s + gamma), together with the codimension r of the variety.
// The value r itself is always a root.
struct RootSet {
  RationalMultiset roots;
  long r = 1;
};

// Roots attached to a reduced spectrum: each distinct spectral value once,
// plus the codimension root 1 (which may thereby reach multiplicity 2).
RootSet roots_from_spectrum(const SpectrumData& sd);
RootSet bp_reduced_roots(const BPSpec& spec);

// Root set of a tuple (f, g) in disjoint variables: the sumset of the two
// full root multisets with all multiplicities collapsed to 1, at
// codimension r = r_f + r_g. Disjointness of variables is the caller's
// responsibility; it is not observable from the root sets.
RootSet tuple_ts_roots(const RootSet& a, const RootSet& b);

// Minimal integer root after removing one copy of the codimension root r.
// Missing r is a domain error; no remaining integer root gives +infinity.
ExtValue alpha_tilde_int(const RootSet& rs);

struct IneqEntry {
  std::string name;
  std::string lhs, rhs;
  bool holds = false;
};

struct IneqReport {
  std::vector<IneqEntry> entries;
  bool all_hold() const;
};

// Inequalities tying alpha_tilde_Z to the other invariants:
//   cor-bs(1): alpha_tilde_Z <= p_q            (only when p_q is supplied;
//              the caller assembles the right-hand side)
//   cor-bs(2): alpha_tilde_Z - r - 1 <= HRH
//   cor-bs(3): alpha_tilde_Z - r + 1 <= Sp_min_Z
// +infinity is maximal on both sides, so an infinite right-hand side holds
// vacuously and an infinite left-hand side only holds against infinity.
IneqReport check_cor_bs(const ExtValue& alpha_tilde, long r, const HRHValue& hrh,
                        const ExtValue& sp_min,
                        const std::optional<ExtValue>& p_q = std::nullopt);

}  // namespace hrhlab
