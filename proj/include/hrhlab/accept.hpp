#pragma once

#include <string>
#include <vector>

#include "hrhlab/spectrum.hpp"

namespace hrhlab::accept {

// Independent oracles, deliberately naive: these recompute the production
// values by direct enumeration or textbook recurrences.
SpectrumData bp_spectrum_enumerated(const BPSpec& spec);
RationalMultiset sumset_enumerated(const RationalMultiset& a,
                                   const RationalMultiset& b);
LaurentPoly qbinomial_pascal(long a, long b);

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// suite: "all" | "spectrum" | "det" | "families".
std::vector<CriterionResult> run_suite(const std::string& suite);
bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace hrhlab::accept
