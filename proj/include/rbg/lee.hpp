#pragma once

#include <map>

#include "rbg/khovanov.hpp"
#include "rbg/pd.hpp"

namespace rbg {

struct LeeData {
  int total_dim = 0;             // dim over Q, 2^{#components}
  std::map<int, int> dim_by_i;   // homological grading -> dimension
  int fmin = 0, fmax = 0;        // filtration levels of H^0 generators (knots)
  int s = 0;                     // Rasmussen invariant (knots)
};

LeeData lee_homology(const PlanarDiagram& d, const ScanOptions& opt = {});

// shortcut; throws NotAKnot on links
int rasmussen_s(const PlanarDiagram& d, const ScanOptions& opt = {});

}  // namespace rbg
