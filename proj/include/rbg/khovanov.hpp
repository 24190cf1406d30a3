#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rbg/bracket.hpp"
#include "rbg/pd.hpp"

namespace rbg {

// Integral Khovanov homology.  free_rank[(i,q)] is the rank of the free part
// of Kh^{i,q}; torsion[(i,q)] lists the nontrivial invariant factors.
struct KhovanovZ {
  std::map<std::pair<int, int>, int> free_rank;
  std::map<std::pair<int, int>, std::vector<long long>> torsion;
};

// Knobs for the scanning reduction.  `order` overrides the default greedy
// crossing order (performance only — homology is order-independent); `limit`
// bounds the live generator count, exceeded => ResourceLimit.
struct ScanOptions {
  size_t limit = 10000000;
  std::vector<int> order;
};

KhovanovZ khovanov_z(const PlanarDiagram& d, const ScanOptions& opt = {});

// dimensions of Kh^{i,q} with rational / F2 coefficients
std::map<std::pair<int, int>, int> khovanov_dims_q(const PlanarDiagram& d,
                                                   const ScanOptions& opt = {});
std::map<std::pair<int, int>, int> khovanov_dims_f2(const PlanarDiagram& d,
                                                    const ScanOptions& opt = {});

// graded Euler characteristic in q; equals jones_hat_q of the diagram
LPoly khovanov_euler_q(const KhovanovZ& kh);

}  // namespace rbg
