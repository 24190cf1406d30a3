#pragma once

#include "rbg/laurent.hpp"
#include "rbg/pd.hpp"

namespace rbg {

using LPoly = Laurent<long long>;

// Kauffman bracket of the (unoriented) diagram, a Laurent polynomial in A,
// normalized so the bracket of the 0-crossing unknot is 1.
LPoly kauffman_bracket(const PlanarDiagram& d);

// Jones polynomial V(t) for knots (integer powers of t; t = A^-4 after the
// writhe correction f = (-A^3)^{-w} <D>).
LPoly jones_t(const PlanarDiagram& d);

// Unnormalized Jones polynomial J^(q) = (q + q^-1) V(t)|_{t=q^2}; integer
// powers of q for any link, matching the Khovanov graded Euler characteristic.
LPoly jones_hat_q(const PlanarDiagram& d);

// |V(-1)|, the knot determinant.
long long determinant_via_jones(const PlanarDiagram& d);

// Greedy crossing order keeping the scan frontier narrow; shared with the
// homology scans.
std::vector<int> scan_order(const PlanarDiagram& d);

}  // namespace rbg
