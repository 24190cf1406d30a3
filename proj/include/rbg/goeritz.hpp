#pragma once

#include <vector>

#include "rbg/pd.hpp"

namespace rbg {

// Number of faces of the diagram's 4-valent map; n+2 exactly when the code is
// planar and connected.  Used to validate hand-authored diagram data.
int face_count(const PlanarDiagram& d);

// Goeritz matrix on the white regions of a checkerboard coloring, plus the
// Gordon-Litherland correction term for the same coloring.
struct GoeritzData {
  std::vector<std::vector<long long>> g;
  int mu = 0;
};
GoeritzData goeritz(const PlanarDiagram& d);

long long determinant_goeritz(const PlanarDiagram& d);
int signature(const PlanarDiagram& d);  // Gordon-Litherland signature

}  // namespace rbg
