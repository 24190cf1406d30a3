#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rbg/errors.hpp"

namespace rbg {

// A crossing is the 4-tuple of edge labels around it, listed counterclockwise
// starting from the incoming under-strand.  The over-strand enters either at
// slot 1 or slot 3; that bit is recovered from global orientation consistency
// and stored in over_in_b (true = slot 1 is the incoming over end).
//
// Sign convention: over entering at slot 3 is a positive (right-handed)
// crossing, so the closure of a positive braid word has positive writhe.
struct PlanarDiagram {
  std::vector<std::array<int, 4>> xs;
  std::vector<bool> over_in_b;
  int n_circles = 0;  // crossingless unknot components

  // derived on validate():
  std::map<int, int> comp_of;  // edge label -> component index (circles excluded)
  int n_components = 0;        // includes circles

  int crossing_count() const { return static_cast<int>(xs.size()); }
  int sign(int c) const { return over_in_b[static_cast<size_t>(c)] ? -1 : +1; }
  // incoming over slot (1 or 3) / outgoing over slot
  int over_in_slot(int c) const { return over_in_b[static_cast<size_t>(c)] ? 1 : 3; }
  int over_out_slot(int c) const { return over_in_b[static_cast<size_t>(c)] ? 3 : 1; }

  bool is_knot() const { return n_components == 1; }

  // Fills orientation flags and component data; throws on malformed input.
  void validate();
};

PlanarDiagram parse_pd(const std::string& text);
PlanarDiagram parse_dt(const std::string& text);

int writhe(const PlanarDiagram& d);
int linking_number(const PlanarDiagram& d, int comp_i, int comp_j);
PlanarDiagram mirror(const PlanarDiagram& d);
PlanarDiagram reverse(const PlanarDiagram& d);  // reverse all orientations
PlanarDiagram connected_sum(const PlanarDiagram& a, const PlanarDiagram& b);

struct TwistSlot {
  std::string slot_id;
  int e1 = 0;
  int e2 = 0;
  bool antiparallel = false;  // strand directions opposite through the slot
  int sign_convention = +1;   // positive = right-handed full twist
};

PlanarDiagram insert_full_twists(const PlanarDiagram& d, const TwistSlot& slot, int t);

// Canonical form: lexicographically minimal relabeling over all traversal
// starts, crossings sorted; equal diagrams serialize identically.
std::string serialize_pd(const PlanarDiagram& d);
std::string pd_digest(const PlanarDiagram& d);

// Convenience builders (used by tests and table data).
PlanarDiagram from_braid(int strands, const std::vector<int>& word);
PlanarDiagram unknot();

}  // namespace rbg
