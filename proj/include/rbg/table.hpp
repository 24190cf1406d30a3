#pragma once

#include <string>
#include <vector>

#include "rbg/invariants.hpp"
#include "rbg/khovanov.hpp"
#include "rbg/pd.hpp"

namespace rbg {

struct KnotTableEntry {
  std::string name;      // "6_2", "K13n3596", ...
  std::string code;      // DT or PD text
  bool is_dt = true;
  long long det = 1;
  int signature = 0;
  int s = 0;
  LPoly jones;  // V(t) in the recorded orientation/chirality
};

// the chirality of a named knot relative to our conventions is not pinned
// down by the names alone, so matches are accepted up to mirroring the whole
// record (jones t -> 1/t, s and signature negated) and the verdict says which
enum class Chirality { as_recorded, mirrored, mismatch };

struct TableCheck {
  std::string name;
  bool pass = false;
  Chirality chirality = Chirality::mismatch;
  std::string detail;  // field-level diff when failing
};

PlanarDiagram entry_diagram(const KnotTableEntry& e);

std::vector<KnotTableEntry> load_table(const std::string& path);
std::vector<KnotTableEntry> load_table();  // bundled data/table/knots.txt

// recompute every entry's invariants from its own diagram and compare with
// the recorded values, up to the mirror policy
std::vector<TableCheck> verify_table(const std::vector<KnotTableEntry>& table,
                                     const ScanOptions& opt = {});

}  // namespace rbg
