#pragma once

#include <memory>
#include <optional>
#include <string>

#include "rbg/bracket.hpp"
#include "rbg/pd.hpp"

namespace rbg {

struct InvariantRecord {
  std::string knot_hash;
  int s = 0;
  int signature = 0;
  long long determinant = 1;
  LPoly jones;  // V(t)
  int crossing_count = 0;
};

bool operator==(const InvariantRecord& a, const InvariantRecord& b);

// compact "exp:coeff,exp:coeff" encoding shared by the cache and the table
std::string jones_encode(const LPoly& p);
LPoly jones_decode(const std::string& s);

// All invariants of a knot diagram, computed once and cross-validated
// (|V(-1)| == det, s and signature even, det odd).  Throws NotAKnot on links
// and ResourceLimit if the scan exceeds the live-generator ceiling.
InvariantRecord invariant_record(const PlanarDiagram& d);

// Append-only cache keyed by canonical digest.  The header pins the
// conventions in force; a cache written under different conventions is
// rejected wholesale.
class InvariantCache {
 public:
  explicit InvariantCache(const std::string& path);

  std::optional<InvariantRecord> lookup(const std::string& digest) const;
  void store(const InvariantRecord& rec);  // no-op if already present
  size_t size() const;

  static const char* header_line();

 private:
  std::string path_;
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// Record via cache when one is given, computing on miss.
InvariantRecord invariant_record(const PlanarDiagram& d, InvariantCache* cache);

}  // namespace rbg
