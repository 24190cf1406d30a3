#include <cstdlib>
#include "rbg/table.hpp"

#include <fstream>
#include <sstream>

#include "rbg/errors.hpp"
#include "rbg/goeritz.hpp"
#include "rbg/lee.hpp"

namespace rbg {

PlanarDiagram entry_diagram(const KnotTableEntry& e) {
  return e.is_dt ? parse_dt(e.code) : parse_pd(e.code);
}

std::vector<KnotTableEntry> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("knot table missing: " + path);
  std::vector<KnotTableEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    std::string key;
    is >> key;
    if (key == "knot") {
      out.emplace_back();
      is >> out.back().name;
    } else if (out.empty()) {
      throw std::runtime_error("table field before first knot: " + line);
    } else if (key == "dt" || key == "pd") {
      out.back().is_dt = key == "dt";
      std::getline(is, out.back().code);
    } else if (key == "det") {
      is >> out.back().det;
    } else if (key == "signature") {
      is >> out.back().signature;
    } else if (key == "s") {
      is >> out.back().s;
    } else if (key == "jones") {
      std::string enc;
      is >> enc;
      out.back().jones = jones_decode(enc);
    } else {
      throw std::runtime_error("unknown table field: " + key);
    }
  }
  return out;
}

std::vector<KnotTableEntry> load_table() {
  return load_table(std::string(RBG_DATA_DIR) + "/table/knots.txt");
}

std::vector<TableCheck> verify_table(const std::vector<KnotTableEntry>& table,
                                     const ScanOptions& opt) {
  std::vector<TableCheck> out;
  for (const auto& e : table) {
    TableCheck c;
    c.name = e.name;
    try {
      PlanarDiagram d = entry_diagram(e);
      LPoly jones = jones_t(d);
      long long det = std::llabs(jones.eval_unit(-1));
      int sig = signature(d);
      int s = rasmussen_s(d, opt);
      auto diff = [&](long long dt, int sg, int sv, const LPoly& j) {
        std::ostringstream os;
        if (dt != e.det) os << " det " << dt << " != " << e.det;
        if (sg != e.signature) os << " signature " << sg << " != " << e.signature;
        if (sv != e.s) os << " s " << sv << " != " << e.s;
        if (!(j == e.jones)) os << " jones " << j.str("t") << " != " << e.jones.str("t");
        return os.str();
      };
      std::string direct = diff(det, sig, s, jones);
      if (direct.empty()) {
        c.pass = true;
        c.chirality = Chirality::as_recorded;
      } else {
        std::string flipped = diff(det, -sig, -s, jones.power_substituted(-1));
        if (flipped.empty()) {
          c.pass = true;
          c.chirality = Chirality::mirrored;
        } else {
          c.detail = "as recorded:" + direct + "; mirrored:" + flipped;
        }
      }
    } catch (const std::exception& ex) {
      c.detail = ex.what();
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace rbg
