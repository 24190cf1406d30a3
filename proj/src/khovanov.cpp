#include "rbg/khovanov.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "rbg/errors.hpp"
#include "scan.hpp"

namespace rbg {

using boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

namespace {

// Smith normal form: returns the invariant factors (positive, divisibility
// chain) of an integer matrix.  Straightforward pivoting version; the scan
// reduction leaves only small matrices behind.
std::vector<cpp_int> smith(std::vector<std::vector<cpp_int>> m) {
  std::vector<cpp_int> factors;
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  size_t r0 = 0, c0 = 0;
  while (r0 < rows && c0 < cols) {
    // find smallest nonzero entry in the remaining block
    size_t pr = r0, pc = c0;
    cpp_int best = 0;
    for (size_t i = r0; i < rows; ++i)
      for (size_t j = c0; j < cols; ++j) {
        cpp_int a = abs(m[i][j]);
        if (a != 0 && (best == 0 || a < best)) {
          best = a;
          pr = i;
          pc = j;
        }
      }
    if (best == 0) break;
    std::swap(m[r0], m[pr]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][c0], m[i][pc]);
    bool clean = true;
    for (size_t i = r0 + 1; i < rows; ++i) {
      if (m[i][c0] == 0) continue;
      cpp_int k = m[i][c0] / m[r0][c0];
      for (size_t j = c0; j < cols; ++j) m[i][j] -= k * m[r0][j];
      if (m[i][c0] != 0) clean = false;
    }
    for (size_t j = c0 + 1; j < cols; ++j) {
      if (m[r0][j] == 0) continue;
      cpp_int k = m[r0][j] / m[r0][c0];
      for (size_t i = r0; i < rows; ++i) m[i][j] -= k * m[i][c0];
      if (m[r0][j] != 0) clean = false;
    }
    if (!clean) continue;  // rerun with a smaller pivot
    // divisibility: fold in any entry the pivot does not divide
    bool fixed = false;
    for (size_t i = r0 + 1; i < rows && !fixed; ++i)
      for (size_t j = c0 + 1; j < cols && !fixed; ++j)
        if (m[i][j] % m[r0][c0] != 0) {
          for (size_t jj = c0; jj < cols; ++jj) m[r0][jj] += m[i][jj];
          fixed = true;
        }
    if (fixed) continue;
    factors.push_back(abs(m[r0][c0]));
    ++r0;
    ++c0;
  }
  return factors;
}

template <class C>
int rank_field(std::vector<std::vector<C>> m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  int rank = 0;
  size_t pr = 0;
  for (size_t c = 0; c < cols && pr < rows; ++c) {
    size_t piv = pr;
    while (piv < rows && m[piv][c] == C(0)) ++piv;
    if (piv == rows) continue;
    std::swap(m[pr], m[piv]);
    C inv = scan::unit_inv<C>(m[pr][c]);
    for (size_t j = c; j < cols; ++j) m[pr][j] = m[pr][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == pr || m[i][c] == C(0)) continue;
      C f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[pr][j];
    }
    ++pr;
    ++rank;
  }
  return rank;
}

template <class C>
struct Graded {
  // (q) -> (i -> object ids), plus matrices d^i per (q,i)
  std::map<int, std::map<int, std::vector<int>>> slots;
  std::map<std::pair<int, int>, std::vector<std::vector<C>>> mats;
};

template <class C>
Graded<C> grade(const scan::Complex<C>& cx) {
  Graded<C> g;
  std::map<int, std::pair<int, int>> pos;  // obj -> (q, index within slot)
  for (int i = 0; i < static_cast<int>(cx.objs.size()); ++i) {
    if (!cx.alive[static_cast<size_t>(i)]) continue;
    auto& o = cx.objs[static_cast<size_t>(i)];
    auto& v = g.slots[o.q][o.hi];
    pos[i] = {o.q, static_cast<int>(v.size())};
    v.push_back(i);
  }
  for (auto& [q, by_i] : g.slots)
    for (auto& [i, v] : by_i) {
      auto nx = by_i.find(i + 1);
      size_t cols = v.size(), rows = nx == by_i.end() ? 0 : nx->second.size();
      g.mats[{q, i}] = std::vector<std::vector<C>>(rows, std::vector<C>(cols, C(0)));
    }
  for (auto& [s, row] : cx.out)
    for (auto& [dst, terms] : row) {
      if (terms.empty()) continue;
      auto& S = cx.objs[static_cast<size_t>(s)];
      auto& D = cx.objs[static_cast<size_t>(dst)];
      if (S.q != D.q || D.hi != S.hi + 1)
        throw std::runtime_error("khovanov: differential not homogeneous");
      C c = terms.at(scan::Mask(0));
      g.mats[{S.q, S.hi}][static_cast<size_t>(pos[dst].second)]
            [static_cast<size_t>(pos[s].second)] = c;
    }
  return g;
}

}  // namespace

KhovanovZ khovanov_z(const PlanarDiagram& d, const ScanOptions& opt) {
  scan::Engine<cpp_int> eng(d, false, opt.limit, opt.order);
  auto cx = eng.run();
  auto g = grade(cx);
  KhovanovZ out;
  for (auto& [q, by_i] : g.slots)
    for (auto& [i, v] : by_i) {
      auto facts_out = smith(g.mats[{q, i}]);
      int r_out = static_cast<int>(facts_out.size());
      int r_in = 0;
      std::vector<long long> tor;
      auto prev = g.mats.find({q, i - 1});
      if (prev != g.mats.end()) {
        auto facts_in = smith(prev->second);
        r_in = static_cast<int>(facts_in.size());
        for (auto& f : facts_in)
          if (f > 1) tor.push_back(f.convert_to<long long>());
      }
      int free = static_cast<int>(v.size()) - r_out - r_in;
      if (free < 0) throw std::runtime_error("khovanov: negative rank");
      if (free) out.free_rank[{i, q}] = free;
      if (!tor.empty()) out.torsion[{i, q}] = tor;
    }
  return out;
}

namespace {

template <class C>
std::map<std::pair<int, int>, int> field_dims(const PlanarDiagram& d,
                                              const ScanOptions& opt) {
  scan::Engine<C> eng(d, false, opt.limit, opt.order);
  auto cx = eng.run();
  auto g = grade(cx);
  std::map<std::pair<int, int>, int> out;
  for (auto& [q, by_i] : g.slots)
    for (auto& [i, v] : by_i) {
      int r_out = rank_field(g.mats[{q, i}]);
      int r_in = 0;
      auto prev = g.mats.find({q, i - 1});
      if (prev != g.mats.end()) r_in = rank_field(prev->second);
      int dim = static_cast<int>(v.size()) - r_out - r_in;
      if (dim) out[{i, q}] = dim;
    }
  return out;
}

}  // namespace

std::map<std::pair<int, int>, int> khovanov_dims_q(const PlanarDiagram& d,
                                                   const ScanOptions& opt) {
  return field_dims<Rat>(d, opt);
}

std::map<std::pair<int, int>, int> khovanov_dims_f2(const PlanarDiagram& d,
                                                    const ScanOptions& opt) {
  return field_dims<scan::F2>(d, opt);
}

LPoly khovanov_euler_q(const KhovanovZ& kh) {
  LPoly p;
  for (auto& [iq, r] : kh.free_rank) {
    long long sign = (iq.first % 2) ? -1 : 1;
    p = p + LPoly::monomial(sign * r, iq.second);
  }
  return p;
}

}  // namespace rbg
