#pragma once
// Brute-force full-cube Khovanov homology over F2, independent of the
// scanning engine.  Shared oracle for the engine tests and the acceptance
// run; only for small diagrams.
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "rbg/pd.hpp"

namespace rbg_oracle {
using rbg::PlanarDiagram;

struct Cube {
  const PlanarDiagram& d;
  int n, npos = 0, nneg = 0;

  explicit Cube(const PlanarDiagram& dd) : d(dd), n(dd.crossing_count()) {
    if (d.n_circles != 0) throw std::logic_error("cube oracle: no P circles");
    for (int c = 0; c < n; ++c) (d.sign(c) == 1 ? npos : nneg)++;
  }

  // circles of a resolution: returns (count, circle index per token)
  std::pair<int, std::vector<int>> circles(unsigned res) const {
    std::vector<int> par(static_cast<size_t>(4 * n));
    for (size_t i = 0; i < par.size(); ++i) par[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) { return par[(size_t)x] == x ? x : par[(size_t)x] = find(par[(size_t)x]); };
    auto unite = [&](int a, int b) { par[(size_t)find(a)] = find(b); };
    std::map<int, std::vector<int>> edge_toks;
    for (int c = 0; c < n; ++c)
      for (int s = 0; s < 4; ++s) edge_toks[d.xs[(size_t)c][(size_t)s]].push_back(4 * c + s);
    for (auto& [e, ts] : edge_toks) unite(ts[0], ts[1]);
    for (int c = 0; c < n; ++c) {
      bool one = (res >> c) & 1;  // 1-resolution = B-smoothing
      if (!one) {
        unite(4 * c + 0, 4 * c + 1);
        unite(4 * c + 2, 4 * c + 3);
      } else {
        unite(4 * c + 0, 4 * c + 3);
        unite(4 * c + 1, 4 * c + 2);
      }
    }
    std::map<int, int> idx;
    std::vector<int> of(static_cast<size_t>(4 * n));
    for (int t = 0; t < 4 * n; ++t) {
      int r = find(t);
      if (!idx.count(r)) idx[r] = static_cast<int>(idx.size());
      of[(size_t)t] = idx[r];
    }
    return {static_cast<int>(idx.size()), of};
  }

  // F2 homology dimensions per (i, q)
  std::map<std::pair<int, int>, int> dims_f2() const {
    // enumerate generators: (res, labeling bitmask: bit k set = X on circle k)
    struct Gen {
      unsigned res;
      unsigned lab;
      int i, q;
    };
    std::vector<Gen> gens;
    std::map<std::pair<unsigned, unsigned>, int> gid;
    std::vector<std::pair<int, std::vector<int>>> circ(1u << n);
    for (unsigned res = 0; res < (1u << n); ++res) {
      circ[res] = circles(res);
      int k = circ[res].first;
      int r = __builtin_popcount(res);
      for (unsigned lab = 0; lab < (1u << k); ++lab) {
        int x = __builtin_popcount(lab);
        int q = (k - 2 * x) + r + npos - 2 * nneg;
        int i = r - nneg;
        gid[{res, lab}] = static_cast<int>(gens.size());
        gens.push_back({res, lab, i, q});
      }
    }
    // differential over F2: flip each 0 to 1, merge or split
    std::map<int, std::set<int>> dmat;  // gen -> image gens (F2)
    for (auto& g : gens) {
      for (int c = 0; c < n; ++c) {
        if ((g.res >> c) & 1) continue;
        unsigned res2 = g.res | (1u << c);
        auto& [k1, of1] = circ[g.res];
        auto& [k2, of2] = circ[res2];
        // labels per circle: extra circles (P-components) keep their labels;
        // they are indexed after the token circles consistently on both sides
        auto lab_of = [&](unsigned lab, int idx) { return (lab >> idx) & 1u; };
        int t = 4 * c;
        int a1 = of1[(size_t)t], b1 = of1[(size_t)t + 2];
        int a2 = of2[(size_t)t], b2 = of2[(size_t)t + 2];
        std::vector<unsigned> outs;
        if (a1 != b1) {
          // merge: multiply the two labels
          unsigned v = lab_of(g.lab, a1) + lab_of(g.lab, b1);
          if (v == 2) continue;  // X*X = 0
          std::vector<int> src(static_cast<size_t>(k2), -1);
          for (int tt = 0; tt < 4 * n; ++tt)
            if (src[(size_t)of2[(size_t)tt]] < 0) src[(size_t)of2[(size_t)tt]] = of1[(size_t)tt];
          unsigned lab2 = 0;
          for (int k = 0; k < k2; ++k) {
            int s1 = src[(size_t)k];
            unsigned bit = (s1 == a1 || s1 == b1) ? v : lab_of(g.lab, s1);
            lab2 |= bit << k;
          }
          outs.push_back(lab2);
        } else {
          // split: Delta(1)=1X+X1, Delta(X)=XX
          std::vector<int> dst(static_cast<size_t>(k1), -1);
          for (int tt = 0; tt < 4 * n; ++tt)
            if (dst[(size_t)of1[(size_t)tt]] < 0) dst[(size_t)of1[(size_t)tt]] = of2[(size_t)tt];
          unsigned x = lab_of(g.lab, a1);
          unsigned base = 0;
          for (int k = 0; k < k1; ++k) {
            if (k == a1) continue;
            base |= lab_of(g.lab, k) << dst[(size_t)k];
          }
          if (x == 1) {
            outs.push_back(base | (1u << a2) | (1u << b2));
          } else {
            outs.push_back(base | (1u << a2));
            outs.push_back(base | (1u << b2));
          }
        }
        for (unsigned lab2 : outs) {
          auto& row = dmat[gid.at({g.res, g.lab})];
          int tgt = gid.at({res2, lab2});
          if (row.count(tgt))
            row.erase(tgt);
          else
            row.insert(tgt);
        }
      }
    }
    // rank per (i,q) slice over F2
    std::map<std::pair<int, int>, std::vector<int>> slice;
    for (int g = 0; g < (int)gens.size(); ++g) slice[{gens[(size_t)g].i, gens[(size_t)g].q}].push_back(g);
    auto rank_slice = [&](int i, int q) {
      auto it = slice.find({i, q});
      auto jt = slice.find({i + 1, q});
      if (it == slice.end() || jt == slice.end()) return 0;
      std::map<int, int> col_of;
      for (size_t k = 0; k < jt->second.size(); ++k) col_of[jt->second[k]] = (int)k;
      std::vector<std::vector<char>> m(it->second.size(), std::vector<char>(jt->second.size(), 0));
      for (size_t r = 0; r < it->second.size(); ++r) {
        auto dm = dmat.find(it->second[r]);
        if (dm == dmat.end()) continue;
        for (int tgt : dm->second) m[r][(size_t)col_of.at(tgt)] = 1;
      }
      int rank = 0;
      size_t pr = 0;
      for (size_t cc = 0; cc < (m.empty() ? 0 : m[0].size()) && pr < m.size(); ++cc) {
        size_t piv = pr;
        while (piv < m.size() && !m[piv][cc]) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[pr], m[piv]);
        for (size_t rr = 0; rr < m.size(); ++rr)
          if (rr != pr && m[rr][cc])
            for (size_t j = cc; j < m[0].size(); ++j) m[rr][j] ^= m[pr][j];
        ++pr;
        ++rank;
      }
      return rank;
    };
    std::map<std::pair<int, int>, int> dims;
    for (auto& [iq, v] : slice) {
      int r_out = rank_slice(iq.first, iq.second);
      int r_in = rank_slice(iq.first - 1, iq.second);
      int dim = (int)v.size() - r_out - r_in;
      if (dim) dims[iq] = dim;
    }
    return dims;
  }
};

}  // namespace rbg_oracle
