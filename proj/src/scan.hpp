#pragma once

// Scanning computation of Khovanov-type homology with the Frobenius algebra
// R[X]/(X^2 - t): t=0 is Khovanov, t=1 is Lee.  The complex is built crossing
// by crossing; objects are matchings of the open boundary tokens, morphisms
// are linear combinations of dotted-disk cobordisms (one disk per loop of the
// union of the two matchings, each carrying 0 or 1 dots).  Circles are
// delooped on sight and invertible identity entries are cancelled, which keeps
// the intermediate complexes small.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rbg/errors.hpp"

#include "rbg/bracket.hpp"
#include "rbg/pd.hpp"

namespace rbg::scan {

using Mask = std::uint64_t;

struct Obj {
  std::map<int, int> match;  // token -> partner token (involution)
  std::vector<int> circles;  // transient, removed by delooping
  int hi = 0;                // homological grading
  int q = 0;                 // quantum grading shift
};

struct Loops {
  int count = 0;
  std::map<int, int> at_token;
  std::map<int, int> a_circle;  // circle id (bottom object) -> loop index
  std::map<int, int> b_circle;  // circle id (top object) -> loop index
};

inline Loops build_loops(const Obj& a, const Obj& b) {
  Loops L;
  std::set<int> todo;
  for (auto& [t, p] : a.match) todo.insert(t);
  while (!todo.empty()) {
    int t0 = *todo.begin();
    int t = t0;
    while (true) {
      L.at_token[t] = L.count;
      todo.erase(t);
      int v = a.match.at(t);
      L.at_token[v] = L.count;
      todo.erase(v);
      t = b.match.at(v);
      if (t == t0) break;
    }
    L.count++;
  }
  for (int c : a.circles) L.a_circle[c] = L.count++;
  for (int c : b.circles) L.b_circle[c] = L.count++;
  if (L.count > 62) throw std::runtime_error("scan: loop basis exceeds 62 bits");
  return L;
}

inline Mask drop_bit(Mask m, int k) {
  Mask low = m & ((Mask(1) << k) - 1);
  Mask high = (m >> (k + 1)) << k;
  return low | high;
}

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(static_cast<size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[static_cast<size_t>(x)] == x ? x : p[static_cast<size_t>(x)] = find(p[static_cast<size_t>(x)]); }
  void unite(int a, int b) { p[static_cast<size_t>(find(a))] = find(b); }
};

// ring helpers -------------------------------------------------------------

template <class C>
bool is_unit(const C& c);
template <class C>
C unit_inv(const C& c);

struct F2 {
  int v = 0;
  F2() = default;
  F2(int x) : v(x & 1) {}
  F2(long x) : v(static_cast<int>(x & 1)) {}
  friend F2 operator+(F2 a, F2 b) { return F2(a.v ^ b.v); }
  friend F2 operator-(F2 a, F2 b) { return F2(a.v ^ b.v); }
  F2 operator-() const { return *this; }
  friend F2 operator*(F2 a, F2 b) { return F2(a.v & b.v); }
  friend bool operator==(F2 a, F2 b) { return a.v == b.v; }
  friend bool operator!=(F2 a, F2 b) { return a.v != b.v; }
};

template <>
inline bool is_unit<F2>(const F2& c) {
  return c.v == 1;
}
template <>
inline F2 unit_inv<F2>(const F2& c) {
  return c;
}

template <>
inline bool is_unit<boost::multiprecision::cpp_int>(const boost::multiprecision::cpp_int& c) {
  return c == 1 || c == -1;
}
template <>
inline boost::multiprecision::cpp_int unit_inv<boost::multiprecision::cpp_int>(
    const boost::multiprecision::cpp_int& c) {
  return c;
}

template <>
inline bool is_unit<boost::multiprecision::cpp_rational>(
    const boost::multiprecision::cpp_rational& c) {
  return c != 0;
}
template <>
inline boost::multiprecision::cpp_rational unit_inv<boost::multiprecision::cpp_rational>(
    const boost::multiprecision::cpp_rational& c) {
  return 1 / c;
}

// cobordism evaluation ------------------------------------------------------

template <class C>
C pow2(int g) {
  C r(1);
  for (int i = 0; i < g; ++i) r = r + r;
  return r;
}

// Evaluate one glued surface component and expand it over its boundary loops.
// disks/glues give chi, dots the total dot count; bloops lists the indices of
// the component's boundary loops in the result basis.  Appends the expansion
// (as masks over the result basis) multiplied into `terms`; returns false if
// the component evaluates to zero.
template <class C>
bool expand_component(int disks, int glues, int dots, const std::vector<int>& bloops, bool lee,
                      std::vector<std::pair<Mask, C>>& terms) {
  int chi = disks - glues;
  int b = static_cast<int>(bloops.size());
  int gg = 2 - chi - b;
  if (gg < 0 || gg % 2) throw std::runtime_error("scan: bad component euler characteristic");
  int g = gg / 2;
  int p = dots + g;
  C mult = pow2<C>(g);
  if (mult == C(0)) return false;
  if (b == 0) {
    if (p % 2 == 0) return false;        // closed, even total dots
    if (p > 1 && !lee) return false;     // X^2 = 0 in the Khovanov ring
    for (auto& [m, c] : terms) c = c * mult;
    return true;
  }
  if (p >= 2) {
    if (!lee) return false;  // X^2 = t
    p &= 1;
  }
  // iterated comultiplication of X^p across the b loops:
  // Delta(1) = 1 X + X 1, Delta(X) = X X + t 1 1
  std::vector<std::pair<Mask, C>> split;  // masks over local loop positions
  std::vector<std::pair<Mask, int>> cur{{0, p}};
  for (int k = 0; k + 1 < b; ++k) {
    std::vector<std::pair<Mask, int>> nxt;
    for (auto& [m, pw] : cur) {
      if (pw == 0) {
        nxt.push_back({m, 1});                              // 1 at slot k, X remains
        nxt.push_back({m | (Mask(1) << k), 0});             // X at slot k
      } else {
        nxt.push_back({m | (Mask(1) << k), 1});             // X at slot k, X remains
        if (lee) nxt.push_back({m, 0});                     // t * (1,1)
      }
    }
    cur = std::move(nxt);
  }
  for (auto& [m, pw] : cur) split.push_back({m | (pw ? (Mask(1) << (b - 1)) : 0), C(1)});
  // splice local positions into global loop indices and take the product
  std::vector<std::pair<Mask, C>> out;
  for (auto& [tm, tc] : terms)
    for (auto& [sm, sc] : split) {
      Mask m = tm;
      for (int k = 0; k < b; ++k)
        if ((sm >> k) & 1) m |= Mask(1) << bloops[static_cast<size_t>(k)];
      out.push_back({m, tc * sc * mult});
    }
  terms = std::move(out);
  return !terms.empty();
}

// horizontal composition g . f of entries f: A -> B, g: B -> C ---------------
template <class C>
std::map<Mask, C> compose(const Obj& A, const Obj& B, const Obj& Cc,
                          const std::map<Mask, C>& f, const std::map<Mask, C>& g, bool lee) {
  Loops LAB = build_loops(A, B);
  Loops LBC = build_loops(B, Cc);
  Loops LAC = build_loops(A, Cc);
  int n0 = LAB.count, n1 = LBC.count;
  UF uf(n0 + n1);
  for (auto& [u, v] : B.match) {
    if (u > v) continue;
    uf.unite(LAB.at_token.at(u), LBC.at_token.at(u) + n0);
  }
  for (int cid : B.circles) uf.unite(LAB.b_circle.at(cid), LBC.a_circle.at(cid) + n0);
  std::map<int, std::vector<int>> comp_nodes;
  for (int i = 0; i < n0 + n1; ++i) comp_nodes[uf.find(i)].push_back(i);
  std::map<int, int> comp_glue;
  for (auto& [u, v] : B.match)
    if (u < v) comp_glue[uf.find(LAB.at_token.at(u))]++;

  // result-basis loop -> component root
  std::map<int, std::vector<int>> comp_bloops;
  {
    std::map<int, int> loop_token;  // result loop -> representative token
    for (auto& [t, l] : LAC.at_token)
      if (!loop_token.count(l)) loop_token[l] = t;
    for (int l = 0; l < LAC.count; ++l) {
      int root;
      auto it = loop_token.find(l);
      if (it != loop_token.end()) {
        root = uf.find(LAB.at_token.at(it->second));
      } else {
        // circle loop of A or C
        int cid = -1;
        bool bottom = false;
        for (auto& [id, ll] : LAC.a_circle)
          if (ll == l) {
            cid = id;
            bottom = true;
          }
        for (auto& [id, ll] : LAC.b_circle)
          if (ll == l) cid = id;
        root = bottom ? uf.find(LAB.a_circle.at(cid)) : uf.find(LBC.b_circle.at(cid) + n0);
      }
      comp_bloops[root].push_back(l);
    }
  }

  std::map<Mask, C> result;
  for (auto& [mf, cf] : f)
    for (auto& [mg, cg] : g) {
      C coeff = cf * cg;
      std::vector<std::pair<Mask, C>> terms{{0, C(1)}};
      bool dead = false;
      for (auto& [root, nodes] : comp_nodes) {
        int dots = 0;
        for (int nd : nodes) {
          if (nd < n0)
            dots += (mf >> nd) & 1;
          else
            dots += (mg >> (nd - n0)) & 1;
        }
        auto itb = comp_bloops.find(root);
        static const std::vector<int> kEmpty;
        const auto& bl = itb == comp_bloops.end() ? kEmpty : itb->second;
        if (!expand_component<C>(static_cast<int>(nodes.size()),
                                 comp_glue.count(root) ? comp_glue[root] : 0, dots, bl, lee,
                                 terms)) {
          dead = true;
          break;
        }
      }
      if (dead) continue;
      for (auto& [m, c] : terms) {
        C v = coeff * c;
        auto it = result.find(m);
        if (it == result.end()) {
          if (!(v == C(0))) result[m] = v;
        } else {
          it->second = it->second + v;
          if (it->second == C(0)) result.erase(it);
        }
      }
    }
  return result;
}

// vertical transport of an entry across one crossing step -------------------
//
// bot/top are the two smoothing arcs applied below/above; when saddle is true
// the new surface piece is a single square touching all four tokens, otherwise
// two rectangles (one per arc, bot == top).  new_bot/new_top map circle ids
// created by the joins to the arc index that closed them.
template <class C>
std::map<Mask, C> step_entry(const Obj& Ao, const Obj& Po, const Obj& An, const Obj& Pn,
                             const std::map<Mask, C>& f,
                             const std::array<std::pair<int, int>, 2>& bot,
                             const std::array<std::pair<int, int>, 2>& top, bool saddle, bool lee,
                             const std::vector<std::pair<int, int>>& new_bot,
                             const std::vector<std::pair<int, int>>& new_top) {
  Loops Lo = build_loops(Ao, Po);
  int n0 = Lo.count;
  int extra = saddle ? 1 : 2;
  UF uf(n0 + extra);
  std::map<int, int> comp_glue_map;
  std::vector<std::pair<int, int>> glue_pairs;
  auto glue_node_of_arc = [&](int k) { return saddle ? n0 : n0 + k; };
  std::set<int> toks;
  for (int k = 0; k < 2; ++k) {
    toks.insert(bot[static_cast<size_t>(k)].first);
    toks.insert(bot[static_cast<size_t>(k)].second);
    toks.insert(top[static_cast<size_t>(k)].first);
    toks.insert(top[static_cast<size_t>(k)].second);
  }
  if (saddle) {
    for (int t : toks) glue_pairs.push_back({n0, Lo.at_token.at(t)});
  } else {
    for (int k = 0; k < 2; ++k) {
      glue_pairs.push_back({n0 + k, Lo.at_token.at(bot[static_cast<size_t>(k)].first)});
      glue_pairs.push_back({n0 + k, Lo.at_token.at(bot[static_cast<size_t>(k)].second)});
    }
  }
  for (auto& [a, b] : glue_pairs) uf.unite(a, b);
  for (auto& [a, b] : glue_pairs) comp_glue_map[uf.find(a)]++;

  Loops Ln = build_loops(An, Pn);
  std::map<int, std::vector<int>> comp_bloops;
  {
    std::map<int, int> loop_token;
    for (auto& [t, l] : Ln.at_token)
      if (!loop_token.count(l)) loop_token[l] = t;
    auto node_of_circle = [&](int cid, bool bottom) -> int {
      const auto& created = bottom ? new_bot : new_top;
      for (auto& [id, arc] : created)
        if (id == cid) return glue_node_of_arc(arc);
      return bottom ? Lo.a_circle.at(cid) : Lo.b_circle.at(cid);
    };
    for (int l = 0; l < Ln.count; ++l) {
      int root;
      auto it = loop_token.find(l);
      if (it != loop_token.end()) {
        root = uf.find(Lo.at_token.at(it->second));
      } else {
        int cid = -1;
        bool bottom = false;
        for (auto& [id, ll] : Ln.a_circle)
          if (ll == l) {
            cid = id;
            bottom = true;
          }
        for (auto& [id, ll] : Ln.b_circle)
          if (ll == l) cid = id;
        root = uf.find(node_of_circle(cid, bottom));
      }
      comp_bloops[root].push_back(l);
    }
  }
  std::map<int, std::vector<int>> comp_nodes;
  for (int i = 0; i < n0 + extra; ++i) comp_nodes[uf.find(i)].push_back(i);

  std::map<Mask, C> result;
  for (auto& [mf, cf] : f) {
    C coeff = cf;
    std::vector<std::pair<Mask, C>> terms{{0, C(1)}};
    bool dead = false;
    for (auto& [root, nodes] : comp_nodes) {
      int dots = 0;
      for (int nd : nodes)
        if (nd < n0) dots += (mf >> nd) & 1;
      auto itb = comp_bloops.find(root);
      static const std::vector<int> kEmpty;
      const auto& bl = itb == comp_bloops.end() ? kEmpty : itb->second;
      int glues = comp_glue_map.count(root) ? comp_glue_map[root] : 0;
      if (!expand_component<C>(static_cast<int>(nodes.size()), glues, dots, bl, lee, terms)) {
        dead = true;
        break;
      }
    }
    if (dead) continue;
    for (auto& [m, c] : terms) {
      C v = coeff * c;
      auto it = result.find(m);
      if (it == result.end()) {
        if (!(v == C(0))) result[m] = v;
      } else {
        it->second = it->second + v;
        if (it->second == C(0)) result.erase(it);
      }
    }
  }
  return result;
}

// the scan ------------------------------------------------------------------

template <class C>
struct Complex {
  std::vector<Obj> objs;
  std::vector<char> alive;
  std::map<int, std::map<int, std::map<Mask, C>>> out;
  std::map<int, std::set<int>> in_of;

  void add_entry(int s, int d, const std::map<Mask, C>& terms) {
    if (terms.empty()) return;
    auto& slot = out[s][d];
    for (auto& [m, c] : terms) {
      auto it = slot.find(m);
      if (it == slot.end())
        slot[m] = c;
      else {
        it->second = it->second + c;
        if (it->second == C(0)) slot.erase(it);
      }
    }
    if (slot.empty()) {
      out[s].erase(d);
      if (out[s].empty()) out.erase(s);
      auto ii = in_of.find(d);
      if (ii != in_of.end()) {
        ii->second.erase(s);
        if (ii->second.empty()) in_of.erase(ii);
      }
    } else {
      in_of[d].insert(s);
    }
  }
  void drop_object(int idx) {
    alive[static_cast<size_t>(idx)] = 0;
    if (out.count(idx)) {
      for (auto& [dst, t] : out[idx]) {
        in_of[dst].erase(idx);
        if (in_of[dst].empty()) in_of.erase(dst);
      }
      out.erase(idx);
    }
    if (in_of.count(idx)) {
      for (int src : std::set<int>(in_of[idx].begin(), in_of[idx].end())) {
        out[src].erase(idx);
        if (out[src].empty()) out.erase(src);
      }
      in_of.erase(idx);
    }
  }
};

template <class C>
class Engine {
 public:
  Engine(const PlanarDiagram& d, bool lee, size_t limit = 10000000,
         std::vector<int> order = {})
      : d_(d), lee_(lee), limit_(limit), order_(std::move(order)) {}

  Complex<C> run() {
    Obj init;
    for (int c = 0; c < d_.crossing_count(); ++c)
      for (int s = 0; s < 4; ++s) tok_edge_[4 * c + s] = d_.xs[(size_t)c][(size_t)s];
    std::map<int, std::vector<int>> edge_toks;
    for (auto& [t, e] : tok_edge_) edge_toks[e].push_back(t);
    for (auto& [e, ts] : edge_toks) {
      init.match[ts[0]] = ts[1];
      init.match[ts[1]] = ts[0];
    }
    for (int i = 0; i < d_.n_circles; ++i) init.circles.push_back(circle_ctr_++);
    cx_.objs.push_back(init);
    cx_.alive.push_back(1);

    deloop_all();
    cancel_all();
    std::vector<int> order = order_.empty() ? scan_order(d_) : order_;
    for (int c : order) {
      step(c);
      deloop_all();
      cancel_all();
      size_t live = 0;
      for (char a : cx_.alive) live += static_cast<size_t>(a);
      if (live > limit_)
        throw ResourceLimit(std::to_string(live) + " live generators (limit " +
                            std::to_string(limit_) + ")");
    }
    return std::move(cx_);
  }

 private:
  void step(int c) {
    int t0 = 4 * c, t1 = 4 * c + 1, t2 = 4 * c + 2, t3 = 4 * c + 3;
    std::array<std::pair<int, int>, 2> resA{{{t0, t1}, {t2, t3}}};
    std::array<std::pair<int, int>, 2> resB{{{t0, t3}, {t1, t2}}};
    bool pos = d_.sign(c) == +1;
    // the 0-resolution is the A-smoothing for either sign; only the grading
    // shifts depend on the crossing sign
    auto& res0 = resA;
    auto& res1 = resB;
    int di0 = pos ? 0 : -1, dq0 = pos ? 1 : -2;
    int di1 = pos ? 1 : 0, dq1 = pos ? 2 : -1;

    std::vector<Obj> old_objs = cx_.objs;
    auto old_out = std::move(cx_.out);
    cx_.out.clear();
    cx_.in_of.clear();

    int n_old = static_cast<int>(old_objs.size());
    std::vector<int> id0(static_cast<size_t>(n_old), -1), id1(static_cast<size_t>(n_old), -1);
    std::vector<Obj> new_objs;
    std::vector<std::vector<std::pair<int, int>>> circ0(static_cast<size_t>(n_old)),
        circ1(static_cast<size_t>(n_old));
    for (int i = 0; i < n_old; ++i) {
      if (!cx_.alive[static_cast<size_t>(i)]) continue;
      Obj o0 = old_objs[static_cast<size_t>(i)];
      circ0[static_cast<size_t>(i)] = apply_res(o0, res0);
      o0.hi += di0;
      o0.q += dq0;
      id0[static_cast<size_t>(i)] = static_cast<int>(new_objs.size());
      new_objs.push_back(std::move(o0));
      Obj o1 = old_objs[static_cast<size_t>(i)];
      circ1[static_cast<size_t>(i)] = apply_res(o1, res1);
      o1.hi += di1;
      o1.q += dq1;
      id1[static_cast<size_t>(i)] = static_cast<int>(new_objs.size());
      new_objs.push_back(std::move(o1));
    }
    Complex<C> nx;
    nx.objs = std::move(new_objs);
    nx.alive.assign(nx.objs.size(), 1);

    // transported old entries
    for (auto& [s, row] : old_out)
      for (auto& [dst, terms] : row) {
        for (int r = 0; r < 2; ++r) {
          auto& ids = r == 0 ? id0 : id1;
          auto& circs = r == 0 ? circ0 : circ1;
          auto& res = r == 0 ? res0 : res1;
          auto e = step_entry(old_objs[static_cast<size_t>(s)], old_objs[static_cast<size_t>(dst)],
                              nx.objs[static_cast<size_t>(ids[static_cast<size_t>(s)])],
                              nx.objs[static_cast<size_t>(ids[static_cast<size_t>(dst)])], terms,
                              res, res, false, lee_, circs[static_cast<size_t>(s)],
                              circs[static_cast<size_t>(dst)]);
          nx.add_entry(ids[static_cast<size_t>(s)], ids[static_cast<size_t>(dst)], e);
        }
      }
    // saddles
    for (int i = 0; i < n_old; ++i) {
      if (id0[static_cast<size_t>(i)] < 0) continue;
      const Obj& o = old_objs[static_cast<size_t>(i)];
      std::map<Mask, C> ident{{Mask(0), C((o.hi % 2) ? -1 : 1)}};
      auto e = step_entry(o, o, nx.objs[static_cast<size_t>(id0[static_cast<size_t>(i)])],
                          nx.objs[static_cast<size_t>(id1[static_cast<size_t>(i)])], ident, res0,
                          res1, true, lee_, circ0[static_cast<size_t>(i)],
                          circ1[static_cast<size_t>(i)]);
      nx.add_entry(id0[static_cast<size_t>(i)], id1[static_cast<size_t>(i)], e);
    }
    cx_ = std::move(nx);
  }

  std::vector<std::pair<int, int>> apply_res(Obj& o, const std::array<std::pair<int, int>, 2>& arcs) {
    std::vector<std::pair<int, int>> created;
    for (int k = 0; k < 2; ++k) {
      auto [u, v] = arcs[static_cast<size_t>(k)];
      int pu = o.match.at(u), pv = o.match.at(v);
      o.match.erase(u);
      o.match.erase(v);
      if (pu == v) {
        int id = circle_ctr_++;
        o.circles.push_back(id);
        created.push_back({id, k});
        continue;
      }
      o.match.erase(pu);
      o.match.erase(pv);
      o.match[pu] = pv;
      o.match[pv] = pu;
    }
    return created;
  }

  void deloop_all() {
    bool again = true;
    while (again) {
      again = false;
      for (int i = 0; i < static_cast<int>(cx_.objs.size()); ++i) {
        if (!cx_.alive[static_cast<size_t>(i)] || cx_.objs[static_cast<size_t>(i)].circles.empty())
          continue;
        deloop(i);
        again = true;
        break;
      }
    }
  }

  void deloop(int idx) {
    Obj o = cx_.objs[static_cast<size_t>(idx)];
    int cid = o.circles.front();
    Obj base = o;
    base.circles.erase(base.circles.begin());
    Obj plus = base, minus = base;
    plus.q += 1;
    minus.q -= 1;
    int ip = static_cast<int>(cx_.objs.size());
    cx_.objs.push_back(plus);
    cx_.alive.push_back(1);
    int im = static_cast<int>(cx_.objs.size());
    cx_.objs.push_back(minus);
    cx_.alive.push_back(1);

    // outgoing: keep dotted terms for the +1 summand, undotted for -1
    if (cx_.out.count(idx)) {
      auto row = cx_.out[idx];
      for (auto& [dst, terms] : row) {
        const Obj& B = cx_.objs[static_cast<size_t>(dst)];
        Loops L = build_loops(o, B);
        int lf = L.a_circle.at(cid);
        std::map<Mask, C> tp, tm;
        for (auto& [m, c] : terms) {
          if ((m >> lf) & 1)
            tp[drop_bit(m, lf)] = c;
          else
            tm[drop_bit(m, lf)] = c;
        }
        cx_.add_entry(ip, dst, tp);
        cx_.add_entry(im, dst, tm);
      }
    }
    // incoming: undotted terms hit the +1 summand, dotted the -1 summand
    if (cx_.in_of.count(idx)) {
      auto srcs = cx_.in_of[idx];
      for (int src : srcs) {
        auto terms = cx_.out[src][idx];
        const Obj& A = cx_.objs[static_cast<size_t>(src)];
        Loops L = build_loops(A, o);
        int lf = L.b_circle.at(cid);
        std::map<Mask, C> tp, tm;
        for (auto& [m, c] : terms) {
          if ((m >> lf) & 1)
            tm[drop_bit(m, lf)] = c;
          else
            tp[drop_bit(m, lf)] = c;
        }
        cx_.add_entry(src, ip, tp);
        cx_.add_entry(src, im, tm);
      }
    }
    cx_.drop_object(idx);
  }

  void cancel_all() {
    bool again = true;
    while (again) {
      again = false;
      for (auto& [s, row] : cx_.out) {
        for (auto& [dst, terms] : row) {
          if (terms.size() != 1) continue;
          auto& [m, c] = *terms.begin();
          if (m != 0 || !is_unit<C>(c)) continue;
          const Obj& S = cx_.objs[static_cast<size_t>(s)];
          const Obj& D = cx_.objs[static_cast<size_t>(dst)];
          if (S.q != D.q || S.match != D.match) continue;
          cancel(s, dst, c);
          again = true;
          break;
        }
        if (again) break;
      }
    }
  }

  void cancel(int s, int dst, const C& u) {
    std::map<Mask, C> uinv{{Mask(0), unit_inv<C>(u)}};
    const Obj& S = cx_.objs[static_cast<size_t>(s)];
    const Obj& D = cx_.objs[static_cast<size_t>(dst)];
    std::vector<int> srcs;  // a -> dst, a != s
    if (cx_.in_of.count(dst))
      for (int a : cx_.in_of[dst])
        if (a != s) srcs.push_back(a);
    std::vector<int> dsts;  // s -> b, b != dst
    if (cx_.out.count(s))
      for (auto& [b, t] : cx_.out[s])
        if (b != dst) dsts.push_back(b);
    for (int a : srcs) {
      auto f = cx_.out[a][dst];
      auto h1 = compose(cx_.objs[static_cast<size_t>(a)], D, S, f, uinv, lee_);
      for (int b : dsts) {
        auto g = cx_.out[s][b];
        auto h2 = compose(cx_.objs[static_cast<size_t>(a)], S, cx_.objs[static_cast<size_t>(b)],
                          h1, g, lee_);
        for (auto& [m, c] : h2) c = -c;
        cx_.add_entry(a, b, h2);
      }
    }
    cx_.drop_object(s);
    cx_.drop_object(dst);
  }

  const PlanarDiagram& d_;
  bool lee_;
  size_t limit_ = 10000000;
  std::vector<int> order_;
  std::map<int, int> tok_edge_;
  int circle_ctr_ = 0;
  Complex<C> cx_;
};

}  // namespace rbg::scan
