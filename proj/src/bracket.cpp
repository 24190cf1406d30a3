#include "rbg/bracket.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <vector>

namespace rbg {

namespace {

const LPoly kDelta = LPoly(-1, 2) + LPoly(-1, -2);  // -A^2 - A^-2

// exact division, used to drop one circle factor for normalization
LPoly divide_exact(LPoly p, const LPoly& d) {
  LPoly q;
  while (!p.is_zero()) {
    int e = p.max_exp() - d.max_exp();
    long long c = p.coeff(p.max_exp()) / d.coeff(d.max_exp());
    LPoly m(c, e);
    q += m;
    p = p - m * d;
  }
  return q;
}

}  // namespace

std::vector<int> scan_order(const PlanarDiagram& d) {
  int n = d.crossing_count();
  std::vector<int> order;
  std::vector<bool> done(static_cast<size_t>(n), false);
  std::set<int> active;  // edges with exactly one processed endpoint
  std::map<int, int> remaining;
  for (auto& x : d.xs)
    for (int l : x) remaining[l]++;
  for (int step = 0; step < n; ++step) {
    int best = -1, best_score = -1;
    for (int c = 0; c < n; ++c) {
      if (done[static_cast<size_t>(c)]) continue;
      int score = 0;
      for (int l : d.xs[static_cast<size_t>(c)]) score += active.count(l) ? 1 : 0;
      if (score > best_score) {
        best_score = score;
        best = c;
      }
    }
    done[static_cast<size_t>(best)] = true;
    order.push_back(best);
    for (int l : d.xs[static_cast<size_t>(best)]) {
      if (--remaining[l] == 0)
        active.erase(l);
      else
        active.insert(l);
    }
  }
  return order;
}

LPoly kauffman_bracket(const PlanarDiagram& d) {
  int n = d.crossing_count();
  int circles = d.n_circles;
  if (n == 0) {
    if (circles == 0) return LPoly();
    LPoly r(1);
    for (int i = 1; i < circles; ++i) r *= kDelta;
    return r;
  }

  // tokens: incidence 4*c + s; each edge owns exactly two tokens
  std::map<int, std::vector<int>> edge_toks;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s)
      edge_toks[d.xs[static_cast<size_t>(c)][static_cast<size_t>(s)]].push_back(4 * c + s);

  using Key = std::vector<std::pair<int, int>>;
  struct State {
    std::map<int, int> partner;
  };
  std::map<Key, std::pair<State, LPoly>> states;
  {
    State init;
    for (auto& [e, ts] : edge_toks) {
      init.partner[ts[0]] = ts[1];
      init.partner[ts[1]] = ts[0];
    }
    Key k;
    for (auto& [t, p] : init.partner)
      if (t < p) k.push_back({t, p});
    states[k] = {init, LPoly(1)};
  }

  auto join = [](State& st, LPoly& coef, int u, int v) {
    int pu = st.partner.at(u), pv = st.partner.at(v);
    st.partner.erase(u);
    st.partner.erase(v);
    if (pu == v) {  // chain closes into a circle
      coef *= kDelta;
      return;
    }
    st.partner.erase(pu);
    st.partner.erase(pv);
    st.partner[pu] = pv;
    st.partner[pv] = pu;
  };

  for (int c : scan_order(d)) {
    int t0 = 4 * c, t1 = 4 * c + 1, t2 = 4 * c + 2, t3 = 4 * c + 3;
    std::map<Key, std::pair<State, LPoly>> next;
    for (auto& [key, sc] : states) {
      (void)key;
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        State st = sc.first;
        LPoly coef = sc.second * LPoly(1, smoothing == 0 ? 1 : -1);
        if (smoothing == 0) {  // A-smoothing pairs (0,1) and (2,3)
          join(st, coef, t0, t1);
          join(st, coef, t2, t3);
        } else {  // B-smoothing pairs (0,3) and (1,2)
          join(st, coef, t0, t3);
          join(st, coef, t1, t2);
        }
        Key k;
        for (auto& [t, p] : st.partner)
          if (t < p) k.push_back({t, p});
        auto it = next.find(k);
        if (it == next.end())
          next[k] = {std::move(st), coef};
        else
          it->second.second += coef;
      }
    }
    states = std::move(next);
  }

  LPoly total;
  for (auto& [k, sc] : states) total += sc.second;
  for (int i = 0; i < circles; ++i) total *= kDelta;
  return divide_exact(total, kDelta);
}

LPoly jones_t(const PlanarDiagram& d) {
  int w = writhe(d);
  LPoly f = kauffman_bracket(d) * LPoly((w % 2) ? -1 : 1, -3 * w);
  LPoly v;
  for (auto& [e, c] : f.terms) {
    if (e % 4 != 0) throw std::runtime_error("jones_t: fractional t-powers (not a knot?)");
    v.terms[-e / 4] = c;
  }
  return v;
}

LPoly jones_hat_q(const PlanarDiagram& d) {
  int w = writhe(d);
  LPoly f = kauffman_bracket(d) * LPoly((w % 2) ? -1 : 1, -3 * w);
  LPoly v;
  for (auto& [e, c] : f.terms) {
    if (e % 2 != 0) throw std::runtime_error("jones_hat_q: odd A-powers");
    v.terms[-e / 2] = c;
  }
  return v * (LPoly(1, 1) + LPoly(1, -1));
}

long long determinant_via_jones(const PlanarDiagram& d) {
  long long v = jones_t(d).eval_unit(-1);
  return std::llabs(v);
}

}  // namespace rbg
