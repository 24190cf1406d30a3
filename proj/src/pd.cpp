#include "rbg/pd.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace rbg {

namespace {

// --- small parity union-find for orientation solving ---------------------
struct ParityUF {
  std::vector<int> parent, rank_;
  std::vector<char> par;  // parity to parent
  explicit ParityUF(size_t n) : parent(n), rank_(n, 0), par(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::pair<int, char> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [r, p] = find(parent[x]);
    parent[x] = r;
    par[x] = static_cast<char>(par[x] ^ p);
    return {r, par[x]};
  }
  // enforce value(a) ^ value(b) == p; returns false on contradiction
  bool unite(int a, int b, char p) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return static_cast<char>(pa ^ pb) == p;
    char q = static_cast<char>(pa ^ pb ^ p);
    if (rank_[ra] < rank_[rb]) {
      std::swap(ra, rb);
    }
    parent[rb] = ra;
    par[rb] = q;
    if (rank_[ra] == rank_[rb]) rank_[ra]++;
    return true;
  }
};

struct Endpoint {
  int crossing;
  int slot;
};

std::map<int, std::vector<Endpoint>> endpoint_map(const PlanarDiagram& d) {
  std::map<int, std::vector<Endpoint>> m;
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int s = 0; s < 4; ++s) m[d.xs[static_cast<size_t>(c)][static_cast<size_t>(s)]].push_back({c, s});
  return m;
}

struct UF {
  std::vector<int> p;
  explicit UF(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

void PlanarDiagram::validate() {
  auto em = endpoint_map(*this);
  for (auto& [label, eps] : em) {
    if (label <= 0) throw MalformedPd("edge labels must be positive, got " + std::to_string(label));
    if (eps.size() != 2)
      throw InconsistentEdges("edge label " + std::to_string(label) + " occurs " +
                              std::to_string(eps.size()) + " times (expected 2)");
    // both ends entering as under-strand (or both leaving) is an edge with
    // two heads: structurally broken before orientation even starts
    if (eps[0].slot % 2 == 0 && eps[0].slot == eps[1].slot)
      throw InconsistentEdges("edge label " + std::to_string(label) +
                              " has two identical strand ends");
  }

  // Orientation: value of an endpoint = 1 if the strand enters the crossing
  // there.  Slot 0 enters, slot 2 leaves; slots 1/3 depend on the per-crossing
  // over-orientation bit x_c.  Each edge has exactly one entering endpoint.
  const int n = crossing_count();
  ParityUF uf(static_cast<size_t>(n) + 1);  // node n = constant FALSE
  const int FALSE_NODE = n;
  for (auto& [label, eps] : em) {
    // encode head(endpoint) as (node, offset): head = value(node) ^ offset
    auto enc = [&](const Endpoint& e) -> std::pair<int, char> {
      switch (e.slot) {
        case 0: return {FALSE_NODE, 1};  // head
        case 2: return {FALSE_NODE, 0};  // tail
        case 1: return {e.crossing, 0};  // head iff x_c
        default: return {e.crossing, 1};  // slot 3: head iff !x_c
      }
    };
    auto [n1, o1] = enc(eps[0]);
    auto [n2, o2] = enc(eps[1]);
    // head(p) ^ head(q) = 1  =>  value(n1) ^ value(n2) = 1 ^ o1 ^ o2
    if (!uf.unite(n1, n2, static_cast<char>(1 ^ o1 ^ o2)))
      throw OrientationClash("edge " + std::to_string(label) +
                             " cannot be oriented consistently");
  }
  over_in_b.assign(static_cast<size_t>(n), false);
  for (int c = 0; c < n; ++c) {
    auto [r, p] = uf.find(c);
    auto [rf, pf] = uf.find(FALSE_NODE);
    if (r == rf)
      over_in_b[static_cast<size_t>(c)] = (p ^ pf) != 0;
    else
      over_in_b[static_cast<size_t>(c)] = false;  // free choice, deterministic default
  }

  // Components: union edges along strands through crossings.
  std::vector<int> labels;
  for (auto& [l, _] : em) labels.push_back(l);
  std::map<int, int> idx;
  for (size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = static_cast<int>(i);
  UF comps(labels.size());
  for (int c = 0; c < n; ++c) {
    auto& x = xs[static_cast<size_t>(c)];
    comps.unite(idx[x[0]], idx[x[2]]);
    comps.unite(idx[x[1]], idx[x[3]]);
  }
  comp_of.clear();
  std::map<int, int> root_to_comp;
  for (int l : labels) {  // labels ascend, so component order is by least label
    int r = comps.find(idx[l]);
    if (!root_to_comp.count(r)) {
      int next_id = static_cast<int>(root_to_comp.size());
      root_to_comp[r] = next_id;
    }
    comp_of[l] = root_to_comp[r];
  }
  n_components = static_cast<int>(root_to_comp.size()) + n_circles;
}

namespace {

struct Tok {
  char kind;  // 'X', 'P', 'T'
  std::vector<int> args;
};

std::vector<Tok> tokenize(const std::string& text) {
  std::vector<Tok> out;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    char k = text[i];
    if (k != 'X' && k != 'P' && k != 'T')
      throw MalformedPd(std::string("unexpected token starting with '") + k + "'");
    ++i;
    skip_ws();
    if (i >= text.size() || text[i] != '[') throw MalformedPd("expected '[' after term head");
    ++i;
    Tok t{k, {}};
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw MalformedPd("expected integer in term near position " + std::to_string(i));
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      t.args.push_back(static_cast<int>(neg ? -v : v));
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

PlanarDiagram parse_pd(const std::string& text) {
  auto toks = tokenize(text);
  PlanarDiagram d;
  std::vector<std::array<int, 2>> ps;
  for (auto& t : toks) {
    if (t.kind == 'T') throw MalformedPd("twist markers T[...] are not valid in plain PD input");
    if (t.kind == 'X') {
      if (t.args.size() != 4) throw MalformedPd("X term needs 4 edge labels");
      d.xs.push_back({t.args[0], t.args[1], t.args[2], t.args[3]});
    } else {
      if (t.args.size() != 2) throw MalformedPd("P term needs 2 edge labels");
      ps.push_back({t.args[0], t.args[1]});
    }
  }
  if (d.xs.empty() && ps.empty()) throw MalformedPd("empty diagram text");

  // P vertices must form closed crossingless cycles, disjoint from X labels.
  if (!ps.empty()) {
    std::set<int> xlabels;
    for (auto& x : d.xs)
      for (int l : x) xlabels.insert(l);
    std::map<int, int> cnt;
    for (auto& p : ps)
      for (int l : p) {
        if (xlabels.count(l))
          throw MalformedPd("P label " + std::to_string(l) + " also occurs at a crossing");
        cnt[l]++;
      }
    for (auto& [l, c] : cnt)
      if (c != 2) throw InconsistentEdges("P label " + std::to_string(l) + " occurs " +
                                          std::to_string(c) + " times");
    // count cycles
    std::map<int, std::vector<int>> adj;  // label -> P-vertex indices
    for (size_t i = 0; i < ps.size(); ++i) {
      adj[ps[i][0]].push_back(static_cast<int>(i));
      adj[ps[i][1]].push_back(static_cast<int>(i));
    }
    std::vector<bool> seen(ps.size(), false);
    for (size_t i = 0; i < ps.size(); ++i) {
      if (seen[i]) continue;
      d.n_circles++;
      // walk the cycle
      int v = static_cast<int>(i);
      int enter = ps[i][0];
      while (!seen[static_cast<size_t>(v)]) {
        seen[static_cast<size_t>(v)] = true;
        int out = (ps[static_cast<size_t>(v)][0] == enter) ? ps[static_cast<size_t>(v)][1]
                                                           : ps[static_cast<size_t>(v)][0];
        auto& vs = adj[out];
        int next = (vs[0] == v && vs.size() > 1) ? vs[1] : vs[0];
        if (vs.size() == 1 && vs[0] == v) {
          // self-closing P[a,a]
          break;
        }
        enter = out;
        v = next;
      }
    }
  }

  // Sequential half-edge convention: every label occurs exactly once in the X
  // terms and the label set is {1..4n}; consecutive labels chain along the
  // strand.  Convert to the standard two-occurrence form.
  if (!d.xs.empty()) {
    std::map<int, int> cnt;
    for (auto& x : d.xs)
      for (int l : x) cnt[l]++;
    bool all_once = true;
    for (auto& [l, c] : cnt)
      if (c != 1) all_once = false;
    int m = static_cast<int>(cnt.size());
    if (all_once && m == 4 * d.crossing_count() && cnt.begin()->first == 1 &&
        cnt.rbegin()->first == m) {
      // half-edges pair (even k) -> (k+1 mod 4n) as edges
      std::map<int, int> relabel;
      for (int k = 2; k <= m; k += 2) {
        int succ = (k == m) ? 1 : k + 1;
        relabel[k] = k;
        relabel[succ] = k;
      }
      for (auto& x : d.xs)
        for (int& l : x) l = relabel[l];
    }
  }

  d.validate();
  return d;
}

int writhe(const PlanarDiagram& d) {
  int w = 0;
  for (int c = 0; c < d.crossing_count(); ++c) w += d.sign(c);
  return w;
}

int linking_number(const PlanarDiagram& d, int comp_i, int comp_j) {
  if (comp_i == comp_j) throw SameComponent("linking number needs two distinct components");
  int total = 0;
  for (int c = 0; c < d.crossing_count(); ++c) {
    auto& x = d.xs[static_cast<size_t>(c)];
    int cu = d.comp_of.at(x[0]);
    int co = d.comp_of.at(x[1]);
    if ((cu == comp_i && co == comp_j) || (cu == comp_j && co == comp_i)) total += d.sign(c);
  }
  return total / 2;
}

PlanarDiagram mirror(const PlanarDiagram& d) {
  PlanarDiagram m;
  m.n_circles = d.n_circles;
  for (int c = 0; c < d.crossing_count(); ++c) {
    auto& x = d.xs[static_cast<size_t>(c)];
    if (d.over_in_b[static_cast<size_t>(c)])
      m.xs.push_back({x[1], x[2], x[3], x[0]});
    else
      m.xs.push_back({x[3], x[0], x[1], x[2]});
  }
  m.validate();
  return m;
}

PlanarDiagram reverse(const PlanarDiagram& d) {
  PlanarDiagram r;
  r.n_circles = d.n_circles;
  for (int c = 0; c < d.crossing_count(); ++c) {
    auto& x = d.xs[static_cast<size_t>(c)];
    r.xs.push_back({x[2], x[3], x[0], x[1]});
  }
  r.validate();
  return r;
}

namespace {

// Locate head (strand enters) and tail endpoints of an edge.
Endpoint find_endpoint(const PlanarDiagram& d, int label, bool head) {
  for (int c = 0; c < d.crossing_count(); ++c) {
    auto& x = d.xs[static_cast<size_t>(c)];
    for (int s = 0; s < 4; ++s) {
      if (x[static_cast<size_t>(s)] != label) continue;
      bool is_head = (s == 0) || (s == d.over_in_slot(c));
      if (is_head == head) return {c, s};
    }
  }
  throw std::logic_error("endpoint not found");
}

}  // namespace

PlanarDiagram connected_sum(const PlanarDiagram& a, const PlanarDiagram& b) {
  if (!a.is_knot() && !(a.crossing_count() == 0 && a.n_circles == 1 && a.n_components == 1))
    throw NotAKnot("connected_sum: first argument is not a knot");
  if (!b.is_knot() && !(b.crossing_count() == 0 && b.n_circles == 1 && b.n_components == 1))
    throw NotAKnot("connected_sum: second argument is not a knot");
  if (a.crossing_count() == 0) return b;
  if (b.crossing_count() == 0) return a;

  int off = 0;
  for (auto& x : a.xs)
    for (int l : x) off = std::max(off, l);

  PlanarDiagram out = a;
  for (auto& x : b.xs) {
    std::array<int, 4> y;
    for (int s = 0; s < 4; ++s) y[static_cast<size_t>(s)] = x[static_cast<size_t>(s)] + off;
    out.xs.push_back(y);
  }
  int ea = a.xs[0][0];        // edge of a: splice here
  int eb = b.xs[0][0] + off;  // edge of b
  // a's strand now flows into b's head, b's strand into a's head.
  Endpoint ha = find_endpoint(a, ea, true);
  Endpoint hb_local = find_endpoint(b, eb - off, true);
  Endpoint hb{hb_local.crossing + a.crossing_count(), hb_local.slot};
  out.xs[static_cast<size_t>(ha.crossing)][static_cast<size_t>(ha.slot)] = eb;
  out.xs[static_cast<size_t>(hb.crossing)][static_cast<size_t>(hb.slot)] = ea;
  out.validate();
  if (!out.is_knot()) throw std::logic_error("connected_sum produced a non-knot");
  return out;
}

PlanarDiagram insert_full_twists(const PlanarDiagram& d, const TwistSlot& slot, int t) {
  if (slot.e1 == slot.e2) throw InvalidSlot("twist slot edges must be distinct");
  bool found1 = false, found2 = false;
  for (auto& x : d.xs)
    for (int l : x) {
      if (l == slot.e1) found1 = true;
      if (l == slot.e2) found2 = true;
    }
  if (!found1 || !found2) throw InvalidSlot("twist slot edges not present in diagram");
  int tw = t * slot.sign_convention;
  if (tw == 0) return d;

  PlanarDiagram out = d;
  int next = 0;
  for (auto& x : d.xs)
    for (int l : x) next = std::max(next, l);
  ++next;

  // Strand 1 runs "up" the left side; strand 2 up (parallel) or down
  // (antiparallel) the right side.  We cut both edges and stack 2|t|
  // crossings between the cut ends.
  Endpoint h1 = find_endpoint(d, slot.e1, true);
  Endpoint h2 = find_endpoint(d, slot.e2, true);

  int l_bot = slot.e1;  // label entering region at bottom-left
  if (!slot.antiparallel) {
    int curL = l_bot, curR = slot.e2;
    int nc = 2 * std::abs(tw);
    for (int k = 0; k < nc; ++k) {
      int nL = next++, nR = next++;
      if (tw > 0) {
        out.xs.push_back({curR, nR, nL, curL});  // positive braid crossing
      } else {
        out.xs.push_back({curL, curR, nR, nL});  // negative braid crossing
      }
      curL = nL;
      curR = nR;
    }
    out.xs[static_cast<size_t>(h1.crossing)][static_cast<size_t>(h1.slot)] = curL;
    out.xs[static_cast<size_t>(h2.crossing)][static_cast<size_t>(h2.slot)] = curR;
  } else {
    // Left strand runs bottom-to-top, right strand top-to-bottom.  One full
    // twist block is a clasp of two crossings:
    //   A: X[m_r, a0, b0, m_l]   B: X[m_l, b2, a2, m_r]   (positive twist)
    //   A: X[a0, b0, m_l, m_r]   B: X[b2, a2, m_r, m_l]   (negative twist)
    int blocks = std::abs(tw);
    std::vector<int> aChain(static_cast<size_t>(blocks) + 1),
        bChain(static_cast<size_t>(blocks) + 1);
    aChain[0] = l_bot;  // left chain, bottom to top
    for (int k = 1; k <= blocks; ++k) aChain[static_cast<size_t>(k)] = next++;
    bChain[static_cast<size_t>(blocks)] = slot.e2;  // right chain, top to bottom
    for (int k = blocks - 1; k >= 0; --k) bChain[static_cast<size_t>(k)] = next++;
    for (int k = 0; k < blocks; ++k) {
      int a0 = aChain[static_cast<size_t>(k)], a2 = aChain[static_cast<size_t>(k) + 1];
      int b2 = bChain[static_cast<size_t>(k) + 1], b0 = bChain[static_cast<size_t>(k)];
      int m_l = next++, m_r = next++;
      if (tw > 0) {
        out.xs.push_back({m_r, a0, b0, m_l});
        out.xs.push_back({m_l, b2, a2, m_r});
      } else {
        out.xs.push_back({a0, b0, m_l, m_r});
        out.xs.push_back({b2, a2, m_r, m_l});
      }
    }
    out.xs[static_cast<size_t>(h1.crossing)][static_cast<size_t>(h1.slot)] =
        aChain[static_cast<size_t>(blocks)];
    out.xs[static_cast<size_t>(h2.crossing)][static_cast<size_t>(h2.slot)] = bChain[0];
  }
  out.validate();
  return out;
}

namespace {

std::string serialize_with_start(const PlanarDiagram& d, const std::map<int, Endpoint>& heads,
                                 const std::vector<int>& comp_starts) {
  // comp_starts: one starting edge label per edge-component, in emission order
  std::map<int, int> relabel;
  int next = 1;
  for (int start : comp_starts) {
    int e = start;
    do {
      relabel[e] = next++;
      const Endpoint& h = heads.at(e);
      int out_slot = (h.slot == 0) ? 2 : d.over_out_slot(h.crossing);
      e = d.xs[static_cast<size_t>(h.crossing)][static_cast<size_t>(out_slot)];
    } while (e != start);
  }
  std::vector<std::array<int, 4>> tuples;
  for (auto& x : d.xs)
    tuples.push_back({relabel.at(x[0]), relabel.at(x[1]), relabel.at(x[2]), relabel.at(x[3])});
  std::sort(tuples.begin(), tuples.end());
  std::ostringstream os;
  for (auto& t : tuples) os << "X[" << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << "] ";
  for (int i = 0; i < d.n_circles; ++i) {
    os << "P[" << next << "," << next << "] ";
    ++next;
  }
  std::string s = os.str();
  if (!s.empty()) s.pop_back();
  return s;
}

}  // namespace

std::string serialize_pd(const PlanarDiagram& d) {
  if (d.xs.empty()) {
    std::ostringstream os;
    for (int i = 0; i < d.n_circles; ++i) {
      os << "P[" << (i + 1) << "," << (i + 1) << "]";
      if (i + 1 < d.n_circles) os << " ";
    }
    return os.str();
  }
  int ncomp = d.n_components - d.n_circles;
  std::vector<std::vector<int>> comp_edges(static_cast<size_t>(ncomp));
  for (auto& [l, c] : d.comp_of) comp_edges[static_cast<size_t>(c)].push_back(l);
  std::map<int, Endpoint> heads;
  for (int c = 0; c < d.crossing_count(); ++c) {
    heads[d.xs[static_cast<size_t>(c)][0]] = {c, 0};
    int s = d.over_in_slot(c);
    heads[d.xs[static_cast<size_t>(c)][static_cast<size_t>(s)]] = {c, s};
  }

  std::string best;
  // enumerate component orders and start edges (diagrams here are small)
  std::vector<int> order(static_cast<size_t>(ncomp));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end());
  do {
    std::vector<int> starts(static_cast<size_t>(ncomp), 0);
    std::vector<size_t> pick(static_cast<size_t>(ncomp), 0);
    while (true) {
      for (int i = 0; i < ncomp; ++i)
        starts[static_cast<size_t>(i)] =
            comp_edges[static_cast<size_t>(order[static_cast<size_t>(i)])][pick[static_cast<size_t>(i)]];
      std::string s = serialize_with_start(d, heads, starts);
      if (best.empty() || s < best) best = s;
      int i = ncomp - 1;
      while (i >= 0) {
        if (++pick[static_cast<size_t>(i)] <
            comp_edges[static_cast<size_t>(order[static_cast<size_t>(i)])].size())
          break;
        pick[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

std::string pd_digest(const PlanarDiagram& d) {
  static const std::string kVersion = "pd-v1;ccw-under;sign:over-at-slot3=+1;";
  std::string s = kVersion + serialize_pd(d);
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

PlanarDiagram from_braid(int strands, const std::vector<int>& word) {
  if (strands < 1) throw MalformedPd("braid needs at least one strand");
  PlanarDiagram d;
  std::vector<int> cur(static_cast<size_t>(strands));
  std::iota(cur.begin(), cur.end(), 1);
  std::vector<int> first = cur;
  int next = strands + 1;
  std::vector<bool> used(static_cast<size_t>(strands), false);
  for (int letter : word) {
    int k = std::abs(letter);
    if (k < 1 || k >= strands) throw MalformedPd("braid letter out of range");
    used[static_cast<size_t>(k - 1)] = used[static_cast<size_t>(k)] = true;
    int curL = cur[static_cast<size_t>(k - 1)], curR = cur[static_cast<size_t>(k)];
    int nL = next++, nR = next++;
    if (letter > 0)
      d.xs.push_back({curR, nR, nL, curL});
    else
      d.xs.push_back({curL, curR, nR, nL});
    cur[static_cast<size_t>(k - 1)] = nL;
    cur[static_cast<size_t>(k)] = nR;
  }
  // close the braid: final labels merge with initial ones
  for (int i = 0; i < strands; ++i) {
    int f = cur[static_cast<size_t>(i)], s = first[static_cast<size_t>(i)];
    if (!used[static_cast<size_t>(i)]) {
      d.n_circles++;
      continue;
    }
    if (f == s) continue;
    for (auto& x : d.xs)
      for (int& l : x)
        if (l == f) l = s;
  }
  d.validate();
  return d;
}

PlanarDiagram unknot() {
  PlanarDiagram d;
  d.n_circles = 1;
  d.n_components = 1;
  return d;
}

// ---------------------------------------------------------------------------
// DT codes
// ---------------------------------------------------------------------------

namespace {

// face count of the 4-valent map given per-vertex rotations
int count_faces(int n, const std::vector<std::array<int, 4>>& rot) {
  // darts: (edge, direction).  edge e connects position e to e+1 (mod 2n);
  // rot[v] lists the four incident "passage ends" in cyclic order, where a
  // passage end is encoded as dart id.
  // Here rot already stores dart ids: 4 per vertex, darts 0..8n-1.
  int E = 2 * n;
  std::vector<int> succ(static_cast<size_t>(4 * E), -1);  // next dart around vertex
  for (int v = 0; v < n; ++v)
    for (int s = 0; s < 4; ++s)
      succ[static_cast<size_t>(rot[static_cast<size_t>(v)][static_cast<size_t>(s)])] =
          rot[static_cast<size_t>(v)][static_cast<size_t>((s + 1) % 4)];
  // dart encoding: for edge e (0..2n-1): dart 2e = "arriving at head end",
  // dart 2e+1 = "arriving at tail end".  alpha swaps them.
  std::vector<bool> seen(static_cast<size_t>(2 * E), false);
  int faces = 0;
  for (int d0 = 0; d0 < 2 * E; ++d0) {
    if (seen[static_cast<size_t>(d0)]) continue;
    ++faces;
    int d = d0;
    while (!seen[static_cast<size_t>(d)]) {
      seen[static_cast<size_t>(d)] = true;
      int e = d / 2;
      int other = 2 * e + (1 - (d % 2));
      d = succ[static_cast<size_t>(other)];
    }
  }
  return faces;
}

}  // namespace

PlanarDiagram parse_dt(const std::string& text) {
  std::istringstream is(text);
  std::vector<long> code;
  long v;
  while (is >> v) code.push_back(v);
  if (is.fail() && !is.eof()) {
    is.clear();
    std::string tok;
    is >> tok;
    throw MalformedDt("non-integer token '" + tok + "' in DT code");
  }
  int n = static_cast<int>(code.size());
  if (n == 0) throw MalformedDt("empty DT code");
  if (n > 20) throw MalformedDt("DT codes longer than 20 crossings are not supported");
  std::set<long> mags;
  for (long c : code) {
    if (c == 0 || c % 2 != 0) throw MalformedDt("DT entries must be nonzero even integers");
    mags.insert(std::abs(c));
  }
  for (long k = 2; k <= 2 * n; k += 2)
    if (!mags.count(k)) throw MalformedDt("DT magnitudes must cover {2,4,...,2n}");

  // crossing i is visited at times (2i+1) and |code[i]| (0-based times below)
  std::vector<int> cross_at(static_cast<size_t>(2 * n));
  std::vector<std::array<int, 2>> times(static_cast<size_t>(n));  // odd time, even time
  for (int i = 0; i < n; ++i) {
    int odd = 2 * i;                                     // 0-based: time 2i ~ label 2i+1
    int even = static_cast<int>(std::abs(code[static_cast<size_t>(i)])) - 1;
    times[static_cast<size_t>(i)] = {odd, even};
    cross_at[static_cast<size_t>(odd)] = i;
    cross_at[static_cast<size_t>(even)] = i;
  }

  // Darts per passage: arriving edge at time t is edge (t-1 mod 2n), leaving
  // edge is edge t.  dart for arriving at the head end of edge e: 2e; leaving
  // from tail end of edge e: 2e+1.
  auto arrive_dart = [&](int t) { return 2 * ((t + 2 * n - 1) % (2 * n)); };
  auto leave_dart = [&](int t) { return 2 * t + 1; };

  // rotation per crossing: passages must interleave: two chiralities
  std::vector<std::array<int, 4>> rot(static_cast<size_t>(n));
  const int target_faces = n + 2;
  std::vector<int> choice(static_cast<size_t>(n), 0);
  bool found = false;
  for (long mask = 0; mask < (1L << n) && !found; ++mask) {
    for (int i = 0; i < n; ++i) {
      int to = times[static_cast<size_t>(i)][0], te = times[static_cast<size_t>(i)][1];
      if ((mask >> i) & 1)
        rot[static_cast<size_t>(i)] = {arrive_dart(to), arrive_dart(te), leave_dart(to),
                                       leave_dart(te)};
      else
        rot[static_cast<size_t>(i)] = {arrive_dart(to), leave_dart(te), leave_dart(to),
                                       arrive_dart(te)};
    }
    if (count_faces(n, rot) == target_faces) {
      found = true;
      for (int i = 0; i < n; ++i) choice[static_cast<size_t>(i)] = static_cast<int>((mask >> i) & 1);
    }
  }
  if (!found) throw NonRealizable("DT code admits no planar realization");
  for (int i = 0; i < n; ++i) {
    int to = times[static_cast<size_t>(i)][0], te = times[static_cast<size_t>(i)][1];
    if (choice[static_cast<size_t>(i)])
      rot[static_cast<size_t>(i)] = {arrive_dart(to), arrive_dart(te), leave_dart(to),
                                     leave_dart(te)};
    else
      rot[static_cast<size_t>(i)] = {arrive_dart(to), leave_dart(te), leave_dart(to),
                                     arrive_dart(te)};
  }

  // Build PD: positive code entry = the odd-time passage goes under.
  PlanarDiagram d;
  for (int i = 0; i < n; ++i) {
    bool odd_under = code[static_cast<size_t>(i)] > 0;
    int tu = odd_under ? times[static_cast<size_t>(i)][0] : times[static_cast<size_t>(i)][1];
    int under_in_dart = arrive_dart(tu);
    // read the rotation CCW starting at the under-in dart
    int pos = -1;
    for (int s = 0; s < 4; ++s)
      if (rot[static_cast<size_t>(i)][static_cast<size_t>(s)] == under_in_dart) pos = s;
    std::array<int, 4> tuple;
    for (int s = 0; s < 4; ++s) {
      int dart = rot[static_cast<size_t>(i)][static_cast<size_t>((pos + s) % 4)];
      tuple[static_cast<size_t>(s)] = dart / 2 + 1;  // edge label = edge index + 1
    }
    d.xs.push_back(tuple);
  }
  try {
    d.validate();
  } catch (const std::exception& e) {
    throw NonRealizable(std::string("DT reconstruction failed validation: ") + e.what());
  }
  if (!d.is_knot()) throw NonRealizable("DT code did not reconstruct to a knot");
  return d;
}

}  // namespace rbg
