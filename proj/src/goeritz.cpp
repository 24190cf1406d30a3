#include "rbg/goeritz.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <queue>
#include <stdexcept>
#include <vector>

namespace rbg {

namespace {

using boost::multiprecision::cpp_int;
using cpp_rat = boost::multiprecision::cpp_rational;

// Tokens are incidences 4c+s.  alpha swaps the two incidences of an edge;
// sigma rotates CCW around a crossing.  Faces are orbits of sigma∘alpha; the
// face through token t is the face containing quadrant Q_s (between slots s
// and s+1) at crossing c.
struct Faces {
  std::vector<int> face_of;  // token -> face index
  int count = 0;
};

Faces compute_faces(const PlanarDiagram& d) {
  int n = d.crossing_count();
  std::map<int, std::vector<int>> edge_toks;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s)
      edge_toks[d.xs[static_cast<size_t>(c)][static_cast<size_t>(s)]].push_back(4 * c + s);
  std::vector<int> alpha(static_cast<size_t>(4 * n));
  for (auto& [e, ts] : edge_toks) {
    alpha[static_cast<size_t>(ts[0])] = ts[1];
    alpha[static_cast<size_t>(ts[1])] = ts[0];
  }
  Faces f;
  f.face_of.assign(static_cast<size_t>(4 * n), -1);
  for (int t0 = 0; t0 < 4 * n; ++t0) {
    if (f.face_of[static_cast<size_t>(t0)] != -1) continue;
    int t = t0;
    while (f.face_of[static_cast<size_t>(t)] == -1) {
      f.face_of[static_cast<size_t>(t)] = f.count;
      int u = alpha[static_cast<size_t>(t)];
      t = 4 * (u / 4) + (u + 1) % 4;
    }
    f.count++;
  }
  return f;
}

}  // namespace

int face_count(const PlanarDiagram& d) {
  if (d.crossing_count() == 0) return 2;
  return compute_faces(d).count;
}

GoeritzData goeritz(const PlanarDiagram& d) {
  int n = d.crossing_count();
  if (n == 0) return {};
  if (d.n_circles > 0) throw std::runtime_error("goeritz: split diagram");
  Faces f = compute_faces(d);
  if (f.count != n + 2) throw std::runtime_error("goeritz: diagram is not planar-connected");

  // 2-color the faces: adjacent across an edge means opposite colors.  The
  // two faces at token t and alpha-rotated neighbors share edges; quadrants
  // Q_s and Q_{s+1} at one crossing share the slot-(s+1) edge.
  std::vector<int> color(static_cast<size_t>(f.count), -1);
  std::queue<int> bfs;
  color[0] = 0;
  bfs.push(0);
  std::vector<std::vector<int>> adj(static_cast<size_t>(f.count));
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      int a = f.face_of[static_cast<size_t>(4 * c + s)];
      int b = f.face_of[static_cast<size_t>(4 * c + (s + 1) % 4)];
      adj[static_cast<size_t>(a)].push_back(b);
      adj[static_cast<size_t>(b)].push_back(a);
    }
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    for (int v : adj[static_cast<size_t>(u)]) {
      if (color[static_cast<size_t>(v)] == -1) {
        color[static_cast<size_t>(v)] = 1 - color[static_cast<size_t>(u)];
        bfs.push(v);
      } else if (color[static_cast<size_t>(v)] == color[static_cast<size_t>(u)]) {
        throw std::runtime_error("goeritz: faces are not checkerboard colorable");
      }
    }
  }

  const int white = 0;  // either class works; mu is computed for the same one
  std::vector<int> white_index(static_cast<size_t>(f.count), -1);
  int m = 0;
  for (int i = 0; i < f.count; ++i)
    if (color[static_cast<size_t>(i)] == white) white_index[static_cast<size_t>(i)] = m++;

  // full (m x m) Goeritz form before deleting the 0th region
  std::vector<std::vector<long long>> full(static_cast<size_t>(m),
                                           std::vector<long long>(static_cast<size_t>(m), 0));
  int mu = 0;
  for (int c = 0; c < n; ++c) {
    // white quadrant pair is {Q0,Q2} or {Q1,Q3}
    int f0 = f.face_of[static_cast<size_t>(4 * c)];
    bool white02 = color[static_cast<size_t>(f0)] == white;
    int eta = white02 ? -1 : +1;
    int qa = white02 ? 0 : 1;
    int u = white_index[static_cast<size_t>(f.face_of[static_cast<size_t>(4 * c + qa)])];
    int v = white_index[static_cast<size_t>(f.face_of[static_cast<size_t>(4 * c + qa + 2)])];
    if (u != v) {
      full[static_cast<size_t>(u)][static_cast<size_t>(v)] -= eta;
      full[static_cast<size_t>(v)][static_cast<size_t>(u)] -= eta;
      full[static_cast<size_t>(u)][static_cast<size_t>(u)] += eta;
      full[static_cast<size_t>(v)][static_cast<size_t>(v)] += eta;
    }
    // correction: crossings whose strands run parallel in the frame where
    // the white regions sit east-west, counted with the oriented sign
    bool type2 = white02 == d.over_in_b[static_cast<size_t>(c)];
    if (type2) mu += d.sign(c);
  }

  GoeritzData out;
  out.mu = mu;
  out.g.assign(static_cast<size_t>(m) - 1, std::vector<long long>(static_cast<size_t>(m) - 1, 0));
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < m; ++j)
      out.g[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
          full[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return out;
}

long long determinant_goeritz(const PlanarDiagram& d) {
  if (d.crossing_count() == 0) return 1;
  auto gd = goeritz(d);
  size_t m = gd.g.size();
  if (m == 0) return 1;
  // fraction-free Bareiss
  std::vector<std::vector<cpp_int>> a(m, std::vector<cpp_int>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) a[i][j] = gd.g[i][j];
  cpp_int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < m; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < m && a[p][k] == 0) ++p;
      if (p == m) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < m; ++i)
      for (size_t j = k + 1; j < m; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  cpp_int det = sign * a[m - 1][m - 1];
  if (det < 0) det = -det;
  return static_cast<long long>(det);
}

int signature(const PlanarDiagram& d) {
  if (d.crossing_count() == 0) return 0;
  auto gd = goeritz(d);
  size_t m = gd.g.size();
  // symmetric congruence diagonalization over Q
  std::vector<std::vector<cpp_rat>> a(m, std::vector<cpp_rat>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) a[i][j] = gd.g[i][j];
  int sig = 0;
  for (size_t k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      size_t p = m;
      for (size_t q = k + 1; q < m; ++q)
        if (a[q][q] != 0) {
          p = q;
          break;
        }
      if (p < m) {  // congruent swap of rows+columns k and p
        std::swap(a[k], a[p]);
        for (size_t i = 0; i < m; ++i) std::swap(a[i][k], a[i][p]);
      } else {
        size_t q = k + 1;
        while (q < m && a[q][k] == 0) ++q;
        if (q == m) continue;  // decoupled zero row/column
        // all remaining diagonal entries vanish, so adding row+column q
        // makes a[k][k] = 2 a[q][k] != 0
        for (size_t j = 0; j < m; ++j) a[k][j] += a[q][j];
        for (size_t i = 0; i < m; ++i) a[i][k] += a[i][q];
      }
    }
    if (a[k][k] == 0) continue;
    sig += a[k][k] > 0 ? 1 : -1;
    for (size_t i = k + 1; i < m; ++i) {
      if (a[i][k] == 0) continue;
      cpp_rat t = a[i][k] / a[k][k];
      for (size_t j = 0; j < m; ++j) a[i][j] -= t * a[k][j];
      for (size_t j = 0; j < m; ++j) a[j][i] -= t * a[j][k];
    }
  }
  return sig - gd.mu;
}

}  // namespace rbg
