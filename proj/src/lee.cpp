#include "rbg/lee.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "rbg/errors.hpp"
#include "scan.hpp"

namespace rbg {

using Rat = boost::multiprecision::cpp_rational;

namespace {

using Mat = std::vector<std::vector<Rat>>;

int rank_of(Mat m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  int rank = 0;
  size_t pr = 0;
  for (size_t c = 0; c < cols && pr < rows; ++c) {
    size_t piv = pr;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[pr], m[piv]);
    Rat inv = 1 / m[pr][c];
    for (size_t j = c; j < cols; ++j) m[pr][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == pr || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[pr][j];
    }
    ++pr;
    ++rank;
  }
  return rank;
}

// basis of the kernel of m (columns = domain)
std::vector<std::vector<Rat>> kernel_basis(Mat m, size_t cols) {
  size_t rows = m.size();
  std::vector<size_t> pivot_col;
  size_t pr = 0;
  for (size_t c = 0; c < cols && pr < rows; ++c) {
    size_t piv = pr;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[pr], m[piv]);
    Rat inv = 1 / m[pr][c];
    for (size_t j = c; j < cols; ++j) m[pr][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == pr || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[pr][j];
    }
    pivot_col.push_back(c);
    ++pr;
  }
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[c] = 1;
    for (size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -m[k][c];
    basis.push_back(v);
  }
  return basis;
}

// rank of the column span of a list of vectors
int span_rank(const std::vector<std::vector<Rat>>& vs, size_t dim) {
  if (vs.empty()) return 0;
  Mat m(dim, std::vector<Rat>(vs.size(), Rat(0)));
  for (size_t j = 0; j < vs.size(); ++j)
    for (size_t i = 0; i < dim; ++i) m[i][j] = vs[j][i];
  return rank_of(m);
}

}  // namespace

LeeData lee_homology(const PlanarDiagram& d, const ScanOptions& opt) {
  scan::Engine<Rat> eng(d, true, opt.limit, opt.order);
  auto cx = eng.run();

  // collect alive objects per homological grading
  std::map<int, std::vector<int>> by_i;
  std::map<int, std::pair<int, int>> pos;
  for (int i = 0; i < static_cast<int>(cx.objs.size()); ++i) {
    if (!cx.alive[static_cast<size_t>(i)]) continue;
    auto& v = by_i[cx.objs[static_cast<size_t>(i)].hi];
    pos[i] = {cx.objs[static_cast<size_t>(i)].hi, static_cast<int>(v.size())};
    v.push_back(i);
  }
  std::map<int, Mat> mats;  // d^i
  for (auto& [i, v] : by_i) {
    auto nx = by_i.find(i + 1);
    mats[i] = Mat(nx == by_i.end() ? 0 : nx->second.size(),
                  std::vector<Rat>(v.size(), Rat(0)));
  }
  for (auto& [s, row] : cx.out)
    for (auto& [dst, terms] : row) {
      if (terms.empty()) continue;
      auto& S = cx.objs[static_cast<size_t>(s)];
      auto& D = cx.objs[static_cast<size_t>(dst)];
      if (D.hi != S.hi + 1) throw std::runtime_error("lee: differential degree mismatch");
      mats[S.hi][static_cast<size_t>(pos[dst].second)][static_cast<size_t>(pos[s].second)] =
          terms.at(scan::Mask(0));
    }

  LeeData out;
  for (auto& [i, v] : by_i) {
    int r_out = rank_of(mats[i]);
    int r_in = 0;
    auto prev = mats.find(i - 1);
    if (prev != mats.end()) r_in = rank_of(prev->second);
    int dim = static_cast<int>(v.size()) - r_out - r_in;
    if (dim) out.dim_by_i[i] = dim;
    out.total_dim += dim;
  }

  if (!d.is_knot()) return out;

  // s-invariant: filtration levels of H^0 on the q-graded generator basis
  if (out.total_dim != 2 || out.dim_by_i.count(0) == 0 || out.dim_by_i[0] != 2)
    throw std::runtime_error("lee: H^0 of a knot must have dimension 2");
  auto& gen0 = by_i[0];
  size_t m0 = gen0.size();
  std::vector<std::vector<Rat>> bdry;
  auto prev = mats.find(-1);
  if (prev != mats.end()) {
    size_t mm = by_i[-1].size();
    for (size_t c = 0; c < mm; ++c) {
      std::vector<Rat> col(m0);
      for (size_t r = 0; r < m0; ++r) col[r] = prev->second[r][c];
      bdry.push_back(col);
    }
  }
  int rb = span_rank(bdry, m0);
  std::set<int> levels;
  for (int idx : gen0) levels.insert(cx.objs[static_cast<size_t>(idx)].q);
  auto filt_dim = [&](int j) {
    // dim of (cycles supported in q >= j, plus boundaries) mod boundaries:
    // kernel of d^0 restricted to the coordinates at level >= j
    std::vector<size_t> keep;
    for (size_t k = 0; k < m0; ++k)
      if (cx.objs[static_cast<size_t>(gen0[k])].q >= j) keep.push_back(k);
    Mat sub(mats[0].size(), std::vector<Rat>(keep.size(), Rat(0)));
    for (size_t r = 0; r < mats[0].size(); ++r)
      for (size_t c = 0; c < keep.size(); ++c) sub[r][c] = mats[0][r][keep[c]];
    auto zk = kernel_basis(sub, keep.size());
    std::vector<std::vector<Rat>> vecs = bdry;
    for (auto& z : zk) {
      std::vector<Rat> v(m0, Rat(0));
      for (size_t c = 0; c < keep.size(); ++c) v[keep[c]] = z[c];
      vecs.push_back(v);
    }
    return span_rank(vecs, m0) - rb;
  };
  int fmax = 0, fmin = 0;
  bool have_max = false, have_min = false;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    int f = filt_dim(*it);
    if (!have_max && f >= 1) {
      fmax = *it;
      have_max = true;
    }
    if (!have_min && f >= 2) {
      fmin = *it;
      have_min = true;
    }
  }
  if (!have_max || !have_min) throw std::runtime_error("lee: filtration extraction failed");
  if (fmax - fmin != 2) throw std::runtime_error("lee: filtration gap is not 2");
  out.fmax = fmax;
  out.fmin = fmin;
  out.s = fmax - 1;
  return out;
}

int rasmussen_s(const PlanarDiagram& d, const ScanOptions& opt) {
  if (!d.is_knot()) throw NotAKnot("rasmussen_s: diagram is not a knot");
  return lee_homology(d, opt).s;
}

}  // namespace rbg
