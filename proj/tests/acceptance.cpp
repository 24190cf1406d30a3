// Acceptance run: one pass/fail line per criterion.  Exit code = number of
// failed criteria.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "full_cube.hpp"
#include "rbg/bracket.hpp"
#include "rbg/families.hpp"
#include "rbg/goeritz.hpp"
#include "rbg/invariants.hpp"
#include "rbg/khovanov.hpp"
#include "rbg/lee.hpp"
#include "rbg/obstruct.hpp"
#include "rbg/table.hpp"

using namespace rbg;
using clk = std::chrono::steady_clock;

static int failures = 0;

static void report(int num, bool pass, const std::string& what) {
  printf("criterion %2d %s  %s\n", num, pass ? "PASS" : "FAIL", what.c_str());
  fflush(stdout);
  failures += !pass;
}

static double seconds_since(clk::time_point t0) {
  return std::chrono::duration<double>(clk::now() - t0).count();
}

static FamilyParams params(FamilyId f, std::vector<int> tw, long long r) {
  FamilyParams p;
  p.family = f;
  p.twists = std::move(tw);
  p.r = Framing{r, 1};
  return p;
}

static std::pair<DerivedKnot, DerivedKnot> knots(FamilyId f,
                                                 std::vector<int> tw,
                                                 long long r) {
  return derive_knots(build_instance(params(f, std::move(tw), r)));
}

// ---- 1: s golden values, each under a second -------------------------------
static void c1() {
  bool ok = true;
  std::ostringstream note;
  struct Case {
    const char* name;
    PlanarDiagram d;
    int want;
  } cases[] = {{"unknot", unknot(), 0},
               {"figure-eight", parse_dt("4 6 8 2"), 0},
               {"rh trefoil", from_braid(2, {1, 1, 1}), 2},
               {"lh trefoil", from_braid(2, {-1, -1, -1}), -2}};
  for (auto& c : cases) {
    auto t0 = clk::now();
    int s = rasmussen_s(c.d);
    double dt = seconds_since(t0);
    if (s != c.want || dt >= 1.0) {
      ok = false;
      note << " " << c.name << " s=" << s << " (" << dt << "s)";
    }
  }
  report(1, ok, "s golden values (unknot, 4_1, both trefoils) < 1 s each" +
                    note.str());
}

// ---- 2: theorem 1.5 inputs --------------------------------------------------
static void c2() {
  auto t0 = clk::now();
  auto [kb, kg] = knots(FamilyId::ABC, {-2, 1, -2}, 1);
  int sb = rasmussen_s(kb.diagram), sg = rasmussen_s(kg.diagram);
  double dt = seconds_since(t0);
  bool mirrored = sb == -2 && sg == 0;
  bool ok = ((sb == 2 && sg == 0) || mirrored) &&
            kg.diagram.crossing_count() == 28 && dt <= 600.0;
  std::ostringstream os;
  os << "K_B(-2,1,-2;1) s=" << sb << ", K_G s=" << sg << " (28 crossings, "
     << dt << "s)" << (mirrored ? " [mirrored]" : "");
  report(2, ok, os.str());
}

// ---- 3: theorem 1.6, not 2-slice in any #m CP2-bar --------------------------
static void c3() {
  // the s=2 partner obstructs 2-sliceness of the named knot
  auto [kb1, kg1] = knots(FamilyId::ABC, {-2, 1, -3}, 0);  // obstructs K_G
  auto [kb2, kg2] = knots(FamilyId::ABC, {-2, 1, 2}, 0);   // obstructs K_B
  int s1 = rasmussen_s(kb1.diagram), s1g = rasmussen_s(kg1.diagram);
  int s2 = rasmussen_s(kg2.diagram), s2b = rasmussen_s(kb2.diagram);
  auto v1 = not_kslice(std::abs(s1), 2);
  auto v2 = not_kslice(std::abs(s2), 2);
  bool ok = std::abs(s1) == 2 && s1g == 0 && std::abs(s2) == 2 && s2b == 0 &&
            v1.obstructed && v2.obstructed;
  std::ostringstream os;
  os << "not_kslice(2,2) obstructs K_G(-2,1,-3;0) [s(K_B)=" << s1
     << "] and K_B(-2,1,2;0) [s(K_G)=" << s2 << "]";
  report(3, ok, os.str());
}

// ---- 4: coefficient formula on 1000 random (r,l) ----------------------------
static void c4() {
  std::mt19937 rng(20260826);
  std::uniform_int_distribution<long long> pick(-20, 20);
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    long long r = pick(rng), l = pick(rng);
    // special pattern: diag (r,0,0), lk(R,B)=lk(R,G)=1, lk(B,G)=l
    long long det = r * (0 - l * l) - 1 * (0 - l) + 1 * (l - 0);
    if (-det != special_n(r, l)) ok = false;
  }
  report(4, ok, "-det of the special linking pattern = l(rl-2), 1000 samples");
}

static void c5() {
  using P = std::pair<long long, long long>;
  bool ok = enumerate_rl(3, 3) == std::set<P>{{5, 1}, {1, -1}, {1, 3}};
  report(5, ok, "enumerate_rl(3,3) = {(5,1),(1,-1),(1,3)}");
}

static void c6() {
  bool ok = true;
  for (long long k : {3, 6, 8, 11, 13, 15}) ok = ok && useful_k(k);
  for (long long k : {1, 2, 4, 5, 7}) ok = ok && !useful_k(k);
  report(6, ok, "useful_k true on {3,6,8,11,13,15}, false on {1,2,4,5,7}");
}

// ---- 7: table identifications ----------------------------------------------
static const KnotTableEntry* entry(const std::vector<KnotTableEntry>& t,
                                   const std::string& name) {
  for (auto& e : t)
    if (e.name == name) return &e;
  return nullptr;
}

static bool matches(const PlanarDiagram& d, const KnotTableEntry& e,
                    bool* mirrored) {
  auto jones = jones_t(d);
  long long det = std::llabs(jones.eval_unit(-1));
  int sig = signature(d), s = rasmussen_s(d);
  if (det != e.det || std::abs(sig) != std::abs(e.signature)) return false;
  if (jones == e.jones && sig == e.signature && s == e.s) {
    *mirrored = false;
    return true;
  }
  if (jones == e.jones.power_substituted(-1) && sig == -e.signature &&
      s == -e.s) {
    *mirrored = true;
    return true;
  }
  return false;
}

static void c7() {
  auto table = load_table();
  auto [kb, kg] = knots(FamilyId::EGM, {0}, -1);
  bool m1 = false, m2 = false, m3 = false;
  const auto* e62 = entry(table, "6_2");
  const auto* e13 = entry(table, "K13n3596");
  bool ok = e62 && e13;
  // K_B is identified with the *mirror* of the tabulated 6_2
  ok = ok && matches(kb.diagram, *e62, &m1) && m1;
  ok = ok && matches(kg.diagram, *e13, &m2);

  auto sum = connected_sum(from_braid(2, {-1, -1, -1}),
                           from_braid(2, {1, 1, 1, 1, 1}));
  auto [fb, fg] = knots(FamilyId::FOURBOX, {-2, 2, -1, -1}, 1);
  KnotTableEntry ref;
  ref.jones = jones_t(sum);
  ref.det = std::llabs(ref.jones.eval_unit(-1));
  ref.signature = signature(sum);
  ref.s = rasmussen_s(sum);
  ok = ok && matches(fg.diagram, ref, &m3) && !m3;
  std::ostringstream os;
  os << "EGM(0;-1) = (6_2 mirror, K13n3596" << (m2 ? " mirror" : "")
     << "); FOURBOX(-2,2,-1,-1;1) K_G = T(-2,3)#T(2,5)";
  report(7, ok, os.str());
}

// ---- 8: property suites on all bundled <=8-crossing knots -------------------
static void c8() {
  auto table = load_table();
  bool ok = true;
  int count = 0;
  for (auto& e : table) {
    PlanarDiagram d = entry_diagram(e);
    if (d.crossing_count() > 8) continue;
    ++count;
    auto kh = khovanov_z(d);
    ok = ok && khovanov_euler_q(kh) == jones_hat_q(d);
    auto lee = lee_homology(d);
    ok = ok && lee.total_dim == 2 && lee.fmax - lee.fmin == 2;
    ok = ok && khovanov_dims_f2(d) == rbg_oracle::Cube(d).dims_f2();
  }
  std::ostringstream os;
  os << "euler=jones, lee dim 2 / gap 2, scan=full cube on " << count
     << " bundled <=8-crossing knots";
  report(8, ok && count >= 6, os.str());
}

static void c9() {
  auto good = [](long long n) {
    if (n <= 2 || n == 4) return true;
    long long m = n % 2 == 0 ? n / 2 : n;
    if (m % 2 == 0) return false;  // 4 | n beyond n=4
    long long p = 0;
    for (long long q = 3; q * q <= m; q += 2)
      if (m % q == 0) {
        p = q;
        break;
      }
    if (p == 0) return true;  // odd prime (or 1)
    while (m % p == 0) m /= p;
    return m == 1;
  };
  bool ok = true;
  for (long long n = 1; n <= 200; ++n)
    ok = ok && meridian_extendability(n).extends_always == good(n);
  auto r8 = meridian_extendability(8);
  ok = ok && r8.units == std::set<long long>{1, 3, 5, 7} && !r8.extends_always;
  report(9, ok, "extendability = {1,2,4} u {p^k} u {2p^k} on n<=200; units mod 8 = {1,3,5,7}");
}

// ---- 10: sweep determinism across worker counts ------------------------------
static std::string stripped(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  std::string line;
  while (std::getline(in, line)) {
    auto t = line.find("\"timings\"");
    os << (t == std::string::npos ? line : line.substr(0, t)) << "\n";
  }
  return os.str();
}

static void c10() {
#ifdef RBG_CLI_PATH
  std::string cli = RBG_CLI_PATH;
  std::string args =
      " sweep abc --a -2 -1 --b 1 1 --c -3 -2 --r 0 1 --positive-n -o ";
  std::string f2 = "acceptance_sweep2.jsonl", f8 = "acceptance_sweep8.jsonl";
  std::remove(f2.c_str());
  std::remove(f8.c_str());
  int rc2 = std::system((cli + " --workers 2" + args + f2 + " > /dev/null").c_str());
  int rc8 = std::system((cli + " --workers 8" + args + f8 + " > /dev/null").c_str());
  bool ok = rc2 == 0 && rc8 == 0;
  std::string s2 = stripped(f2), s8 = stripped(f8);
  ok = ok && !s2.empty() && s2 == s8;
  report(10, ok, "2-worker and 8-worker ABC sweeps byte-identical modulo timings");
#else
  report(10, false, "CLI path not wired into the build");
#endif
}

int main() {
  c1();
  c2();
  c3();
  c4();
  c5();
  c6();
  c7();
  c8();
  c9();
  c10();
  printf("%d/10 criteria passed\n", 10 - failures);
  return failures;
}
