#pragma once

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rbg/pd.hpp"

namespace rbg {

enum class FamilyId { EGM, FOURBOX, ABC, PECULIAR };

FamilyId family_from_name(const std::string& name);
const char* family_name(FamilyId f);
int family_arity(FamilyId f);

struct Framing {
  long long num = 0, den = 1;  // num/den; den = 1 for integral framings
  bool integral() const { return den == 1; }
};

struct FamilyParams {
  FamilyId family = FamilyId::ABC;
  std::vector<int> twists;  // EGM (m), FOURBOX (a,b,c,d), ABC (a,b,c), PECULIAR (a,b)
  Framing r;
};

struct FramedLinkInstance {
  PlanarDiagram link;
  int comp_b = 0, comp_r = 1, comp_g = 2;  // component indices by color
  Framing fr_r;
  long long fr_b = 0, fr_g = 0;
};

struct RBGInstance {
  FramedLinkInstance link;
  FamilyParams params;
  long long n = 0;  // computed surgery coefficient
  long long l = 0;  // lk(B, G)
  int disk_rb = 0, disk_rg = 0;  // |Delta_R ∩ B|, |Delta_R ∩ G| per template
};

struct DerivedKnot {
  PlanarDiagram diagram;
  long long framing = 0;
  char color = 'B';
  std::string provenance;
};

// n = -det(M_L) = l(rl - 2) for the special pattern
long long special_n(long long r, long long l);

// all (r, l) with 1 <= |l| <= l_bound and l(rl-2) = k; throws ZeroK on k = 0
std::set<std::pair<long long, long long>> enumerate_rl(long long k, long long l_bound);

enum class PeculiarBranch { plus, minus };
long long peculiar_n(long long s, long long l, PeculiarBranch branch);
// f_g from the determinant computation; throws BadBranch unless |b - s| = 1
long long peculiar_framing(long long b, long long g, long long l, long long s);

RBGInstance build_instance(const FamilyParams& params);

// rows/cols ordered (R, B, G); diagonal = framings (requires integral r)
std::array<std::array<long long, 3>, 3> linking_matrix(const RBGInstance& inst);

std::pair<DerivedKnot, DerivedKnot> derive_knots(const RBGInstance& inst,
                                                 bool color_switch = false);

// hypothesis of the R=U, r=0 proposition: both meridian-disk counts equal 1
bool prop_r_applicable(const RBGInstance& inst);

}  // namespace rbg
