#include "rbg/obstruct.hpp"

#include <stdexcept>

namespace rbg {

SlicenessBound kslice_bound(long long k) {
  if (k < 0) throw std::invalid_argument("kslice_bound: k < 0");
  return {k, Surd{k, -1, k}, BoundSource::kslice};
}

SlicenessBound kslice_bound_mirror(long long k) {
  if (k < 0) throw std::invalid_argument("kslice_bound: k < 0");
  return {k, Surd{-k, 1, k}, BoundSource::kslice};
}

SlicenessBound thm_sinv_bound(char branch, long long k) {
  if (k < 0) throw std::invalid_argument("thm_sinv_bound: k < 0");
  if (branch == 'a') return {k, Surd{k, -1, k}, BoundSource::thm_sinv_a};
  if (branch == 'b') return {k, Surd{k + 1, -1, k + 1}, BoundSource::thm_sinv_b};
  throw std::invalid_argument("thm_sinv_bound: branch must be 'a' or 'b'");
}

long long twist_bound(long long s_k, long long l) {
  return s_k - (l < 0 ? -l : l) + l * l;
}

ObstructionVerdict not_kslice(long long s_value, long long k,
                              const std::string& knot_hash) {
  ObstructionVerdict v;
  v.knot_hash = knot_hash;
  v.k = k;
  v.s_value = s_value;
  v.bound = kslice_bound(k);
  v.obstructed = v.bound.value.cmp(s_value) < 0;  // s > k - sqrt(k)
  v.narrative = v.obstructed
                    ? "s = " + std::to_string(s_value) + " > " +
                          v.bound.value.str() + "; not " + std::to_string(k) +
                          "-slice"
                    : "s = " + std::to_string(s_value) +
                          " within bound " + v.bound.value.str();
  return v;
}

bool useful_k(long long k) {
  if (k < 1) throw std::invalid_argument("useful_k: k < 1");
  Surd lo{k, -1, k};           // k - sqrt(k)
  Surd hi{k + 1, -1, k + 1};   // k+1 - sqrt(k+1)
  // the window has width < 1, so only a handful of even integers can land in it
  for (long long m = 0; m <= k + 2; m += 2)
    if (lo.cmp(m) < 0 && hi.cmp(m) >= 0) return true;
  return false;
}

bool prop_r1_applies(long long k, long long l, long long r) {
  return r > 1 && l * l <= k;
}

ExtendabilityReport meridian_extendability(long long n) {
  if (n < 1) throw std::invalid_argument("meridian_extendability: n < 1");
  ExtendabilityReport rep;
  rep.n = n;
  for (long long l = 0; l < n; ++l)
    if ((l * l) % n == 1 % n) rep.units.insert(l);
  if (n == 1) rep.units = {0};
  std::set<long long> pm1 = {1 % n, (n - 1) % n};
  rep.extends_always = true;
  for (long long u : rep.units)
    if (!pm1.count(u)) rep.extends_always = false;
  return rep;
}

CandidateReport classify_candidate(long long s_b, long long s_g, long long k,
                                   long long l, long long r) {
  CandidateReport rep;
  rep.k = k;
  if (k >= 1) {
    SlicenessBound bd = kslice_bound(k);
    rep.b_exceeds = bd.value.cmp(s_b) < 0;
    rep.g_exceeds = bd.value.cmp(s_g) < 0;
    rep.killed_by_prop_r1 = prop_r1_applies(k, l, r);
    rep.k_useful = useful_k(k);
  }
  bool exceeds = rep.b_exceeds || rep.g_exceeds;
  if (!exceeds) {
    rep.classification = CandidateClass::uninformative;
    rep.narrative = "no s-value exceeds the k-slice bound";
  } else if (rep.killed_by_prop_r1 || !rep.k_useful) {
    rep.classification = CandidateClass::obstruction_only;
    rep.narrative = std::string(rep.b_exceeds ? "K_B" : "K_G") +
                    " obstructs sliceness, but " +
                    (rep.killed_by_prop_r1 ? "the r>1 bound applies"
                                           : "k admits no even integer in the window");
  } else {
    rep.classification = CandidateClass::exotic_candidate;
    rep.narrative = "exotic candidate pending sliceness of the partner knot";
  }
  return rep;
}

const char* to_string(CandidateClass c) {
  switch (c) {
    case CandidateClass::exotic_candidate: return "exotic_candidate";
    case CandidateClass::obstruction_only: return "obstruction_only";
    default: return "uninformative";
  }
}

const char* to_string(BoundSource s) {
  switch (s) {
    case BoundSource::thm_sinv_a: return "thm_sinv_a";
    case BoundSource::thm_sinv_b: return "thm_sinv_b";
    case BoundSource::twist: return "twist";
    default: return "kslice";
  }
}

}  // namespace rbg
