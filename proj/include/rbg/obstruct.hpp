#pragma once

#include <set>
#include <string>

#include "rbg/surd.hpp"

namespace rbg {

enum class BoundSource { thm_sinv_a, thm_sinv_b, kslice, twist };

struct SlicenessBound {
  long long k = 0;
  Surd value;  // exact a + b*sqrt(c)
  BoundSource source = BoundSource::kslice;
};

struct ObstructionVerdict {
  std::string knot_hash;
  long long k = 0;
  long long s_value = 0;
  SlicenessBound bound;
  bool obstructed = false;
  std::string narrative;
};

struct ExtendabilityReport {
  long long n = 0;
  std::set<long long> units;  // residues l mod n with l^2 == 1
  bool extends_always = false;
};

// s(K) <= k - sqrt(k) for k-slice K; mirror side is the negation.
SlicenessBound kslice_bound(long long k);
SlicenessBound kslice_bound_mirror(long long k);

// branch a: k - sqrt(k); branch b: k+1 - sqrt(k+1).
SlicenessBound thm_sinv_bound(char branch, long long k);

// s(K') <= s(K) - |l| + l^2 after an l-twist.
long long twist_bound(long long s_k, long long l);

ObstructionVerdict not_kslice(long long s_value, long long k,
                              const std::string& knot_hash = "");

// true iff an even integer lies in (k - sqrt(k), k+1 - sqrt(k+1)].
bool useful_k(long long k);

// r > 1 and l^2 <= k: the branch-a bound applies and kills the candidate.
bool prop_r1_applies(long long k, long long l, long long r);

ExtendabilityReport meridian_extendability(long long n);

enum class CandidateClass { exotic_candidate, obstruction_only, uninformative };

struct CandidateReport {
  long long k = 0;
  bool b_exceeds = false;  // s(K_B) > k - sqrt(k)
  bool g_exceeds = false;
  bool killed_by_prop_r1 = false;
  bool k_useful = false;
  CandidateClass classification = CandidateClass::uninformative;
  std::string narrative;
};

CandidateReport classify_candidate(long long s_b, long long s_g, long long k,
                                   long long l, long long r);

const char* to_string(CandidateClass c);
const char* to_string(BoundSource s);

}  // namespace rbg
