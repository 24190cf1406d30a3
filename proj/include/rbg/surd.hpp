#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rbg {

// exact value a + b*sqrt(c) with integer a,b and c >= 0
struct Surd {
  long long a = 0, b = 0, c = 0;

  // sign of a + b*sqrt(c): -1, 0, +1
  int sign() const {
    long long bb = (c == 0) ? 0 : b;
    if (bb == 0) return a < 0 ? -1 : (a > 0 ? 1 : 0);
    if (a == 0) return bb < 0 ? -1 : 1;
    // compare |a| with |b|sqrt(c) by squaring (exact in 64 bits at our scales)
    __int128 a2 = static_cast<__int128>(a) * a;
    __int128 b2c = static_cast<__int128>(bb) * bb * c;
    if (a > 0 && bb > 0) return 1;
    if (a < 0 && bb < 0) return -1;
    if (a2 == b2c) return 0;
    bool abs_a_wins = a2 > b2c;
    return abs_a_wins ? (a > 0 ? 1 : -1) : (bb > 0 ? 1 : -1);
  }

  // compare against an integer
  int cmp(long long m) const { return Surd{a - m, b, c}.sign(); }
  bool operator>(long long m) const { return cmp(m) > 0; }
  bool operator<=(long long m) const { return cmp(m) <= 0; }

  // compare two surds with the same radicand
  int cmp(const Surd& o) const {
    if (c != o.c && b != 0 && o.b != 0)
      throw std::logic_error("surd comparison across radicands");
    return Surd{a - o.a, b - o.b, b != 0 ? c : o.c}.sign();
  }

  std::string str() const {
    std::string s = std::to_string(a);
    if (b != 0 && c != 0) {
      s += (b > 0 ? " + " : " - ");
      long long ab = b > 0 ? b : -b;
      if (ab != 1) s += std::to_string(ab) + "*";
      s += "sqrt(" + std::to_string(c) + ")";
    }
    return s;
  }
};

}  // namespace rbg
