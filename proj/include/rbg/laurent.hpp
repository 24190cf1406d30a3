#pragma once

#include <map>
#include <sstream>
#include <string>

namespace rbg {

// Sparse Laurent polynomial in one variable.
template <typename C>
struct Laurent {
  std::map<int, C> terms;  // exponent -> coefficient, zeros pruned

  Laurent() = default;
  Laurent(C c, int exp = 0) {
    if (c != C(0)) terms[exp] = c;
  }
  static Laurent monomial(C c, int exp) { return Laurent(c, exp); }

  bool is_zero() const { return terms.empty(); }
  C coeff(int exp) const {
    auto it = terms.find(exp);
    return it == terms.end() ? C(0) : it->second;
  }
  int min_exp() const { return terms.begin()->first; }
  int max_exp() const { return terms.rbegin()->first; }

  Laurent& operator+=(const Laurent& o) {
    for (auto& [e, c] : o.terms) {
      C v = coeff(e) + c;
      if (v == C(0))
        terms.erase(e);
      else
        terms[e] = v;
    }
    return *this;
  }
  Laurent operator+(const Laurent& o) const {
    Laurent r = *this;
    r += o;
    return r;
  }
  Laurent operator-() const {
    Laurent r = *this;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
  }
  Laurent operator-(const Laurent& o) const { return *this + (-o); }
  Laurent operator*(const Laurent& o) const {
    Laurent r;
    for (auto& [e1, c1] : terms)
      for (auto& [e2, c2] : o.terms) {
        C v = r.coeff(e1 + e2) + c1 * c2;
        if (v == C(0))
          r.terms.erase(e1 + e2);
        else
          r.terms[e1 + e2] = v;
      }
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  bool operator==(const Laurent& o) const { return terms == o.terms; }

  Laurent shifted(int by) const {
    Laurent r;
    for (auto& [e, c] : terms) r.terms[e + by] = c;
    return r;
  }
  // substitute variable -> variable^k (k may be negative, e.g. mirror)
  Laurent power_substituted(int k) const {
    Laurent r;
    for (auto& [e, c] : terms) r.terms[e * k] = c;
    return r;
  }
  // evaluate at an integer argument (negative exponents must cancel; the
  // caller guarantees the value is integral, e.g. at x = ±1)
  C eval_unit(C x) const {
    // only valid for x = 1 or -1
    C acc(0);
    for (auto& [e, c] : terms) acc += (((e % 2) && x == C(-1)) ? -c : c);
    return acc;
  }

  std::string str(const std::string& var) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms) {
      C a = c;
      if (!first) os << (a < C(0) ? " - " : " + ");
      if (first && a < C(0)) os << "-";
      first = false;
      C mag = a < C(0) ? C(-a) : a;
      if (mag != C(1) || e == 0) os << mag;
      if (e != 0) {
        os << var;
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }
};

}  // namespace rbg
