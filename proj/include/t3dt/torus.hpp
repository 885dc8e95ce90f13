#pragma once

// Exactly-decidable torus elements r e^{2 pi i theta}: positive rational
// magnitude, rational argument in turns canonicalized to [0, 1).

#include <array>

#include "t3dt/exact.hpp"

namespace t3dt {

struct TorusElem {
  Rational r;      // > 0
  Rational theta;  // in [0, 1)

  TorusElem() : r(1), theta(0) {}
  TorusElem(Rational magnitude, Rational turns);

  bool is_one() const { return r == 1 && theta == 0; }

  friend TorusElem operator*(const TorusElem& a, const TorusElem& b) {
    return {a.r * b.r, a.theta + b.theta};
  }
  TorusElem inverse() const { return {1 / r, -theta}; }

  friend bool operator==(const TorusElem& a, const TorusElem& b) {
    return a.r == b.r && a.theta == b.theta;
  }
  friend bool operator!=(const TorusElem& a, const TorusElem& b) { return !(a == b); }
  friend bool operator<(const TorusElem& a, const TorusElem& b) {
    if (a.r != b.r) return a.r < b.r;
    return a.theta < b.theta;
  }
};

// e^{2 pi i k/n}
TorusElem root_of_unity(int k, int n);

// theta reduced into [0, 1)
Rational mod_one(const Rational& q);

using TorusTriple = std::array<TorusElem, 3>;

inline bool operator<(const TorusTriple& a, const TorusTriple& b) {
  for (int i = 0; i < 3; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace t3dt
