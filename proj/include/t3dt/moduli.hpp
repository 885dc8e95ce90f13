#pragma once

// Points of the symmetric-power moduli of commuting torus triples:
// strata, genericity, tilde-centre fibers, SL -> PGL orbit counts, the
// bad locus at prime rank, and SL_3(Z) normal forms of twisted classes.

#include <vector>

#include "t3dt/linalg.hpp"
#include "t3dt/partitions.hpp"
#include "t3dt/series.hpp"
#include "t3dt/torus.hpp"

namespace t3dt {

// A multiset of n torus triples, canonicalized by sorting; SL points
// satisfy the per-coordinate product-one constraint.
struct SymPoint {
  GroupKind kind;  // GL or SL
  std::vector<TorusTriple> triples;

  SymPoint(GroupKind kind, std::vector<TorusTriple> triples);

  int n() const { return static_cast<int>(triples.size()); }

  friend bool operator==(const SymPoint& a, const SymPoint& b) {
    return a.kind == b.kind && a.triples == b.triples;
  }
};

// Multiplicity partition of the n triples.
Partition stratum_of(const SymPoint& p);

// True iff at least one of the three coordinates separates the blocks of
// the stratum partition (pairwise-distinct values across blocks).
bool is_generic(const SymPoint& p);

// All ordered tuples of distinct triples expanding to p along lambda;
// the relative Weyl group permutes them freely, so there are |W_lambda|.
// Throws shape_error when stratum_of(p) != lambda.
std::vector<std::vector<TorusTriple>> theta_fiber(const SymPoint& p, const Partition& lambda);

// True iff every coordinate's eigenvalue multiset lies in A_S u Z(SL_n)
// and at least one lies in A_S. Requires prime n and an SL point.
bool is_bad_point(const SymPoint& p, int n);

// Number of distinct points in the mu_n^3 orbit of p (each factor
// scaling one coordinate of every triple by a fixed n-th root of unity).
// n^3 off the bad locus.
int sl_pgl_fiber(const SymPoint& p, int n);

// Number of (SL point, scalar triple) pairs over a GL point under
// coordinatewise scalar extraction: always n^3. Enumerate-and-count.
Integer eta2_fiber_size(const SymPoint& q, int n);

struct TwistedNormalForm {
  std::array<Integer, 3> form;  // (d, 0, 0) with d = gcd of the residues
  ZMatrix witness;              // det 1, witness * v == form mod n
};

TwistedNormalForm twisted_normal_form(const std::array<Integer, 3>& v, int n);

struct TwistedComponentData {
  Integer count;             // n^3 - 1
  GradedSeries contribution; // (n^3 - 1) t^0
};

// For n in {2, 3} additionally saturates the nonzero classes under the
// elementary SL_3(Z/n) generators and checks they form a single orbit.
TwistedComponentData twisted_component_data(int n);

}  // namespace t3dt
