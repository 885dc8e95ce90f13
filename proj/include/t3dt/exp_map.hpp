#pragma once

// Exact model of the exponential map on semisimple eigenvalue data over
// the lattice Q(i) + 2 pi i Q: etale-locus membership, exponential
// equality of eigenvalues, and stabilizer preservation.

#include <vector>

#include "t3dt/exact.hpp"
#include "t3dt/partitions.hpp"
#include "t3dt/torus.hpp"

namespace t3dt {

// a + 2 pi i s
struct LieEigenvalue {
  GaussianRational a;
  Rational s;

  friend bool operator==(const LieEigenvalue& x, const LieEigenvalue& y) {
    return x.a == y.a && x.s == y.s;
  }
  friend bool operator!=(const LieEigenvalue& x, const LieEigenvalue& y) { return !(x == y); }
};

using EigenList = std::vector<LieEigenvalue>;

// False exactly when some difference lies in 2 pi i (Z \ {0}).
bool is_etale(const EigenList& e);

// exp(x) == exp(y), i.e. x - y in 2 pi i Z.
bool exp_equal(const LieEigenvalue& x, const LieEigenvalue& y);

// Multiplicity partition under exact equality.
Partition eig_partition(const EigenList& e);

// Multiplicity partition under exp-equality (each exact-equality class
// lies inside one exp-class).
Partition exp_class_partition(const EigenList& e);

// True iff the two partitions above coincide; guaranteed whenever the
// list is etale.
bool check_stabiliser_preservation(const EigenList& e);

// Logarithm of a unit-magnitude torus element: (0, theta) with theta in
// [0, 1). Throws domain_error when the magnitude is not exactly 1.
LieEigenvalue unit_log(const TorusElem& t);

// exp of an eigenvalue with a = 0 lands back on the unit circle.
TorusElem exp_to_torus(const LieEigenvalue& v);

}  // namespace t3dt
