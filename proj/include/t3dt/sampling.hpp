#pragma once

// Deterministic seeded generators for the randomized verification
// suites. Every suite takes an explicit seed; identical seeds reproduce
// identical samples on any platform.

#include <array>
#include <cstdint>

#include "t3dt/complexes.hpp"
#include "t3dt/exp_map.hpp"
#include "t3dt/moduli.hpp"

namespace t3dt {

struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  uint64_t below(uint64_t n) { return next() % n; }
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1))); }
};

// Nonzero rational with small numerator and denominator.
Rational random_nonzero_rational(SplitMix64& rng, int bound = 7);

Rational random_rational(SplitMix64& rng, int bound = 7);

GaussianRational random_gaussian(SplitMix64& rng, int bound = 5);

// Three diagonal invertible matrices constant on the blocks of lambda,
// with the block value triples pairwise distinct: a generic point of the
// tilde-centre, as monodromy matrices.
std::array<GMatrix, 3> generic_diagonal_monodromy(const Partition& lambda, SplitMix64& rng);

// Pairwise commuting triple: polynomials in one random matrix.
OperatorTriple random_commuting_triple(int n, SplitMix64& rng);

// Acyclic based complex with term dimensions <= max_dim: a split complex
// conjugated by random invertible changes of basis.
BasedComplex random_acyclic_complex(SplitMix64& rng, int terms, int max_rank);

// A valid alternative b-choice for the torsion of an acyclic complex:
// random vectors whose images under d_k span im d_k.
std::vector<GMatrix> random_torsion_basis(const BasedComplex& c, SplitMix64& rng);

// Random eigenvalue list on the exact lattice (small Gaussian rational a,
// small rational s).
EigenList random_eigenlist(SplitMix64& rng, int n);

// Random unit-magnitude SL point of rank n with all triples distinct,
// resampled until it avoids the bad locus (n prime).
SymPoint random_sl_point_off_bad_locus(int n, SplitMix64& rng);

// Random point of the given stratum: lambda's blocks get pairwise
// distinct random triples (GL kind, free magnitudes).
SymPoint random_stratified_point(const Partition& lambda, SplitMix64& rng);

}  // namespace t3dt
