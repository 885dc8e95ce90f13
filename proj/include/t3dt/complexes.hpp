#pragma once

// Based complexes of exact vector spaces, the three-torus complex of a
// commuting monodromy triple, exact cohomology ranks, and the torsion
// scalar of a based complex.
//
// Indexing is homological: terms C_0..C_m with d_k : C_k -> C_{k-1}
// (matching the change-of-basis formula the torsion is defined by); the
// file loader accepts cochain-indexed input and reverses it.

#include <optional>
#include <vector>

#include "t3dt/linalg.hpp"
#include "t3dt/partitions.hpp"

namespace t3dt {

class non_commuting_error : public std::domain_error {
 public:
  non_commuting_error(int i, int j)
      : std::domain_error("operators " + std::to_string(i) + " and " + std::to_string(j) +
                          " do not commute"),
        first(i),
        second(j) {}
  int first, second;
};

struct BasedComplex {
  // dims[k] = dim C_k; diffs[k-1] = d_k of shape dims[k-1] x dims[k].
  std::vector<int> dims;
  std::vector<GMatrix> diffs;

  // Validates the shape chain and d o d = 0.
  BasedComplex(std::vector<int> dims, std::vector<GMatrix> diffs);

  int top() const { return static_cast<int>(dims.size()) - 1; }
  // d_k, as an all-zero matrix of the right shape when out of range.
  GMatrix differential(int k) const;
};

struct OperatorTriple {
  GMatrix t1, t2, t3;

  // Throws non_commuting_error naming the offending pair (1-based).
  OperatorTriple(GMatrix a, GMatrix b, GMatrix c);

  Eigen::Index size() const { return t1.rows(); }
};

// Matrix of v -> X^{-1} v X - v on gl_n in the matrix-unit basis E_{ij},
// ordered row-major. Throws singular_error when X is not invertible.
GMatrix adjoint_operator(const GMatrix& x);

// Same operator restricted to the off-block-diagonal subspace u_- + u_+
// of the partition lambda, basis ordered by (block row, block column,
// entry row, entry column).
GMatrix adjoint_operator(const GMatrix& x, const Partition& lambda);

// The four-term complex V -> V^3 -> V^3 -> V of a commuting triple, with
// the monodromy-difference differentials; term 3 is the 0-cell end.
BasedComplex build_t3_complex(const OperatorTriple& ops);

// Exact homology dimensions, indexed 0..top.
std::vector<int> cohomology_ranks(const BasedComplex& c);

// The torsion scalar (-1)^{N(C)} [c : h]. Without representatives the
// complex must be acyclic; h_reps[k] columns are cycles spanning H_k.
GaussianRational torsion(const BasedComplex& c,
                         const std::optional<std::vector<GMatrix>>& h_reps = std::nullopt);

// Same, with an explicit choice of b_k (columns of b[k] are vectors of
// C_k whose images under d_k form a basis of im d_k); the scalar does not
// depend on the choice.
GaussianRational torsion_with_basis(const BasedComplex& c, const std::vector<GMatrix>& b,
                                    const std::optional<std::vector<GMatrix>>& h_reps);

// ([y,z], [z,x], [x,y]): all three vanish iff (x, y, z) pairwise commute.
std::array<GMatrix, 3> potential_gradient(const GMatrix& x, const GMatrix& y, const GMatrix& z);

}  // namespace t3dt
