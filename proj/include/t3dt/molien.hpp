#pragma once

// Cycle-index / Molien engine: graded traces of relative-Weyl-group
// classes on the block-Levi invariant algebras, their class-averaged
// invariant series, and an element-by-element brute-force oracle.
//
// Parity fixes the super-sign convention used when a cycle permutes
// tensor factors:
//   Shifted   - every class counts as even (plain t -> t^c substitution);
//   Unshifted - Koszul signs from the ambient degree, a_d picking up
//               (-1)^{d(c-1)} on a c-cycle.
// The Levi-sum-vs-plethystic identity holds under either convention as
// long as both sides use the same one.

#include "t3dt/partitions.hpp"
#include "t3dt/series.hpp"

namespace t3dt {

enum class Parity { Shifted, Unshifted };

const char* parity_name(Parity p);
Parity parity_from_name(std::string_view s);

// The one-block series for GL and the additive (Lie-algebra) theory:
// t^{-2}(1+t)^3/(1-t^2) and t^{-2}/(1-t^2), exact up to degree hi.
GradedSeries kind_block(GroupKind kind, int hi);

// Graded trace of a class representative on the Levi's invariant-side
// building block, including the t^{-2 dim Z} shift. hi must reach the
// shift degree.
GradedSeries cycle_factor(const LeviDescriptor& levi, const CycleType& tau, int hi,
                          Parity parity = Parity::Shifted);

// (1/|W|) sum over classes of class_size * cycle_factor: the Poincare
// series of the Weyl-invariant part.
GradedSeries graded_invariants(const LeviDescriptor& levi, int hi,
                               Parity parity = Parity::Shifted);

// For each cycle type, the trace of a representative on the degree-d part
// of the polynomial block algebra (generators in degree 2, shifted by
// [-2]): the coefficient of t^{d-2} in prod_c (1-t^{2c})^{-1}.
// Entries follow the order of weyl_cycle_types(lambda). d must be even.
std::vector<Rational> character_of_degree(const Partition& lambda, int d);

// Same series as graded_invariants, by explicit enumeration of all group
// elements as permutation matrices with determinant-derived factors.
// Throws when the group order exceeds 10000.
GradedSeries molien_bruteforce(const LeviDescriptor& levi, int hi,
                               Parity parity = Parity::Shifted);

}  // namespace t3dt
