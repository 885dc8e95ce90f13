#pragma once

// Assembly of the graded-dimension identities: BPS Poincare series, Levi
// contributions, full cohomology series per group and rank, the
// plethystic-exponential side, and the integrality / duality reports.

#include <optional>
#include <vector>

#include "t3dt/molien.hpp"

namespace t3dt {

bool is_prime(int n);

// GL: t^{-3}+3t^{-2}+3t^{-1}+1; GL_additive: t^{-3}; SL: n^3 at degree 0;
// PGL (n prime): 1 at degree 0.
GradedSeries bps_poincare(GroupKind kind, int n);

// The rank-n block fed to the plethystic exponential:
// bps_poincare (x) H(B Gm)[-1], exact up to degree hi. GL / GL_additive.
GradedSeries pe_block(GroupKind kind, int n, int hi);

GradedSeries levi_contribution(GroupKind kind, int n, const Partition& lambda, int hi,
                               Parity parity = Parity::Shifted);

// Sum of Levi contributions over all partitions of n; for PGL with
// include_twisted, adds (n^3-1) at degree 0 for the twisted components.
GradedSeries dt_cohomology(GroupKind kind, int n, int hi, bool include_twisted = false,
                           Parity parity = Parity::Shifted);

// prod_{n,k} (1 - x^n t^k)^{-a_{n,k}} for even-parity k and
// (1 + x^n t^k)^{a_{n,k}} for odd-parity k (under Shifted every k counts
// as even). blocks[i] is the block of x-degree i+1; coefficients must be
// nonnegative integers. Rows 0..max_n of the result are exact on the
// window each row reports.
BivariateSeries plethystic_exponential(const std::vector<GradedSeries>& blocks, int max_n,
                                       Parity parity = Parity::Shifted);

struct IntegralityRow {
  int n;
  GradedSeries levi_sum;
  GradedSeries pe_coeff;
  bool equal;
};

struct IntegralityReport {
  GroupKind kind;
  Parity parity;
  int lo, hi;
  std::vector<IntegralityRow> rows;

  bool all_equal() const;
};

// For each n <= max_n, compares [x^n] of the plethystic exponential with
// the Levi sum, exactly on [lo, hi]. kind must be GL or GL_additive.
IntegralityReport verify_integrality(GroupKind kind, int max_n, int lo, int hi,
                                     Parity parity = Parity::Shifted);

struct LanglandsResult {
  int n;
  bool verdict;  // SL series == twisted PGL series on the window
  GradedSeries sl;
  GradedSeries pgl_twisted;
  GradedSeries pgl_untwisted;
};

LanglandsResult langlands_check(int n, int lo, int hi, Parity parity = Parity::Shifted);

// C(k+l-1, k), cross-checked against the hockey-stick recursion
// sum_{j<=k} C(j+l-2, j); throws logic_error on mismatch.
Integer bps_rank(int l, int k);

// C(top, k) for top >= 0; 0 when top < 0 (and 1 when k == 0).
Integer binomial(const Integer& top, int k);

}  // namespace t3dt
