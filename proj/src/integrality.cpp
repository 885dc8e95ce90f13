#include "t3dt/integrality.hpp"

#include <algorithm>

namespace t3dt {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

GradedSeries bps_poincare(GroupKind kind, int n) {
  if (n < 1) throw std::invalid_argument("bps_poincare requires n >= 1");
  switch (kind) {
    case GroupKind::GL:
      return GradedSeries::polynomial({{-3, 1}, {-2, 3}, {-1, 3}, {0, 1}});
    case GroupKind::GLAdditive:
      return GradedSeries::monomial(1, -3);
    case GroupKind::SL:
      return GradedSeries::monomial(Rational(Integer(n) * n * n), 0);
    case GroupKind::PGL:
      if (!is_prime(n)) throw std::domain_error("bps_poincare: PGL requires prime n");
      return GradedSeries::monomial(1, 0);
  }
  throw std::invalid_argument("bps_poincare: bad kind");
}

GradedSeries pe_block(GroupKind kind, int n, int hi) {
  if (kind != GroupKind::GL && kind != GroupKind::GLAdditive)
    throw std::invalid_argument("pe_block: only GL and GL_additive have a Sym side");
  // bps (x) H(B Gm)[-1] == the one-block Levi series.
  (void)n;
  return kind_block(kind, hi);
}

GradedSeries levi_contribution(GroupKind kind, int n, const Partition& lambda, int hi,
                               Parity parity) {
  if (lambda.n() != n)
    throw shape_error("levi_contribution: " + lambda.str() + " is not a partition of " +
                      std::to_string(n));
  return graded_invariants(levi_descriptor(kind, lambda), hi, parity);
}

GradedSeries dt_cohomology(GroupKind kind, int n, int hi, bool include_twisted, Parity parity) {
  if (kind == GroupKind::PGL && !is_prime(n))
    throw std::domain_error("dt_cohomology: PGL requires prime n");
  if (include_twisted && kind != GroupKind::PGL)
    throw std::domain_error("dt_cohomology: twisted components exist only for PGL");
  GradedSeries sum = GradedSeries::zero();
  for (const Partition& lambda : partitions_of(n))
    sum += levi_contribution(kind, n, lambda, hi, parity);
  if (include_twisted)
    sum += GradedSeries::monomial(Rational(Integer(n) * n * n - 1), 0);
  return sum;
}

Integer binomial(const Integer& top, int k) {
  if (k == 0) return 1;
  if (top < 0 || top < k) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= top - k + i;
    Integer q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.get_mpz_t(), Integer(i).get_mpz_t());
    if (rem != 0) throw std::logic_error("binomial: inexact division");
    r = q;
  }
  return r;
}

BivariateSeries plethystic_exponential(const std::vector<GradedSeries>& blocks, int max_n,
                                       Parity parity) {
  if (static_cast<int>(blocks.size()) < max_n)
    throw std::invalid_argument("plethystic_exponential: need blocks 1..max_n");
  std::vector<GradedSeries> rows(static_cast<size_t>(max_n) + 1, GradedSeries::zero());
  rows[0] = GradedSeries::one();

  for (int n = 1; n <= max_n; ++n) {
    const GradedSeries& block = blocks[n - 1];
    const int k_lo = block.support_min();
    const int k_hi = block.known_max();
    if (k_hi >= GradedSeries::kUnbounded)
      throw std::invalid_argument("plethystic_exponential: blocks must be truncated");
    for (int k = k_lo; k <= k_hi; ++k) {
      Rational a = block.coeff(k);
      if (a == 0) continue;
      if (a < 0 || !is_integer(a))
        throw std::domain_error("plethystic_exponential: block coefficient at degree " +
                                std::to_string(k) + " is not a nonnegative integer");
      Integer ai = a.get_num();
      const bool odd = parity == Parity::Unshifted && (k % 2 != 0);
      // Multiply the state by (1 -+ x^n t^k)^{-+ a}.
      for (int j = max_n; j >= n; --j) {
        GradedSeries acc = rows[j];
        for (int m = 1; m * n <= j; ++m) {
          Integer cm = odd ? binomial(ai, m) : binomial(ai + m - 1, m);
          if (cm == 0) continue;
          acc += Rational(cm) * rows[j - m * n].shifted(k * m);
        }
        rows[j] = acc;
      }
    }
  }

  // Truncating each factor list at the block's window caps what is known:
  // an omitted (n, k > k_hi[n]) factor first perturbs row j at t-degree
  // (k_hi[n]+1) m + support_min(row[j - n m]).
  for (int j = 1; j <= max_n; ++j) {
    int cap = GradedSeries::kUnbounded;
    for (int n = 1; n <= j; ++n) {
      int kn = blocks[n - 1].known_max();
      for (int m = 1; m * n <= j; ++m)
        cap = std::min(cap, (kn + 1) * m + rows[j - m * n].support_min());
    }
    int hi = std::min(rows[j].known_max(), cap - 1);
    rows[j] = rows[j].restricted(rows[j].support_min(), hi);
  }
  return BivariateSeries(std::move(rows));
}

bool IntegralityReport::all_equal() const {
  return std::all_of(rows.begin(), rows.end(), [](const IntegralityRow& r) { return r.equal; });
}

IntegralityReport verify_integrality(GroupKind kind, int max_n, int lo, int hi, Parity parity) {
  if (kind != GroupKind::GL && kind != GroupKind::GLAdditive)
    throw std::invalid_argument(
        "verify_integrality: only GL and GL_additive carry a symmetric-algebra side");
  std::vector<GradedSeries> blocks;
  for (int n = 1; n <= max_n; ++n) blocks.push_back(pe_block(kind, n, hi + 2 * max_n + 6));
  BivariateSeries pe = plethystic_exponential(blocks, max_n, parity);

  IntegralityReport report{kind, parity, lo, hi, {}};
  for (int n = 1; n <= max_n; ++n) {
    IntegralityRow row;
    row.n = n;
    row.levi_sum = GradedSeries::zero();
    for (const Partition& lambda : partitions_of(n))
      row.levi_sum += levi_contribution(kind, n, lambda, hi, parity);
    row.pe_coeff = pe.row(n).restricted(pe.row(n).support_min(), hi);
    row.equal = row.levi_sum.equal_on(row.pe_coeff, lo, hi);
    report.rows.push_back(std::move(row));
  }
  return report;
}

LanglandsResult langlands_check(int n, int lo, int hi, Parity parity) {
  if (!is_prime(n)) throw std::domain_error("langlands_check requires prime n");
  LanglandsResult res;
  res.n = n;
  res.sl = dt_cohomology(GroupKind::SL, n, hi, false, parity);
  res.pgl_untwisted = dt_cohomology(GroupKind::PGL, n, hi, false, parity);
  res.pgl_twisted = dt_cohomology(GroupKind::PGL, n, hi, true, parity);
  res.verdict = res.sl.equal_on(res.pgl_twisted, lo, hi);
  return res;
}

Integer bps_rank(int l, int k) {
  if (l < 1 || k < 0) throw std::invalid_argument("bps_rank requires l >= 1, k >= 0");
  Integer closed = binomial(Integer(k) + l - 1, k);
  Integer rec = 0;
  for (int j = 0; j <= k; ++j) rec += binomial(Integer(j) + l - 2, j);
  if (closed != rec)
    throw std::logic_error("bps_rank: closed form disagrees with its recursion at l=" +
                           std::to_string(l) + ", k=" + std::to_string(k));
  return closed;
}

}  // namespace t3dt
