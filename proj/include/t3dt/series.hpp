#pragma once

// Truncated Laurent series over Q in one variable, plus a bivariate
// carrier built from rows of univariate series.
//
// A GradedSeries is a window of exactly known coefficients:
//   * support_min(): the true series has no nonzero coefficient below it;
//   * known_max():   coefficients are exact up to and including it
//                    (everywhere, for `entire` series such as polynomials).
// Every operation records the tightest window on which its result is
// exact; coefficients are never reported outside it.

#include <climits>
#include <map>
#include <stdexcept>
#include <vector>

#include "t3dt/exact.hpp"

namespace t3dt {

class window_error : public std::logic_error {
 public:
  explicit window_error(const std::string& what) : std::logic_error(what) {}
};

class GradedSeries {
 public:
  static constexpr int kUnbounded = INT_MAX / 4;

  GradedSeries() : lo_(0), entire_(true) {}  // the zero series, fully known

  static GradedSeries zero() { return GradedSeries(); }
  static GradedSeries one() { return monomial(1, 0); }
  static GradedSeries monomial(Rational c, int deg);
  // Fully known finite sum of monomials.
  static GradedSeries polynomial(const std::map<int, Rational>& coeffs);
  // Exact on [lo, lo + coeffs.size() - 1] only.
  static GradedSeries truncated(int lo, std::vector<Rational> coeffs);

  bool entire() const { return entire_; }
  int support_min() const { return lo_; }
  int known_max() const { return entire_ ? kUnbounded : lo_ + static_cast<int>(coeffs_.size()) - 1; }
  // Last stored degree (the top of the support for entire series).
  int stored_max() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
  bool knows(int deg) const { return deg < lo_ || deg <= known_max(); }
  bool is_known_zero() const;

  // Throws window_error outside the known window.
  Rational coeff(int deg) const;

  // Degree of the lowest nonzero coefficient. Throws if the series is
  // zero on the whole known window (for non-entire series the valuation
  // is then undecidable; for entire series it does not exist).
  int valuation() const;

  GradedSeries operator-() const;
  GradedSeries& operator+=(const GradedSeries& o);
  GradedSeries& operator-=(const GradedSeries& o);
  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator*(const Rational& c, GradedSeries s);

  GradedSeries shifted(int k) const;  // * t^k
  GradedSeries pow(unsigned e) const;

  // Truncated reciprocal: a * result = 1 on the result's window, which is
  // [-v, min(hi, known_max - 2v)] for valuation v (hi alone for entire
  // input). Throws if no nonzero leading coefficient is visible.
  GradedSeries reciprocal(int hi) const;

  // Substitute t -> t^c; when koszul_signs is set, coefficient a_d picks
  // up (-1)^{d(c-1)} (the trace twist of a super vector space on the
  // c-th tensor power).
  GradedSeries twist(int c, bool koszul_signs) const;

  // Narrow the known window (result non-entire unless unchanged & entire).
  GradedSeries restricted(int lo, int hi) const;

  // Exact comparison on [lo, hi]; throws window_error if either side
  // does not know the full range.
  bool equal_on(const GradedSeries& o, int lo, int hi) const;
  void require_known(int lo, int hi) const;

 private:
  // Invariant: for non-entire series, coeffs_ spans [lo_, known_max()];
  // for entire series, coeffs_ spans the support (trailing zeros trimmed).
  int lo_;
  bool entire_;
  std::vector<Rational> coeffs_;

  void trim();
};

// Rows indexed by the degree of the first variable (0..x_max), each a
// univariate series in the second; the carrier used for partition
// functions in (x, t).
class BivariateSeries {
 public:
  BivariateSeries(std::vector<GradedSeries> rows) : rows_(std::move(rows)) {}

  int x_max() const { return static_cast<int>(rows_.size()) - 1; }
  const GradedSeries& row(int n) const { return rows_.at(n); }
  Rational coeff(int n, int t_deg) const { return rows_.at(n).coeff(t_deg); }

 private:
  std::vector<GradedSeries> rows_;
};

}  // namespace t3dt
