#include "t3dt/series.hpp"

#include <algorithm>

namespace t3dt {

namespace {
int add_deg(int a, int b) {
  if (a >= GradedSeries::kUnbounded || b >= GradedSeries::kUnbounded)
    return GradedSeries::kUnbounded;
  return a + b;
}
}  // namespace

void GradedSeries::trim() {
  if (entire_) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  // Leading known zeros only tighten the support bound.
  size_t drop = 0;
  while (drop < coeffs_.size() && coeffs_[drop] == 0) ++drop;
  if (drop > 0 && (entire_ || drop < coeffs_.size())) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + drop);
    lo_ += static_cast<int>(drop);
  }
  if (entire_ && coeffs_.empty()) lo_ = 0;
}

GradedSeries GradedSeries::monomial(Rational c, int deg) {
  GradedSeries s;
  s.lo_ = deg;
  s.entire_ = true;
  s.coeffs_ = {std::move(c)};
  s.trim();
  return s;
}

GradedSeries GradedSeries::polynomial(const std::map<int, Rational>& coeffs) {
  if (coeffs.empty()) return zero();
  GradedSeries s;
  s.entire_ = true;
  s.lo_ = coeffs.begin()->first;
  s.coeffs_.assign(coeffs.rbegin()->first - s.lo_ + 1, Rational(0));
  for (const auto& [d, c] : coeffs) s.coeffs_[d - s.lo_] = c;
  s.trim();
  return s;
}

GradedSeries GradedSeries::truncated(int lo, std::vector<Rational> coeffs) {
  GradedSeries s;
  s.entire_ = false;
  s.lo_ = lo;
  s.coeffs_ = std::move(coeffs);
  s.trim();
  return s;
}

bool GradedSeries::is_known_zero() const {
  return entire_ && coeffs_.empty();
}

Rational GradedSeries::coeff(int deg) const {
  if (deg < lo_) return Rational(0);
  size_t idx = static_cast<size_t>(deg - lo_);
  if (idx < coeffs_.size()) return coeffs_[idx];
  if (entire_) return Rational(0);
  throw window_error("coefficient requested outside the valid window (degree " +
                     std::to_string(deg) + ", window ends at " + std::to_string(known_max()) + ")");
}

int GradedSeries::valuation() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return lo_ + static_cast<int>(i);
  throw window_error(entire_ ? "valuation of the zero series"
                             : "no nonzero coefficient inside the valid window");
}

GradedSeries GradedSeries::operator-() const {
  GradedSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
  int lo = std::min(lo_, o.lo_);
  int hi = std::min(known_max(), o.known_max());
  GradedSeries r;
  r.entire_ = entire_ && o.entire_;
  r.lo_ = lo;
  if (r.entire_) hi = std::max(lo_ + static_cast<int>(coeffs_.size()),
                               o.lo_ + static_cast<int>(o.coeffs_.size())) - 1;
  if (hi < lo) {
    // Nothing is known beyond the support bound.
    r.coeffs_.clear();
    if (!r.entire_) r.coeffs_.assign(0, Rational(0));
  } else {
    r.coeffs_.assign(static_cast<size_t>(hi - lo + 1), Rational(0));
    for (int d = lo; d <= hi; ++d) r.coeffs_[d - lo] = coeff(d) + o.coeff(d);
  }
  r.trim();
  return *this = r;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& o) { return *this += -o; }

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
  if (a.is_known_zero() || b.is_known_zero()) return GradedSeries::zero();
  GradedSeries r;
  r.entire_ = a.entire_ && b.entire_;
  r.lo_ = a.lo_ + b.lo_;
  int hi;
  if (r.entire_) {
    hi = r.lo_ + static_cast<int>(a.coeffs_.size() + b.coeffs_.size()) - 2;
  } else {
    hi = std::min(add_deg(a.known_max(), b.lo_), add_deg(b.known_max(), a.lo_));
  }
  r.coeffs_.assign(static_cast<size_t>(hi - r.lo_ + 1), Rational(0));
  const int a_top = std::min(a.known_max(), a.lo_ + static_cast<int>(a.coeffs_.size()) - 1);
  for (int i = a.lo_; i <= a_top; ++i) {
    const Rational& ai = a.coeffs_[i - a.lo_];
    if (ai == 0) continue;
    int j_top = std::min(hi - i, b.lo_ + static_cast<int>(b.coeffs_.size()) - 1);
    for (int j = b.lo_; j <= j_top; ++j) {
      const Rational& bj = b.coeffs_[j - b.lo_];
      if (bj == 0) continue;
      r.coeffs_[i + j - r.lo_] += ai * bj;
    }
  }
  r.trim();
  return r;
}

GradedSeries operator*(const Rational& c, GradedSeries s) {
  if (c == 0) return GradedSeries::zero();
  for (auto& x : s.coeffs_) x *= c;
  return s;
}

GradedSeries GradedSeries::shifted(int k) const {
  GradedSeries r = *this;
  r.lo_ += k;
  return r;
}

GradedSeries GradedSeries::pow(unsigned e) const {
  GradedSeries r = one();
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

GradedSeries GradedSeries::reciprocal(int hi) const {
  int v = valuation();  // throws when no invertible leading term is visible
  int out_hi = hi;
  if (!entire_) out_hi = std::min(out_hi, known_max() - 2 * v);
  GradedSeries r;
  r.entire_ = false;
  r.lo_ = -v;
  if (out_hi < r.lo_)
    throw window_error("reciprocal window is empty: input known window is too narrow");
  r.coeffs_.assign(static_cast<size_t>(out_hi - r.lo_ + 1), Rational(0));
  Rational lead_inv = 1 / coeff(v);
  // sum_j r_j * a_{d-j} = [d == 0]
  for (int d = 0; d <= out_hi + v; ++d) {
    Rational acc = d == 0 ? Rational(1) : Rational(0);
    for (int j = -v; j < d - v; ++j) acc -= r.coeffs_[j + v] * coeff(d - j);
    r.coeffs_[d] = acc * lead_inv;
  }
  // Entire monomials invert to entire monomials.
  if (entire_ && lo_ + static_cast<int>(coeffs_.size()) - 1 == v) {
    return monomial(lead_inv, -v);
  }
  r.trim();
  return r;
}

GradedSeries GradedSeries::twist(int c, bool koszul_signs) const {
  if (c < 1) throw std::invalid_argument("twist requires a positive cycle length");
  GradedSeries r;
  r.entire_ = entire_;
  r.lo_ = lo_ * c;
  int top = lo_ + static_cast<int>(coeffs_.size()) - 1;
  if (coeffs_.empty()) return zero();
  r.coeffs_.assign(static_cast<size_t>((top - lo_) * c + 1), Rational(0));
  for (int d = lo_; d <= top; ++d) {
    Rational x = coeffs_[d - lo_];
    if (koszul_signs && ((c - 1) % 2 != 0) && (d % 2 != 0)) x = -x;
    r.coeffs_[(d - lo_) * c] = x;
  }
  r.trim();
  return r;
}

GradedSeries GradedSeries::restricted(int lo, int hi) const {
  require_known(lo, hi);
  GradedSeries r;
  r.entire_ = false;
  r.lo_ = std::max(lo, lo_);
  if (hi < r.lo_) return zero();
  r.coeffs_.assign(static_cast<size_t>(hi - r.lo_ + 1), Rational(0));
  for (int d = r.lo_; d <= hi; ++d) r.coeffs_[d - r.lo_] = coeff(d);
  r.trim();
  return r;
}

bool GradedSeries::equal_on(const GradedSeries& o, int lo, int hi) const {
  require_known(lo, hi);
  o.require_known(lo, hi);
  for (int d = lo; d <= hi; ++d)
    if (coeff(d) != o.coeff(d)) return false;
  return true;
}

void GradedSeries::require_known(int lo, int hi) const {
  if (hi > known_max())
    throw window_error("series window [" + std::to_string(lo_) + ", " +
                       std::to_string(known_max()) + "] does not cover [" + std::to_string(lo) +
                       ", " + std::to_string(hi) + "]");
}

}  // namespace t3dt
