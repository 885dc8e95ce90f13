#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "t3dt/linalg.hpp"
#include "t3dt/sampling.hpp"
#include "t3dt/series.hpp"

using namespace t3dt;

namespace {

GMatrix gmat(std::initializer_list<std::initializer_list<int>> rows) {
  GMatrix m(static_cast<Eigen::Index>(rows.size()),
            static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (int v : row) m(i, j++) = GaussianRational(Rational(v));
    ++i;
  }
  return m;
}

ZMatrix zmat(std::initializer_list<std::initializer_list<int>> rows) {
  ZMatrix m(static_cast<Eigen::Index>(rows.size()),
            static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

GradedSeries geometric_even(int hi) {  // 1/(1-t^2)
  return GradedSeries::polynomial({{0, 1}, {2, -1}}).reciprocal(hi);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4/2") == Rational(-2));
  CHECK(to_string(Rational(7, 3)) == "7/3");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
  CHECK_THROWS_AS(parse_rational(""), parse_error);
}

TEST_CASE("gaussian rational arithmetic and parsing") {
  GaussianRational i(Rational(0), Rational(1));
  CHECK(i * i == GaussianRational(-1));
  CHECK(parse_gaussian("1/2-3/4i") == GaussianRational(Rational(1, 2), Rational(-3, 4)));
  CHECK(parse_gaussian("-i") == GaussianRational(Rational(0), Rational(-1)));
  CHECK(parse_gaussian("2") == GaussianRational(2));
  CHECK(to_string(GaussianRational(Rational(1, 2), Rational(-3, 4))) == "1/2-3/4i");
  CHECK(to_string(GaussianRational(Rational(0), Rational(1))) == "i");
  // field inverse
  GaussianRational z(Rational(3), Rational(-2));
  CHECK(z / z == GaussianRational(1));
  CHECK_THROWS(z / GaussianRational(0));
}

TEST_CASE("matrix rank") {
  CHECK(mat_rank<GaussianRational>(GMatrix::Identity(2, 2)) == 2);
  CHECK(mat_rank<GaussianRational>(GMatrix::Zero(3, 4)) == 0);
  CHECK(mat_rank<GaussianRational>(gmat({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("matrix determinant") {
  for (int n = 1; n <= 4; ++n)
    CHECK(mat_det<GaussianRational>(GMatrix::Identity(n, n)) == GaussianRational(1));
  CHECK(mat_det<GaussianRational>(gmat({{2, 0}, {0, 3}})) == GaussianRational(6));
  CHECK(mat_det<GaussianRational>(gmat({{0, 1}, {1, 0}})) == GaussianRational(-1));
  CHECK_THROWS_AS(mat_det<GaussianRational>(GMatrix::Zero(2, 3)), shape_error);
}

TEST_CASE("matrix kernel") {
  CHECK(mat_kernel<GaussianRational>(GMatrix::Identity(3, 3)).empty());
  CHECK(mat_kernel<GaussianRational>(GMatrix::Zero(2, 2)).size() == 2);
  auto basis = mat_kernel<GaussianRational>(gmat({{1, 1}}));
  REQUIRE(basis.size() == 1);
  // proportional to (1, -1)
  CHECK(basis[0](0) == -basis[0](1));
  CHECK(!(basis[0](0) == GaussianRational(0)));
}

TEST_CASE("rank + kernel dimension = column count") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = rng.range(1, 5), cols = rng.range(1, 5);
    GMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = random_gaussian(rng, 3);
    CHECK(mat_rank<GaussianRational>(m) +
              static_cast<Eigen::Index>(mat_kernel<GaussianRational>(m).size()) ==
          cols);
  }
}

TEST_CASE("determinant is multiplicative") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rng.range(1, 4);
    GMatrix a(n, n), b(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        a(i, j) = random_gaussian(rng, 3);
        b(i, j) = random_gaussian(rng, 3);
      }
    CHECK(mat_det<GaussianRational>(GMatrix(a * b)) ==
          mat_det<GaussianRational>(a) * mat_det<GaussianRational>(b));
  }
}

TEST_CASE("smith normal form: pinned examples") {
  {
    SmithResult s = smith_normal_form(zmat({{2}, {2}}));
    CHECK(s.d(0, 0) == 2);
    CHECK(s.d(1, 0) == 0);  // cokernel Z + Z/2
  }
  {
    SmithResult s = smith_normal_form(ZMatrix::Identity(3, 3));
    CHECK(s.d == ZMatrix::Identity(3, 3));
  }
  {
    SmithResult s = smith_normal_form(zmat({{3}, {5}}));
    CHECK(s.d(0, 0) == 1);  // gcd(3,5) = 1, cokernel Z
    CHECK(s.d(1, 0) == 0);
  }
}

TEST_CASE("smith normal form: U A V = D, unimodular, divisibility chain") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = rng.range(1, 5), cols = rng.range(1, 5);
    ZMatrix a(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = rng.range(-6, 6);
    SmithResult s = smith_normal_form(a);
    CHECK(ZMatrix(s.u * a * s.v) == s.d);
    CHECK(abs(int_det(s.u)) == 1);
    CHECK(abs(int_det(s.v)) == 1);
    Integer prev = 0;
    for (Eigen::Index k = 0; k < std::min(s.d.rows(), s.d.cols()); ++k) {
      for (Eigen::Index i = 0; i < s.d.rows(); ++i)
        for (Eigen::Index j = 0; j < s.d.cols(); ++j)
          if (i != j) CHECK(s.d(i, j) == 0);
      Integer cur = s.d(k, k);
      CHECK(cur >= 0);
      if (prev != 0) CHECK(cur % prev == 0);
      if (prev == 0 && k > 0) CHECK(cur == 0);  // zeros trail
      prev = cur;
    }
  }
}

TEST_CASE("series product: pinned examples") {
  GradedSeries one_plus = GradedSeries::polynomial({{0, 1}, {1, 1}});
  GradedSeries one_minus = GradedSeries::polynomial({{0, 1}, {1, -1}});
  GradedSeries p = one_plus * one_minus;
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 0);
  CHECK(p.coeff(2) == -1);

  GradedSeries t_inv = GradedSeries::monomial(1, -1);
  GradedSeries t = GradedSeries::monomial(1, 1);
  GradedSeries unit = t_inv * t;
  CHECK(unit.coeff(0) == 1);
  CHECK(unit.support_min() == 0);

  // (1+t)^3 * (1/(1-t^2) truncated to t^4), expanded by hand:
  // (1+t)^2/(1-t) = 1 + 3t + 4t^2 + 4t^3 + 4t^4 + ...
  GradedSeries cube = one_plus.pow(3);
  GradedSeries prod = cube * geometric_even(4);
  CHECK(prod.known_max() >= 4);
  const int expected[5] = {1, 3, 4, 4, 4};
  for (int d = 0; d <= 4; ++d) CHECK(prod.coeff(d) == expected[d]);
}

TEST_CASE("series reciprocal: pinned examples") {
  GradedSeries g = geometric_even(8);
  for (int d = 0; d <= 8; ++d) CHECK(g.coeff(d) == ((d % 2 == 0) ? 1 : 0));

  // t(1-t) inverts to t^{-1}(1 + t + t^2 + ...)
  GradedSeries tm = GradedSeries::polynomial({{1, 1}, {2, -1}}).reciprocal(6);
  CHECK(tm.support_min() == -1);
  for (int d = -1; d <= 6; ++d) CHECK(tm.coeff(d) == 1);

  CHECK(GradedSeries::monomial(2, 0).reciprocal(4).coeff(0) == Rational(1, 2));
  CHECK_THROWS(GradedSeries::zero().reciprocal(4));
}

TEST_CASE("series windows are sound") {
  GradedSeries g = geometric_even(6);
  CHECK_THROWS_AS(g.coeff(7), window_error);
  CHECK(g.coeff(-5) == 0);  // below the support bound is known zero

  // window shifts additively under product
  GradedSeries prod = g * GradedSeries::monomial(1, -3);
  CHECK(prod.support_min() == -3);
  CHECK(prod.known_max() == 3);
  CHECK_THROWS_AS(prod.coeff(4), window_error);
}

TEST_CASE("series product is commutative and associative; reciprocal inverts") {
  SplitMix64 rng(14);
  for (int trial = 0; trial < 25; ++trial) {
    auto rand_series = [&](int lo) {
      std::vector<Rational> cs;
      int len = rng.range(3, 8);
      for (int i = 0; i < len; ++i) cs.push_back(random_rational(rng, 4));
      return GradedSeries::truncated(lo, std::move(cs));
    };
    GradedSeries a = rand_series(rng.range(-3, 1));
    GradedSeries b = rand_series(rng.range(-3, 1));
    GradedSeries c = rand_series(rng.range(-3, 1));

    GradedSeries ab = a * b, ba = b * a;
    CHECK(ab.equal_on(ba, ab.support_min(), ab.known_max()));
    GradedSeries abc1 = (a * b) * c, abc2 = a * (b * c);
    int hi = std::min(abc1.known_max(), abc2.known_max());
    CHECK(abc1.equal_on(abc2, abc1.support_min(), hi));

    GradedSeries u = rand_series(0);
    if (u.coeff(0) == 0) continue;
    GradedSeries inv = u.reciprocal(u.known_max());
    GradedSeries prod = u * inv;
    for (int d = prod.support_min(); d <= prod.known_max(); ++d)
      CHECK(prod.coeff(d) == (d == 0 ? 1 : 0));
  }
}

TEST_CASE("twist substitutes t -> t^c with optional Koszul signs") {
  GradedSeries s = GradedSeries::polynomial({{-1, 2}, {0, 5}, {1, 7}});
  GradedSeries plain = s.twist(2, false);
  CHECK(plain.coeff(-2) == 2);
  CHECK(plain.coeff(0) == 5);
  CHECK(plain.coeff(2) == 7);
  GradedSeries sign = s.twist(2, true);
  CHECK(sign.coeff(-2) == -2);  // odd degrees flip on even cycles
  CHECK(sign.coeff(0) == 5);
  CHECK(sign.coeff(2) == -7);
  GradedSeries odd = s.twist(3, true);  // odd cycles never flip
  CHECK(odd.coeff(-3) == 2);
  CHECK(odd.coeff(3) == 7);
}
