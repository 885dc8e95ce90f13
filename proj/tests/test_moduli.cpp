#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "t3dt/moduli.hpp"
#include "t3dt/sampling.hpp"

using namespace t3dt;

namespace {

TorusTriple triple(Rational r1, Rational t1, Rational r2, Rational t2, Rational r3, Rational t3) {
  return {TorusElem(std::move(r1), std::move(t1)), TorusElem(std::move(r2), std::move(t2)),
          TorusElem(std::move(r3), std::move(t3))};
}

TorusTriple unit_triple(Rational t1, Rational t2, Rational t3) {
  return triple(1, std::move(t1), 1, std::move(t2), 1, std::move(t3));
}

SymPoint sl2_bad_point() {
  // (I, I, diag(i, -i))
  return SymPoint(GroupKind::SL, {unit_triple(0, 0, Rational(1, 4)),
                                  unit_triple(0, 0, Rational(3, 4))});
}

}  // namespace

TEST_CASE("torus elements canonicalize the argument") {
  CHECK(TorusElem(1, Rational(5, 4)).theta == Rational(1, 4));
  CHECK(TorusElem(1, Rational(-1, 4)).theta == Rational(3, 4));
  CHECK((root_of_unity(1, 4) * root_of_unity(3, 4)).is_one());
  CHECK_THROWS(TorusElem(0, 0));
  CHECK_THROWS(TorusElem(-1, 0));
}

TEST_CASE("sym points enforce the SL constraint") {
  CHECK_NOTHROW(SymPoint(GroupKind::SL, {triple(2, 0, 1, 0, 1, 0), triple(Rational(1, 2), 0, 1, 0, 1, 0)}));
  CHECK_THROWS_AS(SymPoint(GroupKind::SL, {triple(2, 0, 1, 0, 1, 0), triple(3, 0, 1, 0, 1, 0)}),
                  std::domain_error);
  CHECK_NOTHROW(SymPoint(GroupKind::GL, {triple(2, 0, 3, 0, 5, 0)}));
}

TEST_CASE("strata") {
  SymPoint a(GroupKind::SL, {triple(2, 0, 1, 0, 1, 0), triple(Rational(1, 2), 0, 1, 0, 1, 0)});
  CHECK(stratum_of(a) == Partition({1, 1}));

  for (int n : {2, 3, 4}) {
    std::vector<TorusTriple> same(static_cast<size_t>(n), unit_triple(0, 0, 0));
    CHECK(stratum_of(SymPoint(GroupKind::GL, same)) == Partition({n}));
  }

  SymPoint b(GroupKind::GL,
             {triple(2, 0, 3, 0, 5, 0), triple(2, 0, 3, 0, 5, 0), triple(7, 0, 3, 0, 5, 0)});
  CHECK(stratum_of(b) == Partition({2, 1}));

  // a coordinate with all-distinct values forces the finest stratum
  SymPoint c(GroupKind::GL,
             {triple(2, 0, 1, 0, 1, 0), triple(3, 0, 1, 0, 1, 0), triple(5, 0, 1, 0, 1, 0)});
  CHECK(stratum_of(c) == Partition({1, 1, 1}));
}

TEST_CASE("genericity") {
  // the rank-three point whose three coordinates all fail to separate
  SymPoint nongeneric(GroupKind::GL, {triple(2, 0, 3, 0, 7, 0), triple(2, 0, 3, 0, 11, 0),
                                      triple(2, 0, 5, 0, 11, 0)});
  CHECK(stratum_of(nongeneric) == Partition({1, 1, 1}));
  CHECK_FALSE(is_generic(nongeneric));

  SymPoint separated(GroupKind::GL, {triple(2, 0, 1, 0, 1, 0), triple(3, 0, 1, 0, 1, 0)});
  CHECK(is_generic(separated));

  std::vector<TorusTriple> same(3, unit_triple(0, 0, 0));
  CHECK(is_generic(SymPoint(GroupKind::GL, same)));  // single block, vacuous
}

TEST_CASE("theta fibers: pinned sizes") {
  SplitMix64 rng(41);
  {
    SymPoint p = random_stratified_point(Partition({2, 2, 1, 1}), rng);
    CHECK(theta_fiber(p, Partition({2, 2, 1, 1})).size() == 4);
  }
  {
    SymPoint p = random_stratified_point(Partition({3, 1}), rng);
    CHECK(theta_fiber(p, Partition({3, 1})).size() == 1);
  }
  {
    SymPoint p = random_stratified_point(Partition({1, 1}), rng);
    CHECK(theta_fiber(p, Partition({1, 1})).size() == 2);
  }
  {
    SymPoint p = random_stratified_point(Partition({2, 1}), rng);
    CHECK_THROWS_AS(theta_fiber(p, Partition({1, 1, 1})), shape_error);
  }
}

TEST_CASE("theta fibers have the Weyl order, expand to the point, and are distinct tuples") {
  SplitMix64 rng(42);
  for (int n = 1; n <= 5; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      LeviDescriptor levi = levi_descriptor(GroupKind::GL, lambda);
      for (int sample = 0; sample < 5; ++sample) {
        SymPoint p = random_stratified_point(lambda, rng);
        auto fiber = theta_fiber(p, lambda);
        CHECK(Integer(static_cast<long>(fiber.size())) == levi.weyl_order);
        std::set<std::vector<TorusTriple>> distinct(fiber.begin(), fiber.end());
        CHECK(distinct.size() == fiber.size());
        for (const auto& tuple : fiber) {
          std::vector<TorusTriple> expanded;
          for (int b = 0; b < lambda.length(); ++b)
            for (int i = 0; i < lambda.parts()[b]; ++i) expanded.push_back(tuple[static_cast<size_t>(b)]);
          CHECK(SymPoint(GroupKind::GL, expanded) ==
                SymPoint(GroupKind::GL, p.triples));
        }
      }
    }
}

TEST_CASE("bad locus membership") {
  CHECK(is_bad_point(sl2_bad_point(), 2));

  SplitMix64 rng(43);
  SymPoint generic = random_sl_point_off_bad_locus(2, rng);
  CHECK_FALSE(is_bad_point(generic, 2));

  std::vector<TorusTriple> central(2, unit_triple(0, 0, 0));
  CHECK_FALSE(is_bad_point(SymPoint(GroupKind::SL, central), 2));  // nothing in A_S

  CHECK_THROWS_AS(is_bad_point(sl2_bad_point(), 4), std::domain_error);
}

TEST_CASE("SL to PGL fibers") {
  SplitMix64 rng(44);
  for (int sample = 0; sample < 10; ++sample)
    CHECK(sl_pgl_fiber(random_sl_point_off_bad_locus(2, rng), 2) == 8);
  for (int sample = 0; sample < 5; ++sample)
    CHECK(sl_pgl_fiber(random_sl_point_off_bad_locus(3, rng), 3) == 27);

  // derived enumeration at the bad point: the orbit collapses to 4
  CHECK(sl_pgl_fiber(sl2_bad_point(), 2) == 4);
}

TEST_CASE("the orbit drops strictly below n^3 on every bad point") {
  // rank 2: coordinates drawn from A_S and the centre, at least one A_S
  TorusTriple as2_a = unit_triple(Rational(1, 4), 0, 0);
  TorusTriple as2_b = unit_triple(Rational(3, 4), 0, 0);
  std::vector<SymPoint> bad2;
  bad2.push_back(sl2_bad_point());
  bad2.emplace_back(GroupKind::SL, std::vector<TorusTriple>{as2_a, as2_b});  // (A_S, I, I)
  bad2.emplace_back(GroupKind::SL,
                    std::vector<TorusTriple>{unit_triple(Rational(1, 4), Rational(1, 4), Rational(1, 2)),
                                             unit_triple(Rational(3, 4), Rational(3, 4), Rational(1, 2))});
  for (const SymPoint& p : bad2) {
    REQUIRE(is_bad_point(p, 2));
    CHECK(sl_pgl_fiber(p, 2) < 8);
  }

  // rank 3: (I, I, diag(1, w, w^2))
  SymPoint bad3(GroupKind::SL, {unit_triple(0, 0, 0), unit_triple(0, 0, Rational(1, 3)),
                                unit_triple(0, 0, Rational(2, 3))});
  REQUIRE(is_bad_point(bad3, 3));
  CHECK(sl_pgl_fiber(bad3, 3) == 9);
}

TEST_CASE("eta2 cover degree is always n^3") {
  SplitMix64 rng(45);
  SymPoint gl2 = random_stratified_point(Partition({1, 1}), rng);
  CHECK(eta2_fiber_size(gl2, 2) == 8);
  SymPoint gl1 = random_stratified_point(Partition({1}), rng);
  CHECK(eta2_fiber_size(gl1, 1) == 1);
  SymPoint gl3 = random_stratified_point(Partition({1, 1, 1}), rng);
  CHECK(eta2_fiber_size(gl3, 3) == 27);
  for (int n = 1; n <= 4; ++n)
    CHECK(eta2_fiber_size(random_stratified_point(Partition({2, 1}), rng), n) ==
          Integer(n) * n * n);
}

TEST_CASE("twisted normal forms: pinned examples") {
  {
    auto nf = twisted_normal_form({1, 0, 0}, 5);
    CHECK(nf.form == std::array<Integer, 3>{1, 0, 0});
    CHECK(nf.witness == ZMatrix::Identity(3, 3));
  }
  {
    auto nf = twisted_normal_form({2, 4, 6}, 9);
    CHECK(nf.form == std::array<Integer, 3>{2, 0, 0});
    CHECK(int_det(nf.witness) == 1);
    // witness congruence mod 9
    ZMatrix v(3, 1);
    v << 2, 4, 6;
    ZMatrix w = nf.witness * v;
    CHECK((w(0, 0) - 2) % 9 == 0);
    CHECK(w(1, 0) % 9 == 0);
    CHECK(w(2, 0) % 9 == 0);
  }
  {
    auto nf = twisted_normal_form({0, 0, 0}, 7);
    CHECK(nf.form == std::array<Integer, 3>{0, 0, 0});
  }
}

TEST_CASE("twisted normal forms: witness properties at random") {
  SplitMix64 rng(46);
  for (int n = 2; n <= 9; ++n)
    for (int trial = 0; trial < 15; ++trial) {
      std::array<Integer, 3> v = {rng.range(0, n - 1), rng.range(0, n - 1), rng.range(0, n - 1)};
      auto nf = twisted_normal_form(v, n);
      CHECK(int_det(nf.witness) == 1);
      Integer g = gcd(gcd(v[0], v[1]), v[2]);
      CHECK(nf.form[0] == g);
      CHECK(nf.form[1] == 0);
      CHECK(nf.form[2] == 0);
      ZMatrix col(3, 1);
      col << v[0], v[1], v[2];
      ZMatrix w = nf.witness * col;
      for (int i = 0; i < 3; ++i) {
        Integer diff = w(i, 0) - nf.form[static_cast<size_t>(i)];
        CHECK(diff % n == 0);
      }
    }
}

TEST_CASE("twisted component data") {
  auto d2 = twisted_component_data(2);
  CHECK(d2.count == 7);
  CHECK(d2.contribution.coeff(0) == 7);
  CHECK(d2.contribution.coeff(1) == 0);

  auto d3 = twisted_component_data(3);
  CHECK(d3.count == 26);
  CHECK(d3.contribution.coeff(0) == 26);

  CHECK_THROWS_AS(twisted_component_data(4), std::domain_error);
}
