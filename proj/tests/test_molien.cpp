#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "t3dt/molien.hpp"

using namespace t3dt;

namespace {

GradedSeries poly(std::initializer_list<std::pair<const int, Rational>> cs) {
  return GradedSeries::polynomial(std::map<int, Rational>(cs));
}

const CycleType& class_with_cycles(const std::vector<CycleType>& cts,
                                   const std::vector<int>& want) {
  for (const auto& ct : cts) {
    auto cs = ct.cycles();
    std::sort(cs.begin(), cs.end());
    auto w = want;
    std::sort(w.begin(), w.end());
    if (cs == w) return ct;
  }
  throw std::logic_error("no class with the requested cycles");
}

}  // namespace

TEST_CASE("cycle factors for GL at lambda = (1,1)") {
  LeviDescriptor levi = levi_descriptor(GroupKind::GL, Partition({1, 1}));
  auto cts = weyl_cycle_types(levi.lambda);
  const int hi = 12;

  // identity class: t^{-4} (1+t)^6 / (1-t^2)^2
  GradedSeries expect_id = (poly({{0, 1}, {1, 1}}).pow(6) *
                            poly({{0, 1}, {2, -1}}).reciprocal(hi + 8).pow(2))
                               .shifted(-4);
  GradedSeries got_id = cycle_factor(levi, class_with_cycles(cts, {1, 1}), hi);
  CHECK(got_id.equal_on(expect_id, -4, hi));

  // transposition class: t^{-4} (1+t^2)^3 / (1-t^4)
  GradedSeries expect_tau =
      (poly({{0, 1}, {2, 1}}).pow(3) * poly({{0, 1}, {4, -1}}).reciprocal(hi + 8)).shifted(-4);
  GradedSeries got_tau = cycle_factor(levi, class_with_cycles(cts, {2}), hi);
  CHECK(got_tau.equal_on(expect_tau, -4, hi));
}

TEST_CASE("cycle factor for the additive single block") {
  for (int n : {1, 2, 5}) {
    LeviDescriptor levi = levi_descriptor(GroupKind::GLAdditive, Partition({n}));
    auto cts = weyl_cycle_types(levi.lambda);
    REQUIRE(cts.size() == 1);
    GradedSeries got = cycle_factor(levi, cts[0], 10);
    GradedSeries expect = poly({{0, 1}, {2, -1}}).reciprocal(14).shifted(-2);
    CHECK(got.equal_on(expect, -2, 10));
  }
}

TEST_CASE("window too small for the shift is rejected") {
  LeviDescriptor levi = levi_descriptor(GroupKind::GL, Partition({1, 1}));
  auto cts = weyl_cycle_types(levi.lambda);
  CHECK_THROWS_AS(cycle_factor(levi, cts[0], -5), window_error);
}

TEST_CASE("graded invariants: low-order values for GL (1,1)") {
  GradedSeries s = graded_invariants(levi_descriptor(GroupKind::GL, Partition({1, 1})), 10);
  CHECK(s.coeff(-4) == 1);
  CHECK(s.coeff(-3) == 3);
}

TEST_CASE("graded invariants: SL and PGL single blocks are constants") {
  for (int n : {2, 3, 5}) {
    GradedSeries sl = graded_invariants(levi_descriptor(GroupKind::SL, Partition({n})), 8);
    CHECK(sl.coeff(0) == Rational(Integer(n) * n * n));
    for (int d = sl.support_min(); d <= 8; ++d)
      if (d != 0) CHECK(sl.coeff(d) == 0);

    GradedSeries pgl = graded_invariants(levi_descriptor(GroupKind::PGL, Partition({n})), 8);
    CHECK(pgl.coeff(0) == 1);
    for (int d = pgl.support_min(); d <= 8; ++d)
      if (d != 0) CHECK(pgl.coeff(d) == 0);
  }
}

TEST_CASE("GL single block closed form") {
  for (int n : {1, 2, 4}) {
    GradedSeries s = graded_invariants(levi_descriptor(GroupKind::GL, Partition({n})), 12);
    CHECK(s.equal_on(kind_block(GroupKind::GL, 12), -2, 12));
  }
}

TEST_CASE("character of degree: the rank-two table") {
  Partition lambda({1, 1});
  auto cts = weyl_cycle_types(lambda);
  size_t id = 0, tau = 0;
  for (size_t i = 0; i < cts.size(); ++i)
    (cts[i].cycles() == std::vector<int>{1, 1} ? id : tau) = i;

  auto d2 = character_of_degree(lambda, 2);
  CHECK(d2[id] == 1);  // trivial
  CHECK(d2[tau] == 1);
  auto d4 = character_of_degree(lambda, 4);
  CHECK(d4[id] == 2);  // permutation
  CHECK(d4[tau] == 0);
  auto d6 = character_of_degree(lambda, 6);
  CHECK(d6[id] == 3);  // permutation + trivial
  CHECK(d6[tau] == 1);

  CHECK_THROWS(character_of_degree(lambda, 3));
}

TEST_CASE("character at the identity counts monomials") {
  for (int n = 1; n <= 5; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      auto cts = weyl_cycle_types(lambda);
      const int l = lambda.length();
      for (int d = 2; d <= 12; d += 2) {
        auto chars = character_of_degree(lambda, d);
        for (size_t i = 0; i < cts.size(); ++i) {
          if (cts[i].cycles() != std::vector<int>(static_cast<size_t>(l), 1)) continue;
          // monomials of degree (d-2)/2 in l variables
          int k = (d - 2) / 2;
          Integer expect = 1;
          for (int j = 1; j <= k; ++j) expect = expect * (k + l - j) / j;
          // the product above is C(k+l-1, k) computed stepwise
          CHECK(chars[i] == Rational(expect));
        }
      }
    }
}

TEST_CASE("graded invariants match the brute-force oracle") {
  const int hi = 10;
  for (int n = 1; n <= 8; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      if (levi_descriptor(GroupKind::GL, lambda).weyl_order > 120) continue;
      for (GroupKind kind :
           {GroupKind::GL, GroupKind::SL, GroupKind::PGL, GroupKind::GLAdditive}) {
        LeviDescriptor levi = levi_descriptor(kind, lambda);
        for (Parity parity : {Parity::Shifted, Parity::Unshifted}) {
          GradedSeries fast = graded_invariants(levi, hi, parity);
          GradedSeries brute = molien_bruteforce(levi, hi, parity);
          INFO("kind " << kind_name(kind) << " lambda " << lambda.str() << " parity "
                       << parity_name(parity));
          CHECK(fast.equal_on(brute, fast.support_min(), hi));
        }
      }
    }
}

TEST_CASE("invariant series coefficients are nonnegative integers") {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (GroupKind kind :
           {GroupKind::GL, GroupKind::SL, GroupKind::PGL, GroupKind::GLAdditive})
        for (Parity parity : {Parity::Shifted, Parity::Unshifted}) {
          GradedSeries s = graded_invariants(levi_descriptor(kind, lambda), 8, parity);
          for (int d = s.support_min(); d <= 8; ++d) {
            INFO("kind " << kind_name(kind) << " lambda " << lambda.str() << " degree " << d);
            CHECK(is_integer(s.coeff(d)));
            CHECK(s.coeff(d) >= 0);
          }
        }
}

TEST_CASE("brute force rejects oversized groups") {
  CHECK_THROWS_AS(
      molien_bruteforce(levi_descriptor(GroupKind::GL, Partition(std::vector<int>(9, 1))), 4),
      std::domain_error);
}
