#include "t3dt/molien.hpp"

#include <algorithm>
#include <numeric>

namespace t3dt {

const char* parity_name(Parity p) { return p == Parity::Shifted ? "shifted" : "unshifted"; }

Parity parity_from_name(std::string_view s) {
  if (s == "shifted") return Parity::Shifted;
  if (s == "unshifted") return Parity::Unshifted;
  throw parse_error("unknown parity convention: " + std::string(s));
}

GradedSeries kind_block(GroupKind kind, int hi) {
  GradedSeries geom = GradedSeries::polynomial({{0, 1}, {2, -1}}).reciprocal(hi + 2);
  if (kind == GroupKind::GLAdditive) return geom.shifted(-2).restricted(-2, hi);
  if (kind != GroupKind::GL) throw std::invalid_argument("kind_block: GL or GL_additive only");
  GradedSeries cube = GradedSeries::polynomial({{0, 1}, {1, 3}, {2, 3}, {3, 1}});
  return (cube * geom).shifted(-2).restricted(-2, hi);
}

namespace {

// fix . [prod_c twist_c(block)] . (SL/PGL correction), over the cycles of
// one explicit element or class. The correction t^2 (1-t^2)/(1+t)^3
// removes the split-off one-dimensional trivial summand of the centre.
//
// For SL/PGL the twists always carry the Koszul signs: the split-off
// complement has no permuted basis, so only the honestly signed action
// has traces there (the sign-free reading would make some invariant
// "dimensions" negative). The parity choice only affects the
// tensor-power kinds, where both sign assignments are consistent.
GradedSeries assemble_factor(GroupKind kind, const std::vector<int>& cycles, int l, int hi,
                             Parity parity, const Rational& fix) {
  const bool koszul = parity == Parity::Unshifted || kind == GroupKind::SL ||
                      kind == GroupKind::PGL;
  const int pad = hi + 2 * l + 6;
  GroupKind block_kind = kind == GroupKind::GLAdditive ? GroupKind::GLAdditive : GroupKind::GL;
  GradedSeries block = kind_block(block_kind, pad);
  GradedSeries prod = GradedSeries::one();
  for (int c : cycles) prod = prod * block.twist(c, koszul);
  if (kind == GroupKind::SL || kind == GroupKind::PGL) {
    GradedSeries corr = GradedSeries::polynomial({{0, 1}, {2, -1}}) *
                        GradedSeries::polynomial({{0, 1}, {1, 3}, {2, 3}, {3, 1}}).reciprocal(pad);
    prod = prod * corr.shifted(2);
  }
  prod = fix * prod;
  return prod.restricted(prod.support_min(), hi);
}

}  // namespace

GradedSeries cycle_factor(const LeviDescriptor& levi, const CycleType& tau, int hi, Parity parity) {
  const int l = levi.lambda.length();
  const int shift = -2 * levi.dim_centre;
  if (hi < shift)
    throw window_error("requested window ends at " + std::to_string(hi) +
                       ", above the shift degree " + std::to_string(shift));
  Rational fix = 1;
  if (levi.kind == GroupKind::SL)
    fix = Rational(fixed_components(component_action(levi.lambda), tau));
  return assemble_factor(levi.kind, tau.cycles(), l, hi, parity, fix);
}

GradedSeries graded_invariants(const LeviDescriptor& levi, int hi, Parity parity) {
  GradedSeries sum = GradedSeries::zero();
  for (const CycleType& tau : weyl_cycle_types(levi.lambda))
    sum += Rational(tau.class_size) * cycle_factor(levi, tau, hi, parity);
  return frac(1, levi.weyl_order) * sum;
}

std::vector<Rational> character_of_degree(const Partition& lambda, int d) {
  if (d < 0 || d % 2 != 0) throw std::invalid_argument("character_of_degree requires even d >= 0");
  std::vector<Rational> out;
  for (const CycleType& tau : weyl_cycle_types(lambda)) {
    GradedSeries s = GradedSeries::one();
    for (int c : tau.cycles())
      s = s * GradedSeries::polynomial({{0, 1}, {2 * c, -1}}).reciprocal(d);
    out.push_back(d >= 2 ? s.coeff(d - 2) : Rational(0));
  }
  return out;
}

namespace {

// det(I - s P) from the characteristic polynomial of P, with s = sign * t^step.
GradedSeries det_one_minus(const std::vector<Integer>& charpoly, int sign, int step) {
  const int l = static_cast<int>(charpoly.size()) - 1;
  std::map<int, Rational> coeffs;
  for (int k = 0; k <= l; ++k) {
    Integer c = charpoly[k];
    if ((l - k) % 2 != 0 && sign < 0) c = -c;
    coeffs[(l - k) * step] = Rational(c);
  }
  return GradedSeries::polynomial(coeffs);
}

std::vector<int> cycle_lengths(const std::vector<int>& perm) {
  std::vector<int> lens;
  std::vector<bool> seen(perm.size(), false);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<size_t>(perm[j]);
      ++len;
    }
    lens.push_back(len);
  }
  return lens;
}

}  // namespace

GradedSeries molien_bruteforce(const LeviDescriptor& levi, int hi, Parity parity) {
  if (levi.weyl_order > 10000) throw std::domain_error("molien_bruteforce: group too large");
  const int l = levi.lambda.length();
  const int pad = hi + 2 * l + 6;
  const bool koszul = parity == Parity::Unshifted;

  // Factor the slot set by part size; elements are tuples of permutations.
  struct Factor {
    int part;
    std::vector<int> slots;
    std::vector<std::vector<int>> perms;
  };
  std::vector<Factor> factors;
  {
    std::map<int, std::vector<int>, std::greater<int>> by_size;
    const auto& parts = levi.lambda.parts();
    for (int i = 0; i < l; ++i) by_size[parts[i]].push_back(i);
    for (auto& [part, slots] : by_size) {
      Factor f;
      f.part = part;
      f.slots = slots;
      std::vector<int> p(slots.size());
      std::iota(p.begin(), p.end(), 0);
      do {
        f.perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      factors.push_back(std::move(f));
    }
  }

  ComponentGroupData comp;
  if (levi.kind == GroupKind::SL) comp = component_action(levi.lambda);

  GradedSeries sum = GradedSeries::zero();
  std::vector<size_t> idx(factors.size(), 0);
  Integer count = 0;
  while (true) {
    // Assemble the block permutation matrix of this element.
    ZMatrix p = ZMatrix::Zero(l, l);
    for (size_t f = 0; f < factors.size(); ++f) {
      const Factor& fac = factors[f];
      const auto& perm = fac.perms[idx[f]];
      for (size_t s = 0; s < fac.slots.size(); ++s)
        p(fac.slots[perm[s]], fac.slots[s]) = 1;
    }
    std::vector<Integer> cp = char_poly(p);
    GradedSeries pm = det_one_minus(cp, +1, 1);    // det(I - tP)
    GradedSeries pm2 = det_one_minus(cp, +1, 2);   // det(I - t^2 P)
    GradedSeries poly_part = pm2.reciprocal(pad);  // symmetric generators, degree 2

    GradedSeries elem;
    if (levi.kind == GroupKind::GLAdditive) {
      elem = poly_part.shifted(-2 * l);
    } else {
      const bool signs = koszul || levi.kind == GroupKind::SL || levi.kind == GroupKind::PGL;
      GradedSeries ext = signs ? det_one_minus(cp, -1, 1)  // det(I + tP)
                               : pm2 * pm.reciprocal(pad);
      elem = (ext.pow(3) * poly_part).shifted(-2 * l);
      if (levi.kind == GroupKind::SL || levi.kind == GroupKind::PGL) {
        GradedSeries corr =
            GradedSeries::polynomial({{0, 1}, {2, -1}}) *
            GradedSeries::polynomial({{0, 1}, {1, 3}, {2, 3}, {3, 1}}).reciprocal(pad);
        elem = elem * corr.shifted(2);
        if (levi.kind == GroupKind::SL) {
          // Fixed components of this element, via its cycle type.
          std::vector<std::pair<int, Partition>> tf;
          for (size_t f = 0; f < factors.size(); ++f) {
            auto lens = cycle_lengths(factors[f].perms[idx[f]]);
            tf.emplace_back(factors[f].part, Partition(lens));
          }
          CycleType tau;
          tau.factors = std::move(tf);
          tau.class_size = 1;
          elem = Rational(fixed_components(comp, tau)) * elem;
        }
      }
    }
    sum += elem;
    count += 1;

    size_t f = 0;
    for (; f < factors.size(); ++f) {
      if (++idx[f] < factors[f].perms.size()) break;
      idx[f] = 0;
    }
    if (f == factors.size()) break;
  }
  if (count != levi.weyl_order) throw std::logic_error("bruteforce enumeration miscounted");
  GradedSeries avg = frac(1, levi.weyl_order) * sum;
  return avg.restricted(avg.support_min(), hi);
}

}  // namespace t3dt
