#include "t3dt/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace t3dt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int Partition::n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::map<int, int, std::greater<int>> Partition::multiplicities() const {
  std::map<int, int, std::greater<int>> m;
  for (int p : parts_) m[p]++;
  return m;
}

int Partition::gcd_of_parts() const {
  int g = 0;
  for (int p : parts_) g = std::gcd(g, p);
  return g;
}

bool operator<(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                      b.parts_.end());
}

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of requires n >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

const char* kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::GL: return "gl";
    case GroupKind::SL: return "sl";
    case GroupKind::PGL: return "pgl";
    case GroupKind::GLAdditive: return "gl_add";
  }
  return "?";
}

GroupKind kind_from_name(std::string_view s) {
  if (s == "gl") return GroupKind::GL;
  if (s == "sl") return GroupKind::SL;
  if (s == "pgl") return GroupKind::PGL;
  if (s == "gl_add" || s == "gl-add") return GroupKind::GLAdditive;
  throw parse_error("unknown group kind: " + std::string(s));
}

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

LeviDescriptor levi_descriptor(GroupKind kind, const Partition& lambda) {
  LeviDescriptor d;
  d.kind = kind;
  d.lambda = lambda;
  int l = lambda.length();
  d.dim_centre = (kind == GroupKind::SL || kind == GroupKind::PGL) ? l - 1 : l;
  d.weyl_order = 1;
  for (const auto& [part, mult] : lambda.multiplicities()) {
    (void)part;
    d.weyl_order *= factorial(mult);
  }
  return d;
}

namespace {

// Centralizer order of a cycle type in S_m: prod_i i^{a_i} a_i!.
Integer centralizer_order(const Partition& mu) {
  std::map<int, int> mult;
  for (int c : mu.parts()) mult[c]++;
  Integer z = 1;
  for (const auto& [len, a] : mult) {
    Integer p = 1;
    for (int i = 0; i < a; ++i) p *= len;
    z *= p * factorial(a);
  }
  return z;
}

}  // namespace

std::vector<CycleType> weyl_cycle_types(const Partition& lambda) {
  // One class per tuple of cycle types, one for each S_{m_j} factor.
  std::vector<std::pair<int, std::vector<Partition>>> factor_classes;
  for (const auto& [part, mult] : lambda.multiplicities())
    factor_classes.emplace_back(part, partitions_of(mult));

  std::vector<CycleType> out;
  std::vector<size_t> idx(factor_classes.size(), 0);
  while (true) {
    CycleType ct;
    ct.class_size = 1;
    for (size_t f = 0; f < factor_classes.size(); ++f) {
      const auto& [part, classes] = factor_classes[f];
      const Partition& mu = classes[idx[f]];
      ct.factors.emplace_back(part, mu);
      ct.class_size *= factorial(mu.n()) / centralizer_order(mu);
    }
    out.push_back(std::move(ct));
    size_t f = 0;
    for (; f < idx.size(); ++f) {
      if (++idx[f] < factor_classes[f].second.size()) break;
      idx[f] = 0;
    }
    if (f == idx.size()) break;
  }
  return out;
}

std::vector<int> CycleType::cycles() const {
  std::vector<int> cs;
  for (const auto& [part, mu] : factors) {
    (void)part;
    cs.insert(cs.end(), mu.parts().begin(), mu.parts().end());
  }
  return cs;
}

int CycleType::transposition_parity() const {
  int t = 0;
  for (const auto& [part, mu] : factors) {
    (void)part;
    t += mu.n() - mu.length();
  }
  return t % 2;
}

CentreStructure centre_structure(GroupKind kind, const Partition& lambda) {
  const int l = lambda.length();
  if (kind == GroupKind::GL || kind == GroupKind::GLAdditive) return {l, 1};
  if (kind == GroupKind::PGL) return {l - 1, 1};
  // SL: the centre is the kernel of x -> prod x_i^{lambda_i}, read off the
  // Smith normal form of the character-lattice column (lambda_1..lambda_l).
  ZMatrix col(l, 1);
  for (int i = 0; i < l; ++i) col(i, 0) = lambda.parts()[i];
  SmithResult snf = smith_normal_form(col);
  int nonzero = 0;
  Integer torsion = 1;
  for (int i = 0; i < std::min<Eigen::Index>(l, 1); ++i)
    if (snf.d(i, 0) != 0) {
      ++nonzero;
      torsion *= snf.d(i, 0);
    }
  return {l - nonzero, torsion};
}

ComponentGroupData component_action(const Partition& lambda) {
  ComponentGroupData data;
  data.lambda = lambda;
  data.g = lambda.empty() ? 1 : lambda.gcd_of_parts();

  // Torsion of coker(Z -> Z^l, 1 -> lambda) is generated by the class of
  // w = lambda / g. For each equal-part swap generator, express the image
  // of w as a multiple of w; the multiple mod g is the unit by which the
  // generator acts.
  const auto& parts = lambda.parts();
  const int l = lambda.length();
  std::vector<Integer> w(l);
  for (int i = 0; i < l; ++i) w[i] = Integer(parts[i]) / data.g;

  data.is_trivial = true;
  for (int i = 0; i + 1 < l; ++i) {
    if (parts[i] != parts[i + 1]) continue;  // generators only swap equal parts
    std::vector<Integer> sw = w;
    std::swap(sw[i], sw[i + 1]);
    // sw must be an integer multiple of w modulo the lattice line Z*lambda.
    // Both live on the line Q*w, so compare leading coordinates.
    int lead = 0;
    while (lead < l && w[lead] == 0) ++lead;
    if (lead == l) continue;
    if (sw[lead] % w[lead] != 0) throw std::logic_error("component action left the torsion line");
    Integer unit = sw[lead] / w[lead];
    for (int k = 0; k < l; ++k)
      if (sw[k] != unit * w[k]) throw std::logic_error("component action left the torsion line");
    Integer u = unit % data.g;
    if (u < 0) u += data.g;
    if (data.g > 1 && u != 1 % data.g) data.is_trivial = false;
    auto [it, inserted] = data.generator_units.try_emplace(parts[i], u);
    if (!inserted && it->second != u)
      throw std::logic_error("inconsistent unit images within one symmetric factor");
  }
  if (data.g <= 1) data.is_trivial = true;
  return data;
}

Integer fixed_components(const ComponentGroupData& data, const CycleType& tau) {
  // tau must describe a class of the same relative Weyl group.
  Partition check_lambda;
  {
    std::vector<int> ps;
    for (const auto& [part, mu] : tau.factors)
      for (int i = 0; i < mu.n(); ++i) ps.push_back(part);
    if (!ps.empty()) check_lambda = Partition(ps);
  }
  if (!(check_lambda == data.lambda))
    throw shape_error("cycle type " + check_lambda.str() + " does not match partition " +
                      data.lambda.str());

  const Integer& g = data.g;
  if (g == 1) return 1;
  // Image of a class representative in (Z/g)^*: product over factors of
  // the generator unit raised to the transposition count.
  Integer u = 1;
  for (const auto& [part, mu] : tau.factors) {
    int transpositions = mu.n() - mu.length();
    if (transpositions % 2 == 0) continue;
    auto it = data.generator_units.find(part);
    Integer uj = it == data.generator_units.end() ? Integer(1) : it->second;
    u = (u * uj) % g;
  }
  // #fixed points of x -> u x on (Z/g)^3 is gcd(u - 1, g)^3.
  Integer d = gcd((u - 1) % g, g);
  if (d == 0) d = g;
  return d * d * d;
}

}  // namespace t3dt
