#include "t3dt/moduli.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "t3dt/integrality.hpp"

namespace t3dt {

SymPoint::SymPoint(GroupKind kind_in, std::vector<TorusTriple> triples_in)
    : kind(kind_in), triples(std::move(triples_in)) {
  if (kind != GroupKind::GL && kind != GroupKind::SL)
    throw std::invalid_argument("SymPoint kind must be GL or SL");
  if (triples.empty()) throw std::invalid_argument("SymPoint needs at least one triple");
  std::sort(triples.begin(), triples.end());
  if (kind == GroupKind::SL) {
    for (int c = 0; c < 3; ++c) {
      Rational r_prod = 1;
      Rational theta_sum = 0;
      for (const auto& t : triples) {
        r_prod *= t[c].r;
        theta_sum += t[c].theta;
      }
      if (r_prod != 1 || mod_one(theta_sum) != 0)
        throw std::domain_error("SL point fails the determinant-one constraint in coordinate " +
                                std::to_string(c + 1));
    }
  }
}

namespace {

// Distinct triples of p with multiplicities, in sorted order.
std::vector<std::pair<TorusTriple, int>> grouped_triples(const SymPoint& p) {
  std::vector<std::pair<TorusTriple, int>> groups;
  for (const auto& t : p.triples) {
    if (!groups.empty() && groups.back().first == t)
      groups.back().second++;
    else
      groups.emplace_back(t, 1);
  }
  return groups;
}

}  // namespace

Partition stratum_of(const SymPoint& p) {
  std::vector<int> mults;
  for (const auto& [t, m] : grouped_triples(p)) {
    (void)t;
    mults.push_back(m);
  }
  return Partition(mults);
}

bool is_generic(const SymPoint& p) {
  auto groups = grouped_triples(p);
  for (int c = 0; c < 3; ++c) {
    std::set<TorusElem> vals;
    for (const auto& [t, m] : groups) {
      (void)m;
      vals.insert(t[c]);
    }
    if (vals.size() == groups.size()) return true;  // coordinate c separates the blocks
  }
  return false;
}

std::vector<std::vector<TorusTriple>> theta_fiber(const SymPoint& p, const Partition& lambda) {
  if (!(stratum_of(p) == lambda))
    throw shape_error("point lies in stratum " + stratum_of(p).str() + ", not " + lambda.str());
  auto groups = grouped_triples(p);

  // Slot i takes a distinct triple of multiplicity lambda_i; within each
  // part size the assignment is free, giving prod m_j! ordered tuples.
  std::map<int, std::vector<int>> slots_by_size;   // part size -> slot indices
  std::map<int, std::vector<int>> groups_by_size;  // part size -> group indices
  for (int i = 0; i < lambda.length(); ++i) slots_by_size[lambda.parts()[i]].push_back(i);
  for (size_t gi = 0; gi < groups.size(); ++gi)
    groups_by_size[groups[gi].second].push_back(static_cast<int>(gi));

  std::vector<std::vector<TorusTriple>> fibers;
  std::vector<std::vector<int>> perms_per_size;
  std::vector<int> sizes;
  for (auto& [size, slots] : slots_by_size) {
    sizes.push_back(size);
    std::vector<int> perm(slots.size());
    std::iota(perm.begin(), perm.end(), 0);
    perms_per_size.push_back(std::move(perm));
  }

  std::vector<std::vector<std::vector<int>>> all_perms(sizes.size());
  for (size_t s = 0; s < sizes.size(); ++s) {
    std::vector<int> perm = perms_per_size[s];
    do {
      all_perms[s].push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::vector<size_t> idx(sizes.size(), 0);
  while (true) {
    std::vector<TorusTriple> tuple(static_cast<size_t>(lambda.length()));
    for (size_t s = 0; s < sizes.size(); ++s) {
      const auto& slots = slots_by_size[sizes[s]];
      const auto& gidx = groups_by_size[sizes[s]];
      const auto& perm = all_perms[s][idx[s]];
      for (size_t k = 0; k < slots.size(); ++k)
        tuple[static_cast<size_t>(slots[k])] = groups[static_cast<size_t>(gidx[perm[k]])].first;
    }
    fibers.push_back(std::move(tuple));
    size_t s = 0;
    for (; s < sizes.size(); ++s) {
      if (++idx[s] < all_perms[s].size()) break;
      idx[s] = 0;
    }
    if (s == sizes.size()) break;
  }
  return fibers;
}

namespace {

// Sorted multiset of one coordinate of all triples.
std::vector<TorusElem> coordinate_multiset(const SymPoint& p, int c) {
  std::vector<TorusElem> vals;
  for (const auto& t : p.triples) vals.push_back(t[c]);
  std::sort(vals.begin(), vals.end());
  return vals;
}

// The Weyl orbit of diag(1, w, ..., w^{n-1}) (times i for n = 2) as a
// sorted eigenvalue multiset.
std::vector<TorusElem> special_multiset(int n) {
  std::vector<TorusElem> vals;
  for (int k = 0; k < n; ++k) {
    TorusElem v = root_of_unity(k, n);
    if (n == 2) v = v * root_of_unity(1, 4);  // i * diag(1, -1)
    vals.push_back(v);
  }
  std::sort(vals.begin(), vals.end());
  return vals;
}

bool is_central_multiset(const std::vector<TorusElem>& vals, int n) {
  // zeta I with zeta^n = 1
  for (size_t i = 1; i < vals.size(); ++i)
    if (vals[i] != vals[0]) return false;
  if (vals[0].r != 1) return false;
  Rational turns = vals[0].theta * n;
  return is_integer(turns);
}

}  // namespace

bool is_bad_point(const SymPoint& p, int n) {
  if (!is_prime(n)) throw std::domain_error("bad locus is defined for prime n");
  if (p.kind != GroupKind::SL) throw std::invalid_argument("bad locus lives in the SL moduli");
  if (p.n() != n) throw shape_error("point rank does not match n");
  auto special = special_multiset(n);
  bool any_special = false;
  for (int c = 0; c < 3; ++c) {
    auto vals = coordinate_multiset(p, c);
    bool in_special = vals == special;
    bool in_centre = is_central_multiset(vals, n);
    if (in_special) any_special = true;
    if (!in_special && !in_centre) return false;
  }
  return any_special;
}

int sl_pgl_fiber(const SymPoint& p, int n) {
  if (!is_prime(n)) throw std::domain_error("sl_pgl_fiber is defined for prime n");
  if (p.kind != GroupKind::SL) throw std::invalid_argument("sl_pgl_fiber needs an SL point");
  std::set<std::vector<TorusTriple>> orbit;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        std::vector<TorusTriple> scaled = p.triples;
        for (auto& t : scaled) {
          t[0] = t[0] * root_of_unity(a, n);
          t[1] = t[1] * root_of_unity(b, n);
          t[2] = t[2] * root_of_unity(c, n);
        }
        std::sort(scaled.begin(), scaled.end());
        orbit.insert(std::move(scaled));
      }
  return static_cast<int>(orbit.size());
}

Integer eta2_fiber_size(const SymPoint& q, int n) {
  if (n < 1) throw std::invalid_argument("eta2_fiber_size requires n >= 1");
  // Per coordinate, the n-th roots of the determinant have arguments
  // (theta_det + k)/n; they are pairwise distinct, so each of the n^3
  // index choices yields a distinct (SL point, scalar triple) pair.
  for (int c = 0; c < 3; ++c) {
    Rational theta_det = 0;
    for (const auto& t : q.triples) theta_det += t[c].theta;
    std::set<Rational> args;
    for (int k = 0; k < n; ++k) args.insert(mod_one((mod_one(theta_det) + k) / n));
    if (static_cast<int>(args.size()) != n)
      throw std::logic_error("root arguments collided");  // cannot happen
  }
  return Integer(n) * n * n;
}

namespace {

struct RowReducer {
  std::array<Integer, 3> w;
  ZMatrix m = ZMatrix::Identity(3, 3);

  // row i -= q * row j
  void sub(int i, int j, const Integer& q) {
    w[static_cast<size_t>(i)] -= q * w[static_cast<size_t>(j)];
    m.row(i) -= q * m.row(j);
  }
  // (row i, row j) -> (row j, -row i), determinant 1
  void swap_sign(int i, int j) {
    std::swap(w[static_cast<size_t>(i)], w[static_cast<size_t>(j)]);
    w[static_cast<size_t>(j)] = -w[static_cast<size_t>(j)];
    ZMatrix tmp = m.row(i);
    m.row(i) = m.row(j);
    m.row(j) = -tmp;
  }
  void negate_pair(int i, int j) {
    w[static_cast<size_t>(i)] = -w[static_cast<size_t>(i)];
    w[static_cast<size_t>(j)] = -w[static_cast<size_t>(j)];
    m.row(i) = -m.row(i);
    m.row(j) = -m.row(j);
  }

  // Euclid on (w_i, w_j) until w_j = 0.
  void reduce_pair(int i, int j) {
    while (w[static_cast<size_t>(j)] != 0) {
      Integer q = w[static_cast<size_t>(i)] / w[static_cast<size_t>(j)];
      sub(i, j, q);
      swap_sign(i, j);
    }
  }
};

}  // namespace

TwistedNormalForm twisted_normal_form(const std::array<Integer, 3>& v, int n) {
  if (n < 1) throw std::invalid_argument("twisted_normal_form requires n >= 1");
  RowReducer red;
  for (int i = 0; i < 3; ++i) {
    Integer r = v[static_cast<size_t>(i)] % n;
    if (r < 0) r += n;
    red.w[static_cast<size_t>(i)] = r;
  }
  red.reduce_pair(0, 1);
  red.reduce_pair(0, 2);
  if (red.w[0] < 0) red.negate_pair(0, 1);

  TwistedNormalForm out;
  out.form = {red.w[0], 0, 0};
  out.witness = red.m;
  return out;
}

TwistedComponentData twisted_component_data(int n) {
  if (!is_prime(n)) throw std::domain_error("twisted components are computed for prime n");
  Integer count = Integer(n) * n * n - 1;

  if (n <= 3) {
    // Saturate {nonzero classes} under the elementary SL_3(Z/n)
    // generators; a single orbit must come out.
    auto encode = [n](const std::array<int, 3>& v) { return (v[0] * n + v[1]) * n + v[2]; };
    std::set<int> seen;
    std::vector<std::array<int, 3>> queue = {{1, 0, 0}};
    seen.insert(encode({1, 0, 0}));
    while (!queue.empty()) {
      auto v = queue.back();
      queue.pop_back();
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          for (int s : {1, n - 1}) {  // E_ij(+1), E_ij(-1)
            auto w = v;
            w[static_cast<size_t>(i)] = (w[static_cast<size_t>(i)] + s * w[static_cast<size_t>(j)]) % n;
            if (seen.insert(encode(w)).second) queue.push_back(w);
          }
        }
    }
    if (Integer(static_cast<long>(seen.size())) != count)
      throw std::logic_error("twisted classes do not form a single orbit at n = " +
                             std::to_string(n));
  }

  TwistedComponentData data;
  data.count = count;
  data.contribution = GradedSeries::monomial(Rational(count), 0);
  return data;
}

}  // namespace t3dt
