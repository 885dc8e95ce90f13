#include "t3dt/sampling.hpp"

#include <set>

namespace t3dt {

Rational random_rational(SplitMix64& rng, int bound) {
  int num = rng.range(-bound, bound);
  int den = rng.range(1, bound);
  return frac(num, den);
}

Rational random_nonzero_rational(SplitMix64& rng, int bound) {
  for (;;) {
    Rational q = random_rational(rng, bound);
    if (q != 0) return q;
  }
}

GaussianRational random_gaussian(SplitMix64& rng, int bound) {
  return {random_rational(rng, bound), random_rational(rng, bound)};
}

std::array<GMatrix, 3> generic_diagonal_monodromy(const Partition& lambda, SplitMix64& rng) {
  const int l = lambda.length();
  const int n = lambda.n();
  for (;;) {
    std::vector<std::array<Rational, 3>> blocks(static_cast<size_t>(l));
    for (auto& b : blocks)
      for (auto& v : b) v = random_nonzero_rational(rng);
    std::set<std::array<Rational, 3>> distinct(blocks.begin(), blocks.end());
    if (static_cast<int>(distinct.size()) != l) continue;

    std::array<GMatrix, 3> xs;
    for (int c = 0; c < 3; ++c) {
      GMatrix x = GMatrix::Zero(n, n);
      int row = 0;
      for (int b = 0; b < l; ++b)
        for (int i = 0; i < lambda.parts()[b]; ++i, ++row)
          x(row, row) = GaussianRational(blocks[static_cast<size_t>(b)][static_cast<size_t>(c)]);
      xs[static_cast<size_t>(c)] = std::move(x);
    }
    return xs;
  }
}

OperatorTriple random_commuting_triple(int n, SplitMix64& rng) {
  GMatrix x(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) x(i, j) = GaussianRational(Rational(rng.range(-2, 2)));
  auto poly = [&](const GMatrix& m) {
    GMatrix acc = GMatrix::Identity(n, n);
    GMatrix out = GMatrix::Zero(n, n);
    for (int d = 0; d <= 2; ++d) {
      Rational c(rng.range(-2, 2));
      out += acc * GaussianRational(c);
      acc = GMatrix(acc * m);
    }
    return out;
  };
  return OperatorTriple(poly(x), poly(x), poly(x));
}

namespace {

GMatrix random_invertible(int n, SplitMix64& rng) {
  for (;;) {
    GMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = GaussianRational(Rational(rng.range(-3, 3)));
    if (!(mat_det<GaussianRational>(m) == GaussianRational(0))) return m;
  }
}

}  // namespace

BasedComplex random_acyclic_complex(SplitMix64& rng, int terms, int max_rank) {
  // dims[k] = r_k + r_{k+1} with r_0 = r_{terms} = 0; the split
  // differential [I 0; 0 0] conjugated by random changes of basis.
  std::vector<int> r(static_cast<size_t>(terms) + 1, 0);
  for (int k = 1; k < terms; ++k) r[static_cast<size_t>(k)] = rng.range(0, max_rank);
  std::vector<int> dims(static_cast<size_t>(terms));
  for (int k = 0; k < terms; ++k)
    dims[static_cast<size_t>(k)] = r[static_cast<size_t>(k)] + r[static_cast<size_t>(k) + 1];

  std::vector<GMatrix> basis;
  for (int d : dims) basis.push_back(random_invertible(d, rng));

  std::vector<GMatrix> diffs;
  for (int k = 1; k < terms; ++k) {
    // split d_k : C_k -> C_{k-1} hits the r_k block
    GMatrix d = GMatrix::Zero(dims[static_cast<size_t>(k) - 1], dims[static_cast<size_t>(k)]);
    int off_row = r[static_cast<size_t>(k) - 1];
    for (int i = 0; i < r[static_cast<size_t>(k)]; ++i) d(off_row + i, i) = 1;
    diffs.push_back(GMatrix(mat_inverse(basis[static_cast<size_t>(k) - 1]) * d *
                            basis[static_cast<size_t>(k)]));
  }
  return BasedComplex(std::move(dims), std::move(diffs));
}

std::vector<GMatrix> random_torsion_basis(const BasedComplex& c, SplitMix64& rng) {
  std::vector<GMatrix> b;
  for (int k = 0; k <= c.top(); ++k) {
    GMatrix d = c.differential(k);
    int rank = static_cast<int>(mat_rank<GaussianRational>(d));
    const int dim = c.dims[static_cast<size_t>(k)];
    for (;;) {
      GMatrix cand(dim, rank);
      for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < rank; ++j)
          cand(i, j) = GaussianRational(Rational(rng.range(-3, 3)));
      if (rank == 0 || static_cast<int>(mat_rank<GaussianRational>(GMatrix(d * cand))) == rank) {
        b.push_back(std::move(cand));
        break;
      }
    }
  }
  return b;
}

EigenList random_eigenlist(SplitMix64& rng, int n) {
  EigenList e;
  for (int i = 0; i < n; ++i) {
    // small pool so that collisions and etale violations actually occur
    GaussianRational a(Rational(rng.range(0, 2)), Rational(rng.range(0, 1)));
    Rational s = frac(rng.range(-4, 4), rng.range(1, 3));
    e.push_back({a, s});
  }
  return e;
}

SymPoint random_sl_point_off_bad_locus(int n, SplitMix64& rng) {
  for (;;) {
    std::vector<TorusTriple> triples;
    std::array<Rational, 3> total{0, 0, 0};
    for (int i = 0; i + 1 < n; ++i) {
      TorusTriple t;
      for (int c = 0; c < 3; ++c) {
        Rational theta = frac(rng.range(0, 23), 24);
        t[static_cast<size_t>(c)] = TorusElem(1, theta);
        total[static_cast<size_t>(c)] += theta;
      }
      triples.push_back(t);
    }
    TorusTriple last;
    for (int c = 0; c < 3; ++c) last[static_cast<size_t>(c)] = TorusElem(1, -total[static_cast<size_t>(c)]);
    triples.push_back(last);

    std::set<TorusTriple> distinct(triples.begin(), triples.end());
    if (static_cast<int>(distinct.size()) != n) continue;
    SymPoint p(GroupKind::SL, triples);
    if (is_bad_point(p, n)) continue;
    return p;
  }
}

SymPoint random_stratified_point(const Partition& lambda, SplitMix64& rng) {
  for (;;) {
    std::vector<TorusTriple> blocks;
    for (int b = 0; b < lambda.length(); ++b) {
      TorusTriple t;
      for (int c = 0; c < 3; ++c)
        t[static_cast<size_t>(c)] =
            TorusElem(Rational(rng.range(1, 5)), frac(rng.range(0, 11), 12));
      blocks.push_back(t);
    }
    std::set<TorusTriple> distinct(blocks.begin(), blocks.end());
    if (static_cast<int>(distinct.size()) != lambda.length()) continue;

    std::vector<TorusTriple> triples;
    for (int b = 0; b < lambda.length(); ++b)
      for (int i = 0; i < lambda.parts()[b]; ++i) triples.push_back(blocks[static_cast<size_t>(b)]);
    return SymPoint(GroupKind::GL, std::move(triples));
  }
}

}  // namespace t3dt
