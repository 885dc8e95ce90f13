#include "t3dt/complexes.hpp"

#include <algorithm>

namespace t3dt {

namespace {

bool is_zero(const GMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!(m(i, j) == GaussianRational(0))) return false;
  return true;
}

GMatrix commutator(const GMatrix& a, const GMatrix& b) { return GMatrix(a * b - b * a); }

}  // namespace

BasedComplex::BasedComplex(std::vector<int> dims_in, std::vector<GMatrix> diffs_in)
    : dims(std::move(dims_in)), diffs(std::move(diffs_in)) {
  if (dims.empty()) throw shape_error("complex needs at least one term");
  if (diffs.size() + 1 != dims.size())
    throw shape_error("complex with " + std::to_string(dims.size()) + " terms needs " +
                      std::to_string(dims.size() - 1) + " differentials");
  for (size_t k = 0; k < diffs.size(); ++k) {
    if (diffs[k].rows() != dims[k] || diffs[k].cols() != dims[k + 1])
      throw shape_error("differential " + std::to_string(k + 1) + " has shape " +
                        std::to_string(diffs[k].rows()) + "x" + std::to_string(diffs[k].cols()) +
                        ", expected " + std::to_string(dims[k]) + "x" +
                        std::to_string(dims[k + 1]));
  }
  for (size_t k = 0; k + 1 < diffs.size(); ++k)
    if (!is_zero(GMatrix(diffs[k] * diffs[k + 1])))
      throw shape_error("d o d != 0 between terms " + std::to_string(k + 2) + " and " +
                        std::to_string(k));
}

GMatrix BasedComplex::differential(int k) const {
  if (k >= 1 && k <= top()) return diffs[static_cast<size_t>(k) - 1];
  int rows = (k >= 1 && k - 1 <= top()) ? dims[static_cast<size_t>(k) - 1] : 0;
  int cols = (k >= 0 && k <= top()) ? dims[static_cast<size_t>(k)] : 0;
  return GMatrix::Zero(rows, cols);
}

OperatorTriple::OperatorTriple(GMatrix a, GMatrix b, GMatrix c)
    : t1(std::move(a)), t2(std::move(b)), t3(std::move(c)) {
  const GMatrix* ops[3] = {&t1, &t2, &t3};
  for (int i = 0; i < 3; ++i)
    if (ops[i]->rows() != ops[i]->cols() || ops[i]->rows() != t1.rows())
      throw shape_error("operator triple needs square matrices of equal size");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!is_zero(commutator(*ops[i], *ops[j]))) throw non_commuting_error(i + 1, j + 1);
}

GMatrix adjoint_operator(const GMatrix& x) {
  const Eigen::Index n = x.rows();
  GMatrix xi = mat_inverse(x);
  GMatrix op(n * n, n * n);
  // (X^{-1} E_{kl} X)_{ij} = X^{-1}(i,k) X(l,j)
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index l = 0; l < n; ++l) {
          GaussianRational v = xi(i, k) * x(l, j);
          if (i == k && j == l) v -= GaussianRational(1);
          op(i * n + j, k * n + l) = v;
        }
  return op;
}

namespace {

// Off-block-diagonal matrix-unit positions of lambda, ordered by
// (block row, block column, entry row, entry column).
std::vector<std::pair<Eigen::Index, Eigen::Index>> offdiag_positions(const Partition& lambda) {
  std::vector<int> block_of;
  for (int b = 0; b < lambda.length(); ++b)
    for (int i = 0; i < lambda.parts()[b]; ++i) block_of.push_back(b);
  const Eigen::Index n = static_cast<Eigen::Index>(block_of.size());
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pos;
  for (int br = 0; br < lambda.length(); ++br)
    for (int bc = 0; bc < lambda.length(); ++bc) {
      if (br == bc) continue;
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
          if (block_of[i] == br && block_of[j] == bc) pos.emplace_back(i, j);
    }
  return pos;
}

}  // namespace

GMatrix adjoint_operator(const GMatrix& x, const Partition& lambda) {
  if (lambda.n() != x.rows())
    throw shape_error("partition " + lambda.str() + " does not match matrix size " +
                      std::to_string(x.rows()));
  GMatrix xi = mat_inverse(x);
  auto pos = offdiag_positions(lambda);
  const Eigen::Index d = static_cast<Eigen::Index>(pos.size());
  GMatrix op(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) {
      auto [i, j] = pos[r];
      auto [k, l] = pos[c];
      GaussianRational v = xi(i, k) * x(l, j);
      if (i == k && j == l) v -= GaussianRational(1);
      op(r, c) = v;
    }
  return op;
}

BasedComplex build_t3_complex(const OperatorTriple& ops) {
  const Eigen::Index m = ops.size();
  const GMatrix& t1 = ops.t1;
  const GMatrix& t2 = ops.t2;
  const GMatrix& t3 = ops.t3;
  GMatrix zero = GMatrix::Zero(m, m);

  GMatrix d1(m, 3 * m);  // slots map by t_1, t_2, t_3
  d1 << t1, t2, t3;

  GMatrix d2(3 * m, 3 * m);
  d2 << -t2, -t3, zero,
        t1, zero, -t3,
        zero, t1, t2;

  GMatrix d3(3 * m, m);  // v -> t_1 v_3 - t_2 v_2 + t_3 v_1
  d3 << t3, -t2, t1;

  return BasedComplex({static_cast<int>(m), static_cast<int>(3 * m), static_cast<int>(3 * m),
                       static_cast<int>(m)},
                      {std::move(d1), std::move(d2), std::move(d3)});
}

std::vector<int> cohomology_ranks(const BasedComplex& c) {
  std::vector<int> ranks(c.dims.size() + 1, 0);
  for (int k = 1; k <= c.top(); ++k)
    ranks[static_cast<size_t>(k)] = static_cast<int>(mat_rank<GaussianRational>(c.differential(k)));
  std::vector<int> h(c.dims.size());
  for (int k = 0; k <= c.top(); ++k)
    h[static_cast<size_t>(k)] =
        c.dims[static_cast<size_t>(k)] - ranks[static_cast<size_t>(k)] -
        (k + 1 <= c.top() ? ranks[static_cast<size_t>(k) + 1] : 0);
  return h;
}

namespace {

// Indices of a lexicographically-first column subset of d whose images
// are independent (the greedy pivot choice of b_k).
std::vector<Eigen::Index> pivot_columns(const GMatrix& d) {
  GMatrix w = d;
  std::vector<Eigen::Index> pivots;
  detail::echelonize<GaussianRational>(w, &pivots, nullptr);
  return pivots;
}

GMatrix unit_columns(int dim, const std::vector<Eigen::Index>& idx) {
  GMatrix b = GMatrix::Zero(dim, static_cast<Eigen::Index>(idx.size()));
  for (size_t c = 0; c < idx.size(); ++c) b(idx[c], static_cast<Eigen::Index>(c)) = 1;
  return b;
}

}  // namespace

GaussianRational torsion_with_basis(const BasedComplex& c, const std::vector<GMatrix>& b,
                                    const std::optional<std::vector<GMatrix>>& h_reps) {
  const int m = c.top();
  if (static_cast<int>(b.size()) != m + 1)
    throw shape_error("torsion needs one b-block per term");

  std::vector<int> rank_d(static_cast<size_t>(m) + 2, 0);
  for (int k = 1; k <= m; ++k)
    rank_d[static_cast<size_t>(k)] = static_cast<int>(mat_rank<GaussianRational>(c.differential(k)));

  std::vector<int> h(static_cast<size_t>(m) + 1, 0);
  for (int k = 0; k <= m; ++k) {
    h[static_cast<size_t>(k)] = c.dims[static_cast<size_t>(k)] - rank_d[static_cast<size_t>(k)] -
                                rank_d[static_cast<size_t>(k) + 1];
    if (h[static_cast<size_t>(k)] < 0) throw std::logic_error("negative homology dimension");
  }

  if (!h_reps) {
    for (int k = 0; k <= m; ++k)
      if (h[static_cast<size_t>(k)] != 0)
        throw std::domain_error("complex is not acyclic (H_" + std::to_string(k) +
                                " has dimension " + std::to_string(h[static_cast<size_t>(k)]) +
                                "); homology representatives are required");
  } else {
    if (static_cast<int>(h_reps->size()) != m + 1)
      throw shape_error("torsion needs one representative block per term");
    for (int k = 0; k <= m; ++k) {
      const GMatrix& hk = (*h_reps)[static_cast<size_t>(k)];
      if (hk.cols() != h[static_cast<size_t>(k)] ||
          (hk.cols() > 0 && hk.rows() != c.dims[static_cast<size_t>(k)]))
        throw shape_error("representative block " + std::to_string(k) + " has wrong shape");
      if (hk.cols() > 0 && !is_zero(GMatrix(c.differential(k) * hk)))
        throw shape_error("representatives in degree " + std::to_string(k) + " are not cycles");
    }
  }

  // [c : h] = prod_k det[ d(b_{k+1}) h_k b_k ]^{(-1)^{k+1}}
  GaussianRational num(1), den(1);
  for (int k = 0; k <= m; ++k) {
    const int dim = c.dims[static_cast<size_t>(k)];
    const int r_in = rank_d[static_cast<size_t>(k) + 1];
    const int r_out = rank_d[static_cast<size_t>(k)];
    const int hk = h[static_cast<size_t>(k)];
    GMatrix a(dim, dim);
    Eigen::Index col = 0;
    if (r_in > 0) {
      const GMatrix& bk1 = b[static_cast<size_t>(k) + 1];
      if (bk1.cols() != r_in || bk1.rows() != c.dims[static_cast<size_t>(k) + 1])
        throw shape_error("b-block " + std::to_string(k + 1) + " has wrong shape");
      a.block(0, col, dim, r_in) = c.differential(k + 1) * bk1;
      col += r_in;
    }
    if (hk > 0) {
      a.block(0, col, dim, hk) = (*h_reps)[static_cast<size_t>(k)];
      col += hk;
    }
    if (r_out > 0) {
      const GMatrix& bk = b[static_cast<size_t>(k)];
      if (bk.cols() != r_out || bk.rows() != dim)
        throw shape_error("b-block " + std::to_string(k) + " has wrong shape");
      a.block(0, col, dim, r_out) = bk;
      col += r_out;
    }
    if (col != dim) throw std::logic_error("torsion basis assembly mismatch");
    GaussianRational det = dim == 0 ? GaussianRational(1) : mat_det<GaussianRational>(a);
    if (det == GaussianRational(0))
      throw std::domain_error("assembled basis in degree " + std::to_string(k) +
                              " is singular; b-choice or representatives are invalid");
    if ((k + 1) % 2 == 0)
      num *= det;
    else
      den *= det;
  }

  // N(C) = sum_k alpha_k beta_k with partial dimension sums mod 2.
  int n_sign = 0, alpha = 0, beta = 0;
  for (int k = 0; k <= m; ++k) {
    alpha = (alpha + c.dims[static_cast<size_t>(k)]) % 2;
    beta = (beta + h[static_cast<size_t>(k)]) % 2;
    n_sign = (n_sign + alpha * beta) % 2;
  }

  GaussianRational result = num / den;
  return n_sign ? -result : result;
}

GaussianRational torsion(const BasedComplex& c,
                         const std::optional<std::vector<GMatrix>>& h_reps) {
  std::vector<GMatrix> b;
  for (int k = 0; k <= c.top(); ++k)
    b.push_back(unit_columns(c.dims[static_cast<size_t>(k)],
                             k >= 1 ? pivot_columns(c.differential(k)) : std::vector<Eigen::Index>{}));
  return torsion_with_basis(c, b, h_reps);
}

std::array<GMatrix, 3> potential_gradient(const GMatrix& x, const GMatrix& y, const GMatrix& z) {
  const GMatrix* ms[3] = {&x, &y, &z};
  for (int i = 0; i < 3; ++i)
    if (ms[i]->rows() != ms[i]->cols() || ms[i]->rows() != x.rows())
      throw shape_error("potential gradient needs square matrices of equal size");
  return {commutator(y, z), commutator(z, x), commutator(x, y)};
}

}  // namespace t3dt
