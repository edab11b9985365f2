#include "loopforge/palgebra.hpp"

#include <stdexcept>

namespace loopforge {

namespace {

Matrix<Rational> left_mult_exact(AlgebraTag tag, const AVec<Rational>& q) {
  return LoopOps<Rational>(tag).left_mult_matrix(q);
}

Matrix<Rational> right_mult_exact(AlgebraTag tag, const AVec<Rational>& q) {
  return LoopOps<Rational>(tag).right_mult_matrix(q);
}

AVec<Rational> apply(const Matrix<Rational>& m, const AVec<Rational>& v, AlgebraTag tag) {
  AVec<Rational> r(tag);
  for (int i = 0; i < m.rows(); ++i) {
    Rational acc = 0;
    for (int j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) acc += m(i, j) * v.c[j];
    r.c[i] = acc;
  }
  return r;
}

// Exact pseudo-inverse (G^T G)^-1 G^T of a full-column-rank matrix.
Matrix<Rational> pinv_exact(const Matrix<Rational>& g) {
  Matrix<Rational> gt = g.transpose();
  return solve(gt * g, gt);
}

std::vector<Rational> decompose(const Matrix<Rational>& pinv, const Matrix<Rational>& m) {
  // coords = pinv * vec(m), vec in row-major order
  const int n = m.rows();
  Matrix<Rational> v(n * n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v(i * n + j, 0) = m(i, j);
  Matrix<Rational> c = pinv * v;
  std::vector<Rational> out(c.rows());
  for (int i = 0; i < c.rows(); ++i) out[i] = c(i, 0);
  return out;
}

Matrix<Rational> vectorize_basis(const std::vector<Matrix<Rational>>& basis) {
  const int n = basis[0].rows();
  Matrix<Rational> g(n * n, static_cast<int>(basis.size()));
  for (size_t k = 0; k < basis.size(); ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i * n + j, static_cast<int>(k)) = basis[k](i, j);
  return g;
}

// ---- octonion case: so(7) with the exact spin lift ----

PAlgebra build_O() {
  PAlgebra pa;
  pa.tag = AlgebraTag::O;
  pa.adim = 8;
  pa.pdim = 21;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) {
      Matrix<Rational> m(8, 8);
      m(j, i) = 1;  // E_ij : e_i -> e_j, e_j -> -e_i
      m(i, j) = -1;
      pa.vec_rep.push_back(m);
      pa.full_rep.push_back(spin_lift_exact(AlgebraTag::O, m));
    }
  pa.emb = pa.vec_rep;
  pa.emb_n = 8;

  pa.metric = Matrix<Rational>(21, 21);
  for (int k = 0; k < 21; ++k) pa.metric(k, k) = 2;  // sum_ab E_ab E_ab

  // structure constants from the vector representation
  pa.sc.assign(21, std::vector<std::vector<Rational>>(21));
  for (int a = 0; a < 21; ++a)
    for (int b = 0; b < 21; ++b) {
      Matrix<Rational> comm = pa.vec_rep[a] * pa.vec_rep[b] - pa.vec_rep[b] * pa.vec_rep[a];
      std::vector<Rational> coords;
      for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) coords.push_back(comm(j, i));
      pa.sc[a][b] = std::move(coords);
    }
  return pa;
}

// ---- complex case: u(2) acting through z -> z det(g) ----

// real 4x4 embedding of a complex 2x2 matrix with entries (re, im)
Matrix<Rational> embed_c(const Rational re[2][2], const Rational im[2][2]) {
  Matrix<Rational> m(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m(2 * i, 2 * j) = re[i][j];
      m(2 * i, 2 * j + 1) = -im[i][j];
      m(2 * i + 1, 2 * j) = im[i][j];
      m(2 * i + 1, 2 * j + 1) = re[i][j];
    }
  return m;
}

PAlgebra build_C() {
  PAlgebra pa;
  pa.tag = AlgebraTag::C;
  pa.adim = 2;
  pa.pdim = 4;

  Rational z[2][2] = {{Rational(0), Rational(0)}, {Rational(0), Rational(0)}};
  // B1 = diag(i,0), B2 = diag(0,i), B3 = [[0,1],[-1,0]], B4 = [[0,i],[i,0]]
  {
    Rational im[2][2] = {{Rational(1), Rational(0)}, {Rational(0), Rational(0)}};
    pa.emb.push_back(embed_c(z, im));
  }
  {
    Rational im[2][2] = {{Rational(0), Rational(0)}, {Rational(0), Rational(1)}};
    pa.emb.push_back(embed_c(z, im));
  }
  {
    Rational re[2][2] = {{Rational(0), Rational(1)}, {Rational(-1), Rational(0)}};
    pa.emb.push_back(embed_c(re, z));
  }
  {
    Rational im[2][2] = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    pa.emb.push_back(embed_c(z, im));
  }
  pa.emb_n = 4;

  // vector rep is trivial; full rep is right multiplication by tr(gamma)
  Matrix<Rational> rot(2, 2);
  rot(0, 1) = -1;
  rot(1, 0) = 1;  // multiplication by i on C coords
  for (int k = 0; k < 4; ++k) {
    pa.vec_rep.push_back(Matrix<Rational>(2, 2));
    pa.full_rep.push_back(k < 2 ? rot : Matrix<Rational>(2, 2));
  }

  pa.metric = Matrix<Rational>(4, 4);
  pa.metric(0, 0) = 1;
  pa.metric(1, 1) = 1;
  pa.metric(2, 2) = 2;
  pa.metric(3, 3) = 2;

  Matrix<Rational> pinv = pinv_exact(vectorize_basis(pa.emb));
  pa.sc.assign(4, std::vector<std::vector<Rational>>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Matrix<Rational> comm = pa.emb[a] * pa.emb[b] - pa.emb[b] * pa.emb[a];
      pa.sc[a][b] = decompose(pinv, comm);
    }
  return pa;
}

// ---- quaternion case: sp(2) + sp(1), full action p -> p r ----

// left-multiplication block embedding of a quaternionic 2x2 matrix on H^2=R^8
Matrix<Rational> embed_h(const AVec<Rational> q[2][2]) {
  Matrix<Rational> m(8, 8);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Matrix<Rational> l = left_mult_exact(AlgebraTag::H, q[i][j]);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) m(4 * i + a, 4 * j + b) = l(a, b);
    }
  return m;
}

PAlgebra build_H() {
  PAlgebra pa;
  pa.tag = AlgebraTag::H;
  pa.adim = 4;
  pa.pdim = 13;

  auto qzero = AVec<Rational>::zero(AlgebraTag::H);
  // sp(2): diag(u,0), diag(0,u) for u in {i,j,k}; offdiag [[0,q],[-conj q,0]]
  for (int slot = 0; slot < 2; ++slot)
    for (int u = 1; u <= 3; ++u) {
      AVec<Rational> q[2][2] = {{qzero, qzero}, {qzero, qzero}};
      q[slot][slot] = AVec<Rational>::unit(AlgebraTag::H, u);
      pa.emb.push_back(embed_h(q));
    }
  for (int u = 0; u < 4; ++u) {
    AVec<Rational> q[2][2] = {{qzero, qzero}, {qzero, qzero}};
    q[0][1] = AVec<Rational>::unit(AlgebraTag::H, u);
    q[1][0] = -conj(AVec<Rational>::unit(AlgebraTag::H, u));
    pa.emb.push_back(embed_h(q));
  }
  pa.emb_n = 8;

  // reps on the loop: sp(2) acts trivially; sp(1) coordinate xi acts by right
  // multiplication p -> p xi.
  for (int k = 0; k < 10; ++k) {
    pa.vec_rep.push_back(Matrix<Rational>(4, 4));
    pa.full_rep.push_back(Matrix<Rational>(4, 4));
  }
  for (int u = 1; u <= 3; ++u) {
    pa.vec_rep.push_back(Matrix<Rational>(4, 4));
    pa.full_rep.push_back(right_mult_exact(AlgebraTag::H, AVec<Rational>::unit(AlgebraTag::H, u)));
  }

  pa.metric = Matrix<Rational>(13, 13);
  for (int k = 0; k < 6; ++k) pa.metric(k, k) = 1;
  for (int k = 6; k < 10; ++k) pa.metric(k, k) = 2;
  for (int k = 10; k < 13; ++k) pa.metric(k, k) = 1;

  Matrix<Rational> pinv = pinv_exact(vectorize_basis(pa.emb));
  pa.sc.assign(13, std::vector<std::vector<Rational>>(13));
  const auto& cross = StructureTensors::get(AlgebraTag::H);
  for (int a = 0; a < 13; ++a)
    for (int b = 0; b < 13; ++b) {
      std::vector<Rational> coords(13, Rational(0));
      if (a < 10 && b < 10) {
        Matrix<Rational> comm = pa.emb[a] * pa.emb[b] - pa.emb[b] * pa.emb[a];
        auto sp2 = decompose(pinv, comm);
        for (int k = 0; k < 10; ++k) coords[k] = sp2[k];
      } else if (a >= 10 && b >= 10) {
        // exp(t(a,xi)) acts by right multiplication, which reverses
        // composition order, so the sp(1)-part bracket is the negative of the
        // Im H commutator in these coordinates.
        int i = a - 9, j = b - 9;  // imaginary unit indices 1..3
        if (cross.cross_sign[i][j] != 0)
          coords[9 + cross.cross_idx[i][j]] = Rational(-2 * cross.cross_sign[i][j]);
      }
      pa.sc[a][b] = std::move(coords);
    }
  return pa;
}

PAlgebra build_R() {
  PAlgebra pa;
  pa.tag = AlgebraTag::R;
  pa.adim = 1;
  pa.pdim = 0;
  pa.metric = Matrix<Rational>(0, 0);
  pa.emb_n = 1;
  return pa;
}

PAlgebra finish(PAlgebra pa) {
  if (pa.pdim > 0) {
    pa.metric_inv = solve(pa.metric, Matrix<Rational>::identity(pa.pdim));
    pa.metric_d = Matrix<double>(pa.pdim, pa.pdim);
    for (int i = 0; i < pa.pdim; ++i)
      for (int j = 0; j < pa.pdim; ++j) pa.metric_d(i, j) = to_double(pa.metric(i, j));
    if (!pa.emb.empty()) {
      Matrix<Rational> pinv = pinv_exact(vectorize_basis(pa.emb));
      pa.emb_pinv_d = Matrix<double>(pinv.rows(), pinv.cols());
      for (int i = 0; i < pinv.rows(); ++i)
        for (int j = 0; j < pinv.cols(); ++j) pa.emb_pinv_d(i, j) = to_double(pinv(i, j));
    }
    for (const auto& m : pa.vec_rep) {
      Matrix<double> d(m.rows(), m.cols());
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) d(i, j) = to_double(m(i, j));
      pa.vec_rep_d.push_back(std::move(d));
    }
    for (const auto& m : pa.full_rep) {
      Matrix<double> d(m.rows(), m.cols());
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) d(i, j) = to_double(m(i, j));
      pa.full_rep_d.push_back(std::move(d));
    }
  }
  return pa;
}

}  // namespace

Matrix<Rational> spin_lift_exact(AlgebraTag tag, const Matrix<Rational>& vec_rep_mat) {
  const int d = alg_dim(tag);
  const MulTable& tbl = MulTable::get(tag);
  LoopOps<Rational> ops(tag);

  // rebuild an adim x adim matrix if a (d-1)x(d-1) imaginary block was passed
  Matrix<Rational> m(d, d);
  if (vec_rep_mat.rows() == d - 1) {
    for (int i = 1; i < d; ++i)
      for (int j = 1; j < d; ++j) m(i, j) = vec_rep_mat(i - 1, j - 1);
  } else {
    m = vec_rep_mat;
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (m(i, j) != -m(j, i)) throw std::runtime_error("spin_lift: input not antisymmetric");

  auto mcol = [&](int j) {  // m(e_j) as an algebra element
    AVec<Rational> v(tag);
    for (int i = 1; i < d; ++i) v.c[i] = m(i, j);
    return v;
  };

  // Everything is determined by c = X(1): X(e_a) = m(e_a) + e_a c. The
  // remaining equations (u = e_a, v = e_b) are linear in c; stack them with
  // the trace-pinning row Re(c) = 0 and solve the normal equations exactly.
  const int rows = (d - 1) * (d - 1) * d + 1;
  Matrix<Rational> A(rows, d);
  Matrix<Rational> rhs(rows, 1);
  int row = 0;
  for (int a = 1; a < d; ++a)
    for (int b = 1; b < d; ++b) {
      int k = tbl.idx[a][b];
      int sign = tbl.sign[a][b];
      AVec<Rational> ea = AVec<Rational>::unit(tag, a);
      AVec<Rational> eb = AVec<Rational>::unit(tag, b);
      // coefficient matrix of c: sign * (k == 0 ? I : L_{e_k}) - L_{e_a} L_{e_b}
      Matrix<Rational> coeff =
          (k == 0 ? Matrix<Rational>::identity(d)
                  : left_mult_exact(tag, AVec<Rational>::unit(tag, k)));
      coeff = Rational(sign) * coeff;
      coeff -= left_mult_exact(tag, ea) * left_mult_exact(tag, eb);
      // right-hand side: m(e_a) e_b + e_a m(e_b) - sign * (k == 0 ? 0 : m(e_k))
      AVec<Rational> r = ops.mul(mcol(a), eb) + ops.mul(ea, mcol(b));
      if (k != 0) r -= Rational(sign) * mcol(k);
      for (int c = 0; c < d; ++c) {
        for (int col = 0; col < d; ++col) A(row, col) = coeff(c, col);
        rhs(row, 0) = r.c[c];
        ++row;
      }
    }
  A(row, 0) = 1;  // real part of c vanishes (traceless lift)
  rhs(row, 0) = 0;

  Matrix<Rational> at = A.transpose();
  Matrix<Rational> c_sol = solve(at * A, at * rhs);
  AVec<Rational> c(tag);
  for (int i = 0; i < d; ++i) c.c[i] = c_sol(i, 0);

  // Assemble X: columns X(1) = c, X(e_j) = m(e_j) + e_j c.
  Matrix<Rational> x(d, d);
  for (int i = 0; i < d; ++i) x(i, 0) = c.c[i];
  for (int j = 1; j < d; ++j) {
    AVec<Rational> col = mcol(j) + ops.mul(AVec<Rational>::unit(tag, j), c);
    for (int i = 0; i < d; ++i) x(i, j) = col.c[i];
  }

  // Verify every defining equation exactly; reject inconsistent inputs.
  for (int a = 1; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      AVec<Rational> ea = AVec<Rational>::unit(tag, a);
      AVec<Rational> eb = AVec<Rational>::unit(tag, b);
      AVec<Rational> lhs = apply(x, ops.mul(ea, eb), tag);
      AVec<Rational> rhsv = ops.mul(mcol(a), eb) + ops.mul(ea, apply(x, eb, tag));
      if (max_abs(lhs - rhsv) != 0)
        throw std::runtime_error("spin_lift: inconsistent system (input not in so(7))");
    }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (x(i, j) != -x(j, i)) throw std::runtime_error("spin_lift: lift not antisymmetric");
  return x;
}

const PAlgebra& PAlgebra::get(AlgebraTag tag) {
  static const PAlgebra algs[4] = {finish(build_R()), finish(build_C()), finish(build_H()),
                                   finish(build_O())};
  return algs[static_cast<int>(tag)];
}

}  // namespace loopforge
