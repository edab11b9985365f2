#pragma once

#include <vector>

#include "loopforge/loop.hpp"

namespace loopforge {

// The Lie algebra p of the pseudoautomorphism group for each instantiation:
//   O: so(7)  (vector rep on Im O, spin rep on O; Psi = Spin(7))
//   H: sp(2) + sp(1)  (trivial partial action; full action p -> p q)
//   C: u(2)   (trivial partial action; full action z -> z det g)
// Elements are coordinate vectors in a fixed basis. Both the representation on
// the imaginary subspace (vector rep) and on the whole algebra (full rep) are
// stored as adim x adim matrices acting on algebra coordinates; exact rational
// masters are kept alongside double copies.
struct PAlgebra {
  AlgebraTag tag = AlgebraTag::O;
  int pdim = 0;
  int adim = 0;

  std::vector<Matrix<Rational>> vec_rep;   // exact
  std::vector<Matrix<Rational>> full_rep;  // exact
  std::vector<Matrix<double>> vec_rep_d;
  std::vector<Matrix<double>> full_rep_d;

  Matrix<Rational> metric;      // pdim x pdim, positive definite, Ad-invariant
  Matrix<Rational> metric_inv;
  Matrix<double> metric_d;

  // structure constants: sc[i][j] = coordinates of [basis_i, basis_j]_p
  std::vector<std::vector<std::vector<Rational>>> sc;

  // Embedding data for gauge machinery (C: u(2) as real 4x4; H: sp(2) part as
  // real 8x8 acting on H^2). For O the vector rep itself is the embedding.
  std::vector<Matrix<Rational>> emb;       // per-basis faithful matrices (O: vec_rep)
  Matrix<double> emb_pinv_d;               // coords = pinv * vec(matrix)
  int emb_n = 0;                           // embedding matrix size

  static const PAlgebra& get(AlgebraTag tag);

  template <typename T>
  Matrix<T> combine(const std::vector<Matrix<Rational>>& reps, const std::vector<T>& coords) const {
    Matrix<T> m(reps[0].rows(), reps[0].cols());
    for (int k = 0; k < pdim; ++k) {
      if (is_zero(coords[k])) continue;
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
          double e = to_double(reps[k](i, j));
          if (e != 0.0) m(i, j) += coords[k] * T(e);
        }
    }
    return m;
  }

  Matrix<Rational> combine_exact(const std::vector<Matrix<Rational>>& reps,
                                 const std::vector<Rational>& coords) const {
    Matrix<Rational> m(reps[0].rows(), reps[0].cols());
    for (int k = 0; k < pdim; ++k) {
      if (is_zero(coords[k])) continue;
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
          if (!is_zero(reps[k](i, j))) m(i, j) += coords[k] * reps[k](i, j);
    }
    return m;
  }

  template <typename T>
  Matrix<T> vector_rep_of(const std::vector<T>& coords) const {
    return combine(vec_rep, coords);
  }
  template <typename T>
  Matrix<T> full_rep_of(const std::vector<T>& coords) const {
    return combine(full_rep, coords);
  }

  // Lie bracket in coordinates.
  template <typename T>
  std::vector<T> bracket(const std::vector<T>& x, const std::vector<T>& y) const {
    std::vector<T> r(pdim, ScalarTraits<T>::zero());
    for (int i = 0; i < pdim; ++i) {
      if (is_zero(x[i])) continue;
      for (int j = 0; j < pdim; ++j) {
        if (is_zero(y[j])) continue;
        T f = x[i] * y[j];
        for (int k = 0; k < pdim; ++k) {
          double c = to_double(sc[i][j][k]);
          if (c != 0.0) r[k] += f * T(c);
        }
      }
    }
    return r;
  }

  std::vector<Rational> bracket_exact(const std::vector<Rational>& x,
                                      const std::vector<Rational>& y) const {
    std::vector<Rational> r(pdim, Rational(0));
    for (int i = 0; i < pdim; ++i) {
      if (is_zero(x[i])) continue;
      for (int j = 0; j < pdim; ++j) {
        if (is_zero(y[j])) continue;
        for (int k = 0; k < pdim; ++k)
          if (!is_zero(sc[i][j][k])) r[k] += x[i] * y[j] * sc[i][j][k];
      }
    }
    return r;
  }

  template <typename T>
  T pairing(const std::vector<T>& x, const std::vector<T>& y) const {
    T s = ScalarTraits<T>::zero();
    for (int i = 0; i < pdim; ++i) {
      double g = to_double(metric(i, i));
      s += x[i] * y[i] * T(g);  // metric is diagonal in all three bases
    }
    return s;
  }

  // Decompose an so(7)-style antisymmetric matrix on the imaginary block into
  // coordinates (only meaningful for tag O).
  template <typename T>
  std::vector<T> so7_coords(const Matrix<T>& m) const {
    std::vector<T> c;
    c.reserve(21);
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j) c.push_back(m(j, i));
    return c;
  }

  double pairing_d(const std::vector<double>& x, const std::vector<double>& y) const {
    double s = 0;
    for (int i = 0; i < pdim; ++i) s += to_double(metric(i, i)) * x[i] * y[i];
    return s;
  }

  std::vector<double> random_element(SampleRng& rng, double amplitude = 1.0) const {
    std::vector<double> c(pdim);
    for (int i = 0; i < pdim; ++i) c[i] = rng.real_in(-amplitude, amplitude);
    return c;
  }
};

// The map phi_s(gamma) = [d/dt exp(t gamma)(s) / s]|_0, computed algebraically
// as (full_rep(gamma) s) / s. Exact over rationals.
template <typename T>
AVec<T> phi_apply(const PAlgebra& pa, const LoopOps<T>& ops, const std::vector<T>& coords,
                  const AVec<T>& s) {
  Matrix<T> g = pa.full_rep_of(coords);
  AVec<T> gs(s.tag);
  for (int i = 0; i < pa.adim; ++i) {
    T acc = ScalarTraits<T>::zero();
    for (int j = 0; j < pa.adim; ++j)
      if (!is_zero(g(i, j))) acc += g(i, j) * s.c[j];
    gs.c[i] = acc;
  }
  return ops.rdiv(gs, s);
}

// Matrix of phi_s as a map p -> l: columns are phi_s(basis_k) (imaginary
// coordinates 1..adim-1).
template <typename T>
Matrix<T> phi_matrix(const PAlgebra& pa, const LoopOps<T>& ops, const AVec<T>& s) {
  Matrix<T> m(pa.adim - 1, pa.pdim);
  for (int k = 0; k < pa.pdim; ++k) {
    std::vector<T> coords(pa.pdim, ScalarTraits<T>::zero());
    coords[k] = ScalarTraits<T>::one();
    AVec<T> v = phi_apply(pa, ops, coords, s);
    for (int a = 1; a < pa.adim; ++a) m(a - 1, k) = v.c[a];
  }
  return m;
}

// Solves the spin-lift system full(uv) = m(u) v + u full(v) for the full
// representation given an antisymmetric vector representation on the
// imaginary units. The solution is pinned by requiring zero trace; throws if
// the system is inconsistent (input not an so(7) matrix for tag O).
Matrix<Rational> spin_lift_exact(AlgebraTag tag, const Matrix<Rational>& vec_rep_mat);

}  // namespace loopforge
