#include "loopforge/pseudoauto.hpp"

#include "loopforge/fdiff.hpp"

namespace loopforge {

PsPair<double> pair_exp(AlgebraTag tag, const std::vector<double>& coords) {
  const PAlgebra& pa = PAlgebra::get(tag);
  LoopOps<double> ops(tag);
  if (tag == AlgebraTag::O) {
    Matrix<double> g = mat_exp(pa.full_rep_of(coords));
    return pair_from_full_matrix(ops, g);
  }
  // C and H: partial action is the identity; the companion is the exponential
  // of the full-rep generator applied to 1.
  PsPair<double> h = PsPair<double>::identity(tag);
  Matrix<double> g = mat_exp(pa.full_rep_of(coords));
  for (int i = 0; i < pa.adim; ++i) h.comp.c[i] = g(i, 0);
  return h;
}

namespace {

template <typename T, typename Vec>
std::vector<Vec> companions_impl(AlgebraTag tag, const Matrix<T>& alpha,
                                 std::vector<std::vector<T>> (*kernel)(Matrix<T>)) {
  LoopOps<T> ops(tag);
  const int d = ops.dim();
  Matrix<T> m(d * d * d, d);
  int row = 0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      AVec<T> aea(tag), aeb(tag), aeab(tag);
      for (int i = 0; i < d; ++i) {
        aea.c[i] = alpha(i, a);
        aeb.c[i] = alpha(i, b);
      }
      AVec<T> eab = ops.mul(AVec<T>::unit(tag, a), AVec<T>::unit(tag, b));
      for (int i = 0; i < d; ++i) {
        T acc = ScalarTraits<T>::zero();
        for (int j = 0; j < d; ++j)
          if (!is_zero(alpha(i, j))) acc += alpha(i, j) * eab.c[j];
        aeab.c[i] = acc;
      }
      // alpha(e_a) . (alpha(e_b) A) - alpha(e_a e_b) A as a matrix in A
      Matrix<T> block = ops.left_mult_matrix(aea) * ops.left_mult_matrix(aeb) -
                        ops.left_mult_matrix(aeab);
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) m(row, j) = block(i, j);
        ++row;
      }
    }
  auto basis = kernel(std::move(m));
  std::vector<Vec> out;
  for (const auto& v : basis) {
    Vec b(tag);
    for (int i = 0; i < d; ++i) b.c[i] = v[i];
    out.push_back(b);
  }
  return out;
}

std::vector<std::vector<Rational>> kernel_exact(Matrix<Rational> m) { return nullspace_exact(m); }

}  // namespace

std::vector<AVec<Rational>> companions_of_exact(AlgebraTag tag, const Matrix<Rational>& alpha) {
  return companions_impl<Rational, AVec<Rational>>(tag, alpha, &kernel_exact);
}

std::vector<AVec<double>> companions_of(AlgebraTag tag, const Matrix<double>& alpha,
                                        double rel_tol) {
  LoopOps<double> ops(tag);
  const int d = ops.dim();
  Matrix<double> m(d * d * d, d);
  int row = 0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      AVec<double> aea(tag), aeb(tag), aeab(tag);
      for (int i = 0; i < d; ++i) {
        aea.c[i] = alpha(i, a);
        aeb.c[i] = alpha(i, b);
      }
      AVec<double> eab = ops.mul(AVec<double>::unit(tag, a), AVec<double>::unit(tag, b));
      for (int i = 0; i < d; ++i) {
        double acc = 0;
        for (int j = 0; j < d; ++j) acc += alpha(i, j) * eab.c[j];
        aeab.c[i] = acc;
      }
      Matrix<double> block = ops.left_mult_matrix(aea) * ops.left_mult_matrix(aeb) -
                             ops.left_mult_matrix(aeab);
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) m(row, j) = block(i, j);
        ++row;
      }
    }
  auto basis = nullspace_double(m, rel_tol);
  std::vector<AVec<double>> out;
  for (const auto& v : basis) {
    AVec<double> b(tag);
    for (int i = 0; i < d; ++i) b.c[i] = v[i];
    out.push_back(b);
  }
  return out;
}

InfActionReport infinitesimal_actions(AlgebraTag tag, const std::vector<double>& gamma,
                                      const AVec<double>& a_point, const AVec<double>& xi,
                                      uint64_t /*seed*/) {
  const PAlgebra& pa = PAlgebra::get(tag);
  LoopOps<double> ops(tag);
  InfActionReport rep;

  // --- action on the loop at point A ---
  // direct path: d/dt exp(t gamma)'(A) = vector_rep(gamma) A
  Matrix<double> vr = pa.vector_rep_of(gamma);
  AVec<double> direct(tag);
  for (int i = 0; i < pa.adim; ++i) {
    double acc = 0;
    for (int j = 0; j < pa.adim; ++j) acc += vr(i, j) * a_point.c[j];
    direct.c[i] = acc;
  }
  // via phi: phi_A(gamma) A - A phi_1(gamma)
  AVec<double> phiA = phi_apply(pa, ops, gamma, a_point);
  AVec<double> phi1 = phi_apply(pa, ops, gamma, ops.one());
  AVec<double> via_phi = ops.mul(phiA, a_point) - ops.mul(a_point, phi1);
  rep.loop_residual = max_abs(direct - via_phi);

  // --- action on the tangent algebra at s = 1 ---
  // direct: vector_rep(gamma) xi
  AVec<double> dxi(tag);
  for (int i = 0; i < pa.adim; ++i) {
    double acc = 0;
    for (int j = 0; j < pa.adim; ++j) acc += vr(i, j) * xi.c[j];
    dxi.c[i] = acc;
  }
  // formula: d gammahat|_1 (xi) + [gammahat^(1), xi]
  auto curve = [&](double t) {
    AVec<double> s = alg_exp(t * xi);
    AVec<double> v = phi_apply(pa, ops, gamma, s);
    std::vector<double> out(pa.adim);
    for (int i = 0; i < pa.adim; ++i) out[i] = v.c[i];
    return out;
  };
  DiffConfig cfg;
  auto der = fd_derivative(curve, 0.0, cfg);
  AVec<double> dgh(tag);
  for (int i = 0; i < pa.adim; ++i) dgh.c[i] = der.value[i];
  AVec<double> formula = dgh + alg_commutator(phi1, xi);
  rep.tangent_residual = max_abs(dxi - formula);
  return rep;
}

}  // namespace loopforge
