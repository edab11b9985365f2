#pragma once

#include "loopforge/palgebra.hpp"

namespace loopforge {

// Right pseudoautomorphism pair (alpha, A): alpha is a linear map on the
// algebra fixing 1 and preserving the imaginary subspace, A its companion;
// the defining identity is alpha(p) . (alpha(q) A) = alpha(pq) A.
template <typename T>
struct PsPair {
  Matrix<T> alpha;
  AVec<T> comp;

  static PsPair identity(AlgebraTag tag) {
    PsPair h;
    h.alpha = Matrix<T>::identity(alg_dim(tag));
    h.comp = AVec<T>::one(tag);
    return h;
  }

  AVec<T> partial(const AVec<T>& p) const {
    AVec<T> r(p.tag);
    for (int i = 0; i < p.dim(); ++i) {
      T acc = ScalarTraits<T>::zero();
      for (int j = 0; j < p.dim(); ++j)
        if (!is_zero(alpha(i, j))) acc += alpha(i, j) * p.c[j];
      r.c[i] = acc;
    }
    return r;
  }

  AVec<T> full(const AVec<T>& p) const { return mul(partial(p), comp); }
};

// (alpha1, A1)(alpha2, A2) = (alpha1 alpha2, alpha1(A2) A1)
template <typename T>
PsPair<T> pair_compose(const PsPair<T>& h1, const PsPair<T>& h2) {
  PsPair<T> r;
  r.alpha = h1.alpha * h2.alpha;
  r.comp = mul(h1.partial(h2.comp), h1.comp);
  return r;
}

// (alpha, A)^-1 = (alpha^-1, alpha^-1(A^lambda)) with A^lambda the left inverse
template <typename T>
PsPair<T> pair_inverse(const LoopOps<T>& ops, const PsPair<T>& h) {
  PsPair<T> r;
  r.alpha = inverse(h.alpha);
  AVec<T> a_lambda = ops.rdiv(ops.one(), h.comp);
  r.comp = r.partial(a_lambda);
  return r;
}

// Max residual of alpha(e_a) . (alpha(e_b) A) - alpha(e_a e_b) A over basis
// pairs; zero iff (alpha, A) is a pseudoautomorphism pair (by bilinearity).
template <typename T>
double pair_residual(const LoopOps<T>& ops, const PsPair<T>& h) {
  double worst = 0;
  const int d = ops.dim();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      AVec<T> ea = AVec<T>::unit(ops.tag(), a);
      AVec<T> eb = AVec<T>::unit(ops.tag(), b);
      AVec<T> lhs = ops.mul(h.partial(ea), ops.mul(h.partial(eb), h.comp));
      AVec<T> rhs = ops.mul(h.partial(ops.mul(ea, eb)), h.comp);
      worst = std::max(worst, max_abs(lhs - rhs));
    }
  return worst;
}

// Ad_q with companion q^3 (exact for rational q in a Moufang loop).
template <typename T>
PsPair<T> pair_from_adq(const LoopOps<T>& ops, const AVec<T>& q) {
  PsPair<T> h;
  const int d = ops.dim();
  AVec<T> qi = inverse(q);
  h.alpha = Matrix<T>(d, d);
  for (int j = 0; j < d; ++j) {
    AVec<T> col = ops.mul(ops.mul(q, AVec<T>::unit(ops.tag(), j)), qi);
    for (int i = 0; i < d; ++i) h.alpha(i, j) = col.c[i];
  }
  h.comp = ops.mul(ops.mul(q, q), q);
  return h;
}

// Pair of a group element given as the full-representation matrix g (octonion
// case: g in Spin(7) acting on O): alpha = chi_g with chi_g(u) = g(u g^-1(1)),
// companion g(1).
template <typename T>
PsPair<T> pair_from_full_matrix(const LoopOps<T>& ops, const Matrix<T>& g) {
  const int d = ops.dim();
  Matrix<T> gi = inverse(g);
  AVec<T> gi1(ops.tag());
  for (int i = 0; i < d; ++i) gi1.c[i] = gi(i, 0);
  PsPair<T> h;
  h.alpha = Matrix<T>(d, d);
  for (int j = 0; j < d; ++j) {
    AVec<T> u = AVec<T>::unit(ops.tag(), j);
    AVec<T> arg = ops.mul(u, gi1);
    AVec<T> col(ops.tag());
    for (int i = 0; i < d; ++i) {
      T acc = ScalarTraits<T>::zero();
      for (int k = 0; k < d; ++k)
        if (!is_zero(g(i, k))) acc += g(i, k) * arg.c[k];
      col.c[i] = acc;
    }
    for (int i = 0; i < d; ++i) h.alpha(i, j) = col.c[i];
  }
  h.comp = AVec<T>(ops.tag());
  for (int i = 0; i < d; ++i) h.comp.c[i] = g(i, 0);
  return h;
}

// Group element from a p-algebra element: pair of exp(full_rep(gamma)).
// For C and H the partial action is the identity and only the companion moves.
PsPair<double> pair_exp(AlgebraTag tag, const std::vector<double>& coords);

// All companions of a linear map alpha: kernel of the stacked linear system
// alpha(e_a) . (alpha(e_b) A) - alpha(e_a e_b) A = 0 in the unknown A. Empty
// when alpha is not a right pseudoautomorphism.
std::vector<AVec<Rational>> companions_of_exact(AlgebraTag tag, const Matrix<Rational>& alpha);
std::vector<AVec<double>> companions_of(AlgebraTag tag, const Matrix<double>& alpha,
                                        double rel_tol = 1e-10);

// Infinitesimal actions of gamma in p.
//
// On the loop (partial action, Eq. style gamma . A):
//   direct: vector_rep(gamma) A
//   via phi: (R_A)_* phihat^(A) - (L_A)_* phihat^(1)  =  phi_A(gamma) A - A phi_1(gamma)
// On the tangent algebra: direct vector_rep(gamma) xi versus
//   d phihat|_1 (xi) + [phihat^(1), xi] with the derivative taken along the
//   exp flow of xi.
struct InfActionReport {
  double loop_residual = 0;   // two-path disagreement on L
  double tangent_residual = 0;  // two-path disagreement on l
};
InfActionReport infinitesimal_actions(AlgebraTag tag, const std::vector<double>& gamma,
                                      const AVec<double>& a_point, const AVec<double>& xi,
                                      uint64_t seed = 0);

// Residuals of beta(p o_r q) = beta(p) o_{h(r)} beta(q), of the transferred
// companion identity with C = h(r)/r, and of the G-set isomorphism
// h(A)/r = h_r(A/r).
struct PseudoHomReport {
  double hom_residual = 0;
  double companion_residual = 0;
  double gset_residual = 0;
};

template <typename T>
PseudoHomReport pseudo_hom_check(const LoopOps<T>& ops, const PsPair<T>& h, const AVec<T>& r,
                                    const AVec<T>& p, const AVec<T>& q, const AVec<T>& a) {
  PseudoHomReport rep;
  AVec<T> hr = h.full(r);
  AVec<T> lhs = h.partial(ops.mod_product(p, q, r));
  AVec<T> rhs = ops.mod_product(h.partial(p), h.partial(q), hr);
  rep.hom_residual = max_abs(lhs - rhs);

  // beta is a right pseudoautomorphism of (L, o_r) with companion C = h(r)/r:
  // beta(p) o_r (beta(q) o_r C) = beta(p o_r q) o_r C
  AVec<T> c = ops.rdiv(hr, r);
  AVec<T> lhs2 = ops.mod_product(h.partial(p), ops.mod_product(h.partial(q), c, r), r);
  AVec<T> rhs2 = ops.mod_product(lhs, c, r);
  rep.companion_residual = max_abs(lhs2 - rhs2);

  // h(A)/r = h_r(A/r) where h_r(x) = beta(x) o_r C
  AVec<T> lhs3 = ops.rdiv(h.full(a), r);
  AVec<T> rhs3 = ops.mod_product(h.partial(ops.rdiv(a, r)), c, r);
  rep.gset_residual = max_abs(lhs3 - rhs3);
  return rep;
}

// h(sC) = h(s) h''(C) for C in the right nucleus, h''(C) = A \ h(C).
template <typename T>
double nuclear_action_residual(const LoopOps<T>& ops, const PsPair<T>& h, const AVec<T>& s,
                               const AVec<T>& c_nucl) {
  AVec<T> lhs = h.full(mul(s, c_nucl));
  AVec<T> hpp = ops.ldiv(h.comp, h.full(c_nucl));
  AVec<T> rhs = mul(h.full(s), hpp);
  return max_abs(lhs - rhs);
}

}  // namespace loopforge
