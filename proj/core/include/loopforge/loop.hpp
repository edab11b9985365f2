#pragma once

#include <functional>
#include <string>
#include <vector>

#include "loopforge/algebra.hpp"

namespace loopforge {

// Loop operations on a composition algebra (unit sphere / invertible
// elements), parameterized by the multiplication table so corrupted-table
// fixtures exercise the same code paths. Quotients are linear solves in the
// ambient algebra rather than inverse-multiplications, which keeps them
// correct for loops without the inverse property.
template <typename T>
class LoopOps {
 public:
  explicit LoopOps(AlgebraTag tag) : tag_(tag), tbl_(&MulTable::get(tag)) {}
  LoopOps(AlgebraTag tag, const MulTable& tbl) : tag_(tag), tbl_(&tbl) {}

  AlgebraTag tag() const { return tag_; }
  int dim() const { return tbl_->dim; }
  const MulTable& table() const { return *tbl_; }

  AVec<T> mul(const AVec<T>& a, const AVec<T>& b) const { return loopforge::mul(*tbl_, a, b); }

  Matrix<T> left_mult_matrix(const AVec<T>& q) const {
    const int d = dim();
    Matrix<T> m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        // column j: q * e_j
        if (!is_zero(q.c[i])) m(tbl_->idx[i][j], j) += (tbl_->sign[i][j] < 0 ? -q.c[i] : q.c[i]);
      }
    return m;
  }

  Matrix<T> right_mult_matrix(const AVec<T>& q) const {
    const int d = dim();
    Matrix<T> m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        // column i: e_i * q
        if (!is_zero(q.c[j])) m(tbl_->idx[i][j], i) += (tbl_->sign[i][j] < 0 ? -q.c[j] : q.c[j]);
      }
    return m;
  }

  // x with q x = p
  AVec<T> ldiv(const AVec<T>& q, const AVec<T>& p) const {
    return solve_vec(left_mult_matrix(q), p);
  }

  // x with x q = p
  AVec<T> rdiv(const AVec<T>& p, const AVec<T>& q) const {
    return solve_vec(right_mult_matrix(q), p);
  }

  // p o_r q = (p . qr)/r
  AVec<T> mod_product(const AVec<T>& p, const AVec<T>& q, const AVec<T>& r) const {
    return rdiv(mul(p, mul(q, r)), r);
  }

  // p /_r q = (pr)/(qr)
  AVec<T> mod_rquot(const AVec<T>& p, const AVec<T>& q, const AVec<T>& r) const {
    return rdiv(mul(p, r), mul(q, r));
  }

  // p \_r q = (p \ (qr)) / r
  AVec<T> mod_lquot(const AVec<T>& p, const AVec<T>& q, const AVec<T>& r) const {
    return rdiv(ldiv(p, mul(q, r)), r);
  }

  // left/right inverses in (L, o_r)
  AVec<T> linv_r(const AVec<T>& q, const AVec<T>& r) const { return rdiv(r, mul(q, r)); }
  AVec<T> rinv_r(const AVec<T>& q, const AVec<T>& r) const { return rdiv(ldiv(q, r), r); }

  // [p,q,r] = (p o_r q) / (pq)
  AVec<T> loop_associator(const AVec<T>& p, const AVec<T>& q, const AVec<T>& r) const {
    return rdiv(mod_product(p, q, r), mul(p, q));
  }

  // [p,q] = (pq/p)/q
  AVec<T> loop_commutator(const AVec<T>& p, const AVec<T>& q) const {
    return rdiv(rdiv(mul(p, q), p), q);
  }

  AVec<T> one() const { return AVec<T>::one(tag_); }

 private:
  AVec<T> solve_vec(const Matrix<T>& m, const AVec<T>& rhs) const {
    const int d = dim();
    Matrix<T> b(d, 1);
    for (int i = 0; i < d; ++i) b(i, 0) = rhs.c[i];
    Matrix<T> x = solve(m, b);
    AVec<T> r(tag_);
    for (int i = 0; i < d; ++i) r.c[i] = x(i, 0);
    return r;
  }

  AlgebraTag tag_;
  const MulTable* tbl_;
};

// Basis of the right-nucleus direction space: kernel of the stacked linear
// map r -> (e_a e_b) r - e_a (e_b r) over all basis pairs. For O this is the
// real axis, so the unit-loop nucleus is {+1, -1}.
std::vector<AVec<Rational>> nucleus_basis(AlgebraTag tag, const MulTable& tbl);
inline std::vector<AVec<Rational>> nucleus_basis(AlgebraTag tag) {
  return nucleus_basis(tag, MulTable::get(tag));
}

struct IdentityCheck {
  std::string name;
  bool pass = true;
  long samples = 0;
  std::string counterexample;  // empty when pass
};

struct IdentitySuiteReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Exact pass/fail for the loop identity battery on seeded rational samples of
// invertible elements: quasigroup axioms, two-sided inverse, inverse
// properties, alternativity, flexibility, both Bol identities, power
// associativity, and Moufang-companion (Ad_q, q^3).
IdentitySuiteReport identity_suite(AlgebraTag tag, const MulTable& tbl, uint64_t seed,
                                   long samples);
inline IdentitySuiteReport identity_suite(AlgebraTag tag, uint64_t seed, long samples = 1000) {
  return identity_suite(tag, MulTable::get(tag), seed, samples);
}

// Exact check that Ad_q is a right pseudoautomorphism with companion q^3:
// q(xy)q^-1 . q^3 = (qxq^-1)(qyq^-1 . q^3).
bool adq_companion_check(const LoopOps<Rational>& ops, const AVec<Rational>& q,
                         const AVec<Rational>& x, const AVec<Rational>& y);
inline bool adq_companion_check(AlgebraTag tag, const AVec<Rational>& q, const AVec<Rational>& x,
                                const AVec<Rational>& y) {
  LoopOps<Rational> ops(tag);
  return adq_companion_check(ops, q, x, y);
}

}  // namespace loopforge
