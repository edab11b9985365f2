#include "loopforge/algebra.hpp"

namespace loopforge {

namespace {

MulTable doubled(const MulTable& sub) {
  MulTable t;
  const int n = sub.dim;
  t.dim = 2 * n;
  auto cj = [](int j) { return j == 0 ? 1 : -1; };  // sign of conj on basis unit j
  for (int i = 0; i < t.dim; ++i)
    for (int j = 0; j < t.dim; ++j) {
      if (i < n && j < n) {  // (a,0)(c,0) = (ac, 0)
        t.idx[i][j] = sub.idx[i][j];
        t.sign[i][j] = sub.sign[i][j];
      } else if (i < n) {  // (a,0)(0,d) = (0, d a)
        int jp = j - n;
        t.idx[i][j] = static_cast<int8_t>(n + sub.idx[jp][i]);
        t.sign[i][j] = sub.sign[jp][i];
      } else if (j < n) {  // (0,b)(c,0) = (0, b conj(c))
        int ip = i - n;
        t.idx[i][j] = static_cast<int8_t>(n + sub.idx[ip][j]);
        t.sign[i][j] = static_cast<int8_t>(cj(j) * sub.sign[ip][j]);
      } else {  // (0,b)(0,d) = (-conj(d) b, 0)
        int ip = i - n, jp = j - n;
        t.idx[i][j] = sub.idx[jp][ip];
        t.sign[i][j] = static_cast<int8_t>(-cj(jp) * sub.sign[jp][ip]);
      }
    }
  return t;
}

MulTable build(AlgebraTag tag) {
  MulTable t;
  t.dim = 1;
  t.idx[0][0] = 0;
  t.sign[0][0] = 1;
  for (int level = 0; level < static_cast<int>(tag); ++level) t = doubled(t);
  return t;
}

StructureTensors build_tensors(AlgebraTag tag) {
  const MulTable& tbl = MulTable::get(tag);
  StructureTensors st;
  st.tag = tag;
  st.dim = tbl.dim;
  const int d = tbl.dim;
  st.phi.assign(static_cast<size_t>(d) * d * d, 0);
  st.psi.assign(static_cast<size_t>(d) * d * d * d, 0);

  auto basis = [&](int i) { return AVec<Rational>::unit(tag, i); };

  for (int a = 1; a < d; ++a)
    for (int b = 1; b < d; ++b) {
      AVec<Rational> p = mul(tbl, basis(a), basis(b));
      for (int c = 1; c < d; ++c) {
        long v = p.c[c].get_num().get_si();
        st.phi[(a * d + b) * d + c] = static_cast<int8_t>(v);
      }
      // cross product a x b = (1/2)[e_a, e_b] = Im(e_a e_b) for a != b
      AVec<Rational> q = mul(tbl, basis(b), basis(a));
      st.cross_sign[a][b] = 0;
      st.cross_idx[a][b] = 0;
      for (int c = 1; c < d; ++c) {
        Rational half = (p.c[c] - q.c[c]) / 2;
        if (!is_zero(half)) {
          st.cross_sign[a][b] = static_cast<int8_t>(half.get_num().get_si());
          st.cross_idx[a][b] = static_cast<int8_t>(c);
        }
      }
    }

  // psi_{abcd} = (1/2) < e_a (e_b e_c) - (e_a e_b) e_c , e_d >
  for (int a = 1; a < d; ++a)
    for (int b = 1; b < d; ++b)
      for (int c = 1; c < d; ++c) {
        AVec<Rational> assoc =
            mul(tbl, basis(a), mul(tbl, basis(b), basis(c))) -
            mul(tbl, mul(tbl, basis(a), basis(b)), basis(c));
        for (int dd = 1; dd < d; ++dd) {
          Rational half = assoc.c[dd] / 2;
          st.psi[((a * d + b) * d + c) * d + dd] = static_cast<int8_t>(half.get_num().get_si());
        }
      }
  return st;
}

}  // namespace

const MulTable& MulTable::get(AlgebraTag tag) {
  static const MulTable tables[4] = {build(AlgebraTag::R), build(AlgebraTag::C),
                                     build(AlgebraTag::H), build(AlgebraTag::O)};
  return tables[static_cast<int>(tag)];
}

const StructureTensors& StructureTensors::get(AlgebraTag tag) {
  static const StructureTensors tensors[4] = {
      build_tensors(AlgebraTag::R), build_tensors(AlgebraTag::C), build_tensors(AlgebraTag::H),
      build_tensors(AlgebraTag::O)};
  return tensors[static_cast<int>(tag)];
}

}  // namespace loopforge
