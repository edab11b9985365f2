#include <sstream>

#include "loopforge/loop.hpp"
#include "loopforge/util.hpp"

namespace loopforge {

namespace {

std::string show(const AVec<Rational>& v) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < v.dim(); ++i) {
    if (i) os << ",";
    os << v.c[i].get_str();
  }
  os << ")";
  return os.str();
}

bool equal(const AVec<Rational>& a, const AVec<Rational>& b) {
  for (int i = 0; i < a.dim(); ++i)
    if (a.c[i] != b.c[i]) return false;
  return true;
}

}  // namespace

std::vector<AVec<Rational>> nucleus_basis(AlgebraTag tag, const MulTable& tbl) {
  const int d = tbl.dim;
  LoopOps<Rational> ops(tag, tbl);
  // Rows: (a, b, out-coordinate); columns: coordinate of r.
  Matrix<Rational> m(d * d * d, d);
  int row = 0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      for (int dd = 0; dd < d; ++dd) {
        AVec<Rational> ea = AVec<Rational>::unit(tag, a);
        AVec<Rational> eb = AVec<Rational>::unit(tag, b);
        AVec<Rational> ed = AVec<Rational>::unit(tag, dd);
        AVec<Rational> diff = ops.mul(ops.mul(ea, eb), ed) - ops.mul(ea, ops.mul(eb, ed));
        for (int c = 0; c < d; ++c) m(row + c, dd) = diff.c[c];
      }
      row += d;
    }
  auto kernel = nullspace_exact(m);
  std::vector<AVec<Rational>> basis;
  for (const auto& v : kernel) {
    AVec<Rational> b(tag);
    for (int i = 0; i < d; ++i) b.c[i] = v[i];
    basis.push_back(b);
  }
  return basis;
}

IdentitySuiteReport identity_suite(AlgebraTag tag, const MulTable& tbl, uint64_t seed,
                                   long samples) {
  LoopOps<Rational> ops(tag, tbl);
  SampleRng rng(seed);
  IdentitySuiteReport report;

  struct Item {
    std::string name;
    std::function<bool(const AVec<Rational>&, const AVec<Rational>&, const AVec<Rational>&)> check;
  };
  const AVec<Rational> one = ops.one();

  auto linv = [&](const AVec<Rational>& q) { return ops.rdiv(one, q); };   // q^lambda = 1/q
  auto rinv = [&](const AVec<Rational>& q) { return ops.ldiv(q, one); };   // q^rho = q\1

  std::vector<Item> items = {
      {"quasigroup-lquot", [&](const auto& p, const auto& q, const auto&) {
         return equal(ops.mul(q, ops.ldiv(q, p)), p) && equal(ops.ldiv(q, ops.mul(q, p)), p);
       }},
      {"quasigroup-rquot", [&](const auto& p, const auto& q, const auto&) {
         return equal(ops.mul(ops.rdiv(p, q), q), p) && equal(ops.rdiv(ops.mul(p, q), q), p);
       }},
      {"two-sided-inverse", [&](const auto& p, const auto&, const auto&) {
         return equal(linv(p), rinv(p));
       }},
      {"right-inverse-property", [&](const auto& p, const auto& q, const auto&) {
         return equal(ops.mul(ops.mul(p, q), rinv(q)), p);
       }},
      {"left-inverse-property", [&](const auto& p, const auto& q, const auto&) {
         return equal(ops.mul(linv(p), ops.mul(p, q)), q);
       }},
      {"left-alternative", [&](const auto& p, const auto& q, const auto&) {
         return equal(ops.mul(ops.mul(p, p), q), ops.mul(p, ops.mul(p, q)));
       }},
      {"right-alternative", [&](const auto& p, const auto& q, const auto&) {
         return equal(ops.mul(q, ops.mul(p, p)), ops.mul(ops.mul(q, p), p));
       }},
      {"flexible", [&](const auto& p, const auto& q, const auto&) {
         return equal(ops.mul(p, ops.mul(q, p)), ops.mul(ops.mul(p, q), p));
       }},
      {"left-bol", [&](const auto& p, const auto& q, const auto& r) {
         return equal(ops.mul(p, ops.mul(q, ops.mul(p, r))),
                      ops.mul(ops.mul(p, ops.mul(q, p)), r));
       }},
      {"right-bol", [&](const auto& p, const auto& q, const auto& r) {
         return equal(ops.mul(ops.mul(ops.mul(p, q), r), q),
                      ops.mul(p, ops.mul(ops.mul(q, r), q)));
       }},
      {"power-associative", [&](const auto& p, const auto&, const auto&) {
         // all parenthesizations of p^4 agree
         auto p2 = ops.mul(p, p);
         auto a = ops.mul(ops.mul(p2, p), p);
         auto b = ops.mul(p2, p2);
         auto c = ops.mul(p, ops.mul(p, p2));
         return equal(a, b) && equal(b, c);
       }},
      {"moufang-companion-q3", [&](const auto& q, const auto& x, const auto& y) {
         return adq_companion_check(ops, q, x, y);
       }},
  };

  for (auto& item : items) {
    IdentityCheck c;
    c.name = item.name;
    SampleRng local(seed ^ fnv1a(item.name));
    for (long s = 0; s < samples; ++s) {
      AVec<Rational> p = local.invertible(tag);
      AVec<Rational> q = local.invertible(tag);
      AVec<Rational> r = local.invertible(tag);
      ++c.samples;
      if (!item.check(p, q, r)) {
        c.pass = false;
        c.counterexample = show(p) + " " + show(q) + " " + show(r);
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

bool adq_companion_check(const LoopOps<Rational>& ops, const AVec<Rational>& q,
                         const AVec<Rational>& x, const AVec<Rational>& y) {
  AVec<Rational> qi = inverse(q);
  AVec<Rational> q3 = ops.mul(ops.mul(q, q), q);
  auto adq = [&](const AVec<Rational>& p) { return ops.mul(ops.mul(q, p), qi); };
  AVec<Rational> lhs = ops.mul(adq(ops.mul(x, y)), q3);
  AVec<Rational> rhs = ops.mul(adq(x), ops.mul(adq(y), q3));
  for (int i = 0; i < lhs.dim(); ++i)
    if (lhs.c[i] != rhs.c[i]) return false;
  return true;
}

}  // namespace loopforge
