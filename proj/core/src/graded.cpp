#include "l2b/graded.hpp"

#include "l2b/errors.hpp"

namespace l2b {

TwoTermComplex::TwoTermComplex(std::size_t n0_, std::size_t n1_, Mat d_)
    : n0(n0_), n1(n1_), d(std::move(d_)) {
  if (d.rows() != n0 || d.cols() != n1) throw ShapeError("complex: d must be n0 x n1");
}

TwoTermComplex dual_complex(const TwoTermComplex& c) {
  return TwoTermComplex(c.n1, c.n0, c.d.transpose());
}

ThreeTermComplex tensor_complex(const TwoTermComplex& c, const TwoTermComplex& e, bool flip) {
  ThreeTermComplex t;
  t.m2 = c.n1 * e.n1;
  t.m1 = c.n0 * e.n1 + c.n1 * e.n0;
  t.m0 = c.n0 * e.n0;
  t.d2 = Mat(t.m1, t.m2);
  t.d1 = Mat(t.m0, t.m1);
  const Rational one_d = flip ? -1 : 1;
  const std::size_t off = c.n0 * e.n1;
  // a (x) b with |a| = -1: da (x) b + a (x) db.
  for (std::size_t a = 0; a < c.n1; ++a)
    for (std::size_t b = 0; b < e.n1; ++b) {
      std::size_t src = a * e.n1 + b;
      for (std::size_t k = 0; k < c.n0; ++k) t.d2(k * e.n1 + b, src) += c.d(k, a);
      for (std::size_t k = 0; k < e.n0; ++k) t.d2(off + a * e.n0 + k, src) += one_d * e.d(k, b);
    }
  // x (x) a -> -x (x) da ; b (x) y -> db (x) y.
  for (std::size_t x = 0; x < c.n0; ++x)
    for (std::size_t a = 0; a < e.n1; ++a)
      for (std::size_t k = 0; k < e.n0; ++k) t.d1(x * e.n0 + k, x * e.n1 + a) -= one_d * e.d(k, a);
  for (std::size_t b = 0; b < c.n1; ++b)
    for (std::size_t y = 0; y < e.n0; ++y)
      for (std::size_t k = 0; k < c.n0; ++k) t.d1(k * e.n0 + y, off + b * e.n0 + y) += c.d(k, b);
  return t;
}

Report check_chain_map(const TwoTermComplex& c, const TwoTermComplex& cp, const ChainMapPair& f) {
  if (f.f0.rows() != cp.n0 || f.f0.cols() != c.n0 || f.f1.rows() != cp.n1 ||
      f.f1.cols() != c.n1)
    throw ShapeError("chain map shapes do not conform");
  Report r;
  r.check("chain", {}, f.f0 * c.d - cp.d * f.f1);
  return r;
}

bool is_chain_map(const TwoTermComplex& c, const TwoTermComplex& cp, const ChainMapPair& f) {
  return check_chain_map(c, cp, f).pass();
}

}  // namespace l2b
