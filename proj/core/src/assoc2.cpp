#include "l2b/assoc2.hpp"

#include "l2b/errors.hpp"

namespace l2b {

namespace {

struct Products {
  const StrictAssoc2Algebra& a;
  Vec xy(const Vec& x, const Vec& y) const { return a.A00.apply(x, y); }
  Vec xa(const Vec& x, const Vec& b) const { return a.A01.apply(x, b); }
  Vec ax(const Vec& b, const Vec& x) const { return a.A10.apply(b, x); }
};

void require_chain(const StrictAssoc2Algebra& a, const OperatorPair& p, const char* who) {
  if (!is_chain_map(a.cx, a.cx, {p.P0, p.P1}))
    throw NotChainMap(std::string(who) + ": operator pair is not a chain map");
}

}  // namespace

Report verify_assoc2(const StrictAssoc2Algebra& a) {
  const std::size_t n0 = a.n0(), n1 = a.n1();
  const Mat& d = a.cx.d;
  Products m{a};
  auto e = [&](std::size_t i) { return unit(n0, i); };
  auto f = [&](std::size_t j) { return unit(n1, j); };
  Report r;
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t b = 0; b < n1; ++b)
      r.check("a1", {x, b}, d * m.xa(e(x), f(b)) - m.xy(e(x), d.col(b)));
  for (std::size_t b = 0; b < n1; ++b)
    for (std::size_t x = 0; x < n0; ++x)
      r.check("a2", {b, x}, d * m.ax(f(b), e(x)) - m.xy(d.col(b), e(x)));
  for (std::size_t p = 0; p < n1; ++p)
    for (std::size_t q = 0; q < n1; ++q)
      r.check("a3", {p, q}, m.xa(d.col(p), f(q)) - m.ax(f(p), d.col(q)));
  for (std::size_t x0 = 0; x0 < n0; ++x0)
    for (std::size_t x1 = 0; x1 < n0; ++x1)
      for (std::size_t x2 = 0; x2 < n0; ++x2)
        r.check("b1", {x0, x1, x2},
                m.xy(e(x0), m.xy(e(x1), e(x2))) - m.xy(m.xy(e(x0), e(x1)), e(x2)));
  for (std::size_t x0 = 0; x0 < n0; ++x0)
    for (std::size_t x1 = 0; x1 < n0; ++x1)
      for (std::size_t b = 0; b < n1; ++b)
        r.check("b2", {x0, x1, b},
                m.xa(e(x0), m.xa(e(x1), f(b))) - m.xa(m.xy(e(x0), e(x1)), f(b)));
  for (std::size_t x0 = 0; x0 < n0; ++x0)
    for (std::size_t b = 0; b < n1; ++b)
      for (std::size_t x1 = 0; x1 < n0; ++x1)
        r.check("b3", {x0, b, x1},
                m.xa(e(x0), m.ax(f(b), e(x1))) - m.ax(m.xa(e(x0), f(b)), e(x1)));
  for (std::size_t b = 0; b < n1; ++b)
    for (std::size_t x1 = 0; x1 < n0; ++x1)
      for (std::size_t x2 = 0; x2 < n0; ++x2)
        r.check("b4", {b, x1, x2},
                m.ax(f(b), m.xy(e(x1), e(x2))) - m.ax(m.ax(f(b), e(x1)), e(x2)));
  return r;
}

Report verify_commutative(const StrictAssoc2Algebra& a) {
  Report r = verify_assoc2(a);
  const std::size_t n0 = a.n0(), n1 = a.n1();
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t y = 0; y < n0; ++y)
      r.check("comm-00", {x, y}, a.A00.fiber(x, y) - a.A00.fiber(y, x));
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t b = 0; b < n1; ++b)
      r.check("comm-01", {x, b}, a.A01.fiber(x, b) - a.A10.fiber(b, x));
  return r;
}

StrictLie2Algebra commutator_lie2(const StrictAssoc2Algebra& a) {
  const std::size_t n0 = a.n0(), n1 = a.n1();
  Tensor3 L00(n0, n0, n0), L01(n0, n1, n1);
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j)
      for (std::size_t k = 0; k < n0; ++k) L00(i, j, k) = a.A00(i, j, k) - a.A00(j, i, k);
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n1; ++k) L01(i, j, k) = a.A01(i, j, k) - a.A10(j, i, k);
  return StrictLie2Algebra(a.cx, L00, L01);
}

Report rb_weight_check(const StrictAssoc2Algebra& a, const OperatorPair& R,
                       const Rational& lambda) {
  require_chain(a, R, "rb_weight_check");
  const std::size_t n0 = a.n0(), n1 = a.n1();
  Products m{a};
  Report r;
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j) {
      Vec x = unit(n0, i), y = unit(n0, j);
      Vec Rx = R.P0 * x, Ry = R.P0 * y;
      r.check("rb-i", {i, j},
              R.P0 * (m.xy(Rx, y) + m.xy(x, Ry) - lambda * m.xy(x, y)) - m.xy(Rx, Ry));
    }
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      Vec x = unit(n0, i), b = unit(n1, j);
      Vec Rx = R.P0 * x, Rb = R.P1 * b;
      r.check("rb-ii", {i, j},
              R.P1 * (m.xa(Rx, b) + m.xa(x, Rb) - lambda * m.xa(x, b)) - m.xa(Rx, Rb));
    }
  for (std::size_t j = 0; j < n1; ++j)
    for (std::size_t i = 0; i < n0; ++i) {
      Vec b = unit(n1, j), x = unit(n0, i);
      Vec Rx = R.P0 * x, Rb = R.P1 * b;
      r.check("rb-iii", {j, i},
              R.P1 * (m.ax(Rb, x) + m.ax(b, Rx) - lambda * m.ax(b, x)) - m.ax(Rb, Rx));
    }
  return r;
}

namespace {

// weight 0 or 1; the weight-1 product subtracts the original one.
StrictPreLie2Algebra rb_product(const StrictAssoc2Algebra& a, const OperatorPair& R, int weight) {
  const std::size_t n0 = a.n0(), n1 = a.n1();
  Products m{a};
  const Rational w(weight);
  Tensor3 M00(n0, n0, n0), M01(n0, n1, n1), M10(n1, n0, n1);
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j) {
      Vec x = unit(n0, i), y = unit(n0, j), Rx = R.P0 * x;
      Vec v = m.xy(Rx, y) - m.xy(y, Rx) - w * m.xy(x, y);
      for (std::size_t k = 0; k < n0; ++k) M00(i, j, k) = v[k];
    }
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      Vec x = unit(n0, i), b = unit(n1, j), Rx = R.P0 * x;
      Vec v = m.xa(Rx, b) - m.ax(b, Rx) - w * m.xa(x, b);
      for (std::size_t k = 0; k < n1; ++k) M01(i, j, k) = v[k];
    }
  for (std::size_t j = 0; j < n1; ++j)
    for (std::size_t i = 0; i < n0; ++i) {
      Vec b = unit(n1, j), x = unit(n0, i), Rb = R.P1 * b;
      Vec v = m.ax(Rb, x) - m.xa(x, Rb) - w * m.ax(b, x);
      for (std::size_t k = 0; k < n1; ++k) M10(j, i, k) = v[k];
    }
  return StrictPreLie2Algebra(a.cx, M00, M01, M10);
}

}  // namespace

StrictPreLie2Algebra prelie_from_rb0(const StrictAssoc2Algebra& a, const OperatorPair& R) {
  if (!rb_weight_check(a, R, Rational(0)).pass())
    throw CheckFailed("prelie_from_rb0: not a Rota-Baxter operator of weight 0");
  return rb_product(a, R, 0);
}

StrictPreLie2Algebra prelie_from_rb1(const StrictAssoc2Algebra& a, const OperatorPair& R) {
  if (!rb_weight_check(a, R, Rational(1)).pass())
    throw CheckFailed("prelie_from_rb1: not a Rota-Baxter operator of weight 1");
  return rb_product(a, R, 1);
}

Report derivation_check(const StrictAssoc2Algebra& a, const OperatorPair& D) {
  require_chain(a, D, "derivation_check");
  const std::size_t n0 = a.n0(), n1 = a.n1();
  Products m{a};
  Report r;
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j) {
      Vec x = unit(n0, i), y = unit(n0, j);
      r.check("der-i", {i, j},
              m.xy(D.P0 * x, y) + m.xy(x, D.P0 * y) - D.P0 * m.xy(x, y));
    }
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      Vec x = unit(n0, i), b = unit(n1, j);
      r.check("der-ii", {i, j},
              m.xa(D.P0 * x, b) + m.xa(x, D.P1 * b) - D.P1 * m.xa(x, b));
    }
  return r;
}

StrictPreLie2Algebra prelie_from_derivation(const StrictAssoc2Algebra& a, const OperatorPair& D,
                                            const Rational& c) {
  if (!verify_commutative(a).pass())
    throw NotCommutative("prelie_from_derivation: not a commutative associative 2-algebra");
  require_chain(a, D, "prelie_from_derivation");
  const std::size_t n0 = a.n0(), n1 = a.n1();
  Products m{a};
  Tensor3 M00(n0, n0, n0), M01(n0, n1, n1), M10(n1, n0, n1);
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j) {
      Vec x = unit(n0, i), y = unit(n0, j);
      Vec v = m.xy(x, D.P0 * y) + c * m.xy(x, y);
      for (std::size_t k = 0; k < n0; ++k) M00(i, j, k) = v[k];
    }
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      Vec x = unit(n0, i), b = unit(n1, j);
      Vec v = m.xa(x, D.P1 * b) + c * m.xa(x, b);
      for (std::size_t k = 0; k < n1; ++k) M01(i, j, k) = v[k];
    }
  for (std::size_t j = 0; j < n1; ++j)
    for (std::size_t i = 0; i < n0; ++i) {
      Vec b = unit(n1, j), x = unit(n0, i);
      Vec v = m.ax(b, D.P0 * x) + c * m.ax(b, x);
      for (std::size_t k = 0; k < n1; ++k) M10(j, i, k) = v[k];
    }
  return StrictPreLie2Algebra(a.cx, M00, M01, M10);
}

}  // namespace l2b
