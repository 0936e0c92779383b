#include "l2b/types.hpp"

#include <array>

#include "l2b/errors.hpp"

namespace l2b {

namespace {

void expect_dims(const Tensor3& t, std::array<std::size_t, 3> want, const char* name) {
  if (t.dims() != want) throw ShapeError(std::string("tensor ") + name + " has wrong shape");
}

}  // namespace

StrictLie2Algebra::StrictLie2Algebra(TwoTermComplex c, Tensor3 l00, Tensor3 l01)
    : cx(std::move(c)), L00(std::move(l00)), L01(std::move(l01)) {
  expect_dims(L00, {cx.n0, cx.n0, cx.n0}, "L00");
  expect_dims(L01, {cx.n0, cx.n1, cx.n1}, "L01");
}

StrictLie2Algebra StrictLie2Algebra::abelian(const TwoTermComplex& c) {
  return {c, Tensor3(c.n0, c.n0, c.n0), Tensor3(c.n0, c.n1, c.n1)};
}

Rep2 Rep2::zero(std::size_t n0, std::size_t n1, const TwoTermComplex& V) {
  Rep2 r;
  r.V = V;
  r.A.assign(n0, Mat(V.n0, V.n0));
  r.B.assign(n0, Mat(V.n1, V.n1));
  r.C.assign(n1, Mat(V.n1, V.n0));
  return r;
}

Mat Rep2::A_of(const Vec& x) const {
  Mat m(V.n0, V.n0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) m += x[i] * A.at(i);
  return m;
}

Mat Rep2::B_of(const Vec& x) const {
  Mat m(V.n1, V.n1);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) m += x[i] * B.at(i);
  return m;
}

Mat Rep2::C_of(const Vec& h) const {
  Mat m(V.n1, V.n0);
  for (std::size_t j = 0; j < h.size(); ++j)
    if (h[j] != 0) m += h[j] * C.at(j);
  return m;
}

StrictPreLie2Algebra::StrictPreLie2Algebra(TwoTermComplex c, Tensor3 m00, Tensor3 m01,
                                           Tensor3 m10)
    : cx(std::move(c)), M00(std::move(m00)), M01(std::move(m01)), M10(std::move(m10)) {
  expect_dims(M00, {cx.n0, cx.n0, cx.n0}, "M00");
  expect_dims(M01, {cx.n0, cx.n1, cx.n1}, "M01");
  expect_dims(M10, {cx.n1, cx.n0, cx.n1}, "M10");
}

StrictPreLie2Algebra StrictPreLie2Algebra::abelian(const TwoTermComplex& c) {
  return {c, Tensor3(c.n0, c.n0, c.n0), Tensor3(c.n0, c.n1, c.n1), Tensor3(c.n1, c.n0, c.n1)};
}

PreLieAlgebra::PreLieAlgebra(Tensor3 m) : n(m.d1()), M(std::move(m)) {
  expect_dims(M, {n, n, n}, "M");
}

StrictAssoc2Algebra::StrictAssoc2Algebra(TwoTermComplex c, Tensor3 a00, Tensor3 a01,
                                         Tensor3 a10)
    : cx(std::move(c)), A00(std::move(a00)), A01(std::move(a01)), A10(std::move(a10)) {
  expect_dims(A00, {cx.n0, cx.n0, cx.n0}, "A00");
  expect_dims(A01, {cx.n0, cx.n1, cx.n1}, "A01");
  expect_dims(A10, {cx.n1, cx.n0, cx.n1}, "A10");
}

}  // namespace l2b
