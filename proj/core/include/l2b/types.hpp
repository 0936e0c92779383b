#ifndef L2B_TYPES_HPP
#define L2B_TYPES_HPP

#include <cstddef>
#include <vector>

#include "l2b/exact.hpp"
#include "l2b/graded.hpp"

namespace l2b {

// Bracket data of a strict Lie 2-algebra. L00(i,j,:) = [e_i, e_j],
// L01(i,j,:) = [e_i, f_j]; [f_j, e_i] = -[e_i, f_j] is never stored.
struct StrictLie2Algebra {
  TwoTermComplex cx;
  Tensor3 L00;
  Tensor3 L01;

  StrictLie2Algebra() = default;
  StrictLie2Algebra(TwoTermComplex c, Tensor3 l00, Tensor3 l01);
  static StrictLie2Algebra abelian(const TwoTermComplex& c);

  std::size_t n0() const { return cx.n0; }
  std::size_t n1() const { return cx.n1; }
  Vec br00(const Vec& x, const Vec& y) const { return L00.apply(x, y); }
  Vec br01(const Vec& x, const Vec& h) const { return L01.apply(x, h); }
  friend bool operator==(const StrictLie2Algebra&, const StrictLie2Algebra&) = default;
};

// Strict representation on V = (V1 -d-> V0). For each degree-0 basis
// element i: A[i] acts on V0 (m0 x m0), B[i] on V1 (m1 x m1). For each
// degree -1 basis element j: C[j] : V0 -> V1 (m1 x m0).
struct Rep2 {
  TwoTermComplex V;
  std::vector<Mat> A;
  std::vector<Mat> B;
  std::vector<Mat> C;

  static Rep2 zero(std::size_t n0, std::size_t n1, const TwoTermComplex& V);
  std::size_t m0() const { return V.n0; }
  std::size_t m1() const { return V.n1; }
  // Actions of a general element (linear combination of generators).
  Mat A_of(const Vec& x) const;
  Mat B_of(const Vec& x) const;
  Mat C_of(const Vec& h) const;
  friend bool operator==(const Rep2&, const Rep2&) = default;
};

// Products M00(i,j,:) = e_i.e_j, M01(i,j,:) = e_i.f_j, M10(i,j,:) = f_i.e_j.
// There is no product of two degree -1 elements.
struct StrictPreLie2Algebra {
  TwoTermComplex cx;
  Tensor3 M00;
  Tensor3 M01;
  Tensor3 M10;

  StrictPreLie2Algebra() = default;
  StrictPreLie2Algebra(TwoTermComplex c, Tensor3 m00, Tensor3 m01, Tensor3 m10);
  static StrictPreLie2Algebra abelian(const TwoTermComplex& c);

  std::size_t n0() const { return cx.n0; }
  std::size_t n1() const { return cx.n1; }
  Vec mul00(const Vec& x, const Vec& y) const { return M00.apply(x, y); }
  Vec mul01(const Vec& x, const Vec& a) const { return M01.apply(x, a); }
  Vec mul10(const Vec& a, const Vec& x) const { return M10.apply(a, x); }
  friend bool operator==(const StrictPreLie2Algebra&, const StrictPreLie2Algebra&) = default;
};

// (rho, mu) on a common complex; mu uses the same block layout as Rep2.
struct PreLieRep2 {
  Rep2 rho;
  Rep2 mu;
  friend bool operator==(const PreLieRep2&, const PreLieRep2&) = default;
};

struct PreLieAlgebra {
  std::size_t n = 0;
  Tensor3 M;
  PreLieAlgebra() = default;
  explicit PreLieAlgebra(Tensor3 m);
  Vec mul(const Vec& x, const Vec& y) const { return M.apply(x, y); }
  friend bool operator==(const PreLieAlgebra&, const PreLieAlgebra&) = default;
};

// Same layout as StrictPreLie2Algebra with associative products.
struct StrictAssoc2Algebra {
  TwoTermComplex cx;
  Tensor3 A00;
  Tensor3 A01;
  Tensor3 A10;

  StrictAssoc2Algebra() = default;
  StrictAssoc2Algebra(TwoTermComplex c, Tensor3 a00, Tensor3 a01, Tensor3 a10);
  std::size_t n0() const { return cx.n0; }
  std::size_t n1() const { return cx.n1; }
  friend bool operator==(const StrictAssoc2Algebra&, const StrictAssoc2Algebra&) = default;
};

struct OperatorPair {
  Mat P0;
  Mat P1;
  friend bool operator==(const OperatorPair&, const OperatorPair&) = default;
};

// r01(i,j) is the coefficient of e_i (x) f_j, r10(i,j) of f_i (x) e_j.
struct RElement {
  Mat r01;
  Mat r10;
  static RElement zero(std::size_t n0, std::size_t n1) {
    return {Mat(n0, n1), Mat(n1, n0)};
  }
  friend bool operator==(const RElement&, const RElement&) = default;
};

// t(i,j) is the coefficient of f_i (x) f_j.
struct Tau {
  Mat t;
  friend bool operator==(const Tau&, const Tau&) = default;
};

struct MixedTensor {
  Mat block01;  // n0 x n1, e (x) f
  Mat block10;  // n1 x n0, f (x) e
  friend bool operator==(const MixedTensor&, const MixedTensor&) = default;
};

// alpha0[x] in A0(x)A1 + A1(x)A0 ; alpha1[a] in A1(x)A1 (n1 x n1).
struct Cobracket {
  std::vector<MixedTensor> alpha0;
  std::vector<Mat> alpha1;
  friend bool operator==(const Cobracket&, const Cobracket&) = default;
};

// Coefficients over the basis cube of the collapsed space of side N.
struct CubeElement {
  std::size_t N = 0;
  std::vector<Rational> a;
  explicit CubeElement(std::size_t n = 0) : N(n), a(n * n * n, Rational(0)) {}
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return a[(i * N + j) * N + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return a[(i * N + j) * N + k];
  }
  bool is_zero() const { return l2b::is_zero(a); }
  friend bool operator==(const CubeElement&, const CubeElement&) = default;
};

// R0 : (A1)* -> A0 as an n0 x n1 matrix, R1 : (A0)* -> A1 as n1 x n0.
struct OperatorFromR {
  Mat R0;
  Mat R1;
};

}  // namespace l2b

#endif
