#ifndef L2B_GRADED_HPP
#define L2B_GRADED_HPP

#include <cstddef>

#include "l2b/exact.hpp"
#include "l2b/report.hpp"

namespace l2b {

// Grade convention used everywhere: internal grade 0 is degree 0 and
// internal grade 1 is degree -1. The differential lowers the internal
// grade, d : V_1 -> V_0, stored as an n0 x n1 matrix whose column j is d(f_j).
struct TwoTermComplex {
  std::size_t n0 = 0;
  std::size_t n1 = 0;
  Mat d;

  TwoTermComplex() : d(0, 0) {}
  TwoTermComplex(std::size_t n0_, std::size_t n1_, Mat d_);
  TwoTermComplex(std::size_t n0_, std::size_t n1_) : TwoTermComplex(n0_, n1_, Mat(n0_, n1_)) {}
  std::size_t total() const { return n0 + n1; }
  friend bool operator==(const TwoTermComplex&, const TwoTermComplex&) = default;
};

struct GradedElement {
  Vec v0;
  Vec v1;
};

struct ChainMapPair {
  Mat f0;
  Mat f1;
  friend bool operator==(const ChainMapPair&, const ChainMapPair&) = default;
};

// m2 -> m1 -> m0 with d2 : (m1 x m2) and d1 : (m0 x m1); d1 * d2 = 0.
struct ThreeTermComplex {
  std::size_t m2 = 0, m1 = 0, m0 = 0;
  Mat d2;
  Mat d1;
};

// (V*)_0 = (V_1)*, (V*)_1 = (V_0)*, differential d^T.
TwoTermComplex dual_complex(const TwoTermComplex& c);

// Basis layout of C (x) D:
//   piece 2 (degree -2): C1 (x) D1, index i*D.n1 + j
//   piece 1 (degree -1): C0 (x) D1 at i*D.n1 + j, then C1 (x) D0 at
//                        C.n0*D.n1 + i*D.n0 + j
//   piece 0 (degree 0):  C0 (x) D0, index i*D.n0 + j
// Differential d(v (x) w) = dv (x) w + (-1)^{|v|+1} v (x) dw, so x (x) a maps
// to -x (x) da and b (x) y to db (x) y. flip negates every 1 (x) d term.
ThreeTermComplex tensor_complex(const TwoTermComplex& c, const TwoTermComplex& d,
                                bool flip = false);

// Pass iff f0 * d = d' * f1. Law "chain" residual is the matrix difference.
Report check_chain_map(const TwoTermComplex& c, const TwoTermComplex& cp,
                       const ChainMapPair& f);
bool is_chain_map(const TwoTermComplex& c, const TwoTermComplex& cp, const ChainMapPair& f);

}  // namespace l2b

#endif
