#ifndef L2B_RANDOM_HPP
#define L2B_RANDOM_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "l2b/bialg.hpp"
#include "l2b/graded.hpp"
#include "l2b/types.hpp"

namespace l2b {

// Draws come from the raw mt19937_64 stream so that a seed gives the same
// instances on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::uint64_t next() { return g_(); }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(g_() % n); }
  long range(long lo, long hi) { return lo + static_cast<long>(below(hi - lo + 1)); }
  bool coin() { return (g_() & 1u) != 0; }

 private:
  std::mt19937_64 g_;
};

Mat random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi);
Mat random_invertible(Rng& rng, std::size_t n);
TwoTermComplex random_complex(Rng& rng, std::size_t n0, std::size_t n1);
// Two invertible matrices; any such pair is a chain isomorphism onto the
// transported complex.
ChainMapPair random_chain_iso(Rng& rng, std::size_t n0, std::size_t n1);

// Every pre-Lie (or associative) product on K^dim, dim <= 2, with structure
// constants in {-1, 0, 1}. Computed once and cached.
const std::vector<Tensor3>& small_prelie_products(std::size_t dim);
const std::vector<Tensor3>& small_assoc_products(std::size_t dim, bool commutative);

// A1 = A0 = P, d = lambda id, all three products copied from m.
StrictPreLie2Algebra cone(const Tensor3& m, const Rational& lambda);
// P in degree 0, nothing in degree -1.
StrictPreLie2Algebra concentrated(const Tensor3& m);
StrictPreLie2Algebra direct_sum(const StrictPreLie2Algebra& a, const StrictPreLie2Algebra& b);
// u.v -> g(g^-1 u . g^-1 v), d -> g0 d g1^-1.
StrictPreLie2Algebra transport(const StrictPreLie2Algebra& a, const ChainMapPair& g);

StrictAssoc2Algebra assoc_cone(const Tensor3& m, const Rational& lambda);
StrictAssoc2Algebra assoc_direct_sum(const StrictAssoc2Algebra& a, const StrictAssoc2Algebra& b);
StrictAssoc2Algebra assoc_transport(const StrictAssoc2Algebra& a, const ChainMapPair& g);

// Valid strict pre-Lie 2-algebra of the given dimensions (each at most 3),
// assembled from cones, concentrated pieces and an abelian remainder, then
// transported half the time.
StrictPreLie2Algebra random_prelie2(Rng& rng, std::size_t n0, std::size_t n1);
StrictAssoc2Algebra random_assoc2(Rng& rng, std::size_t n0, std::size_t n1, bool commutative);

// Both rho and mu conjugated by the chain isomorphism p of V.
PreLieRep2 transport_rep(const PreLieRep2& r, const ChainMapPair& p);
Rep2 transport_rep(const Rep2& r, const ChainMapPair& p);
Rep2 rep_direct_sum(const Rep2& a, const Rep2& b);
// Zero, regular, coregular or regular plus zero, transported half the time.
PreLieRep2 random_prelie_rep(Rng& rng, const StrictPreLie2Algebra& a);

// A1 = A0 = P, d = id, P drawn from the dimension-dim products.
StrictPreLie2Algebra random_cone(Rng& rng, std::size_t dim);

// An O-operator T : V -> g with respect to rep: a multiple of the identity
// on the left multiplication of a random algebra, zero on a random
// representation, or a multiple of the projection onto one summand of a
// direct sum; the representation is then transported half the time, which
// replaces T by T p.
struct OOperatorInstance {
  StrictLie2Algebra g;
  Rep2 rep;
  ChainMapPair t;
};
OOperatorInstance random_o_operator(Rng& rng, std::size_t n0, std::size_t n1);

// Rota-Baxter operator of weight lambda on a random associative 2-algebra.
// Built blockwise (enumerated operators on the small pieces, any chain map
// on the abelian remainder) and transported with the algebra.
struct RbInstance {
  StrictAssoc2Algebra algebra;
  OperatorPair R;
};
RbInstance random_rb_operator(Rng& rng, std::size_t n0, std::size_t n1, const Rational& lambda,
                              bool commutative);
// Random chain map D with D(xy) = D(x)y + xD(y) on both product pieces.
OperatorPair random_derivation(Rng& rng, const StrictAssoc2Algebra& a);

// A coboundary bialgebra: r = R + d(tau) with R from solution_from_o_operator
// of a random O-operator, and astar dual to the induced cobracket.
struct BialgebraInstance {
  StrictPreLie2Algebra a;
  StrictPreLie2Algebra astar;
  RElement r;
  Tau tau;
};
BialgebraInstance random_coboundary_bialgebra(Rng& rng, std::size_t n0, std::size_t n1);

// Basis of the solutions of a homogeneous linear system given as a linear
// residual function of nvars unknowns.
std::vector<Vec> linear_solutions(std::size_t nvars, const std::function<Vec(const Vec&)>& residual);
// Integer combination of the basis with coefficients in [lo, hi].
Vec random_combination(Rng& rng, const std::vector<Vec>& basis, std::size_t nvars, long lo,
                       long hi);
// Random chain map c -> cp (f0 : cp.n0 x c.n0, f1 : cp.n1 x c.n1).
ChainMapPair random_chain_map(Rng& rng, const TwoTermComplex& c, const TwoTermComplex& cp);

}  // namespace l2b

#endif
