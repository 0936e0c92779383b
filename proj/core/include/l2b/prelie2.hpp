#ifndef L2B_PRELIE2_HPP
#define L2B_PRELIE2_HPP

#include <cstddef>
#include <vector>

#include "l2b/graded.hpp"
#include "l2b/report.hpp"
#include "l2b/types.hpp"

namespace l2b {

// Laws "a1" (x,a), "a2" (a,x), "a3" (a,b), "b1" (x0,x1,x2), "b2" (x0,x1,a),
// "b3" (a,x1,x2).
Report verify_prelie2(const StrictPreLie2Algebra& a);

// Commutator bracket: [x,y] = x.y - y.x, [x,a] = x.a - a.x, with no
// validity check.
StrictLie2Algebra commutator_lie2(const StrictPreLie2Algebra& a);
// The same bracket. Throws InvalidInput when a is not a strict pre-Lie 2-algebra.
StrictLie2Algebra subadjacent(const StrictPreLie2Algebra& a);

// Left multiplication (L0, L1) as a Rep2 on the complex of a itself.
Rep2 left_rep(const StrictPreLie2Algebra& a);

// Laws "rho:<law>" (verify_rep2 against the subadjacent algebra),
// "mu-end-chain" (i), "mu-chain-v0" (j), "mu-chain-v1" (j), "rep1-v0",
// "rep1-v1" (x,y), "rep2" (x,a), "rep3" (a,x).
Report verify_prelie_rep2(const StrictPreLie2Algebra& a, const PreLieRep2& r);

// rho - mu. Throws InvalidInput when r is not a representation.
Rep2 rep_to_lie_rep(const StrictPreLie2Algebra& a, const PreLieRep2& r);
// (rho* - mu*, -mu*) on the dual complex, X* = -X^T blockwise.
PreLieRep2 dual_prelie_rep(const StrictPreLie2Algebra& a, const PreLieRep2& r);

// (L, R) on a and (ad*, -R*) on the dual of a.
PreLieRep2 regular_rep(const StrictPreLie2Algebra& a);
PreLieRep2 coregular_rep(const StrictPreLie2Algebra& a);

// Basis of the sum: degree 0 = [A0, V0], degree -1 = [A1, V1].
// Throws InvalidInput when r is not a representation.
StrictPreLie2Algebra semidirect_prelie2(const StrictPreLie2Algebra& a, const PreLieRep2& r);

// Pre-Lie algebra on [A0, A1] with (x+a)*(y+b) = x.y + x.b + a.y.
PreLieAlgebra collapse(const StrictPreLie2Algebra& a);

// Law "left-symmetry" (x,y,z): (x,y,z) - (y,x,z) with (x,y,z) = (xy)z - x(yz).
Report verify_prelie(const PreLieAlgebra& p);
// rho[i], mu[i] act on V for the basis element i. Laws "rho-bracket" (x,y)
// and "rep" (x,y).
Report prelie_rep_check(const PreLieAlgebra& p, const std::vector<Mat>& rho,
                        const std::vector<Mat>& mu);

// An element of Hom(wedge^{k-1} A (x) A, V), stored as the full array over
// ordered k-tuples laid out [x1..xk][v]. Only cochains antisymmetric in the
// first k-1 slots form a complex.
struct PreLieCochain {
  std::size_t n = 0, m = 0, arity = 0;
  Vec data;

  PreLieCochain() = default;
  PreLieCochain(std::size_t n, std::size_t m, std::size_t arity);
  std::size_t offset(const std::vector<std::size_t>& xs) const;
  bool is_zero() const { return l2b::is_zero(data); }
  friend bool operator==(const PreLieCochain&, const PreLieCochain&) = default;
};
PreLieCochain prelie_delta(const PreLieAlgebra& p, const std::vector<Mat>& rho,
                           const std::vector<Mat>& mu, const PreLieCochain& phi);

// u.v = rho0(T0 u) v, u.m = rho0(T0 u) m, m.u = rho1(T1 m) u on r.V.
// Throws CheckFailed when t is not an O-operator, NotChainMap as
// o_operator_check does.
StrictPreLie2Algebra prelie_from_o_operator(const StrictLie2Algebra& g, const Rep2& r,
                                            const ChainMapPair& t);

}  // namespace l2b

#endif
