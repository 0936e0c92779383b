#ifndef L2B_LIE2_HPP
#define L2B_LIE2_HPP

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "l2b/graded.hpp"
#include "l2b/report.hpp"
#include "l2b/types.hpp"

namespace l2b {

// Laws, in report order: "i-a" (x,h), "i-b" (h,k), "jacobi" (x,y,z),
// "mixed-jacobi" (x,y,h), "antisymmetry" (i,j).
Report verify_lie2(const StrictLie2Algebra& g);

// Laws "chain", "hom-00" (x,y), "hom-01" (x,h).
Report check_lie2_homomorphism(const StrictLie2Algebra& g, const StrictLie2Algebra& gp,
                               const ChainMapPair& f);

// Laws "end-chain" (i), "chain-v0" (j), "chain-v1" (j), "bracket-00-v0",
// "bracket-00-v1" (i,j), "bracket-01" (i,j).
Report verify_rep2(const StrictLie2Algebra& g, const Rep2& r);

Rep2 adjoint_rep(const StrictLie2Algebra& g);
// Rep on the dual complex: A' = -B^T, B' = -A^T, C' = -C^T.
Rep2 dual_rep(const StrictLie2Algebra& g, const Rep2& r);
Rep2 coadjoint_rep(const StrictLie2Algebra& g);

// Action data on tensor_complex(V, W). rho0[i][p] acts on piece p
// (0: degree 0, 1: degree -1, 2: degree -2); rho1[j][p] maps piece p to
// piece p+1. rho1 carries the sign (-1)^{|v|+1} on the 1 (x) rho1 term,
// which the Koszul differential forces for the chain condition.
struct TensorRep {
  ThreeTermComplex V;
  std::vector<std::array<Mat, 3>> rho0;
  std::vector<std::array<Mat, 2>> rho1;
};
TensorRep tensor_rep(const StrictLie2Algebra& g, const Rep2& rv, const Rep2& rw);
Report verify_tensor_rep(const StrictLie2Algebra& g, const TensorRep& t);

// g (+) V with degree-0 part g0 (+) V0 and degree -1 part g1 (+) V1.
// Throws CheckFailed when r is not a representation.
StrictLie2Algebra semidirect_lie2(const StrictLie2Algebra& g, const Rep2& r);

// mu : g -> End(g'), mup : g' -> End(g). Laws "mp-1" .. "mp-6" plus the
// validity of both actions as "rep-mu:<law>" and "rep-mup:<law>".
Report matched_pair_lie2_check(const StrictLie2Algebra& g, const StrictLie2Algebra& gp,
                               const Rep2& mu, const Rep2& mup);
// Basis of the sum: degree 0 = [g0, g'0], degree -1 = [g1, g'1].
StrictLie2Algebra matched_pair_lie2_assemble(const StrictLie2Algebra& g,
                                             const StrictLie2Algebra& gp, const Rep2& mu,
                                             const Rep2& mup, bool checked = true);

// T0 : V0 -> g0 (n0 x m0), T1 : V1 -> g1 (n1 x m1). Throws NotChainMap.
// Laws "oop-i" (u,v) and "oop-ii" (m,v).
Report o_operator_check(const StrictLie2Algebra& g, const Rep2& r, const ChainMapPair& t);

// Component (p, q, s): maps (wedge^p g0) x (sym^q g1) -> V_s, s internal
// grade (0 or 1). Stored as full arrays laid out [x1..xp][h1..hq][v].
// Total degree p + 2q - s + 1 is equal across components.
struct Cochain {
  std::size_t n0 = 0, n1 = 0, m0 = 0, m1 = 0;
  std::map<std::array<int, 3>, Vec> comp;

  std::size_t size(int p, int q, int s) const;
  static int degree(int p, int q, int s) { return p + 2 * q - s + 1; }
  bool is_zero() const;
  Vec& at(int p, int q, int s);
};
Cochain ce_differential(const StrictLie2Algebra& g, const Rep2& r, const Cochain& f);

struct SymplecticForm {
  Mat omega1;  // n0 x n0
  Mat omega2;  // n0 x n1, omega2(e_i, f_j)
};
// Omega over [e, f] with Omega(e,e) = w1, Omega(e,f) = w2, Omega(f,e) = -w2^T.
Mat total_form(const SymplecticForm& w);
// Laws "skew", "closed1" (x,y,z), "closed2" (x,y,h), "closed3a" (x,h),
// "closed3b" (h,k), "nondegenerate". Flags "closed" and "nondegenerate".
Report symplectic_check(const StrictLie2Algebra& g, const SymplecticForm& w);
// Solves Omega(u*v, w) = (-1)^{|v||w|} Omega([u,w], v) for every basis w,
// one product at a time. Throws CheckFailed if w is not symplectic on g,
// Underdetermined or Inconsistent naming the grade pair otherwise.
StrictPreLie2Algebra prelie_from_symplectic(const StrictLie2Algebra& g, const SymplecticForm& w);

struct GradedSubspace {
  std::vector<Vec> span0;
  std::vector<Vec> span1;
};
// Laws "closed-00", "closed-01", "closed-d", "isotropic", "coisotropic".
// Throws InvalidInput when a span is dependent.
Report lagrangian_check(const StrictLie2Algebra& g, const SymplecticForm& w,
                        const GradedSubspace& h);
// Adds "direct-0", "direct-1" and the flag "special" (omega1 == 0).
Report parakahler_check(const StrictLie2Algebra& g, const SymplecticForm& w,
                        const GradedSubspace& hp, const GradedSubspace& hm);

}  // namespace l2b

#endif
