#ifndef L2B_BIALG_HPP
#define L2B_BIALG_HPP

#include "l2b/graded.hpp"
#include "l2b/report.hpp"
#include "l2b/types.hpp"

namespace l2b {

// Dual grading: (A*)_0 = (A_{-1})*, (A*)_{-1} = (A_0)*, d* = d^T. An
// algebra on the dual therefore has n0 = A.n1 and n1 = A.n0.

// form(i,j) = omega(e_i, f_j); omega(f_j, e_i) = -form(i,j) and pairs of
// equal degree vanish. Laws "invariance-1" (a,b) and "invariance-2"
// (u,v,w) over the collapsed basis [e, f].
Report invariant_form_check(const StrictPreLie2Algebra& a, const Mat& form);
// Adds the law "nondegenerate" and the part "invariant".
Report quadratic_check(const StrictPreLie2Algebra& a, const Mat& form);

// The standard form on A + A*, rows [A0, (A1)*], columns [A1, (A0)*].
Mat standard_form(std::size_t n0, std::size_t n1);

struct ManinCandidate {
  StrictPreLie2Algebra algebra;  // degree 0 = [A0, (A1)*], degree -1 = [A1, (A0)*]
  Mat form;
};
// Throws ShapeError when astar is not on the dual grading of a.
ManinCandidate manin_standard_assemble(const StrictPreLie2Algebra& a,
                                       const StrictPreLie2Algebra& astar);
// Part "algebra" gates pass; laws "isotropic-A", "isotropic-A*". The detail
// "invariance" is informational.
Report manin_triple_check(const StrictPreLie2Algebra& a, const StrictPreLie2Algebra& astar);

// r : A -> End(A') on ap.cx, rp : A' -> End(A) on a.cx. Laws "mp-1" ..
// "mp-14", and representation validity as "rep:<law>" and "rep':<law>".
Report matched_pair_prelie2_check(const StrictPreLie2Algebra& a, const StrictPreLie2Algebra& ap,
                                  const PreLieRep2& r, const PreLieRep2& rp);
// Basis of the sum: degree 0 = [A0, A'0], degree -1 = [A1, A'1]. Throws
// CheckFailed when checked and the pair is not matched.
StrictPreLie2Algebra matched_pair_prelie2_assemble(const StrictPreLie2Algebra& a,
                                                   const StrictPreLie2Algebra& ap,
                                                   const PreLieRep2& r, const PreLieRep2& rp,
                                                   bool checked = true);

// Laws "closed-i" (x) and "closed-ii" (a) for the two linear conditions,
// "leibniz-iii" (x,y) and "leibniz-iv" (x,a) for the two cocycle
// conditions of the action L (x) 1 + 1 (x) ad.
Report cocycle_check(const StrictPreLie2Algebra& a, const Cobracket& cb);
// Throws InvalidInput unless the two linear conditions hold.
StrictPreLie2Algebra dual_from_cobracket(const StrictPreLie2Algebra& a, const Cobracket& cb);
Cobracket cobracket_from_dual(const StrictPreLie2Algebra& a, const StrictPreLie2Algebra& astar);
// Parts "A", "A*", "alpha", "beta": both algebras valid and both induced
// cobrackets cocycles.
Report bialgebra_check(const StrictPreLie2Algebra& a, const StrictPreLie2Algebra& astar);

// Parts "para-kahler", "lie2-matched-pair", "prelie2-matched-pair" and
// "bialgebra"; flags carry the four verdicts and "agree".
Report equivalences_check(const StrictPreLie2Algebra& a, const StrictPreLie2Algebra& astar);

// R = r - (d (x) 1 + 1 (x) d) tau.
RElement r_minus_dtau(const StrictPreLie2Algebra& a, const RElement& r, const Tau& tau);
RElement sigma(const RElement& r);
// The degree -1 differential of tensor_complex(cx, cx) applied to r, as an
// n0 x n0 matrix: d r10 - r01 d^T, or d r10 + r01 d^T when flipped.
Mat dtensor(const TwoTermComplex& cx, const RElement& r, bool flip = false);
// R as an N x N matrix over the collapsed basis [e, f].
Mat embed(const RElement& r);

// alpha0(x) = (L0(x) (x) 1 + 1 (x) ad0(x)) R, alpha1(a) likewise, with
// degree -1 operators killing degree -1 slots.
Cobracket coboundary_cobracket(const StrictPreLie2Algebra& a, const RElement& r, const Tau& tau);

// r13.r12 - r23.r21 + [r23,r12] - [r13,r21] - [r13,r23] by the shared-slot
// rule. Throws ShapeError unless r is N x N.
CubeElement double_bracket(const PreLieAlgebra& b, const Mat& r);
// -R12.R13 + R12.R23 + [R13,R23].
CubeElement s_form_double_bracket(const PreLieAlgebra& b, const Mat& r);

// Parts "a" (R = sigma(R)), "b" (s-form), "c" (d-tensor of r). Flags
// "double-bracket-zero", "s-form-zero", "forms-agree". flip selects the
// flipped sign convention of tensor_complex for part "c".
Report cybe_check(const StrictPreLie2Algebra& a, const RElement& r, const Tau& tau,
                  bool flip = false);
// Parts "a" (u,v), "b" (x), "c".
Report coboundary_bialgebra_check(const StrictPreLie2Algebra& a, const RElement& r,
                                  const Tau& tau, bool flip = false);

OperatorFromR r_to_operator(const StrictPreLie2Algebra& a, const RElement& r);
// Flags "cybe" and "o-operator"; pass iff they agree. Throws NotSymmetric.
Report cybe_oop_equivalence(const StrictPreLie2Algebra& a, const RElement& r);

struct CybeSolution {
  StrictPreLie2Algebra algebra;
  RElement R;
};
// The image T(V) carries T0u.T0v = T0(rho0(T0u)v), T0u.T1m = T1(rho0(T0u)m),
// T1m.T0u = T1(rho1(T1m)u); the O-operator identity makes this independent
// of the chosen preimages, so T need not be injective. The result lives on
// T(V) semidirect V* with degree 0 = [T(V)0, V1*], degree -1 = [T(V)1, V0*].
// Throws CheckFailed when t is not an O-operator, NotChainMap as
// o_operator_check does.
CybeSolution solution_from_o_operator(const StrictLie2Algebra& g, const Rep2& rep,
                                      const ChainMapPair& t);
// A semidirect A* through (L0*, L1*) with zero mu; degree 0 = [A0, A1*],
// degree -1 = [A1, A0*].
CybeSolution canonical_solution(const StrictPreLie2Algebra& a);

}  // namespace l2b

#endif
