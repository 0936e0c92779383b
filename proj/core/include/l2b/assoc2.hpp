#ifndef L2B_ASSOC2_HPP
#define L2B_ASSOC2_HPP

#include "l2b/graded.hpp"
#include "l2b/report.hpp"
#include "l2b/types.hpp"

namespace l2b {

// Laws "a1" (x,a), "a2" (a,x), "a3" (a,b), "b1" (x0,x1,x2), "b2" (x0,x1,a),
// "b3" (x0,a,x1), "b4" (a,x1,x2).
Report verify_assoc2(const StrictAssoc2Algebra& a);
// verify_assoc2 plus "comm-00" (x,y) and "comm-01" (x,a).
Report verify_commutative(const StrictAssoc2Algebra& a);

// [x,y] = xy - yx, [x,a] = xa - ax.
StrictLie2Algebra commutator_lie2(const StrictAssoc2Algebra& a);

// Laws "rb-i" (x,y), "rb-ii" (x,a), "rb-iii" (a,x). Throws NotChainMap.
Report rb_weight_check(const StrictAssoc2Algebra& a, const OperatorPair& r,
                       const Rational& lambda);
// x.y = R0(x)y - yR0(x), x.a = R0(x)a - aR0(x), a.x = R1(a)x - xR1(a); the
// weight-1 version also subtracts the original product. Throw CheckFailed
// unless rb_weight_check passes at weight 0 and 1 respectively.
StrictPreLie2Algebra prelie_from_rb0(const StrictAssoc2Algebra& a, const OperatorPair& r);
StrictPreLie2Algebra prelie_from_rb1(const StrictAssoc2Algebra& a, const OperatorPair& r);

// Laws "der-i" (x,y), "der-ii" (x,a). Throws NotChainMap.
Report derivation_check(const StrictAssoc2Algebra& a, const OperatorPair& dd);
// x.y = xD0(y) + cxy, x.a = xD1(a) + cxa, a.x = aD0(x) + cax. Throws
// NotCommutative when a is not commutative and associative, NotChainMap
// when D is not a chain map. The Leibniz rule is not enforced; without it
// the output is generally not pre-Lie.
StrictPreLie2Algebra prelie_from_derivation(const StrictAssoc2Algebra& a, const OperatorPair& dd,
                                            const Rational& c);

}  // namespace l2b

#endif
