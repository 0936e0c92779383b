#ifndef L2B_FIXTURES_HPP
#define L2B_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "l2b/types.hpp"

namespace l2b {

// 1|1, d = 0, every product zero.
StrictPreLie2Algebra fix_a();
// 1|1, d = id, e.e = e, e.f = f, f.e = f.
StrictPreLie2Algebra fix_b();
// 2|2, d = id, e1.e2 = e2, e1.f2 = f2, f1.e2 = f2.
StrictPreLie2Algebra fix_c();
// The FIX-B tensors read as a commutative associative 2-algebra.
StrictAssoc2Algebra fix_b_assoc();

std::vector<std::string> fixture_names();
std::optional<StrictPreLie2Algebra> fixture_by_name(const std::string& name);

}  // namespace l2b

#endif
