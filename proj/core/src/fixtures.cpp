#include "l2b/fixtures.hpp"

namespace l2b {

StrictPreLie2Algebra fix_a() { return StrictPreLie2Algebra::abelian(TwoTermComplex(1, 1)); }

StrictPreLie2Algebra fix_b() {
  return StrictPreLie2Algebra(TwoTermComplex(1, 1, Mat::identity(1)),
                              Tensor3::from_entries(1, 1, 1, {{0, 0, 0, 1}}),
                              Tensor3::from_entries(1, 1, 1, {{0, 0, 0, 1}}),
                              Tensor3::from_entries(1, 1, 1, {{0, 0, 0, 1}}));
}

StrictPreLie2Algebra fix_c() {
  return StrictPreLie2Algebra(TwoTermComplex(2, 2, Mat::identity(2)),
                              Tensor3::from_entries(2, 2, 2, {{0, 1, 1, 1}}),
                              Tensor3::from_entries(2, 2, 2, {{0, 1, 1, 1}}),
                              Tensor3::from_entries(2, 2, 2, {{0, 1, 1, 1}}));
}

StrictAssoc2Algebra fix_b_assoc() {
  StrictPreLie2Algebra b = fix_b();
  return StrictAssoc2Algebra(b.cx, b.M00, b.M01, b.M10);
}

std::vector<std::string> fixture_names() { return {"FIX-A", "FIX-B", "FIX-C"}; }

std::optional<StrictPreLie2Algebra> fixture_by_name(const std::string& name) {
  if (name == "FIX-A") return fix_a();
  if (name == "FIX-B") return fix_b();
  if (name == "FIX-C") return fix_c();
  return std::nullopt;
}

}  // namespace l2b
