#ifndef L2B_REPORT_HPP
#define L2B_REPORT_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "l2b/exact.hpp"

namespace l2b {

// One nonzero residual of a named identity at a basis tuple. Scalar
// residuals are stored as length-1 vectors; matrix residuals row-major.
struct Violation {
  std::string law;
  std::vector<std::size_t> indices;
  Vec residual;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Report {
  std::vector<Violation> violations;
  // Sub-reports that gate pass().
  std::vector<std::pair<std::string, Report>> parts;
  // Informational sub-reports; never affect pass().
  std::vector<std::pair<std::string, Report>> details;
  std::map<std::string, bool> flags;
  std::vector<std::string> notes;

  bool pass() const;
  // Records the violation only when the residual is nonzero.
  void check(const std::string& law, std::vector<std::size_t> idx, const Vec& residual);
  void check(const std::string& law, std::vector<std::size_t> idx, const Mat& residual);
  void fail(const std::string& law, std::vector<std::size_t> idx, Vec residual);
  void add_part(const std::string& name, Report r);
  // Violations of this report and all gating parts, parts flattened in order.
  std::vector<Violation> all_violations() const;
  // Laws with at least one violation in this report or its gating parts.
  std::vector<std::string> failed_laws() const;
};

}  // namespace l2b

#endif
