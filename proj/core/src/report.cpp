#include "l2b/report.hpp"

#include <algorithm>

namespace l2b {

bool Report::pass() const {
  if (!violations.empty()) return false;
  return std::all_of(parts.begin(), parts.end(),
                     [](const auto& p) { return p.second.pass(); });
}

void Report::check(const std::string& law, std::vector<std::size_t> idx, const Vec& residual) {
  if (!is_zero(residual)) violations.push_back({law, std::move(idx), residual});
}

void Report::check(const std::string& law, std::vector<std::size_t> idx, const Mat& residual) {
  if (!residual.is_zero()) violations.push_back({law, std::move(idx), residual.data()});
}

void Report::fail(const std::string& law, std::vector<std::size_t> idx, Vec residual) {
  violations.push_back({law, std::move(idx), std::move(residual)});
}

void Report::add_part(const std::string& name, Report r) {
  parts.emplace_back(name, std::move(r));
}

std::vector<Violation> Report::all_violations() const {
  std::vector<Violation> out = violations;
  for (const auto& [name, r] : parts) {
    auto sub = r.all_violations();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::vector<std::string> Report::failed_laws() const {
  std::vector<std::string> laws;
  for (const auto& v : all_violations())
    if (std::find(laws.begin(), laws.end(), v.law) == laws.end()) laws.push_back(v.law);
  return laws;
}

}  // namespace l2b
