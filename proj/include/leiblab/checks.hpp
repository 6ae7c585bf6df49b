#pragma once

#include <string>
#include <vector>

namespace leiblab {

/// `noted` marks a reported discrepancy that is logged but not treated as a failure.
enum class Status { pass, fail, skipped, noted };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    case Status::noted: return "noted";
  }
  return "?";
}

/// One line of an audit: a named claim, its verdict and a short explanation.
struct Check {
  std::string id;
  std::string claim;
  Status status;
  std::string detail;
};

inline Check verdict(std::string id, std::string claim, bool hypotheses, bool holds, std::string detail = {}) {
  Status s = !hypotheses ? Status::skipped : holds ? Status::pass : Status::fail;
  return Check{std::move(id), std::move(claim), s, std::move(detail)};
}

inline bool all_ok(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (c.status == Status::fail) return false;
  return true;
}

}  // namespace leiblab
