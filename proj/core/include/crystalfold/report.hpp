#pragma once

#include <string>
#include <vector>

namespace crystalfold {

/// Accumulates verification failures; empty means the check passed.
struct Report {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void fail(std::string msg) { violations.push_back(std::move(msg)); }
  void merge(const Report& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }
  std::string str() const {
    if (ok()) return "ok";
    std::string s;
    for (const auto& v : violations) {
      s += v;
      s += '\n';
    }
    return s;
  }
};

}  // namespace crystalfold
