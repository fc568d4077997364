#ifndef COLORLIE_VALIDATION_HPP
#define COLORLIE_VALIDATION_HPP

#include <string>
#include <vector>

namespace colorlie {

/// Outcome of an axiom/consistency check. Violations are collected, not
/// thrown; an empty item list means the object passed.
struct ValidationReport {
  struct Item {
    std::string check;
    std::string detail;
  };
  std::vector<Item> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string check, std::string detail) {
    violations.push_back({std::move(check), std::move(detail)});
  }
  std::string summary() const {
    if (ok()) return "ok";
    std::string s;
    for (const auto& v : violations) {
      if (!s.empty()) s += "; ";
      s += v.check + ": " + v.detail;
    }
    return s;
  }
};

}  // namespace colorlie

#endif
