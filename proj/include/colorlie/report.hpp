#ifndef COLORLIE_REPORT_HPP
#define COLORLIE_REPORT_HPP

#include <json.hpp>

#include "colorlie/homology.hpp"
#include "colorlie/json_io.hpp"

namespace colorlie {

/// Result of one named check. Inconclusive marks weight truncations that
/// were too small to decide; it never fails a run.
struct CheckResult {
  enum class Status { Pass, Fail, Inconclusive };
  std::string name;
  Status status = Status::Pass;
  std::string detail;
};

struct Report {
  std::string command;
  std::vector<CheckResult> checks;
  nlohmann::json payload;  // command-specific data, merged into the JSON view

  void add(const std::string& name, bool pass, const std::string& detail = "");
  void add_inconclusive(const std::string& name, const std::string& detail = "");
  bool failed() const;
  int exit_code() const { return failed() ? 1 : 0; }
  nlohmann::json to_json() const;
  std::string text() const;
};

/// Structural checks: bicharacter axioms, color axioms, PBW confluence,
/// module validity.
Report run_validate(const AlgebraFile& f);

/// The full per-algebra verification suite: structure, Hilbert series of
/// gr(U), homological checks where the preconditions allow them, twist
/// comparisons when a cocycle is present.
Report run_report(const AlgebraFile& f, unsigned long seed);

/// Serializations shared by the CLI.
nlohmann::json ext_result_json(const ExtResult& r);
nlohmann::json trace_json(const ResolutionTrace& t);

}  // namespace colorlie

#endif
